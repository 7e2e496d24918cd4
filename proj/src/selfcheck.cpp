#include "bianchi/selfcheck.hpp"

#include <algorithm>

namespace bianchi {

const IntMatrix& reference_cohomology_d0() {
    static const IntMatrix m = IntMatrix::from_rows({
        {-1, 0, 0, -1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, -1, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, -1, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, -1, 0, -1, 1, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, -1, -1, 0, 0, 1, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 1, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 1, 1},
        {1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, -1, -1, 0},
        {0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
        {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1},
    });
    return m;
}

const IntMatrix& reference_restriction_f0() {
    static const IntMatrix m = IntMatrix::from_rows({
        {1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1},
    });
    return m;
}

const IntMatrix& reference_restriction_f1() {
    static const IntMatrix m = IntMatrix::from_rows({
        {1, 1, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 1, 1, 1},
    });
    return m;
}

const IntMatrix& reference_res_on_h0() {
    static const IntMatrix m = IntMatrix::from_rows({
        {1, 2, 0, 0, 0, 0},
        {0, 0, 1, 0, 0, 0},
        {0, 0, 1, 0, 0, 0},
        {0, 0, 1, 0, 0, 0},
        {0, 1, 1, 1, 0, 0},
        {1, 1, 2, -1, 1, -1},
        {0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1},
    });
    return m;
}

const IntMatrix& reference_cores_on_h0() {
    static const IntMatrix m = IntMatrix::from_rows({
        {1, 0, 0, 0, 0, 0, 0, 0},
        {1, 0, 0, 0, 0, 0, 0, 0},
        {0, 1, 1, 1, 0, 0, 0, 0},
        {0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 0, 0, 0, 1, 1, 0},
        {1, 1, 1, 1, 0, -1, 0, 1},
    });
    return m;
}

const IntMatrix& reference_hecke_on_h0() {
    static const IntMatrix m = IntMatrix::from_rows({
        {1, 2, 0, 0, 0, 0},
        {1, 2, 0, 0, 0, 0},
        {0, 0, 3, 0, 0, 0},
        {0, 1, 1, 1, 0, 0},
        {1, 1, 2, -1, 2, -1},
        {0, 1, 1, 1, -1, 2},
    });
    return m;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim, long max_abs) {
    std::uniform_int_distribution<std::size_t> dim(1, max_dim);
    std::uniform_int_distribution<long> entry(-max_abs, max_abs);
    IntMatrix m(dim(rng), dim(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = entry(rng);
    return m;
}

IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
    IntMatrix m = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    std::uniform_int_distribution<int> coef(0, 1);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j) continue;
        m.add_row(i, j, coef(rng) ? Int(1) : Int(-1));
    }
    return m;
}

ProjectiveMatrix random_word(std::mt19937_64& rng, int max_len) {
    const Generators& g = standard_generators();
    const ProjectiveMatrix gens[4] = {g.a, g.b, g.c, g.d};
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, 3);
    ProjectiveMatrix out = ProjectiveMatrix::identity();
    int n = len(rng);
    for (int i = 0; i < n; ++i) out = compose(out, gens[pick(rng)]);
    return out;
}

namespace {

void push(std::vector<CheckResult>& out, const std::string& name, bool ok, const std::string& detail = "") {
    out.push_back({name, ok, ok ? "" : detail});
}

bool orthogonality_holds(const CharacterTable& t) {
    // (1/|G|) sum over classes of size * chi_i * conj(chi_j) = delta_ij,
    // and sum of squared dimensions equals the group order
    Int order = 0;
    for (const Int& s : t.class_sizes) order += s;
    for (std::size_t i = 0; i < t.n_irreducibles(); ++i)
        for (std::size_t j = 0; j < t.n_irreducibles(); ++j) {
            Cyc12 sum;
            for (std::size_t c = 0; c < t.n_classes(); ++c) {
                Cyc12 term = t.chars[i][c] * t.chars[j][c].conj();
                Cyc12 sz(t.class_sizes[c]);
                sum = sum + sz * term;
            }
            Cyc12 expect = Cyc12(i == j ? order : Int(0));
            if (!(sum == expect)) return false;
        }
    Int sq = 0;
    for (const auto& row : t.chars) {
        if (!row[0].is_rational_integer()) return false;
        sq += row[0].c[0] * row[0].c[0];
    }
    return sq == order;
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed, std::size_t snf_trials, std::size_t basis_trials) {
    std::vector<CheckResult> out;
    std::mt19937_64 rng(seed);

    push(out, "presentation relators", verify_presentation());
    {
        // a mutated generator must break the presentation
        bool mutated_fails = evaluate_word("b*a*b*a") != ProjectiveMatrix::identity();
        push(out, "presentation mutation detection", mutated_fails);
    }

    for (IsoType t : {IsoType::C1, IsoType::C2, IsoType::C3, IsoType::C4, IsoType::D2, IsoType::S3, IsoType::A4})
        push(out, "orthogonality " + to_string(t), orthogonality_holds(character_table(t)));
    {
        const GCWModel& m = gamma1_model();
        bool ok = true;
        for (int dim = 0; dim < 3; ++dim)
            for (const auto& cell : m.cells[dim]) ok = ok && orthogonality_holds(character_table(cell.stabilizer));
        push(out, "orthogonality of stabilizer tables", ok);
    }

    {
        // Frobenius transpose on every subgroup pair among the base stabilizers
        const GCWModel& m = gamma1_model();
        std::vector<FiniteMatrixGroup> groups;
        for (int dim = 0; dim < 3; ++dim)
            for (const auto& cell : m.cells[dim]) groups.push_back(cell.stabilizer);
        bool ok = true;
        for (const auto& big : groups)
            for (const auto& sub : groups) {
                bool contained = std::all_of(sub.elements.begin(), sub.elements.end(),
                                             [&](const ProjectiveMatrix& x) { return big.contains(x); });
                if (!contained) continue;
                CharacterTable tb = character_table(big), ts = character_table(sub);
                RepRingMap res = restriction_matrix(tb, ts);
                RepRingMap ind = induction_matrix(ts, tb);
                ok = ok && ind.matrix == res.matrix.transpose();
            }
        push(out, "Frobenius transpose on stabilizer pairs", ok);
    }

    {
        bool ok = true;
        std::string detail;
        for (std::size_t trial = 0; trial < snf_trials && ok; ++trial) {
            IntMatrix a = random_matrix(rng);
            SmithDecomposition s = snf(a);
            if (!(s.U * a * s.V == s.D)) { ok = false; detail = "UAV != D"; }
            if (ok && !(s.U * s.Uinv).is_identity()) { ok = false; detail = "Uinv broken"; }
            if (ok && !(s.V * s.Vinv).is_identity()) { ok = false; detail = "Vinv broken"; }
            Int du = determinant(s.U), dv = determinant(s.V);
            if (ok && !((du == 1 || du == -1) && (dv == 1 || dv == -1))) { ok = false; detail = "not unimodular"; }
            for (std::size_t i = 0; ok && i + 1 < s.invariant_factors.size(); ++i)
                if (s.invariant_factors[i + 1] % s.invariant_factors[i] != 0) { ok = false; detail = "divisibility chain broken"; }
        }
        push(out, "SNF contract on random matrices", ok, detail);
    }

    {
        GaussianPrime p1 = classify_prime({1, 1});
        bool ok = true;
        try {
            (void)bredon_complex(gamma1_model(), Variance::Homology);
            (void)bredon_complex(gamma1_model(), Variance::Cohomology);
            GCWModel km = split_orbits(gamma1_model(), p1, coset_transversal(p1));
            (void)bredon_complex(km, Variance::Homology);
            (void)bredon_complex(km, Variance::Cohomology);
        } catch (const DomainError&) {
            ok = false;
        }
        push(out, "d.d = 0 for assembled complexes", ok);
    }

    {
        BredonComplex c = bredon_complex(gamma1_model(), Variance::Cohomology);
        push(out, "reference degree-0 coboundary", c.d_low == reference_cohomology_d0());
    }

    {
        GaussianPrime p1 = classify_prime({1, 1});
        HeckeData h = hecke_operator(p1);
        push(out, "reference Hecke matrix at level 1+i", h.on_H0 == reference_hecke_on_h0());
        push(out, "reference restriction ranks", snf(h.res[0]).rank == 10 && snf(h.res[1]).rank == 6);
        bool transposes = h.cores[0] == h.res[0].transpose() && h.cores[1] == h.res[1].transpose() &&
                          h.cores[2] == h.res[2].transpose();
        push(out, "corestriction transposes restriction", transposes);
        push(out, "conjugation blocks are the identity", h.adg[0].is_identity() && h.adg[1].is_identity() &&
                                                             h.adg[2].is_identity());
        push(out, "reference product consistency",
             reference_cores_on_h0() * reference_res_on_h0() == reference_hecke_on_h0());
    }

    {
        // free ranks and torsion are invariant under unimodular change of chain basis
        bool ok = true;
        BredonComplex c = bredon_complex(gamma1_model(), Variance::Homology);
        auto base_groups = c.groups();
        for (std::size_t trial = 0; trial < basis_trials && ok; ++trial) {
            IntMatrix u0 = random_unimodular(rng, c.ranks[0]);
            IntMatrix u1 = random_unimodular(rng, c.ranks[1]);
            IntMatrix u2 = random_unimodular(rng, c.ranks[2]);
            IntMatrix d1 = u0 * c.d_low * inverse_unimodular(u1);
            IntMatrix d2 = u1 * c.d_high * inverse_unimodular(u2);
            ok = ok && homology(IntMatrix(0, 0), d1) == base_groups[0];
            ok = ok && homology(d1, d2) == base_groups[1];
            IntMatrix none(c.ranks[2], 0);
            ok = ok && homology(d2, none) == base_groups[2];
        }
        push(out, "homology invariant under unimodular basis change", ok);
    }

    return out;
}

}  // namespace bianchi
