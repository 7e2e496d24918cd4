#include <doctest.h>

#include <random>

#include "bianchi/intmatrix.hpp"
#include "bianchi/selfcheck.hpp"

using namespace bianchi;

namespace {

// Independent rank oracle: fraction-free Gaussian elimination (Bareiss).
std::size_t rank_fraction_free(IntMatrix m) {
    std::size_t rank = 0;
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
        if (piv == m.rows()) continue;
        if (piv != row) m.swap_rows(row, piv);
        for (std::size_t i = row + 1; i < m.rows(); ++i)
            for (std::size_t j = col + 1; j < m.cols(); ++j) {
                Int num = m.at(i, j) * m.at(row, col) - m.at(i, col) * m.at(row, j);
                REQUIRE(num % prev == 0);
                m.at(i, j) = num / prev;
            }
        for (std::size_t i = row + 1; i < m.rows(); ++i) m.at(i, col) = 0;
        prev = m.at(row, col);
        ++row;
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("snf on diag(2,3) gives diag(1,6)") {
    SmithDecomposition s = snf(IntMatrix::from_rows({{2, 0}, {0, 3}}));
    CHECK(s.D == IntMatrix::from_rows({{1, 0}, {0, 6}}));
    CHECK(s.invariant_factors == std::vector<Int>{1, 6});
}

TEST_CASE("snf of the zero matrix") {
    SmithDecomposition s = snf(IntMatrix(3, 2));
    CHECK(s.D.is_zero());
    CHECK(s.U.is_identity());
    CHECK(s.V.is_identity());
    CHECK(s.rank == 0);
}

TEST_CASE("snf of an all-ones row has rank 1") {
    IntMatrix row(1, 10);
    for (std::size_t j = 0; j < 10; ++j) row.at(0, j) = 1;
    CHECK(snf(row).rank == 1);
    CHECK(snf(row.transpose()).rank == 1);
}

TEST_CASE("snf contract on random matrices, rank cross-checked") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 500; ++trial) {
        IntMatrix a = random_matrix(rng);
        SmithDecomposition s = snf(a);
        CHECK(s.U * a * s.V == s.D);
        CHECK((s.U * s.Uinv).is_identity());
        CHECK((s.V * s.Vinv).is_identity());
        Int du = determinant(s.U), dv = determinant(s.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (std::size_t i = 0; i + 1 < s.invariant_factors.size(); ++i)
            CHECK(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        for (const Int& d : s.invariant_factors) CHECK(d > 0);
        CHECK(s.rank == rank_fraction_free(a));
    }
}

TEST_CASE("snf is deterministic") {
    std::mt19937_64 r1(99), r2(99);
    IntMatrix a = random_matrix(r1), b = random_matrix(r2);
    REQUIRE(a == b);
    SmithDecomposition s1 = snf(a), s2 = snf(b);
    CHECK(s1.U == s2.U);
    CHECK(s1.V == s2.V);
    CHECK(s1.D == s2.D);
}

TEST_CASE("homology of the zero complex is free of ambient rank") {
    for (std::size_t n = 0; n <= 10; ++n) {
        IntMatrix lower(0, n);
        IntMatrix upper(n, 0);
        FgAbGroup h = homology(lower, upper);
        CHECK(h.free_rank == n);
        CHECK(h.torsion.empty());
    }
}

TEST_CASE("homology detects torsion") {
    // Z --2--> Z: coker = Z/2
    IntMatrix lower(0, 1);
    IntMatrix two = IntMatrix::from_rows({{2}});
    FgAbGroup h = homology(lower, two);
    CHECK(h.free_rank == 0);
    CHECK(h.torsion == std::vector<Int>{2});
}

TEST_CASE("homology rejects non-complexes") {
    IntMatrix d1 = IntMatrix::from_rows({{1}});
    IntMatrix d2 = IntMatrix::from_rows({{1}});
    CHECK_THROWS_AS(homology(d1, d2), DomainError);
}

TEST_CASE("identity chain map induces the identity on homology") {
    // small complex: C2 = Z --(0)--> C1 = Z^2 --(0)--> C0 = Z^3
    TwoStepComplex c{{3, 2, 1}, IntMatrix(3, 2), IntMatrix(2, 1)};
    std::array<IntMatrix, 3> id{IntMatrix::identity(3), IntMatrix::identity(2), IntMatrix::identity(1)};
    for (int deg = 0; deg < 3; ++deg) CHECK(induced_on_homology(c, c, id, deg).is_identity());
}

TEST_CASE("induced_on_homology rejects non-chain-maps") {
    TwoStepComplex c{{1, 1, 1}, IntMatrix::from_rows({{2}}), IntMatrix(1, 1)};
    std::array<IntMatrix, 3> bad{IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{3}}),
                                 IntMatrix::identity(1)};
    CHECK_THROWS_AS(induced_on_homology(c, c, bad, 0), DomainError);
}

TEST_CASE("functoriality of induced maps on random small complexes") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> entry(-2, 2);
    int built = 0;
    while (built < 20) {
        // random two-step complex: pick d1 (n0 x n1) and solve nothing; build
        // d2 with columns in ker d1 via combinations of kernel vectors
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        std::size_t n0 = dim(rng), n1 = dim(rng), n2 = dim(rng);
        IntMatrix d1(n0, n1);
        for (std::size_t i = 0; i < n0; ++i)
            for (std::size_t j = 0; j < n1; ++j) d1.at(i, j) = entry(rng);
        SmithDecomposition s = snf(d1);
        std::size_t kr = n1 - s.rank;
        if (kr == 0) continue;
        IntMatrix d2(n1, n2);
        for (std::size_t j = 0; j < n2; ++j)
            for (std::size_t k = 0; k < kr; ++k) {
                Int coef = entry(rng);
                for (std::size_t i = 0; i < n1; ++i) d2.at(i, j) += coef * s.V.at(i, s.rank + k);
            }
        TwoStepComplex c{{n0, n1, n2}, d1, d2};
        // chain self-maps: multiplication by an integer commutes with everything
        std::array<IntMatrix, 3> phi{IntMatrix::identity(n0), IntMatrix::identity(n1), IntMatrix::identity(n2)};
        for (auto& m : phi)
            for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = 3;
        std::array<IntMatrix, 3> psi = phi;
        std::array<IntMatrix, 3> comp;
        for (int d = 0; d < 3; ++d) comp[d] = phi[d] * psi[d];
        for (int deg = 0; deg < 3; ++deg) {
            IntMatrix lhs = induced_on_homology(c, c, comp, deg);
            IntMatrix rhs = induced_on_homology(c, c, phi, deg) * induced_on_homology(c, c, psi, deg);
            CHECK(lhs == rhs);
        }
        ++built;
    }
}

TEST_CASE("char_poly and determinant") {
    IntMatrix m = IntMatrix::from_rows({{2, 1}, {0, 3}});
    CHECK(char_poly(m) == std::vector<Int>{1, -5, 6});
    CHECK(determinant(m) == 6);
    CHECK(trace(m) == 5);
    CHECK(determinant(IntMatrix::identity(4)) == 1);
    IntMatrix sing = IntMatrix::from_rows({{1, 2}, {2, 4}});
    CHECK(determinant(sing) == 0);
}

TEST_CASE("inverse_unimodular") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix u = random_unimodular(rng, 6);
        CHECK((u * inverse_unimodular(u)).is_identity());
    }
    CHECK_THROWS_AS(inverse_unimodular(IntMatrix::from_rows({{2}})), InternalError);
}

TEST_CASE("aligned text rendering") {
    IntMatrix m = IntMatrix::from_rows({{-1, 10}, {2, -3}});
    CHECK(m.str() == "-1 10\n 2 -3\n");
}
