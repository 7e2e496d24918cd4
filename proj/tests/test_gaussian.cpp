#include <doctest.h>

#include "bianchi/gaussian.hpp"

using namespace bianchi;

TEST_CASE("norm") {
    CHECK(norm(GaussianInt{1, 1}) == 2);
    CHECK(norm(GaussianInt{0, 0}) == 0);
    CHECK(norm(GaussianInt{2, 1}) == 5);
    CHECK(norm(GaussianInt{-3, 4}) == 25);
}

TEST_CASE("norm is multiplicative") {
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b)
            for (long c = -4; c <= 4; ++c)
                for (long d = -4; d <= 4; ++d) {
                    GaussianInt z{a, b}, w{c, d};
                    CHECK(norm(z * w) == norm(z) * norm(w));
                }
}

TEST_CASE("classify_prime") {
    CHECK(classify_prime({1, 1}).splitting_class == SplittingClass::Ramified);
    CHECK(classify_prime({3, 0}).splitting_class == SplittingClass::Inert);
    CHECK(classify_prime({0, -7}).splitting_class == SplittingClass::Inert);
    CHECK(classify_prime({2, 1}).splitting_class == SplittingClass::Split);
    CHECK(classify_prime({-1, 4}).splitting_class == SplittingClass::Split);  // norm 17

    CHECK_THROWS_WITH_AS(classify_prime({5, 0}), doctest::Contains("witness"), DomainError);
    CHECK_THROWS_AS(classify_prime({1, 0}), DomainError);
    CHECK_THROWS_AS(classify_prime({0, 0}), DomainError);
    CHECK_THROWS_AS(classify_prime({4, 0}), DomainError);
    CHECK_THROWS_AS(classify_prime({3, 4}), DomainError);  // norm 25

    // the witness for 5 is a genuine factorization
    try {
        classify_prime({5, 0});
        CHECK(false);
    } catch (const DomainError& e) {
        CHECK(e.kind() == "NotPrime");
        CHECK(std::string(e.what()).find("2+i") != std::string::npos);
    }
}

TEST_CASE("classification is total and exclusive up to norm 1000") {
    int n_prime = 0;
    for (long a = -31; a <= 31; ++a)
        for (long b = -31; b <= 31; ++b) {
            GaussianInt z{a, b};
            if (norm(z) > 1000) continue;
            try {
                GaussianPrime p = classify_prime(z);
                ++n_prime;
                Int nz = norm(z);
                switch (p.splitting_class) {
                    case SplittingClass::Ramified: CHECK(nz == 2); break;
                    case SplittingClass::Split:
                        CHECK(nz % 4 == 1);
                        break;
                    case SplittingClass::Inert: {
                        Int q = a == 0 ? Int(b < 0 ? -b : b) : Int(a < 0 ? -a : a);
                        CHECK(nz == q * q);
                        CHECK(q % 4 == 3);
                        break;
                    }
                }
            } catch (const DomainError& e) {
                CHECK(e.kind() == "NotPrime");
            }
        }
    CHECK(n_prime > 100);
}

TEST_CASE("residues and reduce") {
    GaussianPrime p1 = classify_prime({1, 1});
    auto r1 = residues(p1);
    REQUIRE(r1.size() == 2);
    CHECK(r1[0] == GaussianInt{0, 0});
    CHECK(r1[1] == GaussianInt{1, 0});
    CHECK(reduce({0, 1}, p1) == GaussianInt{1, 0});  // i - 1 = -i(1+i)

    GaussianPrime p3 = classify_prime({3, 0});
    CHECK(residues(p3).size() == 9);
    GaussianPrime p5 = classify_prime({2, 1});
    CHECK(residues(p5).size() == 5);

    for (const auto& p : {p1, p3, p5}) {
        auto rs = residues(p);
        CHECK(rs[0].is_zero());
        for (const auto& r : rs) {
            CHECK(reduce(r, p) == r);
            CHECK(divides(p.value, r - reduce(r, p)));
        }
        // pairwise non-congruent
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = i + 1; j < rs.size(); ++j) CHECK_FALSE(divides(p.value, rs[i] - rs[j]));
    }
}

TEST_CASE("reduce is a ring homomorphism onto the residue system") {
    for (const GaussianInt& pv : {GaussianInt{1, 1}, {3, 0}, {2, 1}, {1, 2}, {3, 2}, {4, 1}}) {
        GaussianPrime p = classify_prime(pv);
        if (norm(p.value) > 25) continue;
        auto rs = residues(p);
        for (const auto& z : rs)
            for (const auto& w : rs) {
                CHECK(reduce(z * w, p) == reduce(reduce(z, p) * reduce(w, p), p));
                CHECK(reduce(z + w, p) == reduce(reduce(z, p) + reduce(w, p), p));
            }
        // reduce lands in the system and differs by a multiple of p
        for (long a = -6; a <= 6; ++a)
            for (long b = -6; b <= 6; ++b) {
                GaussianInt z{a, b};
                GaussianInt r = reduce(z, p);
                CHECK(std::find(rs.begin(), rs.end(), r) != rs.end());
                CHECK(divides(p.value, z - r));
            }
    }
}

TEST_CASE("string round trips") {
    CHECK(to_string(GaussianInt{1, 1}) == "1+i");
    CHECK(to_string(GaussianInt{0, -1}) == "-i");
    CHECK(to_string(GaussianInt{-2, 0}) == "-2");
    CHECK(to_string(GaussianInt{3, -4}) == "3-4i");
    CHECK(parse_gaussian("1+i") == GaussianInt{1, 1});
    CHECK(parse_gaussian(" 2 - 3i ") == GaussianInt{2, -3});
    CHECK(parse_gaussian("-i") == GaussianInt{0, -1});
    CHECK(parse_gaussian("7") == GaussianInt{7, 0});
    CHECK(parse_gaussian("i+4") == GaussianInt{4, 1});
    CHECK_THROWS_AS(parse_gaussian("1+2j"), DomainError);
    CHECK_THROWS_AS(parse_gaussian(""), DomainError);
    CHECK_THROWS_AS(parse_gaussian("1+i+3"), DomainError);
}
