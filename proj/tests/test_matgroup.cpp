#include <doctest.h>

#include <random>
#include <set>

#include "bianchi/matgroup.hpp"
#include "bianchi/selfcheck.hpp"

using namespace bianchi;

TEST_CASE("generators satisfy the defining relators") {
    CHECK(verify_presentation());
    const Generators& g = standard_generators();
    ProjectiveMatrix id = ProjectiveMatrix::identity();
    CHECK(compose(g.b, g.b) == id);
    CHECK(compose(g.a, inverse(g.a)) == id);
    ProjectiveMatrix ac = compose(g.a, g.c);
    CHECK(compose(ac, ac) == id);
}

TEST_CASE("mutated generator breaks the presentation") {
    const Generators& g = standard_generators();
    ProjectiveMatrix bprime = compose(g.b, g.a);
    CHECK(compose(bprime, bprime) != ProjectiveMatrix::identity());
}

TEST_CASE("empty relator list is vacuously true") { CHECK(verify_relators({})); }

TEST_CASE("word evaluation") {
    const Generators& g = standard_generators();
    CHECK(evaluate_word("") == ProjectiveMatrix::identity());
    CHECK(evaluate_word("a*c^2*d") == compose(compose(g.a, compose(g.c, g.c)), g.d));
    CHECK(evaluate_word("b d") == compose(g.b, g.d));
    CHECK_THROWS_AS(evaluate_word("a*x"), DomainError);
    CHECK_THROWS_AS(evaluate_word("a^"), DomainError);
}

TEST_CASE("canonicalization is idempotent on random words") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        ProjectiveMatrix m = random_word(rng);
        ProjectiveMatrix again = ProjectiveMatrix::from_entries(m.a, m.b, m.c, m.d);
        CHECK(again == m);
        // det preserved by compose and inverse
        CHECK(m.a * m.d - m.b * m.c == GaussianInt{1, 0});
        ProjectiveMatrix mi = inverse(m);
        CHECK(compose(m, mi) == ProjectiveMatrix::identity());
    }
}

TEST_CASE("congruence membership") {
    GaussianPrime p = classify_prime({1, 1});
    CHECK(in_congruence_subgroup(ProjectiveMatrix::identity(), p));
    ProjectiveMatrix gamma1 = ProjectiveMatrix::from_entries({1, 0}, {0, 0}, {1, 0}, {1, 0});
    CHECK_FALSE(in_congruence_subgroup(gamma1, p));
    ProjectiveMatrix low = ProjectiveMatrix::from_entries({1, 0}, {0, 0}, {1, 1}, {1, 0});
    CHECK(in_congruence_subgroup(low, p));
}

TEST_CASE("coset transversal sizes") {
    CHECK(coset_transversal(classify_prime({1, 1})).reps.size() == 3);
    CHECK(coset_transversal(classify_prime({3, 0})).reps.size() == 10);
    CHECK(coset_transversal(classify_prime({2, 1})).reps.size() == 6);
}

TEST_CASE("the level 1+i transversal is gamma_0, gamma_1, sigma") {
    CosetTransversal t = coset_transversal(classify_prime({1, 1}));
    REQUIRE(t.reps.size() == 3);
    CHECK(t.reps[0] == ProjectiveMatrix::identity());
    CHECK(t.reps[1] == ProjectiveMatrix::from_entries({1, 0}, {0, 0}, {1, 0}, {1, 0}));
    CHECK(t.reps[2] == ProjectiveMatrix::from_entries({0, 0}, {-1, 0}, {1, 0}, {0, 0}));
}

TEST_CASE("coset_reduce covers random words") {
    std::mt19937_64 rng(11);
    for (const GaussianInt& pv : {GaussianInt{1, 1}, {2, 1}}) {
        GaussianPrime p = classify_prime(pv);
        CosetTransversal t = coset_transversal(p);
        for (int trial = 0; trial < 250; ++trial) {
            ProjectiveMatrix m = random_word(rng);
            std::size_t j = coset_reduce(m, t);
            CHECK(in_congruence_subgroup(compose(m, inverse(t.reps[j])), p));
        }
        CHECK(coset_reduce(ProjectiveMatrix::identity(), t) == 0);
    }
}

TEST_CASE("membership is closed under the group operations") {
    std::mt19937_64 rng(13);
    GaussianPrime p = classify_prime({1, 1});
    CosetTransversal t = coset_transversal(p);
    std::vector<ProjectiveMatrix> members;
    for (int trial = 0; trial < 200; ++trial) {
        ProjectiveMatrix m = random_word(rng);
        std::size_t j = coset_reduce(m, t);
        members.push_back(compose(m, inverse(t.reps[j])));  // element of K
    }
    for (std::size_t i = 0; i + 1 < members.size(); i += 2) {
        CHECK(in_congruence_subgroup(compose(members[i], members[i + 1]), p));
        CHECK(in_congruence_subgroup(inverse(members[i]), p));
    }
}

TEST_CASE("k * sigma reduces to the sigma coset for random k in K") {
    std::mt19937_64 rng(17);
    GaussianPrime p = classify_prime({1, 1});
    CosetTransversal t = coset_transversal(p);
    ProjectiveMatrix sigma = t.reps[2];
    for (int trial = 0; trial < 100; ++trial) {
        ProjectiveMatrix m = random_word(rng);
        std::size_t j = coset_reduce(m, t);
        ProjectiveMatrix k = compose(m, inverse(t.reps[j]));  // element of K
        CHECK(coset_reduce(compose(k, sigma), t) == 2);
        CHECK(coset_reduce(compose(k, t.reps[1]), t) == 1);
    }
}

TEST_CASE("psl2 group orders") {
    CHECK(psl2_order_fq(2) == 6);
    CHECK(psl2_order_fq(3) == 12);
    CHECK(psl2_order_fq(9) == 360);
    CHECK(psl2_order_fq(5) == 60);
    CHECK_THROWS_AS(psl2_order_fq(6), DomainError);
    CHECK_THROWS_AS(psl2_order_fq(1), DomainError);
    CHECK_THROWS_AS(psl2_order_fq(12), DomainError);
}

TEST_CASE("double coset representatives") {
    auto reps1 = double_coset_left_reps(classify_prime({1, 1}));
    CHECK(reps1.size() == 3);
    auto reps3 = double_coset_left_reps(classify_prime({3, 0}));
    CHECK(reps3.size() == 10);
    auto reps5 = double_coset_left_reps(classify_prime({2, 1}));
    CHECK(reps5.size() == 6);
    CHECK(double_coset_left_reps_identity().size() == 1);
    // first representative is diag(p, 1) itself
    CHECK(reps1[0] == GLMatrix{{1, 1}, {0, 0}, {0, 0}, {1, 0}});
}
