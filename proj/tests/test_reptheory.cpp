#include <doctest.h>

#include <algorithm>

#include "bianchi/reptheory.hpp"

using namespace bianchi;

namespace {

const Generators& G = standard_generators();

FiniteMatrixGroup grp(std::vector<ProjectiveMatrix> gens) { return generate_subgroup(gens); }

// Brute-force multiplicity oracle: decompose f against psi_j by averaging over
// every group element, with no reliance on conjugacy classes.
std::vector<Int> brute_multiplicities(const CharacterTable& t,
                                      const std::function<Cyc12(const ProjectiveMatrix&)>& f) {
    const auto& els = t.group->elements;
    Int order(els.size());
    std::vector<Int> out;
    for (std::size_t j = 0; j < t.n_irreducibles(); ++j) {
        Cyc12 sum;
        for (const auto& x : els) {
            // evaluate psi_j elementwise rather than through class lookup
            Cyc12 val = t.chars[j][t.class_of(x)];
            sum = sum + f(x) * val.conj();
        }
        REQUIRE(sum.is_rational_integer());
        REQUIRE(sum.c[0] % order == 0);
        out.push_back(sum.c[0] / order);
    }
    return out;
}

}  // namespace

TEST_CASE("identify the named stabilizers") {
    CHECK(grp({G.a}).iso_type == IsoType::C3);
    CHECK(grp({G.b}).iso_type == IsoType::C2);
    CHECK(grp({G.b, G.d}).iso_type == IsoType::D2);
    CHECK(grp({G.a, G.d}).iso_type == IsoType::S3);
    CHECK(grp({G.b, G.c}).iso_type == IsoType::S3);
    CHECK(grp({G.a, G.c}).iso_type == IsoType::A4);
    CHECK(grp({}).iso_type == IsoType::C1);
}

TEST_CASE("identify rejects non-closed input") {
    CHECK_THROWS_AS(identify({ProjectiveMatrix::identity(), G.a}), DomainError);
}

TEST_CASE("census classification covers the unreachable types") {
    CHECK(classify_census(4, {1, 2, 4, 4}) == IsoType::C4);
    CHECK(classify_census(4, {1, 2, 2, 2}) == IsoType::D2);
    CHECK_THROWS_AS(classify_census(6, {1, 2, 3, 3, 6, 6}), DomainError);  // cyclic of order 6
    CHECK_THROWS_AS(classify_census(5, {1, 5, 5, 5, 5}), DomainError);
    CHECK_THROWS_AS(classify_census(8, {1, 2, 2, 2, 2, 2, 2, 2}), DomainError);
}

TEST_CASE("character table dimensions") {
    CHECK(character_table(IsoType::A4).n_irreducibles() == 4);
    CHECK(character_table(IsoType::S3).n_irreducibles() == 3);
    CHECK(character_table(IsoType::D2).n_irreducibles() == 4);
    CHECK(character_table(IsoType::C4).n_irreducibles() == 4);
    CHECK(character_table(IsoType::C1).n_irreducibles() == 1);

    // A4 has irreducibles of dimensions 1, 1, 1, 3
    CharacterTable a4 = character_table(IsoType::A4);
    std::vector<Int> dims;
    for (const auto& row : a4.chars) dims.push_back(row[0].c[0]);
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<Int>{1, 1, 1, 3});

    CharacterTable s3 = character_table(IsoType::S3);
    Int sq = 0;
    for (const auto& row : s3.chars) sq += row[0].c[0] * row[0].c[0];
    CHECK(sq == 6);
}

TEST_CASE("orthogonality of every concrete stabilizer table") {
    for (auto gens : {std::vector<ProjectiveMatrix>{}, {G.a}, {G.b}, {G.d}, {G.c}, {G.b, G.d},
                      {G.a, G.d}, {G.b, G.c}, {G.a, G.c}}) {
        CharacterTable t = character_table(grp(gens));
        Int order(t.group->order());
        for (std::size_t i = 0; i < t.n_irreducibles(); ++i)
            for (std::size_t j = 0; j < t.n_irreducibles(); ++j) {
                Cyc12 sum;
                for (const auto& x : t.group->elements) sum = sum + t.value(i, x) * t.value(j, x).conj();
                CHECK(sum == Cyc12(i == j ? order : Int(0)));
            }
    }
}

TEST_CASE("restriction from A4 to C3") {
    CharacterTable a4 = character_table(grp({G.a, G.c}));
    CharacterTable c3 = character_table(grp({G.a}));
    RepRingMap res = restriction_matrix(a4, c3);
    // the three linears hit the three distinct characters; the 3-dim restricts
    // to the regular character
    IntMatrix expect = IntMatrix::from_rows({{1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}});
    CHECK(res.matrix == expect);
}

TEST_CASE("restriction to self is the identity") {
    CharacterTable s3 = character_table(grp({G.a, G.d}));
    CHECK(restriction_matrix(s3, s3).matrix.is_identity());
    CHECK(induction_matrix(s3, s3).matrix.is_identity());
}

TEST_CASE("restriction from C2 to C1 is the dimension row") {
    CharacterTable c2 = character_table(grp({G.b}));
    CharacterTable c1 = character_table(grp({}));
    CHECK(restriction_matrix(c2, c1).matrix == IntMatrix::from_rows({{1, 1}}));
}

TEST_CASE("induction from C1 to S3 is the regular column") {
    CharacterTable s3 = character_table(grp({G.a, G.d}));
    CharacterTable c1 = character_table(grp({}));
    RepRingMap ind = induction_matrix(c1, s3);
    CHECK(ind.matrix == IntMatrix::from_rows({{1}, {1}, {2}}));
}

TEST_CASE("induction multiplies dimension by the index") {
    auto dim_of = [](const CharacterTable& t, const IntMatrix& column, std::size_t col) {
        Int d = 0;
        for (std::size_t i = 0; i < t.n_irreducibles(); ++i) d += column.at(i, col) * t.chars[i][0].c[0];
        return d;
    };
    for (auto [sub_gens, big_gens] : std::vector<std::pair<std::vector<ProjectiveMatrix>, std::vector<ProjectiveMatrix>>>{
             {{G.a}, {G.a, G.c}}, {{G.b}, {G.b, G.d}}, {{G.d}, {G.a, G.d}}, {{}, {G.b, G.c}}}) {
        FiniteMatrixGroup sub = grp(sub_gens), big = grp(big_gens);
        CharacterTable ts = character_table(sub), tb = character_table(big);
        RepRingMap ind = induction_matrix(ts, tb);
        Int index(big.order() / sub.order());
        for (std::size_t j = 0; j < ts.n_irreducibles(); ++j)
            CHECK(dim_of(tb, ind.matrix, j) == index * ts.chars[j][0].c[0]);
    }
}

TEST_CASE("Frobenius reciprocity as transposes, all stabilizer pairs") {
    std::vector<FiniteMatrixGroup> groups = {grp({}),         grp({G.a}),      grp({G.b}),
                                             grp({G.d}),      grp({G.c}),      grp({G.b, G.d}),
                                             grp({G.a, G.d}), grp({G.b, G.c}), grp({G.a, G.c})};
    int pairs = 0;
    for (const auto& big : groups)
        for (const auto& sub : groups) {
            if (!std::all_of(sub.elements.begin(), sub.elements.end(),
                             [&](const ProjectiveMatrix& x) { return big.contains(x); }))
                continue;
            CharacterTable tb = character_table(big), ts = character_table(sub);
            CHECK(induction_matrix(ts, tb).matrix == restriction_matrix(tb, ts).matrix.transpose());
            ++pairs;
        }
    CHECK(pairs >= 20);
}

TEST_CASE("restriction transitivity along C1 < C3 < A4") {
    CharacterTable a4 = character_table(grp({G.a, G.c}));
    CharacterTable c3 = character_table(grp({G.a}));
    CharacterTable c1 = character_table(grp({}));
    IntMatrix direct = restriction_matrix(a4, c1).matrix;
    IntMatrix via = restriction_matrix(c3, c1).matrix * restriction_matrix(a4, c3).matrix;
    CHECK(direct == via);
}

TEST_CASE("restriction_matrix rejects non-subgroups") {
    CharacterTable s3 = character_table(grp({G.a, G.d}));
    CharacterTable d2 = character_table(grp({G.b, G.d}));
    CHECK_THROWS_AS(restriction_matrix(s3, d2), DomainError);
}

TEST_CASE("multiplicities agree with the brute-force averaging oracle") {
    CharacterTable a4 = character_table(grp({G.a, G.c}));
    CharacterTable s3 = character_table(grp({G.a, G.d}));
    for (const CharacterTable* t : {&a4, &s3})
        for (std::size_t i = 0; i < t->n_irreducibles(); ++i) {
            auto f = [&](const ProjectiveMatrix& x) { return t->value(i, x); };
            CHECK(multiplicities(*t, f) == brute_multiplicities(*t, f));
        }
    // and against a genuinely reducible character: the square of the 2-dim
    auto f = [&](const ProjectiveMatrix& x) { return s3.value(2, x) * s3.value(2, x); };
    CHECK(multiplicities(s3, f) == brute_multiplicities(s3, f));
}

TEST_CASE("inner conjugation induces the identity map") {
    FiniteMatrixGroup d2 = grp({G.b, G.d});
    CharacterTable t = character_table(d2);
    for (const auto& g0 : d2.elements) {
        RepRingMap cm = conjugation_map(t, t, [&](const ProjectiveMatrix& x) { return conjugate(g0, x); });
        CHECK(cm.matrix.is_identity());
    }
}

TEST_CASE("outer conjugation of D2 is a permutation matrix") {
    FiniteMatrixGroup d2 = grp({G.b, G.d});
    ProjectiveMatrix gamma1 = ProjectiveMatrix::from_entries({1, 0}, {0, 0}, {1, 0}, {1, 0});
    std::vector<ProjectiveMatrix> conj_els, conj_gens;
    for (const auto& x : d2.elements) conj_els.push_back(conjugate(gamma1, x));
    for (const auto& x : d2.dist_gens) conj_gens.push_back(conjugate(gamma1, x));
    CharacterTable t = character_table(d2);
    CharacterTable t2 = character_table(identify(conj_els, conj_gens));
    RepRingMap cm = conjugation_map(t, t2, [&](const ProjectiveMatrix& x) { return conjugate(gamma1, x); });
    CHECK(cm.matrix.rows() == 4);
    // a permutation matrix: one 1 per row and column
    for (std::size_t i = 0; i < 4; ++i) {
        Int row_sum = 0, col_sum = 0;
        for (std::size_t j = 0; j < 4; ++j) {
            row_sum += cm.matrix.at(i, j);
            col_sum += cm.matrix.at(j, i);
            CHECK((cm.matrix.at(i, j) == 0 || cm.matrix.at(i, j) == 1));
        }
        CHECK(row_sum == 1);
        CHECK(col_sum == 1);
    }
}

TEST_CASE("conjugation_map rejects non-isomorphisms") {
    CharacterTable t = character_table(grp({G.b, G.d}));
    CHECK_THROWS_AS(conjugation_map(t, t, [&](const ProjectiveMatrix&) { return G.b; }), DomainError);
}
