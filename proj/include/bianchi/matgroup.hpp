#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "bianchi/gaussian.hpp"

namespace bianchi {

// Element of PSL2(Z[i]): a det-1 matrix [[a,b],[c,d]] with the sign fixed so
// that the first nonzero entry in order (a,b,c,d) has re > 0, or re = 0 and
// im > 0.  Canonical form makes elements hashable and set-storable.
struct ProjectiveMatrix {
    GaussianInt a, b, c, d;

    // Canonicalizes; throws NotUnimodular unless det = 1.
    static ProjectiveMatrix from_entries(GaussianInt a, GaussianInt b, GaussianInt c, GaussianInt d);
    static ProjectiveMatrix identity();

    bool operator==(const ProjectiveMatrix&) const = default;
    std::strong_ordering operator<=>(const ProjectiveMatrix& o) const {
        if (auto cmp = a <=> o.a; cmp != 0) return cmp;
        if (auto cmp = b <=> o.b; cmp != 0) return cmp;
        if (auto cmp = c <=> o.c; cmp != 0) return cmp;
        return d <=> o.d;
    }
};

ProjectiveMatrix compose(const ProjectiveMatrix& x, const ProjectiveMatrix& y);
ProjectiveMatrix inverse(const ProjectiveMatrix& x);

// x y x^{-1}
ProjectiveMatrix conjugate(const ProjectiveMatrix& x, const ProjectiveMatrix& y);

int element_order(const ProjectiveMatrix& x);  // finite or throws InternalError past 24

std::size_t hash_value(const ProjectiveMatrix& m);

// The four standard generators.
struct Generators {
    ProjectiveMatrix a, b, c, d;
};

const Generators& standard_generators();

// Word grammar: letters a,b,c,d, optional '*' separators, optional ^k powers
// (k >= 0), e.g. "a*c^2*d" or "ac2d"-style is NOT accepted; empty word = identity.
ProjectiveMatrix evaluate_word(std::string_view word);

// All eight defining relators evaluate to the identity on the generators.
bool verify_presentation();

// Same check on an explicit relator list (empty list is vacuously true).
bool verify_relators(const std::vector<std::string>& relators);

// Lower-left entry is 0 mod p; well-defined on the +-I class.
bool in_congruence_subgroup(const ProjectiveMatrix& m, const GaussianPrime& p);

struct CosetTransversal {
    GaussianPrime prime;
    std::vector<ProjectiveMatrix> reps;  // gamma_z for each residue z, then sigma
};

// Throws TransversalInvalid if two representatives fall in the same coset.
CosetTransversal coset_transversal(const GaussianPrime& p);

// Unique j with m * reps[j]^{-1} in the congruence subgroup; NoCoset otherwise.
std::size_t coset_reduce(const ProjectiveMatrix& m, const CosetTransversal& t);

// |SL2(F_q) / {+-I}|: q(q^2-1) for even q, q(q^2-1)/2 for odd q.
// Throws NotPrimePower.
Int psl2_order_fq(const Int& q);

// 2x2 matrix over Z[i] without the det-1/projective normalization (used for
// double-coset representatives, which live in GL2 up to scaling).
struct GLMatrix {
    GaussianInt a, b, c, d;
    bool operator==(const GLMatrix&) const = default;
};

// Left-coset representatives alpha_i of the double coset of diag(p, 1):
// alpha_i = diag(p,1) * reps[i] over the coset transversal, with pairwise
// distinctness verified exactly.
std::vector<GLMatrix> double_coset_left_reps(const GaussianPrime& p);

// Degenerate variant for the identity double coset.
std::vector<GLMatrix> double_coset_left_reps_identity();

}  // namespace bianchi

template <>
struct std::hash<bianchi::ProjectiveMatrix> {
    std::size_t operator()(const bianchi::ProjectiveMatrix& m) const { return bianchi::hash_value(m); }
};
