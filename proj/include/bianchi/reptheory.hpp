#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bianchi/cyclotomic.hpp"
#include "bianchi/intmatrix.hpp"
#include "bianchi/matgroup.hpp"

namespace bianchi {

enum class IsoType { C1, C2, C3, C4, D2, S3, A4 };

std::string to_string(IsoType t);
IsoType parse_iso_type(std::string_view s);  // throws UnknownType
std::size_t group_order(IsoType t);
std::size_t irreducible_count(IsoType t);

// Pure census classification (order + element-order multiset).
// Throws UnknownType when no supported type matches.
IsoType classify_census(std::size_t order, const std::vector<int>& element_orders);

struct FiniteMatrixGroup {
    std::vector<ProjectiveMatrix> elements;        // sorted, canonical
    IsoType iso_type = IsoType::C1;
    std::vector<ProjectiveMatrix> dist_gens;       // distinguished generators (may be empty)

    std::size_t order() const { return elements.size(); }
    bool contains(const ProjectiveMatrix& m) const;
};

// Checks closure under composition and inverse (NotClosed), then classifies.
FiniteMatrixGroup identify(std::vector<ProjectiveMatrix> elements,
                           std::vector<ProjectiveMatrix> dist_gens = {});

// Closure of the generating set, then identify; generators become distinguished.
FiniteMatrixGroup generate_subgroup(const std::vector<ProjectiveMatrix>& gens);

// Exact character table over Z[zeta_12].  Row order is the canonical one:
//   C_n: chi_k(g) = zeta_n^k for the distinguished generator g;
//   D2:  sign patterns on the two distinguished involutions, calibrated;
//   S3:  trivial, sign, 2-dimensional;
//   A4:  trivial, the two omega-linears (omega at the distinguished 3-class), 3-dim.
struct CharacterTable {
    IsoType iso_type = IsoType::C1;
    std::optional<FiniteMatrixGroup> group;                 // absent for abstract tables
    std::vector<std::vector<ProjectiveMatrix>> classes;     // concrete tables only
    std::vector<std::string> class_labels;
    std::vector<Int> class_sizes;
    std::vector<std::vector<Cyc12>> chars;                  // rows = irreducibles

    std::size_t n_irreducibles() const { return chars.size(); }
    std::size_t n_classes() const { return class_sizes.size(); }
    // concrete tables: class index / character value of a group element
    std::size_t class_of(const ProjectiveMatrix& m) const;
    const Cyc12& value(std::size_t irr, const ProjectiveMatrix& m) const;
};

CharacterTable character_table(const FiniteMatrixGroup& g);
CharacterTable character_table(IsoType t);  // abstract table (works for C4 too)

// Per-type permutation applied to the canonical character row order; the one
// shipped here reproduces the reference differentials entrywise.
const std::vector<int>& character_order_calibration(IsoType t);

struct RepRingMap {
    IsoType source;
    IsoType target;
    IntMatrix matrix;  // target-irreducible coordinates of each source generator's image
};

// m_{ji} = <Res chi_i, psi_j>_H.  Throws NotSubgroup.
RepRingMap restriction_matrix(const CharacterTable& big, const CharacterTable& sub);

// Transpose of restriction (Frobenius reciprocity).  Throws NotSubgroup.
RepRingMap induction_matrix(const CharacterTable& sub, const CharacterTable& big);

// chi -> Res_sub(chi o Ad_{t^{-1}}), i.e. chi evaluated at t^{-1} x t; requires
// t^{-1} (sub) t to be contained in big.  restriction_matrix is the t = 1 case.
IntMatrix restriction_with_conjugation(const CharacterTable& big, const CharacterTable& sub,
                                       const ProjectiveMatrix& t);

// Permutation matrix sending each irreducible of `from` to the irreducible of
// `to` with matching composed character.  `iso` must be a group isomorphism
// from.group -> to.group; NotIsomorphism otherwise.
RepRingMap conjugation_map(const CharacterTable& from, const CharacterTable& to,
                           const std::function<ProjectiveMatrix(const ProjectiveMatrix&)>& iso);

// <f, psi_j>_H for every irreducible psi_j; exact, asserts integrality.
std::vector<Int> multiplicities(const CharacterTable& h,
                                const std::function<Cyc12(const ProjectiveMatrix&)>& f);

}  // namespace bianchi
