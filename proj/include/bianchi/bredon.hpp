#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bianchi/intmatrix.hpp"
#include "bianchi/model.hpp"

namespace bianchi {

enum class Variance { Homology, Cohomology };

// Chain (or cochain) complex of a model with representation-ring coefficients.
// Degree-n basis: one block per n-cell, one coordinate per irreducible of its
// stabilizer.  Homology boundaries are induction-based (d1: C1->C0,
// d2: C2->C1); cohomology coboundaries are restriction-based (d0: C0->C1,
// d1: C1->C2); both come from the same incidence data and are mutual
// blockwise transposes.
struct BredonComplex {
    Variance variance = Variance::Homology;
    std::array<std::vector<std::pair<std::string, CharacterTable>>, 3> degrees;
    std::array<std::size_t, 3> ranks{};
    IntMatrix d_low;   // homology: C1->C0; cohomology: C0->C1
    IntMatrix d_high;  // homology: C2->C1; cohomology: C1->C2

    TwoStepComplex as_two_step() const;  // homology variance only
    std::array<FgAbGroup, 3> groups() const;
};

// Throws ComplexInconsistent if the composite differential is nonzero.
BredonComplex bredon_complex(const GCWModel& model, Variance variance);

std::array<FgAbGroup, 3> bredon_homology(const GCWModel& model);
std::array<FgAbGroup, 3> bredon_cohomology(const GCWModel& model);

// K0 = H2 + H0 (collapsed spectral sequence, split), K1 = H1.
// Throws DimensionTooHigh for models of dimension > 2.
std::pair<FgAbGroup, FgAbGroup> k_groups(const GCWModel& model);

struct HeckeData {
    GaussianPrime prime;
    std::array<IntMatrix, 3> res;    // chain maps, base complex -> congruence complex
    std::array<IntMatrix, 3> adg;    // congruence complex -> conjugated complex
    std::array<IntMatrix, 3> cores;  // conjugated complex -> base complex
    IntMatrix on_H0;                 // in the calibrated basis of H0
    IntMatrix on_H1;
    IntMatrix on_H2;
    IntMatrix on_K0;                 // block diag(on_H2, on_H0)
    IntMatrix on_K1;                 // = on_H1
};

// Full pipeline for g = diag(p, 1): splits orbits, assembles the three chain
// maps, verifies each is a chain map, and reads off the induced matrices.
HeckeData hecke_operator(const GaussianPrime& p);

// Frozen change of basis that puts degree-0 homology of the base model (and,
// for level 1+i, of the congruence model) into the reference coordinates.
struct HeckeCalibration {
    IntMatrix h0_base;        // 6x6 unimodular (S)
    IntMatrix h0_congruence;  // 8x8 unimodular (A), level 1+i only
};
const HeckeCalibration& hecke_calibration();

// Conjugation by diag(p,1): [[a,b],[c,d]] -> [[a, p b],[c/p, d]].
// Requires p | c, i.e. membership in the congruence subgroup.
ProjectiveMatrix conjugate_by_hecke_element(const ProjectiveMatrix& m, const GaussianPrime& p);
// Inverse direction (requires p | b).
ProjectiveMatrix conjugate_by_hecke_element_inv(const ProjectiveMatrix& m, const GaussianPrime& p);

// The congruence model pushed through Ad_g: same incidence, stabilizers and
// carriers conjugated entrywise.  Exactly integral because everything lives
// in the congruence subgroup.
GCWModel adg_pushforward(const GCWModel& congruence_model, const GaussianPrime& p);

FgAbGroup direct_sum(const FgAbGroup& x, const FgAbGroup& y);

}  // namespace bianchi
