#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bianchi/matgroup.hpp"
#include "bianchi/reptheory.hpp"

namespace bianchi {

struct BoundaryEntry {
    int sign;                  // +1 or -1
    std::string target;        // label of a cell one dimension down
    ProjectiveMatrix carrier;  // conjugates the face inclusion of stabilizers
};

struct OrbitCell {
    int dim = 0;
    std::string label;
    FiniteMatrixGroup stabilizer;
    ProjectiveMatrix translate = ProjectiveMatrix::identity();
    std::vector<BoundaryEntry> boundary;
    std::string parent;                  // base-cell label ("" for base cells)
    std::size_t transversal_index = 0;
};

enum class GroupTag { Gamma1, Congruence };

struct GCWModel {
    GroupTag tag = GroupTag::Gamma1;
    std::optional<GaussianPrime> prime;
    std::array<std::vector<OrbitCell>, 3> cells;  // per dimension

    int dimension() const;
    const OrbitCell& cell(int dim, const std::string& label) const;
};

// The square model: vertices P(A4), Q(S3), R(D2), S(S3'); edges PQ(C3),
// QR(C2), RS(C2), SP(C3'); one free 2-cell with boundary PQ+QR+RS+SP.
// Orientation: edges P->Q->R->S->P, 2-cell inducing +1 on each edge.
const GCWModel& gamma1_model();

// Splits every orbit cell into congruence-subgroup orbits: transversal indices
// j ~ l iff reps[j] s reps[l]^{-1} lies in the subgroup for some stabilizer
// element s.  Each class is emitted once (smallest index as representative)
// with the conjugated-and-intersected stabilizer and rewritten boundary.
GCWModel split_orbits(const GCWModel& model, const GaussianPrime& p, const CosetTransversal& t);

struct ModelSummary {
    std::array<std::size_t, 3> cell_counts{};
    std::array<std::vector<IsoType>, 3> stabilizer_types;
    std::array<std::size_t, 3> chain_ranks{};  // sum of irreducible counts per dimension
};

ModelSummary model_summary(const GCWModel& model);

}  // namespace bianchi
