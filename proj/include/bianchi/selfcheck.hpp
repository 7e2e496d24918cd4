#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bianchi/bredon.hpp"

namespace bianchi {

// Reference matrices for the base group and level 1+i, used as exact oracles
// by the verification suite and the acceptance tests.
const IntMatrix& reference_cohomology_d0();   // 10x14, rank 8
const IntMatrix& reference_restriction_f0();  // 14x14, rank 10
const IntMatrix& reference_restriction_f1();  // 8x10, rank 6
const IntMatrix& reference_res_on_h0();       // 8x6   (m1)
const IntMatrix& reference_cores_on_h0();     // 6x8   (m2)
const IntMatrix& reference_hecke_on_h0();     // 6x6   (= m2 * m1)

struct CheckResult {
    std::string name;
    bool passed;
    std::string detail;  // empty when passed
};

// The full property suite: presentation relations, character-table
// orthogonality, Frobenius transposes, SNF contracts on random matrices,
// d.d = 0 for assembled complexes, reference-matrix oracles, homology
// invariance under unimodular basis change.
std::vector<CheckResult> run_verification(std::uint64_t seed, std::size_t snf_trials = 500,
                                          std::size_t basis_trials = 20);

// Seeded helpers shared with the test suites.
IntMatrix random_matrix(std::mt19937_64& rng, std::size_t max_dim = 20, long max_abs = 9);
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 30);
ProjectiveMatrix random_word(std::mt19937_64& rng, int max_len = 20);

}  // namespace bianchi
