#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "bianchi/gaussian.hpp"

namespace bianchi {

// Dense matrix over Z with unbounded entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;
    bool operator==(const IntMatrix&) const = default;

    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    // row_i += q * row_j ; col_i += q * col_j
    void add_row(std::size_t i, std::size_t j, const Int& q);
    void add_col(std::size_t i, std::size_t j, const Int& q);
    void negate_row(std::size_t i);

    std::string str() const;  // rows per line, aligned signed integers

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

// U * A * V = D with U, V unimodular, D diagonal with positive invariant
// factors in divisibility order followed by zeros.  Inverses are maintained
// alongside so downstream basis extraction never needs rational arithmetic.
struct SmithDecomposition {
    IntMatrix U, Uinv, D, V, Vinv;
    std::size_t rank = 0;
    std::vector<Int> invariant_factors;  // the nonzero diagonal
};

SmithDecomposition snf(IntMatrix a);

// Finitely generated abelian group: free rank plus torsion in divisibility order.
struct FgAbGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;

    bool operator==(const FgAbGroup&) const = default;
    bool is_zero() const { return free_rank == 0 && torsion.empty(); }
    std::string str() const;  // "Z^6", "Z", "0", "Z + Z/2", ...
};

// Canonical bases for ker(d_low)/im(d_high) at one spot of a complex.
// d_low maps the ambient space out (may be null), d_high maps in (may be null).
class HomologyBasis {
public:
    HomologyBasis(std::size_t dim, const IntMatrix* d_low, const IntMatrix* d_high);

    const FgAbGroup& group() const { return group_; }
    std::size_t ambient_dim() const { return dim_; }
    std::size_t free_rank() const { return group_.free_rank; }

    // Columns = representative cycles of the canonical free-part basis.
    IntMatrix free_basis_vectors() const;
    // Coordinates of a cycle in the free-part basis (kills torsion coords).
    std::vector<Int> free_coords(const std::vector<Int>& cycle) const;

private:
    std::size_t dim_;
    std::size_t kernel_rank_;
    IntMatrix kernel_basis_;   // dim x kernel_rank
    IntMatrix kernel_coords_;  // kernel_rank x dim
    IntMatrix uq_, uq_inv_;
    std::vector<Int> invariant_factors_;
    std::vector<std::size_t> free_idx_;
    FgAbGroup group_;
};

// ker(d_n)/im(d_{n+1}) as an abstract group; throws NotAComplex if
// d_n * d_{n+1} != 0.  Pass empty matrices for missing differentials,
// shaped (0 x dim) / (dim x 0).
FgAbGroup homology(const IntMatrix& d_n, const IntMatrix& d_nplus1);

// Two-step complex 0 -> C2 -> C1 -> C0 -> 0 with d1: C1->C0, d2: C2->C1.
struct TwoStepComplex {
    std::array<std::size_t, 3> dims;
    IntMatrix d1, d2;
};

// Matrix of the induced map on the free part of H_degree, with respect to the
// canonical bases of both complexes.  phi = chain map per degree; throws
// NotChainMap when a square fails to commute.
IntMatrix induced_on_homology(const TwoStepComplex& source, const TwoStepComplex& target,
                              const std::array<IntMatrix, 3>& phi, int degree);

// Monic characteristic polynomial, coefficients in descending degree order
// (Faddeev-LeVerrier, exact).
std::vector<Int> char_poly(const IntMatrix& a);

Int determinant(const IntMatrix& a);
Int trace(const IntMatrix& a);

// Exact inverse of a unimodular matrix (throws InternalError otherwise).
IntMatrix inverse_unimodular(const IntMatrix& a);

}  // namespace bianchi
