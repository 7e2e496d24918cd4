#include "bianchi/intmatrix.hpp"

#include <algorithm>
#include <sstream>

namespace bianchi {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        check_internal(rows[i].size() == c, "ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
}

bool IntMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(rows_);
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::add_row(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) += q * at(j, k);
}

void IntMatrix::add_col(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, i) += q * at(k, j);
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

std::string IntMatrix::str() const {
    std::vector<std::size_t> width(cols_, 1);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i)
            width[j] = std::max(width[j], at(i, j).str().size());
    std::ostringstream out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            std::string s = at(i, j).str();
            out << std::string(width[j] - s.size() + (j ? 1 : 0), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    check_internal(a.cols() == b.rows(), "matrix product shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    check_internal(a.rows() == b.rows() && a.cols() == b.cols(), "matrix difference shape mismatch");
    IntMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

namespace {

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncates toward zero
    if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

}  // namespace

SmithDecomposition snf(IntMatrix a) {
    const std::size_t n = a.rows(), m = a.cols();
    SmithDecomposition s;
    s.U = IntMatrix::identity(n);
    s.Uinv = IntMatrix::identity(n);
    s.V = IntMatrix::identity(m);
    s.Vinv = IntMatrix::identity(m);

    auto row_swap = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        s.U.swap_rows(i, j);
        s.Uinv.swap_cols(i, j);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        s.V.swap_cols(i, j);
        s.Vinv.swap_rows(i, j);
    };
    // row_i -= q row_j
    auto row_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        a.add_row(i, j, -q);
        s.U.add_row(i, j, -q);
        s.Uinv.add_col(j, i, q);
    };
    // col_i -= q col_j
    auto col_sub = [&](std::size_t i, std::size_t j, const Int& q) {
        a.add_col(i, j, -q);
        s.V.add_col(i, j, -q);
        s.Vinv.add_row(j, i, q);
    };

    std::size_t t = 0;
    while (true) {
        // minimal-absolute-value pivot in the trailing block
        bool have = false;
        std::size_t pi = 0, pj = 0;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < m; ++j)
                if (a.at(i, j) != 0 && (!have || abs(a.at(i, j)) < abs(a.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                    have = true;
                }
        if (!have) break;
        if (pi != t) row_swap(t, pi);
        if (pj != t) col_swap(t, pj);

        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = floor_div(a.at(i, t), a.at(t, t));
                if (q != 0) row_sub(i, t, q);
                if (a.at(i, t) != 0) {
                    row_swap(t, i);
                    progress = true;
                }
            }
            for (std::size_t j = t + 1; j < m; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = floor_div(a.at(t, j), a.at(t, t));
                if (q != 0) col_sub(j, t, q);
                if (a.at(t, j) != 0) {
                    col_swap(t, j);
                    progress = true;
                }
            }
        }
        // the pivot must divide the whole trailing block
        bool redo = false;
        for (std::size_t i = t + 1; i < n && !redo; ++i)
            for (std::size_t j = t + 1; j < m && !redo; ++j)
                if (a.at(i, j) % a.at(t, t) != 0) {
                    a.add_row(t, i, 1);
                    s.U.add_row(t, i, 1);
                    s.Uinv.add_col(i, t, -1);
                    redo = true;
                }
        if (redo) continue;
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            s.U.negate_row(t);
            for (std::size_t k = 0; k < n; ++k) s.Uinv.at(k, t) = -s.Uinv.at(k, t);
        }
        ++t;
        if (t >= std::min(n, m)) break;
    }
    s.D = std::move(a);
    for (std::size_t i = 0; i < std::min(n, m); ++i)
        if (s.D.at(i, i) != 0) {
            s.invariant_factors.push_back(s.D.at(i, i));
            ++s.rank;
        }
    return s;
}

std::string FgAbGroup::str() const {
    std::string out;
    if (free_rank == 1) out = "Z";
    else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
    for (const Int& d : torsion) out += (out.empty() ? "Z/" : " + Z/") + d.str();
    return out.empty() ? "0" : out;
}

HomologyBasis::HomologyBasis(std::size_t dim, const IntMatrix* d_low, const IntMatrix* d_high) : dim_(dim) {
    if (d_low == nullptr || d_low->rows() == 0) {
        kernel_rank_ = dim;
        kernel_basis_ = IntMatrix::identity(dim);
        kernel_coords_ = IntMatrix::identity(dim);
    } else {
        check_internal(d_low->cols() == dim, "d_low shape mismatch");
        SmithDecomposition s = snf(*d_low);
        std::size_t r = s.rank;
        kernel_rank_ = dim - r;
        kernel_basis_ = IntMatrix(dim, kernel_rank_);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < kernel_rank_; ++j) kernel_basis_.at(i, j) = s.V.at(i, r + j);
        kernel_coords_ = IntMatrix(kernel_rank_, dim);
        for (std::size_t i = 0; i < kernel_rank_; ++i)
            for (std::size_t j = 0; j < dim; ++j) kernel_coords_.at(i, j) = s.Vinv.at(r + i, j);
    }
    std::size_t k = kernel_rank_;
    std::size_t rq = 0;
    if (d_high == nullptr || d_high->cols() == 0) {
        uq_ = IntMatrix::identity(k);
        uq_inv_ = IntMatrix::identity(k);
    } else {
        check_internal(d_high->rows() == dim, "d_high shape mismatch");
        IntMatrix q = kernel_coords_ * (*d_high);
        SmithDecomposition sq = snf(q);
        uq_ = sq.U;
        uq_inv_ = sq.Uinv;
        rq = sq.rank;
        invariant_factors_ = sq.invariant_factors;
    }
    for (std::size_t i = rq; i < k; ++i) free_idx_.push_back(i);
    group_.free_rank = free_idx_.size();
    for (const Int& d : invariant_factors_)
        if (d > 1) group_.torsion.push_back(d);
}

IntMatrix HomologyBasis::free_basis_vectors() const {
    IntMatrix out(dim_, free_idx_.size());
    for (std::size_t jj = 0; jj < free_idx_.size(); ++jj) {
        std::size_t col = free_idx_[jj];
        for (std::size_t i = 0; i < dim_; ++i) {
            Int acc = 0;
            for (std::size_t sIdx = 0; sIdx < kernel_rank_; ++sIdx)
                acc += kernel_basis_.at(i, sIdx) * uq_inv_.at(sIdx, col);
            out.at(i, jj) = acc;
        }
    }
    return out;
}

std::vector<Int> HomologyBasis::free_coords(const std::vector<Int>& cycle) const {
    check_internal(cycle.size() == dim_, "cycle dimension mismatch");
    std::vector<Int> y(kernel_rank_);
    for (std::size_t i = 0; i < kernel_rank_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) y[i] += kernel_coords_.at(i, j) * cycle[j];
    std::vector<Int> out;
    out.reserve(free_idx_.size());
    for (std::size_t idx : free_idx_) {
        Int acc = 0;
        for (std::size_t sIdx = 0; sIdx < kernel_rank_; ++sIdx) acc += uq_.at(idx, sIdx) * y[sIdx];
        out.push_back(acc);
    }
    return out;
}

FgAbGroup homology(const IntMatrix& d_n, const IntMatrix& d_nplus1) {
    std::size_t dim = d_n.rows() ? d_n.cols() : d_nplus1.rows();
    bool has_low = d_n.rows() > 0;
    bool has_high = d_nplus1.cols() > 0;
    if (has_low && has_high) {
        if (!(d_n * d_nplus1).is_zero())
            throw DomainError("NotAComplex", "composite differential is nonzero");
    }
    HomologyBasis h(dim, has_low ? &d_n : nullptr, has_high ? &d_nplus1 : nullptr);
    return h.group();
}

IntMatrix induced_on_homology(const TwoStepComplex& source, const TwoStepComplex& target,
                              const std::array<IntMatrix, 3>& phi, int degree) {
    if (!(phi[0] * source.d1 - target.d1 * phi[1]).is_zero())
        throw DomainError("NotChainMap", "square at degree 1 does not commute");
    if (!(phi[1] * source.d2 - target.d2 * phi[2]).is_zero())
        throw DomainError("NotChainMap", "square at degree 2 does not commute");

    auto basis_at = [](const TwoStepComplex& c, int deg) {
        switch (deg) {
            case 0: return HomologyBasis(c.dims[0], nullptr, &c.d1);
            case 1: return HomologyBasis(c.dims[1], &c.d1, &c.d2);
            default: return HomologyBasis(c.dims[2], &c.d2, nullptr);
        }
    };
    HomologyBasis src = basis_at(source, degree);
    HomologyBasis tgt = basis_at(target, degree);
    const IntMatrix& p = phi[static_cast<std::size_t>(degree)];

    IntMatrix reps = src.free_basis_vectors();
    IntMatrix out(tgt.free_rank(), src.free_rank());
    for (std::size_t j = 0; j < src.free_rank(); ++j) {
        std::vector<Int> image(p.rows());
        for (std::size_t i = 0; i < p.rows(); ++i)
            for (std::size_t k = 0; k < p.cols(); ++k) image[i] += p.at(i, k) * reps.at(k, j);
        std::vector<Int> coords = tgt.free_coords(image);
        for (std::size_t i = 0; i < coords.size(); ++i) out.at(i, j) = coords[i];
    }
    return out;
}

std::vector<Int> char_poly(const IntMatrix& a) {
    check_internal(a.rows() == a.cols(), "char_poly needs a square matrix");
    std::size_t n = a.rows();
    std::vector<Int> coeffs{1};
    IntMatrix m = IntMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix am = a * m;
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i);
        check_internal(tr % Int(k) == 0, "Faddeev-LeVerrier divisibility failed");
        Int ck = -tr / Int(k);
        coeffs.push_back(ck);
        if (k < n) {
            m = am;
            for (std::size_t i = 0; i < n; ++i) m.at(i, i) += ck;
        }
    }
    return coeffs;
}

Int determinant(const IntMatrix& a) {
    check_internal(a.rows() == a.cols(), "determinant needs a square matrix");
    // Bareiss fraction-free elimination
    std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && m.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                check_internal(num % prev == 0, "Bareiss divisibility failed");
                m.at(i, j) = num / prev;
            }
        prev = m.at(k, k);
    }
    return sign * m.at(n - 1, n - 1);
}

Int trace(const IntMatrix& a) {
    Int t = 0;
    for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a.at(i, i);
    return t;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
    SmithDecomposition s = snf(a);
    check_internal(a.rows() == a.cols() && s.rank == a.rows(), "matrix not invertible");
    for (const Int& d : s.invariant_factors)
        check_internal(d == 1, "matrix not unimodular");
    // U a V = I  =>  a^{-1} = V U
    return s.V * s.U;
}

}  // namespace bianchi
