#include "diffconv/linalg.hpp"

#include <stdexcept>

namespace diffconv {

FunMatrix::FunMatrix(Prime p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), e_(rows * cols, RatFun::zero(p)) {}

FunMatrix FunMatrix::identity(Prime p, std::size_t n) {
    FunMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RatFun::one(p);
    return m;
}

FunMatrix FunMatrix::from_rows(Prime p, const std::vector<std::vector<RatFun>>& rows) {
    const std::size_t nc = rows.empty() ? 0 : rows.front().size();
    FunMatrix m(p, rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw ParameterError("ragged row lengths");
        for (std::size_t j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

RatFun& FunMatrix::at(std::size_t i, std::size_t j) {
    if (i >= rows_ || j >= cols_) throw ParameterError("matrix index out of range");
    return e_[i * cols_ + j];
}

const RatFun& FunMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ParameterError("matrix index out of range");
    return e_[i * cols_ + j];
}

std::vector<RatFun> FunMatrix::row(std::size_t i) const {
    std::vector<RatFun> r;
    r.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.push_back(at(i, j));
    return r;
}

std::vector<RatFun> FunMatrix::col(std::size_t j) const {
    std::vector<RatFun> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back(at(i, j));
    return c;
}

bool FunMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool operator==(const FunMatrix& a, const FunMatrix& b) {
    return a.p_ == b.p_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

FunMatrix wronskian(std::span<const RatFun> elements, int k, const Derivation& d) {
    if (elements.empty()) throw ParameterError("wronskian of an empty family");
    if (k < 1) throw ParameterError("wronskian needs at least one row");
    FunMatrix w(d.prime(), static_cast<std::size_t>(k), elements.size());
    for (std::size_t j = 0; j < elements.size(); ++j) {
        RatFun cur = elements[j];
        for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
            if (i > 0) cur = derive(cur, d);
            w.at(i, j) = cur;
        }
    }
    return w;
}

FunMatrix rref(const FunMatrix& m) {
    FunMatrix r = m;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != pivot_row)
            for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(pivot_row, j));
        const RatFun inv = r.at(pivot_row, col).inverse();
        for (std::size_t j = col; j < r.cols(); ++j) r.at(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == pivot_row || r.at(i, col).is_zero()) continue;
            const RatFun factor = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j)
                r.at(i, j) -= factor * r.at(pivot_row, j);
        }
        ++pivot_row;
    }
    return r;
}

FunMatrix rcef(const FunMatrix& m) { return transpose(rref(transpose(m))); }

std::size_t rank(const FunMatrix& m) {
    const FunMatrix r = rref(m);
    std::size_t rk = 0;
    for (std::size_t i = 0; i < r.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < r.cols(); ++j)
            if (!r.at(i, j).is_zero()) {
                nonzero = true;
                break;
            }
        if (nonzero) ++rk;
    }
    return rk;
}

bool is_invertible(const FunMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::vector<RatFun> solve_left(const FunMatrix& a, const std::vector<RatFun>& b) {
    if (b.size() != a.cols()) throw ParameterError("right-hand side length mismatch");
    // Transposed system [a^tr | b^tr]; pivot columns give the solution.
    FunMatrix aug(a.prime(), a.cols(), a.rows() + 1);
    for (std::size_t i = 0; i < a.cols(); ++i) {
        for (std::size_t j = 0; j < a.rows(); ++j) aug.at(i, j) = a.at(j, i);
        aug.at(i, a.rows()) = b[i];
    }
    const FunMatrix r = rref(aug);
    std::vector<RatFun> x(a.rows(), RatFun::zero(a.prime()));
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < r.cols() && r.at(i, lead).is_zero()) ++lead;
        if (lead == r.cols()) continue;
        if (lead == a.rows()) throw FieldError("inconsistent linear system");
        x[lead] = r.at(i, a.rows());
    }
    return x;
}

FunMatrix left_kernel(const FunMatrix& m) {
    const FunMatrix r = rref(transpose(m));
    // Pivot bookkeeping over the columns of m^tr (= rows of m).
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(m.rows(), false);
    for (std::size_t i = 0; i < r.rows(); ++i) {
        std::size_t lead = 0;
        while (lead < r.cols() && r.at(i, lead).is_zero()) ++lead;
        if (lead == r.cols()) break;
        pivot_col.push_back(lead);
        is_pivot[lead] = true;
    }
    FunMatrix basis(m.prime(), m.rows() - pivot_col.size(), m.rows());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.rows(); ++free) {
        if (is_pivot[free]) continue;
        basis.at(out, free) = RatFun::one(m.prime());
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            basis.at(out, pivot_col[i]) = -r.at(i, free);
        ++out;
    }
    return basis;
}

FunMatrix mat_mul(const FunMatrix& a, const FunMatrix& b) {
    if (a.cols() != b.rows()) throw ParameterError("matrix dimension mismatch");
    FunMatrix c(a.prime(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                c.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return c;
}

std::vector<RatFun> row_times_matrix(const std::vector<RatFun>& v, const FunMatrix& m) {
    if (v.size() != m.rows()) throw ParameterError("row vector length mismatch");
    std::vector<RatFun> out(m.cols(), RatFun::zero(m.prime()));
    for (std::size_t k = 0; k < m.rows(); ++k) {
        if (v[k].is_zero()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m.at(k, j).is_zero()) continue;
            out[j] += v[k] * m.at(k, j);
        }
    }
    return out;
}

FunMatrix transpose(const FunMatrix& m) {
    FunMatrix t(m.prime(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
    return t;
}

FunMatrix submatrix(const FunMatrix& m, std::span<const std::size_t> row_idx,
                    std::span<const std::size_t> col_idx) {
    FunMatrix s(m.prime(), row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            s.at(i, j) = m.at(row_idx[i], col_idx[j]);
    return s;
}

FunMatrix hstack(const FunMatrix& a, const FunMatrix& b) {
    if (a.rows() != b.rows()) throw ParameterError("hstack row mismatch");
    FunMatrix c(a.prime(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, a.cols() + j) = b.at(i, j);
    }
    return c;
}

FunMatrix vstack(const FunMatrix& a, const FunMatrix& b) {
    if (a.cols() != b.cols()) throw ParameterError("vstack column mismatch");
    FunMatrix c(a.prime(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
    return c;
}

std::string format_matrix(const FunMatrix& m) {
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out += "; ";
            out += format_ratfun(m.at(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace diffconv
