#ifndef DIFFCONV_LINALG_HPP
#define DIFFCONV_LINALG_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "diffconv/rfield.hpp"

namespace diffconv {

/// Dense matrix over F_p(z), row-major. Allows zero rows or columns so
/// degenerate parity checks (d = 1) stay representable.
class FunMatrix {
  public:
    FunMatrix(Prime p, std::size_t rows, std::size_t cols);
    static FunMatrix identity(Prime p, std::size_t n);
    static FunMatrix from_rows(Prime p, const std::vector<std::vector<RatFun>>& rows);

    Prime prime() const noexcept { return p_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    RatFun& at(std::size_t i, std::size_t j);
    const RatFun& at(std::size_t i, std::size_t j) const;

    std::vector<RatFun> row(std::size_t i) const;
    std::vector<RatFun> col(std::size_t j) const;

    bool is_zero() const;

    friend bool operator==(const FunMatrix& a, const FunMatrix& b);
    friend bool operator!=(const FunMatrix& a, const FunMatrix& b) { return !(a == b); }

  private:
    Prime p_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<RatFun> e_;
};

/// k x n Wronskian with entry (i, j) = delta^i(c_j).
FunMatrix wronskian(std::span<const RatFun> elements, int k, const Derivation& d);

/// Reduced row echelon form by exact Gauss-Jordan elimination; pivots are
/// chosen as the first nonzero entry in scan order.
FunMatrix rref(const FunMatrix& m);

/// Reduced column echelon form, defined as transpose(rref(transpose(m))).
FunMatrix rcef(const FunMatrix& m);

std::size_t rank(const FunMatrix& m);
bool is_invertible(const FunMatrix& m);

/// One exact solution of x * a = b; throws FieldError when inconsistent.
/// Free coordinates are set to zero.
std::vector<RatFun> solve_left(const FunMatrix& a, const std::vector<RatFun>& b);

/// Basis (as rows) of { x : x * m = 0 }; rows(m) - rank(m) rows.
FunMatrix left_kernel(const FunMatrix& m);

FunMatrix mat_mul(const FunMatrix& a, const FunMatrix& b);
std::vector<RatFun> row_times_matrix(const std::vector<RatFun>& v, const FunMatrix& m);
FunMatrix transpose(const FunMatrix& m);
FunMatrix submatrix(const FunMatrix& m, std::span<const std::size_t> row_idx,
                    std::span<const std::size_t> col_idx);
FunMatrix hstack(const FunMatrix& a, const FunMatrix& b);
FunMatrix vstack(const FunMatrix& a, const FunMatrix& b);

/// Rows of ';'-separated rational functions, one row per line.
std::string format_matrix(const FunMatrix& m);

}  // namespace diffconv

#endif
