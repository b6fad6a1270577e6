#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidforge {

using BigInt = boost::multiprecision::cpp_int;

// Dense matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const BigInt& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix: dimension mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const BigInt& v = at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  bool operator==(const IntMatrix&) const = default;

  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) out += ' ';
        out += at(i, j).str();
      }
      out += '\n';
    }
    return out;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

struct SmithResult {
  IntMatrix d;  // diagonal, nonnegative, d1 | d2 | ...
  IntMatrix u;  // unimodular, rows x rows
  IntMatrix v;  // unimodular, cols x cols;  u * m * v == d
};

namespace detail {

// Core diagonalisation by unimodular row/column operations. Pivot is always
// the smallest nonzero |entry| of the remaining submatrix, ties broken by
// lowest (row, col); with big integers this keeps intermediate growth mild
// on the relation matrices this library produces. u and v, when non-null,
// accumulate the row and column operations.
inline void smith_core(IntMatrix& m, IntMatrix* u, IntMatrix* v) {
  const std::size_t rows = m.rows(), cols = m.cols();
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(a, j), m.at(b, j));
    if (u)
      for (std::size_t j = 0; j < rows; ++j) std::swap(u->at(a, j), u->at(b, j));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, a), m.at(i, b));
    if (v)
      for (std::size_t i = 0; i < cols; ++i) std::swap(v->at(i, a), v->at(i, b));
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    // row dst += f * row src
    for (std::size_t j = 0; j < cols; ++j) m.at(dst, j) += f * m.at(src, j);
    if (u)
      for (std::size_t j = 0; j < rows; ++j) u->at(dst, j) += f * u->at(src, j);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const BigInt& f) {
    for (std::size_t i = 0; i < rows; ++i) m.at(i, dst) += f * m.at(i, src);
    if (v)
      for (std::size_t i = 0; i < cols; ++i) v->at(i, dst) += f * v->at(i, src);
  };
  auto negate_row = [&](std::size_t r) {
    for (std::size_t j = 0; j < cols; ++j) m.at(r, j) = -m.at(r, j);
    if (u)
      for (std::size_t j = 0; j < rows; ++j) u->at(r, j) = -u->at(r, j);
  };

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero |entry| in the submatrix from (t, t)
      std::size_t pr = t, pc = t;
      BigInt best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (m.at(i, j) == 0) continue;
          BigInt a = abs(m.at(i, j));
          if (best == 0 || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (best == 0) return;  // remaining submatrix is zero
      swap_rows(t, pr);
      swap_cols(t, pc);
      if (m.at(t, t) < 0) negate_row(t);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m.at(i, t) == 0) continue;
        BigInt q = m.at(i, t) / m.at(t, t);
        if (q != 0) add_row(i, t, -q);
        if (m.at(i, t) != 0) clean = false;  // remainder: pivot will shrink next round
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m.at(t, j) == 0) continue;
        BigInt q = m.at(t, j) / m.at(t, t);
        if (q != 0) add_col(j, t, -q);
        if (m.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // pivot divides everything below-right, else absorb an offending row
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
}

}  // namespace detail

// Full Smith normal form with transforms: u * m * v == d exactly.
inline SmithResult smith_normal_form(IntMatrix m) {
  SmithResult r;
  r.u = IntMatrix::identity(m.rows());
  r.v = IntMatrix::identity(m.cols());
  detail::smith_core(m, &r.u, &r.v);
  r.d = std::move(m);
  return r;
}

// Diagonal entries only (d1, d2, ..., d_min), without transform tracking.
inline std::vector<BigInt> smith_diagonal(IntMatrix m) {
  detail::smith_core(m, nullptr, nullptr);
  std::vector<BigInt> d;
  for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t) d.push_back(m.at(t, t));
  return d;
}

}  // namespace braidforge
