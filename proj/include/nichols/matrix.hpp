#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nichols/cyclotomic.hpp"

namespace nichols {

using Vector = std::vector<Cyclotomic>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Cyclotomic()) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("Matrix: entry count does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(1L);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<Cyclotomic>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_ints(const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<Cyclotomic>> r;
    for (const auto& row : rows) {
      std::vector<Cyclotomic> v;
      for (long x : row) v.emplace_back(x);
      r.push_back(std::move(v));
    }
    return from_rows(r);
  }

  // Columns given as vectors.
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Cyclotomic& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_identity() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const auto& x = (*this)(i, j);
        if (i == j ? !x.is_one() : !x.is_zero()) return false;
      }
    return true;
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  // The scalar when this is c·Id.
  std::optional<Cyclotomic> scalar_value() const {
    if (!is_square() || rows_ == 0) return std::nullopt;
    const Cyclotomic c = (*this)(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (i == j ? !((*this)(i, j) == c) : !(*this)(i, j).is_zero()) return std::nullopt;
    return c;
  }

  Cyclotomic trace() const {
    Cyclotomic t;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("Matrix product: shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t l = 0; l < x.cols_; ++l) {
        const Cyclotomic& a = x(i, l);
        if (a.is_zero()) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) {
          const Cyclotomic& b = y(l, j);
          if (!b.is_zero()) r(i, j) += a * b;
        }
      }
    return r;
  }

  friend Vector operator*(const Matrix& x, const Vector& v) {
    if (x.cols_ != v.size()) throw std::invalid_argument("Matrix-vector product: shape mismatch");
    Vector r(x.rows_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < x.cols_; ++j)
        if (!x(i, j).is_zero() && !v[j].is_zero()) r[i] += x(i, j) * v[j];
    return r;
  }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("Matrix sum: shape mismatch");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }

  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("Matrix difference: shape mismatch");
    Matrix r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
  }

  Matrix scaled(const Cyclotomic& c) const {
    Matrix r = *this;
    for (auto& x : r.a_)
      if (!x.is_zero()) x = x * c;
    return r;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  // Kronecker product.
  friend Matrix kron(const Matrix& x, const Matrix& y) {
    Matrix r(x.rows_ * y.rows_, x.cols_ * y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t j = 0; j < x.cols_; ++j) {
        if (x(i, j).is_zero()) continue;
        for (std::size_t p = 0; p < y.rows_; ++p)
          for (std::size_t q = 0; q < y.cols_; ++q)
            if (!y(p, q).is_zero()) r(i * y.rows_ + p, j * y.cols_ + q) = x(i, j) * y(p, q);
      }
    return r;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
    }
    return s + "]";
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Cyclotomic> a_;
};

inline Matrix matrix_power(const Matrix& m, long long e) {
  Matrix r = Matrix::identity(m.rows());
  Matrix b = m;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

inline bool commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
    const Cyclotomic inv = m(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m(row, j).is_zero()) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Cyclotomic f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// Scales v so that its first nonzero coordinate is 1.
inline Vector normalized(Vector v) {
  for (const auto& x : v) {
    if (x.is_zero()) continue;
    if (x.is_one()) return v;
    const Cyclotomic inv = x.inverse();
    for (auto& y : v)
      if (!y.is_zero()) y = y * inv;
    return v;
  }
  return v;
}

// Null-space basis from the reduced row echelon form, one vector per free column.
inline std::vector<Vector> kernel(const Matrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v(m.cols());
    v[f] = Cyclotomic(1L);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (!r(i, f).is_zero()) v[pivots[i]] = -r(i, f);
    basis.push_back(normalized(std::move(v)));
  }
  return basis;
}

struct EigenSpace {
  RootOfUnity value;
  std::vector<Vector> basis;
};

struct EigenDecomposition {
  int order = 1;
  std::vector<EigenSpace> spaces;

  std::size_t dimension() const {
    std::size_t d = 0;
    for (const auto& s : spaces) d += s.basis.size();
    return d;
  }
};

// Eigenspaces of an operator with M^ord = Id, probing λ = ζ_ord^0, ζ_ord^1, … in turn.
inline EigenDecomposition eigenspaces_finite_order(const Matrix& m, int ord) {
  if (!m.is_square()) throw std::invalid_argument("eigenspaces_finite_order: matrix is not square");
  if (ord < 1) throw std::invalid_argument("eigenspaces_finite_order: order must be positive");
  if (!matrix_power(m, ord).is_identity())
    throw std::invalid_argument("eigenspaces_finite_order: M^" + std::to_string(ord) + " is not the identity");
  EigenDecomposition out;
  out.order = ord;
  const std::size_t n = m.rows();
  std::size_t found = 0;
  for (int a = 0; a < ord && found < n; ++a) {
    const RootOfUnity z(ord, a);
    Matrix shifted = m;
    const Cyclotomic lam = Cyclotomic::root(z);
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lam;
    auto basis = kernel(shifted);
    if (basis.empty()) continue;
    found += basis.size();
    out.spaces.push_back({z.reduced(), std::move(basis)});
  }
  if (found != n) throw std::logic_error("eigenspaces_finite_order: eigenspaces do not fill the space");
  return out;
}

struct NonCommutingError : std::runtime_error {
  std::size_t first, second;
  NonCommutingError(std::size_t i, std::size_t j)
      : std::runtime_error("simultaneous_diagonalize: family members " + std::to_string(i) + " and " +
                           std::to_string(j) + " do not commute"),
        first(i),
        second(j) {}
};

struct SimultaneousEigenbasis {
  std::vector<Vector> basis;
  std::vector<std::vector<RootOfUnity>> eigenvalues;  // [member][basis index]
};

namespace detail {

// C with B·C = M·B, for B of full column rank whose span is M-invariant.
inline Matrix restrict_to_span(const Matrix& m, const Matrix& b) {
  const Matrix mb = m * b;
  Matrix aug(b.rows(), 2 * b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      aug(i, j) = b(i, j);
      aug(i, b.cols() + j) = mb(i, j);
    }
  auto [r, pivots] = rref(aug);
  if (pivots.size() != b.cols() || (!pivots.empty() && pivots.back() >= b.cols()))
    throw std::logic_error("restrict_to_span: span is not invariant under the operator");
  Matrix c(b.cols(), b.cols());
  for (std::size_t i = 0; i < b.cols(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = r(i, b.cols() + j);
  return c;
}

}  // namespace detail

// Common eigenbasis of a commuting family: split by the first member, then refine each piece
// by the next member, and so on.
inline SimultaneousEigenbasis simultaneous_diagonalize(const std::vector<Matrix>& family, const std::vector<int>& orders) {
  if (family.size() != orders.size()) throw std::invalid_argument("simultaneous_diagonalize: one order per member");
  if (family.empty()) throw std::invalid_argument("simultaneous_diagonalize: empty family");
  const std::size_t n = family[0].rows();
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (!commute(family[i], family[j])) throw NonCommutingError(i, j);

  struct Piece {
    Matrix basis;  // columns
    std::vector<RootOfUnity> values;
  };
  std::vector<Piece> pieces{{Matrix::identity(n), {}}};
  for (std::size_t f = 0; f < family.size(); ++f) {
    std::vector<Piece> next;
    for (auto& piece : pieces) {
      const Matrix c = detail::restrict_to_span(family[f], piece.basis);
      if (auto s = c.scalar_value()) {
        auto z = as_root_of_unity(*s);
        if (!z) throw std::logic_error("simultaneous_diagonalize: eigenvalue is not a root of unity");
        piece.values.push_back(*z);
        next.push_back(std::move(piece));
        continue;
      }
      auto dec = eigenspaces_finite_order(c, orders[f]);
      for (auto& sp : dec.spaces) {
        Matrix coords = Matrix::from_columns(sp.basis, c.rows());
        Piece q{piece.basis * coords, piece.values};
        q.values.push_back(sp.value);
        next.push_back(std::move(q));
      }
    }
    pieces = std::move(next);
  }

  SimultaneousEigenbasis out;
  out.eigenvalues.assign(family.size(), {});
  for (const auto& piece : pieces)
    for (std::size_t j = 0; j < piece.basis.cols(); ++j) {
      out.basis.push_back(normalized(piece.basis.column(j)));
      for (std::size_t f = 0; f < family.size(); ++f) out.eigenvalues[f].push_back(piece.values[f]);
    }
  return out;
}

}  // namespace nichols
