#pragma once

// Dense linear algebra over the prime field GF(p) on top of Eigen integer
// matrices. Entries are kept in [0, p) between calls; every routine takes
// the prime explicitly so one matrix type serves all characteristics.

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

namespace ghostnum::fp {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Scalar = std::int64_t;
using FpMatrix = Matrix<Scalar>;
using FpVector = Vector<Scalar>;

template <typename T>
constexpr T mod(T value, T p) {
  T r = value % p;
  return r < 0 ? r + p : r;
}

template <typename T>
constexpr T inverse(T a, T p) {
  // extended Euclid; a must be a unit mod p
  T t = 0, new_t = 1, r = p, new_r = mod(a, p);
  while (new_r != 0) {
    T q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return mod(t, p);
}

template <typename Derived>
Matrix<typename Derived::Scalar> reduced(const Eigen::MatrixBase<Derived>& m,
                                         typename Derived::Scalar p) {
  using S = typename Derived::Scalar;
  return m.unaryExpr([p](S v) { return mod(v, p); });
}

template <typename A, typename B>
Matrix<typename A::Scalar> multiply(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b,
                                    typename A::Scalar p) {
  return reduced(a * b, p);
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar p) {
  using S = typename Derived::Scalar;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (mod<S>(m(i, j), p) != 0) return false;
  return true;
}

// Brings m to reduced row-echelon form in place and returns the pivot
// columns in increasing order. Rows past the rank are zero afterwards.
template <typename Derived>
std::vector<Index> rref_in_place(Eigen::MatrixBase<Derived>& m, typename Derived::Scalar p) {
  using S = typename Derived::Scalar;
  m = m.unaryExpr([p](S v) { return mod(v, p); });
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index sel = -1;
    for (Index r = row; r < m.rows(); ++r)
      if (m(r, col) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const S inv = inverse<S>(m(row, col), p);
    m.row(row) = m.row(row).unaryExpr([inv, p](S v) { return mod<S>(v * inv, p); });
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const S factor = m(r, col);
      m.row(r) = (m.row(r) - factor * m.row(row)).unaryExpr([p](S v) { return mod(v, p); });
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Matrix<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m,
                                      typename Derived::Scalar p) {
  Matrix<typename Derived::Scalar> out = m;
  rref_in_place(out, p);
  return out;
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m, typename Derived::Scalar p) {
  Matrix<typename Derived::Scalar> work = m;
  return static_cast<Index>(rref_in_place(work, p).size());
}

// Basis of the row space, as the nonzero rows of the RREF.
template <typename Derived>
Matrix<typename Derived::Scalar> row_space(const Eigen::MatrixBase<Derived>& m,
                                           typename Derived::Scalar p) {
  Matrix<typename Derived::Scalar> work = m;
  const auto pivots = rref_in_place(work, p);
  return work.topRows(static_cast<Index>(pivots.size()));
}

// Columns form a basis of {v : m v = 0}.
template <typename Derived>
Matrix<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m,
                                           typename Derived::Scalar p) {
  using S = typename Derived::Scalar;
  Matrix<S> work = m;
  const auto pivots = rref_in_place(work, p);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  Matrix<S> basis = Matrix<S>::Zero(m.cols(), static_cast<Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Index f = free_cols[k];
    basis(f, static_cast<Index>(k)) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      basis(pivots[r], static_cast<Index>(k)) = mod<S>(-work(static_cast<Index>(r), f), p);
  }
  return basis;
}

// Columns form a basis of the column space of m.
template <typename Derived>
Matrix<typename Derived::Scalar> column_space(const Eigen::MatrixBase<Derived>& m,
                                              typename Derived::Scalar p) {
  return row_space(m.transpose(), p).transpose();
}

template <typename Derived>
Matrix<typename Derived::Scalar> power(const Eigen::MatrixBase<Derived>& m, int exponent,
                                       typename Derived::Scalar p) {
  using S = typename Derived::Scalar;
  Matrix<S> result = Matrix<S>::Identity(m.rows(), m.cols());
  Matrix<S> base = reduced(m, p);
  while (exponent > 0) {
    if (exponent & 1) result = multiply(result, base, p);
    base = multiply(base, base, p);
    exponent >>= 1;
  }
  return result;
}

// Column-major flattening, so a map F between spaces becomes a vector that
// can be stacked with others for span/membership tests.
template <typename Derived>
Vector<typename Derived::Scalar> flatten(const Eigen::MatrixBase<Derived>& m) {
  Matrix<typename Derived::Scalar> copy = m;
  return Eigen::Map<const Vector<typename Derived::Scalar>>(copy.data(), copy.size());
}

}  // namespace ghostnum::fp
