#pragma once

// Exact dense linear algebra on Eigen containers.
//
// The algorithms are templated on the scalar. They only need ring operations,
// an exact `operator/`, and `strata::is_zero`. All elimination is
// fraction-free (Bareiss): every intermediate entry is a minor of the input,
// so the division by the previous pivot is always exact.

#include <Eigen/Core>

#include <utility>
#include <vector>

#include "strata/exactalg/number_field.hpp"

namespace Eigen {

template <>
struct NumTraits<strata::FieldElement> : GenericNumTraits<strata::FieldElement> {
  using Real = strata::FieldElement;
  using NonInteger = strata::FieldElement;
  using Literal = strata::FieldElement;
  using Nested = strata::FieldElement;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Literal = mpq_class;
  using Nested = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace strata {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using FieldMatrix = Matrix<FieldElement>;
using FieldVector = Vector<FieldElement>;

/// Fraction-free row echelon form, computed in place.
template <typename Scalar>
struct Echelon {
  Matrix<Scalar> rows;              // echelon form (row space equals the input's)
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  int sign = 1;                      // parity of the row swaps performed
};

template <typename Derived>
Echelon<typename Derived::Scalar> fraction_free_echelon(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Echelon<Scalar> e;
  e.rows = input;
  Matrix<Scalar>& m = e.rows;
  const Eigen::Index n_rows = m.rows();
  const Eigen::Index n_cols = m.cols();
  Scalar prev(1);
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < n_cols && row < n_rows; ++col) {
    Eigen::Index p = row;
    while (p < n_rows && is_zero(m(p, col))) ++p;
    if (p == n_rows) continue;
    if (p != row) {
      m.row(p).swap(m.row(row));
      e.sign = -e.sign;
    }
    const Scalar pivot = m(row, col);
    for (Eigen::Index i = row + 1; i < n_rows; ++i) {
      const Scalar factor = m(i, col);
      for (Eigen::Index j = col + 1; j < n_cols; ++j) {
        m(i, j) = (pivot * m(i, j) - factor * m(row, j)) / prev;
      }
      m(i, col) = Scalar(0);
    }
    prev = pivot;
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

/// Exact determinant by Bareiss elimination.
template <typename Derived>
typename Derived::Scalar exact_det(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  eigen_assert(input.rows() == input.cols());
  const Eigen::Index n = input.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = input;
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return Scalar(0);
    if (p != k) {
      m.row(p).swap(m.row(k));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return sign < 0 ? Scalar(-det) : det;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& input) {
  return static_cast<Eigen::Index>(fraction_free_echelon(input).pivots.size());
}

/// Basis of the right nullspace {v : M v = 0}, one vector per free column,
/// each with a 1 in its free coordinate.
template <typename Derived>
std::vector<Vector<typename Derived::Scalar>> exact_nullspace(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Echelon<Scalar> e = fraction_free_echelon(input);
  const Eigen::Index n_cols = input.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n_cols), false);
  for (Eigen::Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vector<Scalar>> basis;
  for (Eigen::Index free = 0; free < n_cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vector<Scalar> v = Vector<Scalar>::Constant(n_cols, Scalar(0));
    v(free) = Scalar(1);
    for (Eigen::Index i = static_cast<Eigen::Index>(e.pivots.size()) - 1; i >= 0; --i) {
      const Eigen::Index pc = e.pivots[static_cast<std::size_t>(i)];
      Scalar acc(0);
      for (Eigen::Index j = pc + 1; j < n_cols; ++j) {
        if (!is_zero(v(j))) acc += e.rows(i, j) * v(j);
      }
      v(pc) = is_zero(acc) ? Scalar(0) : Scalar(-acc / e.rows(i, pc));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// M * v with exact scalars (avoids Eigen's product kernels, which assume
/// cheap scalar copies).
template <typename DerivedM, typename DerivedV>
Vector<typename DerivedM::Scalar> exact_mul(const Eigen::MatrixBase<DerivedM>& m,
                                            const Eigen::MatrixBase<DerivedV>& v) {
  using Scalar = typename DerivedM::Scalar;
  eigen_assert(m.cols() == v.rows());
  Vector<Scalar> out = Vector<Scalar>::Constant(m.rows(), Scalar(0));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!is_zero(m(i, j)) && !is_zero(v(j))) out(i) += m(i, j) * v(j);
    }
  }
  return out;
}

template <typename Derived>
bool is_zero_vector(const Eigen::MatrixBase<Derived>& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!is_zero(v(i))) return false;
  }
  return true;
}

}  // namespace strata
