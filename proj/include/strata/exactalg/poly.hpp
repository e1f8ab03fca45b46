#pragma once

// Dense univariate polynomials stored as Eigen column vectors, constant
// term first. The zero polynomial is the empty vector after `poly_trim`.

#include <vector>

#include "strata/exactalg/matrix.hpp"

namespace strata {

template <typename Scalar>
using Poly = Vector<Scalar>;

using FieldPoly = Poly<FieldElement>;

template <typename Scalar>
Poly<Scalar> poly_trim(const Poly<Scalar>& p) {
  Eigen::Index n = p.size();
  while (n > 0 && is_zero(p(n - 1))) --n;
  return p.head(n);
}

template <typename Scalar>
int poly_degree(const Poly<Scalar>& p) {
  for (Eigen::Index i = p.size() - 1; i >= 0; --i) {
    if (!is_zero(p(i))) return static_cast<int>(i);
  }
  return -1;
}

template <typename Scalar>
Poly<Scalar> poly_mul(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  if (a.size() == 0 || b.size() == 0) return Poly<Scalar>();
  Poly<Scalar> out = Poly<Scalar>::Constant(a.size() + b.size() - 1, Scalar(0));
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (is_zero(a(i))) continue;
    for (Eigen::Index j = 0; j < b.size(); ++j) {
      if (!is_zero(b(j))) out(i + j) += a(i) * b(j);
    }
  }
  return out;
}

template <typename Scalar>
Poly<Scalar> poly_add(const Poly<Scalar>& a, const Poly<Scalar>& b) {
  const Eigen::Index n = std::max(a.size(), b.size());
  Poly<Scalar> out = Poly<Scalar>::Constant(n, Scalar(0));
  for (Eigen::Index i = 0; i < a.size(); ++i) out(i) += a(i);
  for (Eigen::Index i = 0; i < b.size(); ++i) out(i) += b(i);
  return out;
}

template <typename Scalar>
Poly<Scalar> poly_scale(const Poly<Scalar>& a, const Scalar& c) {
  Poly<Scalar> out = a;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) *= c;
  return out;
}

template <typename Scalar>
Poly<Scalar> poly_pow(const Poly<Scalar>& a, int e) {
  Poly<Scalar> out = Poly<Scalar>::Constant(1, Scalar(1));
  Poly<Scalar> base = a;
  while (e > 0) {
    if (e & 1) out = poly_mul(out, base);
    e >>= 1;
    if (e > 0) base = poly_mul(base, base);
  }
  return out;
}

template <typename Scalar>
Poly<Scalar> poly_derivative(const Poly<Scalar>& a) {
  if (a.size() <= 1) return Poly<Scalar>();
  Poly<Scalar> out(a.size() - 1);
  for (Eigen::Index i = 1; i < a.size(); ++i) out(i - 1) = a(i) * Scalar(static_cast<long>(i));
  return out;
}

template <typename Scalar>
Scalar poly_eval(const Poly<Scalar>& a, const Scalar& t) {
  Scalar acc(0);
  for (Eigen::Index i = a.size() - 1; i >= 0; --i) acc = acc * t + a(i);
  return acc;
}

/// The unique polynomial of degree < n through (xs[i], ys[i]) (Newton form).
template <typename Scalar>
Poly<Scalar> poly_interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  const std::size_t n = xs.size();
  std::vector<Scalar> dd = ys;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  Poly<Scalar> out = Poly<Scalar>::Constant(static_cast<Eigen::Index>(n), Scalar(0));
  for (std::size_t k = n; k-- > 0;) {
    // out = out * (t - xs[k]) + dd[k]
    for (std::size_t i = n - 1; i >= 1; --i) out(i) = out(i - 1) - xs[k] * out(i);
    out(0) = dd[k] - xs[k] * out(0);
  }
  return poly_trim(out);
}

}  // namespace strata
