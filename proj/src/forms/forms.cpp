#include "strata/forms/forms.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace strata {

ProjRoot::ProjRoot(const FieldElement& alpha, const FieldElement& beta) {
  if (beta.is_zero()) {
    if (alpha.is_zero()) throw std::invalid_argument("(0 : 0) is not a point of the projective line");
    alpha_ = FieldElement(1);
    beta_ = FieldElement(0);
  } else {
    alpha_ = alpha / beta;
    beta_ = FieldElement(1);
  }
}

FieldPoly ProjRoot::linear_factor() const {
  FieldPoly p(2);
  p(0) = -alpha_;
  p(1) = beta_;
  return p;
}

std::string ProjRoot::to_string() const {
  if (is_infinity()) return "inf";
  return alpha_.to_string();
}

FactoredForm::FactoredForm(FieldElement scalar, std::vector<RootFactor> factors) : scalar_(std::move(scalar)) {
  if (scalar_.is_zero()) throw std::invalid_argument("a factored form needs a nonzero scalar");
  for (auto& rf : factors) {
    if (rf.mult < 0) throw std::invalid_argument("negative root multiplicity");
    if (rf.mult == 0) continue;
    auto it = std::find_if(factors_.begin(), factors_.end(), [&](const RootFactor& o) { return o.root == rf.root; });
    if (it != factors_.end()) {
      it->mult += rf.mult;
    } else {
      factors_.push_back(std::move(rf));
    }
  }
}

int FactoredForm::degree() const {
  int d = 0;
  for (const auto& rf : factors_) d += rf.mult;
  return d;
}

std::vector<int> FactoredForm::multiplicity_profile() const {
  std::vector<int> out;
  out.reserve(factors_.size());
  for (const auto& rf : factors_) out.push_back(rf.mult);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

int FactoredForm::multiplicity_of(const ProjRoot& root) const {
  for (const auto& rf : factors_) {
    if (rf.root == root) return rf.mult;
  }
  return 0;
}

FactoredForm FactoredForm::with_scalar(FieldElement s) const {
  FactoredForm out = *this;
  if (s.is_zero()) throw std::invalid_argument("a factored form needs a nonzero scalar");
  out.scalar_ = std::move(s);
  return out;
}

FactoredForm operator*(const FactoredForm& f, const FactoredForm& g) {
  std::vector<RootFactor> all = f.factors_;
  all.insert(all.end(), g.factors_.begin(), g.factors_.end());
  return FactoredForm(f.scalar_ * g.scalar_, std::move(all));
}

bool FactoredForm::same_roots(const FactoredForm& other) const {
  if (factors_.size() != other.factors_.size()) return false;
  for (const auto& rf : factors_) {
    if (other.multiplicity_of(rf.root) != rf.mult) return false;
  }
  return true;
}

BinaryForm expand(const FactoredForm& f) {
  FieldPoly acc = FieldPoly::Constant(1, f.scalar());
  for (const auto& rf : f.factors()) acc = poly_mul(acc, poly_pow(rf.root.linear_factor(), rf.mult));
  return BinaryForm{f.degree(), std::move(acc)};
}

BinaryForm multiply(const BinaryForm& f, const BinaryForm& g) {
  return BinaryForm{f.degree + g.degree, poly_mul(f.coeffs, g.coeffs)};
}

FactoredForm radical(const FactoredForm& f) {
  std::vector<RootFactor> out;
  out.reserve(f.factors().size());
  for (const auto& rf : f.factors()) out.push_back({rf.root, 1});
  return FactoredForm(FieldElement(1), std::move(out));
}

FactoredForm gcd_forms(std::span<const FactoredForm> fs) {
  if (fs.empty()) throw std::invalid_argument("gcd of an empty list");
  std::vector<RootFactor> out;
  for (const auto& rf : fs.front().factors()) {
    int m = rf.mult;
    for (const auto& g : fs.subspan(1)) m = std::min(m, g.multiplicity_of(rf.root));
    if (m > 0) out.push_back({rf.root, m});
  }
  return FactoredForm(FieldElement(1), std::move(out));
}

bool divides(const FactoredForm& g, const FactoredForm& f) {
  for (const auto& rf : g.factors()) {
    if (f.multiplicity_of(rf.root) < rf.mult) return false;
  }
  return true;
}

FactoredForm quotient(const FactoredForm& f, const FactoredForm& g) {
  if (!divides(g, f)) throw std::invalid_argument("quotient: divisor does not divide the form");
  std::vector<RootFactor> out;
  for (const auto& rf : f.factors()) {
    const int m = rf.mult - g.multiplicity_of(rf.root);
    if (m > 0) out.push_back({rf.root, m});
  }
  return FactoredForm(f.scalar() / g.scalar(), std::move(out));
}

FieldPoly wronskian(std::span<const FieldPoly> fs) {
  const auto k = static_cast<Eigen::Index>(fs.size());
  if (k == 0) throw std::invalid_argument("wronskian of an empty list");
  // derivs[i][j]: i-th derivative of the j-th function.
  std::vector<std::vector<FieldPoly>> derivs(static_cast<std::size_t>(k));
  long bound = -k * (k - 1) / 2;
  for (Eigen::Index j = 0; j < k; ++j) {
    const FieldPoly f = poly_trim(fs[static_cast<std::size_t>(j)]);
    if (f.size() == 0) return FieldPoly();
    bound += poly_degree(f);
  }
  if (bound < 0) return FieldPoly();
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = 0; j < k; ++j) {
      derivs[static_cast<std::size_t>(i)].push_back(
          i == 0 ? fs[static_cast<std::size_t>(j)] : poly_derivative(derivs[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)]));
    }
  }
  std::vector<FieldElement> xs, ys;
  for (long t = 0; t <= bound; ++t) {
    const FieldElement pt(t);
    FieldMatrix m(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) m(i, j) = poly_eval(derivs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], pt);
    }
    xs.push_back(pt);
    ys.push_back(exact_det(m));
  }
  return poly_interpolate(xs, ys);
}

ProjRoot mobius(const ProjRoot& p, const FieldElement& a, const FieldElement& b, const FieldElement& c,
                const FieldElement& d) {
  return ProjRoot(a * p.alpha() + b * p.beta(), c * p.alpha() + d * p.beta());
}

}  // namespace strata
