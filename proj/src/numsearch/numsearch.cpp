#include "strata/numsearch/numsearch.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "strata/exactalg/matrix.hpp"
#include "strata/relations/constructions.hpp"

namespace strata {

namespace {

using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;

// Coefficients (constant first) of prod_j (x - z_j)^{m_j}.
CVec poly_from_roots(const std::vector<Complex>& z, const std::vector<int>& m) {
  std::vector<Complex> p{1.0};
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (int e = 0; e < m[j]; ++e) {
      std::vector<Complex> q(p.size() + 1, 0.0);
      for (std::size_t k = 0; k < p.size(); ++k) {
        q[k + 1] += p[k];
        q[k] -= z[j] * p[k];
      }
      p = std::move(q);
    }
  }
  return Eigen::Map<CVec>(p.data(), static_cast<Eigen::Index>(p.size()));
}

struct Eval {
  CMat f;                     // normalised terms as columns
  std::vector<double> norms;  // 2-norms before normalisation
  CVec c;
  double sigma_min = 0;
  double sigma_next = 0;  // second smallest singular value
};

Eval evaluate(const Partition& mu, int length, const std::vector<Complex>& z) {
  const int r = mu.size();
  const int d = mu.weight();
  Eval ev;
  ev.f.resize(d + 1, length);
  ev.norms.resize(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const std::vector<Complex> zi(z.begin() + i * r, z.begin() + (i + 1) * r);
    CVec col = poly_from_roots(zi, mu.parts());
    const double n = col.norm();
    ev.norms[static_cast<std::size_t>(i)] = n;
    ev.f.col(i) = col / n;
  }
  if (length > d + 1) {
    // More terms than dimensions: a null vector exists exactly.
    Eigen::FullPivLU<CMat> lu(ev.f);
    ev.c = lu.kernel().col(0).normalized();
    ev.sigma_min = (ev.f * ev.c).norm();
    ev.sigma_next = 0;
    return ev;
  }
  Eigen::JacobiSVD<CMat> svd(ev.f, Eigen::ComputeThinV);
  ev.c = svd.matrixV().col(length - 1);
  ev.sigma_min = svd.singularValues()(length - 1);
  ev.sigma_next = svd.singularValues()(length - 2);
  return ev;
}

double chordal(Complex a, Complex b) {
  return std::abs(a - b) / (std::sqrt(1 + std::norm(a)) * std::sqrt(1 + std::norm(b)));
}

// Bottleneck matching distance between two root tuples, matching only roots
// that carry equal multiplicities.
double term_distance(const Partition& mu, const std::vector<Complex>& u, const std::vector<Complex>& v) {
  std::vector<int> perm(u.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  double best = INFINITY;
  do {
    bool ok = true;
    double worst = 0;
    for (std::size_t i = 0; i < perm.size() && ok; ++i) {
      const auto j = static_cast<std::size_t>(perm[i]);
      if (mu.parts()[i] != mu.parts()[j]) ok = false;
      else worst = std::max(worst, chordal(u[i], v[j]));
    }
    if (ok) best = std::min(best, worst);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Smallest sine of the angle between two normalised terms: the distance of
// the corresponding points of projective space.
double form_separation(const CMat& f) {
  double sep = INFINITY;
  for (Eigen::Index i = 0; i < f.cols(); ++i) {
    for (Eigen::Index j = i + 1; j < f.cols(); ++j) {
      const double overlap = std::abs(f.col(i).dot(f.col(j)));
      sep = std::min(sep, std::sqrt(std::max(0.0, 1 - overlap * overlap)));
    }
  }
  return sep;
}

std::vector<std::vector<Complex>> unflatten(const std::vector<Complex>& z, int length, int r) {
  std::vector<std::vector<Complex>> out;
  for (int i = 0; i < length; ++i) out.emplace_back(z.begin() + i * r, z.begin() + (i + 1) * r);
  return out;
}

// Moebius-normalises the roots so that the distinct ones, viewed as points of
// the unit sphere, have their barycentre at the origin. Relations are
// invariant under Moebius maps, but the residual is not: without a fixed
// frame the iteration drives all roots into a shrinking cluster, where any
// few forms look dependent.
void balance(std::vector<Complex>& z) {
  using V3 = Eigen::Vector3d;
  std::vector<V3> pts;
  pts.reserve(z.size());
  for (const Complex& w : z) {
    if (!std::isfinite(std::abs(w))) {
      pts.emplace_back(0, 0, 1);
      continue;
    }
    const double n = std::norm(w);
    pts.push_back(V3(2 * w.real(), 2 * w.imag(), n - 1) / (n + 1));
  }
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    bool seen = false;
    for (std::size_t k : reps) seen = seen || (pts[i] - pts[k]).norm() < 1e-9;
    if (!seen) reps.push_back(i);
  }
  for (int iter = 0; iter < 200; ++iter) {
    V3 b = V3::Zero();
    for (std::size_t k : reps) b += pts[k];
    b /= static_cast<double>(reps.size());
    // A roughly balanced frame is enough: it only has to stop the collapse.
    if (b.norm() < 1e-3) break;
    // The ball automorphism sending a to 0, restricted to the sphere.
    V3 a = 0.7 * b;
    if (a.norm() > 0.9) a *= 0.9 / a.norm();
    const double aa = a.squaredNorm();
    for (auto& x : pts) {
      const V3 num = (1 - aa) * (x - a) - (x - a).squaredNorm() * a;
      x = num / (1 - 2 * a.dot(x) + aa);
      x.normalize();
    }
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    const V3& x = pts[i];
    z[i] = Complex(x.x(), x.y()) / std::max(1 - x.z(), 1e-14);
  }
}

struct RestartOutcome {
  std::vector<Complex> z;
  Eval ev;
  int iterations = 0;
};

RestartOutcome run_restart(const Partition& mu, int length, const SearchOptions& opt, std::uint64_t restart) {
  const int r = mu.size();
  const int d = mu.weight();
  const int n = length * r;
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(restart), static_cast<std::uint32_t>(restart >> 32)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);
  RestartOutcome out;
  out.z.resize(static_cast<std::size_t>(n));
  for (auto& x : out.z) x = Complex(gauss(rng), gauss(rng));
  balance(out.z);
  out.ev = evaluate(mu, length, out.z);

  double lambda = 1e-3;
  const double stop = opt.accept_tol * 1e-3;
  CMat jac(d + 1, n);
  for (int it = 0; it < opt.max_iterations; ++it) {
    out.iterations = it;
    if (out.ev.sigma_min < stop) break;
    // Give up on restarts that are clearly not converging.
    if ((it == 25 && out.ev.sigma_min > 1e-2) || (it == 60 && out.ev.sigma_min > 1e-5)) break;

    // d/dz_ij of c_i f_i / |f_i| with the scale frozen: -m_j c_i g_ij / |f_i|,
    // g_ij = f_i / (x - z_ij).
    for (int i = 0; i < length; ++i) {
      const std::vector<Complex> zi(out.z.begin() + i * r, out.z.begin() + (i + 1) * r);
      for (int j = 0; j < r; ++j) {
        std::vector<int> m = mu.parts();
        --m[static_cast<std::size_t>(j)];
        CVec g = CVec::Zero(d + 1);
        g.head(d) = poly_from_roots(zi, m);
        jac.col(i * r + j) = g * (-static_cast<double>(mu[j]) * out.ev.c(i) / out.ev.norms[static_cast<std::size_t>(i)]);
      }
    }
    const CVec res = out.ev.f * out.ev.c;
    const CMat a = jac.adjoint() * jac;
    const CVec g = jac.adjoint() * res;
    const double scale = std::max(a.diagonal().real().maxCoeff(), 1e-30);
    bool accepted = false;
    for (int tries = 0; tries < 12 && !accepted; ++tries) {
      CMat damped = a;
      damped.diagonal().array() += lambda * scale;
      const CVec delta = damped.ldlt().solve(-g);
      std::vector<Complex> trial = out.z;
      for (int k = 0; k < n; ++k) trial[static_cast<std::size_t>(k)] += delta(k);
      balance(trial);
      Eval ev = evaluate(mu, length, trial);
      if (std::isfinite(ev.sigma_min) && ev.sigma_min < out.ev.sigma_min) {
        out.z = std::move(trial);
        out.ev = std::move(ev);
        lambda = std::max(lambda / 3, 1e-12);
        accepted = true;
      } else {
        lambda *= 4;
      }
    }
    if (!accepted) break;
  }
  return out;
}

}  // namespace

double candidate_separation(const Partition& mu, const std::vector<std::vector<Complex>>& roots) {
  double sep = INFINITY;
  for (const auto& t : roots) {
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = a + 1; b < t.size(); ++b) sep = std::min(sep, chordal(t[a], t[b]));
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) sep = std::min(sep, term_distance(mu, roots[i], roots[j]));
  }
  return sep;
}

Candidate evaluate_candidate(const Partition& mu, const std::vector<std::vector<Complex>>& roots,
                             const std::vector<Complex>& coeffs) {
  Candidate c;
  c.mu = mu;
  c.length = static_cast<int>(roots.size());
  c.roots = roots;
  c.coeffs = coeffs;
  std::vector<Complex> flat;
  for (const auto& t : roots) flat.insert(flat.end(), t.begin(), t.end());
  const Eval ev = evaluate(mu, c.length, flat);
  const CVec cv = Eigen::Map<const CVec>(coeffs.data(), static_cast<Eigen::Index>(coeffs.size()));
  const CVec res = ev.f * cv;
  c.residual = res.cwiseAbs().maxCoeff();
  c.residual_l2 = res.norm();
  c.sigma_next = ev.sigma_next;
  // Scale against the two ways a near-relation degenerates: a term whose
  // coefficient is nearly zero, and terms that nearly coincide.
  double scale = INFINITY;
  for (const Complex& x : coeffs) scale = std::min(scale, std::abs(x));
  if (c.length <= mu.weight() + 1) scale = std::min(scale, ev.sigma_next);
  c.relative_residual = scale > 0 ? c.residual / scale : INFINITY;
  c.separation = std::min(candidate_separation(mu, roots), form_separation(ev.f));
  return c;
}

SearchResult search_relation(const Partition& mu, int length, const SearchOptions& opt) {
  if (length < 3) throw std::invalid_argument("relation length must be at least 3");
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  SearchResult out;
  for (std::uint64_t k = 0; k < opt.restarts; ++k) {
    if (opt.time_limit_seconds > 0 && elapsed() > opt.time_limit_seconds) break;
    const RestartOutcome ro = run_restart(mu, length, opt, k);
    ++out.restarts_run;
    std::vector<Complex> coeffs(ro.ev.c.data(), ro.ev.c.data() + ro.ev.c.size());
    Candidate c = evaluate_candidate(mu, unflatten(ro.z, length, mu.size()), coeffs);
    c.seed = opt.seed;
    c.restart = k;
    c.iterations = ro.iterations;
    if (!(c.separation >= opt.separation) || !std::isfinite(c.residual)) continue;
    if (!out.best || c.relative_residual < out.best->relative_residual) out.best = c;
    if (c.residual < opt.accept_tol && c.relative_residual < opt.accept_tol) {
      out.found = std::move(c);
      break;
    }
  }
  out.seconds = elapsed();
  return out;
}

Complex to_complex(const FieldElement& x) {
  const auto& field = x.field();
  if (!field || field->degree() == 1 || x.is_rational()) return Complex(x.rational_part().get_d(), 0.0);
  const RationalPoly& m = field->monic_min_poly();
  if (field->degree() != 2 || sgn(m[1]) != 0) throw std::invalid_argument("to_complex: only Q(sqrt D) is supported");
  const double dd = -m[0].get_d();
  const Complex root = dd >= 0 ? Complex(std::sqrt(dd), 0) : Complex(0, std::sqrt(-dd));
  const auto& k = x.coeffs();
  return Complex(k[0].get_d(), 0) + Complex(k.size() > 1 ? k[1].get_d() : 0.0, 0) * root;
}

namespace {

constexpr double kSnapTol = 1e-6;
// Every real is within 1/q^2 of a convergent with denominator q, so rational
// snapping needs a much tighter tolerance and a smaller height than the
// quadratic one, or quadratic irrationals get snapped to fractions.
constexpr double kRationalTol = 1e-9;
constexpr long kMaxDenominator = 1000;

struct Snapped {
  bool infinite = false;
  Rational rational;                     // value when quadratic is unset
  bool quadratic = false;
  Rational base, coef;                   // base + coef * sqrt(D)
};

std::optional<Rational> snap_rational(double v) {
  // Continued-fraction convergents up to denominator kMaxDenominator.
  double x = v;
  Integer h0 = 1, h1 = 0, k0 = 0, k1 = 1;
  for (int i = 0; i < 40; ++i) {
    const double a = std::floor(x);
    if (std::abs(a) > 1e12) break;
    const Integer ai(static_cast<long>(a));
    const Integer h2 = ai * h0 + h1, k2 = ai * k0 + k1;
    h1 = h0;
    h0 = h2;
    k1 = k0;
    k0 = k2;
    if (k0 > kMaxDenominator) break;
    Rational q(h0, k0);
    q.canonicalize();
    if (std::abs(q.get_d() - v) < kRationalTol * (1 + std::abs(v))) return q;
    const double frac = x - a;
    if (frac < 1e-15) break;
    x = 1 / frac;
  }
  return std::nullopt;
}

// w as a root of a w^2 + b w + c with small integers, in Q(sqrt D).
std::optional<Snapped> snap_quadratic(Complex w, std::optional<Integer>& disc_class) {
  for (int a = 1; a <= 12; ++a) {
    for (int b = -30; b <= 30; ++b) {
      const Complex cc = -(double(a) * w * w + double(b) * w);
      const double cr = std::round(cc.real());
      if (std::abs(cc.imag()) > kSnapTol * (1 + std::abs(w) * std::abs(w)) ||
          std::abs(cc.real() - cr) > kSnapTol * (1 + std::abs(w) * std::abs(w)) || std::abs(cr) > 500) {
        continue;
      }
      const Integer disc = Integer(b) * b - Integer(4) * a * static_cast<long>(cr);
      if (disc == 0) continue;
      Integer s;
      const Integer sq = squarefree_part(disc, &s);
      if (sq == 1) continue;  // rational root: handled elsewhere
      if (disc_class && *disc_class != sq) continue;
      const double root = sq > 0 ? std::sqrt(sq.get_d()) : std::sqrt(-sq.get_d());
      const Complex sqrt_d = sq > 0 ? Complex(root, 0) : Complex(0, root);
      for (int sign : {1, -1}) {
        Snapped out;
        out.quadratic = true;
        out.base = Rational(-b, 2 * a);
        out.base.canonicalize();
        out.coef = Rational(Integer(sign) * s, Integer(2 * a));
        out.coef.canonicalize();
        const Complex value = out.base.get_d() + out.coef.get_d() * sqrt_d;
        if (std::abs(value - w) < 1e-5 * (1 + std::abs(w))) {
          disc_class = sq;
          return out;
        }
      }
    }
  }
  return std::nullopt;
}

struct Cluster {
  Complex value;
  bool infinite = false;
};

std::optional<SecantRelation> exactify_frame(const Candidate& cand, const std::vector<Cluster>& clusters,
                                             const std::vector<std::vector<int>>& label, int ia, int ib, int ic,
                                             double sign) {
  // T sends cluster ia to infinity, ib to 0 and ic to sign.
  const Complex A = clusters[static_cast<std::size_t>(ia)].value;
  const Complex B = clusters[static_cast<std::size_t>(ib)].value;
  const Complex C = clusters[static_cast<std::size_t>(ic)].value;
  const bool a_inf = clusters[static_cast<std::size_t>(ia)].infinite;
  auto T = [&](std::size_t idx) -> std::optional<Complex> {
    if (static_cast<int>(idx) == ia) return std::nullopt;
    const Cluster& cl = clusters[idx];
    if (cl.infinite) return sign * (C - A) / (C - B);  // only reached when A is finite
    if (a_inf) return sign * (cl.value - B) / (C - B);
    return sign * (cl.value - B) * (C - A) / ((cl.value - A) * (C - B));
  };

  std::optional<Integer> disc_class;
  std::vector<Snapped> snaps(clusters.size());
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    const auto w = T(k);
    if (!w) {
      snaps[k].infinite = true;
      continue;
    }
    if (std::abs(w->imag()) < kSnapTol * (1 + std::abs(*w))) {
      if (auto q = snap_rational(w->real())) {
        snaps[k].rational = *q;
        continue;
      }
    }
    auto sq = snap_quadratic(*w, disc_class);
    if (!sq) return std::nullopt;
    snaps[k] = *sq;
  }

  const FieldPtr field = disc_class ? NumberField::quadratic(*disc_class) : NumberField::rationals();
  auto exact_root = [&](const Snapped& s) {
    if (s.infinite) return ProjRoot::infinity();
    if (!s.quadratic) return ProjRoot::affine(FieldElement(s.rational));
    return ProjRoot::affine(FieldElement(field, RationalPoly{s.base, s.coef}));
  };

  const int length = cand.length;
  const int d = cand.mu.weight();
  std::vector<FactoredForm> forms;
  for (int i = 0; i < length; ++i) {
    std::vector<RootFactor> factors;
    for (int j = 0; j < cand.mu.size(); ++j) {
      factors.push_back({exact_root(snaps[static_cast<std::size_t>(label[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])]),
                         cand.mu[j]});
    }
    FactoredForm f(FieldElement(1), std::move(factors));
    if (f.root_count() != cand.mu.size()) return std::nullopt;
    forms.push_back(std::move(f));
  }
  FieldMatrix m = FieldMatrix::Constant(d + 1, length, FieldElement(0));
  for (int i = 0; i < length; ++i) m.col(i) = expand(forms[static_cast<std::size_t>(i)]).coeffs;
  const auto basis = exact_nullspace(m);
  if (basis.empty()) return std::nullopt;
  // Prefer a null vector using every term.
  const FieldVector* pick = &basis.front();
  int best_support = -1;
  for (const auto& v : basis) {
    int support = 0;
    for (Eigen::Index i = 0; i < v.size(); ++i) support += !v(i).is_zero();
    if (support > best_support) {
      best_support = support;
      pick = &v;
    }
  }
  const FieldVector v = normalize_coefficients(*pick);
  SecantRelation rel;
  rel.field = field;
  rel.mu = cand.mu;
  for (int i = 0; i < length; ++i) {
    if (!v(i).is_zero()) rel.terms.push_back({v(i), forms[static_cast<std::size_t>(i)]});
  }
  if (!verify_relation(rel)) return std::nullopt;
  return rel;
}

}  // namespace

std::optional<SecantRelation> exactify(const Candidate& cand) {
  // Cluster the roots of all terms; coinciding roots must stay coinciding.
  std::vector<Cluster> clusters;
  std::vector<std::vector<int>> label;
  for (const auto& term : cand.roots) {
    std::vector<int> row;
    for (const Complex& z : term) {
      const bool inf = !std::isfinite(std::abs(z)) || std::abs(z) > 1e7;
      int found = -1;
      for (std::size_t k = 0; k < clusters.size() && found < 0; ++k) {
        if (inf && clusters[k].infinite) found = static_cast<int>(k);
        else if (!inf && !clusters[k].infinite && std::abs(clusters[k].value - z) < 1e-6 * (1 + std::abs(z)))
          found = static_cast<int>(k);
      }
      if (found < 0) {
        clusters.push_back({inf ? Complex(0) : z, inf});
        found = static_cast<int>(clusters.size()) - 1;
      }
      row.push_back(found);
    }
    label.push_back(std::move(row));
  }
  // Clusters shared by several terms first: they are the natural frame points.
  std::vector<int> usage(clusters.size(), 0);
  for (const auto& row : label) {
    for (int k : row) ++usage[static_cast<std::size_t>(k)];
  }
  std::vector<int> order(clusters.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return usage[x] > usage[y]; });
  const std::size_t frame = std::min<std::size_t>(order.size(), 8);

  for (std::size_t x = 0; x < frame; ++x) {
    for (std::size_t y = 0; y < frame; ++y) {
      for (std::size_t z = 0; z < frame; ++z) {
        if (x == y || y == z || x == z) continue;
        const int ia = order[x], ib = order[y], ic = order[z];
        if (clusters[static_cast<std::size_t>(ib)].infinite || clusters[static_cast<std::size_t>(ic)].infinite) continue;
        for (double sign : {1.0, -1.0}) {
          if (auto rel = exactify_frame(cand, clusters, label, ia, ib, ic, sign)) return rel;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace strata
