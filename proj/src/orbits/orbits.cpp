#include "strata/orbits/orbits.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

#include "strata/exactalg/matrix.hpp"
#include "strata/relations/constructions.hpp"

namespace strata {

namespace {

FieldPtr field_of(const std::vector<ProjRoot>& roots) {
  for (const auto& p : roots) {
    if (p.alpha().field()) return p.alpha().field();
    if (p.beta().field()) return p.beta().field();
  }
  return NumberField::rationals();
}

std::string roots_string(const std::vector<ProjRoot>& roots) {
  std::string s = "{";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) s += ", ";
    s += roots[i].to_string();
  }
  return s + "}";
}

// Row-reduced basis with unit pivots, for independence tests.
class RowBasis {
 public:
  // Adds v if it is independent of the rows so far.
  bool add(FieldVector v) {
    reduce(v);
    Eigen::Index p = 0;
    while (p < v.size() && v(p).is_zero()) ++p;
    if (p == v.size()) return false;
    const FieldElement inv = v(p).inverse();
    for (Eigen::Index j = p; j < v.size(); ++j) {
      if (!v(j).is_zero()) v(j) *= inv;
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  bool in_span(FieldVector v) const {
    reduce(v);
    return is_zero_vector(v);
  }
  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<FieldVector> rows_;
  std::vector<Eigen::Index> pivots_;

  void reduce(FieldVector& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const FieldElement c = v(pivots_[k]);
      if (c.is_zero()) continue;
      const FieldVector& row = rows_[k];
      for (Eigen::Index j = pivots_[k]; j < v.size(); ++j) {
        if (!row(j).is_zero()) v(j) -= c * row(j);
      }
    }
  }
};

SecantRelation relation_from_subset(const OrbitMatrix& om, const std::vector<int>& subset) {
  const Eigen::Index n = om.matrix.cols();
  FieldMatrix cols(n, static_cast<Eigen::Index>(subset.size()));
  for (std::size_t j = 0; j < subset.size(); ++j) {
    cols.col(static_cast<Eigen::Index>(j)) = om.matrix.row(subset[j]).transpose();
  }
  const auto basis = exact_nullspace(cols);
  if (basis.size() != 1) throw std::logic_error("orbit circuit with nullity != 1");
  const FieldVector v = normalize_coefficients(basis.front());
  SecantRelation rel;
  rel.field = om.field;
  rel.mu = om.mu;
  for (std::size_t j = 0; j < subset.size(); ++j) {
    rel.terms.push_back({v(static_cast<Eigen::Index>(j)), om.form(subset[j])});
  }
  if (const Verdict verdict = verify_relation(rel); !verdict) {
    throw std::logic_error("orbit relation failed verification: " + verdict.diagnostic);
  }
  return rel;
}

// Depth-first search for a dependent k-subset whose proper prefixes are all
// independent. Returns false once the budget is exhausted.
bool circuit_dfs(const OrbitMatrix& om, int k, int start, RowBasis& basis, std::vector<int>& chosen,
                 std::uint64_t& visited, std::uint64_t budget, std::optional<std::vector<int>>& found) {
  const int n = om.rows();
  for (int i = start; i < n && !found; ++i) {
    if (++visited > budget) return false;
    const FieldVector row = om.matrix.row(i).transpose();
    if (static_cast<int>(chosen.size()) + 1 == k) {
      if (basis.in_span(row)) {
        found = chosen;
        found->push_back(i);
      }
      continue;
    }
    if (n - i < k - static_cast<int>(chosen.size())) break;
    if (!basis.add(row)) continue;
    chosen.push_back(i);
    const bool ok = circuit_dfs(om, k, i + 1, basis, chosen, visited, budget, found);
    chosen.pop_back();
    basis.pop();
    if (!ok) return false;
  }
  return true;
}

// The first row that depends on its predecessors, with the circuit it closes.
std::optional<std::vector<int>> first_circuit(const OrbitMatrix& om) {
  RowBasis basis;
  std::vector<int> independent;
  for (int i = 0; i < om.rows(); ++i) {
    const FieldVector row = om.matrix.row(i).transpose();
    if (basis.add(row)) {
      independent.push_back(i);
      continue;
    }
    std::vector<int> all = independent;
    all.push_back(i);
    const Eigen::Index n = om.matrix.cols();
    FieldMatrix cols(n, static_cast<Eigen::Index>(all.size()));
    for (std::size_t j = 0; j < all.size(); ++j) {
      cols.col(static_cast<Eigen::Index>(j)) = om.matrix.row(all[j]).transpose();
    }
    const FieldVector v = exact_nullspace(cols).front();
    std::vector<int> support;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (!v(static_cast<Eigen::Index>(j)).is_zero()) support.push_back(all[j]);
    }
    return support;
  }
  return std::nullopt;
}

// Cyclotomic polynomial Phi_n over Q.
RationalPoly cyclotomic(int n) {
  RationalPoly p(static_cast<std::size_t>(n) + 1, Rational(0));
  p.front() = -1;
  p.back() = 1;
  for (int m = 1; m < n; ++m) {
    if (n % m != 0) continue;
    RationalPoly q, rem;
    rpoly::divmod(p, cyclotomic(m), q, rem);
    p = q;
  }
  return p;
}

std::vector<ProjRoot> roots_of_unity(int n, int count) {
  const FieldPtr k = NumberField::make(cyclotomic(n));
  const FieldElement zeta = FieldElement::generator(k);
  std::vector<ProjRoot> out;
  FieldElement w = FieldElement(1).in(k);
  for (int i = 0; i < count; ++i) {
    out.push_back(ProjRoot::affine(w));
    w *= zeta;
  }
  return out;
}

Classification growing(std::string rule) {
  Classification c;
  c.kind = IndexKind::Growing;
  c.rule = std::move(rule);
  return c;
}

}  // namespace

FactoredForm OrbitMatrix::form(int i) const {
  std::vector<RootFactor> factors;
  const auto& arr = arrangements[static_cast<std::size_t>(i)];
  for (std::size_t j = 0; j < roots.size(); ++j) factors.push_back({roots[j], arr[j]});
  return FactoredForm(FieldElement(1), std::move(factors));
}

OrbitMatrix orbit_matrix(const Partition& mu, const std::vector<ProjRoot>& roots) {
  if (static_cast<int>(roots.size()) != mu.size()) {
    throw DuplicateRoots("expected " + std::to_string(mu.size()) + " roots, got " + std::to_string(roots.size()));
  }
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (roots[i] == roots[j]) throw DuplicateRoots("root " + roots[i].to_string() + " repeated");
    }
  }
  OrbitMatrix om;
  om.mu = mu;
  om.roots = roots;
  om.field = field_of(roots);
  om.arrangements = arrangements(mu);
  const int d = mu.weight();
  om.matrix = FieldMatrix::Constant(om.rows(), d + 1, FieldElement(0));
  for (int i = 0; i < om.rows(); ++i) {
    om.matrix.row(i) = expand(om.form(i)).coeffs.transpose();
  }
  return om;
}

int orbit_rank(const OrbitMatrix& om) { return static_cast<int>(exact_rank(om.matrix)); }

std::vector<ProjRoot> affine_roots(const std::vector<Rational>& values) {
  std::vector<ProjRoot> out;
  for (const auto& v : values) out.push_back(ProjRoot::affine(FieldElement(v)));
  return out;
}

std::vector<ProjRoot> symmetric_integer_roots(int n) {
  std::vector<Rational> values;
  for (int i = 0; static_cast<int>(values.size()) < n; ++i) {
    if (i == 0) {
      values.emplace_back(0);
      continue;
    }
    values.emplace_back(i);
    if (static_cast<int>(values.size()) < n) values.emplace_back(-i);
  }
  return affine_roots(values);
}

std::optional<SecantRelation> find_common_radical_relation(const OrbitMatrix& om, int max_len,
                                                           std::uint64_t budget) {
  const int n = om.rows();
  const int rank = orbit_rank(om);
  if (rank == n) return std::nullopt;
  const int longest = std::min(max_len, rank + 1);
  std::uint64_t visited = 0;
  for (int k = 3; k <= longest; ++k) {
    RowBasis basis;
    std::vector<int> chosen;
    std::optional<std::vector<int>> found;
    const bool finished = circuit_dfs(om, k, 0, basis, chosen, visited, budget, found);
    if (found) return relation_from_subset(om, *found);
    if (!finished) break;
  }
  const auto circuit = first_circuit(om);
  if (circuit && static_cast<int>(circuit->size()) <= max_len) return relation_from_subset(om, *circuit);
  return std::nullopt;
}

std::optional<SecantRelation> find_common_radical_relation(const Partition& mu, const std::vector<ProjRoot>& roots,
                                                           int max_len, std::uint64_t budget) {
  return find_common_radical_relation(orbit_matrix(mu, roots), max_len, budget);
}

std::string to_string(IndexKind k) {
  switch (k) {
    case IndexKind::Growing:
      return "Growing";
    case IndexKind::Stabilising:
      return "Stabilising";
    case IndexKind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

Classification classify_index(const Partition& mu, const ClassifyBudget& budget) {
  const int r = mu.size();
  if (r <= 2) return growing("two-part rule");

  // (r!)^2 exceeds every int once r >= 9.
  if (r <= 8) {
    long long f = 1;
    for (int i = 2; i <= r; ++i) f *= i;
    const auto jumps = jump_data(mu).jumps;
    if (std::all_of(jumps.begin(), jumps.end(), [&](int j) { return static_cast<long long>(j) >= f * f; })) {
      return growing("factorial-jump rule");
    }
  }

  // Candidate root sets, structured ones first.
  std::vector<std::pair<std::string, std::vector<ProjRoot>>> configs;
  configs.emplace_back("symmetric integers", symmetric_integer_roots(r));
  if (r >= 4) {
    std::vector<ProjRoot> with_inf{ProjRoot::infinity()};
    for (const auto& p : symmetric_integer_roots(r - 1)) with_inf.push_back(p);
    configs.emplace_back("infinity and symmetric integers", with_inf);
    configs.emplace_back("roots of unity", roots_of_unity(r, r));
    if (r - 2 >= 3) {
      std::vector<ProjRoot> zero_inf{ProjRoot::affine(FieldElement(0)), ProjRoot::infinity()};
      for (const auto& p : roots_of_unity(r - 2, r - 2)) zero_inf.push_back(p);
      configs.emplace_back("zero, infinity and roots of unity", zero_inf);
    }
    std::vector<Rational> ap;
    for (int i = 0; i < r; ++i) ap.emplace_back(i);
    configs.emplace_back("arithmetic progression", affine_roots(ap));
  }
  std::mt19937_64 rng(budget.seed);
  std::uniform_int_distribution<int> num(-50, 50);
  std::uniform_int_distribution<int> den(1, 7);
  for (int c = 0; c < budget.random_configurations; ++c) {
    std::vector<Rational> vals;
    while (static_cast<int>(vals.size()) < r) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      if (std::find(vals.begin(), vals.end(), q) == vals.end()) vals.push_back(q);
    }
    configs.emplace_back("random", affine_roots(vals));
  }

  if (r == 3) {
    std::vector<int> p = mu.parts();
    std::sort(p.begin(), p.end());
    if (!strongly_stabilising_3parts(p[0], p[1], p[2])) return growing("3-part Wronskian rule");
    // The orbit is dependent at every root triple; any triple gives a certificate.
    for (const auto& [label, roots] : configs) {
      const OrbitMatrix om = orbit_matrix(mu, roots);
      if (auto rel = find_common_radical_relation(om, om.rows(), budget.subset_budget)) {
        Classification c;
        c.kind = IndexKind::Stabilising;
        c.rule = "3-part Wronskian rule at " + roots_string(roots);
        c.certificate = std::move(rel);
        return c;
      }
    }
    throw std::logic_error("vanishing 3-part Wronskian but no orbit dependence found for (" + mu.to_string() + ")");
  }

  Classification out;
  out.report.ambient_dim = mu.weight() + 1;
  out.report.min_rank = -1;
  for (const auto& [label, roots] : configs) {
    const OrbitMatrix om = orbit_matrix(mu, roots);
    const int rank = orbit_rank(om);
    out.report.orbit_size = om.rows();
    out.report.configurations.push_back(label + " " + roots_string(roots));
    if (out.report.min_rank < 0 || rank < out.report.min_rank) out.report.min_rank = rank;
    if (rank == om.rows()) {
      if (out.report.full_rank_witness.empty()) out.report.full_rank_witness = roots_string(roots);
      continue;
    }
    if (auto rel = find_common_radical_relation(om, om.rows(), budget.subset_budget)) {
      out.kind = IndexKind::Stabilising;
      out.rule = "deficient orbit at " + label + " " + roots_string(roots);
      out.certificate = std::move(rel);
      return out;
    }
  }
  out.kind = IndexKind::Unknown;
  out.rule = "no deficient orbit found";
  return out;
}

bool strongly_stabilising_3parts(int a, int b, int c) {
  if (a <= 0 || b <= 0 || c <= 0) throw std::invalid_argument("parts must be positive");
  std::vector<int> parts{a, b, c};
  std::sort(parts.begin(), parts.end());
  if (parts[0] == parts[2]) return false;
  std::vector<std::vector<int>> perms;
  do {
    perms.push_back(parts);
  } while (std::next_permutation(parts.begin(), parts.end()));
  const int k = static_cast<int>(perms.size());
  const int n = a + b + c;
  // W(t; x) = W(0; x - t), and W(0; x) is homogeneous of degree D in x, so
  // it vanishes iff W(0; 1, y2, y3) does, a polynomial of total degree <= D.
  const int D = k * n - k * (k - 1) / 2;

  auto power_poly = [](const mpz_class& root, int m) {
    // coefficients of (t - root)^m
    std::vector<mpz_class> p{1};
    for (int i = 0; i < m; ++i) {
      std::vector<mpz_class> q(p.size() + 1, 0);
      for (std::size_t j = 0; j < p.size(); ++j) {
        q[j + 1] += p[j];
        q[j] -= root * p[j];
      }
      p = std::move(q);
    }
    return p;
  };

  Matrix<mpq_class> w(k, k);
  for (int y2 = 0; y2 <= D; ++y2) {
    for (int y3 = 0; y3 <= D; ++y3) {
      const mpz_class x[3] = {1, y2, y3};
      std::vector<std::vector<mpz_class>> pw(3);
      for (int s = 0; s < k; ++s) {
        std::vector<mpz_class> f{1};
        for (int j = 0; j < 3; ++j) {
          const auto g = power_poly(x[j], perms[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)]);
          std::vector<mpz_class> h(f.size() + g.size() - 1, 0);
          for (std::size_t u = 0; u < f.size(); ++u) {
            for (std::size_t v = 0; v < g.size(); ++v) h[u + v] += f[u] * g[v];
          }
          f = std::move(h);
        }
        // The i-th derivative at t = 0 is i! times the t^i coefficient;
        // the factorials scale rows and do not affect vanishing.
        for (int i = 0; i < k; ++i) w(i, s) = f[static_cast<std::size_t>(i)];
      }
      if (!is_zero(exact_det(w))) return false;
    }
  }
  return true;
}

std::uint64_t count_permutations_geq(const Partition& mu, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != mu.size()) throw std::invalid_argument("a must have one entry per part");
  const auto vc = mu.value_counts();
  // Positions are filled in decreasing order of a_i; the count does not
  // depend on the order in which positions are visited.
  std::vector<int> order = a;
  std::sort(order.begin(), order.end(), std::greater<>());
  std::map<std::vector<int>, std::uint64_t> memo;
  std::function<std::uint64_t(std::vector<int>&, std::size_t)> go = [&](std::vector<int>& left,
                                                                        std::size_t pos) -> std::uint64_t {
    if (pos == order.size()) return 1;
    if (auto it = memo.find(left); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (std::size_t j = 0; j < vc.size(); ++j) {
      if (left[j] == 0 || vc[j].first < order[pos]) continue;
      --left[j];
      total += go(left, pos + 1);
      ++left[j];
    }
    memo.emplace(left, total);
    return total;
  };
  std::vector<int> left;
  for (const auto& [value, mult] : vc) left.push_back(mult);
  return go(left, 0);
}

bool parking_condition(const Partition& mu, const std::vector<int>& a) {
  long sum = 0;
  for (int x : a) sum += x;
  const long target = static_cast<long>(mu.weight()) - sum + 2;
  return static_cast<long>(count_permutations_geq(mu, a)) >= target;
}

namespace {

struct ParkingSearch {
  const Partition& mu;
  std::vector<int> values;  // distinct parts, decreasing
  long d;
  std::uint64_t budget;
  std::uint64_t visited = 0;
  bool exhausted = false;
  long best_sum = -1;
  std::vector<int> best;
  std::vector<int> a;

  std::uint64_t count_with_fill(int fill) const {
    std::vector<int> full = a;
    full.resize(static_cast<std::size_t>(mu.size()), fill);
    return count_permutations_geq(mu, full);
  }

  // Multisets of part values, as nonincreasing tuples; maximises sum(a).
  void multisets(std::size_t idx, long sum) {
    if (exhausted) return;
    if (++visited > budget) {
      exhausted = true;
      return;
    }
    const long rem = mu.size() - static_cast<long>(a.size());
    if (rem == 0) {
      if (sum > d || sum <= best_sum) return;
      if (static_cast<long>(count_permutations_geq(mu, a)) >= d - sum + 2) {
        best_sum = sum;
        best = a;
      }
      return;
    }
    const long max_sum = std::min(d, sum + rem * values[idx]);
    if (max_sum <= best_sum) return;
    if (static_cast<long>(count_with_fill(values.back())) < d - max_sum + 2) return;
    for (std::size_t j = idx; j < values.size(); ++j) {
      a.push_back(values[j]);
      multisets(j, sum + values[j]);
      a.pop_back();
    }
  }

  // Lexicographically smallest a in [1, mu_1]^r with the given sum and
  // count >= target.
  bool lex_first(long sum_left, long target) {
    if (++visited > budget) {
      exhausted = true;
      return false;
    }
    const long rem = mu.size() - static_cast<long>(a.size());
    if (rem == 0) return sum_left == 0 && static_cast<long>(count_permutations_geq(mu, a)) >= target;
    if (static_cast<long>(count_with_fill(1)) < target) return false;
    for (int v = 1; v <= mu.largest(); ++v) {
      const long after = sum_left - v;
      if (after < rem - 1) break;
      if (after > (rem - 1) * static_cast<long>(mu.largest())) continue;
      a.push_back(v);
      if (lex_first(after, target)) return true;
      a.pop_back();
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace

std::optional<ParkingResult> parking_search(const Partition& mu, std::uint64_t budget) {
  ParkingSearch s{mu, {}, mu.weight(), budget, 0, false, -1, {}, {}};
  for (const auto& [value, mult] : mu.value_counts()) s.values.push_back(value);
  s.multisets(0, 0);

  std::optional<ParkingResult> out;
  if (s.best_sum >= 0) {
    ParkingResult res;
    res.bound = static_cast<int>(s.d - s.best_sum + 2);
    res.a = s.best;
    std::sort(res.a.begin(), res.a.end());
    res.schedule = "exhaustive";
    res.complete = !s.exhausted;
    s.a.clear();
    s.visited = 0;
    s.exhausted = false;
    if (s.lex_first(s.best_sum, res.bound)) res.a = s.a;
    res.count = count_permutations_geq(mu, res.a);
    out = res;
  }

  // Small-jumps schedule: every second jump of size <= D, for each D.
  const auto& p = mu.parts();
  std::vector<int> sizes;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] > p[i + 1]) sizes.push_back(p[i] - p[i + 1]);
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  for (int cap : sizes) {
    std::vector<std::size_t> qualifying;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (p[i] > p[i + 1] && p[i] - p[i + 1] <= cap) qualifying.push_back(i);
    }
    for (std::size_t offset = 0; offset < 2; ++offset) {
      std::vector<int> a = p;
      for (std::size_t k = offset; k < qualifying.size(); k += 2) a[qualifying[k]] = p[qualifying[k] + 1];
      long sum = 0;
      for (int x : a) sum += x;
      const int bound = static_cast<int>(mu.weight() - sum + 2);
      const std::uint64_t count = count_permutations_geq(mu, a);
      if (static_cast<long>(count) < bound) continue;
      if (!out || bound < out->bound) out = ParkingResult{a, bound, count, "small-jumps", !s.exhausted};
    }
  }
  return out;
}

ParkingEvidence parking_evidence(const Partition& mu) {
  ParkingEvidence e;
  e.mu = mu;
  e.parking = parking_search(mu);
  const OrbitMatrix om = orbit_matrix(mu, symmetric_integer_roots(mu.size()));
  e.orbit_size = om.rows();
  e.orbit_rank = orbit_rank(om);
  return e;
}

}  // namespace strata
