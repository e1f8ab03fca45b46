// One line per acceptance criterion; exit status 0 iff every line passes.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles/oracles.hpp"
#include "strata/bounds/bounds.hpp"
#include "strata/exactalg/matrix.hpp"
#include "strata/numsearch/numsearch.hpp"
#include "strata/orbits/orbits.hpp"
#include "strata/relations/constructions.hpp"

namespace strata {
namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(double x, const char* spec = "%.3g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << ": " << detail << std::endl;
}

void info(const std::string& name, const std::string& detail) { std::cout << "[INFO] " << name << ": " << detail << std::endl; }

const CertificateLibrary& builtin() {
  static const CertificateLibrary lib = CertificateLibrary::builtin();
  return lib;
}

Partition random_partition(std::mt19937_64& rng, int max_parts, int max_part) {
  std::uniform_int_distribution<int> len(1, max_parts), part(1, max_part);
  std::vector<int> parts(static_cast<std::size_t>(len(rng)));
  for (int& p : parts) p = part(rng);
  return Partition(parts);
}

std::vector<FieldElement> random_distinct(std::mt19937_64& rng, std::size_t n) {
  std::vector<FieldElement> out;
  for (const auto& q : oracle::distinct_rationals(rng, n)) out.emplace_back(q);
  return out;
}

void quartic_cubic() {
  const auto t0 = Clock::now();
  const QuarticCubicSolution s = solve_two_part_quartic_cubic();
  const Verdict v = verify_relation(s.relation);
  const double secs = since(t0);
  const Verdict printed = verify_relation(printed_quartic_cubic_relation());
  const bool ok = v.ok && s.relation.length() == 4 && s.relation.mu == Partition({4, 3}) &&
                  s.relation.field->degree() == 2 && secs < 1 && !printed.ok;
  report("exact identity (4,3)", ok,
         "solved relation " + std::string(v.ok ? "verifies" : "fails (" + v.diagnostic + ")") + ", length " +
             std::to_string(s.relation.length()) + ", field degree " + std::to_string(s.relation.field->degree()) +
             ", " + fmt(secs) + " s; printed constants " + (printed.ok ? "verify" : "fail (" + printed.diagnostic + ")"));
}

void quintic_cubic() {
  const auto t0 = Clock::now();
  const QuinticCubicOutcome p = verify_paper_53();
  const double secs = since(t0);
  std::string residual;
  for (const auto& c : p.residual) residual += (residual.empty() ? "" : ", ") + c;
  const bool ok = p.min_poly_check && secs < 10 && (p.residual_zero || !p.residual.empty());
  report("exact identity (5,3)", ok,
         "modulus " + p.modulus + ", min-poly check " + (p.min_poly_check ? "zero" : "nonzero") + ", residual " +
             (p.residual_zero ? "zero" : "nonzero [" + residual + "]") + ", " + fmt(secs) + " s");
}

void classical() {
  const Verdict v = verify_relation(classical_two_two_relation());
  const BoundsBracket b = bracket(Partition({2, 2}), &builtin());
  const bool ok = v.ok && b.lower == 3 && b.upper == 3 && b.paper_stated_lower == 4;
  report("exact identity (2,2)", ok,
         std::string("classical relation ") + (v.ok ? "verifies" : "fails") + ", bracket [" + std::to_string(b.lower) +
             "," + std::to_string(b.upper) + "], strict-form lower " + std::to_string(b.paper_stated_lower));
}

void classification() {
  const auto t0 = Clock::now();
  int checked = 0, trues = 0;
  std::string mismatches;
  for (int a = 1; a <= 7; ++a) {
    for (int b = a; b <= 7; ++b) {
      for (int c = b; c <= 7; ++c) {
        const bool expected = (a == b && c == a + 1) || (b == a + 1 && c == a + 2) || (b == a + 1 && c == a + 3);
        const bool got = strongly_stabilising_3parts(a, b, c);
        ++checked;
        trues += got;
        if (got != expected) {
          mismatches += " (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
        }
      }
    }
  }
  const double secs = since(t0);
  report("classification", mismatches.empty() && secs < 600,
         std::to_string(checked) + " triples, " + std::to_string(trues) + " strongly stabilising, " +
             (mismatches.empty() ? "all match the three families" : "mismatches:" + mismatches) + ", " + fmt(secs) +
             " s");
}

void bounds_table() {
  std::string bad;
  for (int d = 1; d <= 10; ++d) {
    const BoundsBracket b = bracket(Partition({2 * d + 1, 2 * d, 2 * d}), &builtin());
    if (b.lower != 3 || b.upper != 3) bad += " (2d+1,2d,2d)@" + std::to_string(d);
  }
  for (int d = 1; d <= 8; ++d) {
    const BoundsBracket b = bracket(Partition({d}), &builtin());
    if (b.lower != d + 2 || b.upper != d + 2) bad += " (d)@" + std::to_string(d);
  }
  std::string growth;
  int prev = 0, first = 0, last = 0;
  for (int d : {3, 8, 15, 24}) {
    const int l = lower_bound_index(Partition({2 * d + 1, d, d, d, d})).lower;
    if (l < prev) bad += " nonmonotone@" + std::to_string(d);
    if (first == 0) first = l;
    prev = last = l;
    growth += (growth.empty() ? "" : ",") + std::to_string(l);
  }
  if (last <= first) bad += " no growth";
  for (int d = 1; d <= 6; ++d) {
    if (lower_bound_closure(Partition({2 * d + 1, d, d, d, d})) != 3) bad += " closure@" + std::to_string(d);
  }
  report("bounds table", bad.empty(),
         bad.empty() ? "(2d+1,2d,2d) = [3,3] for d <= 10, (d) = [d+2,d+2] for d <= 8, lower bounds of (2d+1,d^4) at "
                       "d = 3,8,15,24: " + growth + ", closure 3 for d <= 6"
                     : "failed:" + bad);
}

void parking() {
  std::mt19937_64 rng(2024);
  std::string bad;
  int tuples = 0;
  for (int t = 1; t <= 5; ++t) {
    for (int i = 1; i <= 5; ++i) {
      std::vector<int> parts(static_cast<std::size_t>(i + 1), t);
      parts.insert(parts.begin(), t + i);
      const Partition mu(parts);
      const auto p = parking_search(mu);
      if (!p || p->bound != i + 2) {
        bad += " " + mu.to_string() + "->" + (p ? std::to_string(p->bound) : "none");
        continue;
      }
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<ProjRoot> roots;
        for (const auto& x : random_distinct(rng, static_cast<std::size_t>(mu.size()))) roots.push_back(ProjRoot::affine(x));
        const auto rel = find_common_radical_relation(mu, roots, p->bound);
        ++tuples;
        if (!rel || !verify_relation(*rel).ok || rel->length() > p->bound || !has_common_radical(*rel)) {
          bad += " " + mu.to_string() + "@trial" + std::to_string(trial);
          break;
        }
      }
    }
  }
  report("parking", bad.empty(),
         bad.empty() ? "bound i+2 for (t+i,t^(i+1)), t,i <= 5; common-radical relation within the bound at " +
                           std::to_string(tuples) + " random root tuples"
                     : "failed:" + bad);
}

void oracle_equivalence() {
  std::mt19937_64 rng(7);
  int count_cases = 0, hbar_cases = 0, det_cases = 0;
  std::string bad;
  for (int trial = 0; trial < 200; ++trial) {
    const Partition mu = random_partition(rng, 6, 6);
    std::uniform_int_distribution<int> ad(1, mu[0]);
    std::vector<int> a(static_cast<std::size_t>(mu.size()));
    for (int& x : a) x = ad(rng);
    if (count_permutations_geq(mu, a) != oracle::brute_count_geq(mu.parts(), a)) bad += " count:" + mu.to_string();
    ++count_cases;
  }
  for (int r = 1; r <= 10; ++r) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<int> parts(static_cast<std::size_t>(r));
      std::uniform_int_distribution<int> pd(1, 60);
      for (int& x : parts) x = pd(rng);
      const Partition mu(parts);
      if (h_bar(mu) != oracle::naive_h_bar(mu.parts())) bad += " h_bar:" + mu.to_string();
      ++hbar_cases;
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      oracle::RatMatrix rm(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
      Matrix<Rational> m(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          rm[i][j] = oracle::random_rational(rng);
          m(i, j) = rm[i][j];
        }
      }
      if (exact_det(m) != oracle::cofactor_det(rm)) bad += " det:n=" + std::to_string(n);
      ++det_cases;
    }
  }
  report("oracle equivalence", bad.empty(),
         std::to_string(count_cases) + " permutation counts, " + std::to_string(hbar_cases) + " h_bar values (r <= 10), " +
             std::to_string(det_cases) + " determinants (n <= 5)" + (bad.empty() ? " agree" : "; mismatches:" + bad));
}

void constructions() {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> kd(1, 4);
  int adjacent = 0, separated = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_distinct(rng, 3);
    adjacent += verify_relation(construct_adjacent_unit_jumps(kd(rng), x[0], x[1], x[2])).ok;
  }
  for (int trial = 0; trial < 100; ++trial) {
    const auto x = random_distinct(rng, 4);
    const int k1 = kd(rng), k2 = kd(rng);  // the construction wants k1 >= k2
    separated += verify_relation(construct_separated_unit_jumps(std::max(k1, k2), std::min(k1, k2), x[0], x[1], x[2], x[3])).ok;
  }
  const SecantRelation ref = construct_adjacent_unit_jumps(1, 0, 1, 2);
  std::string coeffs;
  for (const auto& t : ref.terms) coeffs += (coeffs.empty() ? "" : ",") + t.coeff.to_string();
  report("constructions", adjacent == 100 && separated == 100 && coeffs == "2,1,-4,1",
         "adjacent " + std::to_string(adjacent) + "/100, separated " + std::to_string(separated) +
             "/100 verify; reference coefficients (" + coeffs + ")");
}

void numerics() {
  SearchOptions a;
  a.restarts = 1000000;
  a.accept_tol = 1e-8;
  a.time_limit_seconds = 60;
  const SearchResult r33 = search_relation(Partition({3, 3}), 4, a);
  const bool found33 = r33.found && r33.found->residual < 1e-8 && r33.seconds < 60;

  SearchOptions b;
  b.restarts = 100000;
  b.accept_tol = 1e-8;
  const SearchResult r32 = search_relation(Partition({3, 2}), 3, b);
  const bool none32 = !r32.found && r32.restarts_run == b.restarts;

  report("numerical evidence", found33 && none32,
         "(3,3) length 4: " +
             (r33.found ? "residual " + fmt(r33.found->residual) + " after " + std::to_string(r33.restarts_run) +
                              " restarts, " + fmt(r33.seconds) + " s"
                        : "not found in " + fmt(r33.seconds) + " s") +
             "; (3,2) length 3: " +
             (r32.found ? "accepted candidate, residual " + fmt(r32.found->residual)
                        : "nothing below 1e-8 in " + std::to_string(r32.restarts_run) + " restarts, best relative " +
                              (r32.best ? fmt(r32.best->relative_residual) : std::string("n/a"))) +
             ", " + fmt(r32.seconds) + " s");

  for (const Partition& mu : {Partition({6, 3}), Partition({7, 3})}) {
    SearchOptions o;
    o.restarts = 1000000;
    o.accept_tol = 1e-8;
    o.time_limit_seconds = 60;
    const SearchResult r = search_relation(mu, 4, o);
    std::string detail = std::to_string(r.restarts_run) + " restarts, " + fmt(r.seconds) + " s, ";
    if (r.found) {
      detail += "candidate residual " + fmt(r.found->residual) + ", exactify " + (exactify(*r.found) ? "verified" : "failed");
    } else {
      detail += "none accepted, best relative residual " + (r.best ? fmt(r.best->relative_residual) : std::string("n/a"));
    }
    info("open case (" + mu.to_string() + ") length 4", detail);
  }
}

void threshold() {
  const int m = common_radical_threshold(Partition({101, 100, 100}));
  std::string detail = "m*(101,100,100) = " + std::to_string(m);
  bool ok = m == 8;
  for (const Partition& mu : {Partition({3, 2, 2}), Partition({101, 100, 100})}) {
    const auto rel = find_common_radical_relation(mu, symmetric_integer_roots(3), 3);
    const bool good = rel && rel->length() == 3 && verify_relation(*rel).ok && has_common_radical(*rel);
    const int ms = common_radical_threshold(mu);
    ok = ok && good;
    detail += "; (" + mu.to_string() + ") at 0,1,-1: " + (good ? "length-3 common-radical relation" : "no relation") +
              ", m* = " + std::to_string(ms) + (3 <= ms ? " (within the guarantee)" : " (beyond the guarantee)");
  }
  report("threshold", ok, detail);
}

}  // namespace
}  // namespace strata

int main() {
  using namespace strata;
  const std::pair<const char*, void (*)()> criteria[] = {
      {"exact identity (4,3)", quartic_cubic}, {"exact identity (5,3)", quintic_cubic},
      {"exact identity (2,2)", classical},     {"classification", classification},
      {"bounds table", bounds_table},          {"parking", parking},
      {"oracle equivalence", oracle_equivalence}, {"constructions", constructions},
      {"threshold", threshold},                {"numerical evidence", numerics}};
  for (const auto& [name, run] : criteria) {
    try {
      run();
    } catch (const std::exception& e) {
      report(name, false, std::string("threw: ") + e.what());
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
