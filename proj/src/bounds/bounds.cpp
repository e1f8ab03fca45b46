#include "strata/bounds/bounds.hpp"

#include "strata/orbits/orbits.hpp"

namespace strata {

int certified_threshold(long h) {
  long l = 3;
  while (l * (l - 2) <= h) ++l;
  return static_cast<int>(l);
}

int strict_threshold(long h) {
  long l = 2;
  while ((l - 2) * (l - 1) <= h) ++l;
  return static_cast<int>(l);
}

LowerBound lower_bound_index(const Partition& mu) {
  LowerBound lb;
  lb.h = jump_data(mu).h;
  lb.lower = certified_threshold(lb.h);
  lb.paper_stated = strict_threshold(lb.h);
  return lb;
}

int lower_bound_closure(const Partition& mu) { return certified_threshold(h_bar(mu)); }

UpperBound upper_bound_index(const Partition& mu, const CertificateLibrary* certs) {
  const int d = mu.weight();
  if (mu.size() == 1) return {d + 2, "single-part"};
  UpperBound best{mu.smallest() + 2, "last-part"};
  auto offer = [&](int value, const std::string& rule) {
    if (value < best.upper) best = {value, rule};
  };

  // (t+i, t^{i+1}) as a subpartition: a larger value u = t+i and at least
  // i+1 copies of t.
  const auto vc = mu.value_counts();
  for (const auto& [u, mu_count] : vc) {
    for (const auto& [t, t_count] : vc) {
      if (u > t && t_count >= u - t + 1) offer(u - t + 2, "step-pattern");
    }
  }

  int unit_steps = 0;
  for (int i = 0; i + 1 < mu.size(); ++i) unit_steps += (mu[i] - mu[i + 1] == 1);
  if (unit_steps >= 2) offer(4, "two-unit-jumps");

  if (best.upper > 3) {
    if (const auto park = parking_search(mu)) offer(park->bound, "parking");
  }

  if (certs) {
    if (const Certificate* c = certs->shortest_for(mu)) offer(c->relation.length(), c->id);
  }
  return best;
}

BoundsBracket bracket(const Partition& mu, const CertificateLibrary* certs) {
  BoundsBracket b;
  const UpperBound ub = upper_bound_index(mu, certs);
  b.upper = ub.upper;
  b.upper_cert = ub.rule;
  const LowerBound lb = lower_bound_index(mu);
  b.paper_stated_lower = lb.paper_stated;
  if (mu.size() == 1) {
    b.lower = mu.weight() + 2;
    b.lower_cert = "single-part";
  } else {
    b.lower = lb.lower;
    b.lower_cert = "min-jump";
  }
  if (b.lower > b.upper) {
    throw Inconsistent("bracket for (" + mu.to_string() + "): lower " + std::to_string(b.lower) + " (" +
                       b.lower_cert + ") exceeds upper " + std::to_string(b.upper) + " (" + b.upper_cert + ")");
  }
  return b;
}

int common_radical_threshold(const Partition& mu) {
  const long r = mu.size();
  if (r == 1) throw SinglePart("common-radical threshold needs at least two parts");
  long m = 1;
  while (m * m * (r - 1) <= mu.smallest()) ++m;
  return static_cast<int>(m);
}

}  // namespace strata
