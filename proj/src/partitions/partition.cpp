#include "strata/partitions/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <span>
#include <sstream>

namespace strata {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("a partition needs at least one part");
  for (int p : parts_) {
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<std::pair<int, int>> Partition::value_counts() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  }
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

namespace {

int parse_positive(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v <= 0) {
    throw std::invalid_argument("malformed partition: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    const std::size_t caret = item.find('^');
    const int value = parse_positive(item.substr(0, caret), text);
    const int times = caret == std::string_view::npos ? 1 : parse_positive(item.substr(caret + 1), text);
    if (times > 100000) throw std::invalid_argument("exponent too large in '" + std::string(text) + "'");
    parts.insert(parts.end(), static_cast<std::size_t>(times), value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

JumpData jump_data(const Partition& mu) {
  JumpData out;
  for (int i = 0; i + 1 < mu.size(); ++i) {
    const int jump = mu[i] - mu[i + 1];
    if (jump > 0) out.jumps.push_back(jump);
  }
  out.jumps.push_back(mu.smallest());
  out.h = *std::min_element(out.jumps.begin(), out.jumps.end());
  return out;
}

namespace {

std::vector<long> signed_sums(std::span<const int> parts) {
  std::vector<long> sums{0};
  for (int p : parts) {
    const std::size_t n = sums.size();
    sums.reserve(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      sums.push_back(sums[i] + p);
      sums.push_back(sums[i] - p);
    }
  }
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  return sums;
}

}  // namespace

int h_bar(const Partition& mu) {
  if (mu.size() > kHBarMaxParts) {
    throw TooLarge("h_bar: " + std::to_string(mu.size()) + " parts exceeds the limit of " +
                   std::to_string(kHBarMaxParts));
  }
  const std::span<const int> parts(mu.parts());
  const std::size_t half = parts.size() / 2;
  const std::vector<long> left = signed_sums(parts.first(half));
  const std::vector<long> right = signed_sums(parts.subspan(half));
  long best = mu.smallest();
  for (long s : left) {
    // Closest values to -s in `right`, skipping an exact cancellation.
    auto it = std::lower_bound(right.begin(), right.end(), -s);
    for (auto cand : {it, it + (it != right.end() ? 1 : 0)}) {
      if (cand != right.end() && s + *cand != 0) best = std::min(best, std::labs(s + *cand));
    }
    if (it != right.begin()) {
      const long total = s + *(it - 1);
      if (total != 0) best = std::min(best, std::labs(total));
    }
  }
  return static_cast<int>(best);
}

namespace {

// Enumerates set partitions of `parts`, calling `visit` with the block sums.
void for_each_coarsening(const std::vector<int>& parts, std::size_t index, std::vector<int>& blocks,
                         const std::function<void(const std::vector<int>&)>& visit) {
  if (index == parts.size()) {
    visit(blocks);
    return;
  }
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    blocks[b] += parts[index];
    for_each_coarsening(parts, index + 1, blocks, visit);
    blocks[b] -= parts[index];
  }
  blocks.push_back(parts[index]);
  for_each_coarsening(parts, index + 1, blocks, visit);
  blocks.pop_back();
}

}  // namespace

int h_bar_coarsening(const Partition& mu) {
  if (mu.size() > 12) throw TooLarge("h_bar_coarsening: too many parts for set-partition enumeration");
  int best = mu.weight();
  std::vector<int> blocks;
  for_each_coarsening(mu.parts(), 0, blocks, [&](const std::vector<int>& sums) {
    best = std::min(best, jump_data(Partition(sums)).h);
  });
  return best;
}

namespace {

bool fill_bins(const std::vector<int>& items, std::size_t index, std::vector<int>& remaining) {
  if (index == items.size()) {
    return std::all_of(remaining.begin(), remaining.end(), [](int x) { return x == 0; });
  }
  for (std::size_t b = 0; b < remaining.size(); ++b) {
    if (remaining[b] < items[index]) continue;
    // Bins with identical remaining capacity are interchangeable.
    bool seen = false;
    for (std::size_t c = 0; c < b; ++c) {
      if (remaining[c] == remaining[b]) {
        seen = true;
        break;
      }
    }
    if (seen) continue;
    remaining[b] -= items[index];
    if (fill_bins(items, index + 1, remaining)) return true;
    remaining[b] += items[index];
  }
  return false;
}

}  // namespace

bool is_coarsening(const Partition& coarse, const Partition& fine) {
  if (coarse.weight() != fine.weight() || coarse.size() > fine.size()) return false;
  std::vector<int> remaining = coarse.parts();
  return fill_bins(fine.parts(), 0, remaining);
}

Partition shift(const Partition& mu, int t) {
  if (t < 0) throw std::invalid_argument("shift must be nonnegative");
  std::vector<int> parts = mu.parts();
  for (int& p : parts) p += t;
  return Partition(std::move(parts));
}

bool is_subpartition(const Partition& nu, const Partition& mu) {
  return std::includes(mu.parts().begin(), mu.parts().end(), nu.parts().begin(), nu.parts().end(),
                       std::greater<>());
}

Partition complement(const Partition& mu, const Partition& nu) {
  if (!is_subpartition(nu, mu)) throw std::invalid_argument("complement: not a subpartition");
  std::vector<int> rest;
  std::set_difference(mu.parts().begin(), mu.parts().end(), nu.parts().begin(), nu.parts().end(),
                      std::back_inserter(rest), std::greater<>());
  if (rest.empty()) return Partition();
  return Partition(std::move(rest));
}

std::vector<Partition> subpartitions(const Partition& mu) {
  const auto vc = mu.value_counts();
  std::vector<Partition> out;
  std::vector<int> take(vc.size(), 0);
  while (true) {
    std::vector<int> parts;
    for (std::size_t j = 0; j < vc.size(); ++j) parts.insert(parts.end(), static_cast<std::size_t>(take[j]), vc[j].first);
    if (!parts.empty()) out.emplace_back(std::move(parts));
    std::size_t j = 0;
    while (j < vc.size() && take[j] == vc[j].second) take[j++] = 0;
    if (j == vc.size()) break;
    ++take[j];
  }
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return b < a;
  });
  return out;
}

std::uint64_t arrangement_count(const Partition& mu) {
  // Product of binomials avoids the r! overflow for moderate r.
  std::uint64_t total = 1;
  int placed = 0;
  for (const auto& [value, count] : mu.value_counts()) {
    for (int i = 1; i <= count; ++i) {
      total = total * static_cast<std::uint64_t>(placed + i) / static_cast<std::uint64_t>(i);
    }
    placed += count;
  }
  return total;
}

std::vector<std::vector<int>> arrangements(const Partition& mu) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur = mu.parts();
  do {
    out.push_back(cur);
  } while (std::prev_permutation(cur.begin(), cur.end()));
  return out;
}

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  if (d <= 0) return out;
  std::vector<int> cur{d};
  while (true) {
    out.emplace_back(cur);
    // Next partition in reverse lexicographic order.
    int rem = 0;
    while (!cur.empty() && cur.back() == 1) {
      ++rem;
      cur.pop_back();
    }
    if (cur.empty()) break;
    const int v = --cur.back();
    ++rem;
    while (rem > v) {
      cur.push_back(v);
      rem -= v;
    }
    if (rem > 0) cur.push_back(rem);
  }
  return out;
}

}  // namespace strata
