#include "cycperm/patterns.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cycperm/statistics.hpp"

namespace cycperm {

namespace {

bool is_standard(const Cycle &c) {
  Alphabet letters = c.alphabet();
  for (std::size_t k = 0; k < letters.size(); ++k)
    if (letters[k] != static_cast<Entry>(k) + 1)
      return false;
  return true;
}

std::string render(const Word &w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k)
      out += ',';
    out += std::to_string(w[k]);
  }
  return out;
}

} // namespace

PatternSet::PatternSet(std::vector<Cycle> patterns)
    : patterns_(std::move(patterns)) {
  for (const Cycle &p : patterns_)
    if (!is_standard(p))
      throw std::invalid_argument(
          "pattern [" + render(p.canonical()) +
          "] is not standardized; use [" +
          render(standardize_cycle(p).canonical()) + "]");
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()),
                  patterns_.end());
}

bool cyclic_contains(const Cycle &host, const Cycle &pattern) {
  if (!is_standard(pattern))
    throw std::invalid_argument("cyclic_contains: pattern must be over [k]");
  const std::size_t n = host.size();
  const std::size_t k = pattern.size();
  if (k > n)
    return false;
  const Word &w = host.canonical();
  // Position subsets of size k in lexicographic order.
  std::vector<std::size_t> pick(k);
  for (std::size_t r = 0; r < k; ++r)
    pick[r] = r;
  std::vector<Entry> sub(k);
  while (true) {
    for (std::size_t r = 0; r < k; ++r)
      sub[r] = w[pick[r]];
    if (Cycle(standardize(make_word_unchecked(sub))) == pattern)
      return true;
    std::size_t r = k;
    while (r > 0 && pick[r - 1] == n - k + (r - 1))
      --r;
    if (r == 0)
      return false;
    ++pick[r - 1];
    for (std::size_t t = r; t < k; ++t)
      pick[t] = pick[t - 1] + 1;
  }
}

std::vector<Cycle> avoiders(int n, const PatternSet &patterns) {
  if (n < 1)
    throw std::invalid_argument("avoiders: n must be >= 1");
  std::vector<Cycle> out;
  for (Cycle &c : all_cycles(interval(n))) {
    bool avoids = std::none_of(
        patterns.begin(), patterns.end(),
        [&](const Cycle &p) { return cyclic_contains(c, p); });
    if (avoids)
      out.push_back(std::move(c));
  }
  return out;
}

QPoly avoidance_poly(int n, const PatternSet &patterns) {
  QPoly sum;
  for (const Cycle &c : avoiders(n, patterns))
    sum += QPoly::monomial(
        static_cast<std::size_t>(cyclic_stat(Statistic::cdes, c).count()));
  return sum;
}

} // namespace cycperm
