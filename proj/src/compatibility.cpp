#include "cycperm/compatibility.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>

#include "cycperm/bijections.hpp"
#include "cycperm/shuffles.hpp"

namespace cycperm {

namespace {

template <class Perm> std::vector<Perm> family(std::span<const Entry> letters);
template <> std::vector<Word> family<Word>(std::span<const Entry> letters) {
  return all_words(letters);
}
template <> std::vector<Cycle> family<Cycle>(std::span<const Entry> letters) {
  return all_cycles(letters);
}

const Word &as_word(const Word &w) { return w; }
const Word &as_word(const Cycle &c) { return c.canonical(); }

// Runs body(k) for k in [0, count) on up to `jobs` threads. Each k is
// visited exactly once; callers write results by index.
template <class Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(count)));
  if (jobs <= 1) {
    for (std::size_t k = 0; k < count; ++k)
      body(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t)
    workers.emplace_back([&] {
      for (std::size_t k = next++; k < count; k = next++)
        body(k);
    });
}

// Indices grouped by equal value; groups[g] ascending, groups ordered by
// their smallest member.
std::vector<std::vector<std::size_t>>
group_by_value(const std::vector<StatValue> &values) {
  std::map<StatValue, std::size_t> slot;
  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t k = 0; k < values.size(); ++k) {
    auto [it, fresh] = slot.try_emplace(values[k], groups.size());
    if (fresh)
      groups.emplace_back();
    groups[it->second].push_back(k);
  }
  return groups;
}

template <class Perm>
std::vector<StatValue> evaluate_all(Statistic id,
                                    const std::vector<Perm> &items) {
  std::vector<StatValue> out;
  out.reserve(items.size());
  for (const Perm &x : items)
    out.push_back(evaluate(id, x));
  return out;
}

template <class Perm>
Counterexample make_counterexample(const Perm &pi, const Perm &pi_prime,
                                   const Perm &sigma, const Perm &sigma_prime,
                                   Distribution left, Distribution right) {
  return Counterexample{as_word(pi),    as_word(pi_prime),
                        as_word(sigma), as_word(sigma_prime),
                        std::move(left), std::move(right)};
}

// Corollary-style search on the standardized alphabets [m] and [n]+m.
template <class Perm>
std::optional<Counterexample> search_reduced(Statistic id, int m, int n,
                                             const EngineOptions &options,
                                             std::uint64_t &pairs_checked) {
  Alphabet left_letters = interval(m);
  Alphabet right_letters = interval(n, m);
  auto lefts = family<Perm>(left_letters);
  auto rights = family<Perm>(right_letters);
  auto left_groups = group_by_value(evaluate_all(id, lefts));
  auto right_groups = group_by_value(evaluate_all(id, rights));

  const std::size_t width = rights.size();
  std::vector<Distribution> table(lefts.size() * width);
  parallel_for(table.size(), options.jobs, [&](std::size_t k) {
    table[k] = shuffle_distribution(id, lefts[k / width], rights[k % width]);
  });
  auto at = [&](std::size_t i, std::size_t k) -> const Distribution & {
    return table[i * width + k];
  };

  bool fix_sigma = options.reduction == Reduction::fix_sigma ||
                   options.reduction == Reduction::both;
  bool fix_pi = options.reduction == Reduction::fix_pi ||
                options.reduction == Reduction::both;

  if (fix_sigma) {
    for (std::size_t k = 0; k < width; ++k)
      for (const auto &group : left_groups)
        for (std::size_t a = 0; a < group.size(); ++a)
          for (std::size_t b = a + 1; b < group.size(); ++b) {
            ++pairs_checked;
            std::size_t i = group[a], j = group[b];
            if (at(i, k) != at(j, k))
              return make_counterexample(lefts[i], lefts[j], rights[k],
                                         rights[k], at(i, k), at(j, k));
          }
  }
  if (fix_pi) {
    for (std::size_t i = 0; i < lefts.size(); ++i)
      for (const auto &group : right_groups)
        for (std::size_t a = 0; a < group.size(); ++a)
          for (std::size_t b = a + 1; b < group.size(); ++b) {
            ++pairs_checked;
            std::size_t k = group[a], l = group[b];
            if (at(i, k) != at(i, l))
              return make_counterexample(lefts[i], lefts[i], rights[k],
                                         rights[l], at(i, k), at(i, l));
          }
  }
  return std::nullopt;
}

// The unreduced definition: operands range over every split of [m+n] into
// an m-letter and an n-letter alphabet. Each shuffle distribution is compared
// against the first one seen with the same (length, value, value) key.
template <class Perm>
std::optional<Counterexample> search_quadruples(Statistic id, int m, int n,
                                                std::uint64_t &pairs_checked) {
  struct Seen {
    Perm pi;
    Perm sigma;
    Distribution dist;
  };
  std::map<std::pair<StatValue, StatValue>, Seen> first;
  Alphabet all = interval(m + n);
  std::vector<bool> chosen(all.size(), false);
  std::fill(chosen.begin(), chosen.begin() + m, true);
  do {
    Alphabet a, b;
    for (std::size_t k = 0; k < all.size(); ++k)
      (chosen[k] ? a : b).push_back(all[k]);
    for (const Perm &pi : family<Perm>(a))
      for (const Perm &sigma : family<Perm>(b)) {
        Distribution d = shuffle_distribution(id, pi, sigma);
        auto key = std::make_pair(evaluate(id, pi), evaluate(id, sigma));
        auto it = first.find(key);
        if (it == first.end()) {
          first.emplace(std::move(key), Seen{pi, sigma, std::move(d)});
          continue;
        }
        ++pairs_checked;
        if (it->second.dist != d)
          return make_counterexample(it->second.pi, pi, it->second.sigma,
                                     sigma, it->second.dist, std::move(d));
      }
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return std::nullopt;
}

template <class Perm>
CompatReport run_compat(Statistic id, int max_total,
                        const EngineOptions &options) {
  if (max_total < 2)
    throw std::invalid_argument("compatibility check: bound must be >= 2");
  CompatReport report;
  report.statistic = id;
  report.mode = kind_of<Perm>() == PermKind::cyclic ? Mode::cyclic
                                                    : Mode::linear;
  report.max_total_length = max_total;
  for (int total = 2; total <= max_total; ++total)
    for (int m = 1; m < total; ++m) {
      int n = total - m;
      auto found =
          options.reduction == Reduction::quadruple
              ? search_quadruples<Perm>(id, m, n, report.pairs_checked)
              : search_reduced<Perm>(id, m, n, options, report.pairs_checked);
      if (found) {
        report.verdict = Verdict::counterexample;
        report.counterexample = std::move(found);
        return report;
      }
    }
  return report;
}

} // namespace

Distribution shuffle_distribution(Statistic id, const Word &p, const Word &s) {
  return distribution(id, linear_shuffles(p, s));
}

Distribution shuffle_distribution(Statistic id, const Cycle &p,
                                  const Cycle &s) {
  return distribution(id, cyclic_shuffles(p, s));
}

CompatReport check_linear_compat(Statistic id, int max_total,
                                 const EngineOptions &options) {
  if (is_cyclic(id))
    throw std::invalid_argument("check_linear_compat: " +
                                std::string(name(id)) + " is cyclic");
  return run_compat<Word>(id, max_total, options);
}

CompatReport check_cyclic_compat(Statistic id, int max_total,
                                 const EngineOptions &options) {
  if (!is_cyclic(id))
    throw std::invalid_argument("check_cyclic_compat: " +
                                std::string(name(id)) + " is linear");
  return run_compat<Cycle>(id, max_total, options);
}

CompatReport check_compat(Statistic id, int max_total,
                          const EngineOptions &options) {
  return is_cyclic(id) ? check_cyclic_compat(id, max_total, options)
                       : check_linear_compat(id, max_total, options);
}

bool replay(const CompatReport &report) {
  if (!report.counterexample)
    return false;
  const Counterexample &ce = *report.counterexample;
  if (ce.pi.size() != ce.pi_prime.size() ||
      ce.sigma.size() != ce.sigma_prime.size())
    return false;
  Distribution left, right;
  if (report.mode == Mode::cyclic) {
    Cycle pi(ce.pi), pi2(ce.pi_prime), sigma(ce.sigma), sigma2(ce.sigma_prime);
    if (cyclic_stat(report.statistic, pi) != cyclic_stat(report.statistic, pi2) ||
        cyclic_stat(report.statistic, sigma) !=
            cyclic_stat(report.statistic, sigma2))
      return false;
    left = shuffle_distribution(report.statistic, pi, sigma);
    right = shuffle_distribution(report.statistic, pi2, sigma2);
  } else {
    if (linear_stat(report.statistic, ce.pi) !=
            linear_stat(report.statistic, ce.pi_prime) ||
        linear_stat(report.statistic, ce.sigma) !=
            linear_stat(report.statistic, ce.sigma_prime))
      return false;
    left = shuffle_distribution(report.statistic, ce.pi, ce.sigma);
    right = shuffle_distribution(report.statistic, ce.pi_prime, ce.sigma_prime);
  }
  return left == ce.left && right == ce.right && left != right;
}

Distribution split_distribution(const Cycle &c, Statistic lid) {
  std::vector<StatValue> values;
  values.reserve(c.size());
  for (Entry e : c.canonical())
    values.push_back(linear_stat(lid, split(c, e)));
  return Distribution(std::move(values));
}

namespace {

void require_pair(Statistic cid, Statistic lid, const char *what) {
  if (!is_cyclic(cid) || is_cyclic(lid))
    throw std::invalid_argument(std::string(what) +
                                ": need a cyclic and a linear statistic, got " +
                                std::string(name(cid)) + " and " +
                                std::string(name(lid)));
}

// First pair (i, j), i < j, in lexicographic order with equal keys but
// different payloads.
template <class Payload>
std::optional<std::pair<std::size_t, std::size_t>>
first_disagreement(const std::vector<StatValue> &keys,
                   const std::vector<Payload> &payload,
                   std::uint64_t &pairs_checked) {
  auto groups = group_by_value(keys);
  std::vector<std::pair<std::size_t, std::size_t>> slot(keys.size());
  for (std::size_t g = 0; g < groups.size(); ++g)
    for (std::size_t r = 0; r < groups[g].size(); ++r)
      slot[groups[g][r]] = {g, r};
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto &group = groups[slot[i].first];
    for (std::size_t r = slot[i].second + 1; r < group.size(); ++r) {
      ++pairs_checked;
      if (payload[i] != payload[group[r]])
        return std::make_pair(i, group[r]);
    }
  }
  return std::nullopt;
}

} // namespace

LiftingReport check_lifting_a(Statistic cid, Statistic lid, int max_n) {
  require_pair(cid, lid, "check_lifting_a");
  LiftingReport report;
  report.cyclic_statistic = cid;
  report.linear_statistic = lid;
  report.condition = LiftingCondition::a;
  report.bound = max_n;
  for (int n = 1; n <= max_n; ++n) {
    auto cycles = all_cycles(interval(n));
    std::vector<StatValue> reduced, lifted;
    for (const Cycle &t : cycles) {
      reduced.push_back(linear_stat(lid, max_removal(t)));
      lifted.push_back(cyclic_stat(cid, t));
    }
    if (auto bad = first_disagreement(reduced, lifted, report.pairs_checked)) {
      auto [i, j] = *bad;
      report.verdict = LiftingVerdict::violation;
      report.violation =
          LiftingViolation{cycles[i], cycles[j], reduced[i],
                           Distribution({lifted[i]}), Distribution({lifted[j]})};
      return report;
    }
  }
  return report;
}

LiftingReport check_lifting_b(Statistic cid, Statistic lid, int max_m) {
  require_pair(cid, lid, "check_lifting_b");
  LiftingReport report;
  report.cyclic_statistic = cid;
  report.linear_statistic = lid;
  report.condition = LiftingCondition::b;
  report.bound = max_m;
  for (int m = 1; m <= max_m; ++m) {
    auto cycles = all_cycles(interval(m));
    std::vector<StatValue> values;
    std::vector<Distribution> splits;
    for (const Cycle &p : cycles) {
      values.push_back(cyclic_stat(cid, p));
      splits.push_back(split_distribution(p, lid));
    }
    if (auto bad = first_disagreement(values, splits, report.pairs_checked)) {
      auto [i, j] = *bad;
      report.verdict = LiftingVerdict::violation;
      report.violation = LiftingViolation{cycles[i], cycles[j], values[i],
                                          splits[i], splits[j]};
      return report;
    }
  }
  return report;
}

bool replay(const LiftingReport &report) {
  if (!report.violation)
    return false;
  const LiftingViolation &v = *report.violation;
  Statistic cid = report.cyclic_statistic;
  Statistic lid = report.linear_statistic;
  if (v.first.size() != v.second.size())
    return false;
  if (report.condition == LiftingCondition::a) {
    return linear_stat(lid, max_removal(v.first)) == v.agreed &&
           linear_stat(lid, max_removal(v.second)) == v.agreed &&
           Distribution({cyclic_stat(cid, v.first)}) == v.first_image &&
           Distribution({cyclic_stat(cid, v.second)}) == v.second_image &&
           v.first_image != v.second_image;
  }
  return cyclic_stat(cid, v.first) == v.agreed &&
         cyclic_stat(cid, v.second) == v.agreed &&
         split_distribution(v.first, lid) == v.first_image &&
         split_distribution(v.second, lid) == v.second_image &&
         v.first_image != v.second_image;
}

} // namespace cycperm
