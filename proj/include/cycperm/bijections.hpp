#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cycperm/perm_core.hpp"
#include "cycperm/statistics.hpp"

namespace cycperm {

/// Thrown when no statistic-preserving bijection exists between two sets.
class DistributionMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

enum class PermKind { linear, cyclic };

template <class Perm> constexpr PermKind kind_of();
template <> constexpr PermKind kind_of<Word>() { return PermKind::linear; }
template <> constexpr PermKind kind_of<Cycle>() { return PermKind::cyclic; }

/**
 * An explicit bijection, stored as its list of (source, target) pairs.
 */
template <class Source, class Target> struct BijectionWitness {
  static constexpr PermKind source_kind = kind_of<Source>();
  static constexpr PermKind target_kind = kind_of<Target>();

  std::vector<std::pair<Source, Target>> pairs;

  /// Sources pairwise distinct and targets pairwise distinct.
  bool is_bijection() const {
    std::vector<Source> sources;
    std::vector<Target> targets;
    for (const auto &[a, b] : pairs) {
      sources.push_back(a);
      targets.push_back(b);
    }
    auto distinct = [](auto v) {
      std::sort(v.begin(), v.end());
      return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    return distinct(std::move(sources)) && distinct(std::move(targets));
  }

  /// Target of a source element, if paired.
  std::optional<Target> image(const Source &x) const {
    for (const auto &[a, b] : pairs)
      if (a == x)
        return b;
    return std::nullopt;
  }
};

using WordBijection = BijectionWitness<Word, Word>;
using CycleBijection = BijectionWitness<Cycle, Cycle>;

/// S_i: the rotation of c beginning with the letter i.
Word split(const Cycle &c, Entry i);

/// M: split at the maximum letter, then drop it.
Word max_removal(const Cycle &c);

/// Inverse of M: the Cycle of (top w). top must exceed every letter of w.
Cycle max_removal_inv(const Word &w, Entry top);

/// T_i: exchanges i-1 and i unless they are cyclically adjacent in t.
Cycle swap_map(const Cycle &t, Entry i);

/**
 * A pairing src -> dst preserving the linear statistic id. Elements are
 * matched within equal-value groups in sorted order. Throws
 * DistributionMismatch if the two distributions differ.
 */
WordBijection build_theta(std::span<const Word> src, std::span<const Word> dst,
                          Statistic id);

/**
 * M^-1 . theta . M from [p] ш_i [s] to [p2] ш_j [s]. p, p2 are over [m] and
 * s over [n]+m. theta is build_theta on S_i[p] ш M[s] and S_j[p2] ш M[s].
 */
CycleBijection theta_prime(const Cycle &p, Entry i, const Cycle &p2, Entry j,
                           const Cycle &s, Statistic id);

/**
 * A bijection f on the letters of p and p2 with id(S_i[p]) = id(S_f(i)[p2])
 * for every i, matched in sorted order within equal-value groups; nullopt if
 * none exists. Pairs are (i, f(i)) with i ascending.
 */
std::optional<std::vector<std::pair<Entry, Entry>>>
split_matching(const Cycle &p, const Cycle &p2, Statistic id);

} // namespace cycperm
