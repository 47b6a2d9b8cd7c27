#pragma once

#include <vector>

#include "cycperm/perm_core.hpp"
#include "cycperm/qpoly.hpp"

namespace cycperm {

/// A set of cyclic patterns, each standardized to [k] for its length k.
class PatternSet {
public:
  PatternSet() = default;
  /// Sorts and deduplicates. Throws std::invalid_argument naming the
  /// standardized form if some pattern is not over [k].
  explicit PatternSet(std::vector<Cycle> patterns);

  const std::vector<Cycle> &patterns() const { return patterns_; }
  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  auto begin() const { return patterns_.begin(); }
  auto end() const { return patterns_.end(); }

private:
  std::vector<Cycle> patterns_;
};

/// True iff some subsequence of host's canonical word, read as a cycle,
/// standardizes to pattern. pattern must be over [k].
bool cyclic_contains(const Cycle &host, const Cycle &pattern);

/// Cycles over [n] avoiding every pattern, sorted. Requires n >= 1.
std::vector<Cycle> avoiders(int n, const PatternSet &patterns);

/// Sum over avoiders(n, patterns) of q^cdes.
QPoly avoidance_poly(int n, const PatternSet &patterns);

} // namespace cycperm
