#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cycperm/perm_core.hpp"

namespace cycperm {

/// Statistics on linear permutations (first six) and cyclic permutations.
enum class Statistic {
  Des,
  des,
  Pk,
  pk,
  maj,
  bru,
  cDes,
  cdes,
  cPk,
  cpk,
  cbru,
};

bool is_cyclic(Statistic id);
std::string_view name(Statistic id);
/// Exact, case-sensitive match on the short names ("Des", "cpk", ...).
std::optional<Statistic> parse_statistic(std::string_view text);
std::span<const Statistic> all_statistics();

/// Sorted list of sorted position sets, repeats adjacent.
using PositionsMultiset = std::vector<IndexSet>;

/**
 * The value of a statistic: a count, a set of positions, or a multiset of
 * position sets. Ordering is by kind first, then by canonical encoding.
 */
class StatValue {
public:
  using Storage = std::variant<std::int64_t, IndexSet, PositionsMultiset>;

  StatValue() : value_(std::int64_t{0}) {}
  explicit StatValue(std::int64_t count) : value_(count) {}
  explicit StatValue(IndexSet positions) : value_(std::move(positions)) {}
  /// Sorts the member sets into canonical order.
  explicit StatValue(PositionsMultiset sets);

  bool is_count() const { return std::holds_alternative<std::int64_t>(value_); }
  bool is_positions() const { return std::holds_alternative<IndexSet>(value_); }
  bool is_multiset() const {
    return std::holds_alternative<PositionsMultiset>(value_);
  }

  std::int64_t count() const { return std::get<std::int64_t>(value_); }
  const IndexSet &positions() const { return std::get<IndexSet>(value_); }
  const PositionsMultiset &multiset() const {
    return std::get<PositionsMultiset>(value_);
  }
  const Storage &storage() const { return value_; }

  auto operator<=>(const StatValue &) const = default;
  bool operator==(const StatValue &) const = default;

private:
  Storage value_;
};

/**
 * A multiset of StatValues. Stored sorted so that equality is
 * order-insensitive and multiplicity-exact.
 */
class Distribution {
public:
  Distribution() = default;
  explicit Distribution(std::vector<StatValue> values);

  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }
  const std::vector<StatValue> &values() const { return values_; }

  /// Distinct values with their multiplicities, ascending.
  std::vector<std::pair<StatValue, std::size_t>> multiplicities() const;

  auto operator<=>(const Distribution &) const = default;
  bool operator==(const Distribution &) const = default;

private:
  std::vector<StatValue> values_;
};

// Linear evaluation. All of these accept the empty word.
IndexSet descent_set(const Word &w);
IndexSet peak_set(const Word &w);
std::int64_t major_index(const Word &w);
std::int64_t biruns(const Word &w);

/// Cyclic descent set of a linear permutation; the pair (w_n, w_1) is tested.
IndexSet cdes_set_linear(const Word &w);
/// Cyclic peak set of a linear permutation; neighbor indices taken mod n.
IndexSet cpk_set_linear(const Word &w);
/// Number of maximal monotone circular factors.
std::int64_t cyclic_biruns(const Word &w);

/// Throws std::invalid_argument when id is cyclic.
StatValue linear_stat(Statistic id, const Word &w);
/// Throws std::invalid_argument when id is linear.
StatValue cyclic_stat(Statistic id, const Cycle &c);

/// Evaluates id on a Word or Cycle according to the element type.
inline StatValue evaluate(Statistic id, const Word &w) {
  return linear_stat(id, w);
}
inline StatValue evaluate(Statistic id, const Cycle &c) {
  return cyclic_stat(id, c);
}

Distribution distribution(Statistic id, std::span<const Word> collection);
Distribution distribution(Statistic id, std::span<const Cycle> collection);

} // namespace cycperm
