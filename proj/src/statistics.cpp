#include "cycperm/statistics.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace cycperm {

namespace {

constexpr std::array kAll{
    Statistic::Des, Statistic::des,  Statistic::Pk,  Statistic::pk,
    Statistic::maj, Statistic::bru,  Statistic::cDes, Statistic::cdes,
    Statistic::cPk, Statistic::cpk,  Statistic::cbru,
};

// Direction of each step w_i -> w_{i+1}, cyclically: true for an ascent.
std::vector<bool> cyclic_directions(const Word &w) {
  std::size_t n = w.size();
  std::vector<bool> up(n);
  for (std::size_t i = 0; i < n; ++i)
    up[i] = w[i] < w[(i + 1) % n];
  return up;
}

PositionsMultiset over_rotations(const Word &w, IndexSet (*f)(const Word &)) {
  PositionsMultiset sets;
  sets.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    sets.push_back(f(w.rotated(k)));
  return sets;
}

} // namespace

bool is_cyclic(Statistic id) {
  switch (id) {
  case Statistic::cDes:
  case Statistic::cdes:
  case Statistic::cPk:
  case Statistic::cpk:
  case Statistic::cbru:
    return true;
  default:
    return false;
  }
}

std::string_view name(Statistic id) {
  switch (id) {
  case Statistic::Des: return "Des";
  case Statistic::des: return "des";
  case Statistic::Pk: return "Pk";
  case Statistic::pk: return "pk";
  case Statistic::maj: return "maj";
  case Statistic::bru: return "bru";
  case Statistic::cDes: return "cDes";
  case Statistic::cdes: return "cdes";
  case Statistic::cPk: return "cPk";
  case Statistic::cpk: return "cpk";
  case Statistic::cbru: return "cbru";
  }
  return "?";
}

std::optional<Statistic> parse_statistic(std::string_view text) {
  for (Statistic id : kAll)
    if (name(id) == text)
      return id;
  return std::nullopt;
}

std::span<const Statistic> all_statistics() { return kAll; }

StatValue::StatValue(PositionsMultiset sets) {
  std::sort(sets.begin(), sets.end());
  value_ = std::move(sets);
}

Distribution::Distribution(std::vector<StatValue> values)
    : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

std::vector<std::pair<StatValue, std::size_t>>
Distribution::multiplicities() const {
  std::vector<std::pair<StatValue, std::size_t>> out;
  for (const StatValue &v : values_) {
    if (!out.empty() && out.back().first == v)
      ++out.back().second;
    else
      out.emplace_back(v, 1);
  }
  return out;
}

IndexSet descent_set(const Word &w) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1])
      out.push_back(static_cast<int>(i + 1));
  return IndexSet(std::move(out));
}

IndexSet peak_set(const Word &w) {
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if (w[i - 1] < w[i] && w[i] > w[i + 1])
      out.push_back(static_cast<int>(i + 1));
  return IndexSet(std::move(out));
}

std::int64_t major_index(const Word &w) {
  std::int64_t sum = 0;
  for (int i : descent_set(w))
    sum += i;
  return sum;
}

std::int64_t biruns(const Word &w) {
  if (w.size() <= 2)
    return w.empty() ? 0 : 1;
  std::int64_t runs = 1;
  for (std::size_t i = 1; i + 1 < w.size(); ++i)
    if ((w[i - 1] < w[i]) != (w[i] < w[i + 1]))
      ++runs;
  return runs;
}

IndexSet cdes_set_linear(const Word &w) {
  if (w.empty())
    throw std::invalid_argument("cdes_set_linear: empty word");
  std::size_t n = w.size();
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i)
    if (w[i] > w[(i + 1) % n])
      out.push_back(static_cast<int>(i + 1));
  return IndexSet(std::move(out));
}

IndexSet cpk_set_linear(const Word &w) {
  if (w.empty())
    throw std::invalid_argument("cpk_set_linear: empty word");
  std::size_t n = w.size();
  std::vector<int> out;
  for (std::size_t i = 0; i < n; ++i) {
    Entry prev = w[(i + n - 1) % n];
    Entry next = w[(i + 1) % n];
    if (prev < w[i] && w[i] > next)
      out.push_back(static_cast<int>(i + 1));
  }
  return IndexSet(std::move(out));
}

std::int64_t cyclic_biruns(const Word &w) {
  if (w.empty())
    throw std::invalid_argument("cyclic_biruns: empty word");
  if (w.size() == 1)
    return 1;
  std::vector<bool> up = cyclic_directions(w);
  std::size_t n = up.size();
  std::int64_t turns = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (up[i] != up[(i + 1) % n])
      ++turns;
  return turns;
}

StatValue linear_stat(Statistic id, const Word &w) {
  switch (id) {
  case Statistic::Des: return StatValue(descent_set(w));
  case Statistic::des:
    return StatValue(static_cast<std::int64_t>(descent_set(w).size()));
  case Statistic::Pk: return StatValue(peak_set(w));
  case Statistic::pk:
    return StatValue(static_cast<std::int64_t>(peak_set(w).size()));
  case Statistic::maj: return StatValue(major_index(w));
  case Statistic::bru: return StatValue(biruns(w));
  default:
    throw std::invalid_argument("linear_stat: " + std::string(name(id)) +
                                " is a cyclic statistic");
  }
}

StatValue cyclic_stat(Statistic id, const Cycle &c) {
  const Word &w = c.canonical();
  switch (id) {
  case Statistic::cDes: return StatValue(over_rotations(w, cdes_set_linear));
  case Statistic::cdes:
    return StatValue(static_cast<std::int64_t>(cdes_set_linear(w).size()));
  case Statistic::cPk: return StatValue(over_rotations(w, cpk_set_linear));
  case Statistic::cpk:
    return StatValue(static_cast<std::int64_t>(cpk_set_linear(w).size()));
  case Statistic::cbru: return StatValue(cyclic_biruns(w));
  default:
    throw std::invalid_argument("cyclic_stat: " + std::string(name(id)) +
                                " is a linear statistic");
  }
}

Distribution distribution(Statistic id, std::span<const Word> collection) {
  if (is_cyclic(id))
    throw std::invalid_argument("distribution: " + std::string(name(id)) +
                                " cannot be evaluated on linear permutations");
  std::vector<StatValue> values;
  values.reserve(collection.size());
  for (const Word &w : collection)
    values.push_back(linear_stat(id, w));
  return Distribution(std::move(values));
}

Distribution distribution(Statistic id, std::span<const Cycle> collection) {
  if (!is_cyclic(id))
    throw std::invalid_argument("distribution: " + std::string(name(id)) +
                                " cannot be evaluated on cyclic permutations");
  std::vector<StatValue> values;
  values.reserve(collection.size());
  for (const Cycle &c : collection)
    values.push_back(cyclic_stat(id, c));
  return Distribution(std::move(values));
}

} // namespace cycperm
