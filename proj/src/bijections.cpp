#include "cycperm/bijections.hpp"

#include <map>
#include <string>

#include "cycperm/shuffles.hpp"

namespace cycperm {

namespace {

std::vector<std::pair<StatValue, Word>> keyed(std::span<const Word> words,
                                              Statistic id) {
  std::vector<std::pair<StatValue, Word>> out;
  out.reserve(words.size());
  for (const Word &w : words)
    out.emplace_back(linear_stat(id, w), w);
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

Word split(const Cycle &c, Entry i) {
  const Word &w = c.canonical();
  std::size_t at = w.find(i);
  if (at == w.size())
    throw std::invalid_argument("split: " + std::to_string(i) +
                                " is not a letter of the cycle");
  return w.rotated(at);
}

Word max_removal(const Cycle &c) {
  Word w = split(c, c.max());
  return make_word_unchecked(std::vector<Entry>(w.begin() + 1, w.end()));
}

Cycle max_removal_inv(const Word &w, Entry top) {
  if (!w.empty() && top <= w.max())
    throw std::invalid_argument("max_removal_inv: " + std::to_string(top) +
                                " is not larger than every letter");
  std::vector<Entry> letters;
  letters.reserve(w.size() + 1);
  letters.push_back(top);
  letters.insert(letters.end(), w.begin(), w.end());
  return Cycle(Word(std::move(letters)));
}

Cycle swap_map(const Cycle &t, Entry i) {
  const Word &w = t.canonical();
  std::size_t a = w.find(i - 1);
  std::size_t b = w.find(i);
  if (a == w.size() || b == w.size())
    throw std::invalid_argument("swap_map: cycle must contain " +
                                std::to_string(i - 1) + " and " +
                                std::to_string(i));
  std::size_t n = w.size();
  bool adjacent = (a + 1) % n == b || (b + 1) % n == a;
  if (adjacent)
    return t;
  return Cycle(transpose_letters(w, i - 1, i));
}

WordBijection build_theta(std::span<const Word> src, std::span<const Word> dst,
                          Statistic id) {
  auto from = keyed(src, id);
  auto to = keyed(dst, id);
  bool same = from.size() == to.size();
  for (std::size_t k = 0; same && k < from.size(); ++k)
    same = from[k].first == to[k].first;
  if (!same)
    throw DistributionMismatch("build_theta: distributions of " +
                               std::string(name(id)) + " differ");
  WordBijection theta;
  theta.pairs.reserve(from.size());
  for (std::size_t k = 0; k < from.size(); ++k)
    theta.pairs.emplace_back(std::move(from[k].second),
                             std::move(to[k].second));
  return theta;
}

CycleBijection theta_prime(const Cycle &p, Entry i, const Cycle &p2, Entry j,
                           const Cycle &s, Statistic id) {
  if (p.size() != p2.size())
    throw std::invalid_argument("theta_prime: operands differ in length");
  const Entry top = static_cast<Entry>(p.size() + s.size());
  Word reduced = max_removal(s);
  auto src = linear_shuffles(split(p, i), reduced);
  auto dst = linear_shuffles(split(p2, j), reduced);
  WordBijection theta = build_theta(src, dst, id);

  std::map<Word, Word> lookup;
  for (const auto &[a, b] : theta.pairs)
    lookup.emplace(a, b);

  CycleBijection out;
  for (const Cycle &t : cyclic_shuffles_at(p, i, s)) {
    auto it = lookup.find(max_removal(t));
    if (it == lookup.end())
      throw std::logic_error("theta_prime: M does not map the cell into "
                             "the linear shuffle set");
    out.pairs.emplace_back(t, max_removal_inv(it->second, top));
  }
  return out;
}

std::optional<std::vector<std::pair<Entry, Entry>>>
split_matching(const Cycle &p, const Cycle &p2, Statistic id) {
  if (p.size() != p2.size())
    return std::nullopt;
  auto by_value = [id](const Cycle &c) {
    std::vector<std::pair<StatValue, Entry>> v;
    for (Entry e : c.canonical())
      v.emplace_back(linear_stat(id, split(c, e)), e);
    std::sort(v.begin(), v.end());
    return v;
  };
  auto a = by_value(p);
  auto b = by_value(p2);
  std::vector<std::pair<Entry, Entry>> f;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].first != b[k].first)
      return std::nullopt;
    f.emplace_back(a[k].second, b[k].second);
  }
  std::sort(f.begin(), f.end());
  return f;
}

} // namespace cycperm
