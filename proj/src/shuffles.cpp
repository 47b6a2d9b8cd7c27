#include "cycperm/shuffles.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cycperm/statistics.hpp"

namespace cycperm {

namespace {

void require_disjoint(const Word &p, const Word &s, const char *what) {
  for (Entry e : p)
    if (s.contains(e))
      throw std::invalid_argument(std::string(what) +
                                  ": operands share the letter " +
                                  std::to_string(e));
}

void interleave(const Word &p, std::size_t i, const Word &s, std::size_t j,
                std::vector<Entry> &prefix, std::vector<Word> &out) {
  if (i == p.size() && j == s.size()) {
    out.push_back(make_word_unchecked(prefix));
    return;
  }
  if (i < p.size()) {
    prefix.push_back(p[i]);
    interleave(p, i + 1, s, j, prefix, out);
    prefix.pop_back();
  }
  if (j < s.size()) {
    prefix.push_back(s[j]);
    interleave(p, i, s, j + 1, prefix, out);
    prefix.pop_back();
  }
}

bool is_interval(const Alphabet &letters, int offset) {
  for (std::size_t k = 0; k < letters.size(); ++k)
    if (letters[k] != offset + static_cast<int>(k) + 1)
      return false;
  return true;
}

} // namespace

std::vector<Word> linear_shuffles(const Word &p, const Word &s) {
  require_disjoint(p, s, "linear_shuffles");
  std::vector<Word> out;
  std::vector<Entry> prefix;
  prefix.reserve(p.size() + s.size());
  interleave(p, 0, s, 0, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cycle> cyclic_shuffles(const Cycle &p, const Cycle &s) {
  require_disjoint(p.canonical(), s.canonical(), "cyclic_shuffles");
  const Word &head = p.canonical();
  Word tail = make_word_unchecked(
      std::vector<Entry>(head.begin() + 1, head.end()));
  std::vector<Cycle> out;
  for (const Word &rot : rotations(s.canonical())) {
    // The shuffle of p's tail with a rotation of s fills the slots after
    // p's first letter in every admissible way.
    for (const Word &rest : linear_shuffles(tail, rot)) {
      std::vector<Entry> letters;
      letters.reserve(head.size() + rot.size());
      letters.push_back(head[0]);
      letters.insert(letters.end(), rest.begin(), rest.end());
      out.emplace_back(make_word_unchecked(std::move(letters)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_cyclic_shuffle(const Cycle &t, const Cycle &p, const Cycle &s) {
  if (t.size() != p.size() + s.size())
    return false;
  Alphabet pa = p.alphabet();
  Alphabet sa = s.alphabet();
  Word rp = restrict_to(t.canonical(), pa);
  Word rs = restrict_to(t.canonical(), sa);
  if (rp.size() != p.size() || rs.size() != s.size())
    return false;
  return Cycle(rp) == p && Cycle(rs) == s;
}

std::vector<Cycle> cyclic_shuffles_at(const Cycle &p, Entry i, const Cycle &s) {
  int m = static_cast<int>(p.size());
  int n = static_cast<int>(s.size());
  if (!is_interval(p.alphabet(), 0) || !is_interval(s.alphabet(), m))
    throw std::invalid_argument(
        "cyclic_shuffles_at: operands must be over [m] and [n]+m");
  if (i < 1 || i > m)
    throw std::invalid_argument("cyclic_shuffles_at: " + std::to_string(i) +
                                " outside [" + std::to_string(m) + "]");
  const Entry top = m + n;
  std::vector<Cycle> out;
  for (Cycle &t : cyclic_shuffles(p, s)) {
    const Word &w = t.canonical();
    std::size_t start = w.find(top);
    Entry first = 0;
    for (std::size_t k = 1; k < w.size(); ++k) {
      Entry e = w[(start + k) % w.size()];
      if (e <= m) {
        first = e;
        break;
      }
    }
    if (first == i)
      out.push_back(std::move(t));
  }
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    return 0;
  std::uint64_t r = 1;
  k = std::min(k, n - k);
  for (int j = 1; j <= k; ++j) {
    // r * (n-k+j) is always divisible by j at this point.
    std::uint64_t num;
    if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(n - k + j), &num))
      throw std::overflow_error("binomial: overflow");
    r = num / static_cast<std::uint64_t>(j);
  }
  return r;
}

std::uint64_t cyclic_shuffle_count(int m, int n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("cyclic_shuffle_count: m, n must be >= 1");
  std::uint64_t r;
  if (__builtin_mul_overflow(static_cast<std::uint64_t>(m + n - 1),
                             binomial(m + n - 2, m - 1), &r))
    throw std::overflow_error("cyclic_shuffle_count: overflow");
  return r;
}

QPoly maj_shuffle_poly(const Word &p, const Word &s) {
  QPoly sum;
  for (const Word &t : linear_shuffles(p, s))
    sum += QPoly::monomial(static_cast<std::size_t>(major_index(t)));
  return sum;
}

} // namespace cycperm
