#include "cycperm/perm_core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cycperm {

namespace {

void require_distinct_positive(const std::vector<Entry> &entries,
                               const char *what) {
  std::vector<Entry> sorted(entries);
  std::sort(sorted.begin(), sorted.end());
  if (!sorted.empty() && sorted.front() <= 0)
    throw std::invalid_argument(std::string(what) +
                                ": entries must be positive, got " +
                                std::to_string(sorted.front()));
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw std::invalid_argument(std::string(what) + ": repeated entry " +
                                std::to_string(*dup));
}

} // namespace

IndexSet::IndexSet(std::vector<int> positions)
    : positions_(std::move(positions)) {
  std::sort(positions_.begin(), positions_.end());
  positions_.erase(std::unique(positions_.begin(), positions_.end()),
                   positions_.end());
  if (!positions_.empty() && positions_.front() <= 0)
    throw std::invalid_argument("IndexSet: positions are 1-based");
}

IndexSet::IndexSet(std::initializer_list<int> positions)
    : IndexSet(std::vector<int>(positions)) {}

bool IndexSet::contains(int position) const {
  return std::binary_search(positions_.begin(), positions_.end(), position);
}

Word::Word(std::vector<Entry> entries) : entries_(std::move(entries)) {
  require_distinct_positive(entries_, "Word");
}

Word::Word(std::initializer_list<Entry> entries)
    : Word(std::vector<Entry>(entries)) {}

Word make_word_unchecked(std::vector<Entry> entries) {
  return Word(Word::Unchecked{}, std::move(entries));
}

std::size_t Word::find(Entry letter) const {
  return static_cast<std::size_t>(
      std::find(entries_.begin(), entries_.end(), letter) - entries_.begin());
}

Entry Word::min() const {
  if (entries_.empty())
    throw std::invalid_argument("Word::min: empty word");
  return *std::min_element(entries_.begin(), entries_.end());
}

Entry Word::max() const {
  if (entries_.empty())
    throw std::invalid_argument("Word::max: empty word");
  return *std::max_element(entries_.begin(), entries_.end());
}

Alphabet Word::alphabet() const {
  Alphabet letters(entries_);
  std::sort(letters.begin(), letters.end());
  return letters;
}

Word Word::rotated(std::size_t k) const {
  if (entries_.empty())
    return *this;
  std::vector<Entry> out(entries_);
  std::rotate(out.begin(), out.begin() + static_cast<long>(k % out.size()),
              out.end());
  return make_word_unchecked(std::move(out));
}

Cycle::Cycle(const Word &any_rotation) {
  if (any_rotation.empty())
    throw std::invalid_argument("Cycle: cyclic permutations are nonempty");
  canonical_ = any_rotation.rotated(any_rotation.find(any_rotation.min()));
}

Cycle::Cycle(std::initializer_list<Entry> any_rotation)
    : Cycle(Word(any_rotation)) {}

std::vector<Word> rotations(const Word &w) {
  if (w.empty())
    return {w};
  std::vector<Word> out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k)
    out.push_back(w.rotated(k));
  return out;
}

Cycle canonical_cycle(const Word &w) { return Cycle(w); }

Alphabet interval(int n, int offset) {
  if (n < 0)
    throw std::invalid_argument("interval: negative length");
  Alphabet out(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    out[static_cast<std::size_t>(k)] = offset + k + 1;
  return out;
}

Alphabet make_alphabet(std::vector<Entry> letters) {
  require_distinct_positive(letters, "alphabet");
  std::sort(letters.begin(), letters.end());
  return letters;
}

Word standardize(const Word &w, std::span<const Entry> target) {
  if (target.size() != w.size())
    throw std::invalid_argument("standardize: target has " +
                                std::to_string(target.size()) +
                                " letters, word has " +
                                std::to_string(w.size()));
  Alphabet sorted_target = make_alphabet({target.begin(), target.end()});
  Alphabet source = w.alphabet();
  std::vector<Entry> out;
  out.reserve(w.size());
  for (Entry e : w) {
    auto rank = std::lower_bound(source.begin(), source.end(), e) -
                source.begin();
    out.push_back(sorted_target[static_cast<std::size_t>(rank)]);
  }
  return make_word_unchecked(std::move(out));
}

Word standardize(const Word &w) {
  Alphabet target = interval(static_cast<int>(w.size()));
  return standardize(w, target);
}

Cycle standardize_cycle(const Cycle &c, std::span<const Entry> target) {
  return Cycle(standardize(c.canonical(), target));
}

Cycle standardize_cycle(const Cycle &c) {
  return Cycle(standardize(c.canonical()));
}

IndexSet shift_mod(const IndexSet &s, int shift, int m) {
  if (m <= 0)
    throw std::invalid_argument("shift_mod: modulus must be positive");
  std::vector<int> out;
  out.reserve(s.size());
  for (int a : s) {
    if (a < 1 || a > m)
      throw std::invalid_argument("shift_mod: position " + std::to_string(a) +
                                  " outside [" + std::to_string(m) + "]");
    int r = ((a - 1 + shift) % m + m) % m;
    out.push_back(r + 1);
  }
  return IndexSet(std::move(out));
}

Word restrict_to(const Word &w, std::span<const Entry> alphabet) {
  std::vector<Entry> out;
  for (Entry e : w)
    if (std::find(alphabet.begin(), alphabet.end(), e) != alphabet.end())
      out.push_back(e);
  return make_word_unchecked(std::move(out));
}

bool disjoint(std::span<const Entry> a, std::span<const Entry> b) {
  for (Entry x : a)
    if (std::find(b.begin(), b.end(), x) != b.end())
      return false;
  return true;
}

std::vector<Word> all_words(std::span<const Entry> alphabet) {
  std::vector<Entry> letters = make_alphabet({alphabet.begin(), alphabet.end()});
  std::vector<Word> out;
  do {
    out.push_back(make_word_unchecked(letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

std::vector<Cycle> all_cycles(std::span<const Entry> alphabet) {
  std::vector<Entry> letters = make_alphabet({alphabet.begin(), alphabet.end()});
  if (letters.empty())
    throw std::invalid_argument("all_cycles: empty alphabet");
  std::vector<Cycle> out;
  do {
    out.emplace_back(make_word_unchecked(letters));
  } while (std::next_permutation(letters.begin() + 1, letters.end()));
  return out;
}

Word transpose_letters(const Word &w, Entry a, Entry b) {
  std::vector<Entry> out(w.entries());
  for (Entry &e : out) {
    if (e == a)
      e = b;
    else if (e == b)
      e = a;
  }
  return Word(std::move(out));
}

} // namespace cycperm
