#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace cycperm {

/// A permutation letter. Letters are arbitrary distinct positive integers.
using Entry = int;

/// A sorted set of distinct letters, e.g. the alphabet of a permutation.
using Alphabet = std::vector<Entry>;

/**
 * A set of 1-based positions, stored sorted and without repeats.
 */
class IndexSet {
public:
  IndexSet() = default;
  /// Sorts and removes repeats; rejects nonpositive positions.
  explicit IndexSet(std::vector<int> positions);
  IndexSet(std::initializer_list<int> positions);

  std::size_t size() const { return positions_.size(); }
  bool empty() const { return positions_.empty(); }
  bool contains(int position) const;

  auto begin() const { return positions_.begin(); }
  auto end() const { return positions_.end(); }
  const std::vector<int> &positions() const { return positions_; }

  auto operator<=>(const IndexSet &) const = default;
  bool operator==(const IndexSet &) const = default;

private:
  std::vector<int> positions_;
};

/**
 * A linear permutation: a finite sequence of distinct positive integers.
 * The empty Word is valid.
 */
class Word {
public:
  Word() = default;
  /// Throws std::invalid_argument on a nonpositive or repeated entry.
  explicit Word(std::vector<Entry> entries);
  Word(std::initializer_list<Entry> entries);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// 0-based access.
  Entry operator[](std::size_t index) const { return entries_[index]; }
  const std::vector<Entry> &entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  /// Position (0-based) of a letter, or size() if absent.
  std::size_t find(Entry letter) const;
  bool contains(Entry letter) const { return find(letter) != size(); }

  Entry min() const;
  Entry max() const;

  /// Sorted letters of this word.
  Alphabet alphabet() const;

  /// Left rotation by k places: w_{k+1} ... w_n w_1 ... w_k.
  Word rotated(std::size_t k) const;

  auto operator<=>(const Word &) const = default;
  bool operator==(const Word &) const = default;

private:
  struct Unchecked {};
  Word(Unchecked, std::vector<Entry> entries) : entries_(std::move(entries)) {}
  friend Word make_word_unchecked(std::vector<Entry> entries);

  std::vector<Entry> entries_;
};

/// Builds a Word without validating entries. Callers guarantee the invariant.
Word make_word_unchecked(std::vector<Entry> entries);

/**
 * A cyclic permutation, stored as the rotation whose first entry is its
 * minimum. Two Cycles compare equal iff they are rotations of each other.
 */
class Cycle {
public:
  /// Canonicalizes any rotation. Throws std::invalid_argument on empty input.
  explicit Cycle(const Word &any_rotation);
  Cycle(std::initializer_list<Entry> any_rotation);

  const Word &canonical() const { return canonical_; }
  std::size_t size() const { return canonical_.size(); }
  Entry min() const { return canonical_[0]; }
  Entry max() const { return canonical_.max(); }
  bool contains(Entry letter) const { return canonical_.contains(letter); }
  Alphabet alphabet() const { return canonical_.alphabet(); }

  auto operator<=>(const Cycle &) const = default;
  bool operator==(const Cycle &) const = default;

private:
  Word canonical_;
};

/// The n rotations of w, w itself first, then successive left rotations.
/// The empty Word has the single rotation [empty].
std::vector<Word> rotations(const Word &w);

/// Same as Cycle(w); rejects the empty Word.
Cycle canonical_cycle(const Word &w);

/// Alphabet {offset+1, ..., offset+n}.
Alphabet interval(int n, int offset = 0);

/// Validates a target alphabet: sorts, rejects repeats and nonpositive letters.
Alphabet make_alphabet(std::vector<Entry> letters);

/// Replaces the k-th smallest entry of w by the k-th smallest target letter.
Word standardize(const Word &w, std::span<const Entry> target);
/// Standardization onto [n].
Word standardize(const Word &w);

Cycle standardize_cycle(const Cycle &c, std::span<const Entry> target);
Cycle standardize_cycle(const Cycle &c);

/// {a + shift (mod m) | a in s} with representatives in [m].
IndexSet shift_mod(const IndexSet &s, int shift, int m);

/// Subsequence of w made of the letters in alphabet, in order.
Word restrict_to(const Word &w, std::span<const Entry> alphabet);

/// True iff the two alphabets share no letter.
bool disjoint(std::span<const Entry> a, std::span<const Entry> b);

/// L(A) in lexicographic order.
std::vector<Word> all_words(std::span<const Entry> alphabet);

/// C(A) in lexicographic order of canonical representatives. A must be
/// nonempty.
std::vector<Cycle> all_cycles(std::span<const Entry> alphabet);

/// Exchanges two letters wherever they occur.
Word transpose_letters(const Word &w, Entry a, Entry b);

} // namespace cycperm
