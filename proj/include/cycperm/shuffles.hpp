#pragma once

#include <cstdint>
#include <vector>

#include "cycperm/perm_core.hpp"
#include "cycperm/qpoly.hpp"

namespace cycperm {

/// All interleavings of p and s keeping both internal orders, sorted.
/// Either operand may be empty. Throws on overlapping alphabets.
std::vector<Word> linear_shuffles(const Word &p, const Word &s);

/**
 * Cyclic shuffle set [p] ш [s], sorted by canonical representative.
 *
 * Each shuffle is written starting at p's first canonical letter; the other
 * m-1 letters of p take an ordered choice of the remaining m+n-1 slots and a
 * rotation of s fills the rest. No deduplication is performed.
 */
std::vector<Cycle> cyclic_shuffles(const Cycle &p, const Cycle &s);

/// Definitional membership: the restriction of t to each operand alphabet is
/// a rotation of that operand.
bool is_cyclic_shuffle(const Cycle &t, const Cycle &p, const Cycle &s);

/**
 * The cell of [p] ш [s] where, reading cyclically from m+n, the first letter
 * of p met is i. p must be over [m] and s over [n]+m; i must lie in [m].
 */
std::vector<Cycle> cyclic_shuffles_at(const Cycle &p, Entry i, const Cycle &s);

/// (m+n-1) * C(m+n-2, m-1). Requires m, n >= 1.
std::uint64_t cyclic_shuffle_count(int m, int n);

/// C(n, k) with overflow checking.
std::uint64_t binomial(int n, int k);

/// Sum of q^maj(t) over t in p ш s.
QPoly maj_shuffle_poly(const Word &p, const Word &s);

} // namespace cycperm
