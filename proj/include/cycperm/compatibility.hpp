#pragma once

#include <cstdint>
#include <optional>

#include "cycperm/perm_core.hpp"
#include "cycperm/statistics.hpp"

namespace cycperm {

enum class Mode { linear, cyclic };
enum class Verdict { compatible, counterexample };

/**
 * A quadruple violating shuffle compatibility: pi and pi_prime have equal
 * length and statistic value, likewise sigma and sigma_prime, yet the
 * distributions over pi ш sigma and pi_prime ш sigma_prime differ. In
 * cyclic mode the four words are canonical cycle representatives.
 */
struct Counterexample {
  Word pi;
  Word pi_prime;
  Word sigma;
  Word sigma_prime;
  Distribution left;
  Distribution right;
};

struct CompatReport {
  Statistic statistic = Statistic::Des;
  Mode mode = Mode::linear;
  int max_total_length = 0;
  Verdict verdict = Verdict::compatible;
  std::optional<Counterexample> counterexample;
  std::uint64_t pairs_checked = 0;
};

/**
 * How quadruples are enumerated. fix_sigma compares [pi] ш [sigma] with
 * [pi'] ш [sigma] over pi, pi' on [m] and sigma on [n]+m; fix_pi is the
 * mirror image; both runs fix_sigma then fix_pi. quadruple runs the full
 * definition over every split of [m+n] into two alphabets.
 */
enum class Reduction { fix_sigma, fix_pi, both, quadruple };

struct EngineOptions {
  /// Worker threads used to evaluate shuffle distributions. 0 means 1.
  unsigned jobs = 1;
  Reduction reduction = Reduction::both;
};

/// Distribution of id over p ш s (linear) or [p] ш [s] (cyclic).
Distribution shuffle_distribution(Statistic id, const Word &p, const Word &s);
Distribution shuffle_distribution(Statistic id, const Cycle &p, const Cycle &s);

/**
 * Exhaustive shuffle-compatibility check over all operand lengths m, n >= 1
 * with m + n <= max_total, searched by increasing m + n, then m, then
 * lexicographically. The first counterexample found is reported.
 * Throws std::invalid_argument if max_total < 2 or the statistic's tag does
 * not match the function.
 */
CompatReport check_linear_compat(Statistic id, int max_total,
                                 const EngineOptions &options = {});
CompatReport check_cyclic_compat(Statistic id, int max_total,
                                 const EngineOptions &options = {});

/// Dispatches on is_cyclic(id).
CompatReport check_compat(Statistic id, int max_total,
                          const EngineOptions &options = {});

/// Recomputes the stored distributions; true iff they match the report and
/// differ from each other. False when there is no counterexample.
bool replay(const CompatReport &report);

enum class LiftingCondition { a, b };
enum class LiftingVerdict { holds, violation };

/**
 * Witness against a lifting hypothesis.
 *   (a): agreed = lid(M[first]) = lid(M[second]); the images are the
 *        one-element multisets {{cid[first]}} and {{cid[second]}}.
 *   (b): agreed = cid[first] = cid[second]; the images are
 *        {{lid(S_i[first]) : i}} and {{lid(S_j[second]) : j}}.
 */
struct LiftingViolation {
  Cycle first;
  Cycle second;
  StatValue agreed;
  Distribution first_image;
  Distribution second_image;
};

struct LiftingReport {
  Statistic cyclic_statistic = Statistic::cDes;
  Statistic linear_statistic = Statistic::Des;
  LiftingCondition condition = LiftingCondition::a;
  int bound = 0;
  LiftingVerdict verdict = LiftingVerdict::holds;
  std::optional<LiftingViolation> violation;
  std::uint64_t pairs_checked = 0;
};

/// Multiset {{lid(S_i[c]) : i a letter of c}}.
Distribution split_distribution(const Cycle &c, Statistic lid);

/// For all [t], [t'] over [n], n <= max_n: lid(M[t]) = lid(M[t']) must
/// imply cid[t] = cid[t'].
LiftingReport check_lifting_a(Statistic cid, Statistic lid, int max_n);

/// For all [p], [p'] over [m], m <= max_m, with cid[p] = cid[p']: the split
/// distributions must agree, which is exactly the existence of f.
LiftingReport check_lifting_b(Statistic cid, Statistic lid, int max_m);

bool replay(const LiftingReport &report);

} // namespace cycperm
