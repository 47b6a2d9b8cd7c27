#include <doctest.h>

#include "cycperm/bijections.hpp"
#include "cycperm/compatibility.hpp"
#include "oracles.hpp"

using namespace cycperm;

namespace {

const Statistic kCyclic[] = {Statistic::cDes, Statistic::cdes, Statistic::cPk,
                             Statistic::cpk, Statistic::cbru};

const std::pair<Statistic, Statistic> kLiftPairs[] = {
    {Statistic::cDes, Statistic::Des},
    {Statistic::cdes, Statistic::des},
    {Statistic::cPk, Statistic::Pk},
    {Statistic::cpk, Statistic::pk},
};

EngineOptions with(Reduction r, unsigned jobs = 1) {
  EngineOptions o;
  o.reduction = r;
  o.jobs = jobs;
  return o;
}

} // namespace

TEST_CASE("linear descent statistics are shuffle compatible up to 6") {
  for (Statistic id : {Statistic::Des, Statistic::des, Statistic::Pk,
                       Statistic::pk, Statistic::maj}) {
    CAPTURE(name(id));
    CompatReport r = check_linear_compat(id, 6);
    CHECK(r.verdict == Verdict::compatible);
    CHECK_FALSE(r.counterexample.has_value());
    CHECK(r.mode == Mode::linear);
    CHECK(r.max_total_length == 6);
    CHECK(r.pairs_checked > 0);
    CHECK_FALSE(replay(r));
  }
}

TEST_CASE("bru is not shuffle compatible") {
  CompatReport r = check_linear_compat(Statistic::bru, 6);
  REQUIRE(r.verdict == Verdict::counterexample);
  REQUIRE(r.counterexample.has_value());
  const Counterexample &c = *r.counterexample;
  CHECK(c.left != c.right);
  CHECK(c.pi.size() == c.pi_prime.size());
  CHECK(c.sigma.size() == c.sigma_prime.size());
  CHECK(linear_stat(Statistic::bru, c.pi) ==
        linear_stat(Statistic::bru, c.pi_prime));
  CHECK(linear_stat(Statistic::bru, c.sigma) ==
        linear_stat(Statistic::bru, c.sigma_prime));
  CHECK(shuffle_distribution(Statistic::bru, c.pi, c.sigma) == c.left);
  CHECK(shuffle_distribution(Statistic::bru, c.pi_prime, c.sigma_prime) ==
        c.right);
  CHECK(replay(r));

  CompatReport tampered = r;
  tampered.counterexample->right = tampered.counterexample->left;
  CHECK_FALSE(replay(tampered));
}

TEST_CASE("the first bru counterexample is found at total length 4") {
  CompatReport r = check_linear_compat(Statistic::bru, 4);
  REQUIRE(r.counterexample.has_value());
  CHECK(r.counterexample->pi.size() + r.counterexample->sigma.size() == 4);
  // The search is deterministic.
  CompatReport again = check_linear_compat(Statistic::bru, 6);
  REQUIRE(again.counterexample.has_value());
  CHECK(again.counterexample->pi == r.counterexample->pi);
  CHECK(again.counterexample->sigma_prime == r.counterexample->sigma_prime);
}

TEST_CASE("cyclic statistics are cyclic shuffle compatible up to 6") {
  for (Statistic id : kCyclic) {
    CAPTURE(name(id));
    CompatReport r = check_cyclic_compat(id, 6);
    CHECK(r.verdict == Verdict::compatible);
    CHECK(r.mode == Mode::cyclic);
    CHECK(check_compat(id, 4).verdict == Verdict::compatible);
  }
}

TEST_CASE("compatibility checks validate their arguments") {
  CHECK_THROWS_AS(check_linear_compat(Statistic::cDes, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_cyclic_compat(Statistic::des, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_linear_compat(Statistic::des, 1),
                  std::invalid_argument);
  CHECK(check_linear_compat(Statistic::des, 2).verdict == Verdict::compatible);
}

TEST_CASE("the reductions agree with the full definition up to 5") {
  for (Statistic id : kCyclic) {
    CAPTURE(name(id));
    Verdict full =
        check_cyclic_compat(id, 5, with(Reduction::quadruple)).verdict;
    CHECK(check_cyclic_compat(id, 5, with(Reduction::fix_sigma)).verdict ==
          full);
    CHECK(check_cyclic_compat(id, 5, with(Reduction::fix_pi)).verdict == full);
  }
  for (Statistic id : {Statistic::des, Statistic::bru}) {
    CAPTURE(name(id));
    Verdict full =
        check_linear_compat(id, 5, with(Reduction::quadruple)).verdict;
    CHECK(check_linear_compat(id, 5, with(Reduction::both)).verdict == full);
  }
}

TEST_CASE("quadruple counterexamples replay") {
  CompatReport r =
      check_linear_compat(Statistic::bru, 5, with(Reduction::quadruple));
  REQUIRE(r.verdict == Verdict::counterexample);
  CHECK(replay(r));
}

TEST_CASE("reports do not depend on the number of jobs") {
  CompatReport one = check_linear_compat(Statistic::bru, 6, with(Reduction::both, 1));
  CompatReport many =
      check_linear_compat(Statistic::bru, 6, with(Reduction::both, 4));
  REQUIRE(one.counterexample.has_value());
  REQUIRE(many.counterexample.has_value());
  CHECK(one.counterexample->pi == many.counterexample->pi);
  CHECK(one.counterexample->pi_prime == many.counterexample->pi_prime);
  CHECK(one.counterexample->sigma == many.counterexample->sigma);
  CHECK(one.counterexample->left == many.counterexample->left);
  CHECK(check_cyclic_compat(Statistic::cpk, 6, with(Reduction::both, 3))
            .verdict == Verdict::compatible);
}

TEST_CASE("shuffle_distribution") {
  CHECK(shuffle_distribution(Statistic::des, Word{2, 5}, Word{7, 3}) ==
        Distribution({StatValue(std::int64_t{1}), StatValue(std::int64_t{1}),
                      StatValue(std::int64_t{1}), StatValue(std::int64_t{2}),
                      StatValue(std::int64_t{2}), StatValue(std::int64_t{2})}));
  CHECK(shuffle_distribution(Statistic::cdes, Cycle{1, 3}, Cycle{2, 4}).size() ==
        6);
}

TEST_CASE("lifting hypotheses hold for the four pairs at bound 6") {
  for (auto [cid, lid] : kLiftPairs) {
    CAPTURE(name(cid));
    LiftingReport a = check_lifting_a(cid, lid, 6);
    CHECK(a.verdict == LiftingVerdict::holds);
    CHECK(a.condition == LiftingCondition::a);
    LiftingReport b = check_lifting_b(cid, lid, 6);
    CHECK(b.verdict == LiftingVerdict::holds);
    CHECK(b.condition == LiftingCondition::b);
    CHECK_FALSE(replay(b));
  }
}

TEST_CASE("des of M is too coarse to determine cDes") {
  LiftingReport r = check_lifting_a(Statistic::cDes, Statistic::des, 5);
  REQUIRE(r.verdict == LiftingVerdict::violation);
  REQUIRE(r.violation.has_value());
  const LiftingViolation &v = *r.violation;
  CHECK(linear_stat(Statistic::des, max_removal(v.first)) == v.agreed);
  CHECK(linear_stat(Statistic::des, max_removal(v.second)) == v.agreed);
  CHECK(cyclic_stat(Statistic::cDes, v.first) !=
        cyclic_stat(Statistic::cDes, v.second));
  CHECK(v.first_image != v.second_image);
  CHECK(replay(r));
}

TEST_CASE("lifting (b) fails when the linear statistic is too coarse") {
  // cdes agrees on [1243] and [1324] but the split Des multisets do not.
  LiftingReport r = check_lifting_b(Statistic::cdes, Statistic::Des, 4);
  REQUIRE(r.verdict == LiftingVerdict::violation);
  const LiftingViolation &v = *r.violation;
  CHECK(cyclic_stat(Statistic::cdes, v.first) == v.agreed);
  CHECK(split_distribution(v.first, Statistic::Des) == v.first_image);
  CHECK(split_distribution(v.second, Statistic::Des) == v.second_image);
  CHECK(replay(r));
}

TEST_CASE("lifting checks reject mismatched tags") {
  CHECK_THROWS_AS(check_lifting_a(Statistic::Des, Statistic::Des, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_lifting_b(Statistic::cDes, Statistic::cDes, 4),
                  std::invalid_argument);
}

TEST_CASE("split multiset equality is equivalent to a matching, m <= 5") {
  const Statistic linear[] = {Statistic::Des, Statistic::des, Statistic::Pk,
                              Statistic::pk, Statistic::maj};
  for (Statistic lid : linear)
    for (int m = 1; m <= 5; ++m) {
      auto cycles = all_cycles(interval(m));
      for (const Cycle &p : cycles)
        for (const Cycle &q : cycles) {
          std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
          for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
              if (linear_stat(lid, split(p, i + 1)) ==
                  linear_stat(lid, split(q, j + 1)))
                adj[static_cast<std::size_t>(i)].push_back(j);
          bool matched = oracle::has_perfect_matching(adj, m);
          bool equal = split_distribution(p, lid) == split_distribution(q, lid);
          CHECK(matched == equal);
          CHECK(split_matching(p, q, lid).has_value() == matched);
        }
    }
}
