#include <doctest.h>

#include "cycperm/patterns.hpp"
#include "cycperm/statistics.hpp"
#include "oracles.hpp"

using namespace cycperm;

namespace {

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k)
    f *= k;
  return f;
}

std::vector<Cycle> single_patterns() {
  std::vector<Cycle> out = all_cycles(interval(3));
  for (const Cycle &c : all_cycles(interval(4)))
    out.push_back(c);
  return out;
}

} // namespace

TEST_CASE("cyclic containment examples") {
  CHECK(cyclic_contains(Cycle{1, 3, 2, 4}, Cycle{1, 2, 3}));
  CHECK(cyclic_contains(Cycle{1, 2, 3}, Cycle{1, 2}));
  CHECK_FALSE(cyclic_contains(Cycle{1, 2, 3}, Cycle{1, 2, 3, 4}));
  CHECK_FALSE(cyclic_contains(Cycle{1, 3, 2}, Cycle{1, 2, 3}));
  CHECK(cyclic_contains(Cycle{5}, Cycle{1}));
  CHECK_THROWS_AS(cyclic_contains(Cycle{1, 2, 3}, Cycle{2, 3}),
                  std::invalid_argument);
}

TEST_CASE("containment agrees with the rotation and subset scan, n <= 6") {
  auto patterns = single_patterns();
  for (int n = 1; n <= 6; ++n)
    for (const Cycle &host : all_cycles(interval(n)))
      for (const Cycle &pat : patterns)
        CHECK(cyclic_contains(host, pat) ==
              oracle::cyclic_contains(host.canonical().entries(),
                                      pat.canonical().entries()));
}

TEST_CASE("avoiders examples") {
  CHECK(avoiders(3, PatternSet({Cycle{1, 2, 3}})) ==
        std::vector<Cycle>{Cycle{1, 3, 2}});
  CHECK(avoidance_poly(3, PatternSet({Cycle{1, 2, 3}})) == QPoly{0, 0, 1});
  CHECK(avoiders(4, PatternSet()).size() == 6);
  CHECK(avoiders(1, PatternSet()) == std::vector<Cycle>{Cycle{1}});
  CHECK(avoiders(1, PatternSet({Cycle{1}})).empty());
  CHECK(avoiders(3, PatternSet({Cycle{1, 2, 3}, Cycle{1, 3, 2}})).empty());
  CHECK_THROWS_AS(avoiders(0, PatternSet()), std::invalid_argument);
}

TEST_CASE("PatternSet rejects patterns that are not standardized") {
  try {
    PatternSet bad({Cycle{2, 4, 3}});
    FAIL("expected an exception");
  } catch (const std::invalid_argument &e) {
    CHECK(std::string(e.what()).find("use [1,3,2]") != std::string::npos);
  }
  PatternSet dup({Cycle{1, 2, 3}, Cycle{2, 3, 1}});
  CHECK(dup.size() == 1);
}

TEST_CASE("no patterns leaves (n-1)! avoiders, n <= 7") {
  for (int n = 1; n <= 7; ++n)
    CHECK(static_cast<std::int64_t>(avoiders(n, PatternSet()).size()) ==
          factorial(n - 1));
}

TEST_CASE("the cdes polynomial counts avoiders at q = 1, n <= 6") {
  for (const Cycle &pat : single_patterns())
    for (int n = 1; n <= 6; ++n) {
      PatternSet ps({pat});
      auto av = avoiders(n, ps);
      QPoly d = avoidance_poly(n, ps);
      CHECK(d.evaluate(1) == static_cast<std::int64_t>(av.size()));
      for (const Cycle &c : av)
        CHECK(d.coefficient(static_cast<std::size_t>(
                  cyclic_stat(Statistic::cdes, c).count())) > 0);
    }
}

TEST_CASE("avoidance is monotone in n and in the pattern set") {
  for (const Cycle &pat : single_patterns()) {
    PatternSet one({pat});
    PatternSet two({pat, Cycle{1, 3, 2}});
    for (int n = 1; n <= 6; ++n) {
      auto a1 = avoiders(n, one);
      auto a2 = avoiders(n, two);
      CHECK(a2.size() <= a1.size());
      for (const Cycle &c : a2)
        CHECK(std::binary_search(a1.begin(), a1.end(), c));
    }
    // A host of length >= k that contains the pattern keeps containing it
    // after inserting a new maximum anywhere.
    for (const Cycle &c : all_cycles(interval(5))) {
      if (!cyclic_contains(c, pat))
        continue;
      for (std::size_t at = 1; at <= 5; ++at) {
        std::vector<Entry> e = c.canonical().entries();
        e.insert(e.begin() + static_cast<std::ptrdiff_t>(at), 6);
        CHECK(cyclic_contains(Cycle(Word(e)), pat));
      }
    }
  }
}

TEST_CASE("containment does not depend on the host rotation") {
  for (const Word &w : all_words(interval(5)))
    for (const Cycle &pat : all_cycles(interval(4)))
      CHECK(cyclic_contains(Cycle(w), pat) ==
            oracle::cyclic_contains(w.entries(), pat.canonical().entries()));
}
