#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "permlab/catalog.hpp"
#include "permlab/census.hpp"
#include "permlab/errors.hpp"
#include "permlab/pattern.hpp"

using namespace permlab;

namespace {

Permutation P(const char* text) { return Permutation::parse(text); }
BivincularPattern B(const char* text) { return BivincularPattern::parse(text); }

std::set<std::string> value_sets(const BivincularPattern& pat, const Permutation& pi) {
  std::set<std::string> out;
  for (const auto& occ : occurrences(pat, pi)) out.insert(format(occurrence_values(occ, pi)));
  return out;
}

}  // namespace

TEST_CASE("pattern syntax") {
  const auto p = B("3421;x=2,3;y=1,2,4");
  CHECK(p.shape() == P("3421"));
  CHECK(p.positions() == IndexSet{2, 3});
  CHECK(p.values() == IndexSet{1, 2, 4});
  CHECK(p.str() == "3421;x=2,3;y=1,2,4");
  CHECK(B("231").str() == "231;x=;y=");
  CHECK(B("231;x=;y=") == B("231"));
  CHECK(B("1;x=0;y=0").str() == "1;x=0;y=0");
  CHECK(B("12;y=0,2").positions().empty());
  CHECK_THROWS_AS(B("12;x=3"), std::invalid_argument);
  CHECK_THROWS_AS(B("122"), ParseError);
  CHECK_THROWS_AS(B("12;z=1"), ParseError);
  CHECK_THROWS_AS(B("12;x=a"), ParseError);
}

TEST_CASE("occurrences in 241635") {
  const auto pi = P("241635");
  CHECK(value_sets(B("123"), pi) == std::set<std::string>{"246", "245", "135", "235"});
  CHECK(value_sets(B("123;x=2"), pi) == std::set<std::string>{"135", "235"});
  CHECK(value_sets(B("123;x=2,3"), pi) == std::set<std::string>{"135", "235"});
  CHECK(value_sets(B("123;y=1"), pi) == std::set<std::string>{"235"});
  CHECK(occurrences(B("123;y=1,2"), pi).empty());
  CHECK(avoids(B("321"), pi));
  CHECK(matches(B("123"), pi));
  const auto occ = occurrences(B("123"), pi);
  CHECK(std::is_sorted(occ.begin(), occ.end()));
}

TEST_CASE("empty host and empty pattern") {
  CHECK(avoids(B("1"), Permutation()));
  CHECK(avoids(B("21;x=1;y=1"), Permutation()));
  CHECK(matches(BivincularPattern(), Permutation()));
  CHECK(matches(BivincularPattern(), P("312")));
}

TEST_CASE("engine equals filter oracle on length <= 2 over S_1..S_6") {
  for (int k = 0; k <= 2; ++k) {
    for (const auto& pat : all_patterns(k)) {
      for (int n = 0; n <= 6; ++n) {
        for (const auto& pi : all_permutations(n)) {
          std::vector<std::vector<int>> got;
          for (const auto& o : occurrences(pat, pi)) got.push_back(o.positions);
          REQUIRE(got == oracle::occurrences(pat, pi));
        }
      }
    }
  }
}

TEST_CASE("engine equals filter oracle on length 4 samples over S_6") {
  const auto pats = all_patterns(4);
  for (std::size_t i = 0; i < pats.size(); i += 97) {
    for (const auto& pi : all_permutations(6)) {
      std::vector<std::vector<int>> got;
      for (const auto& o : occurrences(pats[i], pi)) got.push_back(o.positions);
      REQUIRE(got == oracle::occurrences(pats[i], pi));
    }
  }
}

TEST_CASE("all_patterns counts") {
  CHECK(all_patterns(0).size() == 4);
  CHECK(all_patterns(1).size() == 16);
  CHECK(all_patterns(2).size() == 128);
  CHECK(all_patterns(3).size() == 1536);
}

TEST_CASE("pattern symmetries") {
  const auto p = B("132;x=0;y=1,3");
  CHECK(inverse(p).positions() == p.values());
  CHECK(inverse(p).values() == p.positions());
  for (const auto& q : all_patterns(3)) {
    CHECK(reverse(reverse(q)) == q);
    CHECK(complement(complement(q)) == q);
    CHECK(inverse(inverse(q)) == q);
  }
  CHECK(reverse(shift(complement(B("132;y=0,1,2")))) == B("132;y=0,2,3"));

  // The dihedral group of the square has 8 elements on classical length-3 patterns.
  const auto group = symmetry_closure({{Symmetry::reverse}, {Symmetry::complement}, {Symmetry::inverse}});
  CHECK(group.size() == 8);
  CHECK(group.front().empty());
  std::set<Permutation> images;
  for (const auto& g : group) images.insert(permlab::apply(g, P("132")));
  CHECK(images.size() == 4);
}

TEST_CASE("avoidance transport under r, c, i on S_5") {
  const auto pats = all_patterns(3);
  const auto perms = all_permutations(5);
  for (std::size_t i = 0; i < pats.size(); i += 7) {
    const auto& pat = pats[i];
    for (const auto& pi : perms) {
      CHECK(avoids(pat, pi) == avoids(reverse(pat), reverse(pi)));
      CHECK(avoids(pat, pi) == avoids(complement(pat), complement(pi)));
      CHECK(avoids(pat, pi) == avoids(inverse(pat), inverse(pi)));
    }
  }
}

TEST_CASE("shift on patterns") {
  CHECK(shift(B("3421;x=2,3;y=1,2,4")) == B("3214;x=0,1;y=0,2,3"));
  CHECK(shift(B("12;y=0,2")) == B("12;y=0,1"));
  CHECK(shift(B("123;x=0;y=0,3")) == B("123;x=1;y=0,1"));
  CHECK(shift(catalog::toric_example()) == B("3214;x=0,1;y=0,2,3"));
}

TEST_CASE("shift splits and reassembles occurrences when the top value is in Y") {
  const auto perms = all_permutations(5);
  for (int k = 1; k <= 3; ++k) {
    for (const auto& pat : all_patterns(k)) {
      if (!pat.values().contains(k)) continue;
      const auto shifted = shift(pat);
      for (const auto& pi : perms) REQUIRE(avoids(pat, pi) == avoids(shifted, oplus(pi, 1)));
    }
  }
}

TEST_CASE("shift orbit returns with identical avoidance when the top value stays in Y") {
  for (const auto& pat : all_patterns(2)) {
    auto q = pat;
    bool licensed = true;
    for (int step = 0; step <= pat.length(); ++step) {
      licensed = licensed && q.values().contains(q.length());
      q = shift(q);
    }
    if (!licensed) continue;
    for (int n = 0; n <= 6; ++n) {
      for (const auto& pi : all_permutations(n)) CHECK(avoids(pat, pi) == avoids(q, pi));
    }
  }
}

TEST_CASE("shift counterexample without the top value in Y") {
  const auto& left = catalog::shift_counterexample_left();
  const auto& right = catalog::shift_counterexample_right();
  CHECK(shift(left) == right);
  CHECK(avoid_all({left}, 6).count == 549);
  CHECK(avoid_all({right}, 6).count == 550);
}

TEST_CASE("minimal occurrences") {
  const auto pi = P("241635");
  const auto minimal = minimal_occurrences(B("123"), pi);
  int best = 100;
  for (const auto& o : occurrences(B("123"), pi)) best = std::min(best, o.area());
  for (const auto& o : minimal) CHECK(o.area() == best);
  CHECK(best == 3);
  CHECK(minimal_occurrences(B("123"), P("4123")).front().area() == 2);
  CHECK_THROWS_AS(minimal_occurrences(B("321"), pi), NoOccurrence);
  for (const auto& pat : {B("123"), B("132"), B("213"), B("231"), B("312"), B("321")}) {
    for (const auto& host : all_permutations(5)) {
      const auto occ = oracle::occurrences(pat, host);
      if (occ.empty()) continue;
      int area = 100;
      std::vector<std::vector<int>> want;
      for (const auto& o : occ) area = std::min(area, o.back() - o.front());
      for (const auto& o : occ)
        if (o.back() - o.front() == area) want.push_back(o);
      std::vector<std::vector<int>> got;
      for (const auto& o : minimal_occurrences(pat, host)) got.push_back(o.positions);
      CHECK(got == want);
    }
  }
}
