#include <doctest.h>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "permlab/arith.hpp"
#include "permlab/errors.hpp"
#include "permlab/relations.hpp"

using namespace permlab;

namespace {

Permutation P(const char* text) { return Permutation::parse(text); }

}  // namespace

TEST_CASE("number-theoretic helpers") {
  CHECK(factorize(360) == std::vector<std::pair<std::uint64_t, int>>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(phi(1) == 1);
  CHECK(phi(36) == 12);
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(sigma(6) == 12);
  CHECK(num_divisors(36) == 9);
  CHECK(mod_inverse(3, 7) == 5);
  CHECK_THROWS_AS(mod_inverse(2, 4), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::uint64_t coprime = 0;
    for (std::uint64_t a = 1; a <= n; ++a) coprime += oracle::gcd(a, n) == 1;
    CHECK(phi(n) == coprime);
    CHECK(sigma(n) == oracle::sigma(n));
  }
  CHECK(to_string(Int128{0}) == "0");
  CHECK(to_string(Int128{-42}) == "-42");
  CHECK(to_string(static_cast<Int128>(1) << 100) == "1267650600228229401496703205376");
}

TEST_CASE("natural permutations") {
  const auto nu = natural_perm(2, 6);
  CHECK(nu.perm == P("415263"));
  CHECK(nu.increment == 4);
  CHECK(nu.is_divisor());
  CHECK(natural_perm(3, 7).perm == P("3614725"));
  CHECK_FALSE(natural_perm(3, 7).is_divisor());
  for (int n = 1; n <= 12; ++n) {
    CHECK(natural_perm(1, n).perm == Permutation::identity(n));
    CHECK(natural_perm(n, n).perm == Permutation::decreasing(n));
  }
  CHECK_THROWS_AS(natural_perm(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(natural_perm(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(natural_perm(7, 6), std::invalid_argument);
}

TEST_CASE("natural permutations match circle placement and their identities") {
  for (int n = 1; n <= 12; ++n) {
    const int m = n + 1;
    for (int k = 1; k <= n; ++k) {
      const auto placed = oracle::circle_placement(k, n);
      if (std::gcd(k, m) != 1) {
        CHECK(placed.empty());
        continue;
      }
      const auto nu = natural_perm(k, n);
      CHECK(nu.perm.word().size() == placed.size());
      CHECK(std::equal(placed.begin(), placed.end(), nu.perm.begin()));
      CHECK(nu.perm(1) == nu.increment);
      for (int l = 1; l < n; ++l) CHECK(((nu.perm(l + 1) - nu.perm(l)) % m + m) % m == nu.increment);
      CHECK(nu.perm.position_of(1) == k);
      CHECK(toric_class(nu.perm).size() == 1);
      CHECK(reverse(nu.perm) == natural_perm(m - k, n).perm);
      CHECK(complement(nu.perm) == natural_perm(m - k, n).perm);
      CHECK(inverse(nu.perm) == natural_perm(nu.increment, n).perm);
      CHECK(nu.perm(1) + nu.perm(n) == m);
      for (int k2 = 1; k2 <= n; ++k2) {
        if (std::gcd(k2, m) != 1) continue;
        CHECK(compose(nu.perm, natural_perm(k2, n).perm) == natural_perm(k * k2 % m, n).perm);
      }
    }
  }
}

TEST_CASE("toric singletons are exactly the natural permutations") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<Permutation> singletons;
    for (const auto& cls : Relation(RelationKind::toric).classes(n))
      if (cls.size() == 1) singletons.push_back(cls.front());
    std::vector<Permutation> natural;
    for (const auto& nu : natural_perms(n)) natural.push_back(nu.perm);
    std::sort(natural.begin(), natural.end());
    CHECK(singletons == natural);
    CHECK(singletons.size() == phi(static_cast<std::uint64_t>(n) + 1));
  }
}

TEST_CASE("divisor permutations") {
  std::vector<Permutation> six;
  for (const auto& d : divisor_perms(6)) six.push_back(d.perm);
  CHECK(six == std::vector<Permutation>{P("123456"), P("415263"), P("531642"), P("654321")});
  CHECK(divisor_perms(1).size() == 1);
  CHECK(divisor_perms(1).front().perm == P("1"));
  for (int n = 1; n <= 24; ++n) {
    for (const auto& d : divisor_perms(n)) {
      const int len = n / d.k;
      CHECK(d.perm(n) == len);
      // The inverse is k increasing runs of length n / k.
      const auto inv = inverse(d.perm);
      int runs = 1;
      for (int l = 1; l < n; ++l) runs += inv(l) > inv(l + 1);
      CHECK(runs == d.k);
      for (int start = 1; start <= n; start += len)
        for (int l = start; l < start + len - 1; ++l) CHECK(inv(l) < inv(l + 1));
    }
  }
}

TEST_CASE("steggall census") {
  const auto five = steggall_census(5);
  REQUIRE(five.size() == 4);
  CHECK(five[0].k == 1);
  CHECK(five[0].count == 2);
  CHECK(five[1].count == 2);
  CHECK(five[2].count == 2);
  CHECK(five[3].k == 6);
  CHECK(five[3].count == 18);
  const auto six = steggall_census(6);
  REQUIRE(six.size() == 2);
  CHECK(six[0].count == 6);
  CHECK(six[1].count == 102);
  for (int n = 0; n <= 30; ++n) CHECK(steggall_census(n).front().count == static_cast<Int128>(phi(static_cast<std::uint64_t>(n) + 1)));
  for (int n = 0; n <= 8; ++n) {
    const auto brute = census(Relation(RelationKind::toric), n);
    std::map<std::uint64_t, std::uint64_t> from_formula;
    for (const auto& e : steggall_census(n))
      if (e.count != 0) from_formula[e.k] = static_cast<std::uint64_t>(e.count);
    CHECK(from_formula == brute.by_size);
  }
  for (int n = 0; n <= 32; ++n) {
    Int128 total = 0;
    for (const auto& e : steggall_census(n)) total += static_cast<Int128>(e.k) * e.count;
    Int128 fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    CHECK(total == fact);
  }
  CHECK_THROWS_AS(steggall_census(33), std::invalid_argument);
}

TEST_CASE("sigma via divisor permutations") {
  CHECK(sigma_via_divisor_perms(6) == 12);
  CHECK(sigma_via_divisor_perms(1) == 1);
  for (std::uint64_t n = 1; n <= 2000; ++n) CHECK(sigma_via_divisor_perms(n) == oracle::sigma(n));
  std::uint64_t from_perms = 0;
  for (const auto& d : divisor_perms(12)) from_perms += static_cast<std::uint64_t>(d.perm.position_of(1));
  CHECK(from_perms == 28);
}

TEST_CASE("robin inequality") {
  const auto r5040 = robin_check(5040);
  CHECK_FALSE(r5040.holds);
  CHECK(r5040.sigma == 19344);
  const auto r12 = robin_check(12);
  CHECK(r12.sigma == 28);
  CHECK(r12.bound == doctest::Approx(19.45).epsilon(0.01));
  CHECK_FALSE(r12.holds);
  for (std::uint64_t n = 5041; n <= 6000; ++n) {
    const auto r = robin_check(n);
    CHECK(r.holds);
    CHECK_FALSE(r.inconclusive);
  }
  CHECK_THROWS_AS(robin_check(2), std::invalid_argument);
}
