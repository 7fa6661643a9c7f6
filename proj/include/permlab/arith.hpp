#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "permlab/core.hpp"

namespace permlab {

__extension__ typedef __int128 Int128;

/// Decimal text of a signed 128-bit integer.
std::string to_string(Int128 value);

/// Prime factorization by trial division, primes ascending with multiplicities.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::uint64_t phi(std::uint64_t n);
int mobius(std::uint64_t n);
/// Divisors ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::uint64_t sigma(std::uint64_t n);
std::uint64_t num_divisors(std::uint64_t n);
/// Least positive j with a * j = 1 mod m. Throws std::invalid_argument when gcd(a, m) != 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m);

/// nu_{k,n} = (j, 2j, ..., nj) mod (n + 1) with j = k^-1 mod (n + 1).
struct NaturalPermutation {
  int k = 0;
  int n = 0;
  int increment = 0;
  Permutation perm;

  /// True when k divides n, making this the divisor permutation delta_{k|n}.
  bool is_divisor() const { return n > 0 && n % k == 0; }
};

/// Throws std::invalid_argument unless 1 <= k <= n and gcd(k, n + 1) == 1.
NaturalPermutation natural_perm(int k, int n);
/// Every natural permutation of degree n, by k ascending.
std::vector<NaturalPermutation> natural_perms(int n);
/// natural_perm(k, n) for each k | n, by k ascending.
std::vector<NaturalPermutation> divisor_perms(int n);

struct SizeCensusEntry {
  std::uint64_t k = 0;  // class size
  Int128 count = 0;     // toric classes of that size in S_n
};

/// Toric class sizes of S_n from the Moebius-inverted orbit count, one entry per divisor k of
/// n + 1. Supports n + 1 <= 33. Throws InternalError if a count comes out non-integral.
std::vector<SizeCensusEntry> steggall_census(int n);

/// Sum of the positions of 1 over the divisor permutations of n.
std::uint64_t sigma_via_divisor_perms(std::uint64_t n);

struct RobinReport {
  std::uint64_t n = 0;
  std::uint64_t sigma = 0;
  double bound = 0;  // e^gamma * n * ln ln n
  bool holds = false;
  /// The relative gap is under 1e-9, too close for double precision to decide.
  bool inconclusive = false;
};

/// Throws std::invalid_argument for n < 3.
RobinReport robin_check(std::uint64_t n);

}  // namespace permlab
