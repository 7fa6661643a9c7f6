#include "permlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "permlab/errors.hpp"

namespace permlab {

__extension__ typedef unsigned __int128 UInt128;

std::string to_string(Int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  UInt128 magnitude = negative ? -static_cast<UInt128>(value) : static_cast<UInt128>(value);
  std::string out;
  while (magnitude > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(magnitude % 10)));
    magnitude /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t result = n;
  for (const auto& [p, _] : factorize(n)) result = result / p * (p - 1);
  return result;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("mobius(0) is undefined");
  int sign = 1;
  for (const auto& [_, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t sigma(std::uint64_t n) {
  const auto ds = divisors(n);
  return std::accumulate(ds.begin(), ds.end(), std::uint64_t{0});
}

std::uint64_t num_divisors(std::uint64_t n) { return divisors(n).size(); }

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (m == 1) return 1;
  long long old_r = static_cast<long long>(a % m), r = static_cast<long long>(m);
  long long old_s = 1, s = 0;
  while (r != 0) {
    const long long q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) throw std::invalid_argument("mod_inverse: arguments are not coprime");
  const long long mm = static_cast<long long>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

NaturalPermutation natural_perm(int k, int n) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("natural_perm needs 1 <= k <= n");
  const auto m = static_cast<std::uint64_t>(n) + 1;
  if (std::gcd(static_cast<std::uint64_t>(k), m) != 1) {
    throw std::invalid_argument("natural_perm: k must be coprime to n + 1");
  }
  const auto j = mod_inverse(static_cast<std::uint64_t>(k), m);
  std::vector<Letter> word(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) word[static_cast<std::size_t>(l - 1)] = static_cast<Letter>(j * static_cast<std::uint64_t>(l) % m);
  return NaturalPermutation{k, n, static_cast<int>(j), Permutation::from_trusted(std::move(word))};
}

std::vector<NaturalPermutation> natural_perms(int n) {
  std::vector<NaturalPermutation> out;
  for (int k = 1; k <= n; ++k)
    if (std::gcd(k, n + 1) == 1) out.push_back(natural_perm(k, n));
  return out;
}

std::vector<NaturalPermutation> divisor_perms(int n) {
  if (n < 1) throw std::invalid_argument("divisor_perms needs n >= 1");
  std::vector<NaturalPermutation> out;
  for (auto d : divisors(static_cast<std::uint64_t>(n))) out.push_back(natural_perm(static_cast<int>(d), n));
  return out;
}

namespace {

Int128 power(Int128 base, std::uint64_t e) {
  Int128 out = 1;
  while (e-- > 0) out *= base;
  return out;
}

Int128 factorial128(std::uint64_t n) {
  Int128 out = 1;
  for (std::uint64_t i = 2; i <= n; ++i) out *= static_cast<Int128>(i);
  return out;
}

// Circular words on m letters fixed by rotation through m / l steps.
Int128 fixed_words(std::uint64_t m, std::uint64_t l) {
  const std::uint64_t step = m / l;
  return static_cast<Int128>(phi(step)) * power(static_cast<Int128>(step), l) * factorial128(l);
}

}  // namespace

std::vector<SizeCensusEntry> steggall_census(int n) {
  if (n < 0) throw std::invalid_argument("steggall_census needs n >= 0");
  const auto m = static_cast<std::uint64_t>(n) + 1;
  if (m > 33) throw std::invalid_argument("steggall_census supports n <= 32");
  std::vector<SizeCensusEntry> out;
  for (auto k : divisors(m)) {
    Int128 total = 0;
    for (auto d : divisors(k)) total += static_cast<Int128>(mobius(d)) * fixed_words(m, k / d);
    const auto denominator = static_cast<Int128>(m) * static_cast<Int128>(k);
    if (total % denominator != 0) {
      throw InternalError("class count for size " + std::to_string(k) + " at n = " + std::to_string(n) +
                          " is not an integer");
    }
    out.push_back({k, total / denominator});
  }
  return out;
}

std::uint64_t sigma_via_divisor_perms(std::uint64_t n) {
  if (n < 1) throw std::invalid_argument("sigma needs n >= 1");
  // 1 sits at position l with l * j = 1 mod (n + 1), so l = k.
  std::uint64_t total = 0;
  for (auto k : divisors(n)) {
    const auto j = mod_inverse(k, n + 1);
    total += mod_inverse(j, n + 1);
  }
  return total;
}

RobinReport robin_check(std::uint64_t n) {
  if (n < 3) throw std::invalid_argument("robin_check needs n >= 3");
  RobinReport r;
  r.n = n;
  r.sigma = sigma(n);
  const double x = static_cast<double>(n);
  r.bound = std::exp(std::numbers::egamma) * x * std::log(std::log(x));
  const double s = static_cast<double>(r.sigma);
  r.holds = s < r.bound;
  r.inconclusive = std::abs(r.bound - s) <= 1e-9 * std::max(std::abs(r.bound), s);
  return r;
}

}  // namespace permlab
