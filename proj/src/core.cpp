#include "permlab/core.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "permlab/errors.hpp"

namespace permlab {

namespace {

// Throws unless `word` holds each of {offset, ..., offset + size - 1} exactly once.
void require_bijection(std::span<const Letter> word, Letter offset) {
  const auto size = static_cast<Letter>(word.size());
  std::vector<bool> seen(word.size(), false);
  for (Letter v : word) {
    if (v < offset || v >= offset + size) {
      throw ParseError("letter " + std::to_string(v) + " out of range [" + std::to_string(offset) +
                       ", " + std::to_string(offset + size - 1) + "]");
    }
    auto slot = static_cast<std::size_t>(v - offset);
    if (seen[slot]) throw ParseError("repeated letter " + std::to_string(v));
    seen[slot] = true;
  }
}

std::vector<Letter> parse_letters(std::string_view text, bool allow_zero) {
  std::vector<Letter> letters;
  if (text.empty()) return letters;
  if (text.find(',') == std::string_view::npos) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ParseError("bad permutation literal '" + std::string(text) + "'");
      letters.push_back(ch - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      auto stop = text.find(',', start);
      if (stop == std::string_view::npos) stop = text.size();
      auto token = text.substr(start, stop - start);
      Letter value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError("bad permutation literal '" + std::string(text) + "'");
      }
      letters.push_back(value);
      start = stop + 1;
    }
  }
  if (!allow_zero && std::find(letters.begin(), letters.end(), 0) != letters.end()) {
    throw ParseError("letter 0 not allowed in '" + std::string(text) + "'");
  }
  return letters;
}

Letter mod(long long value, Letter modulus) {
  auto r = static_cast<Letter>(value % modulus);
  return r < 0 ? r + modulus : r;
}

}  // namespace

Permutation::Permutation(std::vector<Letter> word) : word_(std::move(word)) {
  require_bijection(word_, 1);
}

Permutation Permutation::from_trusted(std::vector<Letter> word) noexcept {
  Permutation pi;
  pi.word_ = std::move(word);
  return pi;
}

Permutation Permutation::identity(int n) {
  std::vector<Letter> word(static_cast<std::size_t>(n));
  std::iota(word.begin(), word.end(), 1);
  return from_trusted(std::move(word));
}

Permutation Permutation::decreasing(int n) {
  std::vector<Letter> word(static_cast<std::size_t>(n));
  std::iota(word.rbegin(), word.rend(), 1);
  return from_trusted(std::move(word));
}

Permutation Permutation::parse(std::string_view text) {
  return Permutation(parse_letters(text, false));
}

int Permutation::position_of(Letter letter) const {
  auto it = std::find(word_.begin(), word_.end(), letter);
  if (it == word_.end()) throw std::invalid_argument("letter not present");
  return static_cast<int>(it - word_.begin()) + 1;
}

std::string Permutation::str() const { return format(word_); }

std::string format(std::span<const Letter> word) {
  const bool digits = std::all_of(word.begin(), word.end(), [](Letter v) { return v >= 0 && v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (digits) {
      out.push_back(static_cast<char>('0' + word[i]));
    } else {
      if (i > 0) out.push_back(',');
      out += std::to_string(word[i]);
    }
  }
  return out;
}

int CycleType::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

CircularPermutation::CircularPermutation(std::vector<Letter> word) : word_(std::move(word)) {
  if (word_.empty()) throw ParseError("circular permutation needs the letter 0");
  require_bijection(word_, 0);
  auto zero = std::find(word_.begin(), word_.end(), 0);
  std::rotate(word_.begin(), zero, word_.end());
}

CircularPermutation CircularPermutation::parse(std::string_view text) {
  return CircularPermutation(parse_letters(text, true));
}

std::string CircularPermutation::str() const { return format(word_); }

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("compose: length mismatch");
  std::vector<Letter> out(static_cast<std::size_t>(tau.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sigma(tau[i]);
  return Permutation::from_trusted(std::move(out));
}

Permutation inverse(const Permutation& pi) {
  std::vector<Letter> out(static_cast<std::size_t>(pi.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[static_cast<std::size_t>(pi[i] - 1)] = static_cast<Letter>(i + 1);
  return Permutation::from_trusted(std::move(out));
}

Permutation reverse(const Permutation& pi) {
  std::vector<Letter> out(pi.begin(), pi.end());
  std::reverse(out.begin(), out.end());
  return Permutation::from_trusted(std::move(out));
}

Permutation complement(const Permutation& pi) {
  std::vector<Letter> out(pi.begin(), pi.end());
  for (auto& v : out) v = pi.size() + 1 - v;
  return Permutation::from_trusted(std::move(out));
}

CycleType cycle_type(const Permutation& pi) {
  CycleType type;
  std::vector<bool> seen(static_cast<std::size_t>(pi.size()), false);
  for (int start = 1; start <= pi.size(); ++start) {
    if (seen[static_cast<std::size_t>(start - 1)]) continue;
    int length = 0;
    for (int i = start; !seen[static_cast<std::size_t>(i - 1)]; i = pi(i)) {
      seen[static_cast<std::size_t>(i - 1)] = true;
      ++length;
    }
    type.parts.push_back(length);
  }
  std::sort(type.parts.rbegin(), type.parts.rend());
  return type;
}

std::uint64_t lcm_of(std::span<const int> parts) {
  std::uint64_t result = 1;
  for (int p : parts) result = std::lcm(result, static_cast<std::uint64_t>(p));
  return result;
}

std::uint64_t order(const Permutation& pi) { return lcm_of(cycle_type(pi).parts); }

CircularPermutation to_circular(const Permutation& pi) {
  std::vector<Letter> word;
  word.reserve(static_cast<std::size_t>(pi.size()) + 1);
  word.push_back(0);
  word.insert(word.end(), pi.begin(), pi.end());
  return CircularPermutation(std::move(word));
}

Permutation from_circular(const CircularPermutation& lambda) {
  auto word = lambda.word();
  return Permutation::from_trusted(std::vector<Letter>(word.begin() + 1, word.end()));
}

CircularPermutation oplus(const CircularPermutation& lambda, long long m) {
  const Letter modulus = lambda.degree() + 1;
  std::vector<Letter> word(lambda.word().begin(), lambda.word().end());
  for (auto& v : word) v = mod(static_cast<long long>(v) + m, modulus);
  return CircularPermutation(std::move(word));
}

Permutation oplus(const Permutation& pi, long long m) {
  const Letter modulus = pi.size() + 1;
  const Letter shift = mod(m, modulus);
  // The shifted 0 sits at index 0 of 0pi, so the letter that becomes 0 is modulus - shift.
  // Reading from there wraps around through the old 0.
  std::vector<Letter> out;
  out.reserve(static_cast<std::size_t>(pi.size()));
  if (shift == 0) return pi;
  const int zero_at = pi.position_of(modulus - shift);  // index in 0pi
  for (int i = zero_at + 1; i <= pi.size(); ++i) out.push_back(mod(pi(i) + shift, modulus));
  out.push_back(shift);
  for (int i = 1; i < zero_at; ++i) out.push_back(mod(pi(i) + shift, modulus));
  return Permutation::from_trusted(std::move(out));
}

CircularPermutation reverse(const CircularPermutation& lambda) {
  std::vector<Letter> word(lambda.word().begin(), lambda.word().end());
  std::reverse(word.begin(), word.end());
  return CircularPermutation(std::move(word));
}

CircularPermutation complement(const CircularPermutation& lambda) {
  const Letter modulus = lambda.degree() + 1;
  std::vector<Letter> word(lambda.word().begin(), lambda.word().end());
  for (auto& v : word) v = mod(-static_cast<long long>(v), modulus);
  return CircularPermutation(std::move(word));
}

std::vector<Permutation> toric_class(const Permutation& pi) {
  std::vector<Permutation> members;
  members.reserve(static_cast<std::size_t>(pi.size()) + 1);
  for (int m = 0; m <= pi.size(); ++m) members.push_back(oplus(pi, m));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

Permutation toric_representative(const Permutation& pi) {
  Permutation best = pi;
  for (int m = 1; m <= pi.size(); ++m) {
    auto candidate = oplus(pi, m);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  for_each_permutation(n, [&](std::span<const Letter> word) {
    out.push_back(Permutation::from_trusted(std::vector<Letter>(word.begin(), word.end())));
  });
  return out;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

}  // namespace permlab
