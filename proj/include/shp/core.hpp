#pragma once

// Alphabet, words and signed permutations for the signed Hammersley process.
//
// A letter is a value in 0..k carrying a polarity. Words remember their
// arity k; every operation that combines two words checks that they agree.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shp {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Malformed textual input (word tokens, permutation lists).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two operands built for different arities k.
class ArityMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured cap (distinct words, memo entries, problem size) was hit.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Polarity : std::uint8_t { positive = 0, negative = 1 };

constexpr Polarity opposite(Polarity p) noexcept {
  return p == Polarity::positive ? Polarity::negative : Polarity::positive;
}

constexpr char sign_char(Polarity p) noexcept {
  return p == Polarity::positive ? '+' : '-';
}

struct Letter {
  int value = 0;
  Polarity polarity = Polarity::positive;

  // Orders by value, then '+' before '-'.
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class Word {
 public:
  explicit Word(int k);
  Word(int k, std::vector<Letter> letters);

  int arity() const noexcept { return k_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word prefix(std::size_t length) const;

  // Same arity is required; comparing across arities throws ArityMismatch.
  friend bool operator==(const Word& a, const Word& b);
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  int k_;
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Throws ArityMismatch unless both words share an arity.
void require_same_arity(const Word& a, const Word& b);

/// Occurrence counts |z|_{v^s} for every letter of the alphabet.
class ParikhCounts {
 public:
  explicit ParikhCounts(int k);

  int arity() const noexcept { return k_; }
  std::int64_t count(int value, Polarity p) const;
  /// |z|_v = |z|_{v+} + |z|_{v-}
  std::int64_t count(int value) const;
  std::int64_t total() const noexcept;

  void add(const Letter& l, std::int64_t times = 1);

 private:
  int k_;
  std::vector<std::int64_t> counts_;  // index 2*value + polarity
};

ParikhCounts counts(const Word& w);

// Running survivor counts. lambda(+) is
//   |z|_{k+} - sum_{i=1..k} i*|z|_{(k-i)-} + sum_{i=0..k-1} |z|_{i+}
// and lambda(-) is its polarity mirror. Either may be negative for words the
// process cannot produce.
std::int64_t lambda(const ParikhCounts& c, Polarity p);
std::int64_t lambda_plus(const ParikhCounts& c);
std::int64_t lambda_minus(const ParikhCounts& c);
std::int64_t lambda_plus(const Word& w);
std::int64_t lambda_minus(const Word& w);

/// Contribution of a single letter to lambda(p).
std::int64_t lambda_delta(const Letter& l, int k, Polarity p);

/// Parses whitespace- or comma-separated tokens "<decimal>+" / "<decimal>-".
Word parse_word(std::string_view text, int k);
std::string format_word(const Word& w);
std::string format_letter(const Letter& l);

/// Every word of the given length over the 2(k+1)-letter alphabet, in
/// lexicographic order. The callback returns false to stop early.
void for_each_word(int k, std::size_t length,
                   const std::function<bool(const Word&)>& visit);

std::vector<Letter> alphabet(int k);

class SignedPermutation {
 public:
  SignedPermutation() = default;
  SignedPermutation(std::vector<std::int64_t> values,
                    std::vector<Polarity> signs);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const std::int64_t> values() const noexcept { return values_; }
  std::span<const Polarity> signs() const noexcept { return signs_; }
  std::int64_t value(std::size_t i) const { return values_[i]; }
  Polarity sign(std::size_t i) const { return signs_[i]; }

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;

 private:
  std::vector<std::int64_t> values_;
  std::vector<Polarity> signs_;
};

/// Comma-separated decimal values, e.g. "1,8,15".
std::vector<std::int64_t> parse_values(std::string_view text);
/// Comma-separated "+"/"-" signs, e.g. "-,+,-".
std::vector<Polarity> parse_signs(std::string_view text);
SignedPermutation parse_signed_permutation(std::string_view values,
                                           std::string_view signs);
std::string format_values(std::span<const std::int64_t> values);
std::string format_signs(std::span<const Polarity> signs);

}  // namespace shp
