#pragma once

// Exact multiplicities of words in the signed Hammersley process, computed
// backwards in time from a word to its one-step pre-images, and the expected
// tree count Z_n^k built on top of them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "shp/core.hpp"
#include "shp/process.hpp"

namespace shp {

/// A pre-image z with step(z, event) == target. kill_position is the 1-based
/// index in z of the letter the insertion took a life from.
struct Predecessor {
  Word word;
  InsertionEvent event;
  std::optional<std::size_t> kill_position;
};

/// Every (z, event) with step(z, event) == w, each exactly once.
///
/// For an occurrence of k^s at index i of w, with t the opposite polarity:
///  - pure removal of i is a pre-image iff no t-letter right of i is nonzero;
///  - for each t-letter at j > i whose value v < k and with only zero t-letters
///    strictly between i and j, removing i and raising j to v+1 is one.
/// The scan for the second kind stops at the first nonzero t-letter.
std::vector<Predecessor> predecessors(const Word& w);

/// Memo of F_k. Not synchronized: give each thread its own table.
class PowerSeriesTable {
 public:
  explicit PowerSeriesTable(int k, std::size_t max_entries = 50'000'000);

  int arity() const noexcept { return k_; }
  std::size_t size() const noexcept { return memo_.size(); }
  std::size_t max_entries() const noexcept { return max_entries_; }

  /// F_k(w); throws ResourceLimitError when the memo would outgrow its cap.
  const BigInt& multiplicity(const Word& w);

 private:
  int k_;
  std::size_t max_entries_;
  std::unordered_map<Word, BigInt, WordHash> memo_;
};

/// F_k(w): 1 for the empty word, 0 outside the language.
BigInt multiplicity(const Word& w, PowerSeriesTable& table);
BigInt multiplicity(const Word& w);

/// Unguarded variant of the backward recursion (j over 1..r-1, pure removal
/// always allowed, 0 for the empty word). Kept only to compare against
/// multiplicity(); it is wrong in both directions on some words.
BigInt multiplicity_literal(const Word& w);

/// Number of trees encoded by a slot word: |w|_k - sum_{i=1..k} (i-1)|w|_{k-i}.
/// Equals lambda_plus(w) + lambda_minus(w).
std::int64_t trees_count(const Word& w);

/// 2^n * n!, the number of histories of length n.
BigInt history_count(std::size_t n);

/// Z_n^k = sum_{|z|=n} F_k(z) trees_k(z) / (2^n n!), summed over the member
/// words of length n.
Rational scaling_exact(int k, std::size_t n, std::size_t max_entries = 50'000'000);

struct MonteCarloEstimate {
  Rational mean;
  double standard_error = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

/// Mean greedy tree count over random signed permutations of 1..n with
/// independent fair signs. Sample i draws from its own generator seeded by
/// (seed, i), so the result does not depend on `workers`.
MonteCarloEstimate scaling_montecarlo(int k, std::size_t n, std::size_t samples,
                                      std::uint64_t seed, unsigned workers = 1);

/// The signed permutation used as sample `index` by scaling_montecarlo.
SignedPermutation random_signed_permutation(std::size_t n, std::uint64_t seed,
                                            std::uint64_t index);

}  // namespace shp
