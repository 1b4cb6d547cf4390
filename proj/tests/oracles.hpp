#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the code paths they are compared against, apart from the forward
// step rule where noted.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "shp/core.hpp"
#include "shp/process.hpp"

namespace shp::oracle {

/// Survivor counts straight from their meaning: how many positive / negative
/// insertions in a history took no life.
struct HistoryOutcome {
  Word word;
  std::int64_t idle_plus = 0;
  std::int64_t idle_minus = 0;
};

/// Walks every (position, polarity) history of n steps from the empty word,
/// applying the insertion rule by hand.
inline void for_each_history(int k, std::size_t n,
                             const std::function<void(const HistoryOutcome&)>& visit) {
  std::function<void(std::vector<Letter>&, std::int64_t, std::int64_t, std::size_t)> go =
      [&](std::vector<Letter>& letters, std::int64_t ip, std::int64_t im, std::size_t left) {
        if (left == 0) {
          visit({Word(k, letters), ip, im});
          return;
        }
        for (std::size_t pos = 0; pos <= letters.size(); ++pos) {
          for (auto pol : {Polarity::positive, Polarity::negative}) {
            auto next = letters;
            next.insert(next.begin() + static_cast<std::ptrdiff_t>(pos), Letter{k, pol});
            bool killed = false;
            for (std::size_t j = pos + 1; j < next.size(); ++j) {
              if (next[j].polarity != pol && next[j].value > 0) {
                --next[j].value;
                killed = true;
                break;
              }
            }
            const bool plus = pol == Polarity::positive;
            go(next, ip + (!killed && plus), im + (!killed && !plus), left - 1);
          }
        }
      };
  std::vector<Letter> start;
  go(start, 0, 0, n);
}

/// All (z, event) with step(z, event) == w, by trying every shorter word.
inline std::set<std::pair<std::vector<Letter>, InsertionEvent>> brute_predecessors(const Word& w) {
  std::set<std::pair<std::vector<Letter>, InsertionEvent>> out;
  if (w.empty()) return out;
  for_each_word(w.arity(), w.size() - 1, [&](const Word& z) {
    for (std::size_t pos = 1; pos <= z.size() + 1; ++pos) {
      for (auto pol : {Polarity::positive, Polarity::negative}) {
        if (step(z, {pos, pol}) == w) {
          out.insert({std::vector<Letter>(z.letters().begin(), z.letters().end()),
                      InsertionEvent{pos, pol}});
        }
      }
    }
    return true;
  });
  return out;
}

/// Can sigma be inserted, element by element as leaves, into a single k-ary
/// min-heap? Exhaustive over every parent choice.
inline bool unsigned_heapable(const std::vector<std::int64_t>& sigma, int k) {
  if (sigma.empty()) return true;
  std::vector<int> children(sigma.size(), 0);
  std::function<bool(std::size_t)> place = [&](std::size_t i) {
    if (i == sigma.size()) return true;
    for (std::size_t j = 0; j < i; ++j) {
      if (sigma[j] < sigma[i] && children[j] < k) {
        ++children[j];
        if (place(i + 1)) return true;
        --children[j];
      }
    }
    return false;
  };
  return place(1);
}

/// Every signed permutation of 1..n (n! orders times 2^n sign vectors).
inline void for_each_signed_permutation(std::size_t n,
                                        const std::function<void(const SignedPermutation&)>& visit) {
  std::vector<std::int64_t> values(n);
  std::iota(values.begin(), values.end(), 1);
  do {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      std::vector<Polarity> signs(n);
      for (std::size_t i = 0; i < n; ++i) {
        signs[i] = (mask >> i) & 1U ? Polarity::negative : Polarity::positive;
      }
      visit(SignedPermutation(values, signs));
    }
  } while (std::next_permutation(values.begin(), values.end()));
}

inline BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt histories(std::size_t n) { return (BigInt(1) << n) * factorial(n); }

}  // namespace shp::oracle
