#include "shp/multiplicity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <thread>

#include "shp/heaps.hpp"
#include "shp/recognizer.hpp"

namespace shp {

std::vector<Predecessor> predecessors(const Word& w) {
  const int k = w.arity();
  std::vector<Predecessor> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].value != k) continue;
    const Polarity target = opposite(w[i].polarity);
    std::vector<Letter> base(w.letters().begin(), w.letters().end());
    base.erase(base.begin() + static_cast<std::ptrdiff_t>(i));
    const InsertionEvent event{i + 1, w[i].polarity};

    bool blocked = false;
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].polarity != target) continue;
      if (w[j].value < k) {
        auto letters = base;
        ++letters[j - 1].value;  // j shifts left by one once i is removed
        out.push_back({Word(k, std::move(letters)), event, j});
      }
      if (w[j].value != 0) {
        blocked = true;
        break;
      }
    }
    if (!blocked) out.push_back({Word(k, base), event, std::nullopt});
  }
  return out;
}

PowerSeriesTable::PowerSeriesTable(int k, std::size_t max_entries)
    : k_(k), max_entries_(max_entries) {
  if (k < 1) throw std::invalid_argument("arity k must be >= 1");
}

const BigInt& PowerSeriesTable::multiplicity(const Word& w) {
  if (w.arity() != k_) {
    throw ArityMismatch("table of arity " + std::to_string(k_) + " queried with arity " +
                        std::to_string(w.arity()));
  }
  if (auto it = memo_.find(w); it != memo_.end()) return it->second;

  BigInt total = 0;
  if (w.empty()) {
    total = 1;
  } else if (is_member(w, StrictnessMode::non_strict)) {
    for (const auto& pred : predecessors(w)) total += multiplicity(pred.word);
  }
  if (memo_.size() >= max_entries_) {
    throw ResourceLimitError("multiplicity memo exceeded " + std::to_string(max_entries_) +
                             " entries");
  }
  return memo_.emplace(w, std::move(total)).first->second;
}

BigInt multiplicity(const Word& w, PowerSeriesTable& table) { return table.multiplicity(w); }

BigInt multiplicity(const Word& w) {
  PowerSeriesTable table(w.arity());
  return table.multiplicity(w);
}

namespace {

class LiteralRecursion {
 public:
  explicit LiteralRecursion(int k) : k_(k) {}

  BigInt eval(const std::vector<Letter>& w) {
    if (auto it = memo_.find(Word(k_, w)); it != memo_.end()) return it->second;
    BigInt s = compute(w);
    memo_.emplace(Word(k_, w), s);
    return s;
  }

 private:
  // Words whose letters leave the alphabet (value k+1) contribute nothing.
  BigInt eval_checked(std::vector<Letter> z) {
    for (const auto& l : z) {
      if (l.value > k_) return 0;
    }
    return eval(z);
  }

  BigInt compute(const std::vector<Letter>& w) {
    const Word word(k_, w);
    if (!is_member(word)) return 0;
    const std::size_t n = w.size();
    if (n == 1 && w[0].value == k_) return 1;

    BigInt s = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (w[i].value == k_) {
        const Polarity t = opposite(w[i].polarity);
        bool has_opposite = false;
        for (std::size_t l = i + 1; l < n; ++l) has_opposite |= w[l].polarity == t;
        if (has_opposite) {
          std::size_t r = n;  // 0-based; n plays the role of "n+1"
          for (std::size_t l = i + 1; l < n; ++l) {
            if (w[l].polarity == t && w[l].value >= 1) {
              r = l;
              break;
            }
          }
          if (r == n || w[r].value != k_) {
            for (std::size_t j = 0; j < r; ++j) {
              if (w[j].polarity == t && w[j].value == 0) {
                auto z = w;
                z[j].value = 1;
                z.erase(z.begin() + static_cast<std::ptrdiff_t>(i));
                s += eval_checked(std::move(z));
              }
            }
          }
          if (r < n) {
            auto z = w;
            ++z[r].value;
            z.erase(z.begin() + static_cast<std::ptrdiff_t>(i));
            s += eval_checked(std::move(z));
          }
        }
        auto z = w;
        z.erase(z.begin() + static_cast<std::ptrdiff_t>(i));
        s += eval_checked(std::move(z));
      }
    }
    return s;
  }

  int k_;
  std::unordered_map<Word, BigInt, WordHash> memo_;
};

}  // namespace

BigInt multiplicity_literal(const Word& w) {
  LiteralRecursion rec(w.arity());
  return rec.eval(std::vector<Letter>(w.letters().begin(), w.letters().end()));
}

std::int64_t trees_count(const Word& w) {
  const auto c = counts(w);
  const int k = w.arity();
  std::int64_t trees = c.count(k);
  for (int i = 1; i <= k; ++i) trees -= static_cast<std::int64_t>(i - 1) * c.count(k - i);
  return trees;
}

BigInt history_count(std::size_t n) {
  BigInt total = 1;
  for (std::size_t m = 1; m <= n; ++m) total *= 2 * m;
  return total;
}

Rational scaling_exact(int k, std::size_t n, std::size_t max_entries) {
  PowerSeriesTable table(k, max_entries);
  BigInt weighted = 0;
  for_each_member(k, n, StrictnessMode::non_strict, [&](const Word& w) {
    weighted += table.multiplicity(w) * trees_count(w);
  });
  return Rational(weighted, history_count(n));
}

SignedPermutation random_signed_permutation(std::size_t n, std::uint64_t seed,
                                            std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<std::int64_t> values(n);
  std::iota(values.begin(), values.end(), 1);
  // Fisher-Yates spelled out: std::shuffle's draw sequence is not portable.
  auto below = [&rng](std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = rng(); while (x >= limit);
    return x % bound;
  };
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(below(i));
    std::swap(values[i - 1], values[j]);
  }
  std::vector<Polarity> signs(n);
  for (auto& s : signs) s = (rng() & 1U) ? Polarity::negative : Polarity::positive;
  return SignedPermutation(std::move(values), std::move(signs));
}

MonteCarloEstimate scaling_montecarlo(int k, std::size_t n, std::size_t samples,
                                      std::uint64_t seed, unsigned workers) {
  if (samples == 0) throw std::invalid_argument("samples must be >= 1");
  if (k < 1) throw std::invalid_argument("arity k must be >= 1");
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(samples)));

  std::vector<std::uint64_t> trees(samples, 0);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      trees[i] = greedy_decompose(random_signed_permutation(n, seed, i), k).trees;
    }
  };
  if (workers == 1) {
    work(0, samples);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (samples + workers - 1) / workers;
    for (std::size_t b = 0; b < samples; b += chunk) {
      pool.emplace_back(work, b, std::min(samples, b + chunk));
    }
  }

  BigInt sum = 0;
  BigInt sum_sq = 0;
  for (auto t : trees) {
    sum += t;
    sum_sq += BigInt(t) * t;
  }
  MonteCarloEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = Rational(sum, BigInt(samples));
  if (samples > 1) {
    // Unbiased variance (sum_sq - sum^2/N) / (N-1), kept exact until the sqrt.
    const Rational var = (Rational(sum_sq) - Rational(sum * sum, BigInt(samples))) /
                         Rational(BigInt(samples - 1));
    est.standard_error = std::sqrt(static_cast<double>(var) / static_cast<double>(samples));
  }
  return est;
}

}  // namespace shp
