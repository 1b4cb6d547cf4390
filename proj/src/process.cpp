#include "shp/process.hpp"

#include <ostream>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace shp {

StepOutcome step_traced(const Word& w, InsertionEvent e, KillDirection dir) {
  if (e.position < 1 || e.position > w.size() + 1) {
    throw std::out_of_range("insertion position " + std::to_string(e.position) +
                            " outside 1.." + std::to_string(w.size() + 1));
  }
  const int k = w.arity();
  std::vector<Letter> letters(w.letters().begin(), w.letters().end());
  const std::size_t at = e.position - 1;
  letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(at), Letter{k, e.polarity});

  const Polarity target = opposite(e.polarity);
  auto eligible = [&](const Letter& l) { return l.polarity == target && l.value >= 1; };

  std::optional<std::size_t> killed;
  if (dir == KillDirection::right) {
    for (std::size_t j = at + 1; j < letters.size(); ++j) {
      if (eligible(letters[j])) {
        killed = j;
        break;
      }
    }
  } else {
    for (std::size_t j = at; j-- > 0;) {
      if (eligible(letters[j])) {
        killed = j;
        break;
      }
    }
  }
  if (killed) --letters[*killed].value;
  return {Word(k, std::move(letters)), killed};
}

Word step(const Word& w, InsertionEvent e, KillDirection dir) {
  return step_traced(w, e, dir).word;
}

MultiplicityMap enumerate(int k, std::size_t n, const EnumerateOptions& opts) {
  using Frontier = std::unordered_map<Word, BigInt, WordHash>;
  Frontier frontier;
  frontier.emplace(Word(k), BigInt(1));
  for (std::size_t level = 0; level < n; ++level) {
    Frontier next;
    next.reserve(frontier.size() * 4);
    for (const auto& [word, mult] : frontier) {
      for (std::size_t pos = 1; pos <= word.size() + 1; ++pos) {
        for (auto pol : {Polarity::positive, Polarity::negative}) {
          auto [it, inserted] = next.try_emplace(step(word, {pos, pol}), mult);
          if (!inserted) {
            it->second += mult;
          } else if (next.size() > opts.max_distinct_words) {
            throw ResourceLimitError("enumerate: more than " +
                                     std::to_string(opts.max_distinct_words) +
                                     " distinct words at length " +
                                     std::to_string(level + 1));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return MultiplicityMap(std::make_move_iterator(frontier.begin()),
                         std::make_move_iterator(frontier.end()));
}

void write_multiplicities(std::ostream& out, const MultiplicityMap& m) {
  for (const auto& [word, mult] : m) out << format_word(word) << '\t' << mult << '\n';
}

std::vector<Word> sample_trajectory(int k, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Word> out;
  out.reserve(n + 1);
  out.emplace_back(k);
  for (std::size_t m = 1; m <= n; ++m) {
    std::uniform_int_distribution<std::size_t> pos(1, m);
    std::bernoulli_distribution negative(0.5);
    const InsertionEvent e{pos(rng), negative(rng) ? Polarity::negative : Polarity::positive};
    out.push_back(step(out.back(), e));
  }
  return out;
}

}  // namespace shp
