#pragma once

// Forward semantics of the signed Hammersley process.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "shp/core.hpp"

namespace shp {

/// Insert a value-k letter of `polarity` into gap `position` (1 = before the
/// first letter, |w|+1 = after the last).
struct InsertionEvent {
  std::size_t position = 1;
  Polarity polarity = Polarity::positive;

  friend bool operator==(const InsertionEvent&, const InsertionEvent&) = default;
  friend auto operator<=>(const InsertionEvent&, const InsertionEvent&) = default;
};

/// Which neighbour loses a life. `right` is the process proper; `left` is the
/// mirrored variant that the greedy slot dynamics follows.
enum class KillDirection { right, left };

/// Result of one step together with the 0-based index (in the new word) of the
/// letter that lost a life, if any.
struct StepOutcome {
  Word word;
  std::optional<std::size_t> killed;
};

StepOutcome step_traced(const Word& w, InsertionEvent e,
                        KillDirection dir = KillDirection::right);

/// Throws std::out_of_range when the position is not a gap of w.
Word step(const Word& w, InsertionEvent e, KillDirection dir = KillDirection::right);

/// Word -> number of histories producing it. Ordered so exports diff cleanly.
using MultiplicityMap = std::map<Word, BigInt>;

struct EnumerateOptions {
  /// Hard cap on distinct words held in one frontier.
  std::size_t max_distinct_words = 20'000'000;
};

/// Exact multiplicities of all words reachable in exactly n steps.
MultiplicityMap enumerate(int k, std::size_t n, const EnumerateOptions& opts = {});

/// One "word<TAB>multiplicity" line per entry, in map order.
void write_multiplicities(std::ostream& out, const MultiplicityMap& m);

/// n uniformly random steps from the empty word; entry m is the word after m
/// steps. Deterministic in (k, n, seed).
std::vector<Word> sample_trajectory(int k, std::size_t n, std::uint64_t seed);

}  // namespace shp
