#pragma once

// Membership in the language of the signed Hammersley process, decided two
// ways: prefix-wise k-dominance, and a pair of deterministic one-counter
// automata (one per inequality).

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "shp/core.hpp"

namespace shp {

/// How strictly the dominance inequalities are read on the full word.
/// Prefixes are always checked with >= 0.
enum class StrictnessMode {
  /// The inequality matching the first letter's polarity must be > 0.
  paper_first_letter,
  /// Both inequalities >= 0, nothing strict.
  non_strict,
  /// Both >= 0 and their sum >= 1.
  either_strict,
};

std::string_view to_string(StrictnessMode m);
/// Accepts "nonstrict", "paper-strict", "either-strict".
StrictnessMode parse_mode(std::string_view text);

/// Throws std::invalid_argument on the empty word.
bool is_k_dominant(const Word& w, StrictnessMode mode);

bool is_member(const Word& w, StrictnessMode mode = StrictnessMode::non_strict);

/// Visits, in lexicographic order, every member word of the given length.
/// Extensions of non-members are pruned, since membership constrains every
/// prefix.
void for_each_member(int k, std::size_t length, StrictnessMode mode,
                     const std::function<void(const Word&)>& visit);

/// Deterministic one-counter acceptor over the alphabet of arity k.
///
/// The counter stands for a stack of identical symbols above a bottom marker.
/// A transition whose delta would take the counter below zero rejects on the
/// spot. Missing transitions reject. At end of input a state accepts when it
/// is final and the counter is at least the state's threshold (0 or 1), which
/// a counter machine can test by peeking at the bottom marker.
class CounterAutomaton {
 public:
  using StateId = std::size_t;

  struct State {
    std::string name;
    std::optional<std::int64_t> accept_threshold;  // nullopt: not final
  };

  struct Transition {
    StateId target;
    std::int64_t delta;
  };

  struct Trace {
    bool accepted = false;
    /// Counter after each letter read, until rejection.
    std::vector<std::int64_t> counters;
    /// 0-based index of the letter that caused rejection, if rejected early.
    std::optional<std::size_t> rejected_at;
  };

  CounterAutomaton(std::string name, int k);

  StateId add_state(std::string name, std::optional<std::int64_t> accept_threshold);
  void set_initial(StateId s);
  /// Throws std::logic_error if (from, letter) already has a transition.
  void add_transition(StateId from, const Letter& letter, StateId to, std::int64_t delta);

  const std::string& name() const noexcept { return name_; }
  int arity() const noexcept { return k_; }
  StateId initial() const noexcept { return initial_; }
  const std::vector<State>& states() const noexcept { return states_; }
  std::optional<Transition> transition(StateId from, const Letter& letter) const;

  Trace trace(const Word& w) const;

  nlohmann::json to_json() const;

 private:
  std::string name_;
  int k_;
  StateId initial_ = 0;
  std::vector<State> states_;
  std::map<std::pair<StateId, Letter>, Transition> transitions_;
};

bool run(const CounterAutomaton& a, const Word& w);

/// Enforces the positive-survivor inequality on every prefix.
CounterAutomaton build_a1(int k, StrictnessMode mode = StrictnessMode::non_strict);
/// Polarity mirror of build_a1.
CounterAutomaton build_a2(int k, StrictnessMode mode = StrictnessMode::non_strict);

}  // namespace shp
