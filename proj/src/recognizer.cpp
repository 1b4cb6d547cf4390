#include "shp/recognizer.hpp"

#include <stdexcept>

namespace shp {

std::string_view to_string(StrictnessMode m) {
  switch (m) {
    case StrictnessMode::paper_first_letter: return "paper-strict";
    case StrictnessMode::non_strict: return "nonstrict";
    case StrictnessMode::either_strict: return "either-strict";
  }
  return "?";
}

StrictnessMode parse_mode(std::string_view text) {
  if (text == "nonstrict") return StrictnessMode::non_strict;
  if (text == "paper-strict") return StrictnessMode::paper_first_letter;
  if (text == "either-strict") return StrictnessMode::either_strict;
  throw ParseError("unknown strictness mode '" + std::string(text) +
                   "' (expected nonstrict, paper-strict or either-strict)");
}

namespace {

bool strict_clause(std::int64_t plus, std::int64_t minus, Polarity first,
                   StrictnessMode mode) {
  switch (mode) {
    case StrictnessMode::paper_first_letter:
      return (first == Polarity::positive ? plus : minus) >= 1;
    case StrictnessMode::non_strict:
      return true;
    case StrictnessMode::either_strict:
      return plus + minus >= 1;
  }
  return false;
}

}  // namespace

bool is_k_dominant(const Word& w, StrictnessMode mode) {
  if (w.empty()) throw std::invalid_argument("k-dominance is defined for nonempty words");
  if (w[0].value != w.arity()) return false;
  const auto c = counts(w);
  const auto plus = lambda_plus(c);
  const auto minus = lambda_minus(c);
  return plus >= 0 && minus >= 0 && strict_clause(plus, minus, w[0].polarity, mode);
}

bool is_member(const Word& w, StrictnessMode mode) {
  if (w.empty()) return true;
  const int k = w.arity();
  if (w[0].value != k) return false;
  std::int64_t plus = 0;
  std::int64_t minus = 0;
  for (const auto& l : w.letters()) {
    plus += lambda_delta(l, k, Polarity::positive);
    minus += lambda_delta(l, k, Polarity::negative);
    if (plus < 0 || minus < 0) return false;
  }
  return strict_clause(plus, minus, w[0].polarity, mode);
}

void for_each_member(int k, std::size_t length, StrictnessMode mode,
                     const std::function<void(const Word&)>& visit) {
  const auto sigma = alphabet(k);
  std::vector<Letter> letters;
  letters.reserve(length);

  // Depth-first over prefixes that keep both running counts nonnegative.
  std::function<void(std::int64_t, std::int64_t)> extend = [&](std::int64_t plus,
                                                               std::int64_t minus) {
    if (letters.size() == length) {
      if (length == 0 || strict_clause(plus, minus, letters[0].polarity, mode)) {
        visit(Word(k, letters));
      }
      return;
    }
    for (const auto& l : sigma) {
      if (letters.empty() && l.value != k) continue;
      const auto p = plus + lambda_delta(l, k, Polarity::positive);
      const auto m = minus + lambda_delta(l, k, Polarity::negative);
      if (p < 0 || m < 0) continue;
      letters.push_back(l);
      extend(p, m);
      letters.pop_back();
    }
  };
  extend(0, 0);
}

CounterAutomaton::CounterAutomaton(std::string name, int k) : name_(std::move(name)), k_(k) {
  if (k < 1) throw std::invalid_argument("arity k must be >= 1");
}

CounterAutomaton::StateId CounterAutomaton::add_state(std::string name,
                                                      std::optional<std::int64_t> threshold) {
  states_.push_back({std::move(name), threshold});
  return states_.size() - 1;
}

void CounterAutomaton::set_initial(StateId s) {
  if (s >= states_.size()) throw std::out_of_range("unknown state");
  initial_ = s;
}

void CounterAutomaton::add_transition(StateId from, const Letter& letter, StateId to,
                                      std::int64_t delta) {
  if (from >= states_.size() || to >= states_.size()) throw std::out_of_range("unknown state");
  if (letter.value < 0 || letter.value > k_) throw std::out_of_range("letter outside alphabet");
  if (!transitions_.emplace(std::pair{from, letter}, Transition{to, delta}).second) {
    throw std::logic_error("nondeterministic transition on " + format_letter(letter) +
                           " from state " + states_[from].name);
  }
}

std::optional<CounterAutomaton::Transition> CounterAutomaton::transition(
    StateId from, const Letter& letter) const {
  auto it = transitions_.find({from, letter});
  if (it == transitions_.end()) return std::nullopt;
  return it->second;
}

CounterAutomaton::Trace CounterAutomaton::trace(const Word& w) const {
  if (w.arity() != k_) {
    throw ArityMismatch("automaton " + name_ + " has arity " + std::to_string(k_) +
                        ", word has arity " + std::to_string(w.arity()));
  }
  Trace t;
  StateId state = initial_;
  std::int64_t counter = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    auto tr = transition(state, w[i]);
    if (!tr || counter + tr->delta < 0) {
      t.rejected_at = i;
      return t;
    }
    counter += tr->delta;
    state = tr->target;
    t.counters.push_back(counter);
  }
  const auto& threshold = states_[state].accept_threshold;
  t.accepted = threshold && counter >= *threshold;
  return t;
}

nlohmann::json CounterAutomaton::to_json() const {
  nlohmann::json states = nlohmann::json::array();
  for (std::size_t i = 0; i < states_.size(); ++i) {
    nlohmann::json s{{"id", i}, {"name", states_[i].name}};
    s["accepting"] = states_[i].accept_threshold.has_value();
    if (states_[i].accept_threshold) s["min_counter"] = *states_[i].accept_threshold;
    states.push_back(std::move(s));
  }
  nlohmann::json transitions = nlohmann::json::array();
  for (const auto& [key, tr] : transitions_) {
    transitions.push_back({{"from", key.first},
                           {"letter", format_letter(key.second)},
                           {"to", tr.target},
                           {"delta", tr.delta}});
  }
  return {{"name", name_}, {"k", k_}, {"initial", initial_},
          {"reject_on_underflow", true}, {"states", std::move(states)},
          {"transitions", std::move(transitions)}};
}

bool run(const CounterAutomaton& a, const Word& w) { return a.trace(w).accepted; }

namespace {

// The counter tracks lambda(p) of the prefix read so far. Two disjoint
// branches remember the polarity of the first letter, which only matters for
// the strict reading. either-strict gets the non-strict thresholds: its sum
// clause couples both counters, and on words whose prefixes all pass it is
// already implied (checked exhaustively in the tests).
CounterAutomaton build_dominance_automaton(int k, StrictnessMode mode, Polarity p) {
  CounterAutomaton a(p == Polarity::positive ? "A1" : "A2", k);
  const auto start = a.add_state("start", 0);
  const std::int64_t own_threshold = mode == StrictnessMode::paper_first_letter ? 1 : 0;
  const auto lead_same = a.add_state(std::string("lead") + sign_char(p), own_threshold);
  const auto lead_other = a.add_state(std::string("lead") + sign_char(opposite(p)), 0);
  a.set_initial(start);

  const Letter first_same{k, p};
  const Letter first_other{k, opposite(p)};
  a.add_transition(start, first_same, lead_same, lambda_delta(first_same, k, p));
  a.add_transition(start, first_other, lead_other, lambda_delta(first_other, k, p));
  for (const auto& l : alphabet(k)) {
    a.add_transition(lead_same, l, lead_same, lambda_delta(l, k, p));
    a.add_transition(lead_other, l, lead_other, lambda_delta(l, k, p));
  }
  return a;
}

}  // namespace

CounterAutomaton build_a1(int k, StrictnessMode mode) {
  return build_dominance_automaton(k, mode, Polarity::positive);
}

CounterAutomaton build_a2(int k, StrictnessMode mode) {
  return build_dominance_automaton(k, mode, Polarity::negative);
}

}  // namespace shp
