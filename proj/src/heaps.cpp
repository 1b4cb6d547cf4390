#include "shp/heaps.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace shp {

HeapForest::HeapForest(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("arity k must be >= 1");
}

bool HeapForest::contains_value(std::int64_t value) const {
  return std::any_of(nodes_.begin(), nodes_.end(),
                     [&](const Node& n) { return n.value == value; });
}

std::size_t HeapForest::free_slots(std::size_t node) const {
  return static_cast<std::size_t>(k_) - nodes_.at(node).children.size();
}

std::vector<Slot> HeapForest::slots() const {
  std::vector<Slot> out;
  for (std::size_t t = 0; t < roots_.size(); ++t) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      if (nodes_[i].tree != t) continue;
      for (std::size_t s = 0; s < free_slots(i); ++s) {
        out.push_back({nodes_[i].value, opposite(nodes_[i].sign), i});
      }
    }
  }
  return out;
}

std::vector<Slot> HeapForest::compatible_slots(std::int64_t value, Polarity sign) const {
  std::vector<Slot> out;
  for (const auto& slot : slots()) {
    if (slot.polarity == sign && slot.bound <= value) out.push_back(slot);
  }
  return out;
}

HeapForest HeapForest::with_child(std::size_t host, std::int64_t value, Polarity sign) const {
  if (host >= nodes_.size()) throw std::out_of_range("no node " + std::to_string(host));
  const Node& h = nodes_[host];
  if (free_slots(host) == 0) {
    throw std::invalid_argument("node " + std::to_string(h.value) + " has no free slot");
  }
  if (h.sign == sign) {
    throw std::invalid_argument("child sign must alternate with parent " +
                                std::to_string(h.value));
  }
  if (value < h.value) {
    throw std::invalid_argument(std::to_string(value) + " cannot sit below " +
                                std::to_string(h.value));
  }
  if (contains_value(value)) {
    throw std::invalid_argument("duplicate value " + std::to_string(value));
  }
  HeapForest out = *this;
  out.nodes_.push_back({value, sign, h.tree, host, {}});
  out.nodes_[host].children.push_back(out.nodes_.size() - 1);
  return out;
}

HeapForest HeapForest::with_root(std::int64_t value, Polarity sign) const {
  if (contains_value(value)) {
    throw std::invalid_argument("duplicate value " + std::to_string(value));
  }
  HeapForest out = *this;
  out.nodes_.push_back({value, sign, roots_.size(), std::nullopt, {}});
  out.roots_.push_back(out.nodes_.size() - 1);
  return out;
}

std::string HeapForest::validate() const {
  std::unordered_set<std::int64_t> values;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    if (!values.insert(n.value).second) return "duplicate value " + std::to_string(n.value);
    if (n.children.size() > static_cast<std::size_t>(k_)) {
      return "node " + std::to_string(n.value) + " has more than k children";
    }
    if (n.tree >= roots_.size()) return "node " + std::to_string(n.value) + " has no tree";
    for (auto c : n.children) {
      const Node& child = nodes_.at(c);
      if (child.parent != i) return "child link mismatch at " + std::to_string(child.value);
      if (child.value < n.value) {
        return "heap order broken: " + std::to_string(child.value) + " under " +
               std::to_string(n.value);
      }
      if (child.sign == n.sign) {
        return "signs do not alternate: " + std::to_string(child.value) + " under " +
               std::to_string(n.value);
      }
      if (child.tree != n.tree) return "child in a different tree";
    }
    if (!n.parent && roots_.at(n.tree) != i) return "orphan node " + std::to_string(n.value);
  }
  for (std::size_t t = 0; t < roots_.size(); ++t) {
    const Node& r = nodes_.at(roots_[t]);
    if (r.parent || r.tree != t) return "bad root for tree " + std::to_string(t);
  }
  return {};
}

HeapForest greedy_insert(const HeapForest& f, std::int64_t value, Polarity sign) {
  if (f.contains_value(value)) {
    throw std::invalid_argument("duplicate value " + std::to_string(value));
  }
  std::optional<Slot> best;
  for (const auto& slot : f.compatible_slots(value, sign)) {
    if (!best || slot.bound > best->bound) best = slot;
  }
  if (!best) return f.with_root(value, sign);
  return f.with_child(best->host, value, sign);
}

Decomposition greedy_decompose(const SignedPermutation& p, int k) {
  HeapForest f(k);
  for (std::size_t i = 0; i < p.size(); ++i) f = greedy_insert(f, p.value(i), p.sign(i));
  const auto trees = f.tree_count();
  return {std::move(f), trees};
}

namespace {

// Free slots keyed by host value: (bound, slot polarity, count > 0).
using SlotState = std::vector<std::tuple<std::int64_t, Polarity, int>>;

class MinTreeSearch {
 public:
  MinTreeSearch(const SignedPermutation& p, int k) : p_(p), k_(k) {}

  std::size_t solve(std::size_t i, const SlotState& state) {
    if (i == p_.size()) return 0;
    auto key = std::pair{i, state};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const auto x = p_.value(i);
    const auto s = p_.sign(i);
    auto with_new_node = [&](SlotState next) {
      auto pos = std::lower_bound(next.begin(), next.end(), x,
                                  [](const auto& e, std::int64_t v) { return std::get<0>(e) < v; });
      next.insert(pos, {x, opposite(s), k_});
      return next;
    };

    std::size_t best = 1 + solve(i + 1, with_new_node(state));
    for (std::size_t j = 0; j < state.size(); ++j) {
      const auto& [bound, polarity, count] = state[j];
      if (polarity != s || bound > x) continue;
      SlotState next = state;
      if (count == 1) {
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
      } else {
        std::get<2>(next[j]) = count - 1;
      }
      best = std::min(best, solve(i + 1, with_new_node(std::move(next))));
    }
    memo_.emplace(std::move(key), best);
    return best;
  }

 private:
  const SignedPermutation& p_;
  int k_;
  std::map<std::pair<std::size_t, SlotState>, std::size_t> memo_;
};

}  // namespace

std::size_t brute_force_min_trees(const SignedPermutation& p, int k, std::size_t max_size) {
  if (k < 1) throw std::invalid_argument("arity k must be >= 1");
  if (p.size() > max_size) {
    throw ResourceLimitError("brute_force_min_trees: " + std::to_string(p.size()) +
                             " elements exceed the limit of " + std::to_string(max_size));
  }
  MinTreeSearch search(p, k);
  return search.solve(0, {});
}

Signature signature(const HeapForest& f, Polarity p) {
  Signature sig{p, {}};
  for (const auto& slot : f.slots()) {
    if (slot.polarity == p) sig.values.push_back(slot.bound);
  }
  std::sort(sig.values.begin(), sig.values.end());
  return sig;
}

SignaturePair signatures(const HeapForest& f) {
  return {signature(f, Polarity::positive), signature(f, Polarity::negative)};
}

bool dominates(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
  if (a.size() > b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

bool dominates(const SignaturePair& a, const SignaturePair& b) {
  return dominates(a.plus.values, b.plus.values) && dominates(a.minus.values, b.minus.values);
}

bool dominates(const HeapForest& a, const HeapForest& b) {
  return dominates(signatures(a), signatures(b));
}

KMultiset::KMultiset(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("arity k must be >= 1");
}

KMultiset::KMultiset(int k, std::map<std::int64_t, int> multiplicities) : KMultiset(k) {
  for (const auto& [x, m] : multiplicities) set(x, m);
}

int KMultiset::multiplicity(std::int64_t x) const {
  auto it = mult_.find(x);
  return it == mult_.end() ? 0 : it->second;
}

std::size_t KMultiset::size() const {
  std::size_t n = 0;
  for (const auto& [x, m] : mult_) n += static_cast<std::size_t>(m);
  return n;
}

std::vector<std::int64_t> KMultiset::sorted() const {
  std::vector<std::int64_t> out;
  for (const auto& [x, m] : mult_) out.insert(out.end(), static_cast<std::size_t>(m), x);
  return out;
}

void KMultiset::set(std::int64_t x, int multiplicity) {
  if (multiplicity < 0 || multiplicity > k_) {
    throw std::invalid_argument("multiplicity " + std::to_string(multiplicity) +
                                " outside 0.." + std::to_string(k_));
  }
  if (multiplicity == 0) {
    mult_.erase(x);
  } else {
    mult_[x] = multiplicity;
  }
}

bool dominates(const KMultiset& a, const KMultiset& b) {
  return dominates(a.sorted(), b.sorted());
}

KMultiset hammersley_insert(const KMultiset& a, std::int64_t x, bool greedy,
                            std::optional<std::int64_t> victim) {
  if (a.contains(x)) {
    throw std::invalid_argument("element " + std::to_string(x) + " already present");
  }
  if (greedy) {
    auto it = a.entries().upper_bound(x);
    victim = it == a.entries().end() ? std::nullopt : std::optional(it->first);
  } else if (victim && (*victim <= x || !a.contains(*victim))) {
    throw std::invalid_argument("victim " + std::to_string(*victim) +
                                " must be a present element larger than " + std::to_string(x));
  }
  KMultiset out = a;
  out.set(x, a.arity());
  if (victim) out.set(*victim, out.multiplicity(*victim) - 1);
  return out;
}

KMultiset insert_full(const KMultiset& a, std::int64_t x) {
  if (a.contains(x)) {
    throw std::invalid_argument("element " + std::to_string(x) + " already present");
  }
  KMultiset out = a;
  out.set(x, a.arity());
  return out;
}

KMultiset erase_all(const KMultiset& a, std::int64_t x) {
  KMultiset out = a;
  out.set(x, 0);
  return out;
}

std::optional<std::vector<Polarity>> derive_sign(std::span<const std::int64_t> sigma, int k) {
  if (k < 1) throw std::invalid_argument("arity k must be >= 1");
  {
    std::unordered_set<std::int64_t> seen;
    for (auto v : sigma) {
      if (!seen.insert(v).second) {
        throw std::invalid_argument("duplicate value " + std::to_string(v));
      }
    }
  }
  std::vector<Polarity> tau;
  std::vector<int> children(sigma.size(), 0);
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (i == 0) {
      tau.push_back(Polarity::positive);
      continue;
    }
    std::optional<std::size_t> parent;
    for (std::size_t j = 0; j < i; ++j) {
      if (sigma[j] < sigma[i] && children[j] < k &&
          (!parent || sigma[j] > sigma[*parent])) {
        parent = j;
      }
    }
    if (!parent) return std::nullopt;
    ++children[*parent];
    tau.push_back(opposite(tau[*parent]));
  }
  return tau;
}

Word forest_to_word(const HeapForest& f, bool keep_exhausted) {
  std::vector<std::size_t> order(f.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return f.nodes()[a].value < f.nodes()[b].value;
  });
  std::vector<Letter> letters;
  for (auto i : order) {
    const auto free = static_cast<int>(f.free_slots(i));
    if (free == 0 && !keep_exhausted) continue;
    letters.push_back({free, opposite(f.nodes()[i].sign)});
  }
  return Word(f.arity(), std::move(letters));
}

std::string to_dot(const HeapForest& f) {
  std::ostringstream out;
  out << "digraph heaps {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& n = f.nodes()[i];
    out << "  n" << i << " [label=\"" << n.value << '/' << sign_char(n.sign) << "\"];\n";
  }
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& n = f.nodes()[i];
    for (auto c : n.children) out << "  n" << i << " -> n" << c << ";\n";
    for (std::size_t s = 0; s < f.free_slots(i); ++s) {
      out << "  s" << i << '_' << s << " [shape=box,label=\"[" << n.value << ",inf)"
          << sign_char(opposite(n.sign)) << "\"];\n";
      out << "  n" << i << " -> s" << i << '_' << s << " [style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

namespace {

nlohmann::json node_json(const HeapForest& f, std::size_t i) {
  const auto& n = f.nodes()[i];
  nlohmann::json children = nlohmann::json::array();
  for (auto c : n.children) children.push_back(node_json(f, c));
  return {{"value", n.value},
          {"sign", std::string(1, sign_char(n.sign))},
          {"free_slots", f.free_slots(i)},
          {"children", std::move(children)}};
}

}  // namespace

nlohmann::json to_json(const HeapForest& f) {
  nlohmann::json trees = nlohmann::json::array();
  for (auto r : f.roots()) trees.push_back(node_json(f, r));
  return {{"k", f.arity()}, {"trees", std::move(trees)}};
}

}  // namespace shp
