#pragma once

// Heap decomposition of signed permutations.
//
// A node with value v and sign s offers k child slots; each admits a value
// >= v of sign -s. Greedy insertion takes the compatible slot with the
// largest bound and otherwise opens a new tree. The optimality argument runs
// through signatures (sorted slot bounds per polarity) and Hammersley
// insertions on k-multisets; both are exposed here so they can be tested
// directly.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "shp/core.hpp"

namespace shp {

/// Free child position under a node: admits values >= bound of `polarity`.
struct Slot {
  std::int64_t bound = 0;
  Polarity polarity = Polarity::positive;
  std::size_t host = 0;  // node index
};

class HeapForest {
 public:
  struct Node {
    std::int64_t value = 0;
    Polarity sign = Polarity::positive;
    std::size_t tree = 0;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> children;
  };

  explicit HeapForest(int k);

  int arity() const noexcept { return k_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t tree_count() const noexcept { return roots_.size(); }
  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const std::vector<std::size_t>& roots() const noexcept { return roots_; }
  bool contains_value(std::int64_t value) const;

  std::size_t free_slots(std::size_t node) const;
  /// One entry per free slot, grouped by tree, then by node insertion order.
  std::vector<Slot> slots() const;
  /// Slots that could take (value, sign), in the same order as slots().
  std::vector<Slot> compatible_slots(std::int64_t value, Polarity sign) const;

  /// New forest with (value, sign) attached under `host`. Throws
  /// std::invalid_argument if the slot is full, the sign does not alternate,
  /// the heap order would break, or the value is already present.
  HeapForest with_child(std::size_t host, std::int64_t value, Polarity sign) const;
  /// New forest with (value, sign) as the root of an extra tree.
  HeapForest with_root(std::int64_t value, Polarity sign) const;

  /// Empty string when every structural invariant holds, else a description.
  std::string validate() const;

 private:
  int k_;
  std::vector<Node> nodes_;
  std::vector<std::size_t> roots_;
};

/// Greedy step: largest compatible bound wins, ties to the lowest tree index
/// and then the leftmost slot; no compatible slot opens a new tree.
HeapForest greedy_insert(const HeapForest& f, std::int64_t value, Polarity sign);

struct Decomposition {
  HeapForest forest;
  std::size_t trees = 0;
};

Decomposition greedy_decompose(const SignedPermutation& p, int k);

/// Exact minimum tree count over every legal insertion sequence, by
/// exhaustive search memoized on the remaining slot multisets. Throws
/// ResourceLimitError above max_size elements.
std::size_t brute_force_min_trees(const SignedPermutation& p, int k,
                                  std::size_t max_size = 9);

struct Signature {
  Polarity polarity = Polarity::positive;
  std::vector<std::int64_t> values;  // non-decreasing

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct SignaturePair {
  Signature plus{Polarity::positive, {}};
  Signature minus{Polarity::negative, {}};
};

Signature signature(const HeapForest& f, Polarity p);
SignaturePair signatures(const HeapForest& f);

/// a dominates b: |a| <= |b| and a[i] <= b[i] for every i < |a|.
bool dominates(std::span<const std::int64_t> a, std::span<const std::int64_t> b);
bool dominates(const SignaturePair& a, const SignaturePair& b);
bool dominates(const HeapForest& a, const HeapForest& b);

/// Multiset in which every element has multiplicity at most k.
class KMultiset {
 public:
  explicit KMultiset(int k);
  KMultiset(int k, std::map<std::int64_t, int> multiplicities);

  int arity() const noexcept { return k_; }
  int multiplicity(std::int64_t x) const;
  bool contains(std::int64_t x) const { return multiplicity(x) > 0; }
  std::size_t size() const;  // with multiplicity
  const std::map<std::int64_t, int>& entries() const noexcept { return mult_; }
  /// Elements repeated by multiplicity, non-decreasing.
  std::vector<std::int64_t> sorted() const;

  /// Sets x's multiplicity (0 erases). Throws if outside 0..k.
  void set(std::int64_t x, int multiplicity);

  friend bool operator==(const KMultiset&, const KMultiset&) = default;

 private:
  int k_;
  std::map<std::int64_t, int> mult_;  // only positive entries
};

bool dominates(const KMultiset& a, const KMultiset& b);

/// x joins with multiplicity k; one element larger than x loses one copy.
/// Greedy picks the smallest such element. Otherwise `victim` names it, or
/// nullopt for none. Throws std::invalid_argument when x is present or the
/// victim is not a positive-multiplicity element larger than x.
KMultiset hammersley_insert(const KMultiset& a, std::int64_t x, bool greedy,
                            std::optional<std::int64_t> victim = std::nullopt);

/// Adds x (absent) with multiplicity k.
KMultiset insert_full(const KMultiset& a, std::int64_t x);
/// Removes every copy of x.
KMultiset erase_all(const KMultiset& a, std::int64_t x);

/// Signs that make sigma heapable whenever the plain permutation is: each
/// element goes under the largest earlier smaller element with a free slot,
/// the first element is '+', and children flip their parent's sign. Returns
/// nullopt when some element finds no parent (sigma is not k-heapable).
/// Throws std::invalid_argument on duplicate values.
std::optional<std::vector<Polarity>> derive_sign(std::span<const std::int64_t> sigma, int k = 2);

/// Slot word of a forest: nodes sorted by value, each contributing p^s for
/// its p free slots of polarity s. Nodes with no free slot are skipped unless
/// keep_exhausted is set, in which case they appear as 0-letters (the form
/// that tracks the process step by step).
Word forest_to_word(const HeapForest& f, bool keep_exhausted = false);

std::string to_dot(const HeapForest& f);
nlohmann::json to_json(const HeapForest& f);

}  // namespace shp
