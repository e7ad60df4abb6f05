#pragma once

#include <array>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bmg/tree.hpp"

namespace bmg {

/// Rooted triple ab|c over indices into a TripleSet universe. The in-pair is
/// stored with a < b.
struct Triple {
  int a = 0;
  int b = 0;
  int c = 0;

  static Triple make(int x, int y, int outgroup);
  auto operator<=>(const Triple&) const = default;
};

/// Deduplicated, sorted set of triples over a sorted leaf universe.
class TripleSet {
 public:
  TripleSet() = default;
  /// `universe` is sorted and deduplicated; triples index into the sorted
  /// universe.
  explicit TripleSet(std::vector<std::string> universe, std::vector<Triple> triples = {});

  const std::vector<std::string>& universe() const noexcept { return universe_; }
  std::span<const Triple> triples() const noexcept { return triples_; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  /// Index of a label in the universe, -1 if absent.
  int index_of(std::string_view label) const;

  bool contains(const Triple& t) const;
  /// ab|c by label; false if any label is outside the universe.
  bool contains(std::string_view a, std::string_view b, std::string_view c) const;

  /// "ab|c" with the in-pair in canonical order.
  std::string to_string(const Triple& t) const;
  std::vector<std::string> to_strings() const;

  /// Exactly one triple on every 3-subset of the universe.
  bool is_strictly_dense() const;
  /// At most one of ab|c, ac|b, bc|a is present for every 3-subset.
  bool has_at_most_one_per_subset() const;

  /// Every triple of *this occurs (by label) in `other`.
  bool subset_of(const TripleSet& other) const;

  /// Same universe and same triples.
  friend bool operator==(const TripleSet& x, const TripleSet& y) = default;

 private:
  std::vector<std::string> universe_;
  std::vector<Triple> triples_;
};

/// Same triples by label, universes ignored.
bool same_triples(const TripleSet& x, const TripleSet& y);

TripleSet restrict(const TripleSet& ts, std::span<const std::string> subset);

/// Union over a common universe (the union of both universes).
TripleSet triple_union(const TripleSet& x, const TripleSet& y);
/// Triples of `x` that are not in `y` (by label); universe of `x`.
TripleSet triple_difference(const TripleSet& x, const TripleSet& y);

/// r(T): every triple displayed by the tree, universe = leaf labels.
TripleSet all_triples(const LeafColoredTree& tree);

/// Every triple of `ts` with all leaves in the tree is displayed.
bool displays_all(const LeafColoredTree& tree, const TripleSet& ts);

/// Builds a set from label triples {a, b, c} meaning ab|c.
TripleSet make_triple_set(std::vector<std::string> universe,
                          std::span<const std::array<std::string, 3>> triples);

}  // namespace bmg
