#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>

#include "bmg/tree.hpp"
#include "bmg/triples.hpp"

namespace bmg {

/// Exhaustive tree enumeration refuses larger leaf sets.
inline constexpr std::size_t kOracleMaxLeaves = 8;

/// Calls `f` once for every phylogenetic tree on `leaves` (uncolored).
void for_each_tree(std::span<const std::string> leaves,
                   const std::function<void(const LeafColoredTree&)>& f);

/// Number of phylogenetic trees on n leaves, counted by the enumerator.
std::size_t count_trees(std::size_t n);

/// Triples displayed by every tree on `leaves` that displays `ts`.
/// InputError when `ts` is inconsistent or the bound is exceeded.
TripleSet closure_oracle(const TripleSet& ts, std::span<const std::string> leaves);

/// `tree` displays `ts` and every tree on L(tree) displaying `ts` refines it.
bool identifies_oracle(const TripleSet& ts, const LeafColoredTree& tree);

}  // namespace bmg
