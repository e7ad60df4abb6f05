#pragma once

#include <map>
#include <string>
#include <string_view>

#include "bmg/tree.hpp"

namespace bmg {

using ColorMap = std::map<std::string, std::string, std::less<>>;

/// Parses a rooted Newick string. Leaf labels match [A-Za-z0-9_.-]+; inner
/// labels and branch lengths are accepted and discarded.
LeafColoredTree parse_newick(std::string_view text);

/// Canonical Newick: children in canonical order, no inner labels, trailing ';'.
std::string to_newick(const LeafColoredTree& tree);

/// `leaf_id<TAB>color_id` rows, no header. Blank lines are skipped.
ColorMap parse_color_tsv(std::string_view text);
std::string to_color_tsv(const LeafColoredTree& tree);

/// Returns a copy with every leaf colored from `colors`. InputError naming
/// the first uncovered leaf.
LeafColoredTree with_colors(const LeafColoredTree& tree, const ColorMap& colors);

/// True for non-empty strings over [A-Za-z0-9_.-].
bool is_valid_label(std::string_view label);

}  // namespace bmg
