#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bmg/editing.hpp"
#include "bmg/graph.hpp"
#include "bmg/tree.hpp"

namespace bmg {

inline constexpr std::string_view kBlack = "black";
inline constexpr std::string_view kWhite = "white";

struct ClassSize {
  int black = 1;
  int white = 1;
};

struct LemmaGadget {
  ColoredDigraph graph;
  LeafColoredTree tree;
};

/// Two-colored graph on X, Y_1..Y_n: black X -> white X, every bichromatic
/// arc from X to the rest, and each Y_i a bi-clique; with the tree that
/// explains it. Ids are `<prefix>xb<j>`, `<prefix>xw<j>`, `<prefix>y<i>b<j>`,
/// `<prefix>y<i>w<j>` (i from 1). InputError if ys is empty or a class has
/// no vertex of some color.
LemmaGadget lemma_gadget(ClassSize x, std::span<const ClassSize> ys, std::string_view prefix = "");

/// Disjoint union; the tree joins the component trees under a new root.
/// InputError on shared ids or an empty list.
LemmaGadget disjoint_union(std::span<const LemmaGadget> parts);

inline constexpr int kGadgetMaxVertices = 20000;

/// Editing instance built from an exact-cover-by-3-sets instance over
/// elements 0..3t-1.
struct X3cGadget {
  ColoredDigraph graph;
  int t = 0;
  int m = 0;
  long r = 0;
  long q = 0;
  long k = 0;
  std::vector<std::array<int, 3>> subsets;
};

/// Vertices `s<e>b`/`s<e>w` per element, `x<i>b<j>`/`x<i>w<j>` (r each) and
/// `y<i>b<j>`/`y<i>w<j>` (q each) per subset, i from 1. InputError when the
/// element count is not a positive multiple of 3, a subset is malformed,
/// q < 1, or the graph would exceed kGadgetMaxVertices.
X3cGadget x3c_gadget(int n_elements, std::span<const std::array<int, 3>> subsets);

/// Deletion set for an exact cover (indices into the gadget's subsets): all
/// X_i -> S arcs of unused subsets plus the S arcs between elements covered
/// by different chosen subsets. InputError if `cover` is not an exact cover.
EditSet x3c_cover_deletions(const X3cGadget& gadget, std::span<const int> cover);

}  // namespace bmg
