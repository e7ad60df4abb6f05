#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bmg/graph.hpp"

namespace bmg {

enum class EditMode { kEdit, kDelete, kComplete };
std::string_view to_string(EditMode m);
/// "edit" | "delete" | "complete"; InputError otherwise.
EditMode parse_edit_mode(std::string_view s);

/// Arc insertions and deletions, each sorted by (source, target).
struct EditSet {
  std::vector<Arc> insert;
  std::vector<Arc> remove;

  std::size_t size() const noexcept { return insert.size() + remove.size(); }
  bool empty() const noexcept { return insert.empty() && remove.empty(); }
  friend bool operator==(const EditSet&, const EditSet&) = default;
};

/// G with `f` applied. Inserting a present arc, deleting an absent one, a
/// self-loop or an unknown vertex is an InputError.
ColoredDigraph apply_edit(const ColoredDigraph& g, const EditSet& f);

/// Whether `f` only deletes (kDelete), only inserts (kComplete) or either.
bool fits_mode(const EditSet& f, EditMode mode);

/// `{"insert":[["u","v"],...],"delete":[...]}`.
std::string to_json(const EditSet& f, int indent = -1);
EditSet edit_set_from_json(std::string_view text);

inline constexpr int kBruteForceMaxVertices = 6;

struct EditResult {
  EditSet edits;
  int k = 0;
};

/// Smallest set of arc modifications between distinct colors making g a
/// binary-explainable BMG, tried by increasing size and, within a size, in
/// lexicographic order of the candidate arcs. nullopt when none exists with
/// at most k_max modifications. InputError above kBruteForceMaxVertices.
std::optional<EditResult> brute_force_edit(const ColoredDigraph& g, EditMode mode, int k_max);

}  // namespace bmg
