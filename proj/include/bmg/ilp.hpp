#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bmg/editing.hpp"
#include "bmg/graph.hpp"
#include "bmg/triples.hpp"

namespace bmg {

enum class Sense { kLe, kEq, kGe };

struct LinearTerm {
  int var = 0;
  int coef = 0;
  friend auto operator<=>(const LinearTerm&, const LinearTerm&) = default;
};

struct Constraint {
  std::string name;
  std::vector<LinearTerm> terms;  // sorted by variable, no zero coefficients
  Sense sense = Sense::kLe;
  int rhs = 0;
  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// Constraint families of the binary-explainable editing model, in the order
/// they are emitted.
enum class Family { kMode, kProper, kSinkFree, kInformative, kForbidden, kDense, kInference };
std::string_view to_string(Family f);

/// 0/1 program: minimize objective_constant + sum(objective) subject to the
/// constraints. Every variable is binary.
struct IlpModel {
  std::vector<std::string> variables;
  int objective_constant = 0;
  std::vector<LinearTerm> objective;
  std::vector<Constraint> constraints;

  // Set by build_ilp only: family of each constraint and the meaning of each
  // variable (an ordered vertex pair for e, a triple for t).
  std::vector<Family> families;
  std::vector<std::string> vertex_ids;
  std::vector<std::pair<int, int>> arc_of;  // (-1,-1) for t-variables
  std::vector<Triple> triple_of;            // {-1,-1,-1} for e-variables

  std::size_t count(Family f) const;
  std::size_t arc_variable_count() const;
  std::size_t triple_variable_count() const;
};

/// Model for making g a binary-explainable BMG by arc editing, deletion or
/// completion. InputError for improper colorings, fewer than two colors, or
/// ids that do not map to distinct LP identifiers.
IlpModel build_ilp(const ColoredDigraph& g, EditMode mode);

/// CPLEX LP text: Minimize / Subject To / Binary / End.
std::string export_lp(const IlpModel& m);

/// Parses the subset of CPLEX LP written by export_lp (plus free spacing and
/// `\` comments). InputError with a line number on malformed input.
IlpModel parse_lp(std::string_view text);

inline constexpr int kExhaustiveMaxFreeVariables = 24;

struct IlpSolution {
  int objective = 0;
  std::vector<char> values;
};

/// Optimal 0/1 assignment by exhaustive search with activity-bound pruning,
/// or nullopt if infeasible. Variables fixed by single-variable constraints
/// do not count toward the cap; InputError above it.
std::optional<IlpSolution> solve_exhaustive(const IlpModel& m);

/// Calls f for every feasible assignment (same cap).
void for_each_feasible(const IlpModel& m, const std::function<void(const std::vector<char>&)>& f);

/// Objective value of an assignment; feasibility of an assignment.
int evaluate(const IlpModel& m, const std::vector<char>& values);
bool is_feasible(const IlpModel& m, const std::vector<char>& values);

/// The graph encoded by the e-variables and the triples set to 1 (models
/// from build_ilp only).
ColoredDigraph decode_graph(const IlpModel& m, const ColoredDigraph& original,
                            const std::vector<char>& values);
TripleSet decode_triples(const IlpModel& m, const std::vector<char>& values);

}  // namespace bmg
