#pragma once

#include <optional>

#include "ecm/ops.hpp"

namespace ecm {

/// Whitney equivalence class of g: BFS closure under flips (any X with a
/// 2-vertex boundary), rehangs (X with a 1-vertex boundary reattached at
/// another vertex; the glue/split-block composite that keeps vertex counts
/// stable), block splitting and cross-component gluing. One representative
/// per canonical key. Throws BudgetError beyond `budget` members.
std::vector<Graph> whitney_class(const Graph& g, int budget);

/// True iff h shows up in g's class within budget.
bool whitney_connected(const Graph& g, const Graph& h, int budget);

/// A w-sequence carrying g to h (flip steps only; both graphs must be
/// 2-connected up to loops). Structural target: apply_wsequence(g, result)
/// equals h exactly. nullopt when unreachable by flips.
std::optional<WSequence> find_wsequence_between(const Graph& g, const Graph& h, int budget);

/// All X that are valid single w-flip steps of g, each side once.
std::vector<EdgeSet> wflip_steps(const Graph& g);

}  // namespace ecm
