#pragma once

#include <optional>
#include <utility>

#include "ecm/graph.hpp"

namespace ecm {

/// Ordered list of Whitney-flip steps. Step i must be a valid flip step of
/// the graph obtained by performing steps 0..i-1; validated on application.
struct WSequence {
    std::vector<EdgeSet> steps;
    bool empty() const { return steps.empty(); }
    int size() const { return static_cast<int>(steps.size()); }
};

/// Whitney-flip on x: requires |B(x)| = 2; reattaches G[x] with the two
/// boundary vertices exchanged. Boundary and interior vertices keep their
/// ids, so the flip is an involution.
Graph whitney_flip(const Graph& g, const EdgeSet& x);

/// Identify v1 and v2 (from distinct components); v1 survives.
Graph whitney_glue(const Graph& g, VertexId v1, VertexId v2);

/// Partition into components each of which is a block: every cut vertex is
/// duplicated (fresh ids, deterministic order) so each block becomes its own
/// component. Loops detach onto fresh vertices.
Graph whitney_split_blocks(const Graph& g);

/// Sequential flips; throws InputError naming the first invalid step index.
Graph apply_wsequence(const Graph& g, const WSequence& s);
/// True iff every step is a valid w-flip step when reached.
bool wsequence_valid(const Graph& g, const WSequence& s);
bool wsequence_noncrossing(const Graph& g, const WSequence& s);
bool sets_cross(const EdgeSet& universe, const EdgeSet& x, const EdgeSet& y);

/// Signature exchange: sigma := sigma Δ delta(u).
SignedGraph resign(const SignedGraph& sg, const VertexSet& u);

/// Endpoint remap of the odd edges at a blocking pair v1, v2. Requires
/// sigma ⊆ delta(v1) ∪ delta(v2) ∪ loops. New loops land on v1.
SignedGraph lovasz_flip(const SignedGraph& sg, VertexId v1, VertexId v2);

struct SplitResult {
    Graph graph;
    VertexId v1, v2;  // alpha side, rest side
};
/// Split v into v1 (receiving alpha) and v2 (receiving delta(v) − alpha);
/// loops of g in alpha become (v1,v2) edges. Fresh ids unless given.
SplitResult split_vertex(const Graph& g, VertexId v, const EdgeSet& alpha,
                         std::optional<VertexId> v1 = {}, std::optional<VertexId> v2 = {});

struct UnfoldResult {
    Graft graft;
    VertexId s1, s2, t1, t2;  // T = {s1,s2,t1,t2}
};
/// Unfold a signed graph with sigma = alpha Δ beta, alpha ⊆ delta(s) ∪ loops,
/// beta ⊆ delta(t) ∪ loops, alpha ∩ beta ∩ loops = ∅.
UnfoldResult unfold(const SignedGraph& sg, VertexId s, VertexId t, const EdgeSet& alpha,
                    const EdgeSet& beta);
/// Deterministic choice: alpha := sigma ∩ (delta(s) ∪ loops), beta := rest.
std::pair<EdgeSet, EdgeSet> default_alpha_beta(const SignedGraph& sg, VertexId s, VertexId t);

struct FoldResult {
    SignedGraph sg;
    VertexId s, t;  // merged vertices (first id of each pair survives)
};
/// Identify s_pair and t_pair; signature = delta(s_pair.first) Δ delta(t_pair.first)
/// computed before identification.
FoldResult fold(const Graft& gr, std::pair<VertexId, VertexId> s_pair,
                std::pair<VertexId, VertexId> t_pair);

struct GraftSumResult {
    Graft graft;
    VertexId vminus, vplus;
};
/// 2-terminal graft sum: identify a's terminals with b's (crosswise when
/// `flipped`, realizing the Whitney-flip ambiguity of the sum).
GraftSumResult graft_sum(const Graft& a, const Graft& b, bool flipped = false);

struct SiblingSignedPair {
    SignedGraph first, second;
};

struct DeltaSubstitution {
    SiblingSignedPair pair;
    VertexSet attach_first, attach_second;  // images of v12, v13, v23
};
/// Replace a common triangle {e1,e2,e3} (even in both inputs after
/// resigning) by the graph h attached at v12, v13, v23.
DeltaSubstitution delta_substitute(const SiblingSignedPair& pair,
                                   const std::array<EdgeId, 3>& triangle, const Graph& h,
                                   const std::array<VertexId, 3>& attach);

struct DeltaReduction {
    SiblingSignedPair pair;
    EdgeSet triangle;  // freshly created triangle edges
    EdgeSet omitted;   // triangle edges omitted to avoid same-parity parallels
};
/// Replace the common piece y (equal labeled subgraph in both inputs,
/// 3-vertex boundary, resignable to all-even) by a triangle on its boundary.
DeltaReduction delta_reduce(const SiblingSignedPair& pair, const EdgeSet& y);

}  // namespace ecm
