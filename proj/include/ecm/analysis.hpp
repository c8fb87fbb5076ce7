#pragma once

#include <optional>
#include <utility>

#include "ecm/gf2.hpp"
#include "ecm/graph.hpp"

namespace ecm {

/// Size bounds for exhaustive scans; overridable via ECM_MAX_EXHAUSTIVE_EDGES
/// and ECM_CLASS_BUDGET in the environment.
struct Limits {
    int max_exhaustive_edges = 18;   // subsets scan cap for connectivity tests
    int class_budget = 200000;       // max members of an equivalence class BFS
    int nova_subset_cap = 18;        // per-set cap for handcuff sub-separation scans
    static Limits from_env();
};

/// Rank of x in the even cycle matroid of sg:
/// (|V(X)| − #components of G[X]) + 1 if (G[X], Σ∩X) is non-bipartite.
int rank_even_cycle(const SignedGraph& sg, const EdgeSet& x);

/// Connectivity function λ(X) = r(X) + r(X̄) − r(E) + 1.
int lambda_even_cycle(const SignedGraph& sg, const EdgeSet& x);

struct SeparationReport {
    EdgeSet x;
    int k = 0, i = 0, j = 0;  // graph separation order; bipartiteness bits of side/co-side
    int lambda = 0;
};
/// All graph k-(i,j)-separations of sg with k <= max_k, with λ values.
std::vector<SeparationReport> classify_separations(const SignedGraph& sg, int max_k);

/// Exhaustive λ scan: no 1- or 2-separation of the even cycle matroid.
bool is_3connected_even_cycle(const SignedGraph& sg, const Limits& lim = {});

struct N3CReport {
    bool loops_ok = false;              // at most one loop, and it is odd
    bool two_connected_sans_loops = false;
    bool seps_nonbipartite = false;     // every 2-separation has both sides non-bipartite
    bool all() const { return loops_ok && two_connected_sans_loops && seps_nonbipartite; }
};
/// Structural consequences of 3-connectivity; requires is_3connected_even_cycle.
N3CReport check_n3c_conditions(const SignedGraph& sg, const Limits& lim = {});

/// A vertex s such that some signature of sg fits inside delta(s) ∪ loops.
std::optional<VertexId> blocking_vertex(const SignedGraph& sg);
/// A pair s,t such that some signature fits inside delta(s) ∪ delta(t) ∪ loops.
std::optional<std::pair<VertexId, VertexId>> blocking_pair(const SignedGraph& sg);
/// The witnessing resigned signature for a candidate support, if one exists.
std::optional<EdgeSet> signature_within(const SignedGraph& sg, const EdgeSet& support);

/// An edge set J with V_odd(G[J]) = T (union of terminal-pairing paths).
EdgeSet find_t_join(const Graft& gr);

/// 3-connected and no equivalent signed graph has a blocking vertex. Walks the
/// Whitney equivalence class of the underlying graph.
bool is_ec_standard(const SignedGraph& sg, const Limits& lim = {});

struct ConfiningSet2 {
    EdgeSet y;
    EdgeSet phi2_hat;
};
/// Given phi_i ⊆ delta(s_i) with phi1 Δ phi2 a nonempty cut other than
/// delta(s2): an edge set y with boundary inside {s1,s2}, nonempty interior,
/// delta(s1) ∩ y = phi1 − phi2, and delta(s2) ∩ y = phi2_hat − phi1 where
/// phi2_hat is phi2 or phi2 Δ delta(s2).
ConfiningSet2 find_confining_set_2(const Graph& h, VertexId s1, VertexId s2, const EdgeSet& phi1,
                                   const EdgeSet& phi2);

struct ConfiningSet3 {
    EdgeSet y;
    EdgeSet phi2_hat, phi3_hat;
};
/// Three-star version: phi1 Δ phi2 Δ phi3 a nonempty cut other than
/// delta(s2), delta(s3), delta({s2,s3}).
ConfiningSet3 find_confining_set_3(const Graph& h, VertexId s1, VertexId s2, VertexId s3,
                                   const EdgeSet& phi1, const EdgeSet& phi2, const EdgeSet& phi3);

}  // namespace ecm
