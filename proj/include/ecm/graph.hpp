#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ecm/ids.hpp"

namespace ecm {

/// Thrown on violated preconditions / malformed inputs.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
/// Thrown when a bounded search or budget runs out.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Endpoints {
    VertexId u, v;  // unordered; u == v means loop
    bool is_loop() const { return u == v; }
    VertexId other(VertexId w) const { return w == u ? v : u; }
    bool touches(VertexId w) const { return u == w || v == w; }
    friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

/// Finite multigraph with loops over stable edge identifiers. Edge ids never
/// change under any transformation; only incidences do. Value type: all
/// operations elsewhere return fresh graphs.
class Graph {
public:
    Graph() = default;

    void add_vertex(VertexId v) { vertices_.insert(v); }
    void add_edge(EdgeId e, VertexId u, VertexId v) {
        if (edges_.count(e)) throw InputError("duplicate edge id " + std::to_string(e));
        if (u > v) std::swap(u, v);  // endpoints are unordered, store canonically
        edges_[e] = Endpoints{u, v};
        vertices_.insert(u);
        vertices_.insert(v);
    }
    void remove_edge(EdgeId e) { edges_.erase(e); }
    void remove_vertex_if_isolated(VertexId v);

    bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
    bool has_vertex(VertexId v) const { return vertices_.contains(v); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int vertex_count() const { return vertices_.size(); }

    const Endpoints& endpoints(EdgeId e) const {
        auto it = edges_.find(e);
        if (it == edges_.end()) throw InputError("unknown edge id " + std::to_string(e));
        return it->second;
    }
    bool is_loop(EdgeId e) const { return endpoints(e).is_loop(); }

    /// Moves one endpoint of e from `from` to `to` (both endpoints if a loop at `from`).
    void rename_endpoint(EdgeId e, VertexId from, VertexId to);

    EdgeSet edge_ids() const;
    const VertexSet& vertices() const { return vertices_; }
    const std::map<EdgeId, Endpoints>& edges() const { return edges_; }

    EdgeSet incident(VertexId v) const;  // all edges touching v, loops included
    EdgeSet star(VertexId v) const;      // delta(v): edges with exactly one end v
    EdgeSet loops() const;
    EdgeSet loops_at(VertexId v) const;
    int degree(VertexId v) const;        // loops count twice

    /// V_G(X): vertices incident with an edge of x.
    VertexSet vertices_of(const EdgeSet& x) const;
    VertexId fresh_vertex() const;
    EdgeId fresh_edge() const;

    void check_edges(const EdgeSet& x) const;
    void check_vertices(const VertexSet& u) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
    }

private:
    std::map<EdgeId, Endpoints> edges_;
    VertexSet vertices_;
};

/// B_G(X) = V(X) ∩ V(X̄).
VertexSet boundary(const Graph& g, const EdgeSet& x);
/// I_G(X) = V(X) − B_G(X): vertices touched only by X-edges.
VertexSet interior(const Graph& g, const EdgeSet& x);
/// delta_G(U): edges with exactly one end in u. Loops never belong to a cut.
EdgeSet cut(const Graph& g, const VertexSet& u);
/// True iff every vertex of G[X] has even degree (a loop contributes 2).
bool is_cycle(const Graph& g, const EdgeSet& x);
/// Odd-degree vertices of G[X].
VertexSet odd_vertices(const Graph& g, const EdgeSet& x);

/// Subgraph G[X]: vertex set V(X), edge set X.
Graph subgraph(const Graph& g, const EdgeSet& x);
bool is_connected(const Graph& g);
/// Connectivity of G[X] (true for empty x).
bool subgraph_connected(const Graph& g, const EdgeSet& x);
std::vector<EdgeSet> connected_components(const Graph& g);  // edge sets; isolated vertices omitted
std::vector<VertexSet> component_vertex_sets(const Graph& g);

struct BlockDecomposition {
    struct Component {
        VertexSet vertices;
        std::vector<EdgeSet> blocks;  // maximal 2-connected pieces, bridges, loops
        VertexSet cut_vertices;
    };
    std::vector<Component> components;
    std::vector<EdgeSet> all_blocks() const {
        std::vector<EdgeSet> r;
        for (const auto& c : components) r.insert(r.end(), c.blocks.begin(), c.blocks.end());
        return r;
    }
};
/// Components plus per-component block tree data. Every loop is its own block.
BlockDecomposition components_and_blocks(const Graph& g);

/// All X with min(|X|,|X̄|) >= k, |B(X)| = k, both G[X] and G[X̄] connected.
/// Canonical representative: the side whose sorted edge-id list is
/// lexicographically smaller. Requires g connected.
std::vector<EdgeSet> enumerate_k_separations(const Graph& g, int k);

/// Graph k-separation test for a specific side.
bool is_k_separation(const Graph& g, const EdgeSet& x, int k);
/// No r-separation for r < k, and connected.
bool graph_k_connected(const Graph& g, int k);

/// Valid single step of a w-sequence: x loop-free, |B(x)|=2, g[x] connected,
/// g[x̄ − loops] connected, min(|x|, |x̄ − loops|) >= 2. Loop-tolerant version
/// of the 2-separation test (loop positions are immaterial to flips).
bool is_wflip_step(const Graph& g, const EdgeSet& x);

/// Canonical key of a graph under vertex relabeling with edge ids fixed.
/// Two graphs get equal keys iff an edge-id-preserving isomorphism maps one
/// to the other (and maps marked vertices to marked vertices).
std::string canonical_key(const Graph& g, const VertexSet& marked = {});

struct SignedGraph {
    Graph graph;
    EdgeSet sigma;
    SignedGraph() = default;
    SignedGraph(Graph g, EdgeSet s) : graph(std::move(g)), sigma(std::move(s)) {
        if (!sigma.subset_of(graph.edge_ids())) throw InputError("signature not within edge set");
    }
};

struct Graft {
    Graph graph;
    VertexSet terminals;
    Graft() = default;
    Graft(Graph g, VertexSet t) : graph(std::move(g)), terminals(std::move(t)) {
        if (terminals.size() % 2 != 0) throw InputError("terminal set must have even size");
        if (!terminals.subset_of(graph.vertices())) throw InputError("terminal not a vertex");
    }
};

}  // namespace ecm
