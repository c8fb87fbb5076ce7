#include "ecm/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>

namespace ecm {

void Graph::remove_vertex_if_isolated(VertexId v) {
    for (const auto& [e, ep] : edges_)
        if (ep.touches(v)) return;
    vertices_.erase(v);
}

void Graph::rename_endpoint(EdgeId e, VertexId from, VertexId to) {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw InputError("unknown edge id " + std::to_string(e));
    auto& ep = it->second;
    if (ep.u == from && ep.v == from) {
        ep.u = ep.v = to;
    } else if (ep.u == from) {
        ep.u = to;
    } else if (ep.v == from) {
        ep.v = to;
    } else {
        throw InputError("edge " + std::to_string(e) + " not incident to vertex " + std::to_string(from));
    }
    if (ep.u > ep.v) std::swap(ep.u, ep.v);
    vertices_.insert(to);
}

EdgeSet Graph::edge_ids() const {
    std::vector<int> v;
    v.reserve(edges_.size());
    for (const auto& [e, ep] : edges_) v.push_back(e);
    return EdgeSet(std::move(v));
}

EdgeSet Graph::incident(VertexId v) const {
    std::vector<int> r;
    for (const auto& [e, ep] : edges_)
        if (ep.touches(v)) r.push_back(e);
    return EdgeSet(std::move(r));
}

EdgeSet Graph::star(VertexId v) const {
    std::vector<int> r;
    for (const auto& [e, ep] : edges_)
        if (ep.touches(v) && !ep.is_loop()) r.push_back(e);
    return EdgeSet(std::move(r));
}

EdgeSet Graph::loops() const {
    std::vector<int> r;
    for (const auto& [e, ep] : edges_)
        if (ep.is_loop()) r.push_back(e);
    return EdgeSet(std::move(r));
}

EdgeSet Graph::loops_at(VertexId v) const {
    std::vector<int> r;
    for (const auto& [e, ep] : edges_)
        if (ep.is_loop() && ep.u == v) r.push_back(e);
    return EdgeSet(std::move(r));
}

int Graph::degree(VertexId v) const {
    int d = 0;
    for (const auto& [e, ep] : edges_) {
        if (ep.is_loop()) {
            if (ep.u == v) d += 2;
        } else if (ep.touches(v)) {
            d += 1;
        }
    }
    return d;
}

VertexSet Graph::vertices_of(const EdgeSet& x) const {
    std::vector<int> r;
    for (EdgeId e : x) {
        const auto& ep = endpoints(e);
        r.push_back(ep.u);
        r.push_back(ep.v);
    }
    return VertexSet(std::move(r));
}

VertexId Graph::fresh_vertex() const {
    return vertices_.empty() ? 0 : *std::prev(vertices_.end()) + 1;
}

EdgeId Graph::fresh_edge() const {
    return edges_.empty() ? 0 : edges_.rbegin()->first + 1;
}

void Graph::check_edges(const EdgeSet& x) const {
    for (EdgeId e : x)
        if (!has_edge(e)) throw InputError("unknown edge id " + std::to_string(e));
}

void Graph::check_vertices(const VertexSet& u) const {
    for (VertexId v : u)
        if (!has_vertex(v)) throw InputError("unknown vertex id " + std::to_string(v));
}

VertexSet boundary(const Graph& g, const EdgeSet& x) {
    g.check_edges(x);
    EdgeSet xbar = g.edge_ids() - x;
    return g.vertices_of(x) & g.vertices_of(xbar);
}

VertexSet interior(const Graph& g, const EdgeSet& x) {
    g.check_edges(x);
    return g.vertices_of(x) - boundary(g, x);
}

EdgeSet cut(const Graph& g, const VertexSet& u) {
    g.check_vertices(u);
    std::vector<int> r;
    for (const auto& [e, ep] : g.edges()) {
        if (ep.is_loop()) continue;
        if (u.contains(ep.u) != u.contains(ep.v)) r.push_back(e);
    }
    return EdgeSet(std::move(r));
}

bool is_cycle(const Graph& g, const EdgeSet& x) {
    g.check_edges(x);
    return odd_vertices(g, x).empty();
}

VertexSet odd_vertices(const Graph& g, const EdgeSet& x) {
    std::map<VertexId, int> deg;
    for (EdgeId e : x) {
        const auto& ep = g.endpoints(e);
        if (ep.is_loop()) continue;  // contributes 2, parity unchanged
        deg[ep.u] ^= 1;
        deg[ep.v] ^= 1;
    }
    std::vector<int> odd;
    for (auto& [v, p] : deg)
        if (p) odd.push_back(v);
    return VertexSet(std::move(odd));
}

Graph subgraph(const Graph& g, const EdgeSet& x) {
    g.check_edges(x);
    Graph h;
    for (EdgeId e : x) {
        const auto& ep = g.endpoints(e);
        h.add_edge(e, ep.u, ep.v);
    }
    return h;
}

namespace {

// union-find over vertex ids
struct Dsu {
    std::map<VertexId, VertexId> parent;
    VertexId find(VertexId v) {
        auto it = parent.find(v);
        if (it == parent.end()) {
            parent[v] = v;
            return v;
        }
        if (it->second == v) return v;
        return it->second = find(it->second);
    }
    void unite(VertexId a, VertexId b) { parent[find(a)] = find(b); }
};

}  // namespace

bool is_connected(const Graph& g) {
    if (g.vertices().empty()) return true;
    Dsu d;
    for (VertexId v : g.vertices()) d.find(v);
    for (const auto& [e, ep] : g.edges()) d.unite(ep.u, ep.v);
    VertexId r = d.find(g.vertices().min());
    for (VertexId v : g.vertices())
        if (d.find(v) != r) return false;
    return true;
}

bool subgraph_connected(const Graph& g, const EdgeSet& x) {
    if (x.empty()) return true;
    Dsu d;
    for (EdgeId e : x) {
        const auto& ep = g.endpoints(e);
        d.unite(ep.u, ep.v);
    }
    VertexId r = d.find(g.endpoints(x.min()).u);
    for (EdgeId e : x) {
        const auto& ep = g.endpoints(e);
        if (d.find(ep.u) != r || d.find(ep.v) != r) return false;
    }
    return true;
}

std::vector<EdgeSet> connected_components(const Graph& g) {
    Dsu d;
    for (const auto& [e, ep] : g.edges()) d.unite(ep.u, ep.v);
    std::map<VertexId, std::vector<int>> by_root;
    for (const auto& [e, ep] : g.edges()) by_root[d.find(ep.u)].push_back(e);
    std::vector<EdgeSet> r;
    for (auto& [root, es] : by_root) r.emplace_back(std::move(es));
    return r;
}

std::vector<VertexSet> component_vertex_sets(const Graph& g) {
    Dsu d;
    for (VertexId v : g.vertices()) d.find(v);
    for (const auto& [e, ep] : g.edges()) d.unite(ep.u, ep.v);
    std::map<VertexId, std::vector<int>> by_root;
    for (VertexId v : g.vertices()) by_root[d.find(v)].push_back(v);
    std::vector<VertexSet> r;
    for (auto& [root, vs] : by_root) r.emplace_back(std::move(vs));
    return r;
}

namespace {

// Iterative lowpoint DFS for blocks; parallel edges and loops handled
// explicitly (a loop is its own block, a parallel pair is 2-connected).
struct BlockFinder {
    const Graph& g;
    std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adj;
    std::map<VertexId, int> num, low;
    std::map<VertexId, int> children_making_cut;
    VertexSet cut_vertices;
    std::vector<EdgeSet> blocks;
    std::vector<EdgeId> stack;
    int counter = 0;

    explicit BlockFinder(const Graph& gr) : g(gr) {
        for (const auto& [e, ep] : g.edges()) {
            if (ep.is_loop()) continue;
            adj[ep.u].push_back({e, ep.v});
            adj[ep.v].push_back({e, ep.u});
        }
    }

    void pop_block(EdgeId until_edge) {
        std::vector<int> es;
        while (!stack.empty()) {
            EdgeId e = stack.back();
            stack.pop_back();
            es.push_back(e);
            if (e == until_edge) break;
        }
        blocks.emplace_back(std::move(es));
    }

    void dfs(VertexId root) {
        // explicit stack: (vertex, parent edge, next adjacency index)
        struct Frame {
            VertexId v;
            EdgeId parent_edge;
            size_t idx;
        };
        std::vector<Frame> frames;
        frames.push_back({root, -1, 0});
        num[root] = ++counter;
        low[root] = num[root];
        int root_children = 0;
        while (!frames.empty()) {
            Frame& f = frames.back();
            auto& nbrs = adj[f.v];
            if (f.idx < nbrs.size()) {
                auto [e, w] = nbrs[f.idx++];
                if (e == f.parent_edge) continue;
                if (!num.count(w)) {
                    stack.push_back(e);
                    if (f.v == root) ++root_children;
                    num[w] = ++counter;
                    low[w] = num[w];
                    frames.push_back({w, e, 0});
                } else if (num[w] < num[f.v]) {
                    stack.push_back(e);
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                Frame done = f;
                frames.pop_back();
                if (!frames.empty()) {
                    Frame& p = frames.back();
                    low[p.v] = std::min(low[p.v], low[done.v]);
                    if (low[done.v] >= num[p.v]) {
                        if (p.v != root) cut_vertices.insert(p.v);
                        pop_block(done.parent_edge);
                    }
                }
            }
        }
        if (root_children >= 2) cut_vertices.insert(root);
    }
};

}  // namespace

BlockDecomposition components_and_blocks(const Graph& g) {
    BlockDecomposition out;
    auto comps = component_vertex_sets(g);
    for (const auto& cv : comps) {
        BlockDecomposition::Component comp;
        comp.vertices = cv;
        Graph sub;
        for (VertexId v : cv) sub.add_vertex(v);
        EdgeSet comp_loops;
        for (const auto& [e, ep] : g.edges())
            if (cv.contains(ep.u)) {
                if (ep.is_loop())
                    comp_loops.insert(e);
                else
                    sub.add_edge(e, ep.u, ep.v);
            }
        BlockFinder bf(sub);
        for (VertexId v : cv)
            if (!bf.num.count(v) && !sub.star(v).empty()) bf.dfs(v);
        comp.blocks = bf.blocks;
        comp.cut_vertices = bf.cut_vertices;
        for (EdgeId l : comp_loops) comp.blocks.push_back(EdgeSet{l});
        // a vertex carrying a loop plus anything else separates the loop block
        for (EdgeId l : comp_loops) {
            VertexId v = g.endpoints(l).u;
            if (g.degree(v) > 2) comp.cut_vertices.insert(v);
        }
        std::sort(comp.blocks.begin(), comp.blocks.end());
        out.components.push_back(std::move(comp));
    }
    return out;
}

bool is_k_separation(const Graph& g, const EdgeSet& x, int k) {
    EdgeSet xbar = g.edge_ids() - x;
    if (std::min(x.size(), xbar.size()) < k) return false;
    if (boundary(g, x).size() != k) return false;
    return subgraph_connected(g, x) && subgraph_connected(g, xbar);
}

std::vector<EdgeSet> enumerate_k_separations(const Graph& g, int k) {
    if (k < 1) throw InputError("k must be >= 1");
    if (!is_connected(g)) throw InputError("graph must be connected");
    EdgeSet all = g.edge_ids();
    int m = all.size();
    if (m > 24) throw BudgetError("too many edges for exhaustive separation scan");
    std::vector<EdgeId> ids(all.begin(), all.end());
    std::vector<EdgeSet> out;
    // iterate over subsets containing the first edge: picks one side of each split
    for (uint32_t mask = 0; mask < (1u << m); ++mask) {
        if (m > 0 && !(mask & 1u)) continue;
        std::vector<int> xs;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) xs.push_back(ids[static_cast<size_t>(i)]);
        EdgeSet x(std::move(xs));
        if (!is_k_separation(g, x, k)) continue;
        EdgeSet xbar = all - x;
        out.push_back(std::min(x, xbar));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool graph_k_connected(const Graph& g, int k) {
    if (!is_connected(g)) return false;
    for (int r = 1; r < k; ++r) {
        EdgeSet all = g.edge_ids();
        int m = all.size();
        std::vector<EdgeId> ids(all.begin(), all.end());
        for (uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
            std::vector<int> xs;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) xs.push_back(ids[static_cast<size_t>(i)]);
            if (is_k_separation(g, EdgeSet(std::move(xs)), r)) return false;
        }
    }
    return true;
}

bool is_wflip_step(const Graph& g, const EdgeSet& x) {
    if (x.empty()) return false;
    if (x.intersects(g.loops())) return false;
    if (boundary(g, x).size() != 2) return false;
    if (!subgraph_connected(g, x)) return false;
    EdgeSet rest = g.edge_ids() - x - g.loops();
    if (!subgraph_connected(g, rest)) return false;
    return std::min(x.size(), rest.size()) >= 2;
}

std::string canonical_key(const Graph& g, const VertexSet& marked) {
    // vertex signature: (marker flag, sorted incident edge ids). Vertices
    // with identical signatures are joined by exactly the same parallel
    // edges, so any tie order yields the same canonical form.
    std::vector<std::pair<std::pair<int, std::vector<int>>, VertexId>> sigs;
    for (VertexId v : g.vertices()) {
        std::vector<int> inc;
        for (const auto& [e, ep] : g.edges())
            if (ep.touches(v)) inc.push_back(e);
        sigs.push_back({{marked.contains(v) ? 1 : 0, std::move(inc)}, v});
    }
    std::sort(sigs.begin(), sigs.end());
    std::map<VertexId, int> index;
    for (size_t i = 0; i < sigs.size(); ++i) index[sigs[i].second] = static_cast<int>(i);
    std::ostringstream os;
    os << g.vertex_count() << ';';
    for (const auto& [e, ep] : g.edges()) {
        int a = index[ep.u], b = index[ep.v];
        if (a > b) std::swap(a, b);
        os << e << ':' << a << ',' << b << ';';
    }
    os << '|';
    for (const auto& s : sigs) os << s.first.first;
    return os.str();
}

}  // namespace ecm
