#include "ecm/equiv.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

namespace ecm {

namespace {

std::vector<EdgeSet> all_subsets(const EdgeSet& universe) {
    std::vector<int> ids(universe.begin(), universe.end());
    int m = static_cast<int>(ids.size());
    if (m > 20) throw BudgetError("too many edges for subset enumeration");
    std::vector<EdgeSet> out;
    out.reserve(1u << m);
    for (uint32_t mask = 1; mask < (1u << m); ++mask) {  // boundary checks filter the full set
        std::vector<int> xs;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) xs.push_back(ids[static_cast<size_t>(i)]);
        out.emplace_back(std::move(xs));
    }
    return out;
}

std::vector<Graph> neighbors(const Graph& g) {
    std::vector<Graph> out;
    EdgeSet universe = g.edge_ids();
    for (const auto& x : all_subsets(universe)) {
        VertexSet b = boundary(g, x);
        if (b.size() == 2) {
            out.push_back(whitney_flip(g, x));
        } else if (b.size() == 1) {
            VertexId v = b.min();
            // reattach the hanging piece at any other anchor vertex
            VertexSet inner = interior(g, x);
            for (VertexId u : g.vertices()) {
                if (u == v || inner.contains(u)) continue;
                Graph moved = g;
                for (EdgeId e : x)
                    if (g.endpoints(e).touches(v)) moved.rename_endpoint(e, v, u);
                out.push_back(std::move(moved));
            }
        }
    }
    auto comps = component_vertex_sets(g);
    if (comps.size() > 1) {
        for (size_t a = 0; a < comps.size(); ++a)
            for (size_t b = a + 1; b < comps.size(); ++b)
                for (VertexId va : comps[a])
                    for (VertexId vb : comps[b]) out.push_back(whitney_glue(g, va, vb));
    }
    out.push_back(whitney_split_blocks(g));
    return out;
}

}  // namespace

std::vector<Graph> whitney_class(const Graph& g, int budget) {
    std::map<std::string, Graph> seen;
    std::deque<std::string> queue;
    std::string k0 = canonical_key(g);
    seen.emplace(k0, g);
    queue.push_back(k0);
    while (!queue.empty()) {
        Graph cur = seen.at(queue.front());
        queue.pop_front();
        for (auto& nb : neighbors(cur)) {
            std::string k = canonical_key(nb);
            if (seen.count(k)) continue;
            if (static_cast<int>(seen.size()) >= budget)
                throw BudgetError("equivalence class budget exceeded");
            seen.emplace(k, std::move(nb));
            queue.push_back(k);
        }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (auto& [k, gr] : seen) out.push_back(std::move(gr));
    return out;
}

bool whitney_connected(const Graph& g, const Graph& h, int budget) {
    std::string target = canonical_key(h);
    if (canonical_key(g) == target) return true;
    std::set<std::string> seen{canonical_key(g)};
    std::deque<Graph> queue{g};
    while (!queue.empty()) {
        Graph cur = std::move(queue.front());
        queue.pop_front();
        for (auto& nb : neighbors(cur)) {
            std::string k = canonical_key(nb);
            if (k == target) return true;
            if (seen.count(k)) continue;
            if (static_cast<int>(seen.size()) >= budget)
                throw BudgetError("equivalence class budget exceeded");
            seen.insert(k);
            queue.push_back(std::move(nb));
        }
    }
    return false;
}

std::vector<EdgeSet> wflip_steps(const Graph& g) {
    std::vector<EdgeSet> out;
    EdgeSet loops = g.loops();
    EdgeSet core = g.edge_ids() - loops;
    std::vector<int> ids(core.begin(), core.end());
    int m = static_cast<int>(ids.size());
    if (m > 20) throw BudgetError("too many edges for flip enumeration");
    for (uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
        if (!(mask & 1u)) continue;  // one side of each split carries edge ids[0]
        std::vector<int> xs;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) xs.push_back(ids[static_cast<size_t>(i)]);
        EdgeSet x(std::move(xs));
        if (is_wflip_step(g, x)) out.push_back(x);
        EdgeSet other = core - x;
        if (is_wflip_step(g, other)) out.push_back(other);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<WSequence> find_wsequence_between(const Graph& g, const Graph& h, int budget) {
    if (g.edge_ids() != h.edge_ids()) throw InputError("graphs on different edge universes");
    if (g == h) return WSequence{};
    // BFS over exact labeled graphs: the target is structural equality, and
    // flips keep vertex ids so the state space is finite
    std::map<std::string, std::pair<std::string, EdgeSet>> parent;  // key -> (parent key, step)
    auto exact_key = [](const Graph& gr) {
        std::string s;
        for (const auto& [e, ep] : gr.edges())
            s += std::to_string(e) + ":" + std::to_string(ep.u) + "," + std::to_string(ep.v) + ";";
        return s;
    };
    std::string start = exact_key(g), goal = exact_key(h);
    std::map<std::string, Graph> frontier_graphs;
    parent[start] = {"", {}};
    frontier_graphs[start] = g;
    std::deque<std::string> queue{start};
    while (!queue.empty()) {
        std::string ck = queue.front();
        queue.pop_front();
        Graph cur = frontier_graphs.at(ck);
        frontier_graphs.erase(ck);
        for (const auto& x : wflip_steps(cur)) {
            Graph nb = whitney_flip(cur, x);
            std::string k = exact_key(nb);
            if (parent.count(k)) continue;
            parent[k] = {ck, x};
            if (k == goal) {
                WSequence seq;
                for (std::string at = k; at != start; at = parent[at].first)
                    seq.steps.push_back(parent[at].second);
                std::reverse(seq.steps.begin(), seq.steps.end());
                return seq;
            }
            if (static_cast<int>(parent.size()) >= budget)
                throw BudgetError("w-sequence search budget exceeded");
            frontier_graphs[k] = std::move(nb);
            queue.push_back(k);
        }
    }
    return std::nullopt;
}

}  // namespace ecm
