#include "ecm/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <map>

#include "ecm/equiv.hpp"
#include "ecm/ops.hpp"

namespace ecm {

Limits Limits::from_env() {
    Limits lim;
    if (const char* s = std::getenv("ECM_MAX_EXHAUSTIVE_EDGES")) lim.max_exhaustive_edges = std::atoi(s);
    if (const char* s = std::getenv("ECM_CLASS_BUDGET")) lim.class_budget = std::atoi(s);
    if (const char* s = std::getenv("ECM_NOVA_SUBSET_CAP")) lim.nova_subset_cap = std::atoi(s);
    return lim;
}

namespace {

int component_count(const Graph& g, const EdgeSet& x) {
    std::map<VertexId, VertexId> parent;
    std::function<VertexId(VertexId)> find = [&](VertexId v) {
        if (!parent.count(v)) return parent[v] = v;
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (EdgeId e : x) {
        const auto& ep = g.endpoints(e);
        parent[find(ep.u)] = find(ep.v);
    }
    int c = 0;
    for (auto& [v, p] : parent)
        if (find(v) == v) ++c;
    return c;
}

bool restriction_nonbipartite(const SignedGraph& sg, const EdgeSet& x) {
    Graph sub = subgraph(sg.graph, x);
    return !cut_space(sub).contains(sg.sigma & x);
}

}  // namespace

int rank_even_cycle(const SignedGraph& sg, const EdgeSet& x) {
    sg.graph.check_edges(x);
    if (x.empty()) return 0;
    int nv = sg.graph.vertices_of(x).size();
    int comps = component_count(sg.graph, x);
    return nv - comps + (restriction_nonbipartite(sg, x) ? 1 : 0);
}

int lambda_even_cycle(const SignedGraph& sg, const EdgeSet& x) {
    EdgeSet all = sg.graph.edge_ids();
    if (x.empty() || x == all) throw InputError("lambda needs a proper nonempty side");
    return rank_even_cycle(sg, x) + rank_even_cycle(sg, all - x) - rank_even_cycle(sg, all) + 1;
}

std::vector<SeparationReport> classify_separations(const SignedGraph& sg, int max_k) {
    std::vector<SeparationReport> out;
    for (int k = 1; k <= max_k; ++k) {
        for (const auto& x : enumerate_k_separations(sg.graph, k)) {
            SeparationReport r;
            r.x = x;
            r.k = k;
            r.i = restriction_nonbipartite(sg, x) ? 1 : 0;
            r.j = restriction_nonbipartite(sg, sg.graph.edge_ids() - x) ? 1 : 0;
            r.lambda = lambda_even_cycle(sg, x);
            out.push_back(std::move(r));
        }
    }
    return out;
}

bool is_3connected_even_cycle(const SignedGraph& sg, const Limits& lim) {
    EdgeSet all = sg.graph.edge_ids();
    int m = all.size();
    if (m > lim.max_exhaustive_edges)
        throw BudgetError("instance too large for exhaustive connectivity scan");
    std::vector<EdgeId> ids(all.begin(), all.end());
    for (uint32_t mask = 1; m > 1 && mask < (1u << (m - 1)); ++mask) {
        std::vector<int> xs{ids[static_cast<size_t>(m - 1)]};  // fix one edge on one side
        for (int i = 0; i + 1 < m; ++i)
            if (mask & (1u << i)) xs.push_back(ids[static_cast<size_t>(i)]);
        EdgeSet x(std::move(xs));
        EdgeSet xbar = all - x;
        int small = std::min(x.size(), xbar.size());
        if (small < 1) continue;
        int lambda = lambda_even_cycle(sg, x);
        for (int k = 1; k <= 2; ++k)
            if (small >= k && lambda == k) return false;
    }
    return true;
}

N3CReport check_n3c_conditions(const SignedGraph& sg, const Limits& lim) {
    if (!is_3connected_even_cycle(sg, lim))
        throw InputError("even cycle matroid is not 3-connected");
    N3CReport rep;
    EdgeSet loops = sg.graph.loops();
    rep.loops_ok = loops.size() <= 1 && loops.subset_of(sg.sigma);
    Graph core;
    for (const auto& [e, ep] : sg.graph.edges())
        if (!ep.is_loop()) core.add_edge(e, ep.u, ep.v);
    rep.two_connected_sans_loops = graph_k_connected(core, 2);
    rep.seps_nonbipartite = true;
    for (const auto& x : enumerate_k_separations(sg.graph, 2)) {
        if (!restriction_nonbipartite(sg, x) ||
            !restriction_nonbipartite(sg, sg.graph.edge_ids() - x))
            rep.seps_nonbipartite = false;
    }
    return rep;
}

std::optional<EdgeSet> signature_within(const SignedGraph& sg, const EdgeSet& support) {
    // sigma Δ (cut) ⊆ support for some cut, i.e. sigma lies in the span of
    // vertex stars plus the unit vectors inside the support
    EdgeSet universe = sg.graph.edge_ids();
    std::vector<EdgeSet> gens;
    std::vector<char> is_unit;
    for (VertexId v : sg.graph.vertices()) {
        gens.push_back(sg.graph.star(v));
        is_unit.push_back(0);
    }
    for (EdgeId e : support & universe) {
        gens.push_back(EdgeSet{e});
        is_unit.push_back(1);
    }
    auto combo = express_in(universe, gens, sg.sigma);
    if (!combo) return std::nullopt;
    EdgeSet result;
    for (size_t i : *combo)
        if (is_unit[i]) result = result ^ gens[i];
    return result;  // the unit part is the resigned signature
}

std::optional<VertexId> blocking_vertex(const SignedGraph& sg) {
    for (VertexId s : sg.graph.vertices())
        if (signature_within(sg, sg.graph.star(s) | sg.graph.loops())) return s;
    return std::nullopt;
}

std::optional<std::pair<VertexId, VertexId>> blocking_pair(const SignedGraph& sg) {
    std::vector<VertexId> vs(sg.graph.vertices().begin(), sg.graph.vertices().end());
    for (size_t a = 0; a < vs.size(); ++a)
        for (size_t b = a + 1; b < vs.size(); ++b) {
            EdgeSet support =
                sg.graph.star(vs[a]) | sg.graph.star(vs[b]) | sg.graph.loops();
            if (signature_within(sg, support)) return std::make_pair(vs[a], vs[b]);
        }
    return std::nullopt;
}

EdgeSet find_t_join(const Graft& gr) {
    const Graph& g = gr.graph;
    std::map<VertexId, std::vector<std::pair<VertexId, EdgeId>>> adj;
    for (const auto& [e, ep] : g.edges()) {
        if (ep.is_loop()) continue;
        adj[ep.u].push_back({ep.v, e});
        adj[ep.v].push_back({ep.u, e});
    }
    for (auto& [v, nbrs] : adj) std::sort(nbrs.begin(), nbrs.end());
    auto shortest_path = [&](VertexId from, VertexId to) -> std::optional<EdgeSet> {
        std::map<VertexId, std::pair<VertexId, EdgeId>> pred;
        std::deque<VertexId> queue{from};
        pred[from] = {from, -1};
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            if (v == to) {
                EdgeSet p;
                for (VertexId at = to; at != from; at = pred[at].first) p.insert(pred[at].second);
                return p;
            }
            for (auto [w, e] : adj[v])
                if (!pred.count(w)) {
                    pred[w] = {v, e};
                    queue.push_back(w);
                }
        }
        return std::nullopt;
    };
    EdgeSet join;
    std::vector<VertexId> ts(gr.terminals.begin(), gr.terminals.end());
    // pair terminals component by component, in sorted order
    for (const auto& comp : component_vertex_sets(g)) {
        std::vector<VertexId> here;
        for (VertexId t : ts)
            if (comp.contains(t)) here.push_back(t);
        if (here.size() % 2 != 0)
            throw InputError("component with an odd number of terminals");
        for (size_t i = 0; i + 1 < here.size(); i += 2) {
            auto p = shortest_path(here[i], here[i + 1]);
            if (!p) throw InputError("terminals not connected");  // unreachable given components
            join = join ^ *p;
        }
    }
    return join;
}

bool is_ec_standard(const SignedGraph& sg, const Limits& lim) {
    if (!is_3connected_even_cycle(sg, lim)) return false;
    for (const Graph& g2 : whitney_class(sg.graph, lim.class_budget))
        if (blocking_vertex(SignedGraph(g2, sg.sigma))) return false;
    return true;
}

namespace {

// a vertex set U with delta(U) equal to the given cut and s1 outside U
VertexSet solve_cut_shore(const Graph& h, const EdgeSet& cutset, VertexId s1) {
    std::vector<VertexId> vs(h.vertices().begin(), h.vertices().end());
    std::vector<EdgeSet> stars;
    stars.reserve(vs.size());
    for (VertexId v : vs) stars.push_back(h.star(v));
    auto combo = express_in(h.edge_ids(), stars, cutset);
    if (!combo) throw InputError("edge set is not a cut");
    VertexSet u;
    for (size_t i : *combo) u.insert(vs[static_cast<size_t>(i)]);
    if (cut(h, u) != cutset) throw InputError("edge set is not a cut");
    for (const auto& comp : component_vertex_sets(h))
        if (comp.contains(s1) && u.contains(s1)) u = u ^ comp;
    return u;
}

}  // namespace

ConfiningSet2 find_confining_set_2(const Graph& h, VertexId s1, VertexId s2, const EdgeSet& phi1,
                                   const EdgeSet& phi2) {
    h.check_vertices(VertexSet{s1, s2});
    if (s1 == s2) throw InputError("s1 and s2 must be distinct");
    if (!phi1.subset_of(h.star(s1)) || !phi2.subset_of(h.star(s2)))
        throw InputError("phi_i must lie in delta(s_i)");
    EdgeSet diff = phi1 ^ phi2;
    if (diff.empty()) throw InputError("phi1 Δ phi2 must be a nonempty cut");
    if (diff == h.star(s2)) throw InputError("phi1 Δ phi2 equals delta(s2)");
    VertexSet u = solve_cut_shore(h, diff, s1);
    ConfiningSet2 out;
    VertexSet w = u;
    if (u.contains(s2)) {
        out.phi2_hat = phi2 ^ h.star(s2);
        w.erase(s2);
    } else {
        out.phi2_hat = phi2;
    }
    EdgeSet y;
    for (const auto& [e, ep] : h.edges())
        if (w.contains(ep.u) || w.contains(ep.v)) y.insert(e);
    out.y = y;
    return out;
}

ConfiningSet3 find_confining_set_3(const Graph& h, VertexId s1, VertexId s2, VertexId s3,
                                   const EdgeSet& phi1, const EdgeSet& phi2, const EdgeSet& phi3) {
    h.check_vertices(VertexSet{s1, s2, s3});
    if (VertexSet{s1, s2, s3}.size() != 3) throw InputError("s1, s2, s3 must be distinct");
    if (!phi1.subset_of(h.star(s1)) || !phi2.subset_of(h.star(s2)) || !phi3.subset_of(h.star(s3)))
        throw InputError("phi_i must lie in delta(s_i)");
    EdgeSet diff = phi1 ^ phi2 ^ phi3;
    if (diff.empty()) throw InputError("phi1 Δ phi2 Δ phi3 must be a nonempty cut");
    if (diff == h.star(s2) || diff == h.star(s3) || diff == (h.star(s2) ^ h.star(s3)))
        throw InputError("cut coincides with an excluded star combination");
    VertexSet u = solve_cut_shore(h, diff, s1);
    ConfiningSet3 out;
    VertexSet w = u;
    if (u.contains(s2)) {
        out.phi2_hat = phi2 ^ h.star(s2);
        w.erase(s2);
    } else {
        out.phi2_hat = phi2;
    }
    if (u.contains(s3)) {
        out.phi3_hat = phi3 ^ h.star(s3);
        w.erase(s3);
    } else {
        out.phi3_hat = phi3;
    }
    EdgeSet y;
    for (const auto& [e, ep] : h.edges())
        if (w.contains(ep.u) || w.contains(ep.v)) y.insert(e);
    out.y = y;
    return out;
}

}  // namespace ecm
