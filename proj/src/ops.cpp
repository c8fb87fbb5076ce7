#include "ecm/ops.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "ecm/gf2.hpp"

namespace ecm {

Graph whitney_flip(const Graph& g, const EdgeSet& x) {
    VertexSet b = boundary(g, x);
    if (b.size() != 2)
        throw InputError("whitney_flip: boundary has size " + std::to_string(b.size()) + ", need 2");
    VertexId u1 = *b.begin(), u2 = *std::next(b.begin());
    Graph out = g;
    for (EdgeId e : x) {
        const auto& ep = g.endpoints(e);
        auto swap_end = [&](VertexId w) { return w == u1 ? u2 : (w == u2 ? u1 : w); };
        out.remove_edge(e);
        out.add_edge(e, swap_end(ep.u), swap_end(ep.v));
    }
    return out;
}

Graph whitney_glue(const Graph& g, VertexId v1, VertexId v2) {
    g.check_vertices(VertexSet{v1, v2});
    for (const auto& comp : component_vertex_sets(g))
        if (comp.contains(v1) && comp.contains(v2))
            throw InputError("whitney_glue: vertices in the same component");
    Graph out;
    for (VertexId v : g.vertices())
        if (v != v2) out.add_vertex(v);
    for (const auto& [e, ep] : g.edges()) {
        VertexId u = ep.u == v2 ? v1 : ep.u;
        VertexId w = ep.v == v2 ? v1 : ep.v;
        out.add_edge(e, u, w);
    }
    return out;
}

Graph whitney_split_blocks(const Graph& g) {
    auto blocks = components_and_blocks(g).all_blocks();
    std::sort(blocks.begin(), blocks.end());
    VertexId next = g.vertices().empty() ? 0 : g.fresh_vertex();
    std::map<VertexId, bool> claimed;
    Graph out;
    for (VertexId v : g.vertices()) out.add_vertex(v);  // isolated vertices persist
    for (const auto& b : blocks) {
        std::map<VertexId, VertexId> remap;
        for (VertexId v : g.vertices_of(b)) {
            if (!claimed[v]) {
                claimed[v] = true;
                remap[v] = v;
            } else {
                remap[v] = next++;
            }
        }
        for (EdgeId e : b) {
            const auto& ep = g.endpoints(e);
            out.add_edge(e, remap[ep.u], remap[ep.v]);
        }
    }
    return out;
}

bool wsequence_valid(const Graph& g, const WSequence& s) {
    Graph cur = g;
    for (const auto& x : s.steps) {
        if (!is_wflip_step(cur, x)) return false;
        cur = whitney_flip(cur, x);
    }
    return true;
}

Graph apply_wsequence(const Graph& g, const WSequence& s) {
    Graph cur = g;
    for (size_t i = 0; i < s.steps.size(); ++i) {
        if (!is_wflip_step(cur, s.steps[i]))
            throw InputError("w-sequence step " + std::to_string(i) + " is not a 2-separation");
        cur = whitney_flip(cur, s.steps[i]);
    }
    return cur;
}

bool sets_cross(const EdgeSet& universe, const EdgeSet& x, const EdgeSet& y) {
    return !(x & y).empty() && !(x - y).empty() && !(y - x).empty() &&
           !((universe - x) & (universe - y)).empty();
}

bool wsequence_noncrossing(const Graph& g, const WSequence& s) {
    EdgeSet uni = g.edge_ids();
    for (size_t i = 0; i < s.steps.size(); ++i)
        for (size_t j = i + 1; j < s.steps.size(); ++j)
            if (sets_cross(uni, s.steps[i], s.steps[j])) return false;
    return true;
}

SignedGraph resign(const SignedGraph& sg, const VertexSet& u) {
    return SignedGraph(sg.graph, sg.sigma ^ cut(sg.graph, u));
}

SignedGraph lovasz_flip(const SignedGraph& sg, VertexId v1, VertexId v2) {
    const Graph& g = sg.graph;
    g.check_vertices(VertexSet{v1, v2});
    if (v1 == v2) throw InputError("lovasz_flip: vertices must be distinct");
    EdgeSet allowed = g.star(v1) | g.star(v2) | g.loops();
    if (!sg.sigma.subset_of(allowed))
        throw InputError("lovasz_flip: signature not within delta(v1) + delta(v2) + loops");
    Graph out = g;
    for (EdgeId e : sg.sigma) {
        const auto& ep = g.endpoints(e);
        out.remove_edge(e);
        if (ep.is_loop()) {
            out.add_edge(e, v1, v2);
        } else if (ep.touches(v1) && ep.touches(v2)) {
            out.add_edge(e, v1, v1);  // loop position is immaterial; v1 by convention
        } else if (ep.touches(v1)) {
            out.add_edge(e, v2, ep.other(v1));
        } else {
            out.add_edge(e, v1, ep.other(v2));
        }
    }
    return SignedGraph(std::move(out), sg.sigma);
}

SplitResult split_vertex(const Graph& g, VertexId v, const EdgeSet& alpha,
                         std::optional<VertexId> v1_opt, std::optional<VertexId> v2_opt) {
    g.check_vertices(VertexSet{v});
    g.check_edges(alpha);
    EdgeSet allowed = g.star(v) | g.loops();
    if (!alpha.subset_of(allowed)) throw InputError("split: alpha not within delta(v) + loops");
    VertexId v1 = v1_opt.value_or(g.fresh_vertex());
    VertexId v2 = v2_opt.value_or(v1 + 1);
    if (g.has_vertex(v1) || g.has_vertex(v2) || v1 == v2)
        throw InputError("split: replacement vertex ids collide");
    Graph out;
    for (VertexId w : g.vertices())
        if (w != v) out.add_vertex(w);
    out.add_vertex(v1);
    out.add_vertex(v2);
    for (const auto& [e, ep] : g.edges()) {
        if (ep.is_loop()) {
            if (alpha.contains(e))
                out.add_edge(e, v1, v2);
            else if (ep.u == v)
                out.add_edge(e, v2, v2);  // loop at the split vertex follows the rest
            else
                out.add_edge(e, ep.u, ep.v);
        } else if (ep.touches(v)) {
            out.add_edge(e, alpha.contains(e) ? v1 : v2, ep.other(v));
        } else {
            out.add_edge(e, ep.u, ep.v);
        }
    }
    return SplitResult{std::move(out), v1, v2};
}

std::pair<EdgeSet, EdgeSet> default_alpha_beta(const SignedGraph& sg, VertexId s, VertexId t) {
    const Graph& g = sg.graph;
    EdgeSet alpha = sg.sigma & (g.star(s) | g.loops());
    EdgeSet beta = sg.sigma - alpha;
    if (!beta.subset_of(g.star(t) | g.loops()))
        throw InputError("signature not within delta(s) + delta(t) + loops");
    return {alpha, beta};
}

UnfoldResult unfold(const SignedGraph& sg, VertexId s, VertexId t, const EdgeSet& alpha,
                    const EdgeSet& beta) {
    const Graph& g = sg.graph;
    g.check_vertices(VertexSet{s, t});
    if (s == t) throw InputError("unfold: s and t must be distinct");
    if ((alpha ^ beta) != sg.sigma) throw InputError("unfold: alpha delta beta != signature");
    if (!alpha.subset_of(g.star(s) | g.loops()))
        throw InputError("unfold: alpha not within delta(s) + loops");
    if (!beta.subset_of(g.star(t) | g.loops()))
        throw InputError("unfold: beta not within delta(t) + loops");
    if (!(alpha & beta & g.loops()).empty())
        throw InputError("unfold: alpha and beta may not share loops");
    auto s_split = split_vertex(g, s, alpha);
    auto t_split = split_vertex(s_split.graph, t, beta);
    VertexSet terms{s_split.v1, s_split.v2, t_split.v1, t_split.v2};
    return UnfoldResult{Graft(t_split.graph, terms), s_split.v1, s_split.v2, t_split.v1,
                        t_split.v2};
}

FoldResult fold(const Graft& gr, std::pair<VertexId, VertexId> s_pair,
                std::pair<VertexId, VertexId> t_pair) {
    VertexSet named{s_pair.first, s_pair.second, t_pair.first, t_pair.second};
    if (named.size() != 4 || gr.terminals != named)
        throw InputError("fold: pairing must partition the four terminals");
    const Graph& g = gr.graph;
    EdgeSet sigma = g.star(s_pair.first) ^ g.star(t_pair.first);
    Graph merged;
    for (VertexId v : g.vertices())
        if (v != s_pair.second && v != t_pair.second) merged.add_vertex(v);
    auto remap = [&](VertexId v) {
        if (v == s_pair.second) return s_pair.first;
        if (v == t_pair.second) return t_pair.first;
        return v;
    };
    for (const auto& [e, ep] : g.edges()) merged.add_edge(e, remap(ep.u), remap(ep.v));
    return FoldResult{SignedGraph(std::move(merged), std::move(sigma)), s_pair.first,
                      t_pair.first};
}

GraftSumResult graft_sum(const Graft& a, const Graft& b, bool flipped) {
    if (a.terminals.size() != 2 || b.terminals.size() != 2)
        throw InputError("graft_sum: both grafts must have exactly two terminals");
    if (a.graph.edge_ids().intersects(b.graph.edge_ids()))
        throw InputError("graft_sum: edge id universes must be disjoint");
    VertexId am = a.terminals.min(), ap = *std::next(a.terminals.begin());
    VertexId bm = b.terminals.min(), bp = *std::next(b.terminals.begin());
    if (flipped) std::swap(bm, bp);
    VertexId next = std::max(a.graph.fresh_vertex(), b.graph.fresh_vertex());
    std::map<VertexId, VertexId> remap;
    for (VertexId v : b.graph.vertices()) remap[v] = a.graph.has_vertex(v) ? next++ : v;
    remap[bm] = am;
    remap[bp] = ap;
    Graph out = a.graph;
    for (VertexId v : b.graph.vertices()) out.add_vertex(remap[v]);
    for (const auto& [e, ep] : b.graph.edges()) out.add_edge(e, remap[ep.u], remap[ep.v]);
    return GraftSumResult{Graft(std::move(out), VertexSet{am, ap}), am, ap};
}

namespace {

// resign sg so the signature avoids the given edges; nullopt if impossible
std::optional<SignedGraph> resign_to_avoid(const SignedGraph& sg, const EdgeSet& avoid) {
    EdgeSet target = sg.sigma & avoid;
    std::vector<VertexId> vs(sg.graph.vertices().begin(), sg.graph.vertices().end());
    std::vector<EdgeSet> gens;
    for (VertexId v : vs) gens.push_back(sg.graph.star(v) & avoid);
    auto combo = express_in(avoid, gens, target);
    if (!combo) return std::nullopt;
    std::vector<int> us;
    for (size_t i : *combo) us.push_back(vs[i]);
    SignedGraph out = resign(sg, VertexSet(std::move(us)));
    if (!(out.sigma & avoid).empty()) return std::nullopt;
    return out;
}

struct TriangleShape {
    VertexId v12, v13, v23;
};

TriangleShape triangle_shape(const Graph& g, const std::array<EdgeId, 3>& tri) {
    auto e1 = g.endpoints(tri[0]);
    auto e2 = g.endpoints(tri[1]);
    auto e3 = g.endpoints(tri[2]);
    if (e1.is_loop() || e2.is_loop() || e3.is_loop())
        throw InputError("triangle edges must not be loops");
    VertexSet verts{e1.u, e1.v, e2.u, e2.v, e3.u, e3.v};
    if (verts.size() != 3) throw InputError("edges do not form a triangle on three vertices");
    auto shared = [&](const Endpoints& a, const Endpoints& b) -> VertexId {
        if (b.touches(a.u) && !b.touches(a.v)) return a.u;
        if (b.touches(a.v) && !b.touches(a.u)) return a.v;
        throw InputError("degenerate triangle (parallel edges)");
    };
    TriangleShape t{shared(e1, e2), shared(e1, e3), shared(e2, e3)};
    if (t.v12 == t.v13 || t.v12 == t.v23 || t.v13 == t.v23)
        throw InputError("degenerate triangle (parallel edges)");
    return t;
}

}  // namespace

DeltaSubstitution delta_substitute(const SiblingSignedPair& pair,
                                   const std::array<EdgeId, 3>& triangle, const Graph& h,
                                   const std::array<VertexId, 3>& attach) {
    EdgeSet tri{triangle[0], triangle[1], triangle[2]};
    if (tri.size() != 3) throw InputError("triangle needs three distinct edges");
    VertexSet attach_set{attach[0], attach[1], attach[2]};
    if (attach_set.size() != 3) throw InputError("attach map must name three distinct vertices");
    h.check_vertices(attach_set);

    DeltaSubstitution out;
    std::array<const SignedGraph*, 2> in{&pair.first, &pair.second};
    std::array<SignedGraph, 2> result;
    std::array<VertexSet, 2> attach_images;
    for (int i = 0; i < 2; ++i) {
        auto resigned = resign_to_avoid(*in[i], tri);
        if (!resigned) throw InputError("triangle cannot be made even by resigning");
        TriangleShape shape = triangle_shape(resigned->graph, triangle);
        Graph g = resigned->graph;
        EdgeSet rest = g.edge_ids() - tri;
        if (rest.intersects(h.edge_ids()))
            throw InputError("substitute graph reuses edge ids of the host");
        for (EdgeId e : tri) g.remove_edge(e);
        // the three named vertices of h land on the triangle corners, every
        // other vertex of h gets a fresh id
        std::map<VertexId, VertexId> vmap;
        vmap[attach[0]] = shape.v12;
        vmap[attach[1]] = shape.v13;
        vmap[attach[2]] = shape.v23;
        VertexId next = std::max(g.fresh_vertex(), h.fresh_vertex());
        for (VertexId v : h.vertices())
            if (!vmap.count(v)) vmap[v] = next++;
        for (VertexId v : h.vertices()) g.add_vertex(vmap[v]);
        for (const auto& [e, ep] : h.edges()) g.add_edge(e, vmap[ep.u], vmap[ep.v]);
        result[i] = SignedGraph(std::move(g), resigned->sigma);
        attach_images[i] = VertexSet{shape.v12, shape.v13, shape.v23};
    }
    out.pair = SiblingSignedPair{std::move(result[0]), std::move(result[1])};
    out.attach_first = attach_images[0];
    out.attach_second = attach_images[1];
    return out;
}

DeltaReduction delta_reduce(const SiblingSignedPair& pair, const EdgeSet& y) {
    const Graph& g1 = pair.first.graph;
    const Graph& g2 = pair.second.graph;
    g1.check_edges(y);
    g2.check_edges(y);
    for (EdgeId e : y)
        if (!(g1.endpoints(e) == g2.endpoints(e)))
            throw InputError("piece is not a common labeled subgraph");
    VertexSet b1 = boundary(g1, y), b2 = boundary(g2, y);
    if (b1.size() != 3 || b1 != b2) throw InputError("piece must have a common 3-vertex boundary");
    auto r1 = resign_to_avoid(pair.first, y);
    auto r2 = resign_to_avoid(pair.second, y);
    if (!r1 || !r2) throw InputError("piece cannot be made even by resigning");

    std::vector<VertexId> bs(b1.begin(), b1.end());
    std::array<std::pair<VertexId, VertexId>, 3> corners{
        std::pair{bs[0], bs[1]}, std::pair{bs[0], bs[2]}, std::pair{bs[1], bs[2]}};
    // an even edge between two boundary vertices outside y blocks that
    // triangle edge (it would become a same-parity parallel pair)
    auto blocked = [&](const SignedGraph& sg, VertexId a, VertexId b) {
        for (const auto& [e, ep] : sg.graph.edges()) {
            if (y.contains(e) || ep.is_loop()) continue;
            if (ep.touches(a) && ep.touches(b) && !sg.sigma.contains(e)) return true;
        }
        return false;
    };
    EdgeId next = std::max(g1.fresh_edge(), g2.fresh_edge());
    std::array<SignedGraph, 2> result{*r1, *r2};
    std::array<EdgeId, 3> ids{};
    std::array<bool, 3> use{};
    for (int c = 0; c < 3; ++c) {
        ids[c] = next + c;
        use[c] = !blocked(*r1, corners[c].first, corners[c].second) &&
                 !blocked(*r2, corners[c].first, corners[c].second);
    }
    for (int i = 0; i < 2; ++i) {
        Graph g = result[i].graph;
        VertexSet inner = interior(g, y);
        for (EdgeId e : y) g.remove_edge(e);
        for (VertexId v : inner) g.remove_vertex_if_isolated(v);
        for (int c = 0; c < 3; ++c)
            if (use[c]) g.add_edge(ids[c], corners[c].first, corners[c].second);
        result[i] = SignedGraph(std::move(g), result[i].sigma - y);
    }
    EdgeSet created, omitted;
    for (int c = 0; c < 3; ++c)
        (use[c] ? created : omitted).insert(ids[c]);
    return DeltaReduction{SiblingSignedPair{std::move(result[0]), std::move(result[1])}, created,
                          omitted};
}

}  // namespace ecm
