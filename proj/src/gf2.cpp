#include "ecm/gf2.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>

namespace ecm {

void GF2Space::check_universe() const {
    if (universe_.size() > 64) throw BudgetError("edge universe larger than 64");
}

uint64_t GF2Space::to_mask(const EdgeSet& x) const {
    uint64_t m = 0;
    const auto& u = universe_.items();
    for (EdgeId e : x) {
        auto it = std::lower_bound(u.begin(), u.end(), e);
        if (it == u.end() || *it != e) throw InputError("edge " + std::to_string(e) + " outside universe");
        m |= 1ull << (it - u.begin());
    }
    return m;
}

EdgeSet GF2Space::from_mask(uint64_t m) const {
    std::vector<int> v;
    const auto& u = universe_.items();
    while (m) {
        int i = std::countr_zero(m);
        v.push_back(u[static_cast<size_t>(i)]);
        m &= m - 1;
    }
    return EdgeSet(std::move(v));
}

uint64_t GF2Space::reduce_mask(uint64_t m) const {
    for (uint64_t r : rows_) {
        uint64_t pivot = r & ~(r - 1);  // lowest set bit
        if (m & pivot) m ^= r;
    }
    return m;
}

void GF2Space::insert_mask(uint64_t m) {
    m = reduce_mask(m);
    if (!m) return;
    uint64_t pivot = m & ~(m - 1);
    // back-substitute into existing rows, keep rows sorted by pivot
    for (uint64_t& r : rows_)
        if (r & pivot) r ^= m;
    rows_.push_back(m);
    std::sort(rows_.begin(), rows_.end(), [](uint64_t a, uint64_t b) {
        return (a & ~(a - 1)) < (b & ~(b - 1));
    });
}

GF2Space GF2Space::span(const EdgeSet& universe, const std::vector<EdgeSet>& generators) {
    GF2Space s(universe);
    for (const auto& g : generators) s.insert_mask(s.to_mask(g));
    return s;
}

std::vector<EdgeSet> GF2Space::basis() const {
    std::vector<EdgeSet> b;
    b.reserve(rows_.size());
    for (uint64_t r : rows_) b.push_back(from_mask(r));
    return b;
}

bool GF2Space::contains(const EdgeSet& x) const { return reduce_mask(to_mask(x)) == 0; }

EdgeSet GF2Space::reduce(const EdgeSet& x) const { return from_mask(reduce_mask(to_mask(x))); }

void GF2Space::insert(const EdgeSet& x) { insert_mask(to_mask(x)); }

GF2Space GF2Space::orthogonal_complement() const {
    // null space of the basis matrix: free columns parameterize solutions
    int n = universe_.size();
    GF2Space out(universe_);
    std::vector<int> pivot_col(rows_.size());
    uint64_t pivots = 0;
    for (size_t i = 0; i < rows_.size(); ++i) {
        pivot_col[i] = std::countr_zero(rows_[i] & ~(rows_[i] - 1));
        pivots |= 1ull << pivot_col[i];
    }
    for (int c = 0; c < n; ++c) {
        if (pivots & (1ull << c)) continue;
        uint64_t v = 1ull << c;
        for (size_t i = 0; i < rows_.size(); ++i)
            if (rows_[i] & (1ull << c)) v |= 1ull << pivot_col[i];
        out.insert_mask(v);
    }
    return out;
}

GF2Space GF2Space::sum(const GF2Space& a, const GF2Space& b) {
    if (a.universe_ != b.universe_) throw InputError("universe mismatch");
    GF2Space s = a;
    for (uint64_t r : b.rows_) s.insert_mask(r);
    return s;
}

bool GF2Space::subspace_of(const GF2Space& o) const {
    if (universe_ != o.universe_) throw InputError("universe mismatch");
    for (uint64_t r : rows_)
        if (o.reduce_mask(r) != 0) return false;
    return true;
}

std::vector<EdgeSet> GF2Space::coset_representatives() const {
    int n = universe_.size();
    uint64_t pivots = 0;
    for (uint64_t r : rows_) pivots |= r & ~(r - 1);
    std::vector<int> free_cols;
    for (int c = 0; c < n; ++c)
        if (!(pivots & (1ull << c))) free_cols.push_back(c);
    if (free_cols.size() > 26) throw BudgetError("too many cosets to enumerate");
    std::vector<EdgeSet> reps;
    reps.reserve(1ull << free_cols.size());
    for (uint64_t sel = 0; sel < (1ull << free_cols.size()); ++sel) {
        uint64_t m = 0;
        for (size_t i = 0; i < free_cols.size(); ++i)
            if (sel & (1ull << i)) m |= 1ull << free_cols[i];
        reps.push_back(from_mask(m));  // supported on free columns: already reduced
    }
    return reps;
}

GF2Space cycle_space(const Graph& g) {
    // fundamental cycles of a BFS forest; loops are independent cycles
    GF2Space out(g.edge_ids());
    std::map<VertexId, std::pair<EdgeId, VertexId>> tree_parent;  // v -> (edge, parent)
    std::map<VertexId, int> depth;
    std::vector<EdgeId> non_tree;
    {
        std::map<VertexId, std::vector<std::pair<EdgeId, VertexId>>> adj;
        for (const auto& [e, ep] : g.edges()) {
            if (ep.is_loop()) continue;
            adj[ep.u].push_back({e, ep.v});
            adj[ep.v].push_back({e, ep.u});
        }
        std::map<VertexId, bool> seen;
        for (VertexId start : g.vertices()) {
            if (seen[start]) continue;
            seen[start] = true;
            depth[start] = 0;
            std::vector<VertexId> queue{start};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                VertexId v = queue[qi];
                for (auto [e, w] : adj[v]) {
                    if (!seen[w]) {
                        seen[w] = true;
                        tree_parent[w] = {e, v};
                        depth[w] = depth[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
        std::map<EdgeId, bool> is_tree;
        for (auto& [v, pe] : tree_parent) is_tree[pe.first] = true;
        for (const auto& [e, ep] : g.edges()) {
            if (ep.is_loop()) {
                out.insert(EdgeSet{e});
            } else if (!is_tree[e]) {
                non_tree.push_back(e);
            }
        }
    }
    auto tree_path = [&](VertexId a, VertexId b) {
        EdgeSet p;
        VertexId x = a, y = b;
        while (depth[x] > depth[y]) {
            p.insert(tree_parent[x].first);
            x = tree_parent[x].second;
        }
        while (depth[y] > depth[x]) {
            p.insert(tree_parent[y].first);
            y = tree_parent[y].second;
        }
        while (x != y) {
            p.insert(tree_parent[x].first);
            p.insert(tree_parent[y].first);
            x = tree_parent[x].second;
            y = tree_parent[y].second;
        }
        return p;
    };
    for (EdgeId e : non_tree) {
        const auto& ep = g.endpoints(e);
        EdgeSet c = tree_path(ep.u, ep.v);
        c.insert(e);
        out.insert(c);
    }
    return out;
}

GF2Space cut_space(const Graph& g) {
    std::vector<EdgeSet> gens;
    for (VertexId v : g.vertices()) gens.push_back(g.star(v));
    return GF2Space::span(g.edge_ids(), gens);
}

GF2Space even_cycle_space(const SignedGraph& sg) {
    if (!sg.sigma.subset_of(sg.graph.edge_ids())) throw InputError("signature outside edge set");
    GF2Space cyc = cycle_space(sg.graph);
    // restrict a cycle basis: even generators stay, odd ones are paired with
    // one fixed odd generator
    std::vector<EdgeSet> evens;
    std::optional<EdgeSet> odd;
    for (const EdgeSet& c : cyc.basis()) {
        if ((c & sg.sigma).size() % 2 == 0) {
            evens.push_back(c);
        } else if (!odd) {
            odd = c;
        } else {
            evens.push_back(c ^ *odd);
        }
    }
    return GF2Space::span(sg.graph.edge_ids(), evens);
}

GF2Space even_cut_space(const Graft& gr) {
    if (gr.terminals.size() % 2 != 0) throw InputError("odd terminal set");
    std::vector<EdgeSet> gens;
    const auto& t = gr.terminals;
    for (VertexId v : gr.graph.vertices())
        if (!t.contains(v)) gens.push_back(gr.graph.star(v));
    if (!t.empty()) {
        VertexId t0 = t.min();
        for (VertexId v : t)
            if (v != t0) gens.push_back(gr.graph.star(v) ^ gr.graph.star(t0));
    }
    return GF2Space::span(gr.graph.edge_ids(), gens);
}

bool space_equals(const GF2Space& a, const GF2Space& b) {
    if (a.universe() != b.universe()) throw InputError("universe mismatch");
    return a == b;
}

bool is_bipartite(const SignedGraph& sg) { return cut_space(sg.graph).contains(sg.sigma); }

std::optional<std::vector<size_t>> express_in(const EdgeSet& universe,
                                              const std::vector<EdgeSet>& generators,
                                              const EdgeSet& target) {
    if (generators.size() > 64) throw BudgetError("too many generators for express_in");
    GF2Space base(universe);
    // augmented rows: (value mask, generator-combination mask), ascending pivots
    std::vector<std::pair<uint64_t, uint64_t>> rows;
    auto reduce = [&](std::pair<uint64_t, uint64_t> r) {
        for (const auto& [val, tag] : rows) {
            uint64_t pivot = val & ~(val - 1);
            if (r.first & pivot) {
                r.first ^= val;
                r.second ^= tag;
            }
        }
        return r;
    };
    for (size_t i = 0; i < generators.size(); ++i) {
        auto r = reduce({base.to_mask(generators[i]), 1ull << i});
        if (!r.first) continue;
        auto pivot_of = [](uint64_t v) { return v & ~(v - 1); };
        auto pos = std::lower_bound(rows.begin(), rows.end(), r, [&](const auto& a, const auto& b) {
            return pivot_of(a.first) < pivot_of(b.first);
        });
        rows.insert(pos, r);
    }
    auto t = reduce({base.to_mask(target), 0});
    if (t.first) return std::nullopt;
    std::vector<size_t> combo;
    for (size_t i = 0; i < generators.size(); ++i)
        if (t.second & (1ull << i)) combo.push_back(i);
    return combo;
}

bool graphs_equivalent(const Graph& a, const Graph& b) {
    if (a.edge_ids() != b.edge_ids()) throw InputError("graphs on different edge universes");
    return space_equals(cycle_space(a), cycle_space(b));
}

}  // namespace ecm
