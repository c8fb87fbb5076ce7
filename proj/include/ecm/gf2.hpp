#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ecm/graph.hpp"

namespace ecm {

/// Row-reduced basis of an edge-indexed GF(2) vector space. Rows are stored
/// as bitmasks over the ordered universe (capped at 64 edges, which is far
/// beyond desk scale). Reduced echelon form with a fixed edge ordering makes
/// equality a plain structural comparison.
class GF2Space {
public:
    GF2Space() = default;
    explicit GF2Space(EdgeSet universe) : universe_(std::move(universe)) { check_universe(); }

    static GF2Space span(const EdgeSet& universe, const std::vector<EdgeSet>& generators);

    const EdgeSet& universe() const { return universe_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    std::vector<EdgeSet> basis() const;

    bool contains(const EdgeSet& x) const;
    /// Canonical coset representative of x modulo this space.
    EdgeSet reduce(const EdgeSet& x) const;
    void insert(const EdgeSet& x);  // extends the span by x

    GF2Space orthogonal_complement() const;
    static GF2Space sum(const GF2Space& a, const GF2Space& b);
    bool subspace_of(const GF2Space& o) const;

    /// One representative per coset of this space inside the full space 2^universe.
    /// 2^(|U| − dim) sets; only for small codimension.
    std::vector<EdgeSet> coset_representatives() const;

    friend bool operator==(const GF2Space& a, const GF2Space& b) = default;

    uint64_t to_mask(const EdgeSet& x) const;
    EdgeSet from_mask(uint64_t m) const;
    const std::vector<uint64_t>& rows() const { return rows_; }

private:
    void check_universe() const;
    uint64_t reduce_mask(uint64_t m) const;
    void insert_mask(uint64_t m);

    EdgeSet universe_;
    std::vector<uint64_t> rows_;  // reduced echelon, sorted by pivot (lowest edge first)
};

GF2Space cycle_space(const Graph& g);
GF2Space cut_space(const Graph& g);
GF2Space even_cycle_space(const SignedGraph& sg);
GF2Space even_cut_space(const Graft& gr);

bool space_equals(const GF2Space& a, const GF2Space& b);

/// Indices of generators whose symmetric difference equals target, if any.
/// At most 64 generators (desk scale).
std::optional<std::vector<size_t>> express_in(const EdgeSet& universe,
                                              const std::vector<EdgeSet>& generators,
                                              const EdgeSet& target);

/// Σ is a cut of G, i.e. the signed graph has no odd cycle.
bool is_bipartite(const SignedGraph& sg);

/// Equivalent graphs have equal cycle spaces (Whitney); this is the
/// library-wide inequivalence test for graphs on a shared edge universe.
bool graphs_equivalent(const Graph& a, const Graph& b);

}  // namespace ecm
