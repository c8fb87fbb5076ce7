#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace ecm {

using EdgeId = int;
using VertexId = int;

/// Sorted, duplicate-free set of small integer ids. Used for both edge sets
/// (cycles, cuts, signatures, separations) and vertex sets (terminals, cut
/// shores). Cheap value type; all set algebra returns fresh sets.
class IdSet {
public:
    IdSet() = default;
    IdSet(std::initializer_list<int> xs) : v_(xs) { normalize(); }
    explicit IdSet(std::vector<int> xs) : v_(std::move(xs)) { normalize(); }

    static IdSet range(int n) {
        IdSet s;
        s.v_.resize(static_cast<size_t>(std::max(n, 0)));
        for (int i = 0; i < n; ++i) s.v_[static_cast<size_t>(i)] = i;
        return s;
    }

    bool contains(int x) const { return std::binary_search(v_.begin(), v_.end(), x); }
    bool empty() const { return v_.empty(); }
    int size() const { return static_cast<int>(v_.size()); }

    void insert(int x) {
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it == v_.end() || *it != x) v_.insert(it, x);
    }
    void erase(int x) {
        auto it = std::lower_bound(v_.begin(), v_.end(), x);
        if (it != v_.end() && *it == x) v_.erase(it);
    }

    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    const std::vector<int>& items() const { return v_; }
    int min() const { return v_.front(); }

    bool subset_of(const IdSet& o) const {
        return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
    }
    bool intersects(const IdSet& o) const {
        auto a = v_.begin();
        auto b = o.v_.begin();
        while (a != v_.end() && b != o.v_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    friend IdSet operator|(const IdSet& a, const IdSet& b) {
        IdSet r;
        std::set_union(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), std::back_inserter(r.v_));
        return r;
    }
    friend IdSet operator&(const IdSet& a, const IdSet& b) {
        IdSet r;
        std::set_intersection(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), std::back_inserter(r.v_));
        return r;
    }
    friend IdSet operator-(const IdSet& a, const IdSet& b) {
        IdSet r;
        std::set_difference(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(), std::back_inserter(r.v_));
        return r;
    }
    /// Symmetric difference; written ^ to match its role as GF(2) addition.
    friend IdSet operator^(const IdSet& a, const IdSet& b) {
        IdSet r;
        std::set_symmetric_difference(a.v_.begin(), a.v_.end(), b.v_.begin(), b.v_.end(),
                                      std::back_inserter(r.v_));
        return r;
    }

    friend bool operator==(const IdSet& a, const IdSet& b) = default;
    friend auto operator<=>(const IdSet& a, const IdSet& b) = default;

    friend std::ostream& operator<<(std::ostream& os, const IdSet& s) {
        os << '{';
        for (size_t i = 0; i < s.v_.size(); ++i) {
            if (i) os << ',';
            os << s.v_[i];
        }
        return os << '}';
    }

private:
    void normalize() {
        std::sort(v_.begin(), v_.end());
        v_.erase(std::unique(v_.begin(), v_.end()), v_.end());
    }
    std::vector<int> v_;
};

using EdgeSet = IdSet;
using VertexSet = IdSet;

}  // namespace ecm
