#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ics/subset.hpp"

namespace ics {

/// Immutable finite poset on elements 0..n-1.
///
/// Stores the cover relations (transitively reduced), the full order relation
/// as per-element up/down masks, optional element labels, and a rank function
/// when one exists (minimum rank 0, taken globally over the poset). All
/// queries are pure; a constructed Poset is safe for concurrent reads.
class Poset {
public:
    /// Builds a poset from explicit cover relations. Throws if the relation
    /// has a cycle or if a listed cover is implied by two others.
    static Poset from_covers(int n, std::vector<std::pair<int, int>> covers);

    /// Builds a poset from a full order relation given as adjacency rows
    /// (leq[a] contains b iff a <= b); covers are derived by transitive
    /// reduction. Rows must describe a reflexive partial order.
    static Poset from_leq(int n, const std::vector<std::vector<bool>>& leq);

    int size() const { return n_; }
    std::uint64_t id() const { return id_; }

    const std::vector<std::pair<int, int>>& covers() const { return covers_; }

    bool leq(int a, int b) const { return up_[static_cast<std::size_t>(a)].test(b); }
    bool less(int a, int b) const { return a != b && leq(a, b); }
    bool incomparable(int a, int b) const { return !leq(a, b) && !leq(b, a); }

    /// {y : x <= y}, including x.
    const Subset& up(int x) const { return up_[static_cast<std::size_t>(x)]; }
    /// {y : y <= x}, including x.
    const Subset& down(int x) const { return down_[static_cast<std::size_t>(x)]; }
    /// {y : y comparable to x}, including x.
    const Subset& comparables(int x) const { return comp_[static_cast<std::size_t>(x)]; }

    bool is_ranked() const { return ranked_; }
    int rank(int x) const;
    /// Largest rank value; only valid on ranked posets.
    int height() const;

    /// 1-based coordinate tuples for elements of chains, antichains and their
    /// products; empty for posets without a natural coordinate system.
    const std::vector<std::vector<int>>& coordinates() const { return coords_; }

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int x) const;
    /// Element with the given label, or -1.
    int find_label(const std::string& label) const;

    Subset empty_subset() const { return Subset(n_, id_); }
    Subset full_subset() const { return empty_subset().complement(); }
    Subset subset_of(std::initializer_list<int> xs) const;
    Subset subset_of(const std::vector<int>& xs) const;
    /// Reinterprets a same-size mask (typically from this poset's dual) as a
    /// subset of this poset.
    Subset adopt(const Subset& s) const;

    /// Smallest order ideal containing s (downward closure).
    Subset ideal_closure(const Subset& s) const;
    /// Smallest order filter containing s (upward closure).
    Subset filter_closure(const Subset& s) const;
    /// Elements of s with no smaller element in s; always an antichain.
    Subset minimal_of(const Subset& s) const;
    /// Elements of s with no larger element in s; always an antichain.
    Subset maximal_of(const Subset& s) const;
    bool is_antichain(const Subset& s) const;
    bool is_order_ideal(const Subset& s) const;

    Subset minimal_elements() const { return minimal_of(full_subset()); }
    Subset maximal_elements() const { return maximal_of(full_subset()); }

    /// Deterministic linear extension: repeatedly pick the smallest-index
    /// currently-minimal element.
    std::vector<int> linear_extension() const;
    /// A random linear extension driven by the supplied tie-breaking choice
    /// function choose(k) in [0,k).
    std::vector<int> linear_extension(const std::function<int(int)>& choose) const;
    bool is_linear_extension(const std::vector<int>& order) const;

    /// Same ground set, reversed order.
    Poset dual() const;

    /// Same element count and identical cover sets.
    friend bool structurally_equal(const Poset& a, const Poset& b);

    /// {"n":..,"covers":[[a,b],..],"labels":..?,"ranks":..?}
    std::string to_json() const;
    static Poset from_json(const std::string& text);
    /// Hasse diagram in Graphviz DOT, rank-layered when ranks exist.
    std::string to_dot() const;

    void require_subset(const Subset& s) const;

private:
    Poset() = default;
    void finalize(); // closure, ranks, id

    int n_ = 0;
    std::uint64_t id_ = 0;
    std::vector<std::pair<int, int>> covers_;
    std::vector<Subset> up_, down_, comp_;
    bool ranked_ = false;
    std::vector<int> ranks_;
    std::vector<std::string> labels_;
    std::vector<std::vector<int>> coords_;

    friend Poset chain(int);
    friend Poset antichain(int);
    friend Poset ordinal_sum(const std::vector<Poset>&);
    friend Poset disjoint_union(const std::vector<Poset>&);
    friend Poset product(const Poset&, const Poset&);
    friend Poset divisor_poset(long long);
};

/// Total order 0 < 1 < ... < n-1. Requires n >= 1.
Poset chain(int n);
/// n pairwise incomparable elements. Requires n >= 1.
Poset antichain(int n);
/// Every element of part i below every element of part j for i < j.
Poset ordinal_sum(const std::vector<Poset>& parts);
/// No cross-part relations.
Poset disjoint_union(const std::vector<Poset>& parts);
/// Componentwise order on pairs; labels are merged 1-based coordinate tuples.
Poset product(const Poset& p, const Poset& q);
/// Left fold of binary products.
Poset product(const std::vector<Poset>& factors);
/// Ordinal sum 1 (+) m (+) 1 (+) ... (+) m (+) 1 with n summands.
/// Requires n odd, n >= 3, m >= 2.
Poset stacked_diamond(int n, int m);
/// Product of chains [e_1+1] x ... x [e_k+1] from the prime factorization of
/// d, factors ordered by increasing exponent (ties by prime); elements are
/// labeled by the divisors themselves. Requires d >= 2.
Poset divisor_poset(long long d);
/// Ordinal sum of antichains with the given layer sizes.
Poset ordinal_sum_of_antichains(const std::vector<int>& layer_sizes);
/// Free-function spelling of Poset::dual.
inline Poset dual(const Poset& p) { return p.dual(); }

} // namespace ics
