#pragma once

#include <vector>

#include "ics/poset.hpp"
#include "ics/subset.hpp"

namespace ics {

/// True iff for all x,y in s with x <= y, every z with x <= z <= y is in s.
/// Computed as (Δ(s) ∩ ∇(s)) ⊆ s.
bool is_interval_closed(const Poset& p, const Subset& s);

/// A Subset validated against the interval-closed condition at construction.
class IntervalClosedSet {
public:
    IntervalClosedSet(const Poset& p, Subset s);

    const Subset& set() const { return s_; }
    operator const Subset&() const { return s_; }

private:
    Subset s_;
};

/// The pair (Max(I), Floor(I)) identifying an interval-closed set:
/// max_part and floor_part are disjoint antichains with floor_part contained
/// in the order ideal of max_part.
struct AntichainPair {
    Subset max_part;
    Subset floor_part;
};

/// (Max(I), Floor(I)) where Floor(I) = Max(Δ(I) − I).
AntichainPair to_antichain_pair(const Poset& p, const Subset& ics);

/// Δ(max_part) − Δ(floor_part). Throws std::invalid_argument naming the
/// violated condition when the pair invariants fail.
Subset from_antichain_pair(const Poset& p, const AntichainPair& pair);

/// The decomposition of the poset induced by an interval-closed set I.
struct Regions {
    Subset inc;                // elements incomparable to I
    Subset comp;               // complement of inc
    Subset ceiling;            // Min(∇(I) − I)
    Subset min_under_ceiling;  // Min(I) ∩ Δ(ceiling)
    Subset floor;              // Max(Δ(I) − I)
};

Regions regions(const Poset& p, const Subset& ics);

/// All interval-closed sets, each exactly once.
///
/// Generated from antichain pairs rather than by filtering all subsets, so
/// the cost scales with the answer. With canonical=true (the default) the
/// result is sorted by ascending mask value; otherwise it is in generation
/// order, which is only deterministic for jobs=1 so generation order forces
/// sequential execution. jobs>1 partitions the antichain search roots across
/// threads.
std::vector<Subset> enumerate_ics(const Poset& p, int jobs = 1,
                                  bool canonical = true);

/// All order ideals, sorted by ascending mask value.
std::vector<Subset> enumerate_order_ideals(const Poset& p);

/// All antichains contained in pool, empty included, via f(const Subset&).
/// Exposed for reuse by the enumeration and toggle-algebra tests.
template <class F>
void for_each_antichain_in(const Poset& p, const Subset& pool, F&& f);

namespace detail {

inline Subset indices_above(const Poset& p, int x) {
    Subset s = p.empty_subset();
    for (int i = x + 1; i < p.size(); ++i) s.set(i);
    return s;
}

template <class F>
void extend_antichain(const Poset& p, Subset& cur, const Subset& avail, F& f) {
    f(static_cast<const Subset&>(cur));
    avail.for_each([&](int x) {
        cur.set(x);
        Subset next = (avail - p.comparables(x)) & indices_above(p, x);
        extend_antichain(p, cur, next, f);
        cur.reset(x);
    });
}

} // namespace detail

template <class F>
void for_each_antichain_in(const Poset& p, const Subset& pool, F&& f) {
    p.require_subset(pool);
    Subset cur = p.empty_subset();
    detail::extend_antichain(p, cur, pool, f);
}

} // namespace ics
