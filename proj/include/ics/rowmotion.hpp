#pragma once

#include <string>
#include <vector>

#include "ics/interval_closed.hpp"
#include "ics/poset.hpp"
#include "ics/subset.hpp"

namespace ics {

/// Adds or removes x when the result is still interval closed, otherwise
/// returns ics unchanged. Involutive.
Subset toggle(const Poset& p, const Subset& ics, int x);

/// Rowmotion as the composition of all toggles, applied from the top of the
/// given linear extension down. The result does not depend on the extension.
Subset rowmotion_toggles(const Poset& p, const Subset& ics);
Subset rowmotion_toggles(const Poset& p, const Subset& ics,
                         const std::vector<int>& extension);

/// Rowmotion in one pass from the region decomposition: the union of the
/// elements incomparable to I, the ideal of the part of I incomparable to
/// the ceiling minus (I and the ceiling's ideal), and the ceiling's ideal
/// minus the ideal of Min(I) under the ceiling. Agrees with
/// rowmotion_toggles on every interval-closed set.
Subset rowmotion_global(const Poset& p, const Subset& ics);

/// Rowmotion specialized to ordinal sums of antichains with the given layer
/// sizes: the complement when I is empty, contains the top layer, or is
/// contained in the top layer; otherwise Δ(ceiling) − Δ(Min(I)). Throws when
/// p is not the ordinal sum of antichains with these layer sizes.
Subset rowmotion_ordinal_sum(const Poset& p, const std::vector<int>& layers,
                             const Subset& ics);

/// Rowmotion on the dual poset, which inverts rowmotion on p.
Subset inverse_rowmotion(const Poset& p, const Subset& ics);

/// One rowmotion cycle: members[k+1] = Row(members[k]) and Row(back) =
/// front; rotated so the smallest mask comes first.
struct Orbit {
    std::vector<Subset> members;

    int size() const { return static_cast<int>(members.size()); }
    const Subset& representative() const { return members.front(); }
};

/// Walks the cycle through ics with rowmotion_global. max_steps, when
/// nonnegative, turns a runaway walk (only possible through an
/// implementation bug) into a std::runtime_error.
Orbit orbit_of(const Poset& p, const Subset& ics, long long max_steps = -1);

/// Partition of all interval-closed sets into rowmotion cycles.
struct OrbitDecomposition {
    std::vector<Orbit> orbits; // sorted by (size, representative mask)
    long long total = 0;       // = |IC(P)|
    long long rowmotion_order = 1; // lcm of orbit sizes

    std::string to_json() const;
};

OrbitDecomposition orbit_decomposition(const Poset& p, int jobs = 1);

/// The functional graph of rowmotion on IC(P) in Graphviz DOT.
std::string rowmotion_graph_dot(const Poset& p);

} // namespace ics
