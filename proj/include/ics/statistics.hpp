#pragma once

#include <string>
#include <vector>

#include "ics/poset.hpp"
#include "ics/rational.hpp"
#include "ics/rowmotion.hpp"
#include "ics/subset.hpp"

namespace ics {

enum class StatKind {
    cardinality,
    signed_cardinality, // even-rank members minus odd-rank members; ranked posets only
    toggleability,      // +1 toggle adds x, -1 removes x, 0 identity
    max_count,
    min_count,
    max_minus_min,
};

/// A statistic from the closed registry, with its element argument when the
/// kind needs one.
struct Statistic {
    StatKind kind = StatKind::cardinality;
    int element = -1; // only for toggleability

    bool operator==(const Statistic&) const = default;

    static Statistic cardinality() { return {StatKind::cardinality, -1}; }
    static Statistic signed_cardinality() { return {StatKind::signed_cardinality, -1}; }
    static Statistic toggleability(int x) { return {StatKind::toggleability, x}; }
    static Statistic max_count() { return {StatKind::max_count, -1}; }
    static Statistic min_count() { return {StatKind::min_count, -1}; }
    static Statistic max_minus_min() { return {StatKind::max_minus_min, -1}; }

    /// CLI spelling: a bare kind name, or "toggleability:<index-or-label>"
    /// resolved against p's labels.
    static Statistic parse(const Poset& p, const std::string& text);

    std::string name(const Poset& p) const;
};

long long evaluate(const Poset& p, const Statistic& stat, const Subset& ics);

/// Exact average of stat over the orbit members, in lowest terms.
Rational orbit_average(const Poset& p, const Statistic& stat, const Orbit& o);

struct HomomesyReport {
    Statistic stat;
    bool homomesic = false;
    Rational c;              // the common average when homomesic
    Rational global_average; // over all interval-closed sets
    std::vector<std::pair<Rational, int>> orbit_averages; // (average, size)
    int witness_a = -1; // first pair of orbits with differing averages,
    int witness_b = -1; // as indices into the decomposition; -1 when homomesic

    std::string to_json(const Poset& p) const;
};

HomomesyReport homomesy_report(const Poset& p, const Statistic& stat,
                               const OrbitDecomposition& d);
HomomesyReport homomesy_report(const Poset& p, const Statistic& stat);

struct CspVerdict {
    bool holds = false;
    int failing_d = 0; // smallest d in 1..order with a fixed-point mismatch
};

/// Cyclic sieving check for the triple (IC(P), rowmotion, f) with
/// f(q) = sum over interval-closed sets of q^stat. The fixed-point count of
/// the d-th power of rowmotion is compared with f at the d-th power of a
/// primitive root of unity of the rowmotion order, evaluated exactly in the
/// cyclotomic integer ring. Requires stat to be nonnegative everywhere.
CspVerdict csp_check(const Poset& p, const Statistic& stat,
                     const OrbitDecomposition& d);
CspVerdict csp_check(const Poset& p, const Statistic& stat);

} // namespace ics
