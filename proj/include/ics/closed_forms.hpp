#pragma once

#include <map>
#include <string>
#include <vector>

#include "ics/poset.hpp"
#include "ics/rational.hpp"
#include "ics/rowmotion.hpp"
#include "ics/statistics.hpp"
#include "ics/subset.hpp"

namespace ics {

/// Predicted multiset of rowmotion orbit sizes and the resulting order.
struct OrbitStructurePrediction {
    std::map<int, long long> sizes; // orbit size -> multiplicity
    long long order = 1;

    long long total() const;
    /// Observed size multiset of a decomposition, for comparison.
    static std::map<int, long long> observed(const OrbitDecomposition& d);
};

/// C(n,2) + n + 1 interval-closed sets of the n-element chain.
long long ics_count_chain(int n);

/// Orbit structure on the n-element chain: one orbit of size 2,
/// floor((n-1)/2) of size n+2, plus one of size (n+2)/2 when n is even.
/// Order 2 for n in {1,2}, n+2 for even n, 2(n+2) for odd n >= 3.
OrbitStructurePrediction chain_orbit_structure(int n);

/// Average cardinality over the chain orbit through the interval starting at
/// the k-th smallest element (1-based), which is (2k(n-k)+n)/(n+2); k = 0
/// addresses the {empty, full} orbit with average n/2.
Rational chain_orbit_average_cardinality(int n, int k);

/// 1 + sum(2^a_i - 1) + sum_{i<j}(2^a_i - 1)(2^a_j - 1) interval-closed sets
/// of the ordinal sum of antichains with these layer sizes.
long long ics_count_ordinal_sum(const std::vector<int>& layers);

/// Orbit structure on ordinal sums of n >= 3 antichain layers:
/// 1 + (1/2) sum_{i<j}(2^a_i - 2)(2^a_j - 2) orbits of size 2,
/// floor((n-1)/2) of size n+2, one of size (n+2)/2 when n is even, and
/// sum(2^(a_i - 1) - 1) of size 2n when n is odd or sum(2^a_i - 2) of size n
/// when n is even. Order 2n(n+2) for odd n, n(n+2)/2 for even n.
OrbitStructurePrediction ordinal_sum_orbit_structure(const std::vector<int>& layers);

/// The same structure for alternating layers 1,m,1,...,m,1 with n layers,
/// computed from the specialized forms: 1 + ((n-3)(n-1)/8)(2^(m-1)-1)(2^m-2)
/// orbits of size 2, (n-1)/2 of size n+2, and (n-1)/2 (2^(m-1)-1) of size 2n.
OrbitStructurePrediction stacked_diamond_orbit_structure(int n, int m);

/// The same structure for n equal layers of size m: 1 + C(n,2)(2^m-2)^2 / 2
/// orbits of size 2 plus the general families with a_i = m.
OrbitStructurePrediction uniform_layers_orbit_structure(int n, int m);

/// 1 + 2(C(n,2) + n) + ((n+1)/2) C(n+2,3) interval-closed sets of [2]x[n].
long long ics_count_2xn(int n);

/// Narayana number (1/k) C(j,k-1) C(j-1,k-1).
long long narayana(int j, int k);

/// Number of interval-closed sets of [m]x[n] meeting every row (a,*),
/// which is narayana(m+n, n).
long long count_full_support(int m, int n);

/// Golden table of |IC([m]x[n])| for 1 <= m <= 5, 1 <= n <= 8.
long long ics_count_grid_golden(int m, int n);

/// Brute-force |IC([m]x[n])| by enumeration.
long long ics_count_grid_observed(int m, int n, int jobs = 1);

/// Bijection between order ideals of [m]x[n-1]x[2] and the interval-closed
/// sets of [m]x[n] with full row support. Per row a, the two chains of the
/// ideal record the top of the row interval minus one and the floor height;
/// an empty chain stands for height zero.
class FullSupportBijection {
public:
    FullSupportBijection(int m, int n); // requires m >= 1, n >= 2

    const Poset& grid() const { return grid_; }
    const Poset& ideal_poset() const { return ideal_poset_; }

    /// Maps an order ideal of ideal_poset() to a full-support
    /// interval-closed set of grid(). Rejects non-ideals.
    Subset to_ics(const Subset& ideal) const;

    /// Inverse: the ideal generated by (a, x-1, 1) for (a,x) in Max(I) with
    /// x > 1, and (a, y, 2) for (a,y) in Floor(I). Rejects sets without full
    /// row support.
    Subset to_ideal(const Subset& ics) const;

private:
    int m_, n_;
    Poset grid_;        // [m] x [n]
    Poset ideal_poset_; // [m] x [n-1] x [2]

    int grid_index(int a, int b) const { return (a - 1) * n_ + (b - 1); }
    int ideal_index(int a, int x, int c) const {
        return ((a - 1) * (n_ - 1) + (x - 1)) * 2 + (c - 1);
    }
};

/// Outcome of one closed-form check against brute force.
struct VerificationResult {
    std::string formula;
    std::string params;
    long long predicted = 0;
    long long observed = 0;
    bool ok = false;

    std::string to_json() const;
};

enum class VerifyScope { quick, full };

/// Runs every closed-form count and orbit-structure predictor against
/// enumeration within the scope's parameter budget.
std::vector<VerificationResult> verify_closed_forms(VerifyScope scope, int jobs = 1);

/// Conjecture scan outcome; pass means no counterexample within the budget.
struct ConjectureScanResult {
    std::string statistic;
    bool pass = true;
    int m = 0, n = 0; // counterexample grid when pass is false
    std::vector<std::pair<int, int>> checked;
};

/// max_minus_min homomesy on all [m]x[n] with 2 <= m <= n, m+n <= max_mn_sum.
ConjectureScanResult scan_max_minus_min(int max_mn_sum);

/// signed_cardinality homomesy on [m]x[n] with m in {2,3}, m+n odd,
/// m*n <= max_elements.
ConjectureScanResult scan_signed_cardinality(int max_elements);

/// Scan an arbitrary statistic over the same grids as scan_max_minus_min;
/// used to exercise the counterexample path with a non-homomesic statistic.
ConjectureScanResult scan_grids(StatKind kind, int max_mn_sum);

} // namespace ics
