#include "ics/statistics.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace ics {

Statistic Statistic::parse(const Poset& p, const std::string& text) {
    if (text == "cardinality") return cardinality();
    if (text == "signed_cardinality") return signed_cardinality();
    if (text == "max_count") return max_count();
    if (text == "min_count") return min_count();
    if (text == "max_minus_min") return max_minus_min();
    const std::string prefix = "toggleability:";
    if (text.rfind(prefix, 0) == 0) {
        std::string arg = text.substr(prefix.size());
        int x = p.find_label(arg);
        if (x < 0) {
            try {
                std::size_t used = 0;
                x = std::stoi(arg, &used);
                if (used != arg.size()) x = -1;
            } catch (const std::exception&) {
                x = -1;
            }
        }
        if (x < 0 || x >= p.size())
            throw std::invalid_argument("statistic: unknown element '" + arg + "'");
        return toggleability(x);
    }
    throw std::invalid_argument("statistic: unknown statistic '" + text + "'");
}

std::string Statistic::name(const Poset& p) const {
    switch (kind) {
        case StatKind::cardinality: return "cardinality";
        case StatKind::signed_cardinality: return "signed_cardinality";
        case StatKind::toggleability: return "toggleability:" + p.label(element);
        case StatKind::max_count: return "max_count";
        case StatKind::min_count: return "min_count";
        case StatKind::max_minus_min: return "max_minus_min";
    }
    return "?";
}

long long evaluate(const Poset& p, const Statistic& stat, const Subset& ics) {
    p.require_subset(ics);
    switch (stat.kind) {
        case StatKind::cardinality:
            return ics.count();
        case StatKind::signed_cardinality: {
            if (!p.is_ranked())
                throw std::invalid_argument("signed_cardinality: poset is not ranked");
            long long v = 0;
            ics.for_each([&](int x) { v += p.rank(x) % 2 == 0 ? 1 : -1; });
            return v;
        }
        case StatKind::toggleability: {
            Subset t = toggle(p, ics, stat.element);
            if (t == ics) return 0;
            return t.test(stat.element) ? 1 : -1;
        }
        case StatKind::max_count:
            return p.maximal_of(ics).count();
        case StatKind::min_count:
            return p.minimal_of(ics).count();
        case StatKind::max_minus_min:
            return p.maximal_of(ics).count() - p.minimal_of(ics).count();
    }
    throw std::logic_error("evaluate: unhandled statistic kind");
}

Rational orbit_average(const Poset& p, const Statistic& stat, const Orbit& o) {
    long long sum = 0;
    for (const auto& m : o.members) sum += evaluate(p, stat, m);
    return Rational(sum, o.size());
}

HomomesyReport homomesy_report(const Poset& p, const Statistic& stat,
                               const OrbitDecomposition& d) {
    HomomesyReport r;
    r.stat = stat;
    long long grand = 0;
    for (const auto& o : d.orbits) {
        Rational avg = orbit_average(p, stat, o);
        grand += avg.num * (o.size() / avg.den);
        r.orbit_averages.emplace_back(avg, o.size());
    }
    r.global_average = Rational(grand, d.total);
    r.homomesic = true;
    for (std::size_t k = 1; k < r.orbit_averages.size() && r.homomesic; ++k)
        if (r.orbit_averages[k].first != r.orbit_averages[0].first) {
            r.homomesic = false;
            // first differing pair in canonical orbit order
            for (std::size_t a = 0; a < k; ++a)
                if (r.orbit_averages[a].first != r.orbit_averages[k].first) {
                    r.witness_a = static_cast<int>(a);
                    r.witness_b = static_cast<int>(k);
                    break;
                }
        }
    if (r.homomesic && !r.orbit_averages.empty()) r.c = r.orbit_averages[0].first;
    return r;
}

HomomesyReport homomesy_report(const Poset& p, const Statistic& stat) {
    return homomesy_report(p, stat, orbit_decomposition(p));
}

std::string HomomesyReport::to_json(const Poset& p) const {
    nlohmann::json j;
    j["stat"] = stat.name(p);
    j["homomesic"] = homomesic;
    if (homomesic) j["c"] = c.to_string();
    j["global_average"] = global_average.to_string();
    auto arr = nlohmann::json::array();
    for (const auto& [avg, size] : orbit_averages)
        arr.push_back({avg.to_string(), size});
    j["orbit_averages"] = arr;
    if (!homomesic) j["witness"] = {witness_a, witness_b};
    return j.dump();
}

namespace {

// Integer polynomials as coefficient vectors, low degree first.

std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
    // den is monic up to sign of its leading coefficient; division must be
    // exact because cyclotomic factors divide x^n - 1 over the integers.
    std::vector<long long> q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
    long long lead = den.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        long long c = num[k + den.size() - 1] / lead;
        q[k] = c;
        for (std::size_t i = 0; i < den.size(); ++i)
            num[k + i] -= c * den[i];
    }
    for (long long c : num)
        if (c != 0) throw std::logic_error("poly_divide_exact: inexact division");
    return q;
}

std::vector<long long> cyclotomic(int n) {
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
    std::vector<long long> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) poly = poly_divide_exact(std::move(poly), cyclotomic(d));
    return poly;
}

// Remainder of poly modulo the monic divisor, in place.
void poly_mod(std::vector<long long>& poly, const std::vector<long long>& mod) {
    const std::size_t deg = mod.size() - 1;
    while (poly.size() > deg) {
        long long c = poly.back();
        if (c != 0) {
            std::size_t shift = poly.size() - mod.size();
            for (std::size_t i = 0; i < mod.size(); ++i) poly[shift + i] -= c * mod[i];
        }
        poly.pop_back();
    }
}

} // namespace

CspVerdict csp_check(const Poset& p, const Statistic& stat,
                     const OrbitDecomposition& d) {
    std::vector<long long> coeff; // coeff[v] = #{I : stat(I) = v}
    for (const auto& o : d.orbits)
        for (const auto& m : o.members) {
            long long v = evaluate(p, stat, m);
            if (v < 0)
                throw std::invalid_argument(
                    "csp_check: statistic takes a negative value");
            if (static_cast<std::size_t>(v) >= coeff.size())
                coeff.resize(static_cast<std::size_t>(v) + 1, 0);
            ++coeff[static_cast<std::size_t>(v)];
        }

    const long long n = d.rowmotion_order;
    auto fixed_points = [&](long long deg) {
        long long fix = 0;
        for (const auto& o : d.orbits)
            if (deg % o.size() == 0) fix += o.size();
        return fix;
    };

    CspVerdict v;
    v.holds = true;
    for (long long deg = 1; deg <= n; ++deg) {
        // omega^deg is a primitive m-th root of unity.
        long long m = n / std::gcd(deg, n);
        std::vector<long long> reduced(static_cast<std::size_t>(m), 0);
        for (std::size_t k = 0; k < coeff.size(); ++k)
            reduced[static_cast<std::size_t>(static_cast<long long>(k) % m)] += coeff[k];
        reduced[0] -= fixed_points(deg);
        auto phi = cyclotomic(static_cast<int>(m));
        poly_mod(reduced, phi);
        bool zero = std::all_of(reduced.begin(), reduced.end(),
                                [](long long c) { return c == 0; });
        if (!zero) {
            v.holds = false;
            v.failing_d = static_cast<int>(deg);
            break;
        }
    }
    return v;
}

CspVerdict csp_check(const Poset& p, const Statistic& stat) {
    return csp_check(p, stat, orbit_decomposition(p));
}

} // namespace ics
