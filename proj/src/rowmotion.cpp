#include "ics/rowmotion.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"

namespace ics {

namespace {

Subset toggle_unchecked(const Poset& p, Subset s, int x) {
    s.flip(x);
    if (is_interval_closed(p, s)) return s;
    s.flip(x);
    return s;
}

void require_ics(const Poset& p, const Subset& s, const char* who) {
    p.require_subset(s);
    if (!is_interval_closed(p, s))
        throw std::invalid_argument(std::string(who) + ": subset is not interval closed");
}

Subset row_global_unchecked(const Poset& p, const Subset& s) {
    Subset down = p.ideal_closure(s);
    Subset up = p.filter_closure(s);
    Subset inc = (down | up).complement();
    Subset ceiling = p.minimal_of(up - s);
    Subset ceil_ideal = p.ideal_closure(ceiling);
    Subset ceil_comp = p.ideal_closure(ceiling) | p.filter_closure(ceiling);
    Subset part_mid = p.ideal_closure(s - ceil_comp) - (s | ceil_ideal);
    Subset part_top = ceil_ideal - p.ideal_closure(p.minimal_of(s) & ceil_ideal);
    return inc | part_mid | part_top;
}

} // namespace

Subset toggle(const Poset& p, const Subset& ics, int x) {
    require_ics(p, ics, "toggle");
    if (x < 0 || x >= p.size()) throw std::out_of_range("toggle: element out of range");
    return toggle_unchecked(p, ics, x);
}

Subset rowmotion_toggles(const Poset& p, const Subset& ics) {
    return rowmotion_toggles(p, ics, p.linear_extension());
}

Subset rowmotion_toggles(const Poset& p, const Subset& ics,
                         const std::vector<int>& extension) {
    require_ics(p, ics, "rowmotion_toggles");
    if (!p.is_linear_extension(extension))
        throw std::invalid_argument("rowmotion_toggles: not a linear extension of this poset");
    Subset s = ics;
    for (auto it = extension.rbegin(); it != extension.rend(); ++it)
        s = toggle_unchecked(p, s, *it);
    return s;
}

Subset rowmotion_global(const Poset& p, const Subset& ics) {
    require_ics(p, ics, "rowmotion_global");
    return row_global_unchecked(p, ics);
}

Subset rowmotion_ordinal_sum(const Poset& p, const std::vector<int>& layers,
                             const Subset& ics) {
    if (!structurally_equal(p, ordinal_sum_of_antichains(layers)))
        throw std::invalid_argument(
            "rowmotion_ordinal_sum: poset is not the ordinal sum of antichains with these layers");
    require_ics(p, ics, "rowmotion_ordinal_sum");
    Subset top_layer = p.empty_subset();
    for (int i = p.size() - layers.back(); i < p.size(); ++i) top_layer.set(i);
    if (ics.empty() || ics.contains(top_layer) || top_layer.contains(ics))
        return ics.complement();
    Subset ceiling = p.minimal_of(p.filter_closure(ics) - ics);
    return p.ideal_closure(ceiling) - p.ideal_closure(p.minimal_of(ics));
}

Subset inverse_rowmotion(const Poset& p, const Subset& ics) {
    require_ics(p, ics, "inverse_rowmotion");
    Poset d = p.dual();
    return p.adopt(row_global_unchecked(d, d.adopt(ics)));
}

Orbit orbit_of(const Poset& p, const Subset& ics, long long max_steps) {
    require_ics(p, ics, "orbit_of");
    Orbit o;
    Subset cur = ics;
    do {
        o.members.push_back(cur);
        if (max_steps >= 0 && static_cast<long long>(o.members.size()) > max_steps)
            throw std::runtime_error("orbit_of: cycle did not close within the expected bound");
        cur = row_global_unchecked(p, cur);
    } while (cur != ics);
    auto best = std::min_element(o.members.begin(), o.members.end());
    std::rotate(o.members.begin(), best, o.members.end());
    return o;
}

OrbitDecomposition orbit_decomposition(const Poset& p, int jobs) {
    auto all = enumerate_ics(p, jobs);
    OrbitDecomposition d;
    d.total = static_cast<long long>(all.size());
    std::unordered_set<Subset, SubsetHash> visited;
    visited.reserve(all.size());
    for (const auto& seed : all) {
        if (visited.count(seed)) continue;
        Orbit o;
        Subset cur = seed; // seeds arrive in mask order, so seed is minimal
        do {
            o.members.push_back(cur);
            visited.insert(cur);
            if (o.members.size() > all.size())
                throw std::runtime_error(
                    "orbit_decomposition: cycle exceeded the family size");
            cur = row_global_unchecked(p, cur);
        } while (cur != seed);
        d.orbits.push_back(std::move(o));
    }
    std::sort(d.orbits.begin(), d.orbits.end(), [](const Orbit& a, const Orbit& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.representative() < b.representative();
    });
    d.rowmotion_order = 1;
    for (const auto& o : d.orbits)
        d.rowmotion_order = std::lcm(d.rowmotion_order, static_cast<long long>(o.size()));
    return d;
}

std::string OrbitDecomposition::to_json() const {
    nlohmann::json j;
    j["total"] = total;
    j["order"] = rowmotion_order;
    auto arr = nlohmann::json::array();
    for (const auto& o : orbits) {
        nlohmann::json jo;
        jo["size"] = o.size();
        auto members = nlohmann::json::array();
        for (const auto& m : o.members) members.push_back(m.elements());
        jo["members"] = members;
        arr.push_back(std::move(jo));
    }
    j["orbits"] = arr;
    return j.dump();
}

std::string rowmotion_graph_dot(const Poset& p) {
    auto all = enumerate_ics(p);
    auto name = [&](const Subset& s) {
        auto it = std::lower_bound(all.begin(), all.end(), s);
        return "i" + std::to_string(it - all.begin());
    };
    std::ostringstream os;
    os << "digraph rowmotion {\n";
    for (std::size_t k = 0; k < all.size(); ++k) {
        os << "  i" << k << " [label=\"{";
        auto xs = all[k].elements();
        for (std::size_t e = 0; e < xs.size(); ++e)
            os << (e ? "," : "") << p.label(xs[e]);
        os << "}\"];\n";
    }
    for (const auto& s : all)
        os << "  " << name(s) << " -> " << name(row_global_unchecked(p, s)) << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace ics
