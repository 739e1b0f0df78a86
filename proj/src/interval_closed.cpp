#include "ics/interval_closed.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace ics {

bool is_interval_closed(const Poset& p, const Subset& s) {
    return s.contains(p.ideal_closure(s) & p.filter_closure(s));
}

IntervalClosedSet::IntervalClosedSet(const Poset& p, Subset s) : s_(std::move(s)) {
    if (!is_interval_closed(p, s_))
        throw std::invalid_argument("IntervalClosedSet: subset is not interval closed");
}

AntichainPair to_antichain_pair(const Poset& p, const Subset& ics) {
    AntichainPair pair;
    pair.max_part = p.maximal_of(ics);
    pair.floor_part = p.maximal_of(p.ideal_closure(ics) - ics);
    return pair;
}

Subset from_antichain_pair(const Poset& p, const AntichainPair& pair) {
    if (!p.is_antichain(pair.max_part))
        throw std::invalid_argument("from_antichain_pair: max part is not an antichain");
    if (!p.is_antichain(pair.floor_part))
        throw std::invalid_argument("from_antichain_pair: floor part is not an antichain");
    if (pair.max_part.intersects(pair.floor_part))
        throw std::invalid_argument("from_antichain_pair: parts are not disjoint");
    Subset da = p.ideal_closure(pair.max_part);
    if (!da.contains(pair.floor_part))
        throw std::invalid_argument(
            "from_antichain_pair: floor part is not inside the ideal of the max part");
    return da - p.ideal_closure(pair.floor_part);
}

Regions regions(const Poset& p, const Subset& ics) {
    p.require_subset(ics);
    if (!is_interval_closed(p, ics))
        throw std::invalid_argument("regions: subset is not interval closed");
    Subset down = p.ideal_closure(ics);
    Subset up = p.filter_closure(ics);
    Regions r{p.empty_subset(), p.empty_subset(), p.empty_subset(),
              p.empty_subset(), p.empty_subset()};
    r.inc = (down | up).complement();
    r.comp = r.inc.complement();
    r.ceiling = p.minimal_of(up - ics);
    r.min_under_ceiling = p.minimal_of(ics) & p.ideal_closure(r.ceiling);
    r.floor = p.maximal_of(down - ics);
    return r;
}

std::vector<Subset> enumerate_ics(const Poset& p, int jobs, bool canonical) {
    if (jobs < 1) throw std::invalid_argument("enumerate_ics: jobs must be positive");
    if (!canonical) jobs = 1; // generation order is defined by the sequential walk

    // Worker w handles every max antichain whose smallest element is ~ w.
    auto run_roots = [&](int begin, int step, std::vector<Subset>& out) {
        for (int root = begin; root < p.size(); root += step) {
            Subset a = p.empty_subset();
            a.set(root);
            Subset rest = detail::indices_above(p, root) - p.comparables(root);
            auto emit_pairs = [&](const Subset&) {
                Subset da = p.ideal_closure(a);
                Subset pool = da - a;
                for_each_antichain_in(p, pool, [&](const Subset& b) {
                    out.push_back(da - p.ideal_closure(b));
                });
            };
            detail::extend_antichain(p, a, rest, emit_pairs);
        }
    };

    std::vector<Subset> result;
    result.push_back(p.empty_subset()); // the pair (∅,∅)
    if (jobs == 1) {
        run_roots(0, 1, result);
    } else {
        jobs = std::min(jobs, p.size());
        std::vector<std::vector<Subset>> parts(static_cast<std::size_t>(jobs));
        std::vector<std::thread> workers;
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back(run_roots, w, jobs, std::ref(parts[static_cast<std::size_t>(w)]));
        for (auto& t : workers) t.join();
        for (auto& part : parts)
            result.insert(result.end(), part.begin(), part.end());
    }
    if (canonical) std::sort(result.begin(), result.end());
    return result;
}

std::vector<Subset> enumerate_order_ideals(const Poset& p) {
    std::vector<Subset> result;
    for_each_antichain_in(p, p.full_subset(), [&](const Subset& a) {
        result.push_back(p.ideal_closure(a));
    });
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace ics
