#include "ics/poset.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ics {

namespace {

std::atomic<std::uint64_t> next_poset_id{1};

std::string tuple_label(const std::vector<int>& coords) {
    if (coords.size() == 1) return std::to_string(coords[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coords[i]);
    }
    return s + ")";
}

} // namespace

void Poset::finalize() {
    id_ = next_poset_id.fetch_add(1);

    // Kahn's algorithm; also rejects cycles.
    std::vector<std::vector<int>> above(static_cast<std::size_t>(n_));
    std::vector<int> indeg(static_cast<std::size_t>(n_), 0);
    for (auto [a, b] : covers_) {
        if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b)
            throw std::invalid_argument("Poset: cover relation out of range");
        above[static_cast<std::size_t>(a)].push_back(b);
        ++indeg[static_cast<std::size_t>(b)];
    }
    std::vector<int> topo;
    topo.reserve(static_cast<std::size_t>(n_));
    std::vector<int> stack;
    for (int i = 0; i < n_; ++i)
        if (indeg[static_cast<std::size_t>(i)] == 0) stack.push_back(i);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        topo.push_back(x);
        for (int y : above[static_cast<std::size_t>(x)])
            if (--indeg[static_cast<std::size_t>(y)] == 0) stack.push_back(y);
    }
    if (static_cast<int>(topo.size()) != n_)
        throw std::invalid_argument("Poset: cover relation contains a cycle");

    up_.assign(static_cast<std::size_t>(n_), Subset(n_, id_));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int x = *it;
        auto& ux = up_[static_cast<std::size_t>(x)];
        ux.set(x);
        for (int y : above[static_cast<std::size_t>(x)]) ux |= up_[static_cast<std::size_t>(y)];
    }
    down_.assign(static_cast<std::size_t>(n_), Subset(n_, id_));
    for (int a = 0; a < n_; ++a)
        up_[static_cast<std::size_t>(a)].for_each(
            [&](int b) { down_[static_cast<std::size_t>(b)].set(a); });
    comp_.reserve(static_cast<std::size_t>(n_));
    comp_.clear();
    for (int x = 0; x < n_; ++x)
        comp_.push_back(up_[static_cast<std::size_t>(x)] | down_[static_cast<std::size_t>(x)]);

    // A cover implied by two others shows up as an interval of size > 2.
    for (auto [a, b] : covers_)
        if ((up_[static_cast<std::size_t>(a)] & down_[static_cast<std::size_t>(b)]).count() != 2)
            throw std::invalid_argument("Poset: covers are not transitively reduced");

    // Longest path from a minimal element; the poset is ranked iff this
    // function increases by exactly one along every cover.
    ranks_.assign(static_cast<std::size_t>(n_), 0);
    for (int x : topo)
        for (int y : above[static_cast<std::size_t>(x)])
            ranks_[static_cast<std::size_t>(y)] = std::max(
                ranks_[static_cast<std::size_t>(y)], ranks_[static_cast<std::size_t>(x)] + 1);
    ranked_ = true;
    for (auto [a, b] : covers_)
        if (ranks_[static_cast<std::size_t>(b)] != ranks_[static_cast<std::size_t>(a)] + 1) {
            ranked_ = false;
            ranks_.clear();
            break;
        }
}

Poset Poset::from_covers(int n, std::vector<std::pair<int, int>> covers) {
    if (n <= 0) throw std::invalid_argument("Poset: empty posets are not supported");
    Poset p;
    p.n_ = n;
    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
    p.covers_ = std::move(covers);
    p.finalize();
    return p;
}

Poset Poset::from_leq(int n, const std::vector<std::vector<bool>>& leq) {
    if (n <= 0) throw std::invalid_argument("Poset: empty posets are not supported");
    if (static_cast<int>(leq.size()) != n)
        throw std::invalid_argument("Poset: leq matrix has wrong size");
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < n; ++a) {
        if (!leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)])
            throw std::invalid_argument("Poset: leq is not reflexive");
        for (int b = 0; b < n; ++b) {
            if (a == b || !leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])
                continue;
            if (leq[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
                throw std::invalid_argument("Poset: leq is not antisymmetric");
            bool covered = false;
            for (int z = 0; z < n && !covered; ++z)
                covered = z != a && z != b && leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(z)] &&
                          leq[static_cast<std::size_t>(z)][static_cast<std::size_t>(b)];
            if (!covered) covers.emplace_back(a, b);
        }
    }
    Poset p = from_covers(n, std::move(covers));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (p.leq(a, b) != static_cast<bool>(leq[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]))
                throw std::invalid_argument("Poset: leq is not transitive");
    return p;
}

int Poset::rank(int x) const {
    if (!ranked_) throw std::logic_error("Poset: rank queried on an unranked poset");
    return ranks_[static_cast<std::size_t>(x)];
}

int Poset::height() const {
    if (!ranked_) throw std::logic_error("Poset: height queried on an unranked poset");
    return *std::max_element(ranks_.begin(), ranks_.end());
}

std::string Poset::label(int x) const {
    if (x < 0 || x >= n_) throw std::out_of_range("Poset: element index out of range");
    if (labels_.empty()) return std::to_string(x);
    return labels_[static_cast<std::size_t>(x)];
}

int Poset::find_label(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return static_cast<int>(i);
    return -1;
}

Subset Poset::subset_of(std::initializer_list<int> xs) const {
    return subset_of(std::vector<int>(xs));
}

Subset Poset::subset_of(const std::vector<int>& xs) const {
    Subset s = empty_subset();
    for (int x : xs) s.set(x);
    return s;
}

Subset Poset::adopt(const Subset& s) const {
    if (s.universe_size() != n_)
        throw std::invalid_argument("Poset: cannot adopt a subset of a different size");
    return s.retagged(id_);
}

void Poset::require_subset(const Subset& s) const {
    if (s.universe_size() != n_ || s.poset_id() != id_)
        throw std::invalid_argument("Poset: subset belongs to a different poset");
}

Subset Poset::ideal_closure(const Subset& s) const {
    require_subset(s);
    Subset r = empty_subset();
    s.for_each([&](int x) { r |= down_[static_cast<std::size_t>(x)]; });
    return r;
}

Subset Poset::filter_closure(const Subset& s) const {
    require_subset(s);
    Subset r = empty_subset();
    s.for_each([&](int x) { r |= up_[static_cast<std::size_t>(x)]; });
    return r;
}

Subset Poset::minimal_of(const Subset& s) const {
    require_subset(s);
    Subset r = empty_subset();
    s.for_each([&](int x) {
        if ((down_[static_cast<std::size_t>(x)] & s).count() == 1) r.set(x);
    });
    return r;
}

Subset Poset::maximal_of(const Subset& s) const {
    require_subset(s);
    Subset r = empty_subset();
    s.for_each([&](int x) {
        if ((up_[static_cast<std::size_t>(x)] & s).count() == 1) r.set(x);
    });
    return r;
}

bool Poset::is_antichain(const Subset& s) const {
    require_subset(s);
    bool ok = true;
    s.for_each([&](int x) {
        if ((comp_[static_cast<std::size_t>(x)] & s).count() != 1) ok = false;
    });
    return ok;
}

bool Poset::is_order_ideal(const Subset& s) const {
    return ideal_closure(s) == s;
}

std::vector<int> Poset::linear_extension() const {
    return linear_extension([](int) { return 0; });
}

std::vector<int> Poset::linear_extension(const std::function<int(int)>& choose) const {
    std::vector<int> pending(static_cast<std::size_t>(n_), 0);
    std::vector<std::vector<int>> above(static_cast<std::size_t>(n_));
    for (auto [a, b] : covers_) {
        above[static_cast<std::size_t>(a)].push_back(b);
        ++pending[static_cast<std::size_t>(b)];
    }
    std::vector<int> avail; // sorted by index
    for (int i = 0; i < n_; ++i)
        if (pending[static_cast<std::size_t>(i)] == 0) avail.push_back(i);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n_));
    while (!avail.empty()) {
        int k = choose(static_cast<int>(avail.size()));
        if (k < 0 || k >= static_cast<int>(avail.size()))
            throw std::logic_error("Poset: linear extension tie-break out of range");
        int x = avail[static_cast<std::size_t>(k)];
        avail.erase(avail.begin() + k);
        order.push_back(x);
        for (int y : above[static_cast<std::size_t>(x)])
            if (--pending[static_cast<std::size_t>(y)] == 0)
                avail.insert(std::lower_bound(avail.begin(), avail.end(), y), y);
    }
    return order;
}

bool Poset::is_linear_extension(const std::vector<int>& order) const {
    if (static_cast<int>(order.size()) != n_) return false;
    std::vector<int> pos(static_cast<std::size_t>(n_), -1);
    for (int i = 0; i < n_; ++i) {
        int x = order[static_cast<std::size_t>(i)];
        if (x < 0 || x >= n_ || pos[static_cast<std::size_t>(x)] != -1) return false;
        pos[static_cast<std::size_t>(x)] = i;
    }
    for (auto [a, b] : covers_)
        if (pos[static_cast<std::size_t>(a)] > pos[static_cast<std::size_t>(b)]) return false;
    return true;
}

Poset Poset::dual() const {
    std::vector<std::pair<int, int>> rev;
    rev.reserve(covers_.size());
    for (auto [a, b] : covers_) rev.emplace_back(b, a);
    Poset p = from_covers(n_, std::move(rev));
    p.labels_ = labels_;
    p.coords_ = coords_;
    return p;
}

bool structurally_equal(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
}

std::string Poset::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    auto arr = nlohmann::json::array();
    for (auto [a, b] : covers_) arr.push_back({a, b});
    j["covers"] = arr;
    if (!labels_.empty()) j["labels"] = labels_;
    if (ranked_) j["ranks"] = ranks_;
    return j.dump();
}

Poset Poset::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> covers;
    for (const auto& e : j.at("covers"))
        covers.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    Poset p = from_covers(n, std::move(covers));
    if (j.contains("labels")) p.labels_ = j["labels"].get<std::vector<std::string>>();
    return p;
}

std::string Poset::to_dot() const {
    std::ostringstream os;
    os << "digraph hasse {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (int i = 0; i < n_; ++i)
        os << "  n" << i << " [label=\"" << label(i) << "\"];\n";
    if (ranked_) {
        std::map<int, std::vector<int>> layers;
        for (int i = 0; i < n_; ++i) layers[ranks_[static_cast<std::size_t>(i)]].push_back(i);
        for (const auto& [r, xs] : layers) {
            os << "  { rank=same;";
            for (int x : xs) os << " n" << x << ";";
            os << " }\n";
        }
    }
    for (auto [a, b] : covers_) os << "  n" << a << " -> n" << b << ";\n";
    os << "}\n";
    return os.str();
}

Poset chain(int n) {
    if (n < 1) throw std::invalid_argument("chain: n must be at least 1");
    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
    Poset p = Poset::from_covers(n, std::move(covers));
    for (int i = 0; i < n; ++i) {
        p.coords_.push_back({i + 1});
        p.labels_.push_back(std::to_string(i + 1));
    }
    return p;
}

Poset antichain(int n) {
    if (n < 1) throw std::invalid_argument("antichain: n must be at least 1");
    Poset p = Poset::from_covers(n, {});
    for (int i = 0; i < n; ++i) {
        p.coords_.push_back({i + 1});
        p.labels_.push_back(std::to_string(i + 1));
    }
    return p;
}

Poset ordinal_sum(const std::vector<Poset>& parts) {
    if (parts.empty()) throw std::invalid_argument("ordinal_sum: needs at least one part");
    int n = 0;
    for (const auto& part : parts) n += part.size();
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> labels;
    int base = 0, prev_base = 0;
    const Poset* prev = nullptr;
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const Poset& part = parts[pi];
        for (auto [a, b] : part.covers()) covers.emplace_back(base + a, base + b);
        if (prev) {
            auto mx = prev->maximal_elements().elements();
            auto mn = part.minimal_elements().elements();
            for (int a : mx)
                for (int b : mn) covers.emplace_back(prev_base + a, base + b);
        }
        for (int i = 0; i < part.size(); ++i)
            labels.push_back("(" + std::to_string(pi + 1) + "," + std::to_string(i + 1) + ")");
        prev = &part;
        prev_base = base;
        base += part.size();
    }
    Poset p = Poset::from_covers(n, std::move(covers));
    p.labels_ = std::move(labels);
    return p;
}

Poset disjoint_union(const std::vector<Poset>& parts) {
    if (parts.empty()) throw std::invalid_argument("disjoint_union: needs at least one part");
    int n = 0;
    for (const auto& part : parts) n += part.size();
    std::vector<std::pair<int, int>> covers;
    std::vector<std::string> labels;
    int base = 0;
    for (std::size_t pi = 0; pi < parts.size(); ++pi) {
        const Poset& part = parts[pi];
        for (auto [a, b] : part.covers()) covers.emplace_back(base + a, base + b);
        for (int i = 0; i < part.size(); ++i)
            labels.push_back("(" + std::to_string(pi + 1) + "," + std::to_string(i + 1) + ")");
        base += part.size();
    }
    Poset p = Poset::from_covers(n, std::move(covers));
    p.labels_ = std::move(labels);
    return p;
}

Poset product(const Poset& p, const Poset& q) {
    const int np = p.size(), nq = q.size(), n = np * nq;
    // Element (a,b) gets index a*nq + b; order is componentwise.
    std::vector<std::vector<bool>> leq(static_cast<std::size_t>(n),
                                       std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < nq; ++b)
            for (int c = 0; c < np; ++c)
                for (int d = 0; d < nq; ++d)
                    if (p.leq(a, c) && q.leq(b, d))
                        leq[static_cast<std::size_t>(a * nq + b)][static_cast<std::size_t>(c * nq + d)] = true;
    Poset r = Poset::from_leq(n, leq);
    auto coord_of = [](const Poset& poset, int x) {
        if (!poset.coordinates().empty()) return poset.coordinates()[static_cast<std::size_t>(x)];
        return std::vector<int>{x + 1};
    };
    for (int a = 0; a < np; ++a)
        for (int b = 0; b < nq; ++b) {
            std::vector<int> c = coord_of(p, a);
            auto cb = coord_of(q, b);
            c.insert(c.end(), cb.begin(), cb.end());
            r.coords_.push_back(std::move(c));
        }
    for (int i = 0; i < n; ++i) r.labels_.push_back(tuple_label(r.coords_[static_cast<std::size_t>(i)]));
    return r;
}

Poset product(const std::vector<Poset>& factors) {
    if (factors.empty()) throw std::invalid_argument("product: needs at least one factor");
    Poset r = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) r = product(r, factors[i]);
    return r;
}

Poset stacked_diamond(int n, int m) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("stacked_diamond: n must be odd and >= 3");
    if (m < 2) throw std::invalid_argument("stacked_diamond: m must be at least 2");
    std::vector<int> layers;
    for (int i = 1; i <= n; ++i) layers.push_back(i % 2 == 1 ? 1 : m);
    return ordinal_sum_of_antichains(layers);
}

Poset ordinal_sum_of_antichains(const std::vector<int>& layer_sizes) {
    std::vector<Poset> parts;
    parts.reserve(layer_sizes.size());
    for (int a : layer_sizes) parts.push_back(antichain(a));
    return ordinal_sum(parts);
}

Poset divisor_poset(long long d) {
    if (d < 2) throw std::invalid_argument("divisor_poset: d must be at least 2");
    std::vector<std::pair<long long, int>> factors; // (prime, exponent)
    long long rest = d;
    for (long long f = 2; f * f <= rest; ++f)
        if (rest % f == 0) {
            int e = 0;
            while (rest % f == 0) {
                rest /= f;
                ++e;
            }
            factors.emplace_back(f, e);
        }
    if (rest > 1) factors.emplace_back(rest, 1);
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
    std::vector<Poset> chains;
    chains.reserve(factors.size());
    for (auto [prime, e] : factors) chains.push_back(chain(e + 1));
    Poset p = product(chains);
    for (int i = 0; i < p.size(); ++i) {
        long long value = 1;
        const auto& c = p.coords_[static_cast<std::size_t>(i)];
        for (std::size_t k = 0; k < factors.size(); ++k)
            for (int e = 1; e < c[k]; ++e) value *= factors[k].first;
        p.labels_[static_cast<std::size_t>(i)] = std::to_string(value);
    }
    return p;
}

} // namespace ics
