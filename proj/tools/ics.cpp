#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ics/closed_forms.hpp"
#include "ics/expr.hpp"
#include "ics/rowmotion.hpp"
#include "ics/statistics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNegative = 3;
constexpr int kExitInternal = 4;
constexpr int kDefaultElementCap = 256;

struct CommonOpts {
    std::string format = "text";
    int jobs = 1;
    bool ack_element_cap = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--jobs", opts.jobs, "Worker threads; output is identical for any N")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--ack-element-cap", opts.ack_element_cap,
                  "Acknowledge raising the element cap via ICS_MAX_ELEMENTS");
}

ics::Poset build_poset(const std::string& expr_text, const CommonOpts& opts) {
    ics::Poset p = ics::evaluate(ics::parse_expr(expr_text));
    long long cap = kDefaultElementCap;
    if (const char* env = std::getenv("ICS_MAX_ELEMENTS")) {
        if (!opts.ack_element_cap && p.size() > kDefaultElementCap)
            throw std::invalid_argument(
                "ICS_MAX_ELEMENTS is set but --ack-element-cap was not passed");
        cap = std::atoll(env);
    }
    if (p.size() > cap)
        throw std::invalid_argument("poset has " + std::to_string(p.size()) +
                                    " elements, above the cap of " + std::to_string(cap) +
                                    " (set ICS_MAX_ELEMENTS and pass --ack-element-cap)");
    return p;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write to " + path);
    out << content;
}

std::string set_text(const ics::Poset& p, const ics::Subset& s) {
    std::string out = "{";
    auto xs = s.elements();
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + p.label(xs[i]);
    return out + "}";
}

int cmd_enumerate(const std::string& expr_text, const CommonOpts& opts, bool count_only,
                  const std::string& seed_order, const std::string& dot_path) {
    ics::Poset p = build_poset(expr_text, opts);
    if (!dot_path.empty()) write_file(dot_path, p.to_dot());
    auto all = ics::enumerate_ics(p, opts.jobs, seed_order == "canonical");
    if (opts.format == "json") {
        nlohmann::json j;
        j["count"] = all.size();
        if (!count_only) {
            auto members = nlohmann::json::array();
            for (const auto& s : all) members.push_back(s.elements());
            j["members"] = members;
        }
        std::cout << j.dump() << "\n";
    } else if (opts.format == "csv") {
        if (count_only) {
            std::cout << all.size() << "\n";
        } else {
            for (const auto& s : all) {
                auto xs = s.elements();
                for (std::size_t i = 0; i < xs.size(); ++i)
                    std::cout << (i ? "," : "") << xs[i];
                std::cout << "\n";
            }
        }
    } else {
        std::cout << all.size() << "\n";
        if (!count_only)
            for (const auto& s : all) std::cout << set_text(p, s) << "\n";
    }
    return kExitOk;
}

int cmd_orbits(const std::string& expr_text, const CommonOpts& opts, bool members,
               const std::string& dot_path) {
    ics::Poset p = build_poset(expr_text, opts);
    if (!dot_path.empty()) write_file(dot_path, ics::rowmotion_graph_dot(p));
    auto d = ics::orbit_decomposition(p, opts.jobs);
    if (opts.format == "json") {
        std::cout << d.to_json() << "\n";
        return kExitOk;
    }
    std::map<int, int> hist;
    for (const auto& o : d.orbits) ++hist[o.size()];
    std::cout << "total: " << d.total << "\n";
    std::cout << "order: " << d.rowmotion_order << "\n";
    std::cout << "sizes:";
    for (auto [size, mult] : hist) std::cout << " " << size << "x" << mult;
    std::cout << "\n";
    if (members)
        for (const auto& o : d.orbits) {
            std::cout << "orbit(" << o.size() << "):";
            for (const auto& m : o.members) std::cout << " " << set_text(p, m);
            std::cout << "\n";
        }
    return kExitOk;
}

int cmd_homomesy(const std::string& expr_text, const std::string& stat_text,
                 const CommonOpts& opts) {
    ics::Poset p = build_poset(expr_text, opts);
    ics::Statistic stat = ics::Statistic::parse(p, stat_text);
    auto report = ics::homomesy_report(p, stat, ics::orbit_decomposition(p, opts.jobs));
    if (opts.format == "json") {
        std::cout << report.to_json(p) << "\n";
    } else {
        std::cout << "statistic: " << stat.name(p) << "\n";
        if (report.homomesic) {
            std::cout << "homomesic with average " << report.c.to_string() << "\n";
        } else {
            std::cout << "not homomesic\n";
            const auto& a = report.orbit_averages[static_cast<std::size_t>(report.witness_a)];
            const auto& b = report.orbit_averages[static_cast<std::size_t>(report.witness_b)];
            std::cout << "witness: orbit " << report.witness_a << " (size " << a.second
                      << ", average " << a.first.to_string() << ") vs orbit "
                      << report.witness_b << " (size " << b.second << ", average "
                      << b.first.to_string() << ")\n";
        }
        std::cout << "orbit averages:";
        for (const auto& [avg, size] : report.orbit_averages)
            std::cout << " " << avg.to_string() << "(" << size << ")";
        std::cout << "\n";
    }
    return report.homomesic ? kExitOk : kExitNegative;
}

int cmd_verify(const std::string& scope_text, const CommonOpts& opts) {
    auto scope = scope_text == "full" ? ics::VerifyScope::full : ics::VerifyScope::quick;
    auto results = ics::verify_closed_forms(scope, opts.jobs);
    int failures = 0;
    if (opts.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& r : results) {
            arr.push_back(nlohmann::json::parse(r.to_json()));
            failures += r.ok ? 0 : 1;
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.ok ? "ok   " : "FAIL ") << r.formula << " " << r.params
                      << " predicted=" << r.predicted << " observed=" << r.observed
                      << "\n";
            failures += r.ok ? 0 : 1;
        }
        std::cout << results.size() << " checks, " << failures << " failures\n";
    }
    return failures == 0 ? kExitOk : kExitInternal;
}

int cmd_conjecture(const std::string& name, int budget, const CommonOpts& opts) {
    ics::ConjectureScanResult r;
    if (name == "4.5" || name == "max-minus-min") {
        r = ics::scan_max_minus_min(budget > 0 ? budget : 9);
    } else if (name == "4.6" || name == "signed-cardinality") {
        r = ics::scan_signed_cardinality(budget > 0 ? budget : 24);
    } else {
        throw std::invalid_argument("unknown conjecture '" + name +
                                    "' (use max-minus-min/4.5 or signed-cardinality/4.6)");
    }
    if (opts.format == "json") {
        nlohmann::json j;
        j["conjecture"] = name;
        j["statistic"] = r.statistic;
        j["pass"] = r.pass;
        j["checked"] = r.checked;
        if (!r.pass) j["counterexample"] = {r.m, r.n};
        std::cout << j.dump() << "\n";
    } else {
        if (r.pass)
            std::cout << "PASS (" << r.checked.size() << " posets checked, no proof implied)\n";
        else
            std::cout << "COUNTEREXAMPLE at [" << r.m << "]x[" << r.n << "]\n";
    }
    return r.pass ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact combinatorics of interval-closed sets under rowmotion"};
    app.require_subcommand(1);

    std::string expr_text, stat_text, scope_text = "quick", conj_name;
    std::string seed_order = "canonical", dot_path;
    bool count_only = false, members = false;
    int budget = 0;
    CommonOpts opts;

    auto* enumerate = app.add_subcommand("enumerate", "List or count interval-closed sets");
    enumerate->add_option("expr", expr_text, "Poset expression")->required();
    enumerate->add_flag("--count-only", count_only, "Print only the count");
    enumerate->add_option("--seed-order", seed_order, "Member ordering")
        ->check(CLI::IsMember({"canonical", "generation"}))
        ->capture_default_str();
    enumerate->add_option("--dot", dot_path, "Write the Hasse diagram to FILE");
    add_common(enumerate, opts);

    auto* orbits = app.add_subcommand("orbits", "Rowmotion orbit decomposition");
    orbits->add_option("expr", expr_text, "Poset expression")->required();
    orbits->add_flag("--members", members, "Print full orbit membership");
    orbits->add_option("--dot", dot_path, "Write the rowmotion functional graph to FILE");
    add_common(orbits, opts);

    auto* homomesy = app.add_subcommand("homomesy", "Orbit averages of a statistic");
    homomesy->add_option("expr", expr_text, "Poset expression")->required();
    homomesy
        ->add_option("stat", stat_text,
                     "cardinality | signed_cardinality | max_count | min_count | "
                     "max_minus_min | toggleability:<element-index-or-label>")
        ->required();
    add_common(homomesy, opts);

    auto* verify = app.add_subcommand("verify", "Check every closed form against enumeration");
    verify->add_option("scope", scope_text, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    add_common(verify, opts);

    auto* conjecture = app.add_subcommand("conjecture", "Homomesy conjecture scans");
    conjecture
        ->add_option("name", conj_name,
                     "max-minus-min (alias 4.5) or signed-cardinality (alias 4.6)")
        ->required();
    conjecture->add_option(
        "--budget", budget,
        "max-minus-min: cap on m+n (default 9); signed-cardinality: cap on m*n (default 24)");
    add_common(conjecture, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (enumerate->parsed())
            return cmd_enumerate(expr_text, opts, count_only, seed_order, dot_path);
        if (orbits->parsed()) return cmd_orbits(expr_text, opts, members, dot_path);
        if (homomesy->parsed()) return cmd_homomesy(expr_text, stat_text, opts);
        if (verify->parsed()) return cmd_verify(scope_text, opts);
        if (conjecture->parsed()) return cmd_conjecture(conj_name, budget, opts);
    } catch (const ics::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
