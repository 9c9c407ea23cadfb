#include "ccw/ramsey.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "ccw/error.hpp"
#include "ccw/oracles.hpp"
#include "ccw_generated/ramsey_table_data.hpp"

namespace ccw {

namespace {

std::string join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<int> split_key(const std::string& key) {
    std::vector<int> out;
    std::stringstream ss(key);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty()) {
            throw error(error_code::invalid_argument, "bad Ramsey table key \"" + key + "\"");
        }
        out.push_back(v);
    }
    return out;
}

std::size_t pair_count(int n) { return static_cast<std::size_t>(n) * (n - 1) / 2; }

bool has_clique_of(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int need) {
    if (need <= 0) return true;
    if (std::popcount(cand) < need) return false;
    while (cand) {
        const int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (has_clique_of(adj, cand & adj[v], need - 1)) return true;
    }
    return false;
}

}  // namespace

const char* to_string(answer_kind kind) noexcept {
    switch (kind) {
    case answer_kind::exact: return "exact";
    case answer_kind::range: return "range";
    case answer_kind::unknown: return "unknown";
    }
    return "unknown";
}

const char* to_string(verdict_status status) noexcept {
    switch (status) {
    case verdict_status::pass: return "pass";
    case verdict_status::fail: return "fail";
    case verdict_status::untestable: return "untestable";
    }
    return "untestable";
}

const ramsey_table& ramsey_table::defaults() {
    static const ramsey_table table = from_json(detail::default_ramsey_table);
    return table;
}

ramsey_table ramsey_table::from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(1, e.byte, e.what());
    }
    if (!doc.is_object()) throw error(error_code::invalid_argument, "Ramsey table must be a JSON object");

    ramsey_table table;
    for (const auto& [key, value] : doc.items()) {
        auto targets = split_key(key);
        if (!std::is_sorted(targets.begin(), targets.end()) || join(targets) != key) {
            throw error(error_code::invalid_argument, "Ramsey table key \"" + key + "\" is not normalised");
        }
        ramsey_entry entry;
        if (value.contains("exact")) {
            entry.exact = value.at("exact").get<int>();
            entry.lo = entry.hi = *entry.exact;
        } else {
            entry.lo = value.at("lo").get<int>();
            entry.hi = value.at("hi").get<int>();
            if (entry.lo > entry.hi) {
                throw error(error_code::invalid_argument, "Ramsey table range for \"" + key + "\" is empty");
            }
        }
        entry.source = value.value("source", "");
        if (value.contains("witness")) {
            const auto& w = value.at("witness");
            ramsey_witness witness;
            witness.n = w.at("n").get<int>();
            for (char ch : w.at("colors").get<std::string>()) {
                if (ch < '0' || ch > '9') {
                    throw error(error_code::invalid_argument, "witness colour must be a digit");
                }
                witness.colors.push_back(ch - '0');
            }
            entry.witness = std::move(witness);
        }
        table.entries_.emplace(key, std::move(entry));
    }
    return table;
}

const ramsey_entry* ramsey_table::find(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

std::vector<int> normalize_targets(const std::vector<int>& targets) {
    if (targets.empty()) throw error(error_code::invalid_query, "Ramsey query has no targets");
    for (int t : targets) {
        if (t < 1) throw error(error_code::invalid_query, "Ramsey target " + std::to_string(t) + " below 1");
    }
    std::vector<int> out;
    std::copy_if(targets.begin(), targets.end(), std::back_inserter(out), [](int t) { return t != 2; });
    std::sort(out.begin(), out.end());
    return out;
}

ramsey_answer ramsey_lookup(const ramsey_query& q, const ramsey_table& table) {
    const auto targets = normalize_targets(q.targets);
    auto exact = [](int v, std::string key) { return ramsey_answer{answer_kind::exact, v, v, std::move(key)}; };
    if (!targets.empty() && targets.front() == 1) return exact(1, "1");
    if (targets.empty()) return exact(2, "2");
    if (targets.size() == 1) return exact(targets.front(), join(targets));

    const auto key = join(targets);
    if (const auto* entry = table.find(key)) {
        if (entry->exact) return exact(*entry->exact, key);
        return {answer_kind::range, entry->lo, entry->hi, key};
    }
    return {answer_kind::unknown, 0, 0, key};
}

bool has_monochromatic_clique(int n, const std::vector<int>& colors, const std::vector<int>& targets) {
    if (n > 64) throw error(error_code::limit_exceeded, "colouring on more than 64 vertices");
    if (colors.size() != pair_count(n)) {
        throw error(error_code::invalid_argument, "colouring has the wrong number of pairs");
    }
    for (std::size_t c = 0; c < targets.size(); ++c) {
        std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
        std::size_t k = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j, ++k) {
                if (colors[k] == static_cast<int>(c)) {
                    adj[i] |= std::uint64_t{1} << j;
                    adj[j] |= std::uint64_t{1} << i;
                }
            }
        }
        const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        if (has_clique_of(adj, all, targets[c])) return true;
    }
    return false;
}

ramsey_verification verify_ramsey_tiny(const ramsey_query& q, const search_limits& limits,
                                       const ramsey_table& table) {
    ramsey_verification report;
    report.claimed = ramsey_lookup(q, table);
    report.targets = normalize_targets(q.targets);
    search_budget budget(limits, "verify_ramsey_tiny");

    if (!report.targets.empty() && report.targets.front() == 1) {
        report.lower_verified = report.upper_verified = true;
        report.notes.push_back("a target of 1 gives R = 1 trivially");
        return report;
    }
    auto targets = report.targets.empty() ? std::vector<int>{2} : report.targets;
    if (report.targets.size() != q.targets.size()) report.notes.push_back("targets equal to 2 dropped");
    if (report.claimed.kind == answer_kind::unknown) {
        report.notes.push_back("no table entry for R(" + report.claimed.key + ")");
        return report;
    }
    const int colors = static_cast<int>(targets.size());

    // Lower bound: a colouring of K_{lo-1} without the forbidden cliques.
    const int lower_n = report.claimed.lo - 1;
    std::optional<ramsey_witness> witness;
    if (colors == 1) {
        witness = ramsey_witness{lower_n, std::vector<int>(pair_count(lower_n), 0)};
    } else if (const auto* entry = table.find(report.claimed.key); entry && entry->witness) {
        witness = entry->witness;
    }
    if (!witness) {
        report.notes.push_back("no lower-bound witness colouring stored");
    } else if (witness->n != lower_n) {
        report.notes.push_back("witness colouring is on K_" + std::to_string(witness->n) + ", expected K_" +
                               std::to_string(lower_n));
    } else if (std::any_of(witness->colors.begin(), witness->colors.end(),
                           [&](int c) { return c < 0 || c >= colors; })) {
        report.notes.push_back("witness uses a colour outside the query");
    } else if (has_monochromatic_clique(lower_n, witness->colors, targets)) {
        report.notes.push_back("witness colouring contains a forbidden clique");
    } else {
        report.lower_verified = true;
    }

    // Upper bound: every colouring of K_hi has a forbidden clique.
    const int upper_n = report.claimed.hi;
    const std::size_t pairs = pair_count(upper_n);
    const double log_count = static_cast<double>(pairs) * std::log2(static_cast<double>(colors));
    if (upper_n > 64 || log_count > 62.0 ||
        std::pow(static_cast<double>(colors), static_cast<double>(pairs)) > static_cast<double>(limits.node_budget)) {
        report.upper_skipped = true;
        report.notes.push_back("LimitExceeded: " + std::to_string(colors) + "^" + std::to_string(pairs) +
                               " colourings of K_" + std::to_string(upper_n) + " exceed the node budget");
        return report;
    }
    std::vector<int> coloring(pairs, 0);
    for (;;) {
        budget.tick();
        if (!has_monochromatic_clique(upper_n, coloring, targets)) {
            report.notes.push_back("found a colouring of K_" + std::to_string(upper_n) +
                                   " avoiding every forbidden clique");
            return report;
        }
        std::size_t k = 0;
        while (k < pairs && ++coloring[k] == colors) coloring[k++] = 0;
        if (k == pairs) break;
    }
    report.upper_verified = true;
    return report;
}

ramsey_answer corollary_bound(int ccw, const ramsey_table& table) {
    if (ccw < 1) throw error(error_code::invalid_argument, "corollary bound needs ccw >= 1");
    std::vector<int> targets(static_cast<std::size_t>(ccw - 1), 3);
    targets.push_back(4);
    return ramsey_lookup({targets}, table);
}

intersection_verdict check_intersection_bound(const graph& g, const std::vector<graph>& factors,
                                              const ramsey_table& table) {
    if (factors.empty()) throw error(error_code::not_an_intersection, "no factors given");
    for (const auto& h : factors) {
        if (h.order() != g.order()) {
            throw error(error_code::not_an_intersection, "factor vertex count differs from the graph");
        }
    }
    if (!(intersect(factors) == g)) {
        throw error(error_code::not_an_intersection, "factor edge sets do not intersect to E(G)");
    }
    intersection_verdict v;
    v.s_graph = s_exact(g).s;
    std::vector<int> targets;
    for (const auto& h : factors) {
        v.s_factors.push_back(s_exact(h).s);
        targets.push_back(v.s_factors.back() + 1);
    }
    v.bound = ramsey_lookup({targets}, table);
    switch (v.bound.kind) {
    case answer_kind::exact:
        v.status = v.s_graph <= v.bound.value() - 1 ? verdict_status::pass : verdict_status::fail;
        break;
    case answer_kind::range:
        if (v.s_graph < v.bound.lo) v.status = verdict_status::pass;
        else if (v.s_graph >= v.bound.hi) v.status = verdict_status::fail;
        else v.status = verdict_status::untestable;
        break;
    case answer_kind::unknown:
        v.status = verdict_status::untestable;
        break;
    }
    return v;
}

}  // namespace ccw
