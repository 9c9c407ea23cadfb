#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccw/graph.hpp"
#include "ccw/limits.hpp"

namespace ccw {

struct ramsey_query {
    std::vector<int> targets;
};

enum class answer_kind { exact, range, unknown };

const char* to_string(answer_kind kind) noexcept;

struct ramsey_answer {
    answer_kind kind = answer_kind::unknown;
    int lo = 0;  // meaningful for exact and range
    int hi = 0;
    std::string key;  // normalised targets, e.g. "3,4"

    int value() const noexcept { return lo; }
    friend bool operator==(const ramsey_answer&, const ramsey_answer&) = default;
};

// Edge colouring of K_n with colours indexing the normalised targets; pairs
// (i, j), i < j, in lexicographic order.
struct ramsey_witness {
    int n = 0;
    std::vector<int> colors;
};

struct ramsey_entry {
    std::optional<int> exact;
    int lo = 0;
    int hi = 0;
    std::string source;
    std::optional<ramsey_witness> witness;
};

// Known Ramsey numbers keyed by sorted targets ("3,3,4").
class ramsey_table {
public:
    static const ramsey_table& defaults();
    static ramsey_table from_json(const std::string& text);

    const ramsey_entry* find(const std::string& key) const;
    const std::map<std::string, ramsey_entry>& entries() const { return entries_; }

private:
    std::map<std::string, ramsey_entry> entries_;
};

// Sorted targets with every 2 removed. Throws invalid_query on an empty list
// or a target below 1.
std::vector<int> normalize_targets(const std::vector<int>& targets);

ramsey_answer ramsey_lookup(const ramsey_query& q, const ramsey_table& table = ramsey_table::defaults());

struct ramsey_verification {
    std::vector<int> targets;  // normalised
    ramsey_answer claimed;
    bool lower_verified = false;
    bool upper_verified = false;
    bool upper_skipped = false;
    std::vector<std::string> notes;

    // True when nothing checked contradicts the claim and the lower bound held.
    bool consistent() const noexcept { return lower_verified && (upper_verified || upper_skipped); }
};

// Validates the lower-bound witness colouring of K_{R-1} and, when
// c^(R choose 2) fits the node budget, enumerates every colouring of K_R.
ramsey_verification verify_ramsey_tiny(const ramsey_query& q,
                                       const search_limits& limits = default_limits::ramsey,
                                       const ramsey_table& table = ramsey_table::defaults());

// True when the colouring of K_n has a clique of size targets[c] in colour c.
bool has_monochromatic_clique(int n, const std::vector<int>& colors, const std::vector<int>& targets);

// R(3, ..., 3, 4) with ccw - 1 threes; s(G) <= value - 1.
ramsey_answer corollary_bound(int ccw, const ramsey_table& table = ramsey_table::defaults());

enum class verdict_status { pass, fail, untestable };

const char* to_string(verdict_status status) noexcept;

struct intersection_verdict {
    verdict_status status = verdict_status::untestable;
    int s_graph = 0;
    std::vector<int> s_factors;
    ramsey_answer bound;  // R(s(H_1) + 1, ..., s(H_d) + 1)
};

// Checks s(g) < R(s(H_1) + 1, ..., s(H_d) + 1). Throws not_an_intersection
// unless the factors' edge sets intersect to E(g).
intersection_verdict check_intersection_bound(const graph& g, const std::vector<graph>& factors,
                                              const ramsey_table& table = ramsey_table::defaults());

}  // namespace ccw
