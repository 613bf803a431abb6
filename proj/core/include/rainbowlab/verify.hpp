#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rainbowlab/extremal.hpp"
#include "rainbowlab/graph.hpp"

namespace rainbowlab {

// Sweep identifiers accepted by `rainbowlab verify`.
//   T2_3  ext of k-regular bipartite graphs equals k(m-1)
//   T2_4  rb of k-regular bipartite graphs lies in [k(m-2)+2, k(m-1)+1]
//   T2_5  rb of k-regular bipartite graphs equals k(m-2)+2 for k >= 3, n > 3(m-1)
//   T3_1  rb of paths lies in [2m-2, 2m-1]
//   T3_2  rb(P_n) <= rb(C_n), and more generally rb(G) <= rb(G with two vertices merged)
//   T3_4  rb of cycles lies in [2m-2, 2m-1]
//   T3_5  rb of paths: 2m-1 if n <= 3m-3, else 2m-2
//   T3_6  rb of cycles: same closed form as paths
enum class TheoremId { T2_3, T2_4, T2_5, T3_1, T3_2, T3_4, T3_5, T3_6 };

std::string to_string(TheoremId id);
// Accepts "T2.3", "t2.3", "T2_3"; T3_2 also answers to "T3.2/C3.3" and "C3.3".
std::optional<TheoremId> parse_theorem_id(std::string_view text);
const std::vector<TheoremId>& all_theorems();

enum class Status { match, within_bounds, discrepancy, not_applicable };

std::string to_string(Status status);
std::optional<Status> parse_status(std::string_view text);

struct Instance {
    std::string family;  // path, cycle, circulant, random_regular, complete_bipartite, identified_random
    int n = 0;
    int k = 0;
    int m = 0;
    std::uint64_t seed = 0;

    friend bool operator==(const Instance&, const Instance&) = default;
};

struct VerificationRecord {
    TheoremId theorem = TheoremId::T2_3;
    Instance instance;
    std::optional<int> oracle_value;
    std::optional<int> claimed_value;    // exact claims
    std::optional<Bounds> claimed_bounds;  // bound-type claims
    Status status = Status::not_applicable;
    bool acknowledged = false;  // discrepancy listed in an allowlist
    std::int64_t elapsed_ms = 0;
    std::string note;

    friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

struct IntRange {
    int lo = 0;
    int hi = -1;

    bool contains(int v) const { return lo <= v && v <= hi; }
};

// "a..b" or a single integer "a".
std::optional<IntRange> parse_range(std::string_view text);

struct VerifyOptions {
    IntRange n{3, 5};
    IntRange k{2, 5};
    IntRange m{2, 3};
    // Realizations of each k-regular cell: the circulant graph plus
    // samples-1 seeded random ones.
    int samples = 5;
    std::uint64_t seed = 1;
    int workers = 1;  // instances in flight; each search runs single-threaded
    SearchLimits limits;
};

// One record per instance, ordered by (n, k, m, sample) regardless of how
// the work was scheduled.
std::vector<VerificationRecord> verify_theorem(TheoremId id, const VerifyOptions& options);

// rb(P_n) <= rb(H) where H is P_n with its ends merged (a copy of C_n), for
// every (n, m) in range with m <= floor(n/2); then `random_samples` random
// small graphs with a random admissible pair of vertices merged.
std::vector<VerificationRecord> monotonicity_sweep(const VerifyOptions& options, int random_samples);

struct Summary {
    int matches = 0;
    int within_bounds = 0;
    int discrepancies = 0;
    int not_applicable = 0;
    int acknowledged = 0;  // discrepancies covered by an allowlist

    bool gated_failure() const { return discrepancies > acknowledged; }
};

Summary summarize(const std::vector<VerificationRecord>& records);

// "matches/within_bounds/discrepancies/not_applicable" line.
std::string summary_line(const Summary& s);

// Closed-form rainbow number claimed for a graph family, if any.
struct FormulaClaim {
    int value = 0;
    std::string source;  // theorem id the value comes from
    bool disputed = false;
};

std::optional<FormulaClaim> formula_for(std::string_view family, int n, int k, int m);

}  // namespace rainbowlab
