#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rainbowlab/constructions.hpp"
#include "rainbowlab/extremal.hpp"
#include "rainbowlab/rainbow.hpp"
#include "rainbowlab/verify.hpp"

namespace rainbowlab::cli {

enum class Format { table, json, csv };

std::optional<Format> parse_format(const std::string& text);

// Result of `rainbowlab rb`.
struct RbRecord {
    std::string graph_id;
    std::string family;
    int n = 0;
    int k = 0;
    int m = 0;
    int f_value = 0;
    int rb_value = 0;
    std::optional<int> formula_value;
    std::string formula_source;
    std::optional<bool> agrees;  // null when no closed form applies
    std::uint64_t colorings_examined = 0;
    std::int64_t elapsed_ms = 0;
    std::vector<int> extremal_coloring;

    friend bool operator==(const RbRecord&, const RbRecord&) = default;
};

nlohmann::json to_json(const RbRecord& r);
RbRecord rb_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const VerificationRecord& r);
VerificationRecord verification_record_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ExtResult& r);
nlohmann::json to_json(const ConstructionReport& r);
nlohmann::json to_json(const std::optional<RainbowWitness>& w);

void write_rb(std::ostream& out, const RbRecord& r, Format f);
void write_ext(std::ostream& out, const ExtResult& r, Format f);
void write_check(std::ostream& out, const std::optional<RainbowWitness>& w, Format f);
void write_construction(std::ostream& out, const ConstructionReport& r, Format f);
// Summary goes to `out` for table and json formats, to `side` for csv so the
// csv stays machine-readable.
void write_verification(std::ostream& out, std::ostream& side, const std::vector<VerificationRecord>& records,
                        Format f);

// Allowlist entries name discrepancies that should not fail a sweep:
//
//   # theorem family key=value ...
//   T3.6 cycle n=4 m=2
//
// Keys n, k, m, seed are optional; a missing key matches anything.
struct AllowEntry {
    TheoremId theorem;
    std::string family;
    std::optional<int> n, k, m;
    std::optional<std::uint64_t> seed;

    bool matches(const VerificationRecord& r) const;
};

std::vector<AllowEntry> parse_allowlist(std::istream& in);
void apply_allowlist(std::vector<VerificationRecord>& records, const std::vector<AllowEntry>& allow);

}  // namespace rainbowlab::cli
