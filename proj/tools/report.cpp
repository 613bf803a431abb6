#include "report.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "rainbowlab/errors.hpp"

namespace rainbowlab::cli {

using nlohmann::json;

std::optional<Format> parse_format(const std::string& text) {
    if (text == "table") return Format::table;
    if (text == "json") return Format::json;
    if (text == "csv") return Format::csv;
    return std::nullopt;
}

namespace {

template <typename T>
json nullable(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char ch : s) {
        out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    }
    return out + "\"";
}

template <typename T>
std::string opt_text(const std::optional<T>& v) {
    if (!v) {
        return "-";
    }
    std::ostringstream ss;
    ss << *v;
    return ss.str();
}

std::string join(const std::vector<int>& values, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        out += (i ? sep : "") + std::to_string(values[i]);
    }
    return out;
}

}  // namespace

json to_json(const RbRecord& r) {
    return json{{"graph_id", r.graph_id},
                {"family", r.family},
                {"n", r.n},
                {"k", r.k},
                {"m", r.m},
                {"f_value", r.f_value},
                {"rb_value", r.rb_value},
                {"formula_value", nullable(r.formula_value)},
                {"formula_source", r.formula_source},
                {"agrees", nullable(r.agrees)},
                {"colorings_examined", r.colorings_examined},
                {"elapsed_ms", r.elapsed_ms},
                {"extremal_coloring", r.extremal_coloring}};
}

RbRecord rb_record_from_json(const json& j) {
    RbRecord r;
    r.graph_id = j.at("graph_id").get<std::string>();
    r.family = j.at("family").get<std::string>();
    r.n = j.at("n").get<int>();
    r.k = j.at("k").get<int>();
    r.m = j.at("m").get<int>();
    r.f_value = j.at("f_value").get<int>();
    r.rb_value = j.at("rb_value").get<int>();
    r.formula_value = optional_field<int>(j, "formula_value");
    r.formula_source = j.at("formula_source").get<std::string>();
    r.agrees = optional_field<bool>(j, "agrees");
    r.colorings_examined = j.at("colorings_examined").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    r.extremal_coloring = j.value("extremal_coloring", std::vector<int>{});
    return r;
}

json to_json(const VerificationRecord& r) {
    return json{{"theorem", to_string(r.theorem)},
                {"family", r.instance.family},
                {"n", r.instance.n},
                {"k", r.instance.k},
                {"m", r.instance.m},
                {"seed", r.instance.seed},
                {"oracle_value", nullable(r.oracle_value)},
                {"claimed_value", nullable(r.claimed_value)},
                {"claimed_lower", r.claimed_bounds ? json(r.claimed_bounds->lower) : json(nullptr)},
                {"claimed_upper", r.claimed_bounds ? json(r.claimed_bounds->upper) : json(nullptr)},
                {"status", to_string(r.status)},
                {"acknowledged", r.acknowledged},
                {"elapsed_ms", r.elapsed_ms},
                {"note", r.note}};
}

VerificationRecord verification_record_from_json(const json& j) {
    VerificationRecord r;
    const auto theorem = parse_theorem_id(j.at("theorem").get<std::string>());
    const auto status = parse_status(j.at("status").get<std::string>());
    if (!theorem || !status) {
        throw ParseError("unknown theorem id or status in record", 0);
    }
    r.theorem = *theorem;
    r.status = *status;
    r.instance.family = j.at("family").get<std::string>();
    r.instance.n = j.at("n").get<int>();
    r.instance.k = j.at("k").get<int>();
    r.instance.m = j.at("m").get<int>();
    r.instance.seed = j.at("seed").get<std::uint64_t>();
    r.oracle_value = optional_field<int>(j, "oracle_value");
    r.claimed_value = optional_field<int>(j, "claimed_value");
    const auto lo = optional_field<int>(j, "claimed_lower");
    const auto hi = optional_field<int>(j, "claimed_upper");
    if (lo && hi) {
        r.claimed_bounds = Bounds{*lo, *hi};
    }
    r.acknowledged = j.value("acknowledged", false);
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    r.note = j.value("note", std::string{});
    return r;
}

json to_json(const ExtResult& r) {
    return json{{"value", r.value}, {"method", to_string(r.method)}, {"witness_edges", r.witness_edges}};
}

json to_json(const ConstructionReport& r) {
    return json{{"m", r.m},
                {"edges", r.graph.edge_count()},
                {"colors_used", r.colors_used},
                {"claimed_f_lower_bound", r.claimed_f_lower_bound},
                {"rainbow_free_certified", r.rainbow_free_certified},
                {"provenance", r.provenance},
                {"coloring", std::vector<int>(r.coloring.colors().begin(), r.coloring.colors().end())}};
}

json to_json(const std::optional<RainbowWitness>& w) {
    if (!w) {
        return json{{"rainbow", false}};
    }
    return json{{"rainbow", true}, {"edges", w->edges}, {"colors", w->colors}};
}

void write_rb(std::ostream& out, const RbRecord& r, Format f) {
    switch (f) {
        case Format::json:
            out << to_json(r).dump(2) << '\n';
            return;
        case Format::csv:
            out << "graph_id,family,n,k,m,f_value,rb_value,formula_value,formula_source,agrees,colorings_examined,"
                   "elapsed_ms\n";
            out << csv_escape(r.graph_id) << ',' << r.family << ',' << r.n << ',' << r.k << ',' << r.m << ','
                << r.f_value << ',' << r.rb_value << ',' << (r.formula_value ? std::to_string(*r.formula_value) : "")
                << ',' << r.formula_source << ',' << (r.agrees ? (*r.agrees ? "true" : "false") : "") << ','
                << r.colorings_examined << ',' << r.elapsed_ms << '\n';
            return;
        case Format::table:
            out << "graph          " << r.graph_id << " (" << r.family << ", n=" << r.n << ", k=" << r.k << ")\n"
                << "m              " << r.m << '\n'
                << "f_value        " << r.f_value << '\n'
                << "rb_value       " << r.rb_value << '\n'
                << "formula        " << opt_text(r.formula_value)
                << (r.formula_source.empty() ? "" : " [" + r.formula_source + "]") << '\n'
                << "agrees         " << (r.agrees ? (*r.agrees ? "yes" : "NO") : "-") << '\n'
                << "extremal       " << join(r.extremal_coloring, " ") << '\n'
                << "examined       " << r.colorings_examined << " partial colorings in " << r.elapsed_ms << " ms\n";
            return;
    }
}

void write_ext(std::ostream& out, const ExtResult& r, Format f) {
    switch (f) {
        case Format::json:
            out << to_json(r).dump(2) << '\n';
            return;
        case Format::csv:
            out << "value,method,witness_edges\n"
                << r.value << ',' << to_string(r.method) << ',' << join(r.witness_edges, " ") << '\n';
            return;
        case Format::table:
            out << "ext      " << r.value << '\n'
                << "method   " << to_string(r.method) << '\n'
                << "witness  " << join(r.witness_edges, " ") << '\n';
            return;
    }
}

void write_check(std::ostream& out, const std::optional<RainbowWitness>& w, Format f) {
    switch (f) {
        case Format::json:
            out << to_json(w).dump(2) << '\n';
            return;
        case Format::csv:
            out << "rainbow,edges,colors\n";
            out << (w ? "true" : "false") << ',' << (w ? join(w->edges, " ") : "") << ','
                << (w ? join(w->colors, " ") : "") << '\n';
            return;
        case Format::table:
            if (!w) {
                out << "none\n";
                return;
            }
            out << "edges   " << join(w->edges, " ") << '\n' << "colors  " << join(w->colors, " ") << '\n';
            return;
    }
}

void write_construction(std::ostream& out, const ConstructionReport& r, Format f) {
    const std::vector<int> colors(r.coloring.colors().begin(), r.coloring.colors().end());
    switch (f) {
        case Format::json:
            out << to_json(r).dump(2) << '\n';
            return;
        case Format::csv:
            out << "m,edges,colors_used,claimed_f_lower_bound,rainbow_free_certified,coloring\n"
                << r.m << ',' << r.graph.edge_count() << ',' << r.colors_used << ',' << r.claimed_f_lower_bound << ','
                << (r.rainbow_free_certified ? "true" : "false") << ',' << join(colors, " ") << '\n';
            return;
        case Format::table:
            out << "construction   " << r.provenance << '\n'
                << "m              " << r.m << '\n'
                << "coloring       " << join(colors, " ") << '\n'
                << "colors_used    " << r.colors_used << '\n'
                << "f lower bound  " << r.claimed_f_lower_bound << '\n'
                << "certified      " << (r.rainbow_free_certified ? "rainbow-free" : "FAILED (rainbow matching found)")
                << '\n';
            return;
    }
}

void write_verification(std::ostream& out, std::ostream& side, const std::vector<VerificationRecord>& records,
                        Format f) {
    const Summary s = summarize(records);
    switch (f) {
        case Format::json: {
            json list = json::array();
            for (const auto& r : records) {
                list.push_back(to_json(r));
            }
            out << json{{"records", list},
                        {"summary",
                         {{"matches", s.matches},
                          {"within_bounds", s.within_bounds},
                          {"discrepancies", s.discrepancies},
                          {"not_applicable", s.not_applicable},
                          {"acknowledged", s.acknowledged}}}}
                       .dump(2)
                << '\n';
            return;
        }
        case Format::csv:
            out << "theorem,family,n,k,m,seed,oracle_value,claimed_value,claimed_lower,claimed_upper,status,"
                   "acknowledged,elapsed_ms,note\n";
            for (const auto& r : records) {
                out << to_string(r.theorem) << ',' << r.instance.family << ',' << r.instance.n << ',' << r.instance.k
                    << ',' << r.instance.m << ',' << r.instance.seed << ','
                    << (r.oracle_value ? std::to_string(*r.oracle_value) : "") << ','
                    << (r.claimed_value ? std::to_string(*r.claimed_value) : "") << ','
                    << (r.claimed_bounds ? std::to_string(r.claimed_bounds->lower) : "") << ','
                    << (r.claimed_bounds ? std::to_string(r.claimed_bounds->upper) : "") << ',' << to_string(r.status)
                    << ',' << (r.acknowledged ? "true" : "false") << ',' << r.elapsed_ms << ',' << csv_escape(r.note)
                    << '\n';
            }
            side << summary_line(s) << '\n';
            return;
        case Format::table:
            out << std::left << std::setw(10) << "theorem" << std::setw(18) << "family" << std::setw(4) << "n"
                << std::setw(4) << "k" << std::setw(4) << "m" << std::setw(6) << "seed" << std::setw(8) << "oracle"
                << std::setw(10) << "claim" << std::setw(16) << "status" << "ms\n";
            for (const auto& r : records) {
                std::string claim = r.claimed_value ? std::to_string(*r.claimed_value)
                                    : r.claimed_bounds ? std::to_string(r.claimed_bounds->lower) + ".." +
                                                             std::to_string(r.claimed_bounds->upper)
                                                       : "-";
                std::string status = to_string(r.status) + (r.acknowledged ? "*" : "");
                out << std::left << std::setw(10) << to_string(r.theorem) << std::setw(18) << r.instance.family
                    << std::setw(4) << r.instance.n << std::setw(4) << r.instance.k << std::setw(4) << r.instance.m
                    << std::setw(6) << r.instance.seed << std::setw(8) << opt_text(r.oracle_value) << std::setw(10)
                    << claim << std::setw(16) << status << r.elapsed_ms;
                if (!r.note.empty()) {
                    out << "  # " << r.note;
                }
                out << '\n';
            }
            out << summary_line(s) << '\n';
            return;
    }
}

bool AllowEntry::matches(const VerificationRecord& r) const {
    return r.theorem == theorem && r.instance.family == family && (!n || *n == r.instance.n) &&
           (!k || *k == r.instance.k) && (!m || *m == r.instance.m) && (!seed || *seed == r.instance.seed);
}

std::vector<AllowEntry> parse_allowlist(std::istream& in) {
    std::vector<AllowEntry> out;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream ss(line);
        std::string theorem;
        if (!(ss >> theorem)) {
            continue;
        }
        const auto id = parse_theorem_id(theorem);
        if (!id) {
            throw ParseError("unknown theorem id '" + theorem + "'", line_no);
        }
        AllowEntry e{*id, {}, {}, {}, {}, {}};
        if (!(ss >> e.family)) {
            throw ParseError("allowlist entry needs a family", line_no);
        }
        for (std::string kv; ss >> kv;) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                throw ParseError("expected key=value, got '" + kv + "'", line_no);
            }
            const std::string key = kv.substr(0, eq);
            const std::string value = kv.substr(eq + 1);
            try {
                if (key == "n") e.n = std::stoi(value);
                else if (key == "k") e.k = std::stoi(value);
                else if (key == "m") e.m = std::stoi(value);
                else if (key == "seed") e.seed = std::stoull(value);
                else throw ParseError("unknown key '" + key + "'", line_no);
            } catch (const std::logic_error&) {
                throw ParseError("bad value in '" + kv + "'", line_no);
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

void apply_allowlist(std::vector<VerificationRecord>& records, const std::vector<AllowEntry>& allow) {
    for (auto& r : records) {
        if (r.status != Status::discrepancy) {
            continue;
        }
        for (const auto& e : allow) {
            if (e.matches(r)) {
                r.acknowledged = true;
                break;
            }
        }
    }
}

}  // namespace rainbowlab::cli
