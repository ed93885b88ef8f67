#pragma once

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "congruent/rational.hpp"
#include "congruent/triangles.hpp"
#include "congruent/tunnell.hpp"

namespace congruent {

using json = nlohmann::ordered_json;

inline std::string status_name(Congruence c) {
    switch (c) {
        case Congruence::NotCongruent: return "not_congruent";
        case Congruence::CongruentWitnessed: return "congruent_witnessed";
        case Congruence::TunnellPositiveUnverified: return "tunnell_positive_unverified";
    }
    return "?";
}

inline Congruence status_from_name(const std::string& s) {
    if (s == "not_congruent") return Congruence::NotCongruent;
    if (s == "congruent_witnessed") return Congruence::CongruentWitnessed;
    if (s == "tunnell_positive_unverified") return Congruence::TunnellPositiveUnverified;
    throw std::invalid_argument("unknown status: " + s);
}

inline json triangle_to_json(const RationalTriangle& t) {
    return json{{"q", to_string(t.q)}, {"a", to_string(t.a)}, {"b", to_string(t.b)}, {"c", to_string(t.c)}};
}

inline RationalTriangle triangle_from_json(const json& j) {
    return RationalTriangle{rat_from_string(j.at("q").get<std::string>()),
                            rat_from_string(j.at("a").get<std::string>()),
                            rat_from_string(j.at("b").get<std::string>()),
                            rat_from_string(j.at("c").get<std::string>())};
}

// One classification outcome, as cached and as printed by `classify`.
struct ResultRecord {
    Int n;                          // square-free class representative
    std::optional<Int> reduced_from;  // original input when it was not square-free
    TunnellCounts counts;
    long l_bullet = 0;
    CongruenceStatus status;
    long witness_bound = 0;
    std::string computed_at;  // ISO-8601 UTC; excluded from golden comparisons
};

inline std::string now_utc_iso8601() {
    auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Non-square-free inputs are first reduced to their square-free class
// representative; the reduction is reported on the record.
inline ResultRecord make_record(const Int& input, long witness_bound) {
    if (input < 1) throw std::domain_error("classify: n must be >= 1");
    ResultRecord r;
    SquareFreeSplit split = squarefree_split(input);
    r.n = split.squarefree_part;
    if (split.square_root_part != 1) r.reduced_from = input;
    r.counts = tunnell_counts(r.n);
    r.l_bullet = l_bullet_of(r.counts);
    r.status = classify(r.n, witness_bound);
    r.witness_bound = witness_bound;
    r.computed_at = now_utc_iso8601();
    return r;
}

inline json record_to_json(const ResultRecord& r) {
    json j;
    j["n"] = r.n.get_si();
    if (r.reduced_from) j["reduced_from"] = r.reduced_from->get_si();
    j["counts"] = {{"A", r.counts.A}, {"B", r.counts.B}, {"C", r.counts.C}, {"D", r.counts.D},
                   {"parity", r.counts.even ? "even" : "odd"}};
    j["l_bullet"] = r.l_bullet;
    j["status"] = status_name(r.status.kind);
    if (r.status.witness)
        j["witness"] = triangle_to_json(*r.status.witness);
    else
        j["witness"] = nullptr;
    j["witness_bound"] = r.witness_bound;
    j["computed_at"] = r.computed_at;
    return j;
}

inline ResultRecord record_from_json(const json& j) {
    ResultRecord r;
    r.n = Int(j.at("n").get<long>());
    if (j.contains("reduced_from")) r.reduced_from = Int(j.at("reduced_from").get<long>());
    const json& c = j.at("counts");
    r.counts.n = r.n;
    r.counts.A = c.at("A").get<long>();
    r.counts.B = c.at("B").get<long>();
    r.counts.C = c.at("C").get<long>();
    r.counts.D = c.at("D").get<long>();
    r.counts.even = c.at("parity").get<std::string>() == "even";
    r.l_bullet = j.at("l_bullet").get<long>();
    r.status.kind = status_from_name(j.at("status").get<std::string>());
    if (!j.at("witness").is_null()) r.status.witness = triangle_from_json(j.at("witness"));
    r.witness_bound = j.at("witness_bound").get<long>();
    r.computed_at = j.value("computed_at", "");
    return r;
}

// Append-only JSON-lines cache. Corrupt lines are skipped with a warning,
// never fatal; a missing file is an empty cache.
class ResultCache {
public:
    explicit ResultCache(std::string path) : path_(std::move(path)) {}

    static std::string default_path() {
        if (const char* env = std::getenv("CONGRUENT_CACHE")) return env;
        return ".congruent-cache.jsonl";
    }

    void put(const ResultRecord& r) const {
        std::ofstream out(path_, std::ios::app);
        if (!out) throw std::runtime_error("cache not writable: " + path_);
        out << record_to_json(r).dump() << "\n";
    }

    // Best cached row for n whose bound covers the query: search results at a
    // larger bound are strictly more informative, so any cached bound >= the
    // requested one satisfies the query.
    std::optional<ResultRecord> get(const Int& n, long witness_bound) const {
        std::ifstream in(path_);
        if (!in) return std::nullopt;
        std::optional<ResultRecord> best;
        std::string line;
        size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (line.empty()) continue;
            try {
                ResultRecord r = record_from_json(json::parse(line));
                if (r.n == n && r.witness_bound >= witness_bound &&
                    (!best || r.witness_bound > best->witness_bound))
                    best = std::move(r);
            } catch (const std::exception& e) {
                std::cerr << "warning: skipping corrupt cache line " << lineno << " in " << path_
                          << ": " << e.what() << "\n";
            }
        }
        return best;
    }

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

// --- table rendering (shared by the CLI and the golden tests) ---

inline json table_row_json(const KernelRow& row) {
    json j;
    j["n"] = row.counts.n.get_si();
    j["A"] = row.counts.A;
    j["B"] = row.counts.B;
    j["C"] = row.counts.C;
    j["D"] = row.counts.D;
    j["l_bullet"] = row.l_bullet;
    j["status"] = status_name(row.status.kind);
    if (row.status.witness)
        j["witness"] = triangle_to_json(*row.status.witness);
    else
        j["witness"] = nullptr;
    return j;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// RFC-4180 rows, LF endings, stable column order.
inline std::string render_table_csv(const std::vector<KernelRow>& rows) {
    std::ostringstream out;
    out << "n,A,B,C,D,l_bullet,status,witness_a,witness_b,witness_c\n";
    for (const auto& row : rows) {
        out << row.counts.n << ',' << row.counts.A << ',' << row.counts.B << ',' << row.counts.C
            << ',' << row.counts.D << ',' << row.l_bullet << ',' << status_name(row.status.kind);
        if (row.status.witness) {
            out << ',' << csv_quote(to_string(row.status.witness->a)) << ','
                << csv_quote(to_string(row.status.witness->b)) << ','
                << csv_quote(to_string(row.status.witness->c));
        } else {
            out << ",,,";
        }
        out << '\n';
    }
    return out.str();
}

// JSON-lines, one row object per line.
inline std::string render_table_jsonl(const std::vector<KernelRow>& rows) {
    std::ostringstream out;
    for (const auto& row : rows) out << table_row_json(row).dump() << '\n';
    return out.str();
}

inline std::string render_table_human(const std::vector<KernelRow>& rows) {
    std::ostringstream out;
    out << "   n     A     B     C     D    L.  status\n";
    for (const auto& row : rows) {
        char line[96];
        std::snprintf(line, sizeof line, "%4ld %5ld %5ld %5ld %5ld %5ld  ",
                      row.counts.n.get_si(), row.counts.A, row.counts.B, row.counts.C,
                      row.counts.D, row.l_bullet);
        out << line;
        switch (row.status.kind) {
            case Congruence::NotCongruent: out << "not congruent"; break;
            case Congruence::CongruentWitnessed: {
                const auto& w = *row.status.witness;
                out << "congruent  [" << to_string(w.q) << "|" << to_string(w.a) << ","
                    << to_string(w.b) << "," << to_string(w.c) << "]";
                break;
            }
            case Congruence::TunnellPositiveUnverified: out << "congruent if BSD"; break;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace congruent
