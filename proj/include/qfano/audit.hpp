#pragma once

// Golden-file audit: regenerate every table by computation, then compare
// against fixtures transcribed from the published tables.  Generation never
// reads the golden data; the two phases stay separate.

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfano/tables.hpp"

namespace qfano {

enum class AuditStatus { match, mismatch, flagged };

inline const char* to_string(AuditStatus s) {
    switch (s) {
        case AuditStatus::match: return "match";
        case AuditStatus::mismatch: return "mismatch";
        case AuditStatus::flagged: return "flagged";
    }
    return "?";
}

struct AuditDiff {
    std::string row_key;
    std::string expected;
    std::string computed;

    friend bool operator==(const AuditDiff& a, const AuditDiff& b) {
        return a.row_key == b.row_key && a.expected == b.expected && a.computed == b.computed;
    }
};

struct AuditResult {
    std::string table_id;
    AuditStatus status = AuditStatus::match;
    std::vector<AuditDiff> diffs;
    std::vector<std::string> notes;

    friend bool operator==(const AuditResult& a, const AuditResult& b) {
        return a.table_id == b.table_id && a.status == b.status && a.diffs == b.diffs &&
               a.notes == b.notes;
    }
};

namespace detail {

inline std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

// The transcription of the (2,8) divisor prints Gamma.D = -1 where the Gram
// matrix gives +1; the contradiction only needs a nonzero pairing, so the
// recomputed value is kept and the discrepancy is flagged, not failed.
struct KnownDiscrepancy {
    std::string table_id;
    std::string row_key;
    std::string column;
    std::string printed;
    std::string computed;
};

inline const std::vector<KnownDiscrepancy>& known_discrepancies() {
    static const std::vector<KnownDiscrepancy> known = {
        {"obstructions", "2,8,2,7", "gamma_dot", "-1", "1"},
    };
    return known;
}

}  // namespace detail

// Golden fixtures are UTF-8 text, one CSV row per line, '#' comments.  The
// first data line is the header.
inline Document load_golden(const std::string& path, const std::string& table_id) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden fixture: " + path);
    Document doc;
    doc.table_id = table_id;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto cells = detail::split_csv(line);
        if (!have_header) {
            doc.header = std::move(cells);
            have_header = true;
        } else {
            doc.rows.push_back(std::move(cells));
        }
    }
    if (!have_header) throw std::runtime_error("golden fixture has no header: " + path);
    return doc;
}

// Compare a regenerated table against its golden transcription.  Row keys are
// the leading columns up to and including the first non-numeric-looking
// column boundary; here we simply use the full row index plus leading cells.
inline AuditResult audit_table(const Document& computed, const Document& golden) {
    AuditResult res;
    res.table_id = computed.table_id;

    auto key_of = [](const std::vector<std::string>& row, std::size_t keep) {
        std::string k;
        for (std::size_t i = 0; i < keep && i < row.size(); ++i) {
            if (i) k += ",";
            k += row[i];
        }
        return k;
    };
    const std::size_t key_cols = computed.table_id == "obstructions" ? 4
                                 : computed.table_id == "sarkisov"   ? 4
                                 : computed.table_id == "dp4"        ? 3
                                                                     : 2;

    if (computed.header != golden.header) {
        res.status = AuditStatus::mismatch;
        res.diffs.push_back({"header", render_csv(Document{golden.table_id, golden.header, {}}),
                             render_csv(Document{computed.table_id, computed.header, {}})});
        return res;
    }

    const std::size_t n = std::max(computed.rows.size(), golden.rows.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (i >= computed.rows.size()) {
            res.diffs.push_back({key_of(golden.rows[i], key_cols),
                                 key_of(golden.rows[i], golden.rows[i].size()), "<absent>"});
            continue;
        }
        if (i >= golden.rows.size()) {
            res.diffs.push_back({key_of(computed.rows[i], key_cols), "<absent>",
                                 key_of(computed.rows[i], computed.rows[i].size())});
            continue;
        }
        const auto& crow = computed.rows[i];
        const auto& grow = golden.rows[i];
        if (crow == grow) continue;
        // cell-level comparison so the known transcription notes can pass through
        bool all_known = crow.size() == grow.size();
        std::vector<std::string> notes;
        if (all_known) {
            for (std::size_t col = 0; col < crow.size(); ++col) {
                if (crow[col] == grow[col]) continue;
                bool known = false;
                for (const auto& kd : detail::known_discrepancies()) {
                    if (kd.table_id == computed.table_id && kd.row_key == key_of(crow, key_cols) &&
                        col < computed.header.size() && computed.header[col] == kd.column &&
                        grow[col] == kd.printed && crow[col] == kd.computed) {
                        known = true;
                        notes.push_back(computed.table_id + " row " + kd.row_key + ": " + kd.column +
                                        " printed " + kd.printed + ", recomputed " + kd.computed);
                        break;
                    }
                }
                if (!known) {
                    all_known = false;
                    break;
                }
            }
        }
        if (all_known && !notes.empty()) {
            for (auto& note : notes) res.notes.push_back(std::move(note));
        } else {
            res.diffs.push_back({key_of(grow, key_cols), key_of(grow, grow.size()),
                                 key_of(crow, crow.size())});
        }
    }

    if (!res.diffs.empty())
        res.status = AuditStatus::mismatch;
    else if (!res.notes.empty())
        res.status = AuditStatus::flagged;
    else
        res.status = AuditStatus::match;
    return res;
}

// Run the full audit against a directory of fixtures named <table_id>.csv.
inline std::vector<AuditResult> audit_all(const std::string& golden_dir) {
    std::vector<AuditResult> results;
    for (const auto& id : table_ids()) {
        const Document computed = generate_table(id);
        const Document golden = load_golden(golden_dir + "/" + id + ".csv", id);
        results.push_back(audit_table(computed, golden));
    }
    return results;
}

inline bool audit_passed(const std::vector<AuditResult>& results) {
    for (const auto& r : results)
        if (r.status == AuditStatus::mismatch) return false;
    return true;
}

}  // namespace qfano
