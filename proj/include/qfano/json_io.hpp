#pragma once

// JSON adapters with stable snake_case keys.  Every record type round-trips:
// from_json(to_json(x)) == x.

#include <json.hpp>

#include "qfano/audit.hpp"
#include "qfano/classifier.hpp"
#include "qfano/sarkisov.hpp"
#include "qfano/tables.hpp"

namespace qfano {

using nlohmann::json;

// --- enums ---------------------------------------------------------------------

namespace detail {
template <typename E>
E enum_from_string(const std::string& s, std::initializer_list<E> values, const char* what) {
    for (E v : values)
        if (s == to_string(v)) return v;
    throw std::invalid_argument(std::string("bad ") + what + ": " + s);
}
}  // namespace detail

inline void to_json(json& j, const ContradictoryDivisor& d) {
    j = json{{"cg", d.cg},          {"a", d.coeffs[0]},      {"b", d.coeffs[1]},
             {"c", d.coeffs[2]},    {"h_dot", d.h_dot},      {"self", d.self_int},
             {"c_dot", d.c_dot},    {"gamma_dot", d.gamma_dot}, {"pattern", d.pattern}};
}

inline void from_json(const json& j, ContradictoryDivisor& d) {
    d.cg = j.at("cg").get<Int>();
    d.coeffs = {j.at("a").get<Int>(), j.at("b").get<Int>(), j.at("c").get<Int>()};
    d.h_dot = j.at("h_dot").get<Int>();
    d.self_int = j.at("self").get<Int>();
    d.c_dot = j.at("c_dot").get<Int>();
    d.gamma_dot = j.at("gamma_dot").get<Int>();
    d.pattern = j.at("pattern").get<int>();
}

inline void to_json(json& j, const ObstructionCertificate& c) {
    j = json{{"n", c.n},
             {"reason", to_string(c.reason)},
             {"cg_lo", c.cg_lo},
             {"cg_hi", c.cg_hi},
             {"divisors", c.divisors}};
}

inline void from_json(const json& j, ObstructionCertificate& c) {
    c.n = j.at("n").get<Int>();
    c.reason = detail::enum_from_string(j.at("reason").get<std::string>(),
                                        {ObstructionReason::polynomial_negative,
                                         ObstructionReason::contradictory_divisor,
                                         ObstructionReason::special_rule_1_6},
                                        "obstruction reason");
    c.cg_lo = j.at("cg_lo").get<Int>();
    c.cg_hi = j.at("cg_hi").get<Int>();
    c.divisors = j.at("divisors").get<std::vector<ContradictoryDivisor>>();
}

inline void to_json(json& j, const Classification& c) {
    j = json{{"verdict", to_string(c.verdict)},
             {"reasons", c.reasons},
             {"missing", c.missing},
             {"certificates", c.certificates}};
}

inline void from_json(const json& j, Classification& c) {
    c.verdict = detail::enum_from_string(
        j.at("verdict").get<std::string>(),
        {Verdict::weak_fano, Verdict::not_weak_fano, Verdict::insufficient_data}, "verdict");
    c.reasons = j.at("reasons").get<std::vector<std::string>>();
    c.missing = j.at("missing").get<std::vector<std::string>>();
    c.certificates = j.at("certificates").get<std::vector<ObstructionCertificate>>();
}

inline void to_json(json& j, const SarkisovRecord& r) {
    j = json{{"g", r.g},
             {"d", r.d},
             {"variant", to_string(r.variant)},
             {"outcome", to_string(r.outcome)},
             {"link_type", to_string(r.link_type)},
             {"minus_k_cubed", r.minus_k_cubed},
             {"target", r.target},
             {"target_k3", r.target_k3},
             {"reference", r.reference_tag},
             {"ambiguous", r.ambiguous}};
    if (r.target_curve) {
        j["g_plus"] = r.target_curve->first;
        j["d_plus"] = r.target_curve->second;
    }
}

inline void from_json(const json& j, SarkisovRecord& r) {
    r.g = j.at("g").get<Int>();
    r.d = j.at("d").get<Int>();
    r.variant = detail::enum_from_string(
        j.at("variant").get<std::string>(),
        {Variant::generic, Variant::on_hyperplane, Variant::on_quadric_section}, "variant");
    r.outcome = detail::enum_from_string(
        j.at("outcome").get<std::string>(),
        {Outcome::fano_divisorial, Outcome::fano_fibring, Outcome::no_link_divisorial,
         Outcome::flop_then_divisorial, Outcome::flop_then_fibring},
        "outcome");
    r.link_type = detail::enum_from_string(j.at("link_type").get<std::string>(),
                                           {LinkType::I, LinkType::II, LinkType::none}, "link type");
    r.minus_k_cubed = j.at("minus_k_cubed").get<Int>();
    r.target = j.at("target").get<std::string>();
    r.target_k3 = j.at("target_k3").get<std::string>();
    r.reference_tag = j.at("reference").get<std::string>();
    r.ambiguous = j.at("ambiguous").get<bool>();
    if (j.contains("g_plus"))
        r.target_curve = std::pair<Int, Int>{j.at("g_plus").get<Int>(), j.at("d_plus").get<Int>()};
    else
        r.target_curve.reset();
}

inline void to_json(json& j, const Document& d) {
    j = json{{"table_id", d.table_id}, {"header", d.header}, {"rows", d.rows}};
}

inline void from_json(const json& j, Document& d) {
    d.table_id = j.at("table_id").get<std::string>();
    d.header = j.at("header").get<std::vector<std::string>>();
    d.rows = j.at("rows").get<std::vector<std::vector<std::string>>>();
}

inline void to_json(json& j, const AuditDiff& d) {
    j = json{{"row_key", d.row_key}, {"expected", d.expected}, {"computed", d.computed}};
}

inline void from_json(const json& j, AuditDiff& d) {
    d.row_key = j.at("row_key").get<std::string>();
    d.expected = j.at("expected").get<std::string>();
    d.computed = j.at("computed").get<std::string>();
}

inline void to_json(json& j, const AuditResult& r) {
    j = json{{"table_id", r.table_id},
             {"status", to_string(r.status)},
             {"diffs", r.diffs},
             {"notes", r.notes}};
}

inline void from_json(const json& j, AuditResult& r) {
    r.table_id = j.at("table_id").get<std::string>();
    r.status = detail::enum_from_string(
        j.at("status").get<std::string>(),
        {AuditStatus::match, AuditStatus::mismatch, AuditStatus::flagged}, "audit status");
    r.diffs = j.at("diffs").get<std::vector<AuditDiff>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
}

// JSON rendering of a table: array of objects keyed by the header.
inline std::string render_json(const Document& doc) {
    json arr = json::array();
    for (const auto& row : doc.rows) {
        json obj = json::object();
        for (std::size_t i = 0; i < doc.header.size() && i < row.size(); ++i)
            obj[doc.header[i]] = row[i];
        arr.push_back(obj);
    }
    json out = json{{"table_id", doc.table_id}, {"rows", arr}};
    return out.dump(2) + "\n";
}

}  // namespace qfano
