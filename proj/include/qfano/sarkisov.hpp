#pragma once

// Outcome catalog for the 38 weak Fano threefolds: anticanonical-map behavior,
// Sarkisov link type and target data, with arithmetic cross-checks.  Records
// are data compiled from the published classification lists; the geometric
// reasoning behind them is cited by reference tag only.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qfano/classifier.hpp"
#include "qfano/lattice.hpp"

namespace qfano {

enum class Variant { generic, on_hyperplane, on_quadric_section };
enum class Outcome {
    fano_divisorial,      // Fano, second contraction divisorial (link II)
    fano_fibring,         // Fano, second contraction of fibring type (link I)
    no_link_divisorial,   // anticanonical map divisorial, no Sarkisov link
    flop_then_divisorial, // small anticanonical map, flop, divisorial (link II)
    flop_then_fibring     // small anticanonical map, flop, fibring (link I)
};
enum class LinkType { I, II, none };

inline const char* to_string(Variant v) {
    switch (v) {
        case Variant::generic: return "generic";
        case Variant::on_hyperplane: return "on_hyperplane";
        case Variant::on_quadric_section: return "on_quadric_section";
    }
    return "?";
}

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::fano_divisorial: return "fano_divisorial";
        case Outcome::fano_fibring: return "fano_fibring";
        case Outcome::no_link_divisorial: return "no_link_divisorial";
        case Outcome::flop_then_divisorial: return "flop_then_divisorial";
        case Outcome::flop_then_fibring: return "flop_then_fibring";
    }
    return "?";
}

inline const char* to_string(LinkType t) {
    switch (t) {
        case LinkType::I: return "I";
        case LinkType::II: return "II";
        case LinkType::none: return "none";
    }
    return "?";
}

inline LinkType link_type_for(Outcome o) {
    switch (o) {
        case Outcome::fano_fibring:
        case Outcome::flop_then_fibring: return LinkType::I;
        case Outcome::fano_divisorial:
        case Outcome::flop_then_divisorial: return LinkType::II;
        case Outcome::no_link_divisorial: return LinkType::none;
    }
    return LinkType::none;
}

struct SarkisovRecord {
    Int g = 0;
    Int d = 0;
    Variant variant = Variant::generic;
    Outcome outcome = Outcome::fano_divisorial;
    LinkType link_type = LinkType::II;
    Int minus_k_cubed = 0;
    std::string target;                          // free-text description
    std::string target_k3;                       // printed -K^3 of the target, "" if none ("21/2" is fractional)
    std::optional<std::pair<Int, Int>> target_curve;  // (g+, d+) when the contraction blows down to a curve
    std::string reference_tag;
    bool ambiguous = false;  // pair printed in two outcome blocks without a distinguishing condition

    friend bool operator==(const SarkisovRecord& a, const SarkisovRecord& b) {
        return a.g == b.g && a.d == b.d && a.variant == b.variant && a.outcome == b.outcome &&
               a.link_type == b.link_type && a.minus_k_cubed == b.minus_k_cubed &&
               a.target == b.target && a.target_k3 == b.target_k3 &&
               a.target_curve == b.target_curve && a.reference_tag == b.reference_tag &&
               a.ambiguous == b.ambiguous;
    }
};

namespace detail {
inline SarkisovRecord rec(Int g, Int d, Variant var, Outcome out, std::string target,
                          std::string target_k3, std::optional<std::pair<Int, Int>> curve,
                          std::string ref, bool ambiguous = false) {
    SarkisovRecord r;
    r.g = g;
    r.d = d;
    r.variant = var;
    r.outcome = out;
    r.link_type = link_type_for(out);
    r.minus_k_cubed = anticanonical_cube(g, d);
    r.target = std::move(target);
    r.target_k3 = std::move(target_k3);
    r.target_curve = curve;
    r.reference_tag = std::move(ref);
    r.ambiguous = ambiguous;
    return r;
}
}  // namespace detail

// The 38 records in block order: 4 Fano/divisorial, 4 Fano/fibring, 6 without
// a link, 18 flop-then-divisorial, 6 flop-then-fibring.  (0,4) splits into a
// generic and an on-hyperplane variant, (3,8) into a generic and an
// on-quadric-section variant.  (6,10) and (11,12) are printed both with and
// without a link and carry the ambiguity flag on both rows; (8,10) is printed
// only in the no-link block although its generic behavior is unresolved in the
// source lists, and is flagged the same way.
inline const std::vector<SarkisovRecord>& sarkisov_catalog() {
    using detail::rec;
    using V = Variant;
    using O = Outcome;
    static const std::vector<SarkisovRecord> records = {
        // Fano, second extremal contraction divisorial (link II)
        rec(0, 3, V::generic, O::fano_divisorial,
            "blowup of the rank-1 index-1 degree-5 Fano threefold along a line", "", std::nullopt,
            "Mori-Mukai No. 26"),
        rec(0, 4, V::generic, O::fano_divisorial,
            "blowup of a smooth quadric threefold along a rational quartic curve", "", std::nullopt,
            "Mori-Mukai No. 21"),
        rec(1, 4, V::generic, O::fano_divisorial,
            "blowup of a singular intersection of two quadrics in its singular point", "",
            std::nullopt, "Mori-Mukai No. 23"),
        rec(1, 5, V::generic, O::fano_divisorial,
            "blowup of P3 along a smooth elliptic quintic curve", "", std::nullopt,
            "Mori-Mukai No. 17"),

        // Fano, second extremal contraction of fibring type (link I)
        rec(0, 1, V::generic, O::fano_fibring, "P1-bundle over P2", "", std::nullopt,
            "Mori-Mukai No. 31"),
        rec(0, 2, V::generic, O::fano_fibring, "del Pezzo fibration of degree 8 over P1", "",
            std::nullopt, "Mori-Mukai No. 29; Takeuchi (2.3.1)"),
        rec(2, 6, V::generic, O::fano_fibring, "conic bundle over P2", "", std::nullopt,
            "Mori-Mukai No. 13"),
        rec(5, 8, V::generic, O::fano_fibring, "del Pezzo fibration of degree 4 over P1", "",
            std::nullopt, "Mori-Mukai No. 7; Takeuchi (2.11.3)"),

        // divisorial anticanonical map, no Sarkisov link
        rec(0, 4, V::on_hyperplane, O::no_link_divisorial,
            "anticanonical model of a P(O^3+O(2))-bundle compactification", "",
            std::pair<Int, Int>{0, 2}, "JPR-I A.4 No. 18"),
        rec(2, 5, V::generic, O::no_link_divisorial,
            "anticanonical model of a P(O^2+O(2))-bundle compactification", "",
            std::pair<Int, Int>{0, 1}, "JPR-I A.4 No. 17"),
        rec(3, 8, V::on_quadric_section, O::no_link_divisorial,
            "canonical Gorenstein Fano threefold of the JPR-I A.1 list", "",
            std::pair<Int, Int>{0, 2}, "JPR-I A.4 No. 16"),
        rec(6, 10, V::generic, O::no_link_divisorial,
            "quartic hypersurface in P4 or double cover of the quadric ramified in a quartic", "",
            std::pair<Int, Int>{1, 5}, "JPR-I A.4 No. 14", true),
        rec(8, 10, V::generic, O::no_link_divisorial,
            "complete intersection of three quadrics in P6", "", std::pair<Int, Int>{0, 1},
            "JPR-I A.4 No. 15", true),
        rec(11, 12, V::generic, O::no_link_divisorial, "double cover of P3 ramified in a sextic",
            "", std::pair<Int, Int>{3, 6}, "JPR-I A.4 No. 13", true),

        // small anticanonical map, flop, then a divisorial contraction (link II)
        rec(0, 6, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "22", std::pair<Int, Int>{0, 2}, "Takeuchi (2.8)"),
        rec(0, 8, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "54", std::pair<Int, Int>{0, 8}, "ACM No. 71"),
        rec(1, 7, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "40", std::pair<Int, Int>{1, 7}, "ACM No. 105"),
        rec(1, 8, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "22", std::pair<Int, Int>{1, 8}, "ACM No. 86"),
        rec(2, 7, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "18", std::pair<Int, Int>{0, 1}, "AG5 Thm 4.3.3(vii)+4.3.7(ii)"),
        rec(2, 8, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "18", std::pair<Int, Int>{0, 4}, "ACM No. 97"),
        rec(2, 9, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "54", std::pair<Int, Int>{2, 9}, "ACM No. 44"),
        rec(3, 8, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "54", std::pair<Int, Int>{3, 8}, "CM-update No. 102"),
        rec(3, 9, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "16", std::pair<Int, Int>{0, 5}, "ACM No. 70"),
        rec(4, 9, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "54", std::pair<Int, Int>{4, 9}, "ACM No. 88"),
        rec(5, 10, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "54", std::pair<Int, Int>{5, 10}, "ACM No. 45"),
        rec(6, 10, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "54", std::pair<Int, Int>{6, 10}, "CM-update No. 72", true),
        rec(7, 10, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "12", std::pair<Int, Int>{0, 2}, "Takeuchi (2.8)"),
        rec(8, 11, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "54", std::pair<Int, Int>{8, 11}, "ACM No. 46"),
        rec(11, 12, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "54", std::pair<Int, Int>{11, 12}, "CM-update No. 47", true),
        rec(14, 13, V::generic, O::flop_then_divisorial, "blowup of a Fano threefold along a curve",
            "54", std::pair<Int, Int>{14, 13}, "ACM No. 48"),
        rec(4, 8, V::generic, O::flop_then_divisorial,
            "blowdown of E = P1xP1 to an ordinary double point", "14", std::nullopt,
            "CM 3.2.2 No. 5"),
        rec(6, 9, V::generic, O::flop_then_divisorial,
            "blowdown of E = P2 to a non-Gorenstein quadruple point", "21/2", std::nullopt,
            "CM 3.2.3 No. 5"),

        // small anticanonical map, flop, then a fibring contraction (link I)
        rec(0, 5, V::generic, O::flop_then_fibring, "conic bundle over P2", "", std::nullopt,
            "JPR-II 7.13 No. 17"),
        rec(1, 6, V::generic, O::flop_then_fibring, "del Pezzo fibration of degree 6 over P1", "",
            std::nullopt, "JPR-II 7.4 No. 3"),
        rec(0, 7, V::generic, O::flop_then_fibring, "conic bundle over P2", "", std::nullopt,
            "JPR-II 7.13 No. 13"),
        rec(3, 7, V::generic, O::flop_then_fibring, "del Pezzo fibration of degree 5 over P1", "",
            std::nullopt, "JPR-II 7.4 No. 5; Takeuchi (2.13.4)"),
        rec(5, 9, V::generic, O::flop_then_fibring, "conic bundle over P2", "", std::nullopt,
            "JPR-II 7.13 No. 10"),
        rec(9, 11, V::generic, O::flop_then_fibring, "del Pezzo fibration of degree 5 over P1", "",
            std::nullopt, "JPR-II 7.4 No. 17; Takeuchi (2.13.10)"),
    };
    return records;
}

struct CrosscheckReport {
    std::vector<std::string> formula_mismatches;  // minus_k_cubed != 52 - 6d + 2g
    std::vector<GdPair> not_in_p;                 // catalog pair outside P
    std::vector<GdPair> missing_pairs;            // pair of P with no catalog row
    std::vector<std::string> notes;
    bool pass = false;
};

// Formula and membership checks are hard; coverage gaps are reported as notes
// because the printed blocks do not carry a row for every pair.
inline CrosscheckReport crosscheck() {
    CrosscheckReport rep;
    std::set<GdPair> seen;
    for (const auto& r : sarkisov_catalog()) {
        if (r.minus_k_cubed != anticanonical_cube(r.g, r.d))
            rep.formula_mismatches.push_back("(" + std::to_string(r.g) + "," + std::to_string(r.d) +
                                             ") stores -K^3 = " + std::to_string(r.minus_k_cubed));
        if (!p_membership_numeric(r.g, r.d)) rep.not_in_p.push_back({r.g, r.d});
        seen.insert({r.g, r.d});
    }
    for (const auto& gd : p_sets().all)
        if (!seen.count(gd)) {
            rep.missing_pairs.push_back(gd);
            rep.notes.push_back("(" + std::to_string(gd.first) + "," + std::to_string(gd.second) +
                                ") has no printed outcome row (its anticanonical map contracts the"
                                " complete-intersection surface)");
        }
    rep.pass = rep.formula_mismatches.empty() && rep.not_in_p.empty();
    return rep;
}

// Witness that the anticanonical map contracts a divisor for the two variant
// splits: on P1xP1 the rulings give f2.(3f1+f2) = 3 = 3n with n = 1 for the
// hyperplane (0,4); on the del Pezzo surface the conics through four of the
// five points give (2L-E1-E2-E3-E4).(5L-E1-E2-E3-E4-3E5) = 6 = 3n with n = 2
// for the quadric-section (3,8).  Other variants have no such family.
inline std::optional<Int> infinite_secant_witness(Int g, Int d, Variant variant) {
    if (g == 0 && d == 4 && variant == Variant::on_hyperplane) {
        const IntersectionLattice q = make_quadric_smooth();
        return intersect(q.basis(1), q.divisor({3, 1}));
    }
    if (g == 3 && d == 8 && variant == Variant::on_quadric_section) {
        const IntersectionLattice dp4 = make_dp4();
        const DivisorClass curve = dp4.divisor({5, -1, -1, -1, -1, -3});
        const DivisorClass conic = dp4.divisor({2, -1, -1, -1, -1, 0});
        return intersect(conic, curve);
    }
    if (g == 0 && d == 4 && variant == Variant::generic) {
        // generic quartic: check the line classes of the hyperplane surface
        // pair with C = 3f1 + f2 at 3n only when the curve actually lies there
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace qfano
