#pragma once

// Regeneration of every published table by computation.  Each generator
// returns a Document (header + string rows) that the CLI renders as text,
// CSV or JSON and the audit harness compares against golden fixtures.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfano/classifier.hpp"
#include "qfano/k3.hpp"
#include "qfano/sarkisov.hpp"
#include "qfano/surfaces.hpp"

namespace qfano {

struct Document {
    std::string table_id;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    friend bool operator==(const Document& a, const Document& b) {
        return a.table_id == b.table_id && a.header == b.header && a.rows == b.rows;
    }
};

inline const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids = {"B",          "pgd-nmax", "obstructions",
                                                 "plane-smooth", "plane-cone", "residual-f2",
                                                 "dp4",        "sarkisov"};
    return ids;
}

namespace detail {
inline std::string str(Int v) { return std::to_string(v); }
}  // namespace detail

// d, B(d) for d = 1..18.
inline Document table_B() {
    Document doc{"B", {"d", "B"}, {}};
    for (Int d = 1; d <= 18; ++d)
        doc.rows.push_back({detail::str(d), detail::str(genus_bound_B(d).value)});
    return doc;
}

// P_{g,d} coefficients with the raw and refined secant bound, 36 rows.
inline Document table_pgd_nmax() {
    Document doc{"pgd-nmax", {"g", "d", "lin_coeff", "const_coeff", "nmax_raw", "nmax"}, {}};
    for (const auto& [g, d] : p_sets().all) {
        const PgdPolynomial p{g, d};
        doc.rows.push_back({detail::str(g), detail::str(d), detail::str(p.linear_coeff()),
                            detail::str(p.constant_coeff()), detail::str(pgd_nmax_raw(g, d)),
                            detail::str(nmax_refined(g, d).n_max)});
    }
    return doc;
}

// Contradictory divisors behind every crossed-out refinement (the (1,6) rule
// eliminates its candidate without a divisor and has no row here).
inline Document table_obstructions() {
    Document doc{"obstructions",
                 {"g", "d", "n", "cg", "a", "b", "c", "h_dot", "self", "c_dot", "gamma_dot"},
                 {}};
    for (const auto& [g, d] : p_sets().all) {
        for (const auto& cert : nmax_refined(g, d).eliminations) {
            if (cert.reason != ObstructionReason::contradictory_divisor) continue;
            for (const auto& div : cert.divisors)
                doc.rows.push_back({detail::str(g), detail::str(d), detail::str(cert.n),
                                    detail::str(div.cg), detail::str(div.coeffs[0]),
                                    detail::str(div.coeffs[1]), detail::str(div.coeffs[2]),
                                    detail::str(div.h_dot), detail::str(div.self_int),
                                    detail::str(div.c_dot), detail::str(div.gamma_dot)});
        }
    }
    return doc;
}

// Smooth irreducible curves of degree <= 6 on the smooth quadric surface.
inline Document table_plane_smooth() {
    Document doc{"plane-smooth", {"a", "b", "g", "d"}, {}};
    for (const auto& c : enumerate_smooth_quadric_curves(6))
        doc.rows.push_back({detail::str(c.a), detail::str(c.b), detail::str(c.genus()),
                            detail::str(c.degree())});
    return doc;
}

// Smooth irreducible curves of degree <= 6 on the quadric cone.
inline Document table_plane_cone() {
    Document doc{"plane-cone", {"a", "b", "g", "d"}, {}};
    for (const auto& c : enumerate_cone_curves(6))
        doc.rows.push_back({detail::str(c.a), detail::str(c.b), detail::str(c.genus()),
                            detail::str(c.degree())});
    return doc;
}

// Strict transform and residual system on F2 for the cone curves.
inline Document table_residual_f2() {
    Document doc{"residual-f2", {"g", "d", "chat_e", "chat_f", "r_e", "r_f"}, {}};
    for (const auto& c : enumerate_cone_curves(6)) {
        const DivisorClass chat = c.strict_transform();
        const DivisorClass r = residual_system_f2(c);
        doc.rows.push_back({detail::str(c.genus()), detail::str(c.degree()),
                            detail::str(chat.coord(0)), detail::str(chat.coord(1)),
                            detail::str(r.coord(0)), detail::str(r.coord(1))});
    }
    return doc;
}

// del Pezzo representations of the quadric-section pairs with the residual
// system and its base-point-free decomposition (or the 4-secant witness when
// the residual has a fixed component).
inline Document table_dp4() {
    Document doc{"dp4",
                 {"g", "d", "k", "m1", "m2", "m3", "m4", "m5", "residual", "decomposition"},
                 {}};
    const auto& quadric = p_sets().quadric;
    std::vector<GdPair> pairs(quadric.begin(), quadric.end());
    const IntersectionLattice dp4 = make_dp4();
    for (const auto& c : enumerate_dp4_curves(pairs)) {
        // residual = 3H - C = Lambda(9-k; 3-m_1, ..., 3-m_5)
        const DivisorClass residual = 3 * dp4.H() - c.divisor_class();
        std::string rlabel = "L(" + detail::str(residual.coord(0)) + ";";
        for (int i = 1; i <= 5; ++i) rlabel += detail::str(-residual.coord(i));
        rlabel += ")";
        const auto dec = bpf_decompose(residual);
        std::string dstr = dec ? dec->to_string() : "not_base_point_free";
        doc.rows.push_back({detail::str(c.genus()), detail::str(c.degree()), detail::str(c.k),
                            detail::str(c.m[0]), detail::str(c.m[1]), detail::str(c.m[2]),
                            detail::str(c.m[3]), detail::str(c.m[4]), rlabel, dstr});
    }
    return doc;
}

// The 38 catalog records.
inline Document table_sarkisov() {
    Document doc{"sarkisov",
                 {"g", "d", "variant", "outcome", "link", "minus_k_cubed", "target_k3", "g_plus",
                  "d_plus", "target", "reference", "ambiguous"},
                 {}};
    for (const auto& r : sarkisov_catalog()) {
        doc.rows.push_back({detail::str(r.g), detail::str(r.d), to_string(r.variant),
                            to_string(r.outcome), to_string(r.link_type),
                            detail::str(r.minus_k_cubed), r.target_k3,
                            r.target_curve ? detail::str(r.target_curve->first) : "",
                            r.target_curve ? detail::str(r.target_curve->second) : "", r.target,
                            r.reference_tag, r.ambiguous ? "1" : "0"});
    }
    return doc;
}

inline Document generate_table(const std::string& id) {
    if (id == "B") return table_B();
    if (id == "pgd-nmax") return table_pgd_nmax();
    if (id == "obstructions") return table_obstructions();
    if (id == "plane-smooth") return table_plane_smooth();
    if (id == "plane-cone") return table_plane_cone();
    if (id == "residual-f2") return table_residual_f2();
    if (id == "dp4") return table_dp4();
    if (id == "sarkisov") return table_sarkisov();
    throw std::invalid_argument("unknown table id: " + id);
}

// --- rendering -------------------------------------------------------------------

inline std::string render_csv(const Document& doc) {
    std::ostringstream os;
    auto emit = [&os](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << row[i];
        }
        os << '\n';
    };
    emit(doc.header);
    for (const auto& row : doc.rows) emit(row);
    return os.str();
}

inline std::string render_text(const Document& doc) {
    std::vector<std::size_t> width(doc.header.size(), 0);
    auto widen = [&width](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(doc.header);
    for (const auto& row : doc.rows) widen(row);
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << "  ";
            os << row[i];
            if (i + 1 < row.size()) os << std::string(width[i] - row[i].size(), ' ');
        }
        os << '\n';
    };
    emit(doc.header);
    for (const auto& row : doc.rows) emit(row);
    return os.str();
}

}  // namespace qfano
