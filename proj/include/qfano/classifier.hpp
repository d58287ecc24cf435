#pragma once

// Decision procedure for weak Fano blowups of the smooth quadric threefold:
// given (g,d) and containment/secant data, decide the verdict and produce
// obstruction certificates for the excluded secant degrees.

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfano/k3.hpp"
#include "qfano/lattice.hpp"
#include "qfano/surfaces.hpp"

namespace qfano {

// --- the (g,d) sets -----------------------------------------------------------

struct PSets {
    std::set<GdPair> none, line, conic;     // by required secant exclusions
    std::set<GdPair> plane, quadric, cubic;  // by minimal containing surface
    std::set<GdPair> all;
};

inline const PSets& p_sets() {
    static const PSets sets = [] {
        PSets s;
        s.none = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {1, 6}, {2, 5}, {2, 6},
                  {2, 7}, {3, 7}, {4, 6}, {4, 8}, {5, 8}, {6, 9}, {8, 10}, {9, 11}, {13, 12}, {14, 13}};
        s.line = {{0, 6}, {0, 7}, {1, 7}, {2, 8}, {3, 8}, {4, 9}, {5, 9}, {6, 10}, {7, 10}, {8, 11}, {11, 12}};
        s.conic = {{0, 8}, {1, 8}, {2, 9}, {3, 9}, {5, 10}};
        s.plane = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 4}, {2, 5}, {4, 6}};
        s.quadric = {{0, 4}, {0, 5}, {0, 6}, {1, 5}, {1, 6}, {2, 6}, {2, 7}, {3, 7}, {3, 8},
                     {4, 8}, {5, 8}, {6, 9}, {8, 10}, {13, 12}};
        s.cubic = {{0, 7}, {0, 8}, {1, 7}, {1, 8}, {2, 8}, {2, 9}, {3, 8}, {3, 9}, {4, 9}, {5, 9},
                   {5, 10}, {6, 10}, {7, 10}, {8, 11}, {9, 11}, {11, 12}, {14, 13}};
        for (const auto& p : s.none) s.all.insert(p);
        for (const auto& p : s.line) s.all.insert(p);
        for (const auto& p : s.conic) s.all.insert(p);
        return s;
    }();
    return sets;
}

// Numeric membership test, equivalent to the literal sets:
// (g,d) in {(4,6),(13,12)}, or d < 18, 3d-26 < g <= (d^2-1)/12 and
// (g,d) not in {(4,7),(10,11)}.
inline bool p_membership_numeric(Int g, Int d) {
    if (g < 0 || d < 1) return false;
    if ((g == 4 && d == 6) || (g == 13 && d == 12)) return true;
    if ((g == 4 && d == 7) || (g == 10 && d == 11)) return false;
    return d < 18 && 3 * d - 26 < g && 12 * g <= d * d - 1;
}

// --- anticanonical arithmetic ---------------------------------------------------

inline Int anticanonical_cube(Int g, Int d) { return 52 - 6 * d + 2 * g; }   // (-K_X)^3
inline Int anticanonical_sq_E(Int g, Int d) { return 3 * d - 2 * g + 2; }    // (-K_X)^2.E

struct Rational {
    Int num = 0;
    Int den = 1;
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }
};

// dim |-K_X| = (-K_X)^3 / 2 + 3; the cube 52 - 6d + 2g is even, so the value
// is integral and the denominator is always 1.
inline Rational anticanonical_dim(Int g, Int d) {
    return {anticanonical_cube(g, d) / 2 + 3, 1};
}

// -K_X paired with the strict transform of a degree-n curve meeting the
// blown-up curve with multiplicity eE; negative means -K_X is not nef.
inline Int secant_pairing(Int n, Int eE) { return 3 * n - eE; }

// P_{g,d}(n) = n^2 - (36-2d) n + d^2 - 12g - 1; a (3n+1)-secant of degree n
// forces P_{g,d}(n) >= 0.
struct PgdPolynomial {
    Int g = 0;
    Int d = 0;
    Int linear_coeff() const { return 2 * d - 36; }
    Int constant_coeff() const { return d * d - 12 * g - 1; }
    Int eval(Int n) const { return n * n + linear_coeff() * n + constant_coeff(); }
};

inline Int pgd_nmax_raw(Int g, Int d) {
    if (!p_membership_numeric(g, d)) throw std::invalid_argument("pgd_nmax_raw: (g,d) not in P");
    const PgdPolynomial p{g, d};
    Int best = 0;
    for (Int n = 1; n < 18 - d; ++n)
        if (p.eval(n) >= 0) best = n;
    return best;
}

// --- obstruction certificates ----------------------------------------------------

enum class ObstructionReason { polynomial_negative, contradictory_divisor, special_rule_1_6 };

inline const char* to_string(ObstructionReason r) {
    switch (r) {
        case ObstructionReason::polynomial_negative: return "polynomial_negative";
        case ObstructionReason::contradictory_divisor: return "contradictory_divisor";
        case ObstructionReason::special_rule_1_6: return "special_rule_1_6";
    }
    return "?";
}

// One contradictory divisor D = aH + bC + cG in the rank-3 lattice for a fixed
// value of C.G.  Pattern (i): D^2 = -2, H.D >= 1 and D would contain C or G of
// larger degree.  Pattern (ii): H.D = 0, D^2 in {-2,0} forces D = 0 while a
// recorded pairing is nonzero.
struct ContradictoryDivisor {
    Int cg = 0;
    std::array<Int, 3> coeffs{};  // (a, b, c)
    Int h_dot = 0;
    Int self_int = 0;
    Int c_dot = 0;
    Int gamma_dot = 0;
    int pattern = 0;  // 1 or 2

    friend bool operator==(const ContradictoryDivisor& x, const ContradictoryDivisor& y) {
        return x.cg == y.cg && x.coeffs == y.coeffs && x.h_dot == y.h_dot &&
               x.self_int == y.self_int && x.c_dot == y.c_dot && x.gamma_dot == y.gamma_dot &&
               x.pattern == y.pattern;
    }
};

struct ObstructionCertificate {
    Int n = 0;
    ObstructionReason reason = ObstructionReason::polynomial_negative;
    Int cg_lo = 0;
    Int cg_hi = 0;
    std::vector<ContradictoryDivisor> divisors;  // one per cg for contradictory_divisor

    friend bool operator==(const ObstructionCertificate& x, const ObstructionCertificate& y) {
        return x.n == y.n && x.reason == y.reason && x.cg_lo == y.cg_lo && x.cg_hi == y.cg_hi &&
               x.divisors == y.divisors;
    }
};

namespace detail {

// Candidate order: smallest coefficient sum first, positive leading
// coefficient before negative, then lexicographic.  This reproduces the
// published certificate for every row that has more than one valid divisor.
inline bool cert_order(const std::array<Int, 3>& x, const std::array<Int, 3>& y) {
    auto weight = [](const std::array<Int, 3>& v) {
        Int w = 0;
        for (Int t : v) w += t < 0 ? -t : t;
        return w;
    };
    auto lead_neg = [](const std::array<Int, 3>& v) {
        for (Int t : v)
            if (t != 0) return t < 0 ? 1 : 0;
        return 0;
    };
    const Int wx = weight(x), wy = weight(y);
    if (wx != wy) return wx < wy;
    const int lx = lead_neg(x), ly = lead_neg(y);
    if (lx != ly) return lx < ly;
    return x < y;
}

inline std::optional<ContradictoryDivisor> find_divisor(Int g, Int d, Int n, Int cg, Int box) {
    const IntersectionLattice lat = make_k3_rank3(g, d, n, cg);
    const DivisorClass H = lat.basis(0), C = lat.basis(1), G = lat.basis(2);
    std::optional<ContradictoryDivisor> best;
    for (Int a = -box; a <= box; ++a)
        for (Int b = -box; b <= box; ++b)
            for (Int c = -box; c <= box; ++c) {
                const DivisorClass D = lat.divisor({a, b, c});
                const Int hd = intersect(H, D);
                const Int sq = intersect(D, D);
                const Int cd = intersect(C, D);
                const Int gd = intersect(G, D);
                int pattern = 0;
                if (sq == -2 && hd >= 1 && ((hd < d && cd < 0) || (hd < n && gd < 0)))
                    pattern = 1;
                else if (hd == 0 && (sq == -2 || sq == 0) && !D.is_zero() && (cd != 0 || gd != 0))
                    pattern = 2;
                if (!pattern) continue;
                ContradictoryDivisor cand{cg, {a, b, c}, hd, sq, cd, gd, pattern};
                if (!best || cert_order(cand.coeffs, best->coeffs)) best = cand;
            }
    return best;
}

}  // namespace detail

// Search D = aH + bC + cG over |a|,|b|,|c| <= 3 (widened to 5 before giving
// up) for every cg in [3n+1, B(d+n)+1-g].  The obstruction only counts when a
// certificate exists for every cg in the interval; the interval is nonempty
// for every (g,d,n) actually consulted here.
inline std::optional<ObstructionCertificate> search_contradictory_divisor(Int g, Int d, Int n) {
    if (!p_membership_numeric(g, d))
        throw std::invalid_argument("search_contradictory_divisor: (g,d) not in P");
    if (n < 1 || n >= 18 - d)
        throw std::invalid_argument("search_contradictory_divisor: need 1 <= n < 18-d");
    const Int lo = 3 * n + 1;
    const Int hi = genus_bound_B(d + n).value + 1 - g;
    if (lo > hi) return std::nullopt;
    ObstructionCertificate cert{n, ObstructionReason::contradictory_divisor, lo, hi, {}};
    for (Int cg = lo; cg <= hi; ++cg) {
        auto found = detail::find_divisor(g, d, n, cg, 3);
        if (!found) found = detail::find_divisor(g, d, n, cg, 5);
        if (!found) return std::nullopt;
        cert.divisors.push_back(*found);
    }
    return cert;
}

struct RefinedNmax {
    Int n_max = 0;
    std::vector<ObstructionCertificate> eliminations;  // highest n first
};

// Start from the polynomial bound and keep lowering n_max while a full
// certificate family exists at the current value.  For (1,6) the candidate
// n = 1 is removed by the four-seven shape instead: the union of the sextic
// with a 4-secant line has degree 7 and genus 1+0+4-1 = 4, so it must split
// as line + genus-4 sextic, which the genus-1 component cannot match.
inline RefinedNmax nmax_refined(Int g, Int d) {
    RefinedNmax out;
    Int n = pgd_nmax_raw(g, d);
    while (n >= 1) {
        if (g == 1 && d == 6 && n == 1) {
            out.eliminations.push_back(
                ObstructionCertificate{n, ObstructionReason::special_rule_1_6, 4, 4, {}});
            --n;
            continue;
        }
        auto cert = search_contradictory_divisor(g, d, n);
        if (!cert) break;
        out.eliminations.push_back(*cert);
        --n;
    }
    out.n_max = n;
    return out;
}

// Certificate for any n > n_max: the polynomial bound when it applies, else
// the recorded refinement step.
inline std::optional<ObstructionCertificate> obstruction_for(Int g, Int d, Int n) {
    if (n < 1 || n >= 18 - d) return std::nullopt;
    const PgdPolynomial p{g, d};
    if (p.eval(n) < 0)
        return ObstructionCertificate{n, ObstructionReason::polynomial_negative, 0, 0, {}};
    if (!p_membership_numeric(g, d)) return std::nullopt;
    for (const auto& cert : nmax_refined(g, d).eliminations)
        if (cert.n == n) return cert;
    return std::nullopt;
}

// --- classification -------------------------------------------------------------

enum class Containment { hyperplane, smooth_quadric_section, smooth_cubic_section, unknown };
enum class TriState { yes, no, unknown };
enum class Verdict { weak_fano, not_weak_fano, insufficient_data };

inline const char* to_string(Containment c) {
    switch (c) {
        case Containment::hyperplane: return "hyperplane";
        case Containment::smooth_quadric_section: return "smooth_quadric_section";
        case Containment::smooth_cubic_section: return "smooth_cubic_section";
        case Containment::unknown: return "unknown";
    }
    return "?";
}

inline const char* to_string(TriState t) {
    switch (t) {
        case TriState::yes: return "yes";
        case TriState::no: return "no";
        case TriState::unknown: return "unknown";
    }
    return "?";
}

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::weak_fano: return "weak_fano";
        case Verdict::not_weak_fano: return "not_weak_fano";
        case Verdict::insufficient_data: return "insufficient_data";
    }
    return "?";
}

struct CurveInstance {
    Int g = 0;
    Int d = 1;
    Containment containment = Containment::unknown;
    TriState has_4secant_line = TriState::unknown;
    TriState has_7secant_conic = TriState::unknown;
};

struct Classification {
    Verdict verdict = Verdict::insufficient_data;
    std::vector<std::string> reasons;
    std::vector<std::string> missing;  // facts needed to decide
    std::vector<ObstructionCertificate> certificates;

    friend bool operator==(const Classification& a, const Classification& b) {
        return a.verdict == b.verdict && a.reasons == b.reasons && a.missing == b.missing &&
               a.certificates == b.certificates;
    }
};

inline Classification classify(const CurveInstance& c) {
    const auto& ps = p_sets();
    const GdPair gd{c.g, c.d};
    Classification out;
    // reason strings stay comma-free so the CSV rendering needs no quoting
    auto gd_str = "(g=" + std::to_string(c.g) + " d=" + std::to_string(c.d) + ")";

    // (1) outside P nothing is weak Fano
    if (!p_membership_numeric(c.g, c.d)) {
        out.verdict = Verdict::not_weak_fano;
        out.reasons.push_back(gd_str +
                              " fails the numeric membership test: need d < 18 and 3d-26 < g <= "
                              "(d^2-1)/12 excluding (g=4 d=7) and (g=10 d=11)");
        return out;
    }

    // (2) pairs on a hyperplane section are weak Fano outright; (0,4) needs the
    // hyperplane flag since a quartic rational curve may be non-degenerate
    if (ps.plane.count(gd) && (gd != GdPair{0, 4} || c.containment == Containment::hyperplane)) {
        out.verdict = Verdict::weak_fano;
        out.reasons.push_back(gd_str + " lies on a hyperplane section; the residual system there is base-point-free");
        return out;
    }

    // (3) smooth quadric section: the del Pezzo analysis decides, with a
    // 4-secant caveat for (0,6) and (3,8)
    if (c.containment == Containment::smooth_quadric_section && ps.quadric.count(gd)) {
        const bool caveat = (gd == GdPair{0, 6} || gd == GdPair{3, 8});
        if (!caveat || c.has_4secant_line == TriState::no) {
            out.verdict = Verdict::weak_fano;
            out.reasons.push_back(gd_str + " lies on a smooth quadric section (quartic del Pezzo); residual system decomposes into base-point-free systems");
            if (caveat) out.reasons.push_back("4-secant line excluded by assumption");
            return out;
        }
        if (c.has_4secant_line == TriState::yes) {
            out.verdict = Verdict::not_weak_fano;
            out.reasons.push_back("a 4-secant line pairs negatively with -K_X");
            return out;
        }
        out.verdict = Verdict::insufficient_data;
        out.missing.push_back("4-secant line status (required for " + gd_str + " on a quadric section)");
        return out;
    }

    // (4) smooth cubic section: the per-bucket secant exclusions decide
    if (c.containment == Containment::smooth_cubic_section) {
        const bool need_line = ps.line.count(gd) || ps.conic.count(gd);
        const bool need_conic = ps.conic.count(gd) > 0;
        if (need_line && c.has_4secant_line == TriState::yes) {
            out.verdict = Verdict::not_weak_fano;
            out.reasons.push_back("a 4-secant line pairs negatively with -K_X");
            return out;
        }
        if (need_conic && c.has_7secant_conic == TriState::yes) {
            out.verdict = Verdict::not_weak_fano;
            out.reasons.push_back("a 7-secant conic pairs negatively with -K_X");
            return out;
        }
        if ((!need_line || c.has_4secant_line == TriState::no) &&
            (!need_conic || c.has_7secant_conic == TriState::no)) {
            out.verdict = Verdict::weak_fano;
            out.reasons.push_back(gd_str + " lies on a smooth cubic section with the required secant exclusions");
            const auto refined = nmax_refined(c.g, c.d);
            out.reasons.push_back("n_max = " + std::to_string(refined.n_max));
            out.certificates = refined.eliminations;
            return out;
        }
        out.verdict = Verdict::insufficient_data;
        if (need_line && c.has_4secant_line == TriState::unknown)
            out.missing.push_back("4-secant line status");
        if (need_conic && c.has_7secant_conic == TriState::unknown)
            out.missing.push_back("7-secant conic status");
        return out;
    }

    // (5) not enough containment information
    out.verdict = Verdict::insufficient_data;
    out.missing.push_back("containment in a smooth cubic section (or quadric section / hyperplane where applicable)");
    return out;
}

// --- existence audit -------------------------------------------------------------

struct ExistenceAuditRow {
    Int g = 0;
    Int d = 0;
    K3Existence existence = K3Existence::impossible;
    LowDegreeKind low_degree = LowDegreeKind::none;
    Int n_max = 0;
    bool pass = false;
    std::string note;
};

struct ExistenceAuditReport {
    std::vector<ExistenceAuditRow> rows;
    std::set<GdPair> line_pairs;
    std::set<GdPair> conic_pairs;
    bool all_pass = true;
};

// For every pair in P: the surface exists, and a line or conic on it can only
// occur for pairs whose n_max is already 0, so the sextic never carries a
// curve that could be a forbidden secant.
inline ExistenceAuditReport existence_audit() {
    static const std::set<GdPair> expected_lines = {{0, 1}, {2, 5}, {14, 13}};
    static const std::set<GdPair> expected_conics = {{0, 2}, {1, 4}, {5, 8}, {8, 10}};
    ExistenceAuditReport rep;
    for (const auto& gd : p_sets().all) {
        const auto [g, d] = gd;
        ExistenceAuditRow row;
        row.g = g;
        row.d = d;
        row.existence = knutsen_smooth_quadric_existence(g, d);
        row.n_max = nmax_refined(g, d).n_max;
        row.pass = row.existence != K3Existence::impossible;
        if (row.existence == K3Existence::exists_rank2) {
            row.low_degree = detect_low_degree_curves(g, d).kind;
            if (row.low_degree == LowDegreeKind::line) {
                rep.line_pairs.insert(gd);
                if (!expected_lines.count(gd) || row.n_max != 0) {
                    row.pass = false;
                    row.note = "unexpected line-bearing pair";
                }
            } else if (row.low_degree == LowDegreeKind::conic) {
                rep.conic_pairs.insert(gd);
                if (!expected_conics.count(gd) || row.n_max != 0) {
                    row.pass = false;
                    row.note = "unexpected conic-bearing pair";
                }
            }
        } else if (row.existence == K3Existence::complete_intersection) {
            row.note = "complete intersection branch";
        } else {
            row.note = "no K3 surface for this pair";
        }
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(row);
    }
    if (rep.line_pairs != expected_lines || rep.conic_pairs != expected_conics)
        rep.all_pass = false;
    return rep;
}

}  // namespace qfano
