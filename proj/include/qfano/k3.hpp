#pragma once

// Numerical facts about curves on a smooth sextic K3 surface inside a smooth
// quadric threefold: the sharp genus bound B(d), complete-intersection genus,
// effectivity tests, existence conditions for (g,d), and closed-form detection
// of the low-degree rational curves the surface can carry.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfano/lattice.hpp"

namespace qfano {

// Sharp upper bound for the genus of a reduced degree-d curve on the sextic K3
// that is not a complete intersection:
//   B(d) = (d^2 - r^2)/12  for d = r mod 6, r in {-2,-1,1,2,3},
//   B(d) = d^2/12 - 1      for d = 0 mod 6.
struct GenusBound {
    Int d = 0;
    int r = 0;  // residue in {-2,-1,0,1,2,3}
    Int value = 0;
};

inline GenusBound genus_bound_B(Int d) {
    if (d < 1) throw std::invalid_argument("genus_bound_B: need d >= 1");
    int r = static_cast<int>(d % 6);
    if (r > 3) r -= 6;  // 4 -> -2, 5 -> -1
    Int value;
    if (r == 0)
        value = d * d / 12 - 1;
    else
        value = (d * d - static_cast<Int>(r) * r) / 12;
    return GenusBound{d, r, value};
}

// Arithmetic genus of a reduced complete intersection of hypersurfaces of the
// given degrees in P^n:
//   p_a = (1/2) (prod d_j) (-n - 1 + sum d_i) + 1.
inline Int ci_genus(const std::vector<Int>& degrees, int ambient_dim) {
    if (degrees.empty()) throw std::invalid_argument("ci_genus: empty degree list");
    if (static_cast<int>(degrees.size()) != ambient_dim - 1)
        throw std::invalid_argument("ci_genus: need n-1 hypersurfaces in P^n");
    Int prod = 1, sum = 0;
    for (Int deg : degrees) {
        if (deg < 1) throw std::invalid_argument("ci_genus: degrees must be positive");
        prod = checked_mul(prod, deg);
        sum = checked_add(sum, deg);
    }
    Int twice = checked_mul(prod, sum - ambient_dim - 1);
    if (twice % 2 != 0) throw ParityError("ci_genus: odd intermediate value");
    return twice / 2 + 1;
}

// Riemann-Roch / Hodge-index consequences for a divisor D on the sextic K3:
// H.D > 0 and D^2 > -4 makes D an effective curve of degree H.D and genus
// D^2/2 + 1; H.D = 0 and D^2 > -4 forces D = 0; anything else carries no
// information.
enum class Effectivity { effective_curve, zero, inconclusive };

struct EffectivityResult {
    Effectivity kind = Effectivity::inconclusive;
    Int degree = 0;
    Int genus = 0;
};

inline EffectivityResult effectivity_test(const DivisorClass& d) {
    if (!is_sextic_k3(d.lattice()))
        throw std::invalid_argument("effectivity_test: divisor must live on a K3 lattice");
    const Int hd = degree(d);
    const Int sq = intersect(d, d);
    if (hd > 0 && sq > -4) return {Effectivity::effective_curve, hd, sq / 2 + 1};
    if (hd == 0 && sq > -4) return {Effectivity::zero, 0, 0};
    return {Effectivity::inconclusive, 0, 0};
}

// Every curve of degree at most 3 on the sextic K3 inside a smooth quadric
// threefold has arithmetic genus <= 0.
inline Int low_degree_genus_cap(int deg) {
    if (deg < 1 || deg > 3) throw std::invalid_argument("low_degree_genus_cap: degree must be 1..3");
    return 0;
}

// Existence of a smooth irreducible curve of genus g and degree d on a sextic
// K3 lying inside a *smooth* quadric threefold:
//   complete_intersection  iff 12g = d^2 + 12  (forces 6 | d),
//   exists_rank2           iff 12g <= d^2 - 1 and (g,d) != (4,7),
//   impossible             otherwise.
enum class K3Existence { complete_intersection, exists_rank2, impossible };

inline K3Existence knutsen_smooth_quadric_existence(Int g, Int d) {
    if (g < 0 || d < 1)
        throw std::invalid_argument("knutsen_smooth_quadric_existence: need g >= 0, d >= 1");
    if (12 * g == d * d + 12) return K3Existence::complete_intersection;
    if (12 * g <= d * d - 1 && !(g == 4 && d == 7)) return K3Existence::exists_rank2;
    return K3Existence::impossible;
}

// Low-degree rational curves on the rank-2 surface Pic(S) = ZH + ZC.
//
// line:   d = +-1 mod 6 and 12g = d^2 - 1 (iff), unique class aH + bC with
//         b = +1 for d = 1 mod 6, b = -1 for d = 5 mod 6, a = (1 - db)/6;
// conic:  d = 2,4 mod 6 and 12g = d^2 - 4 (necessary; candidate class only),
//         b = +1 / -1 resp., a = (2 - db)/6;
// cubic:  d = 3 mod 6 and 12g = d^2 - 9 (necessary), two classes b = +-1,
//         a = (3 - db)/6.
// Coefficients b = +-2, +-4 in the conic case are ruled out by the genus
// contradictions g = d^2/12 + 2/3 resp. d^2/12 + 11/12.
enum class LowDegreeKind { line, conic, rational_cubic, none };

// The line condition is an iff; the conic and cubic conditions are one-way,
// so those reports are candidates: the class exists in the lattice and passes
// the in-lattice checks, geometric existence is outside numerical scope.
struct LowDegreeCurveReport {
    LowDegreeKind kind = LowDegreeKind::none;
    bool candidate = false;
    std::vector<DivisorClass> classes;
};

inline const char* to_string(LowDegreeKind k) {
    switch (k) {
        case LowDegreeKind::line: return "line";
        case LowDegreeKind::conic: return "conic";
        case LowDegreeKind::rational_cubic: return "rational_cubic";
        case LowDegreeKind::none: return "none";
    }
    return "?";
}

inline LowDegreeCurveReport detect_low_degree_curves(Int g, Int d) {
    if (knutsen_smooth_quadric_existence(g, d) != K3Existence::exists_rank2)
        throw std::invalid_argument("detect_low_degree_curves: (g,d) must admit the rank-2 surface");
    const IntersectionLattice lat = make_k3_rank2(g, d);
    const int r = static_cast<int>(d % 6);

    auto checked_class = [&](Int x, Int b) {
        // a = (x - d b)/6 must be integral for the class to exist at all
        const Int num = x - d * b;
        if (num % 6 != 0) throw std::logic_error("detect_low_degree_curves: non-integral coefficient");
        DivisorClass cls = lat.divisor({num / 6, b});
        if (degree(cls) != x || intersect(cls, cls) != -2)
            throw std::logic_error("detect_low_degree_curves: in-lattice check failed");
        return cls;
    };

    LowDegreeCurveReport rep;
    if ((r == 1 || r == 5) && 12 * g == d * d - 1) {
        rep.kind = LowDegreeKind::line;
        rep.classes.push_back(checked_class(1, r == 1 ? 1 : -1));
    } else if ((r == 2 || r == 4) && 12 * g == d * d - 4) {
        rep.kind = LowDegreeKind::conic;
        rep.candidate = true;
        rep.classes.push_back(checked_class(2, r == 2 ? 1 : -1));
    } else if (r == 3 && 12 * g == d * d - 9) {
        rep.kind = LowDegreeKind::rational_cubic;
        rep.candidate = true;
        rep.classes.push_back(checked_class(3, 1));
        rep.classes.push_back(checked_class(3, -1));
    }
    return rep;
}

// Lower bound for the projective dimension of the linear system of degree-e
// hypersurfaces in P^n through a smooth irreducible curve of genus g and
// degree d:
//   C(n+e, e) + g - ed - 2                         if 2g - 2 < ed,
//   C(n+e, e) - 2 + min(g - ed, floor(-ed/2))      otherwise (Clifford).
inline Int binomial(Int n, Int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (Int i = 1; i <= k; ++i) r = checked_mul(r, n - k + i) / i;
    return r;
}

inline Int linear_system_dim_lower_bound(Int g, Int d, Int e, int n) {
    if (g < 0 || d < 1 || e < 1 || n < 1)
        throw std::invalid_argument("linear_system_dim_lower_bound: bad arguments");
    const Int monomials = binomial(n + e, e);
    const Int ed = checked_mul(e, d);
    if (2 * g - 2 < ed) return monomials + g - ed - 2;
    // floor of -ed/2: weakening the bound on odd ed is the safe direction
    const Int half = -((ed + 1) / 2);
    const Int cliff = (g - ed < half) ? g - ed : half;
    return monomials - 2 + cliff;
}

// A reduced degree-7 genus-4 curve on the sextic K3 that is not a complete
// intersection splits as L + G with L a line, G a degree-6 genus-4 hyperplane
// section and L.G = 1.  The classifier leans on this shape to exclude 4-secant
// lines of a genus-1 sextic.
struct FourSevenShape {
    Int line_degree = 1;
    Int line_genus = 0;
    Int partner_degree = 6;
    Int partner_genus = 4;
    Int pairing = 1;
};

inline constexpr bool forces_four_seven_shape(Int g, Int d) { return g == 4 && d == 7; }
inline FourSevenShape four_seven_shape() { return FourSevenShape{}; }

}  // namespace qfano
