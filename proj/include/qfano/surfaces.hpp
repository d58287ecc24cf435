#pragma once

// Curve classification on the three auxiliary surfaces: the smooth quadric
// surface P1 x P1, the quadric cone (worked on its resolution F2), and the
// quartic del Pezzo surface.  Includes secant counting, residual linear
// systems and decomposition into base-point-free generators.

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qfano/lattice.hpp"

namespace qfano {

using GdPair = std::pair<Int, Int>;  // (genus, degree)

// --- smooth quadric surface --------------------------------------------------

// Class a f1 + b f2; smooth irreducible exactly when a,b >= 1 or {a,b} = {1,0}.
struct SmoothQuadricCurve {
    Int a = 0;
    Int b = 0;
    Int degree() const { return a + b; }
    Int genus() const { return (a - 1) * (b - 1); }
    DivisorClass divisor_class() const { return make_quadric_smooth().divisor({a, b}); }
};

// All smooth irreducible classes with a >= b and degree <= max_degree.
inline std::vector<SmoothQuadricCurve> enumerate_smooth_quadric_curves(Int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("enumerate_smooth_quadric_curves: max_degree >= 1");
    std::vector<SmoothQuadricCurve> out;
    for (Int a = 1; a <= max_degree; ++a)
        for (Int b = 0; b <= a && a + b <= max_degree; ++b) {
            const bool irreducible = (b >= 1) || (a == 1 && b == 0);
            if (irreducible) out.push_back({a, b});
        }
    std::sort(out.begin(), out.end(), [](const SmoothQuadricCurve& x, const SmoothQuadricCurve& y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    return out;
}

// --- quadric cone via F2 ------------------------------------------------------

// Strict transform class a e + (2a+b) f on F2; b = 1 iff the curve passes
// through the vertex.
struct ConeCurve {
    Int a = 0;
    Int b = 0;  // 0 or 1
    bool through_vertex() const { return b == 1; }
    Int degree() const { return 2 * a + b; }
    Int genus() const { return (a - 1) * (a - 1 + b); }
    DivisorClass strict_transform() const { return make_f2().divisor({a, 2 * a + b}); }
};

inline std::vector<ConeCurve> enumerate_cone_curves(Int max_degree) {
    if (max_degree < 1) throw std::invalid_argument("enumerate_cone_curves: max_degree >= 1");
    std::vector<ConeCurve> out;
    for (Int a = 0; 2 * a <= max_degree; ++a)
        for (Int b = 0; b <= 1; ++b) {
            if (a == 0 && b == 0) continue;
            if (2 * a + b < 1 || 2 * a + b > max_degree) continue;
            out.push_back({a, b});
        }
    std::sort(out.begin(), out.end(), [](const ConeCurve& x, const ConeCurve& y) {
        return std::pair(x.degree(), x.a) < std::pair(y.degree(), y.a);
    });
    return out;
}

// m-secant count on the cone: Ghat.Chat + m_p(C) m_p(Gamma), with the vertex
// multiplicity of a curve read off as (strict transform).e.
inline Int cone_secant_count(const ConeCurve& gamma, const ConeCurve& c) {
    const IntersectionLattice f2 = make_f2();
    const DivisorClass gh = gamma.strict_transform();
    const DivisorClass ch = c.strict_transform();
    const DivisorClass e = f2.basis(0);
    return intersect(gh, ch) + intersect(gh, e) * intersect(ch, e);
}

// Residual system on F2: |3e + 6f - Chat| when the curve misses the vertex,
// |2e + 6f - Chat| when it passes through it.  Negative coefficients in the
// result mean there is no residual system; the caller decides.
inline DivisorClass residual_system_f2(const ConeCurve& c) {
    const IntersectionLattice f2 = make_f2();
    const DivisorClass total = c.through_vertex() ? f2.divisor({2, 6}) : f2.divisor({3, 6});
    return total - c.strict_transform();
}

// --- quartic del Pezzo surface ------------------------------------------------

// Strict transform k L - sum m_i E_i of a plane curve of degree k with
// multiplicities m, sorted ascending, subject to k >= m3 + m4 + m5.
struct DP4Curve {
    Int k = 0;
    std::array<Int, 5> m{};  // ascending
    Int degree() const { return 3 * k - (m[0] + m[1] + m[2] + m[3] + m[4]); }
    Int genus() const {
        Int s = 0;
        for (Int mi : m) s += mi * (mi - 1) / 2;
        return (k - 1) * (k - 2) / 2 - s;
    }
    DivisorClass divisor_class() const {
        return make_dp4().divisor({k, -m[0], -m[1], -m[2], -m[3], -m[4]});
    }
    bool valid() const {
        if (k < 1) return false;
        for (Int mi : m)
            if (mi < 0) return false;
        if (!std::is_sorted(m.begin(), m.end())) return false;
        return k >= m[2] + m[3] + m[4];
    }
};

// The 16 lines: E1..E5, the conic transform 2L - sum E_i, then the ten
// L - Ei - Ej in lexicographic (i,j) order.
inline std::vector<DivisorClass> dp4_lines() {
    const IntersectionLattice dp4 = make_dp4();
    std::vector<DivisorClass> lines;
    for (int i = 1; i <= 5; ++i) lines.push_back(dp4.basis(i));
    lines.push_back(dp4.divisor({2, -1, -1, -1, -1, -1}));
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j) {
            std::vector<Int> c{1, 0, 0, 0, 0, 0};
            c[static_cast<std::size_t>(i)] = -1;
            c[static_cast<std::size_t>(j)] = -1;
            lines.push_back(dp4.divisor(std::move(c)));
        }
    return lines;
}

// Intersection of the curve class with each of the 16 lines, in dp4_lines()
// order; entry > 3 flags a (3n+1)-secant line.
inline std::array<Int, 16> dp4_secant_line_profile(const DP4Curve& c) {
    const DivisorClass cls = c.divisor_class();
    std::array<Int, 16> out{};
    const auto lines = dp4_lines();
    for (std::size_t i = 0; i < 16; ++i) out[i] = intersect(cls, lines[i]);
    return out;
}

// All (k, m) representations of the given (g,d) pairs on the del Pezzo
// surface.  Output ordered by (g, d, k, m).
inline std::vector<DP4Curve> enumerate_dp4_curves(const std::vector<GdPair>& pairs) {
    std::vector<DP4Curve> out;
    for (const auto& [g, d] : pairs) {
        // 3k - sum(m) = d and k >= m3+m4+m5 >= (3/5) sum(m) bound k by 3d/4
        for (Int k = 1; 4 * k <= 3 * d + 4; ++k) {
            DP4Curve c;
            c.k = k;
            for (c.m[0] = 0; c.m[0] <= k; ++c.m[0])
                for (c.m[1] = c.m[0]; c.m[1] <= k; ++c.m[1])
                    for (c.m[2] = c.m[1]; c.m[2] <= k; ++c.m[2])
                        for (c.m[3] = c.m[2]; c.m[3] <= k; ++c.m[3])
                            for (c.m[4] = c.m[3]; c.m[4] <= k; ++c.m[4]) {
                                if (c.m[2] + c.m[3] + c.m[4] > k) continue;
                                if (c.degree() == d && c.genus() == g) out.push_back(c);
                            }
        }
    }
    return out;
}

// Run through all (k, m) with every one of the 16 line intersections <= 3 and
// collect the (g,d) of the resulting curves (degree >= 1, genus >= 0).  The
// 16 lines themselves contribute (0,1).  The grid is finite: m_i <= 3 from the
// exceptional lines and 2k - sum(m) <= 3 forces k <= 9.
inline std::set<GdPair> dp4_enumerate_weak_fano_pairs() {
    std::set<GdPair> out;
    out.insert({0, 1});  // the lines, not covered by the (k,m) parametrization
    for (Int k = 1; k <= 9; ++k) {
        DP4Curve c;
        c.k = k;
        for (c.m[0] = 0; c.m[0] <= 3; ++c.m[0])
            for (c.m[1] = c.m[0]; c.m[1] <= 3; ++c.m[1])
                for (c.m[2] = c.m[1]; c.m[2] <= 3; ++c.m[2])
                    for (c.m[3] = c.m[2]; c.m[3] <= 3; ++c.m[3])
                        for (c.m[4] = c.m[3]; c.m[4] <= 3; ++c.m[4]) {
                            if (c.m[2] + c.m[3] + c.m[4] > k) continue;
                            const auto profile = dp4_secant_line_profile(c);
                            bool ok = true;
                            for (Int v : profile)
                                if (v > 3) { ok = false; break; }
                            if (!ok) continue;
                            if (c.degree() >= 1 && c.genus() >= 0)
                                out.insert({c.genus(), c.degree()});
                        }
    }
    return out;
}

// --- base-point-free decomposition ---------------------------------------------

struct BpfGenerator {
    std::string label;
    DivisorClass cls;
};

struct BpfDecomposition {
    std::vector<BpfGenerator> summands;
    DivisorClass target;

    bool resums() const {
        DivisorClass acc = target.lattice().zero();
        for (const auto& s : summands) acc = acc + s.cls;
        return acc == target;
    }

    std::string to_string() const {
        if (summands.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < summands.size(); ++i) {
            if (i) s += "+";
            s += summands[i].label;
        }
        return s;
    }
};

// Fixed alphabet per surface.  The dP4 generators are ordered cubics before
// conics and, within a permutation type, by the index of the marked point;
// the decomposition search depends on this order for determinism.
inline std::vector<BpfGenerator> bpf_alphabet(const IntersectionLattice& lat) {
    std::vector<BpfGenerator> gens;
    if (lat == make_quadric_smooth()) {
        gens.push_back({"|f1|", lat.basis(0)});
        gens.push_back({"|f2|", lat.basis(1)});
        return gens;
    }
    if (lat == make_f2()) {
        gens.push_back({"|f|", lat.basis(1)});
        gens.push_back({"|e+2f|", lat.divisor({1, 2})});
        return gens;
    }
    if (lat == make_dp4()) {
        auto lambda = [&](Int a, std::array<Int, 5> b) {
            std::string label = "L(" + std::to_string(a) + ";";
            std::vector<Int> coords{a};
            for (Int bi : b) {
                label += std::to_string(bi);
                coords.push_back(-bi);
            }
            label += ")";
            return BpfGenerator{label, lat.divisor(coords)};
        };
        gens.push_back(lambda(1, {0, 0, 0, 0, 0}));
        gens.push_back(lambda(2, {0, 0, 0, 0, 0}));
        gens.push_back(lambda(3, {1, 1, 1, 1, 1}));
        for (int i = 0; i < 5; ++i) {
            std::array<Int, 5> b{1, 1, 1, 1, 1};
            b[static_cast<std::size_t>(i)] = 2;
            gens.push_back(lambda(3, b));
        }
        for (int i = 0; i < 5; ++i) {
            std::array<Int, 5> b{1, 1, 1, 1, 1};
            b[static_cast<std::size_t>(i)] = 0;
            gens.push_back(lambda(2, b));
        }
        return gens;
    }
    throw std::invalid_argument("bpf_alphabet: target must live on P1xP1, F2 or dP4");
}

namespace detail {
inline bool bpf_search(const std::vector<BpfGenerator>& gens, std::vector<Int>& remaining,
                       int start, int budget, std::vector<int>& picked) {
    bool zero = true;
    for (Int v : remaining)
        if (v != 0) { zero = false; break; }
    if (zero) return true;
    if (budget == 0) return false;
    for (int i = start; i < static_cast<int>(gens.size()); ++i) {
        const auto& g = gens[static_cast<std::size_t>(i)].cls.coords();
        for (std::size_t j = 0; j < remaining.size(); ++j) remaining[j] -= g[j];
        picked.push_back(i);
        if (bpf_search(gens, remaining, i, budget - 1, picked)) return true;
        picked.pop_back();
        for (std::size_t j = 0; j < remaining.size(); ++j) remaining[j] += g[j];
    }
    return false;
}
}  // namespace detail

// Exhaustive search for a nonnegative combination of alphabet generators
// summing to the target, at most max_summands summands (every decomposition
// in scope needs at most three).  Shorter decompositions are found first;
// failure is a value, not an error.
inline std::optional<BpfDecomposition> bpf_decompose(const DivisorClass& target,
                                                     int max_summands = 4) {
    const auto gens = bpf_alphabet(target.lattice());
    for (int budget = 0; budget <= max_summands; ++budget) {
        std::vector<Int> remaining = target.coords();
        std::vector<int> picked;
        if (detail::bpf_search(gens, remaining, 0, budget, picked)) {
            BpfDecomposition dec{{}, target};
            for (int i : picked) dec.summands.push_back(gens[static_cast<std::size_t>(i)]);
            return dec;
        }
    }
    return std::nullopt;
}

}  // namespace qfano
