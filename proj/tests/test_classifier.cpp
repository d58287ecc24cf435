#include <doctest.h>

#include <map>
#include <random>

#include "qfano/classifier.hpp"

using namespace qfano;

namespace {

// Table 2 data: (g, d) -> (raw bound, refined n_max).
const std::map<GdPair, std::pair<Int, Int>>& nmax_table() {
    static const std::map<GdPair, std::pair<Int, Int>> t = {
        {{0, 1}, {0, 0}},  {{0, 2}, {0, 0}},  {{0, 3}, {0, 0}},  {{0, 4}, {0, 0}},
        {{0, 5}, {0, 0}},  {{0, 6}, {1, 1}},  {{0, 7}, {2, 1}},  {{0, 8}, {3, 2}},
        {{1, 4}, {0, 0}},  {{1, 5}, {0, 0}},  {{1, 6}, {1, 0}},  {{1, 7}, {1, 1}},
        {{1, 8}, {3, 2}},  {{2, 5}, {0, 0}},  {{2, 6}, {0, 0}},  {{2, 7}, {1, 0}},
        {{2, 8}, {2, 1}},  {{2, 9}, {4, 2}},  {{3, 7}, {0, 0}},  {{3, 8}, {1, 1}},
        {{3, 9}, {2, 2}},  {{4, 6}, {0, 0}},  {{4, 8}, {0, 0}},  {{4, 9}, {2, 1}},
        {{5, 8}, {0, 0}},  {{5, 9}, {1, 1}},  {{5, 10}, {3, 2}}, {{6, 9}, {0, 0}},
        {{6, 10}, {1, 1}}, {{7, 10}, {1, 1}}, {{8, 10}, {0, 0}}, {{8, 11}, {2, 1}},
        {{9, 11}, {0, 0}}, {{11, 12}, {1, 1}}, {{13, 12}, {0, 0}}, {{14, 13}, {0, 0}}};
    return t;
}

struct PrintedDivisor {
    Int g, d, n, cg;
    std::array<Int, 3> coeffs;
    Int h_dot, self_int, c_dot, gamma_dot;
};

// Table 3 rows; the (2,8) gamma_dot is the recomputed +1, the print shows -1.
const std::vector<PrintedDivisor>& printed_divisors() {
    static const std::vector<PrintedDivisor> rows = {
        {0, 7, 2, 7, {-1, 1, 1}, 3, -2, -2, 3},
        {0, 8, 3, 10, {1, 0, -1}, 3, -2, -2, 5},
        {0, 8, 3, 11, {1, 0, -1}, 3, -2, -3, 5},
        {1, 8, 3, 10, {1, 0, -1}, 3, -2, -2, 5},
        {2, 7, 1, 4, {-1, 1, 1}, 2, -2, -1, 1},
        {2, 8, 2, 7, {2, -1, -2}, 0, -2, 0, 1},
        {2, 9, 4, 13, {-2, 1, 1}, 1, -2, -3, 3},
        {2, 9, 3, 10, {1, 0, -1}, 3, -2, -1, 5},
        {4, 9, 2, 7, {2, -1, -1}, 1, -2, 5, -1},
        {5, 10, 3, 10, {-2, 1, 1}, 1, -2, -2, 2},
        {8, 11, 2, 7, {-2, 1, 1}, 1, -2, -1, 1},
    };
    return rows;
}

}  // namespace

TEST_CASE("the (g,d) sets") {
    const auto& ps = p_sets();
    CHECK(ps.all.size() == 36);
    CHECK(ps.none.size() + ps.line.size() + ps.conic.size() == 36);
    CHECK(ps.plane.size() + ps.quadric.size() + ps.cubic.size() == 38);
    CHECK(ps.all.count({10, 11}) == 0);
    CHECK(ps.plane.count({0, 4}) == 1);
    CHECK(ps.quadric.count({0, 4}) == 1);
    CHECK(ps.quadric.count({3, 8}) == 1);
    CHECK(ps.cubic.count({3, 8}) == 1);
    // the containment partition covers P
    std::set<GdPair> by_surface;
    for (const auto& p : ps.plane) by_surface.insert(p);
    for (const auto& p : ps.quadric) by_surface.insert(p);
    for (const auto& p : ps.cubic) by_surface.insert(p);
    CHECK(by_surface == ps.all);
}

TEST_CASE("numeric membership agrees with the literal sets exhaustively") {
    const auto& all = p_sets().all;
    for (Int d = 1; d <= 30; ++d)
        for (Int g = 0; g <= 80; ++g)
            REQUIRE(p_membership_numeric(g, d) == (all.count({g, d}) == 1));
    CHECK_FALSE(p_membership_numeric(4, 7));
    CHECK(p_membership_numeric(13, 12));
    CHECK_FALSE(p_membership_numeric(28, 18));
}

TEST_CASE("anticanonical arithmetic") {
    CHECK(anticanonical_cube(0, 3) == 34);
    CHECK(anticanonical_cube(5, 8) == 14);
    CHECK(anticanonical_cube(2, 9) == 2);
    CHECK(anticanonical_sq_E(0, 3) == 11);
    CHECK(anticanonical_sq_E(10, 11) == 15);
    for (const auto& [g, d] : p_sets().all) {
        CHECK(anticanonical_cube(g, d) > 0);
        CHECK(anticanonical_sq_E(g, d) >= 0);
        const auto dim = anticanonical_dim(g, d);
        CHECK(dim.den == 1);
        CHECK(dim.num == anticanonical_cube(g, d) / 2 + 3);
    }
}

TEST_CASE("secant pairing") {
    CHECK(secant_pairing(1, 4) == -1);
    CHECK(secant_pairing(2, 6) == 0);
    CHECK(secant_pairing(2, 7) == -1);
}

TEST_CASE("raw polynomial bound") {
    for (const auto& [gd, bounds] : nmax_table()) CHECK(pgd_nmax_raw(gd.first, gd.second) == bounds.first);
    CHECK(pgd_nmax_raw(0, 8) == 3);
    CHECK(pgd_nmax_raw(0, 6) == 1);
    CHECK(pgd_nmax_raw(14, 13) == 0);
    CHECK_THROWS_AS(pgd_nmax_raw(10, 11), std::invalid_argument);
    // coefficient spot checks against the printed column
    CHECK(PgdPolynomial{0, 1}.linear_coeff() == -34);
    CHECK(PgdPolynomial{0, 1}.constant_coeff() == 0);
    CHECK(PgdPolynomial{2, 9}.constant_coeff() == 56);
    CHECK(PgdPolynomial{4, 6}.constant_coeff() == -13);
}

TEST_CASE("contradictory divisor search reproduces the printed certificates") {
    for (const auto& row : printed_divisors()) {
        const auto cert = search_contradictory_divisor(row.g, row.d, row.n);
        REQUIRE_MESSAGE(cert.has_value(), "(" << row.g << "," << row.d << ") n=" << row.n);
        CHECK(cert->reason == ObstructionReason::contradictory_divisor);
        bool found = false;
        for (const auto& div : cert->divisors) {
            if (div.cg != row.cg) continue;
            found = true;
            CHECK(div.coeffs == row.coeffs);
            CHECK(div.h_dot == row.h_dot);
            CHECK(div.self_int == row.self_int);
            CHECK(div.c_dot == row.c_dot);
            CHECK(div.gamma_dot == row.gamma_dot);
        }
        CHECK(found);
    }
    CHECK_THROWS_AS(search_contradictory_divisor(10, 11, 1), std::invalid_argument);
    CHECK_THROWS_AS(search_contradictory_divisor(0, 8, 12), std::invalid_argument);
}

TEST_CASE("refined n_max reproduces the table") {
    for (const auto& [gd, bounds] : nmax_table()) {
        const auto refined = nmax_refined(gd.first, gd.second);
        CHECK_MESSAGE(refined.n_max == bounds.second,
                      "(" << gd.first << "," << gd.second << ")");
        CHECK(refined.n_max <= 2);
        // bucket consistency
        const auto& ps = p_sets();
        if (ps.none.count(gd)) CHECK(refined.n_max == 0);
        if (ps.line.count(gd)) CHECK(refined.n_max == 1);
        if (ps.conic.count(gd)) CHECK(refined.n_max == 2);
    }

    const auto r16 = nmax_refined(1, 6);
    REQUIRE(r16.eliminations.size() == 1);
    CHECK(r16.eliminations[0].reason == ObstructionReason::special_rule_1_6);
    CHECK(r16.n_max == 0);

    const auto r39 = nmax_refined(3, 9);
    CHECK(r39.n_max == 2);
    CHECK(r39.eliminations.empty());

    const auto r29 = nmax_refined(2, 9);
    REQUIRE(r29.eliminations.size() == 2);  // n = 4 and n = 3 both eliminated
    CHECK(r29.eliminations[0].n == 4);
    CHECK(r29.eliminations[1].n == 3);
}

TEST_CASE("obstruction_for covers every excluded degree") {
    // (0,8): n = 9 is polynomial-negative, n = 3 divisor-eliminated, n <= 2 open
    auto o9 = obstruction_for(0, 8, 9);
    REQUIRE(o9.has_value());
    CHECK(o9->reason == ObstructionReason::polynomial_negative);
    CHECK(PgdPolynomial{0, 8}.eval(9) < 0);
    auto o3 = obstruction_for(0, 8, 3);
    REQUIRE(o3.has_value());
    CHECK(o3->reason == ObstructionReason::contradictory_divisor);
    CHECK_FALSE(obstruction_for(0, 8, 2).has_value());
    auto o16 = obstruction_for(1, 6, 1);
    REQUIRE(o16.has_value());
    CHECK(o16->reason == ObstructionReason::special_rule_1_6);
}

TEST_CASE("property: emitted certificates re-validate in a fresh lattice") {
    int validated = 0;
    for (const auto& [gd, bounds] : nmax_table()) {
        for (const auto& cert : nmax_refined(gd.first, gd.second).eliminations) {
            if (cert.reason != ObstructionReason::contradictory_divisor) continue;
            CHECK(cert.cg_lo == 3 * cert.n + 1);
            CHECK(cert.cg_hi == genus_bound_B(gd.second + cert.n).value + 1 - gd.first);
            CHECK(static_cast<Int>(cert.divisors.size()) == cert.cg_hi - cert.cg_lo + 1);
            for (const auto& div : cert.divisors) {
                const auto lat = make_k3_rank3(gd.first, gd.second, cert.n, div.cg);
                const auto D = lat.divisor({div.coeffs[0], div.coeffs[1], div.coeffs[2]});
                REQUIRE(intersect(lat.basis(0), D) == div.h_dot);
                REQUIRE(intersect(D, D) == div.self_int);
                REQUIRE(intersect(lat.basis(1), D) == div.c_dot);
                REQUIRE(intersect(lat.basis(2), D) == div.gamma_dot);
                ++validated;
            }
        }
    }
    CHECK(validated == 11);

    // randomized two-route check of the pairing formulas used by the search:
    // H.D = 6a + db + nc, C.D = da + (2g-2)b + cg*c, G.D = na + cg*b - 2c
    std::mt19937 rng(777);
    std::uniform_int_distribution<Int> gdist(0, 14), ddist(1, 13), ndist(1, 4), cgdist(0, 13),
        coeff(-5, 5);
    for (int iter = 0; iter < 10000; ++iter) {
        const Int g = gdist(rng), d = ddist(rng), n = ndist(rng), cg = cgdist(rng);
        const Int a = coeff(rng), b = coeff(rng), c = coeff(rng);
        const auto lat = make_k3_rank3(g, d, n, cg);
        const auto D = lat.divisor({a, b, c});
        REQUIRE(intersect(lat.basis(0), D) == 6 * a + d * b + n * c);
        REQUIRE(intersect(lat.basis(1), D) == d * a + (2 * g - 2) * b + cg * c);
        REQUIRE(intersect(lat.basis(2), D) == n * a + cg * b - 2 * c);
    }
}

TEST_CASE("classify: the headline cases") {
    {
        CurveInstance c{2, 5, Containment::unknown, TriState::unknown, TriState::unknown};
        CHECK(classify(c).verdict == Verdict::weak_fano);
    }
    {
        CurveInstance c{0, 8, Containment::smooth_cubic_section, TriState::no, TriState::no};
        const auto res = classify(c);
        CHECK(res.verdict == Verdict::weak_fano);
        CHECK(!res.certificates.empty());
    }
    {
        CurveInstance c{3, 8, Containment::smooth_cubic_section, TriState::yes, TriState::unknown};
        CHECK(classify(c).verdict == Verdict::not_weak_fano);
    }
    {
        CurveInstance c{10, 11, Containment::unknown, TriState::unknown, TriState::unknown};
        CHECK(classify(c).verdict == Verdict::not_weak_fano);
    }
    {
        CurveInstance c{0, 6, Containment::smooth_quadric_section, TriState::unknown,
                        TriState::unknown};
        const auto res = classify(c);
        CHECK(res.verdict == Verdict::insufficient_data);
        CHECK(!res.missing.empty());
    }
    {
        CurveInstance c{0, 6, Containment::smooth_quadric_section, TriState::no, TriState::unknown};
        CHECK(classify(c).verdict == Verdict::weak_fano);
    }
    {
        CurveInstance c{0, 6, Containment::smooth_quadric_section, TriState::yes, TriState::unknown};
        CHECK(classify(c).verdict == Verdict::not_weak_fano);
    }
    {
        // (0,4) needs the hyperplane flag for the plane route
        CurveInstance c{0, 4, Containment::hyperplane, TriState::unknown, TriState::unknown};
        CHECK(classify(c).verdict == Verdict::weak_fano);
        c.containment = Containment::unknown;
        CHECK(classify(c).verdict == Verdict::insufficient_data);
        c.containment = Containment::smooth_quadric_section;
        CHECK(classify(c).verdict == Verdict::weak_fano);
        c.containment = Containment::smooth_cubic_section;
        CHECK(classify(c).verdict == Verdict::weak_fano);  // (0,4) needs no exclusions there
    }
    {
        // P_line on a cubic section requires the line exclusion only
        CurveInstance c{5, 9, Containment::smooth_cubic_section, TriState::no, TriState::unknown};
        CHECK(classify(c).verdict == Verdict::weak_fano);
        c.has_4secant_line = TriState::unknown;
        CHECK(classify(c).verdict == Verdict::insufficient_data);
    }
}

TEST_CASE("property: classify is monotone under information refinement") {
    std::mt19937 rng(31415);
    std::uniform_int_distribution<Int> gdist(0, 16), ddist(1, 20);
    std::uniform_int_distribution<int> cdist(0, 3), tdist(0, 2);
    auto as_containment = [](int v) {
        switch (v) {
            case 0: return Containment::hyperplane;
            case 1: return Containment::smooth_quadric_section;
            case 2: return Containment::smooth_cubic_section;
            default: return Containment::unknown;
        }
    };
    auto as_tristate = [](int v) {
        switch (v) {
            case 0: return TriState::yes;
            case 1: return TriState::no;
            default: return TriState::unknown;
        }
    };
    int refinements = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        CurveInstance c;
        c.g = gdist(rng);
        c.d = ddist(rng);
        c.containment = as_containment(cdist(rng));
        c.has_4secant_line = as_tristate(tdist(rng));
        c.has_7secant_conic = as_tristate(tdist(rng));
        const Verdict base = classify(c).verdict;
        for (int bit = 0; bit < 2; ++bit) {
            TriState& field = bit == 0 ? c.has_4secant_line : c.has_7secant_conic;
            if (field != TriState::unknown) continue;
            for (TriState v : {TriState::yes, TriState::no}) {
                CurveInstance refined = c;
                (bit == 0 ? refined.has_4secant_line : refined.has_7secant_conic) = v;
                const Verdict after = classify(refined).verdict;
                if (base == Verdict::weak_fano) REQUIRE(after == Verdict::weak_fano);
                if (base == Verdict::not_weak_fano) REQUIRE(after == Verdict::not_weak_fano);
                ++refinements;
            }
        }
    }
    CHECK(refinements >= 10000);
}

TEST_CASE("existence audit") {
    const auto rep = existence_audit();
    CHECK(rep.all_pass);
    CHECK(rep.rows.size() == 36);
    CHECK(rep.line_pairs == std::set<GdPair>{{0, 1}, {2, 5}, {14, 13}});
    CHECK(rep.conic_pairs == std::set<GdPair>{{0, 2}, {1, 4}, {5, 8}, {8, 10}});
    for (const auto& row : rep.rows) {
        CHECK(row.pass);
        if (row.g == 4 && row.d == 6) CHECK(row.existence == K3Existence::complete_intersection);
        if (row.g == 5 && row.d == 9) {
            CHECK(row.existence == K3Existence::exists_rank2);
            CHECK(row.low_degree == LowDegreeKind::none);
        }
        if (row.low_degree == LowDegreeKind::line || row.low_degree == LowDegreeKind::conic)
            CHECK(row.n_max == 0);
    }
}
