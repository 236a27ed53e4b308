#include "irrlat/ehrhart.hpp"

#include "irrlat/constructions.hpp"
#include "irrlat/errors.hpp"
#include "oracle_utils.hpp"

#include <doctest.h>

using namespace irrlat;
using testutil::Rng;

namespace {

FieldContext f5() { return FieldContext(5); }
QuadraticNumber h0() { return {Rational(5, 2), Rational(1, 2), f5()}; }
QuadraticNumber k0() { return {Rational(5, 2), Rational(-1, 2), f5()}; }

Point ip(long long x, long long y, const FieldContext& ctx) {
    return {QuadraticNumber::from_int(x, ctx), QuadraticNumber::from_int(y, ctx)};
}

Polygon half_height_triangle() {
    FieldContext ctx = f5();
    return Polygon({ip(0, 0, ctx), ip(1, 0, ctx),
                    Point(QuadraticNumber::from_int(0, ctx),
                          QuadraticNumber::from_rational(Rational(1, 2), ctx))});
}

std::vector<Int> ints(std::initializer_list<long long> xs) {
    std::vector<Int> out;
    for (long long x : xs) out.emplace_back(x);
    return out;
}

}  // namespace

TEST_CASE("series sampling matches the frozen examples") {
    EhrhartSeries q = sample_series(quad_qhk(h0(), k0()), 4);
    CHECK(q.counts == ints({6, 16, 31, 51}));

    EhrhartSeries bad = sample_series(counterexample_union(5), 4);
    CHECK(bad.counts == ints({8, 24, 51, 87}));

    FieldContext ctx = f5();
    Polygon square({ip(0, 0, ctx), ip(1, 0, ctx), ip(1, 1, ctx), ip(0, 1, ctx)});
    CHECK(sample_series(square, 3).counts == ints({4, 9, 16}));

    CHECK_THROWS_AS(sample_series(square, 2), DomainError);
}

TEST_CASE("exact polynomial fit") {
    EhrhartSeries q = sample_series(quad_qhk(h0(), k0()), 8);
    PolynomialFit fit = fit_polynomial(q, 2);
    REQUIRE(fit.ok);
    CHECK(fit.coeffs == std::vector<Rational>{1, Rational(5, 2), Rational(5, 2)});

    EhrhartSeries bad = sample_series(counterexample_union(5), 8);
    PolynomialFit nofit = fit_polynomial(bad, 2);
    CHECK(!nofit.ok);
    CHECK(nofit.first_violation_t == 4);  // second differences 11, 9 diverge there

    EhrhartSeries squares{"squares", ints({4, 9, 16, 25})};
    PolynomialFit sq = fit_polynomial(squares, 2);
    REQUIRE(sq.ok);
    CHECK(sq.coeffs == std::vector<Rational>{1, 2, 1});

    CHECK_THROWS_AS(fit_polynomial(EhrhartSeries{"short", ints({1, 2, 3})}, 2), DomainError);
}

TEST_CASE("quasi-polynomial detection on a rational triangle") {
    EhrhartSeries s = sample_series(half_height_triangle(), 16, "half triangle");
    CHECK(s.counts[0] == 2);
    CHECK(s.counts[1] == 4);
    CHECK(s.counts[7] == 25);

    CollapseReport rep = detect_quasi(s, 2, 2);
    CHECK(rep.verdict == CollapseVerdict::Quasi);
    CHECK(rep.period == 2);
    REQUIRE(rep.fitted.has_value());
    // Derived parity closed forms: (t/2 + 1)^2 for even t,
    // ((t+1)/2)((t+3)/2) for odd t.
    for (long long t = 1; t <= 16; ++t) {
        Rational expected = t % 2 == 0 ? Rational((t / 2 + 1) * (t / 2 + 1))
                                       : Rational((t + 1) / 2 * ((t + 3) / 2));
        CHECK(rep.fitted->eval(t) == expected);
    }
}

TEST_CASE("quasi-polynomial detection on collapsing and non-collapsing shapes") {
    EhrhartSeries q = sample_series(quad_qhk(h0() + Rational(1), k0()), 16);
    CollapseReport rep = detect_quasi(q, 2, 4);
    CHECK(rep.verdict == CollapseVerdict::Polynomial);
    CHECK(rep.fitted->classes[0] == std::vector<Rational>{1, 3, 3});  // 3t^2 + 3t + 1

    // p_max = 1 already certifies the Q family, and any degree-2 fit has
    // constant second differences.
    CollapseReport p1 = detect_quasi(q, 2, 1);
    CHECK(p1.verdict == CollapseVerdict::Polynomial);
    for (long long t = 1; t + 2 <= 16; ++t) {
        Int d2 = q.at(t + 2) - 2 * q.at(t + 1) + q.at(t);
        CHECK(d2 == 6);  // 2 * leading coefficient
    }

    EhrhartSeries bad = sample_series(counterexample_union(5), 48);
    CollapseReport nofit = detect_quasi(bad, 2, 12);
    CHECK(nofit.verdict == CollapseVerdict::NoFit);
    CHECK(nofit.period_searched == 12);

    CHECK_THROWS_AS(detect_quasi(bad, 2, 13), DomainError);  // needs 52 samples
}

TEST_CASE("closed forms") {
    CHECK(closed_form_cgls(3, 3, 2) == 6);  // (1/2)*1*4 + (1/2)*3*2 + 1
    CHECK(closed_form_cgls(1, 5, 1) == 6);
    CHECK(closed_form_leg_sum(5, 2) == 16);
    CHECK(closed_form_pyramid(5, 1) == 6);
    CHECK(closed_form_fan_edges(0, 2, 5, 1) == 12);  // (0 + 5*2)*1 + 2
    CHECK(closed_form_counterexample(h0(), 5, 2) == 24);  // 20 + 10 - 7 + 1
    CHECK(closed_form_counterexample(h0(), 5, 1) == 8);

    AssembledPolygon rhombus = assemble(seed_data(4));
    CHECK(closed_form_fan(rhombus, 1) == 13);
    for (size_t n : {4u, 6u, 7u, 9u, 11u}) {
        AssembledPolygon a = assemble(seed_data(n));
        for (long long t = 1; t <= 10; ++t)
            CHECK(closed_form_fan(a, t) == count_assembled(a, t).count);
    }
    // The edge-total form generalizes (n_total + (h0+k0)k)t + k beyond beta = 5.
    AssembledPolygon b7 = assemble(seed_data(6, 7));
    for (long long t = 1; t <= 6; ++t)
        CHECK(closed_form_fan(b7, t) == count_assembled(b7, t).count);
}

TEST_CASE("sampling a closed form and fitting recovers its coefficients") {
    Rng rng(404);
    for (int i = 0; i < 20; ++i) {
        Int s(rng.uniform(2, 40));
        std::vector<Int> counts;
        for (long long t = 1; t <= 8; ++t) counts.push_back(closed_form_leg_sum(s, t));
        PolynomialFit fit = fit_polynomial({"synthetic", counts}, 2);
        REQUIRE(fit.ok);
        CHECK(fit.coeffs ==
              std::vector<Rational>{1, Rational(s, 2), Rational(s, 2)});
    }
}

TEST_CASE("verify_collapse end to end") {
    CollapseReport rep = verify_collapse(quad_qhk(h0() + Rational(2), k0() + Rational(2)),
                                         LegSumForm{9}, 24, 4, 2, "Q(h0+2,k0+2)");
    CHECK(rep.verdict == CollapseVerdict::Polynomial);
    CHECK(rep.fitted->classes[0] ==
          std::vector<Rational>{1, Rational(9, 2), Rational(9, 2)});
    CHECK(rep.closed_form == ClosedFormOutcome::Match);
    CHECK(rep.non_integral_vertices);
    CHECK(rep.render().find("polynomial") != std::string::npos);

    AssembledPolygon nonagon = assemble(seed_data(9));
    CollapseReport rep9 = verify_collapse(nonagon, FanForm{}, 16, 2, 2, "nonagon");
    CHECK(rep9.verdict == CollapseVerdict::Polynomial);
    // Leading coefficient equals the exact area.
    QuadraticNumber a = area(nonagon.outer);
    CHECK(a.is_rational());
    CHECK(rep9.fitted->classes[0][2] == a.a());
    CHECK(rep9.closed_form == ClosedFormOutcome::Match);

    CollapseReport repbad =
        verify_collapse(counterexample_union(5), CounterexampleForm{h0(), 5}, 36, 6, 2,
                        "counterexample");
    CHECK(repbad.verdict == CollapseVerdict::NoFit);
    CHECK(repbad.closed_form == ClosedFormOutcome::Match);  // Eq-style floor formula matches
    CHECK(repbad.render().find("not a proof") != std::string::npos);

    // A wrong closed form is reported with the first mismatch.
    CollapseReport wrong = verify_collapse(quad_qhk(h0(), k0()), LegSumForm{7}, 8, 2, 2);
    CHECK(wrong.closed_form == ClosedFormOutcome::Mismatch);
    CHECK(wrong.closed_form_mismatch_t == 1);
}

TEST_CASE("constant term is 1 for convex constructions containing the origin") {
    for (auto [h_off, k_off] : {std::pair<int, int>{0, 0}, {1, 0}, {2, 1}}) {
        EhrhartSeries s =
            sample_series(quad_qhk(h0() + Rational(h_off), k0() + Rational(k_off)), 8);
        PolynomialFit fit = fit_polynomial(s, 2);
        REQUIRE(fit.ok);
        CHECK(fit.coeffs[0] == 1);
    }
    EhrhartSeries pyr = sample_series(pyramid_over(-h0(), k0()), 8);
    PolynomialFit fitp = fit_polynomial(pyr, 2);
    REQUIRE(fitp.ok);
    CHECK(fitp.coeffs[0] == 1);
    CHECK(fitp.coeffs[2] == Rational(5, 2));
}

TEST_CASE("polynomial formatting") {
    CHECK(format_polynomial({1, Rational(5, 2), Rational(5, 2)}) ==
          "5/2*t^2 + 5/2*t + 1");
    CHECK(format_polynomial({0, Rational(-1, 3)}) == "-1/3*t");
    CHECK(format_polynomial({Rational(2)}) == "2");
    CHECK(format_polynomial({0, 1, 1}) == "t^2 + t");
}
