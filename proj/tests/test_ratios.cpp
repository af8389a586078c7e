#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kummerscan/ratios.hpp>

#include <cmath>

using namespace ks;
using namespace ks::ratios;

namespace {

double rel_diff(double got, double want) {
    return std::fabs(got - want) / std::fabs(want);
}

double val(const RatioValue& r) { return static_cast<double>(r.value); }

} // namespace

// Reference values computed independently with mpmath at 40 digits.
TEST_CASE("reference values") {
    CHECK(rel_diff(val(f_ratio(1, 1)), 0.72697959516896243797) < 1e-15);
    CHECK(rel_diff(val(f_ratio(2, 5)), 0.92042470845679006504) < 1e-15);
    CHECK(rel_diff(val(f_ratio(3, 0.5)), 0.80710485756960110133) < 1e-15);
    CHECK(rel_diff(val(f_ratio(5, 20)), 0.99987173114670873753) < 1e-15);
    CHECK(rel_diff(val(g_ratio(1, 1)), 1.0904693927534436569) < 1e-15);
    CHECK(rel_diff(val(g_ratio(2, 3)), 1.1321780550588932044) < 1e-15);
    CHECK(rel_diff(val(h_abc(2, 4, 1, 3)), 1.1776545051223038534) < 1e-15);
    CHECK(rel_diff(val(h_abc(0.5, 2.5, 0.75, 1.25)), 1.0614770001021721557) < 1e-15);
    CHECK(rel_diff(val(ratio_derivative(RatioSpec::f(1), 1)), 0.064098530462406462364) < 1e-14);
    CHECK(rel_diff(val(ratio_derivative(RatioSpec::f(2), 5)), 0.030985638069715098402) < 1e-14);
    CHECK(rel_diff(val(ratio_derivative(RatioSpec::g(1), 2)), 0.097829121932894968272) < 1e-14);
    CHECK(rel_diff(val(ratio_derivative(RatioSpec::habc(2, 4, 1), 1.5)),
                   0.060620472927949266105) < 1e-14);
}

TEST_CASE("f equals (n+1)/(n+2) g") {
    for (int n = 1; n <= 8; ++n) {
        for (double x : {0.1, 1.0, 4.0, 15.0, 60.0}) {
            BigReal f = f_ratio(n, x, 256).value;
            BigReal g = g_ratio(n, x, 256).value;
            BigReal rhs = BigReal(n + 1.0, 256) / (n + 2.0) * g;
            CHECK(static_cast<double>(abs(f - rhs) / f) < 1e-60);
        }
    }
}

TEST_CASE("proved bounds hold pointwise") {
    for (int n = 1; n <= 6; ++n) {
        for (double x : {0.0, 0.01, 0.5, 2.0, 10.0, 80.0}) {
            RatioValue f = f_ratio(n, x);
            BigReal lower(n + 1.0, 128);
            lower /= n + 2.0;
            CHECK(f.value >= lower - f.abs_error_bound);
            CHECK(f.value <= 1 + static_cast<double>(f.abs_error_bound));
        }
    }
}

TEST_CASE("h is even in c") {
    for (double c : {0.25, 1.0, 1.75}) {
        BigReal plus = h_abc(1.5, 4, c, 2.5).value;
        BigReal minus = h_abc(1.5, 4, -c, 2.5).value;
        CHECK(plus == minus);
    }
}

TEST_CASE("specialization chain h_pq -> h_abc -> g_n") {
    for (int n = 1; n <= 5; ++n) {
        for (double x : {0.1, 1.0, 10.0}) {
            double hp = val(h_pfq({1}, {n + 2.0}, {1}, x, 256));
            double ha = val(h_abc(1, n + 2.0, 1, x, 256));
            double g = val(g_ratio(n, x, 256));
            CHECK(rel_diff(hp, ha) < 1e-12);
            CHECK(rel_diff(ha, g) < 1e-12);
        }
    }
}

TEST_CASE("x = 0 continuous extensions") {
    RatioValue f0 = f_ratio(3, 0);
    CHECK(f0.defined_by_limit);
    CHECK(rel_diff(val(f0), 4.0 / 5.0) < 1e-16);

    RatioValue g0 = g_ratio(2, 0);
    CHECK(val(g0) == 1.0);
    RatioValue h0 = h_abc(2, 5, 1.5, 0);
    CHECK(val(h0) == 1.0);
}

TEST_CASE("derivatives match finite differences") {
    const double h = 1e-6;
    const RatioSpec specs[] = {RatioSpec::f(2), RatioSpec::g(3),
                               RatioSpec::habc(2, 6, 1.5),
                               RatioSpec::hpfq({1, 2}, {4, 5}, {0.5, 1})};
    for (const auto& spec : specs) {
        for (double x : {0.5, 2.0, 8.0}) {
            double fd = (val(ratio_value(spec, x + h, 192)) -
                         val(ratio_value(spec, x - h, 192))) / (2 * h);
            double an = val(ratio_derivative(spec, x, 192));
            CHECK(rel_diff(an, fd) < 1e-7);
        }
    }
}

TEST_CASE("h'(0) closed form 2ac^2 / (b(b^2 - c^2))") {
    for (double a : {0.5, 1.0, 3.0}) {
        for (double b : {2.0, 4.5, 9.0}) {
            for (double c : {0.25, 1.0, 1.75}) {
                double want = 2 * a * c * c / (b * (b * b - c * c));
                double got = val(ratio_derivative(RatioSpec::habc(a, b, c), 0));
                CHECK(rel_diff(got, want) < 1e-12);
            }
        }
    }
}

TEST_CASE("c = 0 collapses h to the constant 1") {
    RatioValue v = h_abc(2, 4, 0, 3);
    CHECK(val(v) == 1.0);
    RatioValue d = ratio_derivative(RatioSpec::habc(2, 4, 0), 3);
    CHECK(d.value.is_zero());
    CHECK(d.abs_error_bound.is_zero());
}

TEST_CASE("reciprocal wrapping") {
    RatioSpec r = RatioSpec::g(1).reciprocal_of();
    CHECK(r.reciprocal);
    CHECK(r.reciprocal_of().reciprocal == false);

    double g = val(g_ratio(1, 2));
    double rg = val(ratio_value(r, 2));
    CHECK(rel_diff(rg, 1.0 / g) < 1e-15);

    double dg = val(ratio_derivative(RatioSpec::g(1), 2));
    double drg = val(ratio_derivative(r, 2));
    CHECK(rel_diff(drg, -dg / (g * g)) < 1e-12);
    CHECK(drg < 0);
}

TEST_CASE("limits") {
    auto [z, inf] = ratio_limits(RatioSpec::f(3));
    CHECK(z.known);
    CHECK(z.value == doctest::Approx(0.8));
    CHECK(inf.known);
    CHECK(inf.value == 1.0);

    auto [gz, ginf] = ratio_limits(RatioSpec::g(3));
    CHECK(gz.value == 1.0);
    CHECK(ginf.value == doctest::Approx(5.0 / 4.0));

    auto [hz, hinf] = ratio_limits(RatioSpec::habc(1, 3, 1));
    CHECK(hz.value == 1.0);
    CHECK(hinf.known); // a = 1: gamma closed form
    CHECK(hinf.value == doctest::Approx(std::tgamma(2.0) * std::tgamma(4.0) /
                                        (std::tgamma(3.0) * std::tgamma(3.0))));
    auto [hz2, hinf2] = ratio_limits(RatioSpec::habc(2, 3, 1));
    CHECK(hz2.known);
    CHECK_FALSE(hinf2.known);

    auto [rz, rinf] = ratio_limits(RatioSpec::f(3).reciprocal_of());
    CHECK(rz.value == doctest::Approx(1.25));
    CHECK(rinf.value == 1.0);
}

TEST_CASE("n = 0 only behind allow_n0") {
    CHECK_THROWS_AS(f_ratio(0, 1), DomainError);
    RatioValue v = f_ratio(0, 1, 128, /*allow_n0=*/true);
    // f_0 = R_{-1} R_1 / R_0^2 with R_{-1} = e^x
    CHECK(val(v) > 0.5);
    CHECK(val(v) < 1.0);
    RatioValue v0 = f_ratio(0, 0, 128, true);
    CHECK(rel_diff(val(v0), 0.5) < 1e-16);
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(RatioSpec::g(0).validate(), DomainError);
    CHECK_THROWS_AS(RatioSpec::habc(1, 2, 3).validate(), DomainError);    // b - |c| <= 0
    CHECK_THROWS_AS(RatioSpec::habc(-1, 4, 1).validate(), DomainError);
    CHECK_THROWS_AS(RatioSpec::hpfq({1}, {2, 3}, {1}).validate(), DomainError);
    CHECK_THROWS_AS(RatioSpec::hpfq({1, 2, 3}, {4}, {1}).validate(), DivergentSeries);
    CHECK_THROWS_AS(f_ratio(1, -1), DomainError);
    CHECK_NOTHROW(RatioSpec::hpfq({1, 2}, {4, 5}, {1, 2}).validate());
}

TEST_CASE("canonical keys") {
    CHECK(RatioSpec::f(3).canonical_key() == "f(n=3)");
    CHECK(RatioSpec::g(1).reciprocal_of().canonical_key() == "recip:g(n=1)");
    // c is normalized to |c|
    CHECK(RatioSpec::habc(1, 4, -1).canonical_key() == RatioSpec::habc(1, 4, 1).canonical_key());
}
