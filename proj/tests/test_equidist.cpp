#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "areal/equidist.hpp"
#include "areal/pairings.hpp"

using namespace areal;
using Catch::Matchers::WithinAbs;

namespace {
const double PI = 3.14159265358979323846;

RadiusProfile arch_profile(double r) {
    RadiusProfile rp;
    rp.radii[Place::infinity()] = Radius::from_double(r);
    return rp;
}

IntPolynomial family_poly(long p) {
    std::vector<BigInt> cs(static_cast<std::size_t>(p) + 1);
    cs[0] = -1;
    cs[static_cast<std::size_t>(p)] = 2;
    return IntPolynomial(std::move(cs));
}

WeightedPoints roots_of_unity(int n, double radius = 1.0) {
    WeightedPoints pts;
    for (int k = 0; k < n; ++k)
        pts.push_back({std::polar(radius, 2.0 * PI * k / n), 1.0});
    return pts;
}
}  // namespace

TEST_CASE("lehmer failure family closed forms") {
    auto unit = RadiusProfile::parse("inf:1");
    Rational half = make_rational(1, 2);

    auto recs = lehmer_failure_sequence(half, {3}, unit);
    REQUIRE(recs.size() == 1);
    const auto& r3 = recs[0];
    REQUIRE(r3.index == 3);
    REQUIRE(r3.degree == 3);
    double gap3 = std::log(2.0) / 3.0 + (std::pow(2.0, -2.0 / 3.0) - 1.0) / 2.0;
    REQUIRE_THAT(r3.gap, WithinAbs(gap3, 1e-14));
    REQUIRE_THAT(r3.height, WithinAbs(0.125 + gap3, 1e-14));
    REQUIRE_THAT(r3.scaled_gap, WithinAbs(3.0 * gap3, 1e-13));
    REQUIRE_FALSE(r3.discrepancy.has_value());

    auto r101 = lehmer_failure_sequence(half, {101}, unit)[0];
    REQUIRE_THAT(r101.scaled_gap, WithinAbs(0.004735, 1e-6));
    REQUIRE_THAT(101.0 * 101.0 * r101.gap, WithinAbs(0.47826, 1e-5));

    // Closed-form records match heights computed from the explicit
    // minimal polynomials 2x^p - 1.
    for (long p : {3L, 5L, 7L, 11L, 17L, 23L, 31L, 41L, 53L, 61L}) {
        auto rec = lehmer_failure_sequence(half, {p}, unit)[0];
        auto alpha = AlgebraicNumberInput::from_poly(family_poly(p));
        double ref = areal_height(alpha, unit).total - 0.125;
        REQUIRE_THAT(rec.gap, WithinAbs(ref, 1e-9));
    }

    REQUIRE_THROWS_AS(lehmer_failure_sequence(Rational(2), {3}, unit), domain_error);
    REQUIRE_THROWS_AS(lehmer_failure_sequence(Rational(0), {3}, unit), domain_error);
    REQUIRE_THROWS_AS(lehmer_failure_sequence(half, {9}, unit), domain_error);
    REQUIRE_THROWS_AS(lehmer_failure_sequence(half, {3},
                                              RadiusProfile::parse("inf:1,2:1/2")),
                      domain_error);
}

TEST_CASE("lehmer failure decay") {
    auto unit = RadiusProfile::parse("inf:1");
    Rational half = make_rational(1, 2);
    std::vector<long> primes;
    for (long p : primes_up_to(499))
        if (p >= 11) primes.push_back(p);
    auto recs = lehmer_failure_sequence(half, primes, unit);
    REQUIRE(recs.size() == primes.size());

    double L2 = std::log(2.0) * std::log(2.0);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        REQUIRE(recs[i].gap >= -1e-12);
        REQUIRE(recs[i].gap > 0.0);
        if (i > 0) REQUIRE(recs[i].scaled_gap < recs[i - 1].scaled_gap);
        if (recs[i].index >= 101) {
            double p2 = double(recs[i].index) * double(recs[i].index) * recs[i].gap;
            REQUIRE(p2 >= 0.97 * L2);
            REQUIRE(p2 <= L2);
        }
    }
}

TEST_CASE("shrunken profile attains the family floor") {
    // At r = 1/2 every family member sits exactly on the pole constant: the
    // archimedean deficit -log(2)/p cancels the 2-adic surplus log(2)/p.
    auto halfprof = RadiusProfile::parse("inf:1/2");
    Rational half = make_rational(1, 2);
    auto recs = lehmer_failure_sequence(half, {3, 11, 101}, halfprof);
    for (const auto& rec : recs) {
        REQUIRE_THAT(rec.gap, WithinAbs(0.0, 1e-14));
        REQUIRE(rec.gap >= -1e-12);
    }
    auto kron = kronecker_classify(AlgebraicNumberInput::from_poly(family_poly(3)),
                                   halfprof);
    REQUIRE(kron.attains_minimum);
}

TEST_CASE("empirical discrepancy") {
    for (int N : {3, 10, 16, 33, 64, 100}) {
        double d = empirical_discrepancy(roots_of_unity(N), Circle{1.0});
        REQUIRE(d >= 0.0);
        REQUIRE(d <= 16.0 / N);
    }

    // The p-th-root family concentrates on a slightly shrunken circle.
    double prev = 2.0;
    for (long p : {11L, 101L, 401L}) {
        double s = std::pow(2.0, -1.0 / double(p));
        auto pts = roots_of_unity(static_cast<int>(p), s);
        REQUIRE(empirical_discrepancy(pts, Circle{s}) <= 16.0 / double(p));
        double d1 = empirical_discrepancy(pts, Circle{1.0});
        REQUIRE(d1 <= (1.0 - s) + 16.0 / double(p));
        REQUIRE(d1 < prev);
        prev = d1;
    }
    REQUIRE(prev < 0.01);

    WeightedPoints origin{{{0.0, 0.0}, 1.0}};
    REQUIRE(empirical_discrepancy(origin, ArealDisk{1.0}) == 1.0);

    // Disk samples drawn from the target law come in close.
    std::mt19937_64 rng(424242);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    WeightedPoints sample;
    for (int i = 0; i < 4096; ++i)
        sample.push_back({std::polar(std::sqrt(u01(rng)), 2.0 * PI * u01(rng)), 1.0});
    REQUIRE(empirical_discrepancy(sample, ArealDisk{1.0}) < 0.06);

    // Far-flung points clamp at the diameter bound.
    WeightedPoints far{{{10.0, 0.0}, 1.0}};
    REQUIRE(empirical_discrepancy(far, Circle{1.0}) == std::sqrt(2.0));

    REQUIRE_THROWS_AS(empirical_discrepancy(origin, ChebyshevEquilibrium{}),
                      unsupported_measure);
    REQUIRE_THROWS_AS(empirical_discrepancy(WeightedPoints{}, Circle{1.0}),
                      invalid_input);
}

TEST_CASE("arithmetic threshold") {
    auto low = arithmetic_measure_check(1.0);
    REQUIRE_FALSE(low.arithmetic);
    REQUIRE(low.certificate == -0.5);

    auto edge = arithmetic_measure_check(std::exp(0.5));
    REQUIRE(edge.arithmetic);
    REQUIRE_THAT(edge.certificate, WithinAbs(0.0, 1e-15));
    REQUIRE_FALSE(arithmetic_measure_check(std::nextafter(std::exp(0.5), 0.0)).arithmetic);

    auto two = arithmetic_measure_check(2.0);
    REQUIRE(two.arithmetic);
    REQUIRE(two.certificate == std::log(2.0) - 0.5);
    REQUIRE_THAT(two.certificate, WithinAbs(0.193147, 1e-6));

    REQUIRE_THROWS_AS(arithmetic_measure_check(0.0), invalid_input);
}

TEST_CASE("limiting heights of uniform sequences") {
    auto edge = limiting_height_for_uniform(std::exp(0.5));
    REQUIRE(edge.arithmetic);
    REQUIRE_THAT(edge.limit, WithinAbs(0.125, 1e-15));
    REQUIRE(edge.exceeds_essential_min);

    auto two = limiting_height_for_uniform(2.0);
    REQUIRE(two.arithmetic);
    REQUIRE_THAT(two.limit, WithinAbs(-0.125 + 0.5 * std::log(2.0), 1e-15));
    REQUIRE_THAT(two.limit, WithinAbs(0.221574, 1e-6));
    // Coincides with the Chebyshev pairing at radius 2.
    REQUIRE_THAT(two.limit, WithinAbs(az_chebyshev(2.0).value, 1e-12));
    REQUIRE(two.limit > essential_minimum(RadiusProfile::parse("inf:2")));

    REQUIRE_FALSE(limiting_height_for_uniform(1.0).arithmetic);

    for (double r : {1.7, 2.0, 3.5}) {
        auto res = limiting_height_for_uniform(r);
        REQUIRE(res.arithmetic);
        REQUIRE(res.exceeds_essential_min == (res.limit > essential_minimum(arch_profile(r))));
    }
}

TEST_CASE("cyclotomic sequences sit on the floor") {
    auto halfp = RadiusProfile::parse("inf:1/2");
    auto unit = RadiusProfile::parse("inf:1");
    double floor_value = essential_minimum(halfp);
    REQUIRE_THAT(az_closed_form(halfp, unit).value, WithinAbs(floor_value, 1e-15));
    for (int n : {3, 4, 5, 7, 9, 12, 25, 50, 100}) {
        auto zeta = AlgebraicNumberInput::from_poly(cyclotomic(n));
        REQUIRE(std::abs(lambda_height(zeta, unit).total) <= 5e-14);
        REQUIRE_THAT(areal_height(zeta, halfp).total, WithinAbs(floor_value, 1e-12));
        REQUIRE_THAT(areal_height(zeta, unit).total, WithinAbs(0.125, 1e-12));
    }
    for (int N : {8, 40, 96}) {
        REQUIRE(empirical_discrepancy(roots_of_unity(N), Circle{1.0}) <= 16.0 / N);
    }
}
