#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <random>

#include "areal/heights.hpp"

using namespace areal;
using Catch::Matchers::WithinAbs;

namespace {
IntPolynomial P(std::initializer_list<long> cs) {
    std::vector<BigInt> v;
    for (long c : cs) v.emplace_back(c);
    return IntPolynomial(std::move(v));
}

AlgebraicNumberInput num(std::initializer_list<long> cs) {
    return AlgebraicNumberInput::from_poly(P(cs));
}

RadiusProfile unit_disk() { return RadiusProfile::parse("inf:1"); }

const double PHI = (1.0 + std::sqrt(5.0)) / 2.0;
const double PSI_ABS = (std::sqrt(5.0) - 1.0) / 2.0;
}  // namespace

TEST_CASE("classical heights") {
    REQUIRE_THAT(weil_height(num({-2, 1})).total, WithinAbs(std::log(2.0), 1e-15));
    REQUIRE_THAT(weil_height(num({-1, 2})).total, WithinAbs(std::log(2.0), 1e-15));
    REQUIRE_THAT(weil_height(num({-1, -1, 1})).total, WithinAbs(0.5 * std::log(PHI), 1e-13));
    REQUIRE(weil_height(AlgebraicNumberInput::zero()).total == 0.0);
    REQUIRE(weil_height(AlgebraicNumberInput::infinity()).total == 0.0);
    // Report arithmetic is internally consistent.
    auto rep = weil_height(num({-1, 2}));
    double acc = rep.infinity_constant;
    for (const auto& pc : rep.per_place) acc += pc.contribution;
    REQUIRE_THAT(rep.total, WithinAbs(acc, 1e-12));
}

TEST_CASE("mahler measures") {
    REQUIRE(mahler_measure(P({-1, 1})) == 0.0);
    REQUIRE_THAT(mahler_measure(P({-1, -1, 1})), WithinAbs(std::log(PHI), 1e-13));
    // Smallest known value, degree 10.
    REQUIRE_THAT(mahler_measure(P({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1})),
                 WithinAbs(0.162357612007738, 1e-9));
    // Scaling enters through the leading coefficient.
    REQUIRE_THAT(mahler_measure(P({-1, 2})), WithinAbs(std::log(2.0), 1e-15));
    REQUIRE_THROWS_AS(mahler_measure(IntPolynomial{}), invalid_input);
}

TEST_CASE("areal mahler measures") {
    REQUIRE(areal_mahler_measure(P({-1, 1})) == 0.0);
    double expected = std::log(PHI) + (PSI_ABS * PSI_ABS - 1.0) / 2.0;
    REQUIRE_THAT(areal_mahler_measure(P({-1, -1, 1})), WithinAbs(expected, 1e-12));
    REQUIRE(areal_mahler_measure(P({0, 1})) == -0.5);
}

TEST_CASE("areal heights at the unit profile") {
    REQUIRE(areal_height(AlgebraicNumberInput::zero(), unit_disk()).total == -0.375);
    REQUIRE(areal_height(num({-1, 1}), unit_disk()).total == 0.125);
    REQUIRE(areal_height(AlgebraicNumberInput::infinity(), unit_disk()).total == 0.125);

    double closed = 0.125 + 0.5 * (std::log(PHI) + f_r(1.0, PSI_ABS));
    auto rep = areal_height(num({-1, -1, 1}), unit_disk());
    REQUIRE_THAT(rep.total, WithinAbs(closed, 1e-13));
    REQUIRE_THAT(rep.total, WithinAbs(0.211097, 1e-6));
    REQUIRE(rep.infinity_constant == 0.125);

    // Independent oracle: h(inf) + (1/n) * polar quadrature of log|P| against
    // the uniform unit-disk measure.
    const int nr = 2048, nt = 2048;
    const double pi = 3.141592653589793238462643383279502884;
    double acc = 0.0;
    for (int i = 0; i < nr; ++i) {
        double s = (i + 0.5) / nr;
        double ring = 0.0;
        for (int j = 0; j < nt; ++j) {
            double theta = 2.0 * pi * (j + 0.5) / nt;
            std::complex<double> z = std::polar(s, theta);
            ring += std::log(std::abs((z * z - z - 1.0)));
        }
        acc += (ring / nt) * 2.0 * s / nr;
    }
    REQUIRE_THAT(rep.total, WithinAbs(0.125 + 0.5 * acc, 5e-6));
}

TEST_CASE("areal height with a finite place in S") {
    // alpha = 2, S = {inf, 2}, r = (2, 1/2): both places use the quadratic branch
    // or the log branch exactly as the comparison dictates.
    auto rp = RadiusProfile::parse("inf:2,2:1/2");
    auto rep = areal_height(num({-2, 1}), rp);
    // h(inf) = 2/8 - (1/2)(log 2 + log 1/2) = 1/4.
    REQUIRE_THAT(rep.infinity_constant, WithinAbs(0.25, 1e-15));
    // At inf: |2| = 2 = r, f = log 2. At p=2: |2|_2 = 1/2 = r_2, f = log(1/2).
    // The two finite parts cancel exactly.
    REQUIRE_THAT(rep.total, WithinAbs(0.25, 1e-15));
}

TEST_CASE("lambda heights") {
    auto t = RadiusProfile::parse("inf:2,2:1/2");
    REQUIRE(lambda_height(num({-2, 1}), t).total == 0.0);

    REQUIRE(lambda_height(num({-1, 1}), unit_disk()).total == 0.0);
    REQUIRE_THAT(lambda_height(num({-1, 2}), unit_disk()).total,
                 WithinAbs(std::log(2.0), 1e-15));

    // h(inf) for lambda: -(1/2) sum log t_v.
    REQUIRE_THAT(lambda_height(AlgebraicNumberInput::infinity(),
                               RadiusProfile::parse("inf:4")).total,
                 WithinAbs(-0.5 * std::log(4.0), 1e-15));
    REQUIRE(lambda_height(AlgebraicNumberInput::zero(), t).total == 0.0);
}

TEST_CASE("essential minima") {
    REQUIRE(essential_minimum(unit_disk()) == 0.125);
    REQUIRE_THAT(essential_minimum(RadiusProfile::parse("inf:2")),
                 WithinAbs(0.5 * std::log(2.0) - 0.375 + 0.125, 1e-15));
    RadiusProfile e4;
    e4.radii[Place::infinity()] = Radius::from_double(std::exp(0.25));
    REQUIRE_THAT(essential_minimum(e4),
                 WithinAbs(0.125 - 0.375 + 0.5 * std::exp(-0.5), 1e-14));
    // Capacity below one: the height of infinity itself.
    REQUIRE_THAT(essential_minimum(RadiusProfile::parse("inf:1/2")),
                 WithinAbs(0.125 + 0.5 * std::log(2.0), 1e-15));
}

TEST_CASE("kronecker classification") {
    auto verdict = kronecker_classify(num({-1, 1}), unit_disk());
    REQUIRE(verdict.attains_minimum);
    REQUIRE(verdict.essential_minimum == 0.125);
    for (const auto& row : verdict.certificate) REQUIRE(row.satisfied);

    auto at_gamma_one = kronecker_classify(num({-2, 1}), RadiusProfile::parse("inf:2,2:1/2"));
    REQUIRE(at_gamma_one.attains_minimum);

    REQUIRE_FALSE(kronecker_classify(num({-1, 2}), unit_disk()).attains_minimum);
    REQUIRE_FALSE(kronecker_classify(num({-2, 1}), unit_disk()).attains_minimum);
    REQUIRE_FALSE(kronecker_classify(num({-1, -1, 1}), unit_disk()).attains_minimum);

    // Expanded disk: the minimum moves to the rescaled circle radius c*r = 1,
    // attained by roots of unity, missed by 2.
    REQUIRE(kronecker_classify(num({1, 0, 1}), RadiusProfile::parse("inf:2")).attains_minimum);
    REQUIRE_FALSE(kronecker_classify(num({-2, 1}), RadiusProfile::parse("inf:2")).attains_minimum);

    REQUIRE_THROWS_AS(kronecker_classify(AlgebraicNumberInput::zero(), unit_disk()),
                      domain_error);
    REQUIRE_THROWS_AS(kronecker_classify(AlgebraicNumberInput::infinity(), unit_disk()),
                      domain_error);
}

TEST_CASE("weil comparison bounds") {
    auto unity = comparison_bounds(num({-1, 1}), unit_disk());
    REQUIRE(unity.value == unity.upper);
    REQUIRE(unity.value == 0.125);
    REQUIRE_THAT(unity.lower, WithinAbs(-0.375, 1e-15));

    auto zero = comparison_bounds(AlgebraicNumberInput::zero(), unit_disk());
    REQUIRE(zero.value == zero.lower);
    REQUIRE(zero.value == -0.375);
    REQUIRE_THAT(zero.upper, WithinAbs(0.125, 1e-15));

    auto golden = comparison_bounds(num({-1, -1, 1}), unit_disk());
    REQUIRE_THAT(golden.lower, WithinAbs(0.5 * std::log(PHI) + 0.125 - 0.5, 1e-12));
    REQUIRE_THAT(golden.upper, WithinAbs(0.5 * std::log(PHI) + 0.125, 1e-12));
    REQUIRE_THAT(golden.value, WithinAbs(0.211097, 1e-6));
    REQUIRE(golden.lower <= golden.value);
    REQUIRE(golden.value <= golden.upper);
}

namespace {
struct Corpus {
    std::vector<IntPolynomial> polys;
    std::vector<RadiusProfile> profiles;
};

Corpus make_corpus(std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<int> deg(1, 12);
    std::uniform_real_distribution<double> radius(0.2, 3.0);
    std::uniform_int_distribution<int> extra(0, 2);
    const long small_primes[] = {2, 3, 5};
    Corpus c;
    while (static_cast<int>(c.polys.size()) < count) {
        std::vector<BigInt> v(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : v) x = coeff(rng);
        IntPolynomial p(std::move(v));
        if (p.degree() < 1) continue;
        p = squarefree_part(p).primitive_part();
        if (p.degree() < 1) continue;
        // A zero constant term puts 0 among the roots, which the height
        // theorems exclude.
        if (p[0].is_zero()) continue;
        c.polys.push_back(p);

        RadiusProfile rp;
        rp.radii[Place::infinity()] = Radius::from_double(radius(rng));
        int extras = extra(rng);
        for (int k = 0; k < extras; ++k) {
            long q = small_primes[rng() % 3];
            BigInt num = 1 + static_cast<long>(rng() % 8);
            BigInt den = 1 + static_cast<long>(rng() % 8);
            rp.radii[Place::prime(q)] = Radius::from_rational(make_rational(num, den));
        }
        c.profiles.push_back(rp);
    }
    return c;
}
}  // namespace

TEST_CASE("height comparison sandwich on random corpus") {
    auto corpus = make_corpus(777001, 1000);
    HeightOptions opts;
    opts.force = true;
    for (std::size_t i = 0; i < corpus.polys.size(); ++i) {
        auto alpha = AlgebraicNumberInput::from_poly(corpus.polys[i]);
        auto b = comparison_bounds(alpha, corpus.profiles[i], opts);
        REQUIRE(b.lower <= b.value + 1e-10);
        REQUIRE(b.value <= b.upper + 1e-10);
    }
}

TEST_CASE("polynomial identities on random corpus") {
    auto corpus = make_corpus(777002, 1000);
    HeightOptions opts;
    opts.force = true;
    for (const auto& p : corpus.polys) {
        double m = mahler_measure(p);
        double md = areal_mahler_measure(p);
        int n = p.degree();
        // Interleaving bounds for the disk variant.
        REQUIRE(md <= m + 1e-10);
        REQUIRE(md >= m - n / 2.0 - 1e-10);
        // Unit-disk height and the disk measure are the same object up to
        // normalization.
        auto alpha = AlgebraicNumberInput::from_poly(p);
        double h = areal_height(alpha, unit_disk(), opts).total;
        REQUIRE_THAT(n * (h - 0.125), WithinAbs(md, 1e-10));
    }
}

TEST_CASE("height of infinity is the floor on random corpus") {
    auto corpus = make_corpus(777003, 1000);
    HeightOptions opts;
    opts.force = true;
    for (std::size_t i = 0; i < corpus.polys.size(); ++i) {
        auto alpha = AlgebraicNumberInput::from_poly(corpus.polys[i]);
        auto rep = areal_height(alpha, corpus.profiles[i], opts);
        REQUIRE(rep.total >= rep.infinity_constant - 1e-10);
    }
}

TEST_CASE("capacity above one: pairing bound with equality detection") {
    std::mt19937_64 rng(777004);
    std::uniform_real_distribution<double> radius(1.05, 3.0);
    auto corpus = make_corpus(777005, 400);
    HeightOptions opts;
    opts.force = true;
    int attained = 0;
    for (std::size_t i = 0; i < corpus.polys.size(); ++i) {
        auto alpha = AlgebraicNumberInput::from_poly(corpus.polys[i]);
        RadiusProfile r;
        r.radii[Place::infinity()] = Radius::from_double(radius(rng));
        double g = r.gamma();
        double c = std::pow(g, -1.0 / static_cast<double>(r.radii.size()));
        RadiusProfile t;
        t.radii[Place::infinity()] = Radius::from_double(c * r.radii.at(Place::infinity()).value);

        double lhs = areal_height(alpha, r, opts).total;
        double az = essential_minimum(r);
        double ht = areal_height(alpha, t, opts).total;
        double hinf_t = areal_height(AlgebraicNumberInput::infinity(), t, opts).total;
        double rhs = az + c * c * (ht - hinf_t);
        REQUIRE(lhs >= rhs - 1e-10);

        bool attains = kronecker_classify(alpha, r, opts).attains_minimum;
        bool equal_heights = std::abs(ht - hinf_t) <= 1e-10;
        REQUIRE(attains == equal_heights);
        if (std::abs(lhs - (az + c * c * (ht - hinf_t))) <= 1e-12) {
            REQUIRE(attains == (std::abs(ht - hinf_t) <= 1e-12));
        }
        if (attains) {
            REQUIRE_THAT(lhs, WithinAbs(az, 1e-8));
            ++attained;
        }
    }
    // Cyclotomic inputs do land on the minimum; make sure the corpus saw some.
    auto verdict = kronecker_classify(AlgebraicNumberInput::from_poly(cyclotomic(5)),
                                      RadiusProfile::parse("inf:2"));
    REQUIRE(verdict.attains_minimum);
}

TEST_CASE("strict isolation of zero and infinity below the minimum") {
    const char* grids[] = {"inf:1/2", "inf:1", "inf:2", "inf:5",
                           "inf:2,2:1/2", "inf:1,3:2", "inf:3,2:1/3,5:1/2"};
    for (const char* g : grids) {
        auto rp = RadiusProfile::parse(g);
        double L = essential_minimum(rp);
        double h0 = areal_height(AlgebraicNumberInput::zero(), rp).total;
        double hinf = areal_height(AlgebraicNumberInput::infinity(), rp).total;
        REQUIRE(h0 < L);
        if (rp.gamma() > 1.0) REQUIRE(hinf < L);
        else REQUIRE(hinf == L);
    }
}

TEST_CASE("reducible inputs are refused without force") {
    auto reducible = AlgebraicNumberInput::from_poly(P({-1, 0, 1}));
    REQUIRE_THROWS_AS(weil_height(reducible), invalid_input);
    REQUIRE_THROWS_AS(areal_height(reducible, unit_disk()), invalid_input);
    REQUIRE_THROWS_AS(lambda_height(reducible, unit_disk()), invalid_input);
    HeightOptions opts;
    opts.force = true;
    // x^2 - 1 averages the heights of 1 and -1.
    REQUIRE_THAT(weil_height(reducible, opts).total, WithinAbs(0.0, 1e-15));
    REQUIRE_THAT(areal_height(reducible, unit_disk(), opts).total, WithinAbs(0.125, 1e-15));

    // Non-squarefree with a zero root, averaged: 4x^3 - 4x.
    auto messy = AlgebraicNumberInput::from_poly(P({0, -4, 0, 4}));
    double h = areal_height(messy, unit_disk(), opts).total;
    // Two unit roots at 1/8 each and the zero root at -3/8, equally weighted
    // relative to h(inf): 1/8 + (2/3)*0 + (1/3)*(-1/2).
    REQUIRE_THAT(h, WithinAbs(0.125 - 0.5 / 3.0, 1e-13));
}
