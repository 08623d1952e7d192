#ifndef AREAL_EQUIDIST_HPP
#define AREAL_EQUIDIST_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "areal/errors.hpp"
#include "areal/heights.hpp"
#include "areal/measures.hpp"

namespace areal {

// One row of a height-decay or equidistribution experiment.
struct EquidistRecord {
    long index = 0;  // usually the prime p
    long degree = 1;
    double height = 0.0;
    double gap = 0.0;         // height minus the essential minimum; >= -1e-12
    double scaled_gap = 0.0;  // degree * gap
    std::optional<double> discrepancy;
};

using WeightedPoints = std::vector<std::pair<std::complex<double>, double>>;

// Heights of alpha_base^(1/p) across a list of primes. The minimal polynomial
// shape (den * x^p - num) makes every local value exact: the place-w value is
// |alpha_base|_w^(1/p), so records come from closed-form local data rather
// than root finding. Requires |alpha_base| < 1 at every place of the profile.
inline std::vector<EquidistRecord> lehmer_failure_sequence(const Rational& alpha_base,
                                                           const std::vector<long>& primes,
                                                           const RadiusProfile& r) {
    detail::require_arch(r);
    if (alpha_base == 0) throw domain_error("p-th root family: base must be nonzero");
    const double base_abs = std::abs(to_double(alpha_base));

    auto num_fac = factorize(abs(numerator(alpha_base)));
    auto den_fac = factorize(denominator(alpha_base));
    std::map<BigInt, long> val;
    for (const auto& [q, e] : num_fac) val[q] += e;
    for (const auto& [q, e] : den_fac) val[q] -= e;

    for (const auto& [v, rad] : r.radii) {
        if (v.infinite) {
            if (!(base_abs < 1.0))
                throw domain_error("p-th root family: base must lie inside the disk at every profile place");
        } else {
            auto it = val.find(v.p);
            if (it == val.end() || it->second <= 0)
                throw domain_error("p-th root family: base must lie inside the disk at every profile place");
        }
    }

    const double floor_value = essential_minimum(r);
    std::vector<EquidistRecord> out;
    out.reserve(primes.size());
    for (long p : primes) {
        if (p < 2 || !is_prime(BigInt(p)))
            throw domain_error("p-th root family: indices must be prime");
        LogLinear h;
        for (const auto& [v, rad] : r.radii) {
            h.add(0.125);
            detail::add_radius_log(h, rad, Rational(-1, 2));
            if (v.infinite) {
                double x = std::exp(std::log(base_abs) / double(p));
                if (x >= rad.value) {
                    h.add(std::log(base_abs) / double(p));
                } else {
                    detail::add_radius_log(h, rad, Rational(1));
                    h.add(x * x / (2.0 * rad.value * rad.value) - 0.5);
                }
            } else {
                long e = val.at(v.p);
                Rational expo = make_rational(BigInt(-e), BigInt(p));
                double x = std::pow(to_double(v.p), to_double(expo));
                if (detail::compare_power_radius(v.p, expo, rad, x) >= 0) {
                    h.add_log_prime(v.p, expo);
                } else {
                    detail::add_radius_log(h, rad, Rational(1));
                    h.add(x * x / (2.0 * rad.value * rad.value) - 0.5);
                }
            }
        }
        // Off-profile places contribute log-plus terms only where the base
        // has a denominator.
        for (const auto& [q, e] : den_fac) {
            if (r.radii.count(Place::prime(q))) continue;
            h.add_log_prime(q, Rational(e, p));
        }
        double height = h.value();
        KahanSum g;
        g.add(height);
        g.add(-floor_value);

        EquidistRecord rec;
        rec.index = p;
        rec.degree = p;
        rec.height = height;
        rec.gap = g.value();
        rec.scaled_gap = double(p) * rec.gap;
        out.push_back(rec);
    }
    return out;
}

// Distance between a weighted point set and a rotation-symmetric target:
// the max of a radial quantile (inverse-CDF) sup distance and a 16-sector
// angular imbalance, clamped to sqrt(2). The quantile form keeps shrinking
// circles close to Circle(1) even though their CDFs cross at a jump.
inline double empirical_discrepancy(const WeightedPoints& roots, const MeasureSpec& target) {
    const auto* disk = std::get_if<ArealDisk>(&target);
    const auto* circ = std::get_if<Circle>(&target);
    if (!disk && !circ)
        throw unsupported_measure("discrepancy: target must be a disk or a circle");
    if ((disk && !(disk->R > 0.0)) || (circ && !(circ->t > 0.0)))
        throw invalid_input("discrepancy: target scale must be positive");

    double total = 0.0;
    for (const auto& [z, w] : roots) {
        if (w < 0.0) throw invalid_input("discrepancy: weights must be nonnegative");
        total += w;
    }
    if (roots.empty() || !(total > 0.0))
        throw invalid_input("discrepancy: need positive total weight");

    auto quantile = [&](double q) { return disk ? disk->R * std::sqrt(q) : circ->t; };

    std::vector<std::pair<double, double>> radial;
    radial.reserve(roots.size());
    for (const auto& [z, w] : roots) radial.push_back({std::abs(z), w / total});
    std::sort(radial.begin(), radial.end());

    double sup = 0.0, cum = 0.0;
    for (const auto& [s, w] : radial) {
        sup = std::max(sup, std::abs(s - quantile(cum)));
        cum = std::min(cum + w, 1.0);
        sup = std::max(sup, std::abs(s - quantile(cum)));
    }

    const double pi = 3.14159265358979323846;
    std::array<double, 16> sector{};
    for (const auto& [z, w] : roots) {
        double th = std::atan2(z.imag(), z.real());
        if (th < 0.0) th += 2.0 * pi;
        int k = std::min(15, static_cast<int>(th / (pi / 8.0)));
        sector[static_cast<std::size_t>(k)] += w / total;
    }
    double ang = 0.0;
    for (double m : sector) ang = std::max(ang, std::abs(m - 1.0 / 16.0));

    return std::min(std::max(sup, ang), std::sqrt(2.0));
}

struct ArithmeticCheck {
    bool arithmetic = false;
    double certificate = 0.0;  // log r - 1/2, the potential's global minimum
};

// The disk measure at radius r majorizes an adelic arithmetic datum exactly
// when its potential stays nonnegative, i.e. r >= e^(1/2).
inline ArithmeticCheck arithmetic_measure_check(double r) {
    if (!(r > 0.0)) throw invalid_input("arithmetic check: radius must be positive");
    return {r >= std::exp(0.5), std::log(r) - 0.5};
}

struct UniformLimit {
    bool arithmetic = false;
    double limit = 0.0;  // meaningful only when arithmetic
    bool exceeds_essential_min = false;
};

// Limiting height of integer sequences equidistributing toward the uniform
// disk measure at radius r: -1/8 + (1/2) log r, valid once the measure is
// arithmetic. The limit sits strictly above the circle-family floor
// (1/2) log r - 3/8 + 1/(2 r^2) for every r > sqrt(2).
inline UniformLimit limiting_height_for_uniform(double r) {
    if (!(r > 0.0)) throw invalid_input("uniform limit: radius must be positive");
    if (r < std::exp(0.5)) return {};
    double limit = -0.125 + 0.5 * std::log(r);
    double floor_value = 0.5 * std::log(r) - 0.375 + 0.5 / (r * r);
    return {true, limit, limit > floor_value};
}

}  // namespace areal

#endif  // AREAL_EQUIDIST_HPP
