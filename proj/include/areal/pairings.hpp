#ifndef AREAL_PAIRINGS_HPP
#define AREAL_PAIRINGS_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "areal/errors.hpp"
#include "areal/heights.hpp"
#include "areal/measures.hpp"

namespace areal {

enum class PairingMethod { ClosedForm, Quadrature, Hybrid };

// Value of a mutual-energy style pairing together with how it was obtained.
// `breakdown` lists one contribution per place and sums to `value`.
struct PairingResult {
    double value = 0.0;
    PairingMethod method = PairingMethod::ClosedForm;
    int nodes = 0;  // final node count when quadrature was involved
    double error_estimate = 0.0;
    std::vector<PlaceContribution> breakdown;
};

namespace detail {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Midpoint rule for -\int potential(pot, z) dparam(z) over the one-parameter
// description of `param`. A disk parameterization integrates along a radius,
// which is valid only when `pot` is rotation symmetric; dispatch guarantees
// that by preferring the Chebyshev and circle parameterizations.
inline double mutual_energy_pass(const MeasureSpec& pot, const MeasureSpec& param, int n) {
    KahanSum s;
    if (const auto* c = std::get_if<Circle>(&param)) {
        for (int j = 0; j < n; ++j) {
            double th = 2.0 * kPi * (j + 0.5) / n;
            s.add(potential(pot, std::polar(c->t, th)));
        }
    } else if (std::holds_alternative<ChebyshevEquilibrium>(param)) {
        for (int j = 0; j < n; ++j) {
            double th = kPi * (j + 0.5) / n;
            s.add(potential(pot, {2.0 * std::cos(th), 0.0}));
        }
    } else {
        const auto& d = std::get<ArealDisk>(param);
        for (int j = 0; j < n; ++j) {
            double u = (j + 0.5) / n;
            s.add(2.0 * u * potential(pot, {d.R * u, 0.0}));
        }
    }
    return -s.value() / n;
}

inline int parameter_rank(const MeasureSpec& m) {
    if (std::holds_alternative<ChebyshevEquilibrium>(m)) return 0;
    if (std::holds_alternative<Circle>(m)) return 1;
    return 2;
}

}  // namespace detail

// (a, b) = -\iint log|z - w| da(z) db(w), reduced to a one-dimensional
// midpoint rule against whichever factor has the simpler parameterization.
// Atomic factors are summed exactly instead of quadratured.
inline PairingResult mutual_energy_quadrature(const MeasureSpec& a,
                                              const MeasureSpec& b,
                                              int nodes) {
    if (nodes < 16) throw invalid_input("mutual energy: nodes must be >= 16");
    const auto* pa = std::get_if<PointMassSet>(&a);
    const auto* pb = std::get_if<PointMassSet>(&b);
    if (pa && pb) {
        for (const auto& [za, wa] : pa->atoms)
            for (const auto& [zb, wb] : pb->atoms)
                if (za == zb)
                    throw diagonal_divergence(
                        "mutual energy: factors share an atom, the pairing diverges");
    }
    if (pa || pb) {
        const PointMassSet& atoms = pb ? *pb : *pa;
        const MeasureSpec& other = pb ? a : b;
        KahanSum s;
        for (const auto& [z, w] : atoms.atoms) s.add(w * potential(other, z));
        PairingResult res;
        res.value = -s.value();
        res.method = PairingMethod::ClosedForm;
        res.breakdown = {{Place::infinity(), res.value}};
        return res;
    }

    const MeasureSpec* pot = &a;
    const MeasureSpec* param = &b;
    if (detail::parameter_rank(b) > detail::parameter_rank(a)) std::swap(pot, param);
    double full = detail::mutual_energy_pass(*pot, *param, nodes);
    double half = detail::mutual_energy_pass(*pot, *param, nodes / 2);

    PairingResult res;
    res.value = full;
    res.method = PairingMethod::Quadrature;
    res.nodes = nodes;
    res.error_estimate = std::abs(full - half) / 3.0;
    res.breakdown = {{Place::infinity(), full}};
    return res;
}

// Pairing of the disk family at radii r against the circle family at radii t.
// Requires capacity gamma(t) == 1 and the place set of r contained in that of
// t. Exact radii flow through the rational log accumulator, so family members
// with cancelling logs come out exactly.
inline PairingResult az_closed_form(const RadiusProfile& r, const RadiusProfile& t) {
    detail::require_arch(r);
    detail::require_arch(t);
    for (const auto& [v, rad] : r.radii)
        if (!t.radii.count(v))
            throw invalid_input(
                "az pairing: every place of the disk profile must appear in the circle profile");
    if (auto g = t.gamma_exact()) {
        if (*g != 1)
            throw precondition_error("az pairing: circle profile capacity must be one");
    } else if (std::abs(t.gamma() - 1.0) > 1e-12) {
        throw precondition_error("az pairing: circle profile capacity must be one");
    }

    PairingResult res;
    res.method = PairingMethod::ClosedForm;
    KahanSum total;
    for (const auto& [v, trad] : t.radii) {
        LogLinear acc;
        auto it = r.radii.find(v);
        if (it != r.radii.end()) {
            const Radius& rrad = it->second;
            acc.add(0.125);
            detail::add_radius_log(acc, rrad, Rational(-1, 2));
            bool log_branch;
            if (trad.exact && rrad.exact) log_branch = *trad.exact >= *rrad.exact;
            else log_branch = trad.value >= rrad.value;
            if (log_branch) {
                detail::add_radius_log(acc, trad, Rational(1));
            } else {
                detail::add_radius_log(acc, rrad, Rational(1));
                acc.add(trad.value * trad.value / (2.0 * rrad.value * rrad.value) - 0.5);
            }
        } else {
            bool above_one = trad.exact ? (*trad.exact > 1) : (trad.value > 1.0);
            if (above_one) detail::add_radius_log(acc, trad, Rational(1));
        }
        double c = acc.value();
        total.add(c);
        res.breakdown.push_back({v, c});
    }
    res.value = total.value();
    return res;
}

// L(2, chi) for the nontrivial character mod 3, by pairing consecutive terms
// of the alternating series and closing with an integral-plus-midpoint tail.
// The paired terms are positive and O(k^-3), so the tail correction leaves a
// residual far below 1e-12.
inline double dirichlet_L2_chi3() {
    static const double cached = [] {
        KahanSum s;
        const long K = 333334;
        for (long k = K - 1; k >= 0; --k) {
            double u = 3.0 * k + 1.0, v = 3.0 * k + 2.0;
            s.add(1.0 / (u * u) - 1.0 / (v * v));
        }
        double u = 3.0 * K + 1.0, v = 3.0 * K + 2.0;
        s.add((1.0 / u - 1.0 / v) / 3.0);
        s.add(0.5 * (1.0 / (u * u) - 1.0 / (v * v)));
        return s.value();
    }();
    return cached;
}

// Pairing of the disk at radius r against the Chebyshev equilibrium measure
// on [-2, 2]: (1/8 - (1/2)log r) + (1/pi) \int_0^pi f_r(|2 cos th|) dth.
// The integral is evaluated by a doubling midpoint rule; at r = 1 and r >= 2
// closed forms exist and the quadrature must agree with them.
inline PairingResult az_chebyshev(double r, int nodes = 1 << 16) {
    if (!(r > 0.0)) throw invalid_input("chebyshev pairing: radius must be positive");
    if (nodes < 16) throw invalid_input("chebyshev pairing: nodes must be >= 16");

    auto ring_integral = [r](int n) {
        KahanSum s;
        for (int j = 0; j < n; ++j) {
            double th = detail::kPi * (j + 0.5) / n;
            s.add(f_r(r, std::abs(2.0 * std::cos(th))));
        }
        return s.value() / n;
    };

    int n = nodes;
    double prev = ring_integral(n);
    double cur = prev;
    for (;;) {
        n *= 2;
        cur = ring_integral(n);
        if (std::abs(cur - prev) < 1e-9 || n >= (1 << 22)) break;
        prev = cur;
    }
    double quad = (0.125 - 0.5 * std::log(r)) + cur;
    double est = std::abs(cur - prev) / 3.0;

    std::optional<double> closed;
    if (r == 1.0) {
        closed = 7.0 / 24.0 - std::sqrt(3.0) / (2.0 * detail::kPi) +
                 3.0 * std::sqrt(3.0) / (4.0 * detail::kPi) * dirichlet_L2_chi3();
    } else if (r >= 2.0) {
        // f_r is purely quadratic on [-2, 2] once r >= 2.
        closed = 0.5 * std::log(r) - 0.375 + 1.0 / (r * r);
    }

    PairingResult res;
    res.nodes = n;
    if (closed) {
        double drift = std::abs(*closed - quad);
        if (drift > 1e-7)
            throw numeric_error("chebyshev pairing: quadrature disagrees with the closed form",
                                drift);
        res.value = *closed;
        res.method = PairingMethod::Hybrid;
        res.error_estimate = drift;
    } else {
        res.value = quad;
        res.method = PairingMethod::Quadrature;
        res.error_estimate = est;
    }
    res.breakdown = {{Place::infinity(), res.value}};
    return res;
}

// d/dr of az_chebyshev(r).  Negative below r = 2, zero at r = 2, positive
// above, so the minimizing radius for the Chebyshev target is exactly 2.
inline double az_chebyshev_derivative(double r) {
    if (!(r > 0.0)) throw invalid_input("chebyshev pairing: radius must be positive");
    if (r > 2.0) return (r * r - 4.0) / (2.0 * r * r * r);
    double a = std::asin(r / 2.0);
    return -0.5 / r + 2.0 / (detail::kPi * r) * a +
           std::sqrt(4.0 - r * r) / (detail::kPi * r * r) -
           4.0 / (detail::kPi * r * r * r) * a;
}

struct RadiusOptimum {
    double r_star = 0.0;
    double value = 0.0;
    bool boundary = false;  // minimum sits on an interval endpoint
};

// Minimizes r -> pairing(disk_r, target) over [lo, hi] for a circle-family or
// Chebyshev target. Monotone slopes put the minimum on an endpoint, reported
// with the boundary flag; an interior maximum has no minimum to bracket.
// Interior minima run golden-section to width 1e-10, then a derivative
// bisection sharpens the root well below `tol`.
inline RadiusOptimum optimize_radius(const MeasureSpec& target, double lo, double hi,
                                     double tol) {
    if (!(lo > 0.0) || !(lo < hi)) throw invalid_input("optimize radius: need 0 < lo < hi");
    if (!(tol > 0.0)) throw invalid_input("optimize radius: tolerance must be positive");
    const Circle* circ = std::get_if<Circle>(&target);
    const bool cheb = std::holds_alternative<ChebyshevEquilibrium>(target);
    if (!circ && !cheb)
        throw unsupported_measure(
            "optimize radius: target must be a circle family or the chebyshev measure");

    auto value_at = [&](double r) -> double {
        if (cheb) return az_chebyshev(r).value;
        RadiusProfile rp, tp;
        rp.radii[Place::infinity()] = Radius::from_double(r);
        tp.radii[Place::infinity()] = Radius::from_double(circ->t);
        return az_closed_form(rp, tp).value;
    };
    auto slope_at = [&](double r) -> double {
        if (cheb) return az_chebyshev_derivative(r);
        if (r <= circ->t) return -0.5 / r;
        return 0.5 / r - circ->t * circ->t / (r * r * r);
    };

    double dlo = slope_at(lo), dhi = slope_at(hi);
    if (dlo >= 0.0 && dhi >= 0.0) return {lo, value_at(lo), true};
    if (dlo <= 0.0 && dhi <= 0.0) return {hi, value_at(hi), true};
    if (dlo > 0.0 && dhi < 0.0)
        throw no_minimum("optimize radius: interval brackets a maximum");

    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a), x2 = a + invphi * (b - a);
    double f1 = value_at(x1), f2 = value_at(x2);
    while (b - a > 1e-10) {
        if (f1 <= f2) {
            b = x2; x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a); f1 = value_at(x1);
        } else {
            a = x1; x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a); f2 = value_at(x2);
        }
    }
    // Quadrature noise can drift the golden bracket off the slope root; fall
    // back to the verified sign change on the full interval.
    double lo2 = a, hi2 = b;
    if (!(slope_at(lo2) <= 0.0 && slope_at(hi2) >= 0.0)) { lo2 = lo; hi2 = hi; }
    for (int it = 0; it < 200 && hi2 - lo2 > tol * 1e-4; ++it) {
        double mid = 0.5 * (lo2 + hi2);
        (slope_at(mid) < 0.0 ? lo2 : hi2) = mid;
    }
    double r_star = 0.5 * (lo2 + hi2);
    return {r_star, value_at(r_star), false};
}

}  // namespace areal

#endif  // AREAL_PAIRINGS_HPP
