#ifndef AREAL_HEIGHTS_HPP
#define AREAL_HEIGHTS_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "areal/measures.hpp"
#include "areal/places.hpp"

namespace areal {

struct HeightOptions {
    RootOptions roots;
    // Accept reducible or non-squarefree polynomials and average over the full
    // root multiset instead of insisting on a minimal polynomial.
    bool force = false;
};

struct PlaceContribution {
    Place place;
    double contribution = 0.0;
};

struct HeightReport {
    double total = 0.0;
    double infinity_constant = 0.0;
    std::vector<PlaceContribution> per_place;
    std::string method;
};

struct CertificateRow {
    Place place;
    double value = 0.0;
    std::string relation;  // ">=" or "=" against the effective radius (1 off S)
    bool satisfied = false;
};

struct KroneckerVerdict {
    bool attains_minimum = false;
    std::vector<CertificateRow> certificate;
    double essential_minimum = 0.0;
};

struct ComparisonBounds {
    double lower = 0.0;
    double upper = 0.0;
    double value = 0.0;
};

inline double gamma(const RadiusProfile& r) { return r.gamma(); }

namespace detail {

// Conjugate data with roots at the origin split off exactly: profiles describe
// the x-free part, with weights rescaled so everything is per full degree.
struct ConjugateData {
    ProfileMap profiles;
    int zero_mult = 0;
    int degree = 0;
};

inline ConjugateData conjugate_data(const AlgebraicNumberInput& alpha,
                                    const HeightOptions& opts) {
    const IntPolynomial& p = alpha.poly;
    if (!opts.force) cheap_irreducibility_checks(p);
    const int n = p.degree();
    int k = 0;
    while (p[k].is_zero()) ++k;
    ConjugateData d;
    d.degree = n;
    d.zero_mult = k;
    if (k < n) {
        std::vector<BigInt> tail(p.coeffs().begin() + k, p.coeffs().end());
        d.profiles = local_profiles(AlgebraicNumberInput::from_poly(IntPolynomial(std::move(tail))),
                                    opts.roots);
        if (k > 0) {
            Rational scale(n - k, n);
            for (auto& [v, prof] : d.profiles)
                for (auto& e : prof.entries) e.weight *= scale;
        }
    }
    return d;
}

inline void add_radius_log(LogLinear& acc, const Radius& rad, const Rational& coeff) {
    if (rad.exact) acc.add_log_rational(*rad.exact, coeff);
    else acc.add(to_double(coeff) * std::log(rad.value));
}

// Sign of p^e - rho; exact whenever the radius is rational, within 1e-12 of
// the numeric value otherwise.
inline int compare_power_radius(const BigInt& p, const Rational& e, const Radius& rho,
                                double numeric_value) {
    if (rho.exact) {
        BigInt a = numerator(e);
        unsigned b = denominator(e).convert_to<unsigned>();
        BigInt nu = numerator(*rho.exact);
        BigInt de = denominator(*rho.exact);
        BigInt lhs, rhs;
        if (a >= 0) {
            lhs = pow(p, a.convert_to<unsigned>()) * pow(de, b);
            rhs = pow(nu, b);
        } else {
            lhs = pow(de, b);
            rhs = pow(nu, b) * pow(p, BigInt(-a).convert_to<unsigned>());
        }
        if (lhs < rhs) return -1;
        return lhs == rhs ? 0 : 1;
    }
    double diff = numeric_value - rho.value;
    if (std::abs(diff) <= 1e-12 * std::max(1.0, rho.value)) return 0;
    return diff < 0 ? -1 : 1;
}

// Collects per-place accumulators and assembles the report; cancellations
// between rational log terms survive exactly.
struct ReportAssembler {
    std::map<Place, LogLinear> parts;

    LogLinear& at(const Place& v) { return parts[v]; }

    HeightReport finish(double infinity_constant, std::string method) const {
        HeightReport rep;
        rep.infinity_constant = infinity_constant;
        rep.method = std::move(method);
        KahanSum total;
        total.add(infinity_constant);
        for (const auto& [v, acc] : parts) {
            double c = acc.value();
            total.add(c);
            rep.per_place.push_back({v, c});
        }
        rep.total = total.value();
        return rep;
    }
};

inline void require_arch(const RadiusProfile& r) {
    if (r.radii.empty() || !r.radii.begin()->first.infinite)
        throw invalid_input("radius profile must contain the place 'inf'");
}

// Entries for one place of S: the recorded profile if present, otherwise the
// full remaining mass sits at absolute value one.
inline std::vector<ProfileEntry> s_place_entries(const ConjugateData& d, const Place& v) {
    auto it = d.profiles.find(v);
    if (it != d.profiles.end()) return it->second.entries;
    std::vector<ProfileEntry> unit;
    if (!v.infinite && d.zero_mult < d.degree)
        unit.push_back({1.0, Rational(d.degree - d.zero_mult, d.degree), Rational(0)});
    return unit;
}

}  // namespace detail

inline HeightReport weil_height(const AlgebraicNumberInput& alpha,
                                const HeightOptions& opts = {}) {
    if (alpha.kind != AlgebraicNumberInput::Kind::Number)
        return {0.0, 0.0, {}, "fixed-by-convention"};
    auto d = detail::conjugate_data(alpha, opts);
    detail::ReportAssembler parts;
    for (const auto& [v, prof] : d.profiles) {
        if (v.infinite) {
            LogLinear& acc = parts.at(v);
            for (const auto& e : prof.entries)
                if (e.value > 1.0) acc.add(to_double(e.weight) * std::log(e.value));
        } else {
            for (const auto& e : prof.entries)
                if (*e.exponent > 0) parts.at(v).add_log_prime(v.p, e.weight * *e.exponent);
        }
    }
    return parts.finish(0.0, "local-profile-sum");
}

inline double mahler_measure(const IntPolynomial& p, const RootOptions& opts = {}) {
    if (p.is_zero()) throw invalid_input("mahler measure: zero polynomial");
    KahanSum s;
    s.add(log_abs(p.leading()));
    if (p.degree() >= 1)
        for (const auto& z : root_multiset(p, opts)) {
            double a = std::abs(z);
            if (a > 1.0) s.add(std::log(a));
        }
    return s.value();
}

inline double areal_mahler_measure(const IntPolynomial& p, const RootOptions& opts = {}) {
    if (p.is_zero()) throw invalid_input("areal mahler measure: zero polynomial");
    KahanSum s;
    s.add(log_abs(p.leading()));
    if (p.degree() >= 1)
        for (const auto& z : root_multiset(p, opts)) {
            double a = std::abs(z);
            if (a > 1.0) s.add(std::log(a));
            else if (a < 1.0) s.add((a * a - 1.0) / 2.0);
        }
    return s.value();
}

inline HeightReport areal_height(const AlgebraicNumberInput& alpha, const RadiusProfile& r,
                                 const HeightOptions& opts = {}) {
    detail::require_arch(r);
    LogLinear hinf;
    for (const auto& [v, rad] : r.radii) {
        hinf.add(0.125);
        detail::add_radius_log(hinf, rad, Rational(-1, 2));
    }
    const double infinity_constant = hinf.value();

    if (alpha.kind == AlgebraicNumberInput::Kind::Infinity) {
        HeightReport rep;
        rep.total = infinity_constant;
        rep.infinity_constant = infinity_constant;
        rep.method = "pole-constant";
        return rep;
    }

    detail::ReportAssembler parts;
    if (alpha.kind == AlgebraicNumberInput::Kind::Zero) {
        for (const auto& [v, rad] : r.radii) {
            LogLinear& acc = parts.at(v);
            detail::add_radius_log(acc, rad, Rational(1));
            acc.add(-0.5);
        }
        return parts.finish(infinity_constant, "origin-closed-form");
    }

    auto d = detail::conjugate_data(alpha, opts);
    for (const auto& [v, rad] : r.radii) {
        LogLinear& acc = parts.at(v);
        for (const auto& e : detail::s_place_entries(d, v)) {
            bool log_branch;
            if (v.infinite)
                log_branch = e.value >= rad.value;
            else
                log_branch = detail::compare_power_radius(v.p, *e.exponent, rad, e.value) >= 0;
            if (log_branch) {
                if (v.infinite)
                    acc.add(to_double(e.weight) * std::log(e.value));
                else if (!e.exponent->is_zero())
                    acc.add_log_prime(v.p, e.weight * *e.exponent);
            } else {
                detail::add_radius_log(acc, rad, e.weight);
                acc.add(to_double(e.weight) *
                        (e.value * e.value / (2.0 * rad.value * rad.value) - 0.5));
            }
        }
        if (d.zero_mult > 0) {
            Rational zw(d.zero_mult, d.degree);
            detail::add_radius_log(acc, rad, zw);
            acc.add(to_double(zw) * -0.5);
        }
    }
    for (const auto& [v, prof] : d.profiles) {
        if (r.radii.count(v)) continue;
        for (const auto& e : prof.entries)
            if (*e.exponent > 0) parts.at(v).add_log_prime(v.p, e.weight * *e.exponent);
    }
    return parts.finish(infinity_constant, "kernel-profile-sum");
}

inline HeightReport lambda_height(const AlgebraicNumberInput& alpha, const RadiusProfile& t,
                                  const HeightOptions& opts = {}) {
    detail::require_arch(t);
    LogLinear hinf;
    for (const auto& [v, rad] : t.radii) detail::add_radius_log(hinf, rad, Rational(-1, 2));
    const double infinity_constant = hinf.value();

    if (alpha.kind == AlgebraicNumberInput::Kind::Infinity) {
        HeightReport rep;
        rep.total = infinity_constant;
        rep.infinity_constant = infinity_constant;
        rep.method = "pole-constant";
        return rep;
    }

    detail::ReportAssembler parts;
    if (alpha.kind == AlgebraicNumberInput::Kind::Zero) {
        for (const auto& [v, rad] : t.radii)
            detail::add_radius_log(parts.at(v), rad, Rational(1));
        return parts.finish(infinity_constant, "origin-closed-form");
    }

    auto d = detail::conjugate_data(alpha, opts);
    for (const auto& [v, rad] : t.radii) {
        LogLinear& acc = parts.at(v);
        for (const auto& e : detail::s_place_entries(d, v)) {
            bool above;
            if (v.infinite)
                above = e.value >= rad.value;
            else
                above = detail::compare_power_radius(v.p, *e.exponent, rad, e.value) >= 0;
            if (above) {
                if (v.infinite)
                    acc.add(to_double(e.weight) * std::log(e.value));
                else if (!e.exponent->is_zero())
                    acc.add_log_prime(v.p, e.weight * *e.exponent);
            } else {
                detail::add_radius_log(acc, rad, e.weight);
            }
        }
        if (d.zero_mult > 0)
            detail::add_radius_log(acc, rad, Rational(d.zero_mult, d.degree));
    }
    for (const auto& [v, prof] : d.profiles) {
        if (t.radii.count(v)) continue;
        for (const auto& e : prof.entries)
            if (*e.exponent > 0) parts.at(v).add_log_prime(v.p, e.weight * *e.exponent);
    }
    return parts.finish(infinity_constant, "truncated-profile-sum");
}

inline double essential_minimum(const RadiusProfile& r) {
    detail::require_arch(r);
    bool capacity_le_one;
    if (auto g = r.gamma_exact())
        capacity_le_one = (*g <= 1);
    else
        capacity_le_one = (r.gamma() <= 1.0);
    if (capacity_le_one) return areal_height(AlgebraicNumberInput::infinity(), r).total;

    // Shrinking every radius by the same factor c brings the capacity to one;
    // the minimum is then the pairing value in closed form.
    const double c = std::pow(r.gamma(), -1.0 / static_cast<double>(r.radii.size()));
    LogLinear acc;
    for (const auto& [v, rad] : r.radii) {
        detail::add_radius_log(acc, rad, Rational(1, 2));
        acc.add(c * c / 2.0 - 0.375);
    }
    return acc.value();
}

inline KroneckerVerdict kronecker_classify(const AlgebraicNumberInput& alpha,
                                           const RadiusProfile& r,
                                           const HeightOptions& opts = {}) {
    if (alpha.kind != AlgebraicNumberInput::Kind::Number)
        throw domain_error("kronecker classification: zero and infinity are excluded");
    detail::require_arch(r);

    KroneckerVerdict out;
    out.essential_minimum = essential_minimum(r);

    int regime;  // capacity below one / exactly one / above one
    if (auto g = r.gamma_exact())
        regime = (*g < 1) ? -1 : (*g == 1 ? 0 : 1);
    else {
        double gn = r.gamma();
        regime = (gn < 1.0) ? -1 : (gn == 1.0 ? 0 : 1);
    }

    // Above capacity one the minimum is attained on the shrunken profile c*r.
    std::map<Place, Radius> target;
    if (regime > 0) {
        double c = std::pow(r.gamma(), -1.0 / static_cast<double>(r.radii.size()));
        for (const auto& [v, rad] : r.radii)
            target.emplace(v, Radius::from_double(c * rad.value));
    } else {
        target = r.radii;
    }
    const bool need_equality = (regime >= 0);
    const char* rel = need_equality ? "=" : ">=";

    auto d = detail::conjugate_data(alpha, opts);
    bool all_ok = true;
    auto push = [&](const Place& v, double value, bool ok) {
        out.certificate.push_back({v, value, rel, ok});
        all_ok = all_ok && ok;
    };

    for (const auto& [v, rad] : target) {
        for (const auto& e : detail::s_place_entries(d, v)) {
            bool ok;
            if (!v.infinite && rad.exact) {
                int cmp = detail::compare_power_radius(v.p, *e.exponent, rad, e.value);
                ok = need_equality ? cmp == 0 : cmp >= 0;
            } else {
                ok = need_equality ? std::abs(e.value - rad.value) <= 1e-10
                                   : e.value >= rad.value - 1e-10;
            }
            push(v, e.value, ok);
        }
        // A root at the origin never reaches a positive radius.
        if (d.zero_mult > 0) push(v, 0.0, false);
    }
    for (const auto& [v, prof] : d.profiles) {
        if (target.count(v)) continue;
        for (const auto& e : prof.entries)
            push(v, e.value, need_equality ? e.exponent->is_zero() : *e.exponent >= 0);
    }
    out.attains_minimum = all_ok;
    return out;
}

inline ComparisonBounds comparison_bounds(const AlgebraicNumberInput& alpha,
                                          const RadiusProfile& r,
                                          const HeightOptions& opts = {}) {
    const double h = weil_height(alpha, opts).total;
    const HeightReport rep = areal_height(alpha, r, opts);
    KahanSum lo, hi;
    lo.add(h);
    lo.add(rep.infinity_constant);
    hi.add(h);
    hi.add(rep.infinity_constant);
    for (const auto& [v, rad] : r.radii) {
        lo.add(std::min(0.0, f_r(rad.value, 0.0)));
        hi.add(f_r(rad.value, 1.0));
    }
    return {lo.value(), hi.value(), rep.total};
}

}  // namespace areal

#endif
