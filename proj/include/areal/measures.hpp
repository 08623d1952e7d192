#ifndef AREAL_MEASURES_HPP
#define AREAL_MEASURES_HPP

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "areal/numeric.hpp"
#include "areal/places.hpp"

namespace areal {

// Potential of the uniform unit-mass measure on the disk of radius R:
// quadratic inside the disk, log|x| outside, matching C1 at the rim.
inline double f_r(double R, double x) {
    if (!(R > 0.0)) throw invalid_input("f_r: radius must be positive");
    if (!(x >= 0.0)) throw invalid_input("f_r: argument must be nonnegative");
    if (x <= R) return std::log(R) - 0.5 + x * x / (2.0 * R * R);
    return std::log(x);
}

inline double f_r_prime(double R, double x) {
    if (!(R > 0.0)) throw invalid_input("f_r: radius must be positive");
    if (!(x >= 0.0)) throw invalid_input("f_r: argument must be nonnegative");
    return x <= R ? x / (R * R) : 1.0 / x;
}

struct ArealDisk { double R = 1.0; };
struct Circle { double t = 1.0; };
struct ChebyshevEquilibrium {};
struct PointMassSet {
    std::vector<std::pair<std::complex<double>, double>> atoms;  // (location, weight)
};

using MeasureSpec =
    std::variant<ArealDisk, Circle, ChebyshevEquilibrium, PointMassSet>;

namespace detail {
inline void require_positive(double v, const char* what) {
    if (!(v > 0.0)) throw invalid_input(std::string(what) + " must be positive");
}
}  // namespace detail

inline double potential(const MeasureSpec& spec, std::complex<double> z) {
    struct Visitor {
        std::complex<double> z;
        double operator()(const ArealDisk& d) const {
            detail::require_positive(d.R, "disk radius");
            return f_r(d.R, std::abs(z));
        }
        double operator()(const Circle& c) const {
            detail::require_positive(c.t, "circle radius");
            return std::log(std::max(c.t, std::abs(z)));
        }
        double operator()(const ChebyshevEquilibrium&) const {
            // Green's function of [-2,2]: the branch with |z + sqrt(z^2-4)| >= 2
            // keeps it continuous off the segment and zero on it.
            std::complex<double> s = std::sqrt(z * z - 4.0);
            std::complex<double> w = z + s;
            if (std::abs(w) < 2.0) w = z - s;
            return std::log(std::abs(w) / 2.0);
        }
        double operator()(const PointMassSet& pm) const {
            double acc = 0.0;
            for (const auto& [a, w] : pm.atoms) {
                if (z == a) return -std::numeric_limits<double>::infinity();
                acc += w * std::log(std::abs(z - a));
            }
            return acc;
        }
    };
    return std::visit(Visitor{z}, spec);
}

inline double energy(const MeasureSpec& spec) {
    struct Visitor {
        double operator()(const ArealDisk& d) const {
            detail::require_positive(d.R, "disk radius");
            return 0.25 - std::log(d.R);
        }
        double operator()(const Circle& c) const {
            detail::require_positive(c.t, "circle radius");
            return -std::log(c.t);
        }
        double operator()(const ChebyshevEquilibrium&) const { return 0.0; }
        double operator()(const PointMassSet&) const {
            throw unsupported_measure(
                "self-energy of a point-mass set is not defined here");
        }
    };
    return std::visit(Visitor{}, spec);
}

// Mass of the closed disk of radius s around the origin.
inline double radial_cdf(const MeasureSpec& spec, double s) {
    if (!(s >= 0.0)) throw invalid_input("radial_cdf: radius must be nonnegative");
    struct Visitor {
        double s;
        double operator()(const ArealDisk& d) const {
            detail::require_positive(d.R, "disk radius");
            return std::min(1.0, s * s / (d.R * d.R));
        }
        double operator()(const Circle& c) const {
            detail::require_positive(c.t, "circle radius");
            return s < c.t ? 0.0 : 1.0;
        }
        double operator()(const ChebyshevEquilibrium&) const {
            throw unsupported_measure("no radial mass profile for the segment measure");
        }
        double operator()(const PointMassSet&) const {
            throw unsupported_measure("no radial mass profile for point masses");
        }
    };
    return std::visit(Visitor{s}, spec);
}

// One positive radius, kept exact whenever the input was rational.
struct Radius {
    double value = 1.0;
    std::optional<Rational> exact;

    static Radius from_double(double v) {
        if (!(v > 0.0)) throw invalid_input("radius must be positive");
        return {v, std::nullopt};
    }
    static Radius from_rational(const Rational& q) {
        if (q <= 0) throw invalid_input("radius must be positive");
        return {to_double(q), q};
    }

    // Accepts "3", "1/2", "1.25".
    static Radius parse(const std::string& text) {
        std::size_t b = text.find_first_not_of(" \t");
        std::size_t e = text.find_last_not_of(" \t");
        if (b == std::string::npos) throw invalid_input("radius: empty");
        std::string body = text.substr(b, e - b + 1);
        try {
            std::size_t slash = body.find('/');
            if (slash != std::string::npos)
                return from_rational(make_rational(BigInt(body.substr(0, slash)),
                                                   BigInt(body.substr(slash + 1))));
            std::size_t dot = body.find('.');
            if (dot == std::string::npos) return from_rational(Rational(BigInt(body)));
            std::string digits = body.substr(0, dot) + body.substr(dot + 1);
            BigInt den = 1;
            for (std::size_t k = dot + 1; k < body.size(); ++k) den *= 10;
            return from_rational(make_rational(BigInt(digits), den));
        } catch (const std::runtime_error&) {
            throw invalid_input("radius: cannot parse '" + body + "'");
        }
    }
};

// The tuple of radii indexed by the places of S; the archimedean place is
// always part of S.
struct RadiusProfile {
    std::map<Place, Radius> radii;

    double gamma() const {
        double g = 1.0;
        for (const auto& [v, r] : radii) g *= r.value;
        return g;
    }

    std::optional<Rational> gamma_exact() const {
        Rational g = 1;
        for (const auto& [v, r] : radii) {
            if (!r.exact) return std::nullopt;
            g *= *r.exact;
        }
        return g;
    }

    // "inf:1" or "inf:2,2:1/2,3:9/4".
    static RadiusProfile parse(const std::string& text) {
        RadiusProfile out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::size_t colon = item.find(':');
            if (colon == std::string::npos)
                throw invalid_input("radius profile: expected place:radius in '" + item + "'");
            std::string place = item.substr(0, colon);
            std::size_t b = place.find_first_not_of(" \t");
            std::size_t e = place.find_last_not_of(" \t");
            if (b == std::string::npos)
                throw invalid_input("radius profile: empty place");
            place = place.substr(b, e - b + 1);
            Place key = Place::infinity();
            if (place != "inf") {
                BigInt p;
                try {
                    p = BigInt(place);
                } catch (const std::runtime_error&) {
                    throw invalid_input("radius profile: bad place '" + place + "'");
                }
                if (!is_prime(p))
                    throw invalid_input("radius profile: place '" + place + "' is not prime");
                key = Place::prime(p);
            }
            if (!out.radii.emplace(key, Radius::parse(item.substr(colon + 1))).second)
                throw invalid_input("radius profile: duplicate place '" + place + "'");
        }
        if (out.radii.empty()) throw invalid_input("radius profile: empty");
        if (!out.radii.begin()->first.infinite)
            throw invalid_input("radius profile: the place 'inf' is required");
        return out;
    }
};

// "areal:R", "circle:t", "chebyshev". Point masses are built from CSV text
// separately since they arrive through a file.
inline MeasureSpec parse_measure_spec(const std::string& text) {
    if (text == "chebyshev") return ChebyshevEquilibrium{};
    std::size_t colon = text.find(':');
    if (colon != std::string::npos) {
        std::string kind = text.substr(0, colon);
        if (kind == "areal" || kind == "circle") {
            Radius r = Radius::parse(text.substr(colon + 1));
            if (kind == "areal") return ArealDisk{r.value};
            return Circle{r.value};
        }
    }
    throw invalid_input("measure: expected areal:R, circle:t or chebyshev, got '" +
                        text + "'");
}

// CSV rows "re,im,weight"; weights must sum to 1.
inline PointMassSet parse_point_masses(const std::string& csv) {
    PointMassSet pm;
    std::stringstream ss(csv);
    std::string line;
    double total = 0.0;
    while (std::getline(ss, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::stringstream row(line);
        std::string re, im, w;
        if (!std::getline(row, re, ',') || !std::getline(row, im, ',') ||
            !std::getline(row, w))
            throw invalid_input("point masses: expected re,im,weight rows");
        try {
            double weight = std::stod(w);
            pm.atoms.push_back({{std::stod(re), std::stod(im)}, weight});
            total += weight;
        } catch (const std::exception&) {
            throw invalid_input("point masses: bad row '" + line + "'");
        }
    }
    if (pm.atoms.empty()) throw invalid_input("point masses: no atoms");
    if (std::abs(total - 1.0) > 1e-9)
        throw invalid_input("point masses: weights must sum to 1");
    return pm;
}

}  // namespace areal

#endif
