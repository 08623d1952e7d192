#ifndef AREAL_PLACES_HPP
#define AREAL_PLACES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "areal/numeric.hpp"
#include "areal/polyalg.hpp"

namespace areal {

struct Place {
    bool infinite = true;
    BigInt p;  // meaningful only when !infinite

    static Place infinity() { return {}; }
    static Place prime(BigInt q) { return {false, std::move(q)}; }

    friend bool operator==(const Place& a, const Place& b) {
        return a.infinite == b.infinite && (a.infinite || a.p == b.p);
    }
    // Archimedean place first, then primes ascending.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.infinite != b.infinite) return a.infinite;
        if (a.infinite) return false;
        return a.p < b.p;
    }
};

inline std::string to_string(const Place& v) {
    return v.infinite ? "inf" : v.p.str();
}

struct ProfileEntry {
    double value = 0.0;
    Rational weight;
    // Finite places carry value = p^exponent exactly; archimedean entries do not.
    std::optional<Rational> exponent;
};

struct LocalValueProfile {
    Place place;
    std::vector<ProfileEntry> entries;

    Rational weight_sum() const {
        Rational s = 0;
        for (const auto& e : entries) s += e.weight;
        return s;
    }
};

using ProfileMap = std::map<Place, LocalValueProfile>;

// A nonzero algebraic number given by an integer polynomial vanishing at it,
// or one of the two conventional symbols.
struct AlgebraicNumberInput {
    enum class Kind { Number, Zero, Infinity };
    Kind kind = Kind::Zero;
    IntPolynomial poly;  // meaningful only when kind == Number

    static AlgebraicNumberInput zero() { return {Kind::Zero, {}}; }
    static AlgebraicNumberInput infinity() { return {Kind::Infinity, {}}; }

    static AlgebraicNumberInput from_poly(IntPolynomial p) {
        if (p.degree() < 1)
            throw invalid_input("algebraic input: polynomial degree must be >= 1");
        if (p.degree() == 1 && p[0].is_zero()) return zero();
        return {Kind::Number, std::move(p)};
    }

    // Accepts "inf", an integer, a fraction "p/q", or ascending coefficients.
    static AlgebraicNumberInput parse(const std::string& text) {
        std::size_t b = text.find_first_not_of(" \t");
        std::size_t e = text.find_last_not_of(" \t");
        if (b == std::string::npos) throw invalid_input("algebraic input: empty");
        std::string body = text.substr(b, e - b + 1);
        if (body == "inf") return infinity();
        if (body.find(',') != std::string::npos)
            return from_poly(IntPolynomial::parse(body));
        std::size_t slash = body.find('/');
        try {
            if (slash == std::string::npos) {
                BigInt k(body);
                return from_poly(IntPolynomial({-k, 1}));
            }
            BigInt num(body.substr(0, slash));
            BigInt den(body.substr(slash + 1));
            if (den.is_zero()) throw invalid_input("algebraic input: zero denominator");
            if (den < 0) { den = -den; num = -num; }
            BigInt g = gcd(abs(num), den);
            return from_poly(IntPolynomial({-num / g, den / g}));
        } catch (const std::runtime_error&) {
            throw invalid_input("algebraic input: cannot parse '" + body + "'");
        }
    }
};

// Fast necessary conditions for irreducibility over the rationals: degree >= 2
// inputs must be squarefree with nonzero constant term and no root at +-1.
// Deliberately shallow; deeper reducibility is the caller's responsibility.
inline void cheap_irreducibility_checks(const IntPolynomial& p) {
    if (p.degree() < 1)
        throw invalid_input("irreducibility: degree must be >= 1");
    if (p.degree() == 1) return;
    if (p[0].is_zero())
        throw invalid_input("irreducibility: x divides the polynomial");
    if (p.eval(1).is_zero() || p.eval(-1).is_zero())
        throw invalid_input("irreducibility: root at +1 or -1");
    if (poly_gcd(p, p.derivative()).degree() > 0)
        throw invalid_input("irreducibility: repeated factor");
}

// Weighted absolute-value data of the conjugate multiset at every relevant
// place. Primes away from a_0 a_n carry only units and are omitted.
inline ProfileMap local_profiles(const AlgebraicNumberInput& alpha,
                                 const RootOptions& opts = {}) {
    if (alpha.kind != AlgebraicNumberInput::Kind::Number)
        throw invalid_input("local_profiles: zero and infinity have no profile");
    const IntPolynomial& p = alpha.poly;
    if (p[0].is_zero())
        throw invalid_input("local_profiles: zero among the roots; factor x out first");
    const int n = p.degree();

    ProfileMap out;
    LocalValueProfile arch;
    arch.place = Place::infinity();
    for (const auto& z : root_multiset(p, opts))
        arch.entries.push_back({std::abs(z), Rational(1, n), std::nullopt});
    out.emplace(arch.place, std::move(arch));

    for (const auto& [q, e] : factorize(abs(p[0]) * abs(p.leading()))) {
        (void)e;
        auto np = newton_polygon(p, q);
        LocalValueProfile fin;
        fin.place = Place::prime(q);
        bool trivial = true;
        double lq = log_abs(q);
        for (const auto& [slope, mult] : np.slopes) {
            if (!slope.is_zero()) trivial = false;
            fin.entries.push_back(
                {std::exp(to_double(slope) * lq), Rational(mult, n), slope});
        }
        if (!trivial) out.emplace(fin.place, std::move(fin));
    }
    return out;
}

// Numeric total of weight * log(value) over every place; zero up to the
// accuracy of the archimedean roots.
inline double product_formula_residual(const ProfileMap& profiles) {
    LogLinear acc;
    for (const auto& [place, prof] : profiles) {
        for (const auto& e : prof.entries) {
            if (place.infinite) acc.add(to_double(e.weight) * std::log(e.value));
            else acc.add_log_prime(place.p, e.weight * *e.exponent);
        }
    }
    return acc.value();
}

// The finite-place coefficients must cancel the exact prime content of
// a_0 / a_n with no numeric slack at all.
inline bool finite_parts_cancel_exactly(const ProfileMap& profiles,
                                        const IntPolynomial& p) {
    LogLinear acc;
    for (const auto& [place, prof] : profiles) {
        if (place.infinite) continue;
        for (const auto& e : prof.entries) acc.add_log_prime(place.p, e.weight * *e.exponent);
    }
    acc.add_log_rational(Rational(abs(p[0]), abs(p.leading())), Rational(1, p.degree()));
    return acc.rational_part_zero();
}

}  // namespace areal

#endif
