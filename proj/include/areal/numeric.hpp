#ifndef AREAL_NUMERIC_HPP
#define AREAL_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "areal/errors.hpp"

namespace areal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

// log|v| for arbitrarily large integers; shifts so the mantissa fits a double.
inline double log_abs(const BigInt& v) {
    BigInt a = abs(v);
    if (a.is_zero()) return -std::numeric_limits<double>::infinity();
    std::size_t bits = msb(a);
    if (bits <= 900) return std::log(to_double(a));
    std::size_t shift = bits - 64;
    return std::log(to_double(BigInt(a >> shift))) +
           static_cast<double>(shift) * std::log(2.0);
}

inline double log_abs(const Rational& q) {
    return log_abs(numerator(q)) - log_abs(denominator(q));
}

// The component constructor rejects negative denominators; normalize first.
inline Rational make_rational(BigInt num, BigInt den) {
    if (den.is_zero()) throw invalid_input("rational: zero denominator");
    if (den < 0) { den = -den; num = -num; }
    return Rational(std::move(num), std::move(den));
}

inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    return boost::multiprecision::miller_rabin_test(n, 32);
}

inline std::vector<std::int64_t> primes_up_to(std::int64_t n) {
    std::vector<bool> sieve(static_cast<std::size_t>(std::max<std::int64_t>(n, 1)) + 1, true);
    std::vector<std::int64_t> out;
    for (std::int64_t i = 2; i <= n; ++i) {
        if (!sieve[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= n; j += i) sieve[static_cast<std::size_t>(j)] = false;
    }
    return out;
}

namespace detail {

inline BigInt pollard_rho(const BigInt& n) {
    // Brent cycle detection; deterministic parameter sweep, n odd composite.
    for (BigInt c = 1; ; ++c) {
        BigInt x = 2, y = 2, d = 1;
        auto step = [&](const BigInt& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

}  // namespace detail

// Prime factorization of n >= 1, ascending primes.  Trial division first,
// Pollard rho on what remains; inputs here are coefficient-sized.
inline std::vector<std::pair<BigInt, long>> factorize(BigInt n) {
    if (n < 1) throw invalid_input("factorize: argument must be >= 1");
    std::vector<std::pair<BigInt, long>> out;
    auto push = [&](const BigInt& p, long e) {
        for (auto& pe : out)
            if (pe.first == p) { pe.second += e; return; }
        out.emplace_back(p, e);
    };
    for (std::int64_t p = 2; p <= 100000 && BigInt(p) * p <= n; p += (p == 2 ? 1 : 2)) {
        long e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e) push(p, e);
    }
    // Recursive split of the remaining cofactor.
    std::vector<BigInt> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        BigInt m = stack.back();
        stack.pop_back();
        if (is_prime(m)) { push(m, 1); continue; }
        BigInt d = detail::pollard_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

// Compensated (Kahan) accumulator; summation order is the caller's contract.
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

// float_part + sum_p coeff[p] * log p with exact rational coefficients.
// Adelic cancellations (product formula, gamma(t) = 1 lambda heights) become
// literal zeros in the coefficient map instead of floating-point residue.
class LogLinear {
public:
    void add(double x) { fp_.add(x); }

    void add_log_prime(const BigInt& p, const Rational& c) {
        if (c == 0) return;
        auto it = coeff_.find(p);
        if (it == coeff_.end()) {
            coeff_.emplace(p, c);
        } else {
            it->second += c;
            if (it->second == 0) coeff_.erase(it);
        }
    }

    // c * log(x) for rational x > 0, factored into prime coefficients.
    void add_log_rational(const Rational& x, const Rational& c) {
        if (x <= 0) throw domain_error("log of a nonpositive rational");
        if (x == 1 || c == 0) return;
        for (const auto& [p, e] : factorize(numerator(x))) add_log_prime(p, c * e);
        for (const auto& [p, e] : factorize(denominator(x))) add_log_prime(p, -c * e);
    }

    void add(const LogLinear& other) {
        fp_.add(other.fp_.value());
        for (const auto& [p, c] : other.coeff_) add_log_prime(p, c);
    }

    bool rational_part_zero() const { return coeff_.empty(); }

    double value() const {
        KahanSum total = fp_;
        for (const auto& [p, c] : coeff_) total.add(to_double(c) * log_abs(p));
        return total.value();
    }

private:
    KahanSum fp_;
    std::map<BigInt, Rational> coeff_;
};

}  // namespace areal

#endif
