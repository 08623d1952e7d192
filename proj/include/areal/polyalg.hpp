#ifndef AREAL_POLYALG_HPP
#define AREAL_POLYALG_HPP

#include <algorithm>
#include <cctype>
#include <complex>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "areal/numeric.hpp"

namespace areal {

// Integer polynomial with exact coefficients, ascending degree order.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    // Comma-separated ascending coefficients: "-1,-1,1" is x^2 - x - 1.
    static IntPolynomial parse(const std::string& text) {
        std::vector<BigInt> coeffs;
        std::string token;
        auto flush = [&] {
            std::size_t b = token.find_first_not_of(" \t");
            std::size_t e = token.find_last_not_of(" \t");
            if (b == std::string::npos)
                throw invalid_input("polynomial: empty coefficient");
            std::string body = token.substr(b, e - b + 1);
            std::size_t k = (body[0] == '+' || body[0] == '-') ? 1 : 0;
            if (k == body.size() ||
                body.find_first_not_of("0123456789", k) != std::string::npos)
                throw invalid_input("polynomial: coefficient '" + body +
                                    "' is not an integer");
            coeffs.emplace_back(body);
            token.clear();
        };
        for (char ch : text) {
            if (ch == ',') flush();
            else token.push_back(ch);
        }
        flush();
        if (coeffs.back().is_zero())
            throw invalid_input("polynomial: leading coefficient must be nonzero");
        return IntPolynomial(std::move(coeffs));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<BigInt>& coeffs() const { return c_; }
    const BigInt& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const BigInt& leading() const { return c_.back(); }

    IntPolynomial derivative() const {
        std::vector<BigInt> d;
        for (int i = 1; i <= degree(); ++i) d.push_back(c_[static_cast<std::size_t>(i)] * i);
        return IntPolynomial(std::move(d));
    }

    BigInt content() const {
        BigInt g = 0;
        for (const auto& a : c_) g = gcd(g, a);
        return g;
    }

    // Content divided out, leading coefficient made positive.
    IntPolynomial primitive_part() const {
        if (is_zero()) return {};
        BigInt g = content();
        if (leading() < 0) g = -g;
        std::vector<BigInt> out;
        out.reserve(c_.size());
        for (const auto& a : c_) out.push_back(a / g);
        return IntPolynomial(std::move(out));
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(out));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<BigInt> out(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
        return IntPolynomial(std::move(out));
    }

    bool operator==(const IntPolynomial&) const = default;

private:
    std::vector<BigInt> c_;
};

inline std::pair<BigInt, BigInt> content_and_leading(const IntPolynomial& p) {
    if (p.is_zero()) throw invalid_input("content_and_leading: zero polynomial");
    return {p.content(), p.leading()};
}

// Exact quotient; throws if b does not divide a in Z[x].
inline IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw invalid_input("divide_exact: division by zero polynomial");
    std::vector<BigInt> rem(a.coeffs());
    int da = a.degree(), db = b.degree();
    if (da < db) throw invalid_input("divide_exact: not divisible");
    std::vector<BigInt> q(static_cast<std::size_t>(da - db) + 1, 0);
    for (int k = da - db; k >= 0; --k) {
        BigInt head = rem[static_cast<std::size_t>(k + db)];
        if (head % b.leading() != 0) throw invalid_input("divide_exact: not divisible");
        BigInt f = head / b.leading();
        q[static_cast<std::size_t>(k)] = f;
        if (f.is_zero()) continue;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(k + i)] -= f * b[i];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw invalid_input("divide_exact: nonzero remainder");
    return IntPolynomial(std::move(q));
}

namespace detail {

inline IntPolynomial pseudo_rem(IntPolynomial a, const IntPolynomial& b) {
    const int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        BigInt la = a.leading();
        std::vector<BigInt> next(a.coeffs());
        for (auto& v : next) v *= b.leading();
        for (int i = 0; i <= db; ++i)
            next[static_cast<std::size_t>(shift + i)] -= la * b[i];
        a = IntPolynomial(std::move(next));
    }
    return a;
}

}  // namespace detail

// Primitive-PRS gcd; result is primitive with positive leading coefficient.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = detail::pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// P / gcd(P, P'): same roots, all multiplicities 1, primitive, leading > 0.
inline IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.degree() < 1) throw invalid_input("squarefree_part: degree >= 1 required");
    IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive_part();
    return divide_exact(p.primitive_part(), g);
}

struct NewtonPolygon {
    BigInt prime;
    int zero_roots = 0;  // roots at 0, valuation +infinity, kept off the hull
    std::vector<std::pair<int, Rational>> vertices;  // (index, v_p(a_index)) on the lower hull
    std::vector<std::pair<Rational, int>> slopes;    // ascending; slope s gives mult roots with v_p(root) = -s
};

inline NewtonPolygon newton_polygon(const IntPolynomial& p, const BigInt& q) {
    if (p.is_zero()) throw invalid_input("newton_polygon: zero polynomial");
    if (!is_prime(q)) throw invalid_input("newton_polygon: modulus is not prime");
    NewtonPolygon np;
    np.prime = q;
    int m = 0;
    while (p[m].is_zero()) ++m;
    np.zero_roots = m;

    std::vector<std::pair<long long, long long>> pts;
    for (int i = m; i <= p.degree(); ++i) {
        if (p[i].is_zero()) continue;
        BigInt a = abs(p[i]);
        long long v = 0;
        while (a % q == 0) { a /= q; ++v; }
        pts.emplace_back(i, v);
    }
    // Lower convex hull, left to right: slopes strictly increase.
    std::vector<std::pair<long long, long long>> hull;
    for (const auto& c : pts) {
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& a = hull.back();
            long long cross = (a.first - o.first) * (c.second - o.second) -
                              (a.second - o.second) * (c.first - o.first);
            if (cross <= 0) hull.pop_back();
            else break;
        }
        hull.push_back(c);
    }
    for (const auto& h : hull)
        np.vertices.emplace_back(static_cast<int>(h.first), Rational(h.second));
    for (std::size_t k = 1; k < hull.size(); ++k) {
        long long di = hull[k].first - hull[k - 1].first;
        long long dv = hull[k].second - hull[k - 1].second;
        np.slopes.emplace_back(Rational(dv, di), static_cast<int>(di));
    }
    return np;
}

struct RootOptions {
    double tol = 1e-13;
    int max_iter = 500;
};

namespace detail {

inline bool root_less(const std::complex<double>& a, const std::complex<double>& b) {
    auto snap = [](double x) { return std::round(x * 1e12); };
    double ar = snap(a.real()), br = snap(b.real());
    if (ar != br) return ar < br;
    return snap(a.imag()) < snap(b.imag());
}

// Real coefficients force conjugate-symmetric roots: flatten near-real
// imaginary parts and average the conjugate pairs.
inline void enforce_conjugate_symmetry(std::vector<std::complex<double>>& z, double tol) {
    std::vector<std::size_t> upper, lower;
    for (std::size_t k = 0; k < z.size(); ++k) {
        double cut = std::max(1e-12, 1e3 * tol) * (1.0 + std::abs(z[k]));
        if (std::abs(z[k].imag()) <= cut) z[k] = {z[k].real(), 0.0};
        else if (z[k].imag() > 0) upper.push_back(k);
        else lower.push_back(k);
    }
    std::vector<bool> used(z.size(), false);
    for (std::size_t u : upper) {
        std::size_t best = z.size();
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t l : lower) {
            if (used[l]) continue;
            double d = std::abs(z[u] - std::conj(z[l]));
            if (d < best_d) { best_d = d; best = l; }
        }
        if (best == z.size()) continue;
        used[best] = true;
        std::complex<double> w = 0.5 * (z[u] + std::conj(z[best]));
        z[u] = w;
        z[best] = std::conj(w);
    }
}

// Quadratic formula with the discriminant sign decided exactly.
inline std::vector<std::complex<double>> quadratic_roots(const std::vector<BigInt>& c) {
    const BigInt &a = c[0], &b = c[1], &q = c[2];
    BigInt disc = b * b - 4 * a * q;
    std::size_t s = std::max({msb(abs(q)), a.is_zero() ? 0 : msb(abs(a)),
                              b.is_zero() ? 0 : msb(abs(b))});
    BigInt unit = BigInt(1) << s;
    double ad = to_double(Rational(a, unit));
    double bd = to_double(Rational(b, unit));
    double qd = to_double(Rational(q, unit));
    double dd = to_double(Rational(disc, unit * unit));
    double sq = std::sqrt(std::abs(dd));
    if (disc >= 0) {
        double r1, r2;
        if (b.is_zero()) {
            r1 = std::sqrt(-ad / qd);
            r2 = -r1;
        } else {
            double t = -(bd + std::copysign(sq, bd)) / 2.0;
            r1 = t / qd;
            r2 = ad / t;
        }
        return {{r1, 0.0}, {r2, 0.0}};
    }
    double re = -bd / (2.0 * qd);
    double im = std::abs(sq / (2.0 * qd));
    return {{re, -im}, {re, im}};
}

// Aberth-Ehrlich simultaneous iteration on a_0 != 0, degree >= 1 input.
inline std::vector<std::complex<double>> aberth(const std::vector<BigInt>& coeffs,
                                                const RootOptions& opts) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    // Scale by a power of two so evaluations stay inside double range.
    std::size_t shift = msb(abs(coeffs[static_cast<std::size_t>(n)]));
    std::vector<double> cd(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        cd[i] = to_double(Rational(coeffs[i], BigInt(1) << shift));

    // Fujiwara bound on root magnitudes, computed in logs.
    double lg_an = log_abs(coeffs[static_cast<std::size_t>(n)]);
    double radius = 0.0;
    for (int k = 1; k <= n; ++k) {
        const BigInt& a = coeffs[static_cast<std::size_t>(n - k)];
        if (a.is_zero()) continue;
        double lg = log_abs(a) - lg_an - (k == n ? std::log(2.0) : 0.0);
        radius = std::max(radius, std::exp(lg / k));
    }
    radius *= 2.0;

    std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
    const double two_pi = 2.0 * 3.141592653589793238462643383279502884;
    for (int k = 0; k < n; ++k) {
        double theta = two_pi * k / n + 0.42;
        z[static_cast<std::size_t>(k)] = std::polar(radius, theta);
    }

    auto horner = [&](std::complex<double> x) {
        std::complex<double> p = 0.0, dp = 0.0;
        for (int i = n; i >= 0; --i) {
            dp = dp * x + p;
            p = p * x + cd[static_cast<std::size_t>(i)];
        }
        return std::pair{p, dp};
    };

    bool settled = false;
    for (int iter = 0; iter < opts.max_iter && !settled; ++iter) {
        settled = true;
        for (int k = 0; k < n; ++k) {
            auto& zk = z[static_cast<std::size_t>(k)];
            auto [p, dp] = horner(zk);
            if (p == std::complex<double>(0.0)) continue;
            if (dp == std::complex<double>(0.0)) {
                zk += std::complex<double>(1e-6 * (1.0 + std::abs(zk)), 1e-6);
                settled = false;
                continue;
            }
            std::complex<double> ratio = p / dp;
            std::complex<double> rep = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != k) rep += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
            std::complex<double> w = ratio / (1.0 - ratio * rep);
            zk -= w;
            if (std::abs(w) > 1e-15 * (1.0 + std::abs(zk))) settled = false;
        }
    }

    // Weierstrass residual |P(z_k)| / (|a_n| prod |z_k - z_j|) estimates the
    // distance to the true root; every root must clear tol.
    double worst = 0.0;
    for (int k = 0; k < n; ++k) {
        auto zk = z[static_cast<std::size_t>(k)];
        double lg_num = std::log(std::abs(horner(zk).first)) - std::log(std::abs(cd.back()));
        double lg_den = 0.0;
        for (int j = 0; j < n; ++j)
            if (j != k) lg_den += std::log(std::abs(zk - z[static_cast<std::size_t>(j)]));
        double res = std::exp(lg_num - lg_den) / (1.0 + std::abs(zk));
        worst = std::max(worst, res);
    }
    if (!(worst <= opts.tol))
        throw numeric_error("root solver did not reach tolerance", worst);

    enforce_conjugate_symmetry(z, opts.tol);
    std::sort(z.begin(), z.end(), root_less);
    return z;
}

}  // namespace detail

// All deg(P) roots of a squarefree polynomial, deterministically ordered.
inline std::vector<std::complex<double>> complex_roots(const IntPolynomial& p,
                                                       const RootOptions& opts = {}) {
    if (p.degree() < 1) throw invalid_input("complex_roots: degree >= 1 required");
    int m = 0;
    while (p[m].is_zero()) ++m;
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(m), {0.0, 0.0});
    if (p.degree() > m) {
        std::vector<BigInt> body(p.coeffs().begin() + m, p.coeffs().end());
        if (body.size() == 2) {
            // Linear factor solved exactly.
            roots.emplace_back(to_double(make_rational(-body[0], body[1])), 0.0);
        } else if (body.size() == 3) {
            auto pair = detail::quadratic_roots(body);
            roots.insert(roots.end(), pair.begin(), pair.end());
        } else {
            auto rest = detail::aberth(body, opts);
            roots.insert(roots.end(), rest.begin(), rest.end());
        }
    }
    std::sort(roots.begin(), roots.end(), detail::root_less);
    return roots;
}

// Roots with multiplicity: peel the squarefree part off gcd(P, P') repeatedly.
inline std::vector<std::complex<double>> root_multiset(const IntPolynomial& p,
                                                       const RootOptions& opts = {}) {
    if (p.is_zero()) throw invalid_input("root_multiset: zero polynomial");
    if (p.degree() == 0) return {};
    IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return complex_roots(p, opts);
    auto roots = complex_roots(divide_exact(p.primitive_part(), g), opts);
    auto rest = root_multiset(g, opts);
    roots.insert(roots.end(), rest.begin(), rest.end());
    std::sort(roots.begin(), roots.end(), detail::root_less);
    return roots;
}

// n-th cyclotomic polynomial by exact division of x^n - 1.
inline IntPolynomial cyclotomic(int n) {
    if (n < 1) throw invalid_input("cyclotomic: index must be >= 1");
    std::vector<BigInt> xn(static_cast<std::size_t>(n) + 1, 0);
    xn[0] = -1;
    xn[static_cast<std::size_t>(n)] = 1;
    IntPolynomial acc(std::move(xn));
    for (int d = 1; d < n; ++d)
        if (n % d == 0) acc = divide_exact(acc, cyclotomic(d));
    return acc;
}

}  // namespace areal

#endif
