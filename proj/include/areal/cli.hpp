#ifndef AREAL_CLI_HPP
#define AREAL_CLI_HPP

#include <complex>
#include <cstddef>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "areal/equidist.hpp"
#include "areal/heights.hpp"
#include "areal/pairings.hpp"
#include "areal/serialize.hpp"

namespace areal {

struct Config {
    int quadrature_nodes = 1 << 16;
    double root_tol = 1e-13;
    long series_terms = 1000000;
    std::string output = "json";

    void validate() const {
        if (quadrature_nodes < 16 ||
            (quadrature_nodes & (quadrature_nodes - 1)) != 0)
            throw invalid_input("config: nodes must be a power of two >= 16");
        if (!(root_tol > 0.0) || !(root_tol < 1e-3))
            throw invalid_input("config: root-tol must lie in (0, 1e-3)");
        if (series_terms < 1)
            throw invalid_input("config: series-terms must be positive");
        if (output != "json" && output != "csv" && output != "plain")
            throw invalid_input("config: output must be json, csv, or plain");
    }
};

namespace detail_cli {

// --out accepts a format keyword or a destination path; paths carry their
// format in the extension and suppress stdout.
struct Emitter {
    std::string format;
    std::string path;  // empty: write to the stream

    static Emitter resolve(const std::string& spec) {
        if (spec == "json" || spec == "csv" || spec == "plain") return {spec, ""};
        auto dot = spec.find_last_of('.');
        std::string ext = dot == std::string::npos ? "" : spec.substr(dot + 1);
        if (ext != "json" && ext != "csv")
            throw invalid_input(
                "output: expected json, csv, plain, or a path ending in .json/.csv");
        return {ext, spec};
    }

    void deliver(std::string text, std::ostream& out) const {
        if (!text.empty() && text.back() != '\n') text += '\n';
        if (path.empty()) {
            out << text;
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw invalid_input("output: cannot open '" + path + "'");
        f << text;
    }
};

inline long parse_long(const std::string& text, const std::string& what) {
    try {
        std::size_t pos = 0;
        long v = std::stol(text, &pos);
        if (pos != text.size()) throw std::runtime_error("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw invalid_input(what + ": cannot parse integer '" + text + "'");
    }
}

// "a:b" inclusive; a bare integer means the single-point range.
inline std::pair<long, long> parse_range(const std::string& text,
                                         const std::string& what) {
    auto colon = text.find(':');
    long a, b;
    if (colon == std::string::npos) {
        a = b = parse_long(text, what);
    } else {
        a = parse_long(text.substr(0, colon), what);
        b = parse_long(text.substr(colon + 1), what);
    }
    if (a > b) throw invalid_input(what + ": range lo exceeds hi");
    return {a, b};
}

inline Rational parse_rational(const std::string& text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        return make_rational(BigInt(text.substr(0, slash)),
                             BigInt(text.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw invalid_input("rational: cannot parse '" + text + "'");
    }
}

// Measures: areal:R, circle:t, chebyshev, or points:FILE with re,im,weight rows.
inline MeasureSpec parse_measure_text(const std::string& text) {
    if (text.rfind("points:", 0) == 0) {
        std::string file = text.substr(7);
        std::ifstream f(file, std::ios::binary);
        if (!f) throw invalid_input("points: cannot read file '" + file + "'");
        std::stringstream buf;
        buf << f.rdbuf();
        return parse_point_masses(buf.str());
    }
    return parse_measure_spec(text);
}

inline IntPolynomial poly_from_text(const std::string& text) {
    auto alpha = AlgebraicNumberInput::parse(text);
    if (alpha.kind == AlgebraicNumberInput::Kind::Infinity)
        throw invalid_input("polynomial: 'inf' has no defining polynomial");
    if (alpha.kind == AlgebraicNumberInput::Kind::Zero)
        return IntPolynomial(std::vector<BigInt>{0, 1});
    return alpha.poly;
}

// areal:R against chebyshev or circle:t carries the h_infinity constant and
// routes to the closed forms; every other pair is the plain mutual energy.
inline PairingResult pairing_dispatch(const std::string& left,
                                      const std::string& right,
                                      const Config& cfg) {
    if (left.rfind("areal:", 0) == 0) {
        if (right == "chebyshev")
            return az_chebyshev(Radius::parse(left.substr(6)).value,
                                cfg.quadrature_nodes);
        if (right.rfind("circle:", 0) == 0)
            return az_closed_form(RadiusProfile::parse("inf:" + left.substr(6)),
                                  RadiusProfile::parse("inf:" + right.substr(7)));
    }
    return mutual_energy_quadrature(parse_measure_text(left),
                                    parse_measure_text(right),
                                    cfg.quadrature_nodes);
}

inline std::string render(const HeightReport& rep, const std::string& fmt) {
    if (fmt == "json") return to_json(rep);
    if (fmt == "csv") return to_csv(rep);
    return format_number(rep.total);
}

inline std::string render(const PairingResult& pr, const std::string& fmt) {
    if (fmt == "json") return to_json(pr);
    if (fmt == "csv") return to_csv(pr);
    return format_number(pr.value);
}

inline std::string render(const KroneckerVerdict& kv, const std::string& fmt) {
    if (fmt == "json") return to_json(kv);
    if (fmt == "csv") return to_csv(kv);
    return json_bool(kv.attains_minimum);
}

inline std::string render(const RadiusOptimum& ro, const std::string& fmt) {
    if (fmt == "json") return to_json(ro);
    if (fmt == "csv") return to_csv(ro);
    return format_number(ro.r_star);
}

inline std::string render_scalar(double v, const std::string& fmt) {
    if (fmt == "json") return scalar_json(v);
    if (fmt == "csv") return scalar_csv(v);
    return format_number(v);
}

inline std::string render_arithmetic(double r, const std::string& fmt) {
    ArithmeticCheck chk = arithmetic_measure_check(r);
    UniformLimit lim = limiting_height_for_uniform(r);
    if (fmt == "json") return arithmetic_json(chk, lim);
    if (fmt == "csv") return arithmetic_csv(chk, lim);
    return json_bool(chk.arithmetic);
}

}  // namespace detail_cli

// Entry point behind the binary: `args` excludes the program name.  Writes
// results to `out`, diagnostics to `err`; returns the process exit status
// (0 ok, 2 invalid input, 3 numeric failure).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"Areal heights, equilibrium pairings, and equidistribution tables"};
    app.name("areal-heights");
    app.require_subcommand(1);

    Config cfg;
    std::string out_spec = "json";
    app.add_option("--nodes", cfg.quadrature_nodes,
                   "quadrature nodes, a power of two >= 16")
        ->envname("AREAL_HEIGHTS_NODES");
    app.add_option("--root-tol", cfg.root_tol, "root solver tolerance, in (0, 1e-3)");
    app.add_option("--series-terms", cfg.series_terms, "series truncation length");
    app.add_option("--out", out_spec,
                   "json | csv | plain, or a destination path ending in .json/.csv");

    std::string poly_text, radii_text, left_text, right_text, target_text;
    std::string alpha_text = "1/2", primes_text = "5:499", family = "cyclotomic";
    std::string n_text = "3:100", disc_target = "circle:1", eq_radii = "inf:1";
    bool force = false;
    double r_arg = 1.0, lo = 0.1, hi = 10.0, opt_tol = 1e-8;

    auto* c_height = app.add_subcommand("height", "areal height of an algebraic number");
    c_height->add_option("--poly", poly_text, "coefficients a0,a1,... or p/q or inf")
        ->required();
    c_height->add_option("--radii", radii_text, "radius profile, e.g. inf:2,2:1/2")
        ->required();
    c_height->add_flag("--force", force, "accept reducible or repeated-root input");

    auto* c_lambda =
        app.add_subcommand("lambda-height", "truncated-log height of an algebraic number");
    c_lambda->add_option("--poly", poly_text, "coefficients a0,a1,... or p/q or inf")
        ->required();
    c_lambda->add_option("--radii", radii_text, "radius profile, e.g. inf:1")->required();
    c_lambda->add_flag("--force", force, "accept reducible or repeated-root input");

    auto* c_mahler = app.add_subcommand("mahler", "logarithmic Mahler measure");
    c_mahler->add_option("--poly", poly_text, "coefficients a0,a1,... or p/q")->required();

    auto* c_areal_mahler =
        app.add_subcommand("areal-mahler", "Mahler measure with the quadratic disk kernel");
    c_areal_mahler->add_option("--poly", poly_text, "coefficients a0,a1,... or p/q")
        ->required();

    auto* c_pairing = app.add_subcommand("pairing", "energy pairing of two measures");
    c_pairing->add_option("--left", left_text, "areal:R, circle:t, chebyshev, points:FILE")
        ->required();
    c_pairing->add_option("--right", right_text, "areal:R, circle:t, chebyshev, points:FILE")
        ->required();

    auto* c_opt = app.add_subcommand("optimize-radius",
                                     "radius minimizing the pairing against a target");
    c_opt->add_option("--target", target_text, "circle:t or chebyshev")->required();
    c_opt->add_option("--lo", lo, "lower end of the search interval");
    c_opt->add_option("--hi", hi, "upper end of the search interval");
    c_opt->add_option("--tol", opt_tol, "radius tolerance");

    auto* c_kron =
        app.add_subcommand("kronecker", "does the number attain the essential minimum?");
    c_kron->add_option("--poly", poly_text, "coefficients a0,a1,... or p/q")->required();
    c_kron->add_option("--radii", radii_text, "radius profile")->required();
    c_kron->add_flag("--force", force, "accept reducible or repeated-root input");

    auto* c_ess = app.add_subcommand("essential-min", "essential minimum of the height");
    c_ess->add_option("--radii", radii_text, "radius profile")->required();

    auto* c_arith = app.add_subcommand(
        "arithmetic-check", "is the disk measure of radius r arithmetic?");
    c_arith->add_option("--r", r_arg, "disk radius")->required();

    auto* c_eq = app.add_subcommand("equidist", "equidistribution tables");
    c_eq->require_subcommand(1);
    auto* c_lehmer = c_eq->add_subcommand(
        "lehmer", "height gaps of the p-th root family over a base rational");
    c_lehmer->add_option("--alpha", alpha_text, "base rational p/q");
    c_lehmer->add_option("--primes", primes_text, "prime range a:b");
    c_lehmer->add_option("--radii", eq_radii, "radius profile");
    auto* c_disc = c_eq->add_subcommand(
        "discrepancy", "distance of conjugate sets from a limit measure");
    c_disc->add_option("--family", family, "input family (cyclotomic)");
    c_disc->add_option("--n", n_text, "index range a:b, 1 <= a <= b <= 100");
    c_disc->add_option("--target", disc_target, "limit measure");
    auto* c_eq_arith =
        c_eq->add_subcommand("arithmetic", "threshold test for the disk measure");
    c_eq_arith->add_option("--r", r_arg, "disk radius")->required();

    for (auto* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (auto* nested : sub->get_subcommands(nullptr)) nested->fallthrough();
    }

    try {
        std::vector<const char*> argv;
        argv.push_back("areal-heights");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "invalid input: " << e.what() << '\n';
        return 2;
    }

    try {
        cfg.validate();
        auto emit = detail_cli::Emitter::resolve(out_spec);
        const std::string& fmt = emit.format;
        HeightOptions hopts;
        hopts.roots.tol = cfg.root_tol;
        hopts.force = force;

        std::string text;
        if (*c_height) {
            text = detail_cli::render(areal_height(AlgebraicNumberInput::parse(poly_text),
                                                   RadiusProfile::parse(radii_text), hopts),
                                      fmt);
        } else if (*c_lambda) {
            text = detail_cli::render(lambda_height(AlgebraicNumberInput::parse(poly_text),
                                                    RadiusProfile::parse(radii_text), hopts),
                                      fmt);
        } else if (*c_mahler) {
            text = detail_cli::render_scalar(
                mahler_measure(detail_cli::poly_from_text(poly_text), hopts.roots), fmt);
        } else if (*c_areal_mahler) {
            text = detail_cli::render_scalar(
                areal_mahler_measure(detail_cli::poly_from_text(poly_text), hopts.roots),
                fmt);
        } else if (*c_pairing) {
            text = detail_cli::render(detail_cli::pairing_dispatch(left_text, right_text, cfg),
                                      fmt);
        } else if (*c_opt) {
            text = detail_cli::render(
                optimize_radius(detail_cli::parse_measure_text(target_text), lo, hi, opt_tol),
                fmt);
        } else if (*c_kron) {
            text = detail_cli::render(kronecker_classify(AlgebraicNumberInput::parse(poly_text),
                                                         RadiusProfile::parse(radii_text), hopts),
                                      fmt);
        } else if (*c_ess) {
            text = detail_cli::render_scalar(
                essential_minimum(RadiusProfile::parse(radii_text)), fmt);
        } else if (*c_arith || *c_eq_arith) {
            text = detail_cli::render_arithmetic(r_arg, fmt);
        } else if (*c_lehmer) {
            auto [a, b] = detail_cli::parse_range(primes_text, "primes");
            if (b > 100000) throw invalid_input("primes: range end exceeds 100000");
            std::vector<long> ps;
            for (long p : primes_up_to(b))
                if (p >= a) ps.push_back(p);
            auto recs = lehmer_failure_sequence(detail_cli::parse_rational(alpha_text), ps,
                                                RadiusProfile::parse(eq_radii));
            text = fmt == "json" ? lehmer_json(recs) : lehmer_csv(recs);
        } else if (*c_disc) {
            if (family != "cyclotomic")
                throw invalid_input("family: only 'cyclotomic' is available");
            auto [a, b] = detail_cli::parse_range(n_text, "n");
            if (a < 1 || b > 100)
                throw invalid_input("n: cyclotomic index range must lie in [1, 100]");
            MeasureSpec target = detail_cli::parse_measure_text(disc_target);
            std::vector<EquidistRecord> recs;
            for (long n = a; n <= b; ++n) {
                IntPolynomial phi = cyclotomic(static_cast<int>(n));
                WeightedPoints pts;
                for (const auto& z : root_multiset(phi, hopts.roots))
                    pts.push_back({z, 1.0});
                EquidistRecord rec;
                rec.index = n;
                rec.degree = phi.degree();
                rec.discrepancy = empirical_discrepancy(pts, target);
                recs.push_back(rec);
            }
            text = fmt == "json" ? discrepancy_json(recs) : discrepancy_csv(recs);
        }
        emit.deliver(text, out);
        return 0;
    } catch (const numeric_error& e) {
        err << "numeric error: " << e.what() << " (residual " << format_number(e.residual)
            << ")\n";
        return 3;
    } catch (const invalid_input& e) {
        err << "invalid input: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace areal

#endif
