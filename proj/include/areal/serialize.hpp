#ifndef AREAL_SERIALIZE_HPP
#define AREAL_SERIALIZE_HPP

#include <array>
#include <charconv>
#include <cstddef>
#include <string>
#include <vector>

#include "areal/equidist.hpp"
#include "areal/heights.hpp"
#include "areal/pairings.hpp"

namespace areal {

// Every float is printed with 12 significant digits: wide enough that a
// round-trip preserves all pinned tolerances, narrow enough to keep CSVs
// diff-able across machines.
inline std::string format_number(double v) {
    std::array<char, 40> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                             std::chars_format::general, 12);
    return std::string(buf.data(), res.ptr);
}

inline const char* json_bool(bool b) { return b ? "true" : "false"; }

inline std::string json_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string method_label(PairingMethod m) {
    switch (m) {
        case PairingMethod::ClosedForm: return "closed-form";
        case PairingMethod::Quadrature: return "quadrature";
        default: return "hybrid";
    }
}

inline std::string breakdown_json(const std::vector<PlaceContribution>& rows) {
    std::string out = "[";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i) out += ',';
        out += "{\"place\":" + json_quote(to_string(rows[i].place)) +
               ",\"contribution\":" + format_number(rows[i].contribution) + '}';
    }
    return out + ']';
}

inline std::string to_json(const HeightReport& rep) {
    return "{\"total\":" + format_number(rep.total) +
           ",\"h_infinity\":" + format_number(rep.infinity_constant) +
           ",\"per_place\":" + breakdown_json(rep.per_place) +
           ",\"method\":" + json_quote(rep.method) + '}';
}

inline std::string to_csv(const HeightReport& rep) {
    return "total,h_infinity,method\n" + format_number(rep.total) + ',' +
           format_number(rep.infinity_constant) + ',' + rep.method + '\n';
}

inline std::string to_json(const PairingResult& pr) {
    return "{\"value\":" + format_number(pr.value) +
           ",\"method\":" + json_quote(method_label(pr.method)) +
           ",\"nodes\":" + std::to_string(pr.nodes) +
           ",\"error_estimate\":" + format_number(pr.error_estimate) +
           ",\"breakdown\":" + breakdown_json(pr.breakdown) + '}';
}

inline std::string to_csv(const PairingResult& pr) {
    return "value,method,nodes,error_estimate\n" + format_number(pr.value) + ',' +
           method_label(pr.method) + ',' + std::to_string(pr.nodes) + ',' +
           format_number(pr.error_estimate) + '\n';
}

inline std::string to_json(const KroneckerVerdict& kv) {
    std::string rows = "[";
    for (std::size_t i = 0; i < kv.certificate.size(); ++i) {
        const auto& c = kv.certificate[i];
        if (i) rows += ',';
        rows += "{\"place\":" + json_quote(to_string(c.place)) +
                ",\"value\":" + format_number(c.value) +
                ",\"relation\":" + json_quote(c.relation) +
                ",\"satisfied\":" + json_bool(c.satisfied) + '}';
    }
    rows += ']';
    return "{\"attains_minimum\":" + std::string(json_bool(kv.attains_minimum)) +
           ",\"essential_minimum\":" + format_number(kv.essential_minimum) +
           ",\"certificate\":" + rows + '}';
}

inline std::string to_csv(const KroneckerVerdict& kv) {
    return "attains_minimum,essential_minimum\n" +
           std::string(json_bool(kv.attains_minimum)) + ',' +
           format_number(kv.essential_minimum) + '\n';
}

inline std::string to_json(const RadiusOptimum& ro) {
    return "{\"r_star\":" + format_number(ro.r_star) +
           ",\"value\":" + format_number(ro.value) +
           ",\"boundary\":" + json_bool(ro.boundary) + '}';
}

inline std::string to_csv(const RadiusOptimum& ro) {
    return "r_star,value,boundary\n" + format_number(ro.r_star) + ',' +
           format_number(ro.value) + ',' + json_bool(ro.boundary) + '\n';
}

// The threshold test and the limiting height of uniformly distributed
// sequences travel together; below the threshold the limit is null.
inline std::string arithmetic_json(const ArithmeticCheck& chk, const UniformLimit& lim) {
    std::string out = "{\"arithmetic\":" + std::string(json_bool(chk.arithmetic)) +
                      ",\"certificate\":" + format_number(chk.certificate);
    if (lim.arithmetic)
        out += ",\"limit\":" + format_number(lim.limit) +
               ",\"exceeds_essential_min\":" + json_bool(lim.exceeds_essential_min);
    else
        out += ",\"limit\":null,\"exceeds_essential_min\":false";
    return out + '}';
}

inline std::string arithmetic_csv(const ArithmeticCheck& chk, const UniformLimit& lim) {
    return "arithmetic,certificate,limit,exceeds_essential_min\n" +
           std::string(json_bool(chk.arithmetic)) + ',' + format_number(chk.certificate) +
           ',' + (lim.arithmetic ? format_number(lim.limit) : std::string()) + ',' +
           json_bool(lim.exceeds_essential_min) + '\n';
}

inline std::string scalar_json(double v) {
    return "{\"value\":" + format_number(v) + '}';
}

inline std::string scalar_csv(double v) { return "value\n" + format_number(v) + '\n'; }

inline std::string lehmer_json(const std::vector<EquidistRecord>& recs) {
    std::string out = "[";
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& r = recs[i];
        if (i) out += ',';
        out += "{\"p\":" + std::to_string(r.index) +
               ",\"degree\":" + std::to_string(r.degree) +
               ",\"height\":" + format_number(r.height) +
               ",\"gap\":" + format_number(r.gap) +
               ",\"scaled_gap\":" + format_number(r.scaled_gap) +
               ",\"p2_gap\":" + format_number(static_cast<double>(r.index) * r.scaled_gap) +
               '}';
    }
    return out + ']';
}

inline std::string lehmer_csv(const std::vector<EquidistRecord>& recs) {
    std::string out = "p,degree,height,gap,scaled_gap,p2_gap\n";
    for (const auto& r : recs)
        out += std::to_string(r.index) + ',' + std::to_string(r.degree) + ',' +
               format_number(r.height) + ',' + format_number(r.gap) + ',' +
               format_number(r.scaled_gap) + ',' +
               format_number(static_cast<double>(r.index) * r.scaled_gap) + '\n';
    return out;
}

inline std::string discrepancy_json(const std::vector<EquidistRecord>& recs) {
    std::string out = "[";
    for (std::size_t i = 0; i < recs.size(); ++i) {
        if (i) out += ',';
        out += "{\"n\":" + std::to_string(recs[i].index) +
               ",\"degree\":" + std::to_string(recs[i].degree) +
               ",\"discrepancy\":" + format_number(recs[i].discrepancy.value_or(0.0)) + '}';
    }
    return out + ']';
}

inline std::string discrepancy_csv(const std::vector<EquidistRecord>& recs) {
    std::string out = "n,degree,discrepancy\n";
    for (const auto& r : recs)
        out += std::to_string(r.index) + ',' + std::to_string(r.degree) + ',' +
               format_number(r.discrepancy.value_or(0.0)) + '\n';
    return out;
}

// Exact local data.  Archimedean entries are [value, weight_num, weight_den];
// finite entries are [exp_num, exp_den, weight_num, weight_den] with the
// absolute value equal to p^exp.
inline std::string to_json(const ProfileMap& pm) {
    std::string out = "{";
    bool first_place = true;
    for (const auto& [v, prof] : pm) {
        if (!first_place) out += ',';
        first_place = false;
        out += json_quote(to_string(v)) + ":[";
        bool first = true;
        for (const auto& e : prof.entries) {
            if (!first) out += ',';
            first = false;
            out += '[';
            if (v.infinite) {
                out += format_number(e.value);
            } else {
                Rational ex = e.exponent.value_or(Rational(0));
                out += numerator(ex).str() + ',' + denominator(ex).str();
            }
            out += ',' + numerator(e.weight).str() + ',' + denominator(e.weight).str() + ']';
        }
        out += ']';
    }
    return out + '}';
}

}  // namespace areal

#endif
