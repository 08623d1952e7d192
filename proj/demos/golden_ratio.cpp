// Walks the golden ratio through the full toolkit: local data, heights at a
// few radius profiles, comparison bounds, and the attainment certificate.
#include <cstdio>

#include "areal/heights.hpp"
#include "areal/pairings.hpp"

using namespace areal;

int main() {
    auto phi = AlgebraicNumberInput::parse("-1,-1,1");

    std::printf("local absolute values of the conjugates of x^2 - x - 1\n");
    for (const auto& [v, prof] : local_profiles(phi)) {
        std::printf("  place %-3s:", to_string(v).c_str());
        for (const auto& e : prof.entries)
            std::printf("  |.| = %.12f (weight %s/%s)", e.value,
                        numerator(e.weight).str().c_str(),
                        denominator(e.weight).str().c_str());
        std::printf("\n");
    }

    for (const char* spec : {"inf:1", "inf:2", "inf:1,2:1/2"}) {
        auto rp = RadiusProfile::parse(spec);
        auto rep = areal_height(phi, rp);
        std::printf("\nprofile %-12s  height %.12f  (pole constant %+.12f)\n", spec,
                    rep.total, rep.infinity_constant);
        for (const auto& pc : rep.per_place)
            std::printf("  place %-3s contributes %+.12f\n", to_string(pc.place).c_str(),
                        pc.contribution);
        double floor = essential_minimum(rp);
        std::printf("  essential minimum %.12f, excess %+.12f\n", floor,
                    rep.total - floor);
    }

    auto bounds = comparison_bounds(phi, RadiusProfile::parse("inf:1"));
    std::printf("\nclassical-height sandwich at the unit profile: %.6f <= %.6f <= %.6f\n",
                bounds.lower, bounds.value, bounds.upper);

    auto verdict = kronecker_classify(phi, RadiusProfile::parse("inf:1"));
    std::printf("attains the essential minimum: %s\n",
                verdict.attains_minimum ? "yes" : "no");
    for (const auto& row : verdict.certificate)
        std::printf("  place %-3s  |.| = %.9f  needs %s radius  ->  %s\n",
                    to_string(row.place).c_str(), row.value, row.relation.c_str(),
                    row.satisfied ? "ok" : "violated");
    return 0;
}
