// Sweeps the disk radius and prints, as CSV, the pairing against the interval
// equilibrium measure, its derivative, the essential minimum, and the
// limiting height of uniformly distributed integer sequences.  The sweep
// shows the pairing minimized at r = 2 and the arithmetic threshold at
// r = e^(1/2).
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "areal/equidist.hpp"
#include "areal/pairings.hpp"

using namespace areal;

int main(int argc, char** argv) {
    double lo = 0.5, hi = 4.0;
    int steps = 36;
    if (argc == 4) {
        lo = std::atof(argv[1]);
        hi = std::atof(argv[2]);
        steps = std::atoi(argv[3]);
    }
    if (!(lo > 0.0) || !(hi > lo) || steps < 2) {
        std::fprintf(stderr, "usage: %s [lo hi steps]  (0 < lo < hi, steps >= 2)\n",
                     argv[0]);
        return 2;
    }

    std::printf("r,interval_pairing,derivative,essential_min,arithmetic,uniform_limit\n");
    for (int k = 0; k <= steps; ++k) {
        double r = lo + (hi - lo) * k / steps;
        RadiusProfile rp;
        rp.radii[Place::infinity()] = Radius::from_double(r);
        auto pairing = az_chebyshev(r);
        auto lim = limiting_height_for_uniform(r);
        std::printf("%.6f,%.12f,%+.12f,%.12f,%d,", r, pairing.value,
                    az_chebyshev_derivative(r), essential_minimum(rp),
                    lim.arithmetic ? 1 : 0);
        if (lim.arithmetic)
            std::printf("%.12f\n", lim.limit);
        else
            std::printf("\n");
    }

    auto best = optimize_radius(ChebyshevEquilibrium{}, lo, hi, 1e-10);
    std::fprintf(stderr, "minimum at r = %.12f, value %.12f%s\n", best.r_star, best.value,
                 best.boundary ? " (interval boundary)" : "");
    return 0;
}
