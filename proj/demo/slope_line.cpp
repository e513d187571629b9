// beta_0(m) and beta*(m, k) for a few slopes, with the sets they produce.

#include <iostream>

#include "uncorrset/constructions.hpp"
#include "uncorrset/engine/enumerate.hpp"

using namespace uncorrset;

int main() {
    const Rational width(1, 1000000000);
    for (unsigned m = 2; m <= 4; ++m) {
        const RootInterval b0 = beta0(m, width);
        std::cout << "m = " << m << ": beta_0 in [" << to_double(b0.lo) << ", " << to_double(b0.hi) << "]\n";
        const unsigned k = 4 * m + 1;
        const auto star = slopeline_star_witness(m, k, width);
        const Box box{6, 4 * m + 4};
        const auto pts = enumerate_box(star.y, star.beta, box);
        std::cout << "  beta*(k = " << k << ") ~ " << to_double(star.beta.interval().lo) << ", set in "
                  << box.J << "x" << box.K << ": " << to_string(pts) << "\n";
    }
}
