#pragma once

// Parity-lattice classification of tables on {-a, 0, a}.

#include <array>
#include <string>

#include "uncorrset/engine/moments.hpp"
#include "uncorrset/engine/set_descriptor.hpp"
#include "uncorrset/error.hpp"
#include "uncorrset/model.hpp"

namespace uncorrset {

/// Representatives (2,2), (2,1), (1,2), (1,1) of A1..A4.
inline constexpr std::array<Point, 4> kLatticeRepresentatives{{{2, 2}, {2, 1}, {1, 2}, {1, 1}}};

/// Eight further points of lattice i: the representative shifted by (2a, 2b), (a, b) in {0,1,2}^2 \ {(0,0)}.
inline std::array<Point, 8> lattice_probe_points(unsigned lattice) {
    const Point base = kLatticeRepresentatives.at(lattice - 1);
    std::array<Point, 8> out{};
    std::size_t n = 0;
    for (unsigned a = 0; a < 3; ++a)
        for (unsigned b = 0; b < 3; ++b)
            if (a || b) out[n++] = {base.j + 2 * a, base.k + 2 * b};
    return out;
}

inline SetDescriptor classify_symmetric(const JointTable& t) {
    if (t.support_x().kind() != SupportKind::SymmetricZero || t.support_y().kind() != SupportKind::SymmetricZero) {
        throw InvalidSupport("classification needs {-a, 0, a} on both axes");
    }
    unsigned mask = 0;
    for (unsigned i = 1; i <= 4; ++i) {
        const Point rep = kLatticeRepresentatives[i - 1];
        const bool in = is_uncorrelated(t, rep.j, rep.k);
        for (const Point& p : lattice_probe_points(i)) {
            if (is_uncorrelated(t, p.j, p.k) != in) {
                throw LatticeInconsistent("lattice A" + std::to_string(i) + ": " + to_string(p) +
                                          " disagrees with " + to_string(rep));
            }
        }
        if (in) mask |= 1u << (i - 1);
    }
    return SetDescriptor::lattice_union(mask);
}

}  // namespace uncorrset
