#pragma once

// Finite enumeration of uncorrelatedness sets over a box [1..J] x [1..K].

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "uncorrset/engine/a_sequence.hpp"
#include "uncorrset/engine/moments.hpp"
#include "uncorrset/engine/set_descriptor.hpp"
#include "uncorrset/model.hpp"
#include "uncorrset/numeric/int_poly.hpp"

namespace uncorrset {

struct EngineConfig {
    unsigned max_exponent = kDefaultMaxExponent;
    /// Worker threads for box enumeration; 1 evaluates on the calling thread.
    unsigned threads = 1;
};

/// Reads UNCORRSET_MAX_EXP; falls back to the default cap when unset or malformed.
inline unsigned max_exponent_from_env() {
    if (const char* v = std::getenv("UNCORRSET_MAX_EXP")) {
        char* end = nullptr;
        const unsigned long n = std::strtoul(v, &end, 10);
        if (end != v && *end == '\0' && n > 0 && n <= 100000) return static_cast<unsigned>(n);
    }
    return kDefaultMaxExponent;
}

inline void check_box(const Box& box, const EngineConfig& cfg) {
    if (box.J < 1 || box.K < 1) throw PreconditionViolated("box dimensions start at 1");
    if (box.J > cfg.max_exponent || box.K > cfg.max_exponent) {
        throw ExponentCapExceeded("box " + std::to_string(box.J) + "x" + std::to_string(box.K) +
                                  " exceeds the exponent cap " + std::to_string(cfg.max_exponent));
    }
}

namespace detail {

/// Evaluates `member` on every cell and returns the members sorted by (j, k).
inline PointList scan_box(const Box& box, const EngineConfig& cfg, const std::function<bool(Point)>& member) {
    std::vector<char> hit(static_cast<std::size_t>(box.J) * box.K, 0);
    auto run_rows = [&](unsigned first, unsigned stride) {
        for (unsigned j = first; j <= box.J; j += stride)
            for (unsigned k = 1; k <= box.K; ++k)
                hit[(j - 1) * static_cast<std::size_t>(box.K) + (k - 1)] = member({j, k}) ? 1 : 0;
    };
    const unsigned workers = std::max(1u, std::min(cfg.threads, box.J));
    if (workers == 1) {
        run_rows(1, 1);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_rows, w + 1, workers);
    }
    PointList out;
    for (unsigned j = 1; j <= box.J; ++j)
        for (unsigned k = 1; k <= box.K; ++k)
            if (hit[(j - 1) * static_cast<std::size_t>(box.K) + (k - 1)]) out.push_back({j, k});
    return out;
}

}  // namespace detail

/// Members of the uncorrelatedness set of a table inside the box, via exact moments.
inline PointList enumerate_box(const JointTable& t, const Box& box, const EngineConfig& cfg = {}) {
    check_box(box, cfg);
    return detail::scan_box(box, cfg, [&](Point p) { return is_uncorrelated(t, p.j, p.k); });
}

/// The joint table an offset vector stands for: rescaled so every entry is positive.
inline JointTable realize(const OffsetVector& x, const Support3& s) {
    if (x.is_zero()) return independence_table(s, s);
    return table_from_offsets(rescale(x), s);
}

/// Members inside the box for the pmf given by offsets on a common support.
///
/// Positive supports use the A_j condition; other supports build the
/// rescaled table and go through exact moments.
inline PointList enumerate_box(const OffsetVector& x, const Support3& s, const Box& box,
                               const EngineConfig& cfg = {}) {
    check_box(box, cfg);
    if (s.kind() == SupportKind::PositiveOrdered) {
        const ASequence seq(s);
        (void)seq(std::max(box.J, box.K));  // fill the cache before any worker starts
        return detail::scan_box(box, cfg, [&](Point p) { return condition_lhs(x, seq, p.j, p.k).is_zero(); });
    }
    return enumerate_box(realize(x, s), box, cfg);
}

/// Offsets whose entries are integer polynomials in beta.
using YPolyVector = std::array<IntPoly, 4>;

/// y1 + t^j y2 + t^k y3 + t^(j+k) y4 as a polynomial in t.
inline IntPoly beta_lhs_poly(const YPolyVector& y, unsigned j, unsigned k) {
    return y[0] + IntPoly::monomial(1, j) * y[1] + IntPoly::monomial(1, k) * y[2] +
           IntPoly::monomial(1, j + k) * y[3];
}

/// Enumeration when beta is an algebraic number: each cell is an exact zero test at the root.
inline PointList enumerate_box(const YPolyVector& y, const AlgebraicRoot& beta, const Box& box,
                               const EngineConfig& cfg = {}) {
    check_box(box, cfg);
    return detail::scan_box(box, cfg, [&](Point p) { return beta.is_root_of(beta_lhs_poly(y, p.j, p.k)); });
}

}  // namespace uncorrset
