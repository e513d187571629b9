#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "uncorrset/error.hpp"
#include "uncorrset/model.hpp"
#include "uncorrset/numeric/rational.hpp"

namespace uncorrset {

/// Exponents above this are refused unless a caller raises the cap.
inline constexpr unsigned kDefaultMaxExponent = 64;

/// A_j = (c^j - a^j) / (c^j - b^j) for a positive support {a < b < c}.
///
/// Values are cached on first use. Copies share the cache, which only grows
/// and is guarded by a mutex, so one sequence may be read from several threads.
class ASequence {
public:
    explicit ASequence(Support3 support) : support_(std::move(support)), cache_(std::make_shared<Cache>()) {
        if (support_.kind() != SupportKind::PositiveOrdered) {
            throw InvalidSupport("the A_j sequence needs a positive ordered support");
        }
        cache_->values.emplace_back(0);  // index 0 unused
    }

    explicit ASequence(const BetaSupport& bs) : ASequence(bs.support()) {}

    const Support3& support() const noexcept { return support_; }

    /// Exact A_j for j >= 1; checks A_j > A_{j+1} > 1 as the cache grows.
    Rational operator()(unsigned j) const {
        if (j == 0) throw PreconditionViolated("A_j is defined for j >= 1");
        std::lock_guard lock(cache_->mutex);
        auto& v = cache_->values;
        while (v.size() <= j) {
            const auto next = static_cast<unsigned>(v.size());
            Rational a = value(next);
            if (a <= 1 || (next > 1 && !(a < v.back()))) {
                throw PreconditionViolated("A_j failed to decrease at j = " + std::to_string(next));
            }
            v.push_back(std::move(a));
        }
        return v[j];
    }

    /// Smallest j in [1, limit] with A_j == t, or 0 when there is none. Uses monotonicity to stop early.
    unsigned index_of(const Rational& t, unsigned limit = 4096) const {
        if (t <= 1) return 0;
        for (unsigned j = 1; j <= limit; ++j) {
            const Rational a = (*this)(j);
            if (a == t) return j;
            if (a < t) return 0;
        }
        throw PreconditionViolated("A_j did not drop below " + to_string(t) + " within " +
                                   std::to_string(limit) + " terms");
    }

private:
    Rational value(unsigned j) const {
        const Rational aj = pow(support_[0], j);
        const Rational bj = pow(support_[1], j);
        const Rational cj = pow(support_[2], j);
        return (cj - aj) / (cj - bj);
    }

    struct Cache {
        std::mutex mutex;
        std::vector<Rational> values;
    };

    Support3 support_;
    std::shared_ptr<Cache> cache_;
};

inline Rational compute_A(const ASequence& seq, unsigned j) { return seq(j); }

/// The geometric parametrisation of a positive support, if b^2 == a c.
inline std::optional<BetaSupport> as_beta_support(const Support3& s) {
    if (s.kind() != SupportKind::PositiveOrdered) return std::nullopt;
    if (s[1] * s[1] != s[0] * s[2]) return std::nullopt;
    return BetaSupport(s[0], s[1] / s[0]);
}

}  // namespace uncorrset
