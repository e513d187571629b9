#pragma once

// Symbolic descriptions of subsets of N^2 (N = {1, 2, ...}).

#include <algorithm>
#include <compare>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "uncorrset/error.hpp"

namespace uncorrset {

struct Point {
    unsigned j = 1;
    unsigned k = 1;

    friend auto operator<=>(const Point&, const Point&) = default;
};

using PointList = std::vector<Point>;

inline std::string to_string(const Point& p) {
    return "(" + std::to_string(p.j) + "," + std::to_string(p.k) + ")";
}

inline std::string to_string(const PointList& pts) {
    std::string s = "{";
    for (std::size_t i = 0; i < pts.size(); ++i) s += (i ? "," : "") + to_string(pts[i]);
    return s + "}";
}

/// The rectangle [1..J] x [1..K].
struct Box {
    unsigned J = 1;
    unsigned K = 1;

    bool contains(const Point& p) const { return p.j >= 1 && p.k >= 1 && p.j <= J && p.k <= K; }
    friend bool operator==(const Box&, const Box&) = default;
};

enum class SetKind { Empty, Finite, VLine, HLine, Cross, Diagonal, AntiDiagonal, SlopeLine, LatticeUnion, All };

enum class CertificateKind { GlobalAnalytic, BoxVerified };

inline std::string to_string(SetKind k) {
    switch (k) {
        case SetKind::Empty: return "Empty";
        case SetKind::Finite: return "Finite";
        case SetKind::VLine: return "VLine";
        case SetKind::HLine: return "HLine";
        case SetKind::Cross: return "Cross";
        case SetKind::Diagonal: return "Diagonal";
        case SetKind::AntiDiagonal: return "AntiDiagonal";
        case SetKind::SlopeLine: return "SlopeLine";
        case SetKind::LatticeUnion: return "LatticeUnion";
        case SetKind::All: return "All";
    }
    return "?";
}

inline std::string to_string(CertificateKind c) {
    return c == CertificateKind::GlobalAnalytic ? "GlobalAnalytic" : "BoxVerified";
}

/// Parity lattices: A1 = even x even, A2 = even x odd, A3 = odd x even, A4 = odd x odd.
/// A lattice set is a bitmask with bit (i - 1) standing for A_i.
inline unsigned lattice_of(const Point& p) {
    const bool je = p.j % 2 == 0;
    const bool ke = p.k % 2 == 0;
    if (je && ke) return 1;
    if (je) return 2;
    if (ke) return 3;
    return 4;
}

class SetDescriptor {
public:
    static SetDescriptor empty() { return SetDescriptor(SetKind::Empty); }
    static SetDescriptor all() { return SetDescriptor(SetKind::All); }
    static SetDescriptor diagonal() { return SetDescriptor(SetKind::Diagonal); }

    static SetDescriptor finite(PointList pts) {
        SetDescriptor d(SetKind::Finite);
        d.points_ = normalized(std::move(pts));
        if (d.points_.size() > 1) d.cert_ = CertificateKind::BoxVerified;
        return d;
    }
    static SetDescriptor vline(unsigned j) {
        SetDescriptor d(SetKind::VLine);
        d.j_ = positive(j);
        return d;
    }
    static SetDescriptor hline(unsigned k) {
        SetDescriptor d(SetKind::HLine);
        d.k_ = positive(k);
        return d;
    }
    /// v_j union h_k.
    static SetDescriptor cross(unsigned j, unsigned k) {
        SetDescriptor d(SetKind::Cross);
        d.j_ = positive(j);
        d.k_ = positive(k);
        return d;
    }
    /// {(j, k) : j + k = m}.
    static SetDescriptor anti_diagonal(unsigned m) {
        if (m < 2) throw PreconditionViolated("anti-diagonal needs m >= 2");
        SetDescriptor d(SetKind::AntiDiagonal);
        d.m_ = m;
        return d;
    }
    /// A finite set of points on or near the line k = m j, tagged with its slope.
    static SetDescriptor slope_line(unsigned m, PointList pts) {
        SetDescriptor d(SetKind::SlopeLine);
        d.m_ = positive(m);
        d.points_ = normalized(std::move(pts));
        if (d.points_ != PointList{{1, m}, {2, 2 * m}, {3, 3 * m}}) d.cert_ = CertificateKind::BoxVerified;
        return d;
    }
    /// The points {(1,m), (2,2m), (3,3m)}.
    static SetDescriptor slope_triple(unsigned m) { return slope_line(m, {{1, m}, {2, 2 * m}, {3, 3 * m}}); }

    static SetDescriptor lattice_union(unsigned mask) {
        if (mask == 0) return empty();
        if (mask == 0xF) return all();
        if (mask > 0xF) throw PreconditionViolated("lattice mask out of range");
        SetDescriptor d(SetKind::LatticeUnion);
        d.mask_ = mask;
        return d;
    }

    SetKind kind() const noexcept { return kind_; }
    unsigned j() const noexcept { return j_; }
    unsigned k() const noexcept { return k_; }
    unsigned m() const noexcept { return m_; }
    unsigned lattice_mask() const noexcept { return mask_; }
    const PointList& points() const noexcept { return points_; }

    /// GlobalAnalytic unless the set has no exact global argument: finite sets of two or more
    /// points and slope-line sets other than {(1,m), (2,2m), (3,3m)} default to BoxVerified.
    CertificateKind certificate() const noexcept { return cert_; }
    SetDescriptor with_certificate(CertificateKind c) const {
        SetDescriptor d = *this;
        d.cert_ = c;
        return d;
    }

    bool contains(const Point& p) const {
        if (p.j < 1 || p.k < 1) return false;
        switch (kind_) {
            case SetKind::Empty: return false;
            case SetKind::All: return true;
            case SetKind::Finite:
            case SetKind::SlopeLine: return std::binary_search(points_.begin(), points_.end(), p);
            case SetKind::VLine: return p.j == j_;
            case SetKind::HLine: return p.k == k_;
            case SetKind::Cross: return p.j == j_ || p.k == k_;
            case SetKind::Diagonal: return p.j == p.k;
            case SetKind::AntiDiagonal: return p.j + p.k == m_;
            case SetKind::LatticeUnion: return (mask_ >> (lattice_of(p) - 1)) & 1u;
        }
        return false;
    }

    /// Members inside the box, sorted by (j, k).
    PointList within(const Box& box) const {
        PointList out;
        for (unsigned j = 1; j <= box.J; ++j)
            for (unsigned k = 1; k <= box.K; ++k)
                if (contains({j, k})) out.push_back({j, k});
        return out;
    }

    /// Same set and same parameters; the certificate tier is ignored.
    bool same_set(const SetDescriptor& o) const {
        return kind_ == o.kind_ && j_ == o.j_ && k_ == o.k_ && m_ == o.m_ && mask_ == o.mask_ &&
               points_ == o.points_;
    }

    /// The lattice indices (1..4) in a lattice set.
    std::vector<unsigned> lattices() const {
        std::vector<unsigned> v;
        for (unsigned i = 1; i <= 4; ++i)
            if ((mask_ >> (i - 1)) & 1u) v.push_back(i);
        return v;
    }

    std::string to_string() const {
        switch (kind_) {
            case SetKind::Empty: return "Empty";
            case SetKind::All: return "All";
            case SetKind::Diagonal: return "Diagonal";
            case SetKind::Finite: return "Finite" + uncorrset::to_string(points_);
            case SetKind::VLine: return "VLine(" + std::to_string(j_) + ")";
            case SetKind::HLine: return "HLine(" + std::to_string(k_) + ")";
            case SetKind::Cross: return "Cross(" + std::to_string(j_) + "," + std::to_string(k_) + ")";
            case SetKind::AntiDiagonal: return "AntiDiagonal(" + std::to_string(m_) + ")";
            case SetKind::SlopeLine:
                return "SlopeLine(" + std::to_string(m_) + "," + uncorrset::to_string(points_) + ")";
            case SetKind::LatticeUnion: {
                std::string s = "LatticeUnion{";
                bool first = true;
                for (unsigned i : lattices()) {
                    s += (first ? "A" : ",A") + std::to_string(i);
                    first = false;
                }
                return s + "}";
            }
        }
        return "?";
    }

private:
    explicit SetDescriptor(SetKind k) : kind_(k) {}

    static unsigned positive(unsigned v) {
        if (v < 1) throw PreconditionViolated("coordinates start at 1");
        return v;
    }

    static PointList normalized(PointList pts) {
        for (const auto& p : pts) {
            if (p.j < 1 || p.k < 1) throw PreconditionViolated("coordinates start at 1");
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        return pts;
    }

    SetKind kind_;
    CertificateKind cert_ = CertificateKind::GlobalAnalytic;
    unsigned j_ = 0;
    unsigned k_ = 0;
    unsigned m_ = 0;
    unsigned mask_ = 0;
    PointList points_;
};

/// Unions of vertical lines, horizontal lines, the diagonal and finitely many points.
///
/// Every descriptor the analytic certificates produce is of this shape, and the
/// shape is closed under intersection, which is what combining the rational and
/// irrational parts of a witness needs.
struct LineUnion {
    std::set<unsigned> vlines;
    std::set<unsigned> hlines;
    bool diagonal = false;
    bool everything = false;
    std::set<Point> points;

    static std::optional<LineUnion> from(const SetDescriptor& d) {
        LineUnion u;
        switch (d.kind()) {
            case SetKind::Empty: return u;
            case SetKind::All: u.everything = true; return u;
            case SetKind::Finite: u.points.insert(d.points().begin(), d.points().end()); return u;
            case SetKind::VLine: u.vlines.insert(d.j()); return u;
            case SetKind::HLine: u.hlines.insert(d.k()); return u;
            case SetKind::Cross: u.vlines.insert(d.j()); u.hlines.insert(d.k()); return u;
            case SetKind::Diagonal: u.diagonal = true; return u;
            default: return std::nullopt;
        }
    }

    bool contains(const Point& p) const {
        return everything || vlines.count(p.j) || hlines.count(p.k) || (diagonal && p.j == p.k) ||
               points.count(p);
    }

    LineUnion intersect(const LineUnion& o) const {
        if (everything) return o;
        if (o.everything) return *this;
        LineUnion r;
        for (unsigned j : vlines) {
            if (o.vlines.count(j)) r.vlines.insert(j);
            for (unsigned k : o.hlines) r.points.insert({j, k});
            if (o.diagonal) r.points.insert({j, j});
        }
        for (unsigned k : hlines) {
            if (o.hlines.count(k)) r.hlines.insert(k);
            for (unsigned j : o.vlines) r.points.insert({j, k});
            if (o.diagonal) r.points.insert({k, k});
        }
        if (diagonal) {
            if (o.diagonal) r.diagonal = true;
            for (unsigned j : o.vlines) r.points.insert({j, j});
            for (unsigned k : o.hlines) r.points.insert({k, k});
        }
        for (const auto& p : points)
            if (o.contains(p)) r.points.insert(p);
        for (const auto& p : o.points)
            if (contains(p)) r.points.insert(p);
        // Drop points already covered by a surviving line.
        std::erase_if(r.points, [&](const Point& p) {
            return r.vlines.count(p.j) || r.hlines.count(p.k) || (r.diagonal && p.j == p.k);
        });
        return r;
    }

    /// Back to a descriptor, when the union has one of the named shapes.
    std::optional<SetDescriptor> to_descriptor() const {
        if (everything) return SetDescriptor::all();
        const std::size_t lines = vlines.size() + hlines.size() + (diagonal ? 1 : 0);
        if (lines == 0) {
            if (points.empty()) return SetDescriptor::empty();
            return SetDescriptor::finite(PointList(points.begin(), points.end()));
        }
        if (!points.empty()) return std::nullopt;
        if (lines == 1) {
            if (diagonal) return SetDescriptor::diagonal();
            if (!vlines.empty()) return SetDescriptor::vline(*vlines.begin());
            return SetDescriptor::hline(*hlines.begin());
        }
        if (lines == 2 && vlines.size() == 1 && hlines.size() == 1) {
            return SetDescriptor::cross(*vlines.begin(), *hlines.begin());
        }
        return std::nullopt;
    }
};

}  // namespace uncorrset
