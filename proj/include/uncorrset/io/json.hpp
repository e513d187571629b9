#pragma once

// JSON forms of the exact types, reports and descriptors.

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "uncorrset/determinants.hpp"
#include "uncorrset/engine/set_descriptor.hpp"
#include "uncorrset/engine/verify.hpp"
#include "uncorrset/error.hpp"
#include "uncorrset/model.hpp"
#include "uncorrset/numeric/int_poly.hpp"
#include "uncorrset/numeric/multi_poly.hpp"
#include "uncorrset/numeric/quad_ext.hpp"
#include "uncorrset/numeric/rational.hpp"

namespace uncorrset::io {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& q) { return to_string(q); }

/// Rational entries as "p/q"; irrational ones as {"a", "b", "d"}.
inline json to_json(const ExactScalar& v) {
    if (v.is_rational()) return to_string(v.as_rational());
    return json{{"a", to_string(v.rational_part())}, {"b", to_string(v.radical_part())}, {"d", v.radicand()}};
}

inline Rational rational_from_json(const json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
    throw ParseError("expected a rational string, got " + j.dump());
}

inline ExactScalar scalar_from_json(const json& j) {
    if (j.is_object()) {
        if (!j.contains("a") || !j.contains("b") || !j.contains("d")) throw ParseError("scalar needs a, b and d");
        const auto d = j.at("d").get<std::uint64_t>();
        return ExactScalar(rational_from_json(j.at("a")), rational_from_json(j.at("b")), d);
    }
    return ExactScalar(rational_from_json(j));
}

inline json to_json(const Support3& s) {
    json pts = json::array();
    for (const auto& p : s.points()) pts.push_back(to_json(p));
    return json{{"points", pts}, {"kind", to_string(s.kind())}};
}

inline Support3 support_from_json(const json& j) {
    const auto& pts = j.at("points");
    if (!pts.is_array() || pts.size() != 3) throw ParseError("support needs three points");
    std::array<Rational, 3> p{rational_from_json(pts[0]), rational_from_json(pts[1]), rational_from_json(pts[2])};
    if (j.contains("kind")) return Support3(std::move(p), parse_support_kind(j.at("kind").get<std::string>()));
    return Support3::classify(std::move(p));
}

inline json to_json(const OffsetVector& x) {
    json a = json::array();
    for (const auto& v : x.x) a.push_back(to_json(v));
    return json{{"x", a}};
}

inline OffsetVector offsets_from_json(const json& j) {
    const auto& a = j.at("x");
    if (!a.is_array() || a.size() != 4) throw ParseError("offsets need four entries");
    OffsetVector x;
    for (std::size_t i = 0; i < 4; ++i) x[i] = scalar_from_json(a[i]);
    return x;
}

inline json to_json(const YVector& y) {
    json a = json::array();
    for (const auto& v : y.y) a.push_back(to_json(v));
    return json{{"y", a}};
}

inline json to_json(const JointTable& t) {
    json rows = json::array();
    for (const auto& row : t.entries()) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_json(v));
        rows.push_back(r);
    }
    return json{{"entries", rows}};
}

inline Matrix3 entries_from_json(const json& j) {
    const auto& rows = j.at("entries");
    if (!rows.is_array() || rows.size() != 3) throw ParseError("table needs three rows");
    Matrix3 m;
    for (std::size_t r = 0; r < 3; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 3) throw ParseError("table rows need three entries");
        for (std::size_t c = 0; c < 3; ++c) m[r][c] = scalar_from_json(rows[r][c]);
    }
    return m;
}

inline json to_json(const Point& p) { return json::array({p.j, p.k}); }

inline json to_json(const PointList& pts) {
    json a = json::array();
    for (const auto& p : pts) a.push_back(to_json(p));
    return a;
}

inline PointList points_from_json(const json& j) {
    PointList pts;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw ParseError("points are [j,k] pairs");
        pts.push_back({p[0].get<unsigned>(), p[1].get<unsigned>()});
    }
    return pts;
}

inline json to_json(const SetDescriptor& d) {
    json j{{"kind", to_string(d.kind())}};
    switch (d.kind()) {
        case SetKind::Finite: j["points"] = to_json(d.points()); break;
        case SetKind::VLine: j["j"] = d.j(); break;
        case SetKind::HLine: j["k"] = d.k(); break;
        case SetKind::Cross:
            j["j"] = d.j();
            j["k"] = d.k();
            break;
        case SetKind::AntiDiagonal: j["m"] = d.m(); break;
        case SetKind::SlopeLine:
            j["m"] = d.m();
            j["points"] = to_json(d.points());
            break;
        case SetKind::LatticeUnion: j["lattices"] = d.lattices(); break;
        default: break;
    }
    j["text"] = d.to_string();
    j["certificate"] = to_string(d.certificate());
    return j;
}

inline SetDescriptor descriptor_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    SetDescriptor d = SetDescriptor::empty();
    if (kind == "Empty") {
        d = SetDescriptor::empty();
    } else if (kind == "All") {
        d = SetDescriptor::all();
    } else if (kind == "Diagonal") {
        d = SetDescriptor::diagonal();
    } else if (kind == "Finite") {
        d = SetDescriptor::finite(points_from_json(j.at("points")));
    } else if (kind == "VLine") {
        d = SetDescriptor::vline(j.at("j").get<unsigned>());
    } else if (kind == "HLine") {
        d = SetDescriptor::hline(j.at("k").get<unsigned>());
    } else if (kind == "Cross") {
        d = SetDescriptor::cross(j.at("j").get<unsigned>(), j.at("k").get<unsigned>());
    } else if (kind == "AntiDiagonal") {
        d = SetDescriptor::anti_diagonal(j.at("m").get<unsigned>());
    } else if (kind == "SlopeLine") {
        d = SetDescriptor::slope_line(j.at("m").get<unsigned>(), points_from_json(j.at("points")));
    } else if (kind == "LatticeUnion") {
        unsigned mask = 0;
        for (const auto& i : j.at("lattices")) {
            const auto v = i.get<unsigned>();
            if (v < 1 || v > 4) throw ParseError("lattice indices are 1..4");
            mask |= 1u << (v - 1);
        }
        d = SetDescriptor::lattice_union(mask);
    } else {
        throw ParseError("unknown descriptor kind '" + kind + "'");
    }
    if (j.contains("certificate") && j.at("certificate") == "BoxVerified") {
        d = d.with_certificate(CertificateKind::BoxVerified);
    }
    return d;
}

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

inline unsigned parse_unsigned(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 9) {
        throw ParseError("expected a positive integer, got '" + s + "'");
    }
    return static_cast<unsigned>(std::stoul(s));
}

inline std::vector<unsigned> parse_unsigned_list(const std::string& s) {
    std::vector<unsigned> v;
    for (const auto& part : split(s, ',')) v.push_back(parse_unsigned(part));
    return v;
}

}  // namespace detail

/// "j,k;j,k;..." into points.
inline PointList parse_points(const std::string& s) {
    PointList pts;
    for (const auto& pair : detail::split(s, ';')) {
        const auto v = detail::parse_unsigned_list(pair);
        if (v.size() != 2) throw ParseError("points are written j,k;j,k;...");
        pts.push_back({v[0], v[1]});
    }
    return pts;
}

/// Text form: empty, all, diagonal, vline:J, hline:K, cross:J,K, antidiagonal:M,
/// finite:j,k;j,k, slopeline:M[:j,k;...], lattice:i,i.
inline SetDescriptor parse_descriptor(const std::string& text) {
    const auto colon = text.find(':');
    const std::string kind = text.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto nums = [&](std::size_t n) {
        const auto v = detail::parse_unsigned_list(args);
        if (v.size() != n) throw ParseError("descriptor '" + text + "' needs " + std::to_string(n) + " numbers");
        return v;
    };
    if (kind == "empty") return SetDescriptor::empty();
    if (kind == "all") return SetDescriptor::all();
    if (kind == "diagonal") return SetDescriptor::diagonal();
    if (kind == "vline") return SetDescriptor::vline(nums(1)[0]);
    if (kind == "hline") return SetDescriptor::hline(nums(1)[0]);
    if (kind == "cross") {
        const auto v = nums(2);
        return SetDescriptor::cross(v[0], v[1]);
    }
    if (kind == "antidiagonal") return SetDescriptor::anti_diagonal(nums(1)[0]);
    if (kind == "finite") return SetDescriptor::finite(parse_points(args));
    if (kind == "slopeline") {
        const auto c2 = args.find(':');
        const unsigned m = detail::parse_unsigned(args.substr(0, c2));
        if (c2 == std::string::npos) return SetDescriptor::slope_triple(m);
        return SetDescriptor::slope_line(m, parse_points(args.substr(c2 + 1)));
    }
    if (kind == "lattice") {
        unsigned mask = 0;
        for (unsigned i : detail::parse_unsigned_list(args)) {
            if (i < 1 || i > 4) throw ParseError("lattice indices are 1..4");
            mask |= 1u << (i - 1);
        }
        return SetDescriptor::lattice_union(mask);
    }
    throw ParseError("unknown descriptor '" + text + "'");
}

/// "a,b,c" into a support of the most specific kind.
inline Support3 parse_support(const std::string& s) {
    const auto parts = detail::split(s, ',');
    if (parts.size() != 3) throw ParseError("support is written a,b,c");
    return Support3::classify({parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])});
}

inline json to_json(const UncorrReport& r) {
    json j;
    j["witness"] = to_json(r.witness);
    j["support"] = to_json(r.support);
    j["claimed"] = to_json(r.claimed);
    j["box"] = json::array({r.box.J, r.box.K});
    j["found"] = to_json(r.found);
    j["missing"] = to_json(r.missing);
    j["extra"] = to_json(r.extra);
    j["verdict"] = to_string(r.verdict);
    j["certificate"] = to_string(r.certificate);
    j["note"] = r.note;
    return j;
}

inline json to_json(const MultiPoly& p) {
    json a = json::array();
    for (const auto& [e, c] : p.terms()) a.push_back(json{{"exps", e}, {"coef", c.str()}});
    return a;
}

inline MultiPoly multipoly_from_json(const json& j, std::size_t arity) {
    MultiPoly p(arity);
    for (const auto& t : j) {
        auto e = t.at("exps").get<Exponents>();
        if (e.size() != arity) throw ArityMismatch("term arity differs from the polynomial's");
        p.add_term(e, BigInt(t.at("coef").get<std::string>()));
    }
    return p;
}

inline json to_json(const RootInterval& iv) {
    return json{{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}, {"width", to_json(iv.width())}};
}

inline json to_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& c : p.coefficients()) a.push_back(c.str());
    return a;
}

}  // namespace uncorrset::io
