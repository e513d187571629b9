#pragma once

// The `uncorrset` command line: run(args) with explicit streams.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "uncorrset/constructions.hpp"
#include "uncorrset/determinants.hpp"
#include "uncorrset/engine/classify.hpp"
#include "uncorrset/engine/enumerate.hpp"
#include "uncorrset/engine/verify.hpp"
#include "uncorrset/error.hpp"
#include "uncorrset/io/json.hpp"
#include "uncorrset/model.hpp"
#include "uncorrset/selftest.hpp"

namespace uncorrset::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

enum class OutputFormat { Json, Csv };

struct RunConfig {
    std::string support = "1,2,3";
    std::string alpha = "1";
    std::string beta = "2";
    std::string box = "16x16";
    std::string width = "1/1000000000000";
    OutputFormat format = OutputFormat::Json;
    std::uint64_t seed = selftest::Options{}.seed;
    unsigned threads = 1;
};

namespace detail {

using io::json;

inline Box parse_box(const std::string& s, const EngineConfig& cfg) {
    const auto x = s.find('x');
    if (x == std::string::npos) throw ParseError("box is written JxK");
    const Box b{io::detail::parse_unsigned(s.substr(0, x)), io::detail::parse_unsigned(s.substr(x + 1))};
    check_box(b, cfg);
    return b;
}

inline Rational parse_width(const std::string& s) {
    const Rational w = parse_rational(s);
    if (w.sign() <= 0) throw ParseError("width must be positive");
    return w;
}

inline json read_json(const std::string& path, std::istream& in) {
    try {
        if (path == "-") return json::parse(in);
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open '" + path + "'");
        return json::parse(f);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

/// A witness document: {"support", "witness": {"x"}} as written by `construct`, or a bare {"support", "x"}.
struct WitnessDoc {
    OffsetVector x;
    Support3 support;
    std::optional<SetDescriptor> descriptor;
};

inline WitnessDoc witness_from_json(const json& j) {
    try {
        const json& w = j.contains("witness") ? j.at("witness") : j;
        WitnessDoc d{io::offsets_from_json(w), io::support_from_json(j.at("support")), std::nullopt};
        if (j.contains("descriptor")) d.descriptor = io::descriptor_from_json(j.at("descriptor"));
        return d;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad witness document: ") + e.what());
    }
}

/// A table document: {"table": {"entries"}, "support"} or with "support_x" and "support_y".
inline JointTable table_from_json(const json& j) {
    try {
        const json& t = j.contains("table") ? j.at("table") : j;
        const Support3 sx = io::support_from_json(j.contains("support_x") ? j.at("support_x") : j.at("support"));
        const Support3 sy = io::support_from_json(j.contains("support_y") ? j.at("support_y") : j.at("support"));
        return JointTable(io::entries_from_json(t), sx, sy);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad table document: ") + e.what());
    }
}

inline bool is_table_doc(const json& j) { return j.contains("table") || j.contains("entries"); }

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline void emit_points(std::ostream& out, const PointList& pts, const Box& box, OutputFormat f) {
    if (f == OutputFormat::Csv) {
        out << "j,k\n";
        for (const auto& p : pts) out << p.j << ',' << p.k << '\n';
        return;
    }
    emit(out, json{{"box", json::array({box.J, box.K})}, {"count", pts.size()}, {"points", io::to_json(pts)}});
}

inline BetaSupport beta_support(const RunConfig& rc) {
    return BetaSupport(parse_rational(rc.alpha), parse_rational(rc.beta));
}

inline unsigned param(const std::vector<unsigned>& p, std::size_t i, const std::string& family) {
    if (i >= p.size()) throw ParseError("family '" + family + "' needs more parameters");
    return p[i];
}

inline json construct(const std::string& family, const std::vector<unsigned>& p, const RunConfig& rc) {
    auto expect = [&](std::size_t n) {
        if (p.size() != n) {
            throw ParseError("family '" + family + "' takes " + std::to_string(n) + " parameter(s)");
        }
    };
    std::optional<Construction> c;
    std::optional<YVector> y;
    if (family == "antidiagonal" || family == "slopeline") {
        expect(1);
        const BetaSupport bs = beta_support(rc);
        if (family == "antidiagonal") {
            c = make_antidiagonal(bs, p[0]);
            y = antidiagonal_witness(p[0], bs);
        } else {
            c = make_slopeline(bs, p[0], parse_width(rc.width));
            y = to_y(c->x);
        }
    } else if (family == "lattice") {
        unsigned mask = 0;
        for (unsigned i : p) {
            if (i < 1 || i > 4) throw ParseError("lattice indices are 1..4");
            mask |= 1u << (i - 1);
        }
        c = make_lattice(parse_rational(rc.alpha), mask);
    } else {
        const Support3 s = io::parse_support(rc.support);
        if (family == "empty") {
            expect(0);
            c = make_empty(s);
        } else if (family == "diagonal") {
            expect(0);
            c = make_diagonal(s);
        } else if (family == "singleton") {
            expect(2);
            c = make_singleton(s, p[0], p[1]);
        } else if (family == "two-point") {
            expect(4);
            c = make_two_point(s, {p[0], p[1]}, {p[2], p[3]});
        } else if (family == "vline") {
            expect(1);
            c = make_vline(s, p[0]);
        } else if (family == "hline") {
            expect(1);
            c = make_hline(s, p[0]);
        } else if (family == "cross") {
            expect(2);
            c = make_cross(s, p[0], p[1]);
        } else {
            throw ParseError("unknown family '" + family + "'");
        }
    }
    json j;
    j["family"] = family;
    j["support"] = io::to_json(c->support);
    j["witness"] = io::to_json(c->x);
    if (y) j["y"] = io::to_json(*y)["y"];
    j["descriptor"] = io::to_json(c->descriptor);
    j["certificate"] = to_string(c->descriptor.certificate());
    return j;
}

inline json det_json(const DetResult& r, const std::string& kind, bool summary) {
    json j{{"kind", kind},
           {"m", r.m},
           {"n", r.n},
           {"equal", r.equal},
           {"term_counts", json{{"direct", r.direct.term_count()}, {"closed", r.closed.term_count()}}}};
    if (summary) return json{{"equal", r.equal}, {"term_counts", j["term_counts"]}};
    j["direct"] = io::to_json(r.direct);
    j["closed"] = io::to_json(r.closed);
    return j;
}

}  // namespace detail

/// Runs one command; args exclude the program name.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    using detail::json;
    CLI::App app{"Exact uncorrelatedness sets of three-point uniform distributions"};
    app.require_subcommand(1);
    RunConfig rc;
    rc.threads = 1;
    app.add_option("--threads", rc.threads, "Worker threads for box enumeration")->check(CLI::Range(1u, 256u));

    std::string family;
    std::vector<unsigned> params;
    auto* construct = app.add_subcommand("construct", "Emit a witness for a family");
    construct->add_option("family", family, "empty|singleton|two-point|vline|hline|cross|diagonal|antidiagonal|slopeline|lattice")
        ->required();
    construct->add_option("params", params, "Family parameters (j k, m, lattice indices, ...)");
    construct->add_option("--support", rc.support, "Support a,b,c");
    construct->add_option("--alpha", rc.alpha, "alpha of {alpha, alpha beta, alpha beta^2} or {-alpha, 0, alpha}");
    construct->add_option("--beta", rc.beta, "beta of the geometric support");
    construct->add_option("--width", rc.width, "Width of the beta_0 interval");

    std::string witness_path;
    std::string table_path;
    std::string descriptor_text;
    std::string format = "json";
    auto* enumerate = app.add_subcommand("enumerate", "List the members of U inside a box");
    enumerate->add_option("--witness", witness_path, "Witness JSON file, - for stdin");
    enumerate->add_option("--table", table_path, "Table JSON file, - for stdin");
    enumerate->add_option("--box", rc.box, "Box JxK");
    enumerate->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "Compare a witness with a claimed set");
    verify->add_option("--witness", witness_path, "Witness JSON file, - for stdin")->required();
    verify->add_option("--descriptor", descriptor_text, "Claimed set, e.g. cross:2,3 (default: the file's)");
    verify->add_option("--box", rc.box, "Box JxK");

    auto* classify = app.add_subcommand("classify", "Lattice classification on {-a, 0, a}");
    classify->add_option("--witness", witness_path, "Witness JSON file, - for stdin");
    classify->add_option("--table", table_path, "Table JSON file, - for stdin");

    unsigned m = 2;
    unsigned k = 0;
    auto* b0 = app.add_subcommand("beta0", "Isolate the root of beta^(m+1) - beta^2 - beta - 1");
    b0->add_option("--m", m, "Slope m >= 2")->required();
    b0->add_option("--width", rc.width, "Interval width");

    auto* bstar = app.add_subcommand("betastar", "Isolate beta* for the extra point (4, k)");
    bstar->add_option("--m", m, "Slope m >= 2")->required();
    bstar->add_option("--k", k, "Column k > 4m")->required();
    bstar->add_option("--width", rc.width, "Interval width");
    std::string star_box;
    bstar->add_option("--box", star_box, "Also enumerate the witness at beta* in this box");

    std::string det_kind;
    unsigned dm = 0;
    unsigned dn = 0;
    bool summary = false;
    auto* det = app.add_subcommand("det", "Check a determinant closed form");
    det->add_option("kind", det_kind, "F, G or det2")->required()->check(CLI::IsMember({"F", "G", "det2"}));
    det->add_option("m", dm, "m (j for det2)")->required();
    det->add_option("n", dn, "n (m for det2)")->required();
    det->add_flag("--summary", summary, "Emit only {equal, term_counts}");

    std::string points_text;
    bool use_support = false;
    auto* cert = app.add_subcommand("indep-cert", "Four points on k = (b/a) j force independence");
    cert->add_option("--points", points_text, "j,k;j,k;j,k;j,k")->required();
    cert->add_option("--alpha", rc.alpha, "alpha of the geometric support");
    cert->add_option("--beta", rc.beta, "beta of the geometric support");
    auto* sup_opt = cert->add_option("--support", rc.support, "Any positive support a,b,c (x-form)");

    auto* self = app.add_subcommand("selftest", "Run the invariant suite");
    self->add_option("--seed", rc.seed, "Seed for the random suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }
    use_support = sup_opt->count() > 0;
    rc.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Json;

    EngineConfig cfg;
    cfg.max_exponent = max_exponent_from_env();
    cfg.threads = rc.threads;

    try {
        if (*construct) {
            detail::emit(out, detail::construct(family, params, rc));
            return kOk;
        }
        if (*enumerate) {
            if (witness_path.empty() == table_path.empty()) throw ParseError("give exactly one of --witness, --table");
            const Box box = detail::parse_box(rc.box, cfg);
            PointList pts;
            if (!table_path.empty()) {
                pts = enumerate_box(detail::table_from_json(detail::read_json(table_path, in)), box, cfg);
            } else {
                const json j = detail::read_json(witness_path, in);
                if (detail::is_table_doc(j)) {
                    pts = enumerate_box(detail::table_from_json(j), box, cfg);
                } else {
                    const auto w = detail::witness_from_json(j);
                    pts = enumerate_box(w.x, w.support, box, cfg);
                }
            }
            detail::emit_points(out, pts, box, rc.format);
            return kOk;
        }
        if (*verify) {
            const auto w = detail::witness_from_json(detail::read_json(witness_path, in));
            SetDescriptor d = SetDescriptor::empty();
            if (!descriptor_text.empty()) {
                d = io::parse_descriptor(descriptor_text);
            } else if (w.descriptor) {
                d = *w.descriptor;
            } else {
                throw ParseError("no --descriptor and none in the witness file");
            }
            const auto rep = verify_claim(w.x, w.support, d, detail::parse_box(rc.box, cfg), cfg);
            detail::emit(out, io::to_json(rep));
            return rep.verdict == Verdict::Match ? kOk : kMismatch;
        }
        if (*classify) {
            if (witness_path.empty() == table_path.empty()) throw ParseError("give exactly one of --witness, --table");
            const json j = detail::read_json(table_path.empty() ? witness_path : table_path, in);
            JointTable t = [&] {
                if (detail::is_table_doc(j)) return detail::table_from_json(j);
                const auto w = detail::witness_from_json(j);
                return realize(w.x, w.support);
            }();
            const SetDescriptor d = classify_symmetric(t);
            detail::emit(out, json{{"descriptor", io::to_json(d)}, {"table", io::to_json(t)}});
            return kOk;
        }
        if (*b0) {
            const RootInterval iv = beta0(m, detail::parse_width(rc.width));
            detail::emit(out, json{{"m", m}, {"polynomial", io::to_json(beta0_poly(m))}, {"interval", io::to_json(iv)}});
            return kOk;
        }
        if (*bstar) {
            const Rational w = detail::parse_width(rc.width);
            const auto star = slopeline_star_witness(m, k, w);
            json j{{"m", m},
                   {"k", k},
                   {"polynomial", io::to_json(slope_p_poly(m, k))},
                   {"interval", io::to_json(star.beta.interval())},
                   {"beta0", io::to_json(beta0(m, w))}};
            if (!star_box.empty()) {
                const Box box = detail::parse_box(star_box, cfg);
                j["box"] = json::array({box.J, box.K});
                j["points"] = io::to_json(enumerate_box(star.y, star.beta, box, cfg));
            }
            detail::emit(out, j);
            return kOk;
        }
        if (*det) {
            DetResult r;
            if (det_kind == "F") {
                r = f_result(dm, dn);
            } else if (det_kind == "G") {
                r = g_result(dm, dn);
            } else {
                r = det2_sigma(dm, dn).det;
            }
            detail::emit(out, detail::det_json(r, det_kind, summary));
            return r.equal ? kOk : kMismatch;
        }
        if (*cert) {
            const PointList pts = io::parse_points(points_text);
            const auto c = use_support
                               ? independence_certificate(std::span<const Point>(pts), io::parse_support(rc.support))
                               : independence_certificate(std::span<const Point>(pts), detail::beta_support(rc));
            json j{{"points", io::to_json(pts)},
                   {"slope", json::array({c.b, c.a})},
                   {"form", c.y_form ? "y" : "x"},
                   {"det", io::to_json(c.det)},
                   {"forced_independent", c.forced_independent}};
            if (c.g_value) {
                j["g_value"] = io::to_json(*c.g_value);
                j["g_agrees"] = c.g_agrees;
            }
            detail::emit(out, j);
            return c.forced_independent ? kOk : kMismatch;
        }
        if (*self) {
            selftest::Options opt;
            opt.seed = rc.seed;
            opt.engine = cfg;
            json a = json::array();
            bool all = true;
            for (const auto& r : selftest::run_all(opt)) {
                all = all && r.passed;
                a.push_back(json{{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
            }
            detail::emit(out, json{{"seed", rc.seed}, {"passed", all}, {"criteria", a}});
            return all ? kOk : kMismatch;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const io::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace uncorrset::cli
