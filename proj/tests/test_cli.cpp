#include <catch_amalgamated.hpp>

#include <sstream>

#include <nlohmann/json.hpp>

#include "uncorrset/cli.hpp"

using namespace uncorrset;
using nlohmann::json;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("construct then verify round trips through stdin", "[cli]") {
    const std::vector<std::vector<std::string>> families{
        {"construct", "empty"},
        {"construct", "diagonal"},
        {"construct", "singleton", "2", "3"},
        {"construct", "two-point", "1", "2", "3", "1"},
        {"construct", "vline", "2"},
        {"construct", "hline", "4"},
        {"construct", "cross", "2", "3", "--support", "1/2,1,5"},
        {"construct", "antidiagonal", "5", "--beta", "3"},
        {"construct", "slopeline", "2", "--beta", "2"},
        {"construct", "lattice", "2", "4", "--alpha", "3/2"},
    };
    for (const auto& args : families) {
        const Outcome c = call(args);
        INFO(args[1] << ": " << c.err);
        REQUIRE(c.code == cli::kOk);
        const json doc = json::parse(c.out);
        CHECK(doc.contains("witness"));
        CHECK(doc.contains("descriptor"));
        const Outcome v = call({"verify", "--witness", "-", "--box", "12x12"}, c.out);
        CHECK(v.code == cli::kOk);
        CHECK(json::parse(v.out).at("verdict") == "Match");
    }
}

TEST_CASE("verify reports mismatches with exit code 1", "[cli]") {
    const Outcome c = call({"construct", "vline", "2"});
    const Outcome v = call({"verify", "--witness", "-", "--descriptor", "hline:2", "--box", "5x5"}, c.out);
    CHECK(v.code == cli::kMismatch);
    const json r = json::parse(v.out);
    CHECK(r.at("verdict") == "Mismatch");
    CHECK(r.at("missing").size() == 4);
    CHECK(r.at("extra").size() == 4);
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
    CHECK(call({"nonsense"}).code == cli::kUsage);
    CHECK(call({"verify", "--witness", "-"}, "{bad").code == cli::kUsage);
    CHECK(call({"construct", "cross", "2"}).code == cli::kUsage);
    CHECK(call({"construct", "cross", "2", "3", "--support", "3,2,1"}).code == cli::kUsage);
    CHECK(call({"det", "F", "3", "3"}).code == cli::kUsage);
    CHECK(call({"indep-cert", "--points", "1,1;2,2;3,3;4,4", "--beta", "2"}).code == cli::kUsage);
    CHECK(call({"enumerate", "--box", "4x4"}).code == cli::kUsage);
    CHECK(call({"betastar", "--m", "2", "--k", "8"}).code == cli::kUsage);
    const Outcome neg = call({"verify", "--witness", "-", "--descriptor", "empty"}, R"({"support":{"points":["1","2","3"]},"witness":{"x":["1","0","0","0"]}})");
    CHECK(neg.code == cli::kOk);
    CHECK(call({"--help"}).code == cli::kOk);
}

TEST_CASE("enumerate output formats and threads", "[cli]") {
    const Outcome c = call({"construct", "cross", "2", "3"});
    const Outcome csv = call({"enumerate", "--witness", "-", "--box", "3x3", "--format", "csv"}, c.out);
    CHECK(csv.code == cli::kOk);
    CHECK(csv.out == "j,k\n1,3\n2,1\n2,2\n2,3\n3,3\n");
    const Outcome one = call({"enumerate", "--witness", "-", "--box", "20x20"}, c.out);
    const Outcome four = call({"--threads", "4", "enumerate", "--witness", "-", "--box", "20x20"}, c.out);
    CHECK(one.out == four.out);
}

TEST_CASE("enumerate accepts a table document", "[cli]") {
    const std::string table =
        R"({"support":{"points":["1","2","3"]},"entries":[["1/9","1/9","1/9"],["1/9","1/9","1/9"],["1/9","1/9","1/9"]]})";
    const Outcome r = call({"enumerate", "--table", "-", "--box", "2x2", "--format", "csv"}, table);
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "j,k\n1,1\n1,2\n2,1\n2,2\n");
}

TEST_CASE("output is deterministic", "[cli]") {
    const std::vector<std::string> args{"construct", "two-point", "1", "3", "4", "2", "--support", "2,5,11"};
    CHECK(call(args).out == call(args).out);
    const std::vector<std::string> st{"betastar", "--m", "2", "--k", "9", "--box", "6x10"};
    const Outcome a = call(st);
    CHECK(a.code == cli::kOk);
    CHECK(a.out == call(st).out);
    const json j = json::parse(a.out);
    CHECK(j.at("points") == json::parse("[[1,2],[2,4],[3,6],[4,9]]"));
}

TEST_CASE("classify, beta0, det and certificates", "[cli]") {
    const Outcome lat = call({"construct", "lattice", "1", "3", "--alpha", "1"});
    const Outcome cl = call({"classify", "--witness", "-"}, lat.out);
    CHECK(cl.code == cli::kOk);
    CHECK(json::parse(cl.out).at("descriptor").at("lattices") == json::parse("[1,3]"));

    const Outcome b0 = call({"beta0", "--m", "2"});
    CHECK(b0.code == cli::kOk);
    const json iv = json::parse(b0.out).at("interval");
    CHECK(to_double(parse_rational(iv.at("lo").get<std::string>())) < 1.8392867552141612 + 1e-12);
    CHECK(to_double(parse_rational(iv.at("hi").get<std::string>())) > 1.8392867552141612 - 1e-12);

    const Outcome det = call({"det", "F", "2", "3", "--summary"});
    CHECK(det.code == cli::kOk);
    CHECK(json::parse(det.out).at("equal") == true);
    CHECK(call({"det", "det2", "2", "4"}).code == cli::kOk);

    const Outcome cert = call({"indep-cert", "--points", "1,2;2,4;3,6;4,8", "--beta", "2"});
    CHECK(cert.code == cli::kOk);
    CHECK(json::parse(cert.out).at("det") == "64512");
    const Outcome xform = call({"indep-cert", "--points", "1,3;2,6;3,9;4,12", "--support", "1,2,3"});
    CHECK(xform.code == cli::kOk);
    CHECK(json::parse(xform.out).at("form") == "x");
}

TEST_CASE("the exponent cap is read from the environment", "[cli]") {
    const Outcome c = call({"construct", "empty"});
    CHECK(call({"enumerate", "--witness", "-", "--box", "70x1"}, c.out).code == cli::kUsage);
    ::setenv("UNCORRSET_MAX_EXP", "80", 1);
    CHECK(call({"enumerate", "--witness", "-", "--box", "70x1"}, c.out).code == cli::kOk);
    ::unsetenv("UNCORRSET_MAX_EXP");
}
