#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "binomint/cli.hpp"

using binomint::cli::CommandOutcome;
using binomint::cli::run;
using nlohmann::json;

namespace {

json run_json(std::vector<std::string> args, int expected_code = 0) {
    args.insert(args.begin(), "--json");
    const CommandOutcome o = run(args);
    REQUIRE_MESSAGE(o.exit_code == expected_code, o.out << o.err);
    return json::parse(o.out);
}

}  // namespace

TEST_CASE("format_real uses 15 significant digits") {
    CHECK(binomint::cli::format_real(std::numbers::pi) == "3.14159265358979");
    CHECK(binomint::cli::format_real(0.5) == "0.5");
    CHECK(binomint::cli::format_real(1e-20) == "1e-20");
}

TEST_CASE("classify") {
    const auto j = run_json({"classify", "(1 - x^2)^(1/2)"});
    CHECK(j["elementary"] == true);
    CHECK(j["class"]["case3"] == "1");
    CHECK(j["class"]["case1"].is_null());
    CHECK(j["c"] == "1/2");
    CHECK(j["beta"] == "-1");

    const auto n3 = run_json({"classify", "(1 - x^3)^(1/3)"});
    CHECK(n3["elementary"] == false);

    const auto text = run({"classify", "(1 - x^2)^(1/2)"});
    CHECK(text.exit_code == 0);
    CHECK(text.out.find("verdict: elementary") != std::string::npos);
    CHECK(text.out.find("case3 ((a+1)/b + c integer): yes, witness 1") != std::string::npos);
}

TEST_CASE("classify errors map to exit codes") {
    const auto fn = run_json({"classify", "sin(x)"}, 1);
    CHECK(fn["error"] == "not-a-differential-binomial");
    CHECK(fn["position"] == 0);

    const auto syn = run_json({"classify", "(1 - x^2"}, 2);
    CHECK(syn["error"] == "syntax-error");
    CHECK(syn["position"] == 8);

    const auto plain = run({"classify", "(1 - x^2"});
    CHECK(plain.exit_code == 2);
    CHECK(plain.err.find("position 8") != std::string::npos);
}

TEST_CASE("rationalize") {
    const auto j = run_json({"rationalize", "(1 - x^2)^(1/2)"});
    CHECK(j["certificate"]["case"] == "Case3");
    CHECK(j["certificate"]["forward_map"] == "t^2 = x^(-2) - 1");
    CHECK(j["certificate"]["transformed"]["numerator"] == json::array({"0", "0", "-1"}));
    CHECK(j["check"]["pass"] == true);
    CHECK(j["check"]["samples"] == 100);

    const auto ne = run_json({"rationalize", "(1 - x^3)^(1/3)"}, 1);
    CHECK(ne["error"] == "not-elementary");
}

TEST_CASE("hyper") {
    const auto j = run_json({"hyper", "1", "1", "2", "0.5"});
    CHECK(std::abs(j["value"].get<double>() - 2.0 * std::log(2.0)) <= 1e-14);
    CHECK(j["terms_used"].get<int>() > 1);
    const auto neg = run_json({"hyper", "1/3", "5/7", "5/7", "-0.5"});
    CHECK(std::abs(neg["value"].get<double>() - std::pow(1.5, -1.0 / 3.0)) <= 1e-14);
    CHECK(run_json({"hyper", "1", "1", "0", "0.5"}, 1)["error"] == "pole-error");
    CHECK(run_json({"hyper", "1", "1", "2", "1.5"}, 1)["error"] == "divergence-error");
}

TEST_CASE("integrate") {
    const auto all = run_json({"integrate", "2", "0.5", "--method", "all"});
    REQUIRE(all["results"].size() == 3);
    CHECK(all["max_discrepancy"].get<double>() <= 1e-9);

    const auto quad = run_json({"integrate", "2", "1", "--method", "quad"});
    CHECK(std::abs(quad["results"][0]["value"].get<double>() - std::numbers::pi / 4.0) <= 1e-10);

    CHECK(run_json({"integrate", "3", "0.5", "--method", "closed"}, 1)["error"] == "domain-error");
    CHECK(run_json({"integrate", "3", "0.99", "--method", "hyper"}, 1)["error"] == "domain-error");

    const auto three = run_json({"integrate", "3", "0.5"});
    CHECK(three["results"].size() == 2);
}

TEST_CASE("nonconvergence maps to exit code 3") {
    // A tolerance below the quadrature rounding floor exhausts the interval cap.
    const auto o = run({"--json", "--tol", "1e-300", "integrate", "7", "1", "--method", "quad"});
    CHECK(o.exit_code == 3);
    CHECK(json::parse(o.out)["error"] == "nonconvergence");
}

TEST_CASE("flt-scan and report") {
    const auto scan = run_json({"flt-scan", "2", "13"});
    CHECK(scan["count"] == 3);
    CHECK(scan["triples"][1]["X"] == "6");
    CHECK(scan["triples"][1]["x"] == "3/5");
    CHECK(run_json({"flt-scan", "3", "50"})["count"] == 0);

    const auto rep = run_json({"report", "2", "10"});
    int elementary = 0;
    for (const auto& row : rep) elementary += row["elementary"].get<bool>() ? 1 : 0;
    CHECK(elementary == 1);

    const auto tsv = run({"report", "2", "3"});
    CHECK(tsv.out == "n\tcase1\tcase2\tcase3\telementary\n2\t-\t-\t1\ttrue\n3\t-\t-\t-\tfalse\n");
}

TEST_CASE("usage errors") {
    CHECK(run({"bogus"}).exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"integrate", "2"}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("json output is deterministic and round-trips") {
    const std::vector<std::vector<std::string>> commands = {
        {"--json", "classify", "x^(1/2)*(1 + 2*x^3)^(-1/3)"},
        {"--json", "rationalize", "x^3*(1 + x^2)^(1/2)"},
        {"--json", "hyper", "1/2", "1/2", "3/2", "0.25"},
        {"--json", "integrate", "5", "0.7"},
        {"--json", "flt-scan", "2", "30"},
        {"--json", "flt-scan", "2", "30", "--workers", "4"},
        {"--json", "report", "2", "12"},
    };
    for (const auto& c : commands) {
        const auto first = run(c);
        const auto second = run(c);
        REQUIRE(first.exit_code == 0);
        CHECK(first.out == second.out);
        CHECK(json::parse(first.out).dump(2) + "\n" == first.out);
    }
    CHECK(run(commands[4]).out == run(commands[5]).out);
}
