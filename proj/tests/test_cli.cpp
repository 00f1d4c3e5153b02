#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtorsion/cli.hpp"
#include "qtorsion/errors.hpp"

#include <json.hpp>

#include <cmath>

using namespace qtorsion;
using Json = nlohmann::json;

namespace {

JobConfig job(const std::string& command) {
    JobConfig c;
    c.command = command;
    return c;
}

Json parse(const JobOutput& out) { return Json::parse(out.text); }

std::vector<Rational> rationals(std::initializer_list<Rational> v) { return v; }

}  // namespace

TEST_CASE("torsion report carries the log 3 fixture and all six parts") {
    auto c = job("torsion");
    c.lambda_circ = rationals({0});
    const auto out = run(c);
    REQUIRE(out.exit_code == 0);
    const auto j = parse(out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["status"] == "ok");
    CHECK(j["input"]["group"] == "C2");
    const auto& parts = j["result"]["parts"];
    for (const char* name : {"zeta_prime_part", "p_star_part", "log_norm_part", "chi_log_part", "finite_sum_plus",
                             "finite_sum_minus"}) {
        INFO(name);
        REQUIRE(parts.contains(name));
        CHECK(parts[name].contains("provenance"));
        CHECK(parts[name].contains("term"));
    }
    CHECK(parts["finite_sum_plus"]["re"].get<double>() == doctest::Approx(std::log(3.0)).epsilon(1e-15));
    double sum = 0;
    for (const auto& [name, part] : parts.items()) sum += part["re"].get<double>();
    CHECK(j["result"]["total"]["re"].get<double>() == doctest::Approx(sum).epsilon(1e-14));
}

TEST_CASE("reports are byte-identical across runs") {
    for (const char* command : {"torsion", "clifford-check", "torus"}) {
        auto c = job(command);
        c.seed = 17;
        if (std::string(command) == "torsion") c.element = rationals({Rational(1, 7), Rational(3, 11)});
        for (const char* format : {"json", "csv"}) {
            c.format = format;
            CHECK(run(c).text == run(c).text);
        }
    }
}

TEST_CASE("validation and numeric failures map to exit codes") {
    auto singular = job("torsion");
    singular.element = rationals({Rational(1, 2), Rational(1, 3)});
    const auto out = run(singular);
    CHECK(out.exit_code == 2);
    const auto j = parse(out);
    CHECK(j["status"] == "error");
    CHECK(j["error"]["kind"] == "validation");

    auto odd = job("torsion");
    odd.k = 3;
    CHECK(run(odd).exit_code == 2);
    CHECK(run(job("bogus")).exit_code == 2);
    auto bad_group = job("torsion");
    bad_group.group = "Q9";
    CHECK(run(bad_group).exit_code == 2);
    auto bad_format = job("torus");
    bad_format.format = "xml";
    CHECK(run(bad_format).exit_code == 2);

    // s below the convergence threshold at the identity.
    auto low = job("zeta");
    low.group = "G2";
    low.s = 2.0;
    CHECK(run(low).exit_code == 2);

    // The closed-form series cannot reach this tolerance within its term budget.
    auto tight = job("zeta");
    tight.s = 2.6;
    tight.precision = 15;
    CHECK(run(tight).exit_code == 1);
}

TEST_CASE("csv flattens the json report") {
    auto c = job("torus");
    c.format = "csv";
    const auto out = run(c);
    REQUIRE(out.exit_code == 0);
    CHECK(out.text.rfind("path,re,im,exact,provenance,term\n", 0) == 0);
    CHECK(out.text.find("result.collapse_coefficient,,,2,closed-form,") != std::string::npos);
    CHECK(out.text.find("result.lattice_zeta,") != std::string::npos);
}

TEST_CASE("occur-check rows agree column-wise") {
    auto c = job("occur-check");
    c.cutoff = 10;
    const auto j = parse(run(c));
    REQUIRE(j["result"]["rows"].size() > 5);
    for (const auto& row : j["result"]["rows"]) {
        CHECK(row["lhs"]["re"] == row["rhs"]["re"]);
        CHECK(std::abs(row["lhs"]["im"].get<double>() - row["rhs"]["im"].get<double>()) == 0.0);
    }
}

TEST_CASE("config json mirrors the flags") {
    JobConfig c;
    apply_config_json(R"({"group": "G2", "k": 2, "lambda": "1", "element": "1/7,2/9,-3/11", "cutoff": "5/2",
                          "precision": 10, "format": "csv", "seed": 9, "s": 3.5})", c);
    CHECK(c.group == "G2");
    CHECK(c.k == 2);
    CHECK(c.lambda_circ == rationals({1}));
    REQUIRE(c.element);
    CHECK(c.element->at(2) == Rational(-3, 11));
    CHECK(c.cutoff == Rational(5, 2));
    CHECK(c.precision == 10);
    CHECK(c.format == "csv");
    CHECK(c.seed == 9);
    CHECK(c.s == 3.5);
    apply_config_json(R"({"element": "identity"})", c);
    CHECK(!c.element);
    CHECK_THROWS_AS(apply_config_json(R"({"colour": 1})", c), ConfigurationError);
    CHECK_THROWS_AS(apply_config_json("[1, 2]", c), ConfigurationError);
    CHECK_THROWS_AS(parse_rational_list("1,x"), ConfigurationError);
}
