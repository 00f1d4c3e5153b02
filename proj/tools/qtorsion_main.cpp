#include "qtorsion/cli.hpp"
#include "qtorsion/errors.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

int fail(const std::string& message) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["status"] = "error";
    j["error"] = {{"kind", "validation"}, {"type", "configuration"}, {"message", message}};
    std::cout << j.dump(2) << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torsion, zeta and fibre-model checks for Wolf spaces"};
    app.require_subcommand(1);

    std::string group, lambda, element, cutoff, format, config_file, lattice;
    int k = 0, precision = 0, n = 0;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    double s = 0;
    bool lambda_orthogonal = false;

    std::vector<CLI::Option*> options;
    const auto add_common = [&](CLI::App* sub) {
        options.push_back(sub->add_option("--group", group, "Cartan type, e.g. C2, G2, A3"));
        options.push_back(sub->add_option("--k", k, "even integer k >= 0"));
        options.push_back(sub->add_option("--lambda", lambda, "K0 fundamental-weight coordinates, comma separated"));
        options.push_back(sub->add_flag("--lambda-orthogonal", lambda_orthogonal, "read --lambda in ambient coordinates"));
        options.push_back(sub->add_option("--element", element, "identity or comma-separated rationals X"));
        options.push_back(sub->add_option("--cutoff", cutoff, "eigenvalue cutoff (Casimir cutoff for occur-check)"));
        options.push_back(sub->add_option("--precision", precision, "decimal digits of the target tolerance"));
        options.push_back(sub->add_option("--s", s, "zeta argument"));
        options.push_back(sub->add_option("--n", n, "quaternionic dimension for clifford-check"));
        options.push_back(sub->add_option("--trials", trials, "random trials for clifford-check"));
        options.push_back(sub->add_option("--lattice", lattice, "torus basis, rank^2 comma-separated entries, column-major"));
        options.push_back(sub->add_option("--format", format, "json or csv"));
        options.push_back(sub->add_option("--seed", seed, "seed for randomized checks"));
        options.push_back(sub->add_option("--config", config_file, "JSON file with the same keys; flags win"));
    };
    for (const char* name : {"torsion", "zeta", "spectrum", "occur-check", "clifford-check", "torus"})
        add_common(app.add_subcommand(name));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail(e.what());
    }

    qtorsion::JobConfig config;
    config.command = app.get_subcommands().front()->get_name();
    const auto given = [&](const std::string& flag) {
        for (auto* o : options)
            if (o->check_lname(flag.substr(2)) && o->count() > 0) return true;
        return false;
    };
    try {
        if (given("--config")) {
            std::ifstream in(config_file);
            if (!in) return fail("cannot read config file " + config_file);
            std::stringstream text;
            text << in.rdbuf();
            const std::string command = config.command;
            qtorsion::apply_config_json(text.str(), config);
            config.command = command;
        }
        if (given("--group")) config.group = group;
        if (given("--k")) config.k = k;
        if (given("--lambda")) config.lambda_circ = qtorsion::parse_rational_list(lambda);
        if (given("--lambda-orthogonal")) config.lambda_orthogonal = lambda_orthogonal;
        if (given("--element")) {
            if (element == "identity") config.element.reset();
            else config.element = qtorsion::parse_rational_list(element);
        }
        if (given("--cutoff")) config.cutoff = qtorsion::parse_rational(cutoff);
        if (given("--precision")) config.precision = precision;
        if (given("--s")) config.s = s;
        if (given("--n")) config.n = n;
        if (given("--trials")) config.trials = trials;
        if (given("--lattice")) {
            config.lattice.clear();
            for (const auto& r : qtorsion::parse_rational_list(lattice)) config.lattice.push_back(qtorsion::to_double(r));
        }
        if (given("--format")) config.format = format;
        if (given("--seed")) config.seed = seed;
    } catch (const qtorsion::ConfigurationError& e) {
        return fail(e.what());
    }

    const auto out = qtorsion::run(config);
    std::cout << out.text;
    return out.exit_code;
}
