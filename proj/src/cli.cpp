#include "qtorsion/cli.hpp"

#include "qtorsion/clifford.hpp"
#include "qtorsion/errors.hpp"
#include "qtorsion/hyperkahler.hpp"
#include "qtorsion/torsion.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qtorsion {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

Json complex_field(std::complex<double> v, const char* provenance, const char* term = nullptr) {
    Json j;
    j["re"] = v.real();
    j["im"] = v.imag();
    j["provenance"] = provenance;
    if (term) j["term"] = term;
    return j;
}

Json real_field(double v, const char* provenance, const char* term = nullptr) {
    Json j;
    j["value"] = v;
    j["provenance"] = provenance;
    if (term) j["term"] = term;
    return j;
}

Json exact_field(const std::string& exact, const char* provenance, const char* term = nullptr) {
    Json j;
    j["exact"] = exact;
    j["provenance"] = provenance;
    if (term) j["term"] = term;
    return j;
}

Json rationals(const std::vector<Rational>& v) {
    Json j = Json::array();
    for (const auto& r : v) j.push_back(to_string(r));
    return j;
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

double tolerance(const JobConfig& c) {
    if (c.precision < 1 || c.precision > 15) throw ConfigurationError("precision must be between 1 and 15 digits");
    return std::pow(10.0, -c.precision);
}

struct Setting {
    WolfSpaceData w;
    BundleSpec bundle;
};

Setting resolve_bundle(const JobConfig& c) {
    const auto rs = RootSystem::build(c.group);
    Setting out{build_wolf_space(rs), {}};
    const auto& w = out.w;
    Weight lambda_circ(rs.ambient_dim());
    if (c.lambda_orthogonal) {
        if (c.lambda_circ.size() != rs.ambient_dim())
            throw ConfigurationError("orthogonal lambda needs " + std::to_string(rs.ambient_dim()) + " coordinates");
        lambda_circ = Weight(c.lambda_circ);
    } else {
        lambda_circ = w.make_lambda(0, c.lambda_circ);
    }
    const TorusElement x = c.element ? TorusElement::regular(rs, *c.element) : TorusElement::identity(rs.ambient_dim());
    out.bundle = BundleSpec::make(w, c.k, lambda_circ, x);
    return out;
}

Json bundle_echo(const JobConfig& c, const Setting& st) {
    Json in;
    in["group"] = st.w.rs.cartan_type().name();
    in["n"] = st.w.n;
    in["k"] = c.k;
    in["lambda_circ_input"] = rationals(c.lambda_circ);
    in["lambda_orthogonal"] = c.lambda_orthogonal;
    in["lambda_circ"] = st.bundle.lambda_circ.str();
    in["lambda"] = st.bundle.lambda(st.w).str();
    in["element"] = c.element ? rationals(*c.element) : Json("identity");
    return in;
}

Json torsion_report(const JobConfig& c) {
    const auto st = resolve_bundle(c);
    const auto t = torsion(st.w, st.bundle, tolerance(c));
    Json in = bundle_echo(c, st);
    in["precision"] = c.precision;
    Json parts;
    const auto& p = t.parts;
    parts["zeta_prime_part"] = complex_field(p.zeta_prime_part, "continuation", "zeta derivative of the odd character family");
    parts["p_star_part"] = complex_field(p.p_star_part, "closed-form", "polynomial correction at phase zero");
    parts["log_norm_part"] = complex_field(p.log_norm_part, "continuation", "zeta value times log of 2/|alpha+beta|^2");
    parts["chi_log_part"] = complex_field(p.chi_log_part, "closed-form", "character at rho+lambda times log norm, plus branch");
    parts["finite_sum_plus"] = complex_field(p.finite_sum_plus, "closed-form", "finite log sum, plus branch");
    parts["finite_sum_minus"] = complex_field(p.finite_sum_minus, "closed-form", "finite log sum, minus branch");
    Json result;
    result["total"] = complex_field(t.total, "continuation", "sum of the six parts");
    result["parts"] = parts;
    result["precision_estimate"] = real_field(t.precision_estimate, "closed-form", "accumulated evaluator tolerance");
    return Json{{"input", in}, {"result", result}};
}

Json zeta_report(const JobConfig& c) {
    const auto st = resolve_bundle(c);
    const double tol = tolerance(c);
    Json in = bundle_echo(c, st);
    in["s"] = c.s;
    in["cutoff"] = to_string(c.cutoff);
    in["precision"] = c.precision;

    const auto full = zeta_closed_form(st.w, st.bundle, c.s, ClosedFormVariant::reflected, tol);
    const auto partial = zeta_closed_form_partial(st.w, st.bundle, c.s, c.cutoff);
    const double bound = zeta_tail_bound(st.w, st.bundle, c.s, c.cutoff);
    const auto terms = spectral_oracle(st.w, st.bundle, c.cutoff);
    const auto oracle = oracle_partial_zeta(terms, c.s);

    Json result;
    result["convergence_threshold"] = real_field(convergence_threshold(st.w, st.bundle), "closed-form");
    result["value"] = complex_field(full.value, "closed-form", "closed-form series summed to tolerance");
    result["value_tail_bound"] = real_field(full.tail_bound, "closed-form", "bound on the omitted series tail");
    result["series_terms"] = full.terms;
    result["partial_closed_form"] = complex_field(partial, "closed-form", "closed-form terms with eigenvalue <= cutoff");
    result["partial_oracle"] = complex_field(oracle, "oracle", "spectral sum with eigenvalue <= cutoff");
    result["partial_difference"] = real_field(std::abs(partial - oracle), "oracle");
    result["partial_tail_bound"] = real_field(bound, "closed-form", "bound on closed-form terms above cutoff");
    result["within_bound"] = std::abs(partial - oracle) <= bound;
    result["oracle_terms"] = terms.size();
    return Json{{"input", in}, {"result", result}};
}

Json spectrum_report(const JobConfig& c) {
    const auto st = resolve_bundle(c);
    Json in = bundle_echo(c, st);
    in["cutoff"] = to_string(c.cutoff);
    Json rows = Json::array();
    bool all_consistent = true;
    for (const auto& t : spectral_oracle(st.w, st.bundle, c.cutoff)) {
        const auto [via_k, via_rho] = casimir_eigenvalues(st.w, st.bundle, t.b_pi);
        all_consistent = all_consistent && via_k == via_rho;
        Json row;
        row["b_pi"] = t.b_pi.str();
        row["eigenvalue"] = exact_field(to_string(t.eigenvalue), "oracle", "(|b_pi|^2 - |rho+lambda|^2)/2");
        row["eigenvalue_via_casimirs"] = exact_field(to_string(via_k), "closed-form", "Casimir difference over K");
        row["q_multiplicities"] = exact_field(join(t.q_multiplicities), "oracle", "dim Hom_K for q = 0..2n");
        row["character"] = complex_field(t.char_at_x, "oracle", "character of V_pi at X");
        rows.push_back(row);
    }
    Json result;
    result["terms"] = rows;
    result["casimir_consistent"] = all_consistent;
    return Json{{"input", in}, {"result", result}};
}

Json occur_report(const JobConfig& c) {
    const auto st = resolve_bundle(c);
    Json in = bundle_echo(c, st);
    in["cutoff"] = to_string(c.cutoff);
    const BranchingEngine engine(st.w);
    Json rows = Json::array();
    double worst = 0.0;
    for (const auto& b_pi : dominant_weights_up_to(st.w.rs, c.cutoff)) {
        const auto check = lemma_occur_check(engine, st.bundle, b_pi);
        const double diff = std::abs(check.lhs - check.rhs);
        worst = std::max(worst, diff);
        Json row;
        row["b_pi"] = b_pi.str();
        row["casimir"] = exact_field(to_string(casimir(st.w.rs, b_pi)), "closed-form");
        row["lhs"] = complex_field(check.lhs, "oracle", "alternating sum of Hom multiplicities times characters");
        row["rhs"] = complex_field(check.rhs, "closed-form", "occurrence condition from the weight pattern");
        row["abs_difference"] = real_field(diff, "oracle");
        rows.push_back(row);
    }
    Json result;
    result["rows"] = rows;
    result["max_abs_difference"] = real_field(worst, "oracle");
    return Json{{"input", in}, {"result", result}};
}

Json clifford_report(const JobConfig& c) {
    const auto m = TensorModel::build(c.n, c.k);
    Json in;
    in["n"] = c.n;
    in["k"] = c.k;
    in["trials"] = c.trials;
    in["seed"] = c.seed;

    const auto cl = check_clifford_relation(m, c.trials, c.seed);
    const auto ids = check_identities(m, c.trials, c.seed);
    const auto printed = printed_gamma(m);
    const auto corrected = sign_corrected_gamma(m);
    const auto dirac_printed = check_dirac_identity(m, printed, c.trials, c.seed);
    const auto dirac_corrected = check_dirac_identity(m, corrected, c.trials, c.seed);

    Json blocks = Json::array();
    for (std::size_t i = 0; i < m.blocks().size(); ++i) {
        const auto& b = m.blocks()[i];
        Json row;
        row["q"] = b.q;
        row["r"] = b.r;
        row["dim"] = b.dim();
        row["gamma_printed"] = exact_field(printed_gamma(c.n, c.k, b.q, b.r).str(), "closed-form");
        row["gamma_sign_corrected"] = real_field(corrected[i], "closed-form");
        row["perturbed_residual"] = real_field(dirac_corrected.perturbed_residuals[i], "oracle", "gamma doubled on this block");
        blocks.push_back(row);
    }
    Json result;
    result["dim"] = m.dim();
    result["lambda0"] = real_field(cl.lambda0, "oracle", "measured Clifford constant");
    result["clifford_residual"] = real_field(cl.max_residual, "oracle");
    result["clifford_off_block"] = real_field(cl.max_off_block, "oracle");
    result["sym_identity_exact"] = ids.sym_identity_exact;
    result["lambda_identity_exact"] = ids.lambda_identity_exact;
    result["sp1_identity_exact"] = ids.sp1_identity_exact;
    result["symbol_square"] = real_field(ids.max_square, "oracle", "largest entry of squared symbols");
    result["dirac_residual_printed_gamma"] = real_field(dirac_printed.max_residual, "oracle");
    result["dirac_residual_sign_corrected_gamma"] = real_field(dirac_corrected.max_residual, "oracle");
    result["dirac_residual_global_scale"] = real_field(dirac_corrected.global_scale_residual, "oracle");
    result["blocks"] = blocks;
    return Json{{"input", in}, {"result", result}};
}

Json torus_report(const JobConfig& c) {
    LatticeSpec lattice = LatticeSpec::cubic(4);
    if (!c.lattice.empty()) {
        const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(c.lattice.size()))));
        if (d * d != static_cast<Eigen::Index>(c.lattice.size()))
            throw ConfigurationError("lattice basis needs rank^2 entries");
        lattice = LatticeSpec::from_basis(Eigen::Map<const Eigen::MatrixXd>(c.lattice.data(), d, d));
    }
    Json in;
    in["rank"] = lattice.rank();
    in["lattice"] = c.lattice.empty() ? Json("Z^4") : Json(c.lattice);
    in["k"] = c.k;
    in["s"] = c.s;
    const auto t = torus_torsion(lattice, c.k);
    Json result;
    result["lattice_zeta"] = real_field(lattice_zeta(lattice, c.s), "continuation", "sum over dual lattice of |mu|^{-2s}");
    result["lattice_zeta_deriv0"] = real_field(t.zeta_deriv0, "continuation");
    result["collapse_coefficient"] = exact_field(t.coefficient.str(), "closed-form", "sum (-1)^q q(q+k+1) C(2n,q)");
    result["collapsed_zeta_deriv0"] = real_field(t.coefficient.convert_to<double>() * t.zeta_deriv0, "continuation",
                                                 "derivative at 0 of the collapsed zeta");
    result["torsion"] = real_field(t.torsion, "continuation", "sum (-1)^{q+1} q(q+k+1) zeta'_q(0)");
    return Json{{"input", in}, {"result", result}};
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void flatten(const Json& j, const std::string& path, std::ostringstream& out) {
    if (j.is_object() && j.contains("provenance")) {
        const auto get = [&](const char* key) { return j.contains(key) ? scalar_text(j[key]) : std::string(); };
        std::string re = get("re");
        if (re.empty()) re = get("value");
        out << csv_cell(path) << ',' << csv_cell(re) << ',' << csv_cell(get("im")) << ',' << csv_cell(get("exact"))
            << ',' << csv_cell(get("provenance")) << ',' << csv_cell(get("term")) << '\n';
        return;
    }
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, out);
        return;
    }
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
        return;
    }
    out << csv_cell(path) << ",,," << csv_cell(scalar_text(j)) << ",,\n";
}

std::string render(const Json& report, const std::string& format) {
    if (format == "csv") {
        std::ostringstream out;
        out << "path,re,im,exact,provenance,term\n";
        flatten(report, "", out);
        return out.str();
    }
    return report.dump(2) + "\n";
}

Json error_report(const std::string& command, const char* kind, const char* type, const std::string& message) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["status"] = "error";
    j["error"] = Json{{"kind", kind}, {"type", type}, {"message", message}};
    return j;
}

}  // namespace

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw ConfigurationError("empty coordinate list");
    return out;
}

void apply_config_json(const std::string& text, JobConfig& c) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ConfigurationError(std::string("config file: ") + e.what());
    }
    if (!j.is_object()) throw ConfigurationError("config file must hold a JSON object");
    const auto as_text = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    try {
        for (const auto& [key, v] : j.items()) {
            if (key == "command") c.command = v.get<std::string>();
            else if (key == "group") c.group = v.get<std::string>();
            else if (key == "k") c.k = v.get<int>();
            else if (key == "lambda") c.lambda_circ = parse_rational_list(as_text(v));
            else if (key == "lambda_orthogonal") c.lambda_orthogonal = v.get<bool>();
            else if (key == "element") {
                const auto e = as_text(v);
                if (e == "identity") c.element.reset();
                else c.element = parse_rational_list(e);
            } else if (key == "cutoff") c.cutoff = parse_rational(as_text(v));
            else if (key == "precision") c.precision = v.get<int>();
            else if (key == "format") c.format = v.get<std::string>();
            else if (key == "seed") c.seed = v.get<std::uint64_t>();
            else if (key == "s") c.s = v.get<double>();
            else if (key == "n") c.n = v.get<int>();
            else if (key == "trials") c.trials = v.get<std::size_t>();
            else if (key == "lattice") c.lattice = v.get<std::vector<double>>();
            else throw ConfigurationError("unknown config key '" + key + "'");
        }
    } catch (const Json::exception& e) {
        throw ConfigurationError(std::string("config file: ") + e.what());
    }
}

JobOutput run(const JobConfig& config) {
    const std::string format = config.format == "csv" ? "csv" : "json";
    try {
        if (config.format != "json" && config.format != "csv")
            throw ConfigurationError("format must be json or csv, got '" + config.format + "'");
        Json body;
        if (config.command == "torsion") body = torsion_report(config);
        else if (config.command == "zeta") body = zeta_report(config);
        else if (config.command == "spectrum") body = spectrum_report(config);
        else if (config.command == "occur-check") body = occur_report(config);
        else if (config.command == "clifford-check") body = clifford_report(config);
        else if (config.command == "torus") body = torus_report(config);
        else throw ConfigurationError("unknown command '" + config.command + "'");
        Json report;
        report["schema_version"] = kSchemaVersion;
        report["command"] = config.command;
        report["status"] = "ok";
        report["input"] = body["input"];
        report["result"] = body["result"];
        return {0, render(report, format)};
    } catch (const ConfigurationError& e) {
        return {2, render(error_report(config.command, "validation", "configuration", e.what()), format)};
    } catch (const DomainError& e) {
        return {2, render(error_report(config.command, "validation", "domain", e.what()), format)};
    } catch (const ResourceError& e) {
        return {2, render(error_report(config.command, "validation", "resource", e.what()), format)};
    } catch (const NumericError& e) {
        return {1, render(error_report(config.command, "numeric", "numeric", e.what()), format)};
    } catch (const std::exception& e) {
        return {1, render(error_report(config.command, "numeric", "internal", e.what()), format)};
    }
}

}  // namespace qtorsion
