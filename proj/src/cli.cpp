/*
   Copyright 2026 The fermat-rc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "fermatrc/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "fermatrc/classify.hpp"
#include "fermatrc/error.hpp"
#include "fermatrc/json_io.hpp"
#include "fermatrc/search.hpp"
#include "fermatrc/splitbundle.hpp"

namespace fermatrc::cli {

namespace {

using json_io::json;

struct Options {
    std::string curve_path;
    std::string bundle = "tx";
    std::string strategy = "alternating";
    int pr = 0;
    int N = 0;
    int e = 1;
    int min_e = 1;
    int max = 0;
    int trials = 100;
    int field_degree = 0;
    long budget = 0;
    long max_iter = 1000;
    unsigned workers = 0;
    std::uint64_t seed = 0;
    bool pretty = false;
};

void emit(std::ostream& out, const json& j, bool pretty) { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::UsageError, "cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& err) {
        fail(ErrorKind::UsageError, path + ": " + err.what());
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) fail(ErrorKind::UsageError, what);
}

// Parameters from --pr/--N/--field-degree, or from the curve file when given.
fermat::FermatParams params_from_flags(const Options& opt) {
    require(opt.pr > 0, "--pr is required");
    const auto [p, r] = json_io::split_prime_power(static_cast<std::uint64_t>(opt.pr));
    const int N = opt.N > 0 ? opt.N : opt.pr + 1;
    if (opt.field_degree > 0) return fermat::FermatParams(p, r, N, ff::Field(p, static_cast<unsigned>(opt.field_degree)));
    return fermat::FermatParams(p, r, N);
}

std::optional<json_io::CurveFile> curve_file(const Options& opt) {
    if (opt.curve_path.empty()) return std::nullopt;
    auto file = json_io::curve_file_from_json(read_json_file(opt.curve_path));
    if (opt.pr > 0) require(file.params.pr() == opt.pr, "--pr does not match the curve file");
    if (opt.N > 0) require(file.params.N() == opt.N, "--N does not match the curve file");
    return file;
}

fermat::Curve load_curve(const Options& opt) {
    require(!opt.curve_path.empty(), "--curve is required");
    auto file = *curve_file(opt);
    return fermat::validate(file.params, std::move(file.forms));
}

int dispatch(const std::string& command, const Options& opt, std::ostream& out) {
    if (command == "verify") {
        const auto curve = load_curve(opt);
        const auto rnc = fermat::is_rnc(curve);
        emit(out,
             {{"schema", json_io::kSchema},
              {"valid", true},
              {"e", curve.e()},
              {"N", curve.N()},
              {"span_dim", rnc.span_dim},
              {"is_rnc", rnc.is_rnc}},
             opt.pretty);
    } else if (command == "splitting") {
        std::string name;
        splitbundle::SplittingType result;
        if (opt.bundle == "omega" || opt.bundle == "tp") {
            // Maps to P^N need not lie on X here.
            require(!opt.curve_path.empty(), "--curve is required");
            const auto file = *curve_file(opt);
            if (opt.bundle == "omega") {
                name = "omega_P";
                result = splitbundle::splitting_omega_P(file.forms);
            } else {
                name = "T_P";
                result = splitbundle::splitting_T_P(file.forms);
            }
        } else if (opt.bundle == "tx") {
            name = "TX";
            result = splitbundle::splitting_TX(load_curve(opt));
        } else if (opt.bundle == "f") {
            name = "F";
            result = splitbundle::splitting_F(load_curve(opt));
        } else {
            fail(ErrorKind::UsageError, "unknown bundle '" + opt.bundle + "'");
        }
        emit(out, json_io::splitting_to_json(result, name), opt.pretty);
    } else if (command == "classify") {
        emit(out, json_io::report_to_json(classify::classify(load_curve(opt))), opt.pretty);
    } else if (command == "tangent") {
        emit(out, json_io::tangent_to_json(classify::tangent_report(load_curve(opt))), opt.pretty);
    } else if (command == "windows") {
        require(opt.pr > 0, "--pr is required");
        require(opt.max > 0, "--max is required");
        emit(out, json_io::windows_to_json(classify::forbidden_windows(opt.pr), opt.max), opt.pretty);
    } else if (command == "balanced-model") {
        require(opt.pr > 0 && opt.N > 0, "--e, --N and --pr are required");
        emit(out, json_io::balanced_to_json(classify::balanced_model(opt.e, opt.N, opt.pr), opt.e, opt.N, opt.pr),
             opt.pretty);
    } else if (command == "probe-vanishing") {
        const auto params = params_from_flags(opt);
        const auto probe = classify::coefficient_vanishing_probe(params, opt.e, opt.trials, opt.seed);
        emit(out, json_io::probe_to_json(probe, params, opt.e), opt.pretty);
    } else if (command == "search") {
        const auto strategy = search::parse_strategy(opt.strategy);
        std::optional<fermat::Curve> base;
        std::optional<fermat::FermatParams> params;
        if (auto file = curve_file(opt)) {
            params = file->params;
            base = fermat::validate(file->params, std::move(file->forms));
        } else {
            params = params_from_flags(opt);
        }
        const search::SearchConfig config{*params, opt.e, opt.seed, opt.max_iter, strategy};
        json curves = json::array();
        for (const auto& c : search::run(config, base)) curves.push_back(json_io::curve_to_json(c));
        emit(out,
             {{"schema", json_io::kSchema},
              {"strategy", search::to_string(strategy)},
              {"e", opt.e},
              {"seed", opt.seed},
              {"curves", curves}},
             opt.pretty);
    } else if (command == "survey") {
        const auto params = params_from_flags(opt);
        require(opt.budget > 0, "--budget is required");
        const int e_max = opt.max > 0 ? opt.max : opt.e;
        for (const auto& row : search::survey(params, opt.min_e, e_max, opt.budget, opt.seed, opt.workers))
            emit(out, json_io::survey_row_to_json(row), false);
    }
    return kSuccess;
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::CertificateFailure: return kCertificateFailure;
        case ErrorKind::UsageError: return kUsageError;
        default: return kDomainError;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
    Options opt;
    CLI::App app{"Splitting types of rational curves on Fermat hypersurfaces of degree p^r + 1", "fermat-rc"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all");

    auto add_pretty = [&](CLI::App* sub) { sub->add_flag("--pretty", opt.pretty, "Indent the JSON output"); };
    auto add_curve = [&](CLI::App* sub) { sub->add_option("--curve", opt.curve_path, "Curve JSON file")->required(); };

    auto* verify = app.add_subcommand("verify", "Validate a curve file");
    add_curve(verify);
    add_pretty(verify);

    auto* splitting = app.add_subcommand("splitting", "Splitting type of a pulled-back bundle");
    add_curve(splitting);
    splitting->add_option("--bundle", opt.bundle, "tx | f | omega | tp")
        ->check(CLI::IsMember({"tx", "f", "omega", "tp"}));
    add_pretty(splitting);

    auto* classify_cmd = app.add_subcommand("classify", "Free / very free verdict and splittings");
    add_curve(classify_cmd);
    add_pretty(classify_cmd);

    auto* tangent = app.add_subcommand("tangent", "Tangent space dimensions of the space of maps");
    add_curve(tangent);
    add_pretty(tangent);

    auto* windows = app.add_subcommand("windows", "Degree windows without very free curves on X_{d,d}");
    windows->add_option("--pr", opt.pr, "p^r")->required();
    windows->add_option("--max", opt.max, "Largest degree listed")->required();
    add_pretty(windows);

    auto* balanced = app.add_subcommand("balanced-model", "F splitting forced by a balanced cotangent pullback");
    balanced->add_option("--e", opt.e, "Curve degree")->required();
    balanced->add_option("--N", opt.N, "Ambient dimension")->required();
    balanced->add_option("--pr", opt.pr, "p^r")->required();
    add_pretty(balanced);

    auto* probe = app.add_subcommand("probe-vanishing", "Random check of the automatic coefficient vanishing");
    probe->add_option("--pr", opt.pr, "p^r")->required();
    probe->add_option("--N", opt.N, "Ambient dimension (default p^r + 1)");
    probe->add_option("--e", opt.e, "Degree of the sampled forms")->required();
    probe->add_option("--trials", opt.trials, "Number of samples");
    probe->add_option("--seed", opt.seed, "PRNG seed");
    probe->add_option("--field-degree", opt.field_degree, "Work over GF(p^n) instead of GF(p^(2r))");
    add_pretty(probe);

    auto* search_cmd = app.add_subcommand("search", "Find curves with one strategy");
    search_cmd->add_option("--pr", opt.pr, "p^r");
    search_cmd->add_option("--N", opt.N, "Ambient dimension (default p^r + 1)");
    search_cmd->add_option("--e", opt.e, "Target degree");
    search_cmd->add_option("--strategy", opt.strategy, "lines | covers | alternating | exhaustive")
        ->check(CLI::IsMember({"lines", "covers", "alternating", "exhaustive"}));
    search_cmd->add_option("--seed", opt.seed, "PRNG seed");
    search_cmd->add_option("--max", opt.max_iter, "Iteration budget (covers: number of curves)");
    search_cmd->add_option("--curve", opt.curve_path, "Base curve for covers; fixes the field");
    search_cmd->add_option("--field-degree", opt.field_degree, "Work over GF(p^n) instead of GF(p^(2r))");
    add_pretty(search_cmd);

    auto* survey = app.add_subcommand("survey", "Generate and classify curves; JSON lines");
    survey->add_option("--pr", opt.pr, "p^r")->required();
    survey->add_option("--N", opt.N, "Ambient dimension (default p^r + 1)");
    survey->add_option("--e", opt.e, "Largest degree (or use --max)");
    survey->add_option("--min-e", opt.min_e, "Smallest degree");
    survey->add_option("--max", opt.max, "Largest degree");
    survey->add_option("--budget", opt.budget, "Total number of classified curves")->required();
    survey->add_option("--seed", opt.seed, "PRNG seed");
    survey->add_option("--workers", opt.workers, "Worker threads (0 = hardware concurrency)");
    survey->add_option("--field-degree", opt.field_degree, "Work over GF(p^n) instead of GF(p^(2r))");

    std::vector<const char*> argv{"fermat-rc"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& err) {
        emit(out, json_io::error_to_json(ErrorKind::UsageError, err.what()), false);
        return kUsageError;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return dispatch(command, opt, out);
    } catch (const Error& err) {
        emit(out, json_io::error_to_json(err.kind(), err.what()), opt.pretty);
        return exit_code(err.kind());
    } catch (const std::exception& err) {
        emit(out, json_io::error_to_json(ErrorKind::CertificateFailure, err.what()), opt.pretty);
        return kCertificateFailure;
    }
}

}  // namespace fermatrc::cli
