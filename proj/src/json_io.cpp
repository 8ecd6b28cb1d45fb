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

#include "fermatrc/json_io.hpp"

#include "fermatrc/ff.hpp"

namespace fermatrc::json_io {

namespace {

using ff::Fe;

[[noreturn]] void usage(const std::string& what) { fail(ErrorKind::UsageError, what); }

template <typename T>
T get_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) usage(std::string("missing key \"") + key + "\"");
    const json& v = j.at(key);
    if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) usage(std::string("\"") + key + "\" must be an integer");
        if constexpr (std::is_unsigned_v<T>) {
            if (v.get<long long>() < 0) usage(std::string("\"") + key + "\" must be non-negative");
        }
    }
    return v.get<T>();
}

json summands_json(const splitbundle::SplittingType& s) { return json(s.summands); }

}  // namespace

json field_to_json(const ff::Field& field) {
    return {{"p", field.p()}, {"n", field.n()}, {"modulus", field.modulus()}};
}

ff::Field field_from_json(const json& j) {
    const auto p = get_field<std::uint64_t>(j, "p");
    const auto n = get_field<unsigned>(j, "n");
    try {
        if (!j.contains("modulus")) return ff::Field(p, n);
        const json& m = j.at("modulus");
        if (!m.is_array()) usage("\"modulus\" must be an array");
        std::vector<std::uint64_t> modulus;
        for (const json& c : m) {
            if (!c.is_number_unsigned()) usage("modulus digits must be non-negative integers");
            modulus.push_back(c.get<std::uint64_t>());
        }
        return ff::Field(p, n, std::move(modulus));
    } catch (const Error& err) {
        if (err.kind() == ErrorKind::UsageError) throw;
        usage(std::string("bad field: ") + err.what());
    }
}

json form_to_json(const forms::Form& form, int degree) {
    std::vector<Fe> coeffs(static_cast<std::size_t>(std::max(degree, -1) + 1), 0);
    if (!form.is_zero()) std::copy(form.coeffs().begin(), form.coeffs().end(), coeffs.begin());
    return coeffs;
}

json curve_to_json(const fermat::Curve& curve) {
    json forms = json::array();
    for (const auto& f : curve.forms()) forms.push_back(form_to_json(f, curve.e()));
    const auto& params = curve.params();
    return {{"schema", kSchema}, {"p", params.p()},     {"r", params.r()},
            {"N", params.N()},   {"e", curve.e()},      {"field", field_to_json(params.field())},
            {"curve", forms}};
}

CurveFile curve_file_from_json(const json& j) {
    if (!j.is_object()) usage("curve JSON must be an object");
    if (j.contains("schema") && j.at("schema") != kSchema) usage("unsupported schema");
    const auto p = get_field<std::uint64_t>(j, "p");
    const auto r = get_field<unsigned>(j, "r");
    const auto N = get_field<int>(j, "N");
    const auto e = get_field<int>(j, "e");
    if (!j.contains("field")) usage("missing key \"field\"");
    ff::Field field = field_from_json(j.at("field"));
    if (field.p() != p) usage("field characteristic does not match \"p\"");
    std::optional<fermat::FermatParams> params;
    try {
        params.emplace(p, r, N, field);
    } catch (const Error& err) {
        usage(std::string("bad parameters: ") + err.what());
    }
    if (e < 0) usage("\"e\" must be non-negative");
    if (!j.contains("curve") || !j.at("curve").is_array()) usage("\"curve\" must be an array of coefficient arrays");
    const json& rows = j.at("curve");
    if (rows.size() != static_cast<std::size_t>(N) + 1) usage("\"curve\" must hold N+1 forms");
    std::vector<forms::Form> out;
    for (const json& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(e) + 1)
            usage("every form must have e+1 coefficients");
        std::vector<Fe> coeffs;
        for (const json& c : row) {
            if (!c.is_number_unsigned() || !field.contains(c.get<std::uint64_t>()))
                usage("coefficient is not a field element encoding");
            coeffs.push_back(c.get<std::uint64_t>());
        }
        const bool zero = std::all_of(coeffs.begin(), coeffs.end(), [](Fe c) { return c == 0; });
        out.push_back(zero ? forms::Form::zero(field, e) : forms::Form(field, std::move(coeffs)));
    }
    return {*params, e, std::move(out)};
}

fermat::Curve curve_from_json(const json& j) {
    CurveFile file = curve_file_from_json(j);
    return fermat::validate(file.params, std::move(file.forms));
}

json splitting_to_json(const splitbundle::SplittingType& splitting, const std::string& bundle) {
    return {{"schema", kSchema},
            {"summands", summands_json(splitting)},
            {"rank", splitting.rank()},
            {"degree", splitting.degree()},
            {"bundle", bundle}};
}

json report_to_json(const classify::ClassificationReport& report) {
    json j = {{"schema", kSchema},
              {"splitting_TX", summands_json(report.splitting_TX)},
              {"splitting_F", summands_json(report.splitting_F)},
              {"splitting_omega_P", summands_json(report.splitting_omega_P)},
              {"free", report.free},
              {"very_free", report.very_free},
              {"h0_TX", report.h0_TX},
              {"h1_TX", report.h1_TX},
              {"chi", report.chi}};
    if (report.in_forbidden_window) j["in_forbidden_window"] = *report.in_forbidden_window;
    return j;
}

json windows_to_json(const classify::WindowModel& model, int max_e) {
    json windows = json::array();
    for (const auto& [lo, hi] : model.windows) windows.push_back({lo, hi});
    return {{"schema", kSchema},
            {"pr", model.pr},
            {"N", model.N},
            {"convention", "(lo, hi]"},
            {"windows", windows},
            {"n0_bound", model.n0_bound},
            {"max", max_e},
            {"allowed", model.allowed_up_to(max_e)}};
}

json balanced_to_json(const classify::BalancedPrediction& prediction, int e, int N, int pr) {
    return {{"schema", kSchema},
            {"e", e},
            {"N", N},
            {"pr", pr},
            {"a", prediction.a},
            {"l", prediction.l},
            {"l_prime", prediction.l_prime},
            {"b1", prediction.b1},
            {"b2", prediction.b2},
            {"predicted_F_splitting", summands_json(prediction.predicted_F_splitting)}};
}

json tangent_to_json(const classify::TangentReport& report) {
    return {{"schema", kSchema},
            {"h0_TX", report.h0_TX},
            {"cone_dim", report.cone_dim},
            {"expected", report.expected},
            {"jump", report.jump}};
}

json probe_to_json(const classify::VanishingProbe& probe, const fermat::FermatParams& params, int e) {
    json j = {{"schema", kSchema},    {"p", params.p()},          {"r", params.r()},
              {"N", params.N()},      {"e", e},                   {"trials", probe.trials},
              {"exponents", probe.exponents}, {"all_vanish", probe.all_vanish}};
    if (probe.counterexample) {
        json forms = json::array();
        for (const auto& f : *probe.counterexample) forms.push_back(form_to_json(f, e));
        j["counterexample"] = forms;
    }
    if (probe.nonvanishing_exponent) j["nonvanishing_exponent"] = *probe.nonvanishing_exponent;
    return j;
}

json survey_row_to_json(const search::SurveyRow& row) {
    json curve = curve_to_json(row.curve);
    curve.erase("schema");
    json report = report_to_json(row.report);
    report.erase("schema");
    return {{"schema", kSchema}, {"e", row.e}, {"source", row.source}, {"curve", curve}, {"report", report}};
}

json error_to_json(ErrorKind kind, const std::string& message) {
    return {{"schema", kSchema}, {"kind", std::string(to_string(kind))}, {"message", message}};
}

std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q) {
    if (q < 2) fail(ErrorKind::InvalidArgument, "not a prime power: " + std::to_string(q));
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned r = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++r;
    }
    if (rest != 1) fail(ErrorKind::InvalidArgument, "not a prime power: " + std::to_string(q));
    return {p, r};
}

}  // namespace fermatrc::json_io
