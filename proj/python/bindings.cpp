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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fermatrc/classify.hpp"
#include "fermatrc/error.hpp"
#include "fermatrc/json_io.hpp"
#include "fermatrc/search.hpp"
#include "fermatrc/splitbundle.hpp"

namespace py = pybind11;
using namespace fermatrc;
using json_io::json;

namespace {

// JSON crosses the boundary as text; the Python side decodes it.
json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& err) {
        fail(ErrorKind::UsageError, err.what());
    }
}

fermat::FermatParams make_params(std::uint64_t p, unsigned r, int N, unsigned field_degree) {
    if (field_degree == 0) return fermat::FermatParams(p, r, N);
    return fermat::FermatParams(p, r, N, ff::Field(p, field_degree));
}

std::string splitting(const std::string& curve_text, const std::string& bundle) {
    const json j = parse(curve_text);
    if (bundle == "omega" || bundle == "tp") {
        const auto file = json_io::curve_file_from_json(j);
        if (bundle == "omega") return json_io::splitting_to_json(splitbundle::splitting_omega_P(file.forms), "omega_P").dump();
        return json_io::splitting_to_json(splitbundle::splitting_T_P(file.forms), "T_P").dump();
    }
    const auto curve = json_io::curve_from_json(j);
    if (bundle == "tx") return json_io::splitting_to_json(splitbundle::splitting_TX(curve), "TX").dump();
    if (bundle == "f") return json_io::splitting_to_json(splitbundle::splitting_F(curve), "F").dump();
    fail(ErrorKind::UsageError, "unknown bundle '" + bundle + "'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Splitting types of rational curves on Fermat hypersurfaces (JSON text interface)";

    static py::handle error_type = py::exception<Error>(m, "FermatError").release();
    py::register_exception_translator([](std::exception_ptr ptr) {
        try {
            if (ptr) std::rethrow_exception(ptr);
        } catch (const Error& err) {
            py::set_error(error_type, py::make_tuple(std::string(to_string(err.kind())), err.what()));
        }
    });

    m.def("verify", [](const std::string& curve_text) {
        const auto curve = json_io::curve_from_json(parse(curve_text));
        const auto rnc = fermat::is_rnc(curve);
        return json{{"schema", json_io::kSchema}, {"valid", true}, {"e", curve.e()}, {"N", curve.N()},
                    {"span_dim", rnc.span_dim}, {"is_rnc", rnc.is_rnc}}.dump();
    });
    m.def("splitting", &splitting, py::arg("curve"), py::arg("bundle"));
    m.def("classify", [](const std::string& curve_text) {
        return json_io::report_to_json(classify::classify(json_io::curve_from_json(parse(curve_text)))).dump();
    });
    m.def("tangent", [](const std::string& curve_text) {
        return json_io::tangent_to_json(classify::tangent_report(json_io::curve_from_json(parse(curve_text)))).dump();
    });
    m.def("windows", [](int pr, int max_e) {
        return json_io::windows_to_json(classify::forbidden_windows(pr), max_e).dump();
    }, py::arg("pr"), py::arg("max_e"));
    m.def("balanced_model", [](int e, int N, int pr) {
        return json_io::balanced_to_json(classify::balanced_model(e, N, pr), e, N, pr).dump();
    }, py::arg("e"), py::arg("N"), py::arg("pr"));
    m.def("probe_vanishing", [](std::uint64_t p, unsigned r, int N, int e, int trials, std::uint64_t seed) {
        const auto params = make_params(p, r, N, 0);
        return json_io::probe_to_json(classify::coefficient_vanishing_probe(params, e, trials, seed), params, e).dump();
    }, py::arg("p"), py::arg("r"), py::arg("N"), py::arg("e"), py::arg("trials") = 100, py::arg("seed") = 0);
    m.def("standard_lines", [](std::uint64_t p, unsigned r, int N, unsigned field_degree) {
        std::vector<std::string> out;
        for (const auto& c : search::enumerate_standard_lines(make_params(p, r, N, field_degree)))
            out.push_back(json_io::curve_to_json(c).dump());
        return out;
    }, py::arg("p"), py::arg("r"), py::arg("N"), py::arg("field_degree") = 0);
    m.def("survey", [](std::uint64_t p, unsigned r, int N, int e_min, int e_max, long budget, std::uint64_t seed,
                       unsigned field_degree) {
        std::vector<search::SurveyRow> rows;
        {
            py::gil_scoped_release release;
            rows = search::survey(make_params(p, r, N, field_degree), e_min, e_max, budget, seed);
        }
        std::vector<std::string> out;
        for (const auto& row : rows) out.push_back(json_io::survey_row_to_json(row).dump());
        return out;
    }, py::arg("p"), py::arg("r"), py::arg("N"), py::arg("e_min"), py::arg("e_max"), py::arg("budget"),
       py::arg("seed") = 0, py::arg("field_degree") = 0);
}
