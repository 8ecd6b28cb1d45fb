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

#include "fermatrc/classify.hpp"

#include <string>

#include "fermatrc/error.hpp"
#include "fermatrc/linalg.hpp"
#include "fermatrc/rng.hpp"

namespace fermatrc::classify {

namespace {

bool is_prime_power(int n) {
    if (n < 2) return false;
    int p = 2;
    while (n % p != 0) ++p;
    while (n % p == 0) n /= p;
    return n == 1;
}

long euler_characteristic(const fermat::Curve& curve) {
    const long N = curve.N();
    return static_cast<long>(curve.e()) * (N + 1 - curve.params().d()) + N - 1;
}

// Nullity of the derivative of (coefficients of f) -> (coefficients of sum f_i^d).
// The column for a_ij is d * f_i^(d-1) * s^(e-j) t^j, built by plain powering.
long derivative_nullity(const fermat::Curve& curve) {
    const auto& k = curve.field();
    const int e = curve.e();
    const int d = curve.params().d();
    const ff::Fe dd = k.from_int(d);
    const std::size_t rows = static_cast<std::size_t>(d * e) + 1;
    linalg::Matrix jac(rows, curve.forms().size() * static_cast<std::size_t>(e + 1));
    std::size_t col = 0;
    for (const auto& f : curve.forms()) {
        const auto grad = forms::scalar_mul(dd, forms::pow(f, static_cast<unsigned>(d - 1)));
        for (int j = 0; j <= e; ++j, ++col) {
            const auto column = forms::mul(grad, forms::Form::monomial(k, e, j));
            for (std::size_t r = 0; r < rows; ++r) jac(r, col) = column.coeff(static_cast<int>(r));
        }
    }
    return static_cast<long>(jac.cols() - linalg::rank(k, std::move(jac)));
}

}  // namespace

ClassificationReport classify(const fermat::Curve& curve) {
    auto pipeline = splitbundle::tangent_pipeline(curve);
    ClassificationReport report;
    report.splitting_TX = std::move(pipeline.TX);
    report.splitting_F = std::move(pipeline.F);
    report.splitting_omega_P = splitbundle::splitting_omega_P(curve);
    report.free = report.splitting_TX.min() >= 0;
    report.very_free = report.splitting_TX.min() >= 1;
    report.h0_TX = report.splitting_TX.h0(0);
    report.h1_TX = report.splitting_TX.h1(0);
    report.chi = euler_characteristic(curve);
    if (report.chi != report.h0_TX - report.h1_TX) fail(ErrorKind::CertificateFailure, "chi != h0 - h1");
    if (curve.N() == curve.params().d()) report.in_forbidden_window = forbidden_windows(curve.params().pr()).forbidden(curve.e());
    return report;
}

bool WindowModel::forbidden(int e) const noexcept {
    for (const auto& [lo, hi] : windows) {
        if (lo < e && e <= hi) return true;
    }
    return false;
}

std::vector<int> WindowModel::allowed_up_to(int max_e) const {
    std::vector<int> out;
    for (int e = 1; e <= max_e; ++e) {
        if (!forbidden(e)) out.push_back(e);
    }
    return out;
}

WindowModel forbidden_windows(int pr) {
    if (pr < 3 || !is_prime_power(pr)) fail(ErrorKind::InvalidArgument, "pr must be a prime power >= 3");
    WindowModel model;
    model.pr = pr;
    model.N = pr + 1;
    for (int m = 0; m <= model.N - 3; ++m) model.windows.emplace_back(m * model.N, (m + 1) * (model.N - 1));
    model.n0_bound = pr * (pr - 1);
    return model;
}

BalancedPrediction balanced_model(int e, int N, int pr) {
    if (e < 1 || N < 3 || pr < 2) fail(ErrorKind::InvalidArgument, "balanced model needs e >= 1, N >= 3, pr >= 2");
    BalancedPrediction out;
    out.a = e + e / N;
    out.l_prime = (N + 1) * e - N * out.a;
    out.l = N - out.l_prime;
    out.b1 = -out.a * pr + e * (pr + 1);
    out.b2 = out.b1 - pr;
    std::vector<int> summands(static_cast<std::size_t>(out.l), out.b1);
    summands.insert(summands.end(), static_cast<std::size_t>(out.l_prime), out.b2);
    out.predicted_F_splitting = splitbundle::make_splitting(std::move(summands));
    return out;
}

TangentReport tangent_report(const fermat::Curve& curve) {
    TangentReport out;
    out.h0_TX = static_cast<long>(splitbundle::h0_TX_direct(curve, 0));
    out.cone_dim = derivative_nullity(curve);
    out.expected = euler_characteristic(curve);
    out.jump = out.h0_TX > out.expected;
    return out;
}

VanishingProbe coefficient_vanishing_probe(const fermat::FermatParams& params, int e, int trials, std::uint64_t seed) {
    if (e < 1 || trials < 1) fail(ErrorKind::InvalidArgument, "probe needs e >= 1 and trials >= 1");
    VanishingProbe out;
    for (int j = 1; j <= e; ++j) out.exponents.push_back(j * params.pr() - 1);
    SplitMix64 rng(seed);
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<forms::Form> tuple;
        for (int i = 0; i <= params.N(); ++i) tuple.push_back(random_form(params.field(), e, rng));
        ++out.trials;
        // Dehomogenized at s = 1, coefficient index j is the coefficient of t^j.
        const auto F = fermat::expand_F(params, tuple);
        for (int exponent : out.exponents) {
            if (F.coeff(exponent) != 0) {
                out.all_vanish = false;
                out.counterexample = std::move(tuple);
                out.nonvanishing_exponent = exponent;
                return out;
            }
        }
    }
    return out;
}

}  // namespace fermatrc::classify
