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

#include "fermatrc/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "fermatrc/error.hpp"
#include "fermatrc/linalg.hpp"
#include "fermatrc/rng.hpp"

namespace fermatrc::search {

namespace {

using ff::Fe;
using forms::Form;
using Key = std::vector<std::vector<Fe>>;

Key key_of(const Curve& curve) {
    Key key;
    for (const Form& f : curve.forms()) {
        std::vector<Fe> row(static_cast<std::size_t>(curve.e()) + 1, 0);
        std::copy(f.coeffs().begin(), f.coeffs().end(), row.begin());
        key.push_back(std::move(row));
    }
    return key;
}

std::vector<Form> random_tuple(const FermatParams& params, int e, SplitMix64& rng) {
    std::vector<Form> out;
    for (int i = 0; i <= params.N(); ++i) out.push_back(random_form(params.field(), e, rng));
    return out;
}

std::optional<Curve> try_validate(const FermatParams& params, std::vector<Form> forms) {
    try {
        return fermat::validate(params, std::move(forms));
    } catch (const Error&) {
        return std::nullopt;
    }
}

// Cheap pre-check before validate(): enough nonzero coordinates and on X.
bool lies_on_X(const FermatParams& params, const std::vector<Form>& forms) {
    const auto nonzero = std::count_if(forms.begin(), forms.end(), [](const Form& f) { return !f.is_zero(); });
    return nonzero >= 2 && fermat::expand_F(params, forms).is_zero();
}

// Base-point-free pair of degree k; draws again until one is found.
std::pair<Form, Form> random_base_point_free_pair(const ff::Field& field, int k, SplitMix64& rng) {
    for (;;) {
        Form pair[2] = {random_form(field, k, rng), random_form(field, k, rng)};
        if (pair[0].is_zero() || pair[1].is_zero()) continue;
        if (forms::form_gcd(pair).degree() == 0) return {pair[0], pair[1]};
    }
}

Curve random_automorphism_image(const Curve& curve, const std::vector<Fe>& units, SplitMix64& rng) {
    const auto n = curve.forms().size();
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<int>(i);
    for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(i + 1)]);
    std::vector<Fe> scalings(n);
    for (auto& s : scalings) s = units[rng.uniform(units.size())];
    return fermat::act_automorphism(curve, perm, scalings);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    SplitMix64 rng(seed ^ (a * 0x9e3779b97f4a7c15ULL) ^ (b * 0xc2b2ae3d27d4eb4fULL));
    return rng.next();
}

}  // namespace

Strategy parse_strategy(const std::string& name) {
    if (name == "lines") return Strategy::lines;
    if (name == "covers") return Strategy::covers;
    if (name == "alternating") return Strategy::alternating;
    if (name == "exhaustive") return Strategy::exhaustive;
    fail(ErrorKind::UsageError, "unknown strategy '" + name + "'");
}

std::string to_string(Strategy strategy) {
    switch (strategy) {
        case Strategy::lines: return "lines";
        case Strategy::covers: return "covers";
        case Strategy::alternating: return "alternating";
        case Strategy::exhaustive: return "exhaustive";
    }
    return "unknown";
}

std::vector<Curve> enumerate_standard_lines(const FermatParams& params) {
    const auto roots = fermat::roots_of_minus_one(params.field(), params.d());
    if (roots.empty()) fail(ErrorKind::NoRoots, "the field has no d-th roots of -1");
    const int n = params.N() + 1;
    std::map<Key, Curve> reps;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    for (Fe alpha : roots)
                        for (Fe beta : roots) {
                            const auto line = fermat::make_line(params, alpha, beta, {{a, b}, {c, d}});
                            auto rep = fermat::canonical_representative(line);
                            auto key = key_of(rep);
                            reps.try_emplace(std::move(key), std::move(rep));
                        }
                }
    std::vector<Curve> out;
    for (auto& [key, curve] : reps) out.push_back(std::move(curve));
    return out;
}

std::optional<Curve> alternating_solve(const SearchConfig& config) {
    const FermatParams& params = config.params;
    const auto& k = params.field();
    const int e = config.e;
    if (e < 1) fail(ErrorKind::InvalidArgument, "degree must be at least 1");
    const int block_degree = e * params.pr();
    const std::size_t width = static_cast<std::size_t>(e) + 1;
    SplitMix64 rng(config.seed);
    auto tuple = random_tuple(params, e, rng);
    for (long iter = 0; iter < config.max_iter; ++iter) {
        if (lies_on_X(params, tuple)) {
            if (auto curve = try_validate(params, tuple)) return curve;
        }
        // Columns (i, j): x_i's coefficient of t^j; rows: coefficients of sum_i B_i x_i.
        linalg::Matrix mat(static_cast<std::size_t>(params.d() * e) + 1, tuple.size() * width);
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            const Form block = frob_power(tuple[i], params.r());
            if (block.is_zero()) continue;
            for (std::size_t j = 0; j < width; ++j)
                for (int l = 0; l <= block_degree; ++l) mat(j + l, i * width + j) = block.coeff(l);
        }
        const auto basis = linalg::nullspace(k, std::move(mat));
        std::vector<Fe> x(tuple.size() * width, 0);
        for (const auto& v : basis) k.sub_scaled(x, v, k.neg(rng.uniform(k.q())));
        if (std::all_of(x.begin(), x.end(), [](Fe c) { return c == 0; })) {
            tuple = random_tuple(params, e, rng);
            continue;
        }
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            tuple[i] = Form(k, std::vector<Fe>(x.begin() + static_cast<std::ptrdiff_t>(i * width),
                                               x.begin() + static_cast<std::ptrdiff_t>((i + 1) * width)));
        }
    }
    return std::nullopt;
}

std::vector<Curve> random_cover_family(const SearchConfig& config, const Curve& base, int count) {
    if (config.e % base.e() != 0)
        fail(ErrorKind::DegreeNotDivisible, "target degree " + std::to_string(config.e) +
                                                " is not a multiple of " + std::to_string(base.e()));
    const int k = config.e / base.e();
    SplitMix64 rng(config.seed);
    std::vector<Curve> out;
    while (static_cast<int>(out.size()) < count) {
        const auto [phi0, phi1] = random_base_point_free_pair(base.field(), k, rng);
        out.push_back(fermat::compose_cover(base, phi0, phi1));
    }
    return out;
}

std::optional<std::uint64_t> exhaustive_space_size(const FermatParams& params, int e) {
    const std::uint64_t q = params.field().q();
    const std::uint64_t n = static_cast<std::uint64_t>(params.N() + 1) * static_cast<std::uint64_t>(e + 1);
    // (q^n - 1) / (q - 1) = 1 + q + ... + q^(n-1)
    std::uint64_t total = 0, power = 1;
    for (std::uint64_t i = 0; i < n; ++i) {
        if (__builtin_add_overflow(total, power, &total)) return std::nullopt;
        if (i + 1 < n && __builtin_mul_overflow(power, q, &power)) return std::nullopt;
    }
    return total;
}

std::vector<Curve> exhaustive_scan(const SearchConfig& config) {
    const FermatParams& params = config.params;
    const auto& k = params.field();
    const int e = config.e;
    if (e < 1) fail(ErrorKind::InvalidArgument, "degree must be at least 1");
    const auto size = exhaustive_space_size(params, e);
    if (!size || *size > kExhaustiveLimit)
        fail(ErrorKind::SearchSpaceTooLarge, "normalized coefficient space exceeds 2^32 tuples");
    const std::size_t width = static_cast<std::size_t>(e) + 1;
    const std::size_t n = static_cast<std::size_t>(params.N() + 1) * width;
    std::map<Key, Curve> found;
    long examined = 0;
    std::vector<Fe> coeffs(n, 0);
    for (std::size_t lead = 0; lead < n && examined < config.max_iter; ++lead) {
        std::fill(coeffs.begin(), coeffs.end(), 0);
        coeffs[lead] = 1;
        for (;;) {
            if (examined++ >= config.max_iter) break;
            std::vector<Form> tuple;
            for (std::size_t i = 0; i <= static_cast<std::size_t>(params.N()); ++i)
                tuple.emplace_back(k, std::vector<Fe>(coeffs.begin() + static_cast<std::ptrdiff_t>(i * width),
                                                      coeffs.begin() + static_cast<std::ptrdiff_t>((i + 1) * width)));
            if (lies_on_X(params, tuple)) {
                if (auto curve = try_validate(params, std::move(tuple))) {
                    auto rep = fermat::canonical_representative(*curve);
                    auto key = key_of(rep);
                    found.try_emplace(std::move(key), std::move(rep));
                }
            }
            // Odometer over the positions after the leading 1.
            std::size_t pos = n;
            while (pos > lead + 1) {
                --pos;
                if (++coeffs[pos] < k.q()) break;
                coeffs[pos] = 0;
                if (pos == lead + 1) pos = lead;  // wrapped every position
            }
            if (pos <= lead) break;
        }
    }
    std::vector<Curve> out;
    for (auto& [key, curve] : found) out.push_back(std::move(curve));
    return out;
}

std::vector<Curve> run(const SearchConfig& config, const std::optional<Curve>& base) {
    switch (config.strategy) {
        case Strategy::lines:
            if (config.e != 1) fail(ErrorKind::InvalidArgument, "the lines strategy only produces degree 1");
            return enumerate_standard_lines(config.params);
        case Strategy::covers: {
            const Curve b = base ? *base : enumerate_standard_lines(config.params).front();
            return random_cover_family(config, b, static_cast<int>(config.max_iter));
        }
        case Strategy::alternating: {
            auto found = alternating_solve(config);
            if (!found) return {};
            return {*found};
        }
        case Strategy::exhaustive: return exhaustive_scan(config);
    }
    return {};
}

std::vector<SurveyRow> survey(const FermatParams& params, int e_min, int e_max, long budget, std::uint64_t seed,
                              unsigned workers) {
    if (e_min < 1 || e_max < e_min) fail(ErrorKind::InvalidArgument, "empty degree range");
    if (budget < 1) fail(ErrorKind::InvalidArgument, "budget must be positive");
    const long per_degree = std::max(1L, budget / (e_max - e_min + 1));
    const auto units = fermat::roots_of_unity(params.field(), params.d());

    struct Job {
        int e;
        std::string source;
        Curve curve;
    };
    std::vector<Job> jobs;
    std::vector<Curve> lines;
    try {
        lines = enumerate_standard_lines(params);
    } catch (const Error& err) {
        if (err.kind() != ErrorKind::NoRoots) throw;
    }
    // Curves that covers may be built on, by degree.
    std::map<int, std::vector<Curve>> pool;
    for (const Curve& line : lines) pool[1].push_back(line);

    for (int e = e_min; e <= e_max; ++e) {
        std::vector<Job> batch;
        SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(e), 0));
        const int attempts = static_cast<int>(std::min<long>(per_degree, 4));
        for (int a = 0; a < attempts; ++a) {
            SearchConfig config{params, e, mix_seed(seed, static_cast<std::uint64_t>(e), 1 + a), 200,
                                Strategy::alternating};
            if (auto curve = alternating_solve(config)) {
                pool[e].push_back(*curve);
                batch.push_back({e, "alternating", *curve});
            }
        }
        const auto size = exhaustive_space_size(params, e);
        if (size && *size <= (1u << 12)) {
            SearchConfig config{params, e, seed, static_cast<long>(*size), Strategy::exhaustive};
            for (auto& curve : exhaustive_scan(config)) {
                pool[e].push_back(curve);
                batch.push_back({e, "exhaustive", std::move(curve)});
            }
        }
        if (e == 1) {
            for (const Curve& line : lines) batch.push_back({e, "lines", line});
            while (!lines.empty() && static_cast<long>(batch.size()) < per_degree) {
                const Curve& line = lines[rng.uniform(lines.size())];
                const auto [phi0, phi1] = random_base_point_free_pair(params.field(), 1, rng);
                auto image = random_automorphism_image(fermat::compose_cover(line, phi0, phi1), units, rng);
                batch.push_back({e, "lines", std::move(image)});
            }
        }
        std::vector<const Curve*> bases;
        for (const auto& [deg, curves] : pool) {
            if (deg < e && e % deg == 0)
                for (const Curve& c : curves) bases.push_back(&c);
        }
        while (!bases.empty() && static_cast<long>(batch.size()) < per_degree) {
            const Curve& base = *bases[rng.uniform(bases.size())];
            SearchConfig config{params, e, rng.next(), 1, Strategy::covers};
            batch.push_back({e, "covers", random_cover_family(config, base, 1).front()});
        }
        if (static_cast<long>(batch.size()) > per_degree) batch.erase(batch.begin() + per_degree, batch.end());
        for (auto& job : batch) jobs.push_back(std::move(job));
    }

    std::vector<std::optional<classify::ClassificationReport>> reports(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                reports[i] = classify::classify(jobs[i].curve);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<SurveyRow> rows;
    rows.reserve(jobs.size());
    for (std::size_t i = 0; i < jobs.size(); ++i)
        rows.push_back({jobs[i].e, std::move(jobs[i].source), std::move(jobs[i].curve), std::move(*reports[i])});
    return rows;
}

}  // namespace fermatrc::search
