// Copyright 2026 The qaoafs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit if any fail.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qaoafs/adapt.hpp"
#include "qaoafs/device.hpp"
#include "qaoafs/exact_solver.hpp"
#include "qaoafs/qaoa.hpp"
#include "qaoafs/routing.hpp"

using namespace qaoafs;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;
    std::function<Outcome()> run;
};

std::string fmt_g(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

oracle::CMat generator(const MixerOperator& m, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    oracle::CMat g = oracle::CMat::Zero(dim, dim);
    for (const auto& t : m.terms(n)) g += oracle::pauli_matrix(t, n);
    return g;
}

// Phase-insensitive overlap |tr(U^dag V)|^2 / d^2.
double unitary_fidelity(const oracle::CMat& u, const oracle::CMat& v) {
    const double d = static_cast<double>(u.rows());
    return std::norm((u.adjoint() * v).trace()) / (d * d);
}

Outcome ising_equivalence() {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> alpha(0.0, 1.0);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 10);
        const auto inst = generate_instance(n, 1000 + t, alpha(rng), t % 2 ? UniformEntries{-1.0, 1.0} : UniformEntries{});
        const auto diag = to_ising(inst).diagonal();
        for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
            worst = std::max(worst, std::abs(diag[x] - oracle::feature_selection(inst, x)));
        }
    }
    return {worst <= 1e-9, "max |<x|H|x> - f(x)| = " + fmt_g(worst) + " over 200 instances (tol 1e-9)"};
}

Outcome pool_size() {
    std::string bad;
    for (std::size_t n = 1; n <= 14; ++n) {
        std::size_t pairs = 0;
        for (std::size_t i = 0; i < n; ++i) pairs += n - 1 - i;
        const std::size_t want = 2 + 2 * n + 9 * pairs;
        if (build_mixer_pool(n).size() != want) bad += " n=" + std::to_string(n);
    }
    return {bad.empty(), bad.empty() ? "pool size matches 2+2n+9n(n-1)/2 for n=1..14" : "mismatch at" + bad};
}

Outcome gradient_vs_fd() {
    std::mt19937_64 rng(202);
    const double gamma0 = 0.01, step = 1e-4;
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 6);
        const auto h = to_ising(generate_instance(n, 2000 + t, 0.1 * static_cast<double>(t % 10)));
        const auto pool = build_mixer_pool(n);
        const auto& m = pool.entries[rng() % pool.size()];
        const auto psi = oracle::random_state(n, rng);

        const oracle::CMat hm = oracle::ising_matrix(h);
        const oracle::CVec phi = oracle::expm(oracle::cd(0, -gamma0) * hm) * oracle::to_eigen(psi);
        const oracle::CMat a = generator(m, n);
        auto energy = [&](double beta) {
            const oracle::CVec s = oracle::expm(oracle::cd(0, -beta) * a) * phi;
            return (s.adjoint() * hm * s)(0, 0).real();
        };
        const double fd = std::abs((energy(step) - energy(-step)) / (2 * step));
        const double g = mixer_gradient(psi, h, m, gamma0);
        // Relative error, with an absolute floor for vanishing gradients.
        worst = std::max(worst, std::abs(g - fd) / std::max(fd, 1e-4));
    }
    return {worst <= 1e-5, "max relative deviation = " + fmt_g(worst) + " over 100 pairs (tol 1e-5)"};
}

Outcome circuits_vs_matrices() {
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> ang(-3.2, 3.2), alpha(0.0, 1.0);
    double worst = 1.0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 1 + static_cast<std::size_t>(t % 3);
        const auto h = to_ising(generate_instance(n, 3000 + t, alpha(rng), UniformEntries{-1.0, 1.0}));
        const double gamma = ang(rng), beta = ang(rng);
        const oracle::CMat uc = oracle::expm(oracle::cd(0, -gamma) * oracle::ising_matrix(h));
        for (auto form : {CircuitForm::Rotations, CircuitForm::Native}) {
            worst = std::min(worst, unitary_fidelity(uc, oracle::circuit_matrix(build_cost_circuit(h, gamma, form))));
        }
        const auto pool = build_mixer_pool(n);
        const auto& m = pool.entries[rng() % pool.size()];
        const oracle::CMat um = oracle::expm(oracle::cd(0, -beta) * generator(m, n));
        worst = std::min(worst, unitary_fidelity(um, oracle::circuit_matrix(build_mixer_circuit(m, beta, n))));
    }
    return {worst >= 1.0 - 1e-10, "min fidelity = 1 - " + fmt_g(1.0 - worst) + " over 50 draws (tol 1e-10)"};
}

Outcome exact_solvers() {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> alpha(0.0, 1.0);
    double worst_exact = 0.0, worst_gap = 0.0;
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 13);
        const auto inst = generate_instance(n, 4000 + t, alpha(rng), t % 2 ? UniformEntries{-1.0, 1.0} : UniformEntries{});
        const double bf = brute_force_min(inst).value;
        const double scale = std::max(1.0, std::abs(bf));
        worst_exact = std::max(worst_exact, std::abs(branch_and_bound_min(inst, 0.0).value - bf) / scale);
        if (std::abs(bf) > 1e-12) {
            worst_gap = std::max(worst_gap, std::abs(branch_and_bound_min(inst, 1e-4).value - bf) / std::abs(bf));
        }
    }
    const bool ok = worst_exact <= 1e-12 && worst_gap <= 1e-4;
    return {ok, "gap 0: max deviation " + fmt_g(worst_exact) + "; gap 1e-4: max relative error " + fmt_g(worst_gap) +
                    " over 50 instances"};
}

Outcome routing_soundness() {
    const std::vector<std::pair<std::string, Topology>> tops{{"heavy-hex", Topology::heavy_hex_127()},
                                                             {"square", Topology::square_lattice(11, 12)},
                                                             {"all-to-all", Topology::all_to_all(127)}};
    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> ang(0.0, 3.0);
    double worst = 1.0;
    std::size_t circuits = 0, off_edge = 0;
    for (std::size_t n = 2; n <= 8; ++n) {
        const auto h = to_ising(generate_instance(n, 5000 + n, 0.6));
        const auto pool = build_mixer_pool(n);
        std::vector<MixerOperator> mixers{MixerOperator::global_x(), pool.entries[rng() % pool.size()]};
        std::vector<double> params(4);
        for (auto& v : params) v = ang(rng);
        for (auto form : {CircuitForm::Rotations, CircuitForm::Native}) {
            const auto c = build_qaoa_circuit(h, params, mixers, form);
            for (const auto& [name, t] : tops) {
                const auto r = route_circuit(c, t);
                for (const auto& g : r.physical.gates()) {
                    if (g.is_two_qubit() && !t.adjacent(g.qubits[0], g.qubits[1])) ++off_edge;
                }
                const auto check = verify_routing(c, r, t);
                if (!check.edges_ok) ++off_edge;
                worst = std::min(worst, check.fidelity);
                ++circuits;
            }
        }
    }
    const bool ok = off_edge == 0 && worst >= 1.0 - 1e-9;
    return {ok, std::to_string(circuits) + " routed circuits, " + std::to_string(off_edge) +
                    " off-edge gates, min fidelity = 1 - " + fmt_g(1.0 - worst) + " (tol 1e-9)"};
}

Outcome estimator_arithmetic() {
    const auto b = ibm_brisbane_calibration();
    const auto q = quantinuum_h2_calibration();
    std::vector<std::string> bad;
    auto expect = [&](const std::string& what, double got, double want) {
        if (std::abs(got - want) > 1e-12 * std::max(1.0, std::abs(want))) {
            bad.push_back(what + "=" + fmt_g(got) + " want " + fmt_g(want));
        }
    };
    DepthProfile d;
    d.d1 = 2;
    d.d2 = 3;
    expect("T_layer(brisbane)", estimate_layer_time(d, b, 1, 1), 2.1);
    expect("T_layer(H2)", estimate_layer_time(d, q, 1, 1), 1050.0);
    expect("T_layer(N=1500,S=1e4)", estimate_layer_time(d, b, 1500, 10000), 2.1 * 1.5e7);
    DepthProfile e1;
    e1.n1 = 1;
    expect("E_tot(N1=1)", estimate_error_probability(e1, q), 3.0e-5);
    DepthProfile e2;
    e2.n2 = 2;
    e2.nm = 1;
    expect("E_tot(N2=2,Nm=1)", estimate_error_probability(e2, q), 1.0 - 0.999 * 0.999 * 0.999);
    expect("E_tot(zero rates)", estimate_error_probability(DepthProfile{4, 4, 50, 50, 6}, CalibrationData{1, 1, 0, 0, 0}),
           0.0);
    Circuit rz(4);
    for (std::size_t k = 0; k < 4; ++k) rz.add(Gate::rz(k, 0.3 * static_cast<double>(k + 1)));
    const auto prz = compute_depth_profile(rz);
    expect("T_layer(RZ only)", estimate_layer_time(prz, b, 1500, 10000), 0.0);
    expect("E_tot(RZ only)", estimate_error_probability(prz, b), 0.0);
    std::string detail = "T_layer 2.1 us / 1050 us, E_tot 3e-5 / 1-0.999^3, zero-rate and RZ-only cases";
    for (const auto& s : bad) detail += "; " + s;
    return {bad.empty(), detail};
}

Outcome time_ordering() {
    std::string detail;
    bool ok = true;
    for (std::size_t n : {6, 10}) {
        const auto h = to_ising(generate_instance(n, 1, 0.6));
        std::map<std::string, double> t;
        for (const auto& dev : builtin_device_profiles()) t[dev.name] = estimate_resources(h, dev).total_time_s;
        const bool row = t["ibm_brisbane_all_to_all"] < t["ibm_brisbane_square"] &&
                         t["ibm_brisbane_square"] < t["ibm_brisbane"] && t["ibm_brisbane"] < t["quantinuum_h2"];
        ok = ok && row;
        detail += "n=" + std::to_string(n) + ": a2a " + fmt_g(t["ibm_brisbane_all_to_all"]) + " s < square " +
                  fmt_g(t["ibm_brisbane_square"]) + " s < heavy-hex " + fmt_g(t["ibm_brisbane"]) + " s < H2 " +
                  fmt_g(t["quantinuum_h2"]) + " s" + (row ? "" : " [violated]") + (n == 6 ? "; " : "");
    }
    return {ok, detail};
}

Outcome error_ordering() {
    const auto h = to_ising(generate_instance(6, 1, 0.6));
    std::map<std::string, double> e;
    for (const auto& dev : builtin_device_profiles()) e[dev.name] = estimate_resources(h, dev).error_probability;
    const bool ok = e["quantinuum_h2"] < e["ibm_brisbane_all_to_all"] &&
                    e["ibm_brisbane_all_to_all"] < e["ibm_brisbane_square"] &&
                    e["ibm_brisbane_square"] < e["ibm_brisbane"];
    return {ok, "H2 " + fmt_g(e["quantinuum_h2"]) + " < a2a " + fmt_g(e["ibm_brisbane_all_to_all"]) + " < square " +
                    fmt_g(e["ibm_brisbane_square"]) + " < heavy-hex " + fmt_g(e["ibm_brisbane"])};
}

Outcome algorithmic_trend() {
    RunConfig rc;
    rc.mode = EvalMode::Exact;
    double sum_std = 0.0, sum_adapt = 0.0, max_r = -INFINITY;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto inst = generate_instance(6, seed, 0.6);
        rc.c_exact = brute_force_min(inst).value;
        const auto s = run_standard_qaoa(inst, 15, rc, seed);
        const auto a = run_adapt_qaoa(inst, 15, rc, seed);
        for (const auto* rec : {&s, &a}) {
            for (const auto& l : rec->layers) max_r = std::max(max_r, l.ratio);
        }
        sum_std += s.layers.back().ratio;
        sum_adapt += a.layers.back().ratio;
    }
    const double ms = sum_std / 10, ma = sum_adapt / 10;
    const bool ok = ma >= ms && max_r <= 1.0 + 1e-9;
    return {ok, "mean r15 adapt = " + fmt_g(ma) + ", standard = " + fmt_g(ms) + ", max r_k = 1 - " +
                    fmt_g(1.0 - max_r)};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Ising equivalence", 60, ising_equivalence},
        {2, "Mixer pool size", 1, pool_size},
        {3, "Gradient criterion vs finite differences", 60, gradient_vs_fd},
        {4, "Circuits vs matrix exponentials", 60, circuits_vs_matrices},
        {5, "Exact solver consistency", 120, exact_solvers},
        {6, "Routing soundness", 120, routing_soundness},
        {7, "Estimator arithmetic", 1, estimator_arithmetic},
        {8, "Time ordering across devices", 300, time_ordering},
        {9, "Error ordering across devices", 60, error_ordering},
        {10, "ADAPT vs standard at 15 layers", 1800, algorithmic_trend},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = secs < c.time_limit_s;
        const bool pass = o.ok && in_time;
        if (!pass) ++failed;
        std::printf("%s [%d] %s: %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    o.detail.c_str(), secs, c.time_limit_s, in_time ? "" : ", exceeded");
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
