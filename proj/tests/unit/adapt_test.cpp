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

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "qaoafs/adapt.hpp"

using namespace qaoafs;

namespace {

oracle::CMat mixer_matrix(const MixerOperator& m, std::size_t n) {
    const std::size_t dim = std::size_t{1} << n;
    oracle::CMat g = oracle::CMat::Zero(dim, dim);
    for (const auto& t : m.terms(n)) g += oracle::pauli_matrix(t, n);
    return g;
}

RunConfig exact_config() {
    RunConfig cfg;
    cfg.mode = EvalMode::Exact;
    return cfg;
}

}  // namespace

TEST(MixerPool, SizeFormula) {
    for (std::size_t n = 1; n <= 14; ++n) {
        const auto pool = build_mixer_pool(n);
        EXPECT_EQ(pool.size(), mixer_pool_size(n));
        EXPECT_EQ(pool.size(), 2 + 2 * n + 9 * n * (n - 1) / 2);
        std::set<std::string> names;
        for (const auto& m : pool.entries) names.insert(m.name());
        EXPECT_EQ(names.size(), pool.size()) << "duplicate entries for n=" << n;
    }
    EXPECT_EQ(mixer_pool_size(6), 149U);
}

TEST(MixerPool, FixedOrder) {
    const auto pool = build_mixer_pool(3);
    const std::vector<std::string> head{"GlobalX", "GlobalY", "X0", "Y0", "X1", "Y1", "X2", "Y2",
                                        "X0X1", "X0Y1", "X0Z1", "Y0X1", "Y0Y1", "Y0Z1", "Z0X1", "Z0Y1", "Z0Z1",
                                        "X0X2"};
    for (std::size_t k = 0; k < head.size(); ++k) EXPECT_EQ(pool.entries[k].name(), head[k]);
    EXPECT_EQ(pool.entries.back().name(), "Z1Z2");
}

TEST(MixerGradient, MatchesDenseCommutator) {
    std::mt19937_64 rng(7);
    const std::size_t n = 3;
    const auto h = to_ising(generate_instance(n, 5, 0.6));
    const oracle::CMat hm = oracle::ising_matrix(h);
    const double gamma0 = 0.01;
    const oracle::CMat u = oracle::expm(oracle::cd(0, -gamma0) * hm);
    const auto psi = oracle::random_state(n, rng);
    const oracle::CVec psi_e = oracle::to_eigen(psi);
    for (const auto& m : build_mixer_pool(n).entries) {
        const oracle::CMat a = mixer_matrix(m, n);
        const oracle::CMat comm = hm * a - a * hm;
        const oracle::CVec phi = u * psi_e;
        const oracle::cd v = oracle::cd(0, -1) * (phi.adjoint() * comm * phi)(0, 0);
        EXPECT_NEAR(v.imag(), 0.0, 1e-12);
        EXPECT_NEAR(mixer_gradient(psi, h, m, gamma0), std::abs(v.real()), 1e-10) << m.name();
    }
}

TEST(MixerGradient, MatchesCentralFiniteDifference) {
    std::mt19937_64 rng(8);
    const std::size_t n = 3;
    const auto h = to_ising(generate_instance(n, 9, 0.3));
    const oracle::CMat hm = oracle::ising_matrix(h);
    const double gamma0 = 0.01, step = 1e-5;
    const auto psi = oracle::random_state(n, rng);
    const oracle::CVec phi = oracle::expm(oracle::cd(0, -gamma0) * hm) * oracle::to_eigen(psi);
    for (const char* text : {"GlobalX", "GlobalY", "Y1", "X0Z2", "Y0Y2", "Z1X2"}) {
        const auto m = MixerOperator::parse(text);
        const oracle::CMat a = mixer_matrix(m, n);
        auto energy = [&](double beta) {
            const oracle::CVec s = oracle::expm(oracle::cd(0, -beta) * a) * phi;
            return (s.adjoint() * hm * s)(0, 0).real();
        };
        const double fd = (energy(step) - energy(-step)) / (2 * step);
        EXPECT_NEAR(mixer_gradient(psi, h, m, gamma0), std::abs(fd), 1e-6) << text;
    }
}

TEST(MixerGradient, ZeroOnBasisStates) {
    const auto h = to_ising(generate_instance(3, 2, 0.5));
    const auto pool = build_mixer_pool(3);
    StateVector basis(3);
    for (const auto& m : pool.entries) EXPECT_EQ(mixer_gradient(basis, h, m, 0.01), 0.0);
    const auto [chosen, g] = select_mixer(basis, h, pool, 0.01);
    EXPECT_EQ(chosen.name(), "GlobalX");
    EXPECT_EQ(g, 0.0);
}

TEST(SelectMixer, TiesGoToLowestIndex) {
    // On one qubit GlobalX == X0 and GlobalY == Y0, so the global entries win.
    std::mt19937_64 rng(9);
    const auto h = to_ising(generate_instance(1, 3, 0.0));
    const auto pool = build_mixer_pool(1);
    for (int t = 0; t < 20; ++t) {
        const auto psi = oracle::random_state(1, rng);
        const auto [chosen, g] = select_mixer(psi, h, pool, 0.01);
        EXPECT_TRUE(chosen.name() == "GlobalX" || chosen.name() == "GlobalY") << chosen.name();
        double best = 0.0;
        for (const auto& m : pool.entries) best = std::max(best, mixer_gradient(psi, h, m, 0.01));
        EXPECT_EQ(g, best);
    }
}

TEST(SelectMixer, PicksLargestGradient) {
    std::mt19937_64 rng(10);
    const auto h = to_ising(generate_instance(4, 4, 0.6));
    const auto pool = build_mixer_pool(4);
    const auto psi = oracle::random_state(4, rng);
    const auto [chosen, g] = select_mixer(psi, h, pool, 0.01);
    for (const auto& m : pool.entries) EXPECT_LE(mixer_gradient(psi, h, m, 0.01), g);
    EXPECT_EQ(mixer_gradient(psi, h, chosen, 0.01), g);
}

TEST(AdaptQaoa, RecordsSelectionsConsistently) {
    const auto inst = generate_instance(4, 3, 0.6);
    const auto h = to_ising(inst);
    const auto rec = run_adapt_qaoa(inst, 3, exact_config(), 4);
    ASSERT_EQ(rec.depth(), 3U);
    EXPECT_EQ(rec.algorithm, "adapt");
    const auto pool = build_mixer_pool(4);
    const QaoaAnsatz ansatz(h);
    std::vector<MixerOperator> mixers;
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto& prev = rec.layers[k - 1];
        const auto state = ansatz.prepare(prev.parameters, mixers);
        const auto [chosen, g] = select_mixer(state, h, pool, 0.01);
        EXPECT_EQ(rec.layers[k].mixer, chosen.name());
        EXPECT_NEAR(rec.layers[k].gradient, g, 1e-12);
        mixers.push_back(chosen);
        EXPECT_NEAR(ansatz.expectation(rec.layers[k].parameters, mixers), rec.layers[k].exact_cost, 1e-9);
        EXPECT_LE(rec.layers[k].ratio, 1.0 + 1e-9);
    }
    EXPECT_EQ(rec.mixers().size(), 3U);
}

TEST(AdaptQaoa, Deterministic) {
    const auto inst = generate_instance(4, 8, 0.2);
    const auto a = run_adapt_qaoa(inst, 2, exact_config(), 3);
    const auto b = run_adapt_qaoa(inst, 2, exact_config(), 3);
    EXPECT_EQ(a.final_parameters(), b.final_parameters());
    for (std::size_t k = 0; k < a.layers.size(); ++k) EXPECT_EQ(a.layers[k].mixer, b.layers[k].mixer);
}

TEST(AdaptQaoa, SingleQubitSolved) {
    QuboMatrix q(1);
    q.set(0, 0, 1.0);
    const auto rec = run_adapt_qaoa(FeatureSelectionInstance(q, 0.0, 1), 1, exact_config(), 2);
    EXPECT_NEAR(rec.layers.back().cost, -1.0, 1e-3);
}

TEST(AdaptQaoa, GlobalXOnlyPoolReproducesStandardQaoa) {
    const auto inst = generate_instance(5, 6, 0.6);
    const auto h = to_ising(inst);
    MixerPool only_x;
    only_x.n = 5;
    only_x.entries = {MixerOperator::global_x()};
    auto select = [&](const StateVector& state, const QaoaAnsatz&) { return select_mixer(state, h, only_x, 0.01); };
    const auto adapt = run_iterative_qaoa(inst, 3, exact_config(), 9, "adapt", select);
    const auto standard = run_standard_qaoa(inst, 3, exact_config(), 9);
    for (std::size_t k = 0; k <= 3; ++k) {
        EXPECT_EQ(adapt.layers[k].parameters, standard.layers[k].parameters);
        EXPECT_EQ(adapt.layers[k].cost, standard.layers[k].cost);
    }
}
