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
#include <stdexcept>

#include "oracles.hpp"
#include "qaoafs/problem.hpp"
#include "qaoafs/rng.hpp"

using namespace qaoafs;

namespace {

QuboMatrix make_q(std::size_t n, std::initializer_list<std::tuple<std::size_t, std::size_t, double>> entries) {
    QuboMatrix q(n);
    for (const auto& [i, j, v] : entries) q.set(i, j, v);
    return q;
}

}  // namespace

TEST(Rng, SplitmixMatchesReferenceSequence) {
    // First outputs of the reference splitmix64 with state 0.
    std::uint64_t s = 0;
    EXPECT_EQ(splitmix64(s), 0xE220A8397B1DCDAFULL);
    EXPECT_EQ(splitmix64(s), 0x6E789E6AA1B965F4ULL);
    EXPECT_EQ(splitmix64(s), 0x06C45D188009454FULL);
}

TEST(Rng, StreamsAreIndependent) {
    Xoshiro256 a(42, Stream::kInstance), b(42, Stream::kParameters), c(42, Stream::kInstance);
    const auto x = a(), y = b(), z = c();
    EXPECT_NE(x, y);
    EXPECT_EQ(x, z);
}

TEST(Rng, UniformStaysInHalfOpenInterval) {
    Xoshiro256 r(5);
    for (int k = 0; k < 10000; ++k) {
        const double u = r.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(DecisionVector, IndexRoundTrip) {
    for (std::uint64_t idx = 0; idx < 64; ++idx) {
        const auto x = DecisionVector::from_index(idx, 6);
        EXPECT_EQ(x.to_index(), idx);
        for (std::size_t i = 0; i < 6; ++i) EXPECT_EQ(x[i], ((idx >> i) & 1U) != 0);
    }
}

TEST(GenerateInstance, PopulatesEveryUpperTriangularEntry) {
    const auto inst = generate_instance(6, 7, 0.5);
    int diag = 0, off = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = i; j < 6; ++j) {
            const double v = inst.q().at(i, j);
            EXPECT_GT(v, 0.0);  // zero has probability 2^-53
            (i == j ? diag : off) += 1;
        }
    }
    EXPECT_EQ(diag, 6);
    EXPECT_EQ(off, 15);
}

TEST(GenerateInstance, DeterministicPerSeed) {
    EXPECT_EQ(generate_instance(6, 7, 0.2), generate_instance(6, 7, 0.2));
    EXPECT_FALSE(generate_instance(6, 7, 0.2) == generate_instance(6, 8, 0.2));
}

TEST(GenerateInstance, RowMajorDrawOrder) {
    // Independent regeneration: entries consume the instance stream in (i, j >= i) order.
    Xoshiro256 rng(11, Stream::kInstance);
    const auto inst = generate_instance(5, 11, 0.3);
    for (std::size_t i = 0; i < 5; ++i) {
        for (std::size_t j = i; j < 5; ++j) EXPECT_EQ(inst.q().at(i, j), rng.uniform(0.0, 1.0));
    }
}

TEST(GenerateInstance, EntriesWithinSupport) {
    const auto inst = generate_instance(14, 3, 0.6, {-2.0, 3.0});
    for (std::size_t i = 0; i < 14; ++i) {
        for (std::size_t j = i; j < 14; ++j) {
            EXPECT_GE(inst.q().at(i, j), -2.0);
            EXPECT_LT(inst.q().at(i, j), 3.0);
        }
    }
}

TEST(GenerateInstance, RejectsInvalidInput) {
    EXPECT_THROW(generate_instance(0, 1, 0.5), std::invalid_argument);
    EXPECT_THROW(generate_instance(4, 1, 1.5), std::invalid_argument);
    EXPECT_THROW(generate_instance(4, 1, -0.1), std::invalid_argument);
}

TEST(QuboMatrix, RejectsLowerTriangleAccess) {
    QuboMatrix q(3);
    EXPECT_THROW(q.at(2, 1), std::out_of_range);
    EXPECT_THROW(q.set(1, 0, 1.0), std::out_of_range);
    EXPECT_THROW(q.at(0, 3), std::out_of_range);
}

TEST(EvaluateQubo, HandExamples) {
    const auto q = make_q(2, {{0, 0, 1.0}, {1, 1, 3.0}, {0, 1, 2.0}});
    EXPECT_DOUBLE_EQ(evaluate_qubo(q, DecisionVector::from_index(3, 2)), 6.0);
    EXPECT_DOUBLE_EQ(evaluate_qubo(q, DecisionVector::from_index(0, 2)), 0.0);
    EXPECT_THROW(evaluate_qubo(q, DecisionVector::from_index(0, 3)), std::invalid_argument);
}

TEST(EvaluateQubo, MatchesTermByTermSum) {
    const auto inst = generate_instance(8, 21, 0.5);
    Xoshiro256 r(3);
    for (int t = 0; t < 50; ++t) {
        const std::uint64_t mask = r() & 0xFF;
        double want = 0.0;
        for (std::size_t i = 0; i < 8; ++i) {
            for (std::size_t j = i; j < 8; ++j) {
                if (((mask >> i) & 1U) && ((mask >> j) & 1U)) want += inst.q().at(i, j);
            }
        }
        EXPECT_NEAR(inst.q().evaluate(mask), want, 1e-12);
    }
}

TEST(EvaluateFeatureSelection, HandExamples) {
    const FeatureSelectionInstance inst(make_q(2, {{0, 0, 1.0}, {1, 1, 2.0}, {0, 1, 4.0}}), 0.5);
    EXPECT_DOUBLE_EQ(evaluate_feature_selection(inst, DecisionVector::from_index(3, 2)), 0.5);

    const auto zero = generate_instance(5, 9, 0.0);
    double diag = 0.0;
    for (std::size_t i = 0; i < 5; ++i) diag += zero.q().diag(i);
    EXPECT_NEAR(zero.evaluate(0b11111), -diag, 1e-12);

    const auto one = generate_instance(5, 9, 1.0);
    for (std::size_t i = 0; i < 5; ++i) EXPECT_EQ(one.evaluate(std::uint64_t{1} << i), 0.0);
}

TEST(EvaluateFeatureSelection, MaskAndVectorAgreeBitForBit) {
    const auto inst = generate_instance(9, 4, 0.37);
    for (std::uint64_t m = 0; m < 512; ++m) {
        ASSERT_EQ(inst.evaluate(m), inst.evaluate(DecisionVector::from_index(m, 9)));
        ASSERT_NEAR(inst.evaluate(m), oracle::feature_selection(inst, m), 1e-12);
    }
}

TEST(ToIsing, SingleVariable) {
    const double d = 0.8, a = 0.3;
    const auto h = to_ising(FeatureSelectionInstance(make_q(1, {{0, 0, d}}), a));
    EXPECT_NEAR(h.offset, -(1 - a) * d / 2, 1e-15);
    EXPECT_NEAR(h.linear[0], (1 - a) * d / 2, 1e-15);
    EXPECT_TRUE(h.couplings.empty());
}

TEST(ToIsing, SinglePair) {
    const double q = 1.7;
    const auto h = to_ising(FeatureSelectionInstance(make_q(2, {{0, 1, q}}), 1.0));
    EXPECT_NEAR(h.offset, q / 4, 1e-15);
    EXPECT_NEAR(h.linear[0], -q / 4, 1e-15);
    EXPECT_NEAR(h.linear[1], -q / 4, 1e-15);
    ASSERT_EQ(h.couplings.size(), 1U);
    EXPECT_NEAR(h.couplings[0].value, q / 4, 1e-15);
}

TEST(ToIsing, DenseMatrixDiagonalMatchesObjective) {
    for (std::uint64_t seed : {1, 2, 3}) {
        const auto inst = generate_instance(5, seed, 0.4);
        const auto h = to_ising(inst);
        const auto m = oracle::ising_matrix(h);
        EXPECT_NEAR((m - oracle::CMat(m.diagonal().asDiagonal())).norm(), 0.0, 1e-14);
        for (std::uint64_t x = 0; x < 32; ++x) {
            EXPECT_NEAR(m(x, x).real(), oracle::feature_selection(inst, x), 1e-12);
            EXPECT_NEAR(h.basis_energy(x), oracle::feature_selection(inst, x), 1e-12);
        }
    }
}

TEST(ToIsing, ExhaustiveEquivalenceTenQubits) {
    const auto inst = generate_instance(10, 17, 0.6);
    const auto h = to_ising(inst);
    const auto diag = h.diagonal();
    double worst = 0.0;
    for (std::uint64_t x = 0; x < 1024; ++x) {
        worst = std::max(worst, std::abs(diag[x] - oracle::feature_selection(inst, x)));
        ASSERT_EQ(diag[x], h.basis_energy(x));
    }
    EXPECT_LE(worst, 1e-9);
}

TEST(BasisEnergy, OffsetAndSingleField) {
    IsingHamiltonian h;
    h.n = 2;
    h.linear = {0.0, 0.0};
    h.offset = 5.0;
    for (std::uint64_t x = 0; x < 4; ++x) EXPECT_EQ(h.basis_energy(x), 5.0);
    h.linear[0] = 2.0;
    EXPECT_EQ(h.basis_energy(0b00), 7.0);
    EXPECT_EQ(h.basis_energy(0b01), 3.0);
    EXPECT_THROW(basis_energy(h, DecisionVector::from_index(0, 3)), std::invalid_argument);
}

TEST(ToIsing, EnergyRangeBracketsDiagonal) {
    const auto h = to_ising(generate_instance(7, 5, 0.2));
    const auto [lo, hi] = h.energy_range();
    for (double e : h.diagonal()) {
        EXPECT_GE(e, lo);
        EXPECT_LE(e, hi);
    }
}
