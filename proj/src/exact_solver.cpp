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

#include "qaoafs/exact_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qaoafs {

std::string to_string(SolveMethod m) { return m == SolveMethod::BruteForce ? "brute-force" : "branch-and-bound"; }

namespace {

struct Candidate {
    double value = std::numeric_limits<double>::infinity();
    std::uint64_t mask = 0;

    void offer(double v, std::uint64_t m) {
        if (v < value || (v == value && m < mask)) {
            value = v;
            mask = m;
        }
    }
};

Candidate scan_range(const FeatureSelectionInstance& inst, std::uint64_t begin, std::uint64_t end) {
    Candidate best;
    for (std::uint64_t m = begin; m < end; ++m) best.offer(inst.evaluate(m), m);
    return best;
}

}  // namespace

ExactSolution brute_force_min(const FeatureSelectionInstance& inst) {
    const std::size_t n = inst.size();
    if (n > kBruteForceMaxFeatures) {
        throw std::invalid_argument("brute force supports at most " + std::to_string(kBruteForceMaxFeatures) +
                                    " features, got " + std::to_string(n));
    }
    const std::uint64_t total = std::uint64_t{1} << n;

    // Blocks are reduced in index order with the same tie rule, so the result
    // does not depend on the thread count.
    const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
    const std::uint64_t blocks = (n >= 16) ? std::min<std::uint64_t>(hw, total) : 1;
    std::vector<Candidate> partial(blocks);
    if (blocks == 1) {
        partial[0] = scan_range(inst, 0, total);
    } else {
        std::vector<std::jthread> workers;
        for (std::uint64_t b = 0; b < blocks; ++b) {
            workers.emplace_back([&, b] {
                partial[b] = scan_range(inst, total * b / blocks, total * (b + 1) / blocks);
            });
        }
    }
    Candidate best;
    for (const auto& c : partial) best.offer(c.value, c.mask);

    ExactSolution sol;
    sol.minimizer = DecisionVector::from_index(best.mask, n);
    sol.value = best.value;
    sol.method = SolveMethod::BruteForce;
    sol.gap_at_termination = 0.0;
    sol.nodes = total;
    return sol;
}

double compute_gap(double z_best, double z_bound) {
    if (std::abs(z_best) < 1e-12) throw std::domain_error("optimality gap undefined: |z_best| < 1e-12");
    return std::abs(z_bound - z_best) / std::abs(z_best);
}

namespace {

class BoundModel {
public:
    explicit BoundModel(const FeatureSelectionInstance& inst) : n_(inst.size()), quad_(n_ * n_, 0.0), lin_(n_) {
        const double a = inst.alpha();
        for (std::size_t i = 0; i < n_; ++i) {
            lin_[i] = -(1.0 - a) * inst.q().diag(i);
            for (std::size_t j = i + 1; j < n_; ++j) quad_[i * n_ + j] = a * inst.q().offdiag(i, j);
        }
    }

    // Variables [0, depth) are decided with values from `mask`.
    double bound(std::size_t depth, std::uint64_t mask) const {
        auto decided_one = [&](std::size_t i) { return i < depth && ((mask >> i) & 1U); };
        auto alive = [&](std::size_t i) { return i >= depth || ((mask >> i) & 1U); };
        double b = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i < depth) {
                if (decided_one(i)) b += lin_[i];
            } else {
                b += std::min(0.0, lin_[i]);
            }
            if (!alive(i)) continue;
            for (std::size_t j = i + 1; j < n_; ++j) {
                if (!alive(j)) continue;
                const double c = quad_[i * n_ + j];
                b += (j < depth) ? c : std::min(0.0, c);
            }
        }
        return b;
    }

private:
    std::size_t n_;
    std::vector<double> quad_;
    std::vector<double> lin_;
};

// Steepest single-flip descent from the empty selection.
Candidate greedy_incumbent(const FeatureSelectionInstance& inst) {
    Candidate cur;
    cur.value = inst.evaluate(std::uint64_t{0});
    cur.mask = 0;
    while (true) {
        Candidate next = cur;
        for (std::size_t i = 0; i < inst.size(); ++i) {
            const std::uint64_t m = cur.mask ^ (std::uint64_t{1} << i);
            const double v = inst.evaluate(m);
            if (v < next.value) {
                next.value = v;
                next.mask = m;
            }
        }
        if (next.mask == cur.mask) return cur;
        cur = next;
    }
}

struct Node {
    std::size_t depth;
    std::uint64_t mask;
    double bound;
};

}  // namespace

ExactSolution branch_and_bound_min(const FeatureSelectionInstance& inst, double gap_tol) {
    const std::size_t n = inst.size();
    if (n > kBranchAndBoundMaxFeatures) {
        throw std::invalid_argument("branch and bound supports at most " +
                                    std::to_string(kBranchAndBoundMaxFeatures) + " features, got " +
                                    std::to_string(n));
    }
    if (!(gap_tol >= 0.0)) throw std::invalid_argument("gap tolerance must be >= 0");

    const BoundModel model(inst);
    Candidate best = greedy_incumbent(inst);

    std::vector<Node> stack{{0, 0, model.bound(0, 0)}};
    std::uint64_t nodes = 0;
    double gap = 0.0;

    while (!stack.empty()) {
        if (std::abs(best.value) >= 1e-12) {
            double z_bound = best.value;
            for (const auto& nd : stack) z_bound = std::min(z_bound, nd.bound);
            const double g = compute_gap(best.value, z_bound);
            if (g <= gap_tol) {
                gap = g;
                break;
            }
        }
        const Node node = stack.back();
        stack.pop_back();
        ++nodes;

        if (node.bound >= best.value - gap_tol * std::abs(best.value)) continue;
        if (node.depth == n) {
            best.offer(inst.evaluate(node.mask), node.mask);
            continue;
        }
        const std::uint64_t one = node.mask | (std::uint64_t{1} << node.depth);
        Node c0{node.depth + 1, node.mask, model.bound(node.depth + 1, node.mask)};
        Node c1{node.depth + 1, one, model.bound(node.depth + 1, one)};
        // Explore the child with the smaller bound first.
        if (c0.bound < c1.bound) std::swap(c0, c1);
        stack.push_back(c0);
        stack.push_back(c1);
    }

    ExactSolution sol;
    sol.minimizer = DecisionVector::from_index(best.mask, n);
    sol.value = best.value;
    sol.method = SolveMethod::BranchAndBound;
    sol.gap_at_termination = gap;
    sol.nodes = nodes;
    return sol;
}

}  // namespace qaoafs
