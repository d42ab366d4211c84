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

#include "qaoafs/powell.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace qaoafs {

void OptimizerConfig::validate() const {
    if (max_iterations < 1) throw std::invalid_argument("optimizer: max_iterations must be >= 1");
    if (!(x_tolerance > 0.0) || !(f_tolerance > 0.0)) throw std::invalid_argument("optimizer: tolerances must be > 0");
    if (!(bracket_grow_limit > 1.0)) throw std::invalid_argument("optimizer: bracket_grow_limit must be > 1");
}

namespace {

struct BudgetExhausted {};

// Counts calls, tracks the best point seen, and enforces the evaluation cap.
class CountingObjective {
public:
    CountingObjective(const Objective& f, std::size_t cap) : f_(f), cap_(cap) {}

    double operator()(const std::vector<double>& x) {
        if (evaluations_ >= cap_) throw BudgetExhausted{};
        ++evaluations_;
        double v = f_(x);
        if (!std::isfinite(v)) v = std::numeric_limits<double>::infinity();
        if (best_x_.empty() || v < best_f_) {
            best_f_ = v;
            best_x_ = x;
        }
        return v;
    }

    std::size_t evaluations() const { return evaluations_; }
    double best_value() const { return best_f_; }
    const std::vector<double>& best_point() const { return best_x_; }

private:
    const Objective& f_;
    std::size_t cap_;
    std::size_t evaluations_ = 0;
    double best_f_ = std::numeric_limits<double>::infinity();
    std::vector<double> best_x_;
};

struct Bracket {
    double xa, xb, xc, fa, fb, fc;
};

template <typename F>
Bracket bracket_minimum(F&& f, double grow_limit) {
    constexpr double kGold = 1.618034;
    constexpr double kTiny = 1e-21;
    constexpr int kMaxIter = 1000;

    double xa = 0.0, xb = 1.0;
    double fa = f(xa), fb = f(xb);
    if (fa < fb) {
        std::swap(xa, xb);
        std::swap(fa, fb);
    }
    double xc = xb + kGold * (xb - xa);
    double fc = f(xc);
    int iter = 0;
    while (fc < fb) {
        const double tmp1 = (xb - xa) * (fb - fc);
        const double tmp2 = (xb - xc) * (fb - fa);
        const double val = tmp2 - tmp1;
        const double denom = std::abs(val) < kTiny ? 2.0 * kTiny : 2.0 * val;
        double w = xb - ((xb - xc) * tmp2 - (xb - xa) * tmp1) / denom;
        const double wlim = xb + grow_limit * (xc - xb);
        if (++iter > kMaxIter) break;
        double fw;
        if ((w - xc) * (xb - w) > 0.0) {
            fw = f(w);
            if (fw < fc) {
                xa = xb;
                xb = w;
                fa = fb;
                fb = fw;
                break;
            }
            if (fw > fb) {
                xc = w;
                fc = fw;
                break;
            }
            w = xc + kGold * (xc - xb);
            fw = f(w);
        } else if ((w - wlim) * (wlim - xc) >= 0.0) {
            w = wlim;
            fw = f(w);
        } else if ((w - wlim) * (xc - w) > 0.0) {
            fw = f(w);
            if (fw < fc) {
                xb = xc;
                xc = w;
                w = xc + kGold * (xc - xb);
                fb = fc;
                fc = fw;
                fw = f(w);
            }
        } else {
            w = xc + kGold * (xc - xb);
            fw = f(w);
        }
        xa = xb;
        xb = xc;
        xc = w;
        fa = fb;
        fb = fc;
        fc = fw;
    }
    return {xa, xb, xc, fa, fb, fc};
}

// Brent's parabolic-interpolation minimizer on a bracket.
template <typename F>
std::pair<double, double> brent(F&& f, const Bracket& br, double tol) {
    constexpr double kMinTol = 1.0e-11;
    constexpr double kCGold = 0.3819660;
    constexpr int kMaxIter = 500;

    double x = br.xb, w = br.xb, v = br.xb;
    double fx = br.fb, fw = br.fb, fv = br.fb;
    double a = std::min(br.xa, br.xc);
    double b = std::max(br.xa, br.xc);
    double deltax = 0.0;
    double rat = 0.0;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        const double tol1 = tol * std::abs(x) + kMinTol;
        const double tol2 = 2.0 * tol1;
        const double xmid = 0.5 * (a + b);
        if (std::abs(x - xmid) < (tol2 - 0.5 * (b - a))) break;
        if (std::abs(deltax) <= tol1) {
            deltax = (x >= xmid) ? a - x : b - x;
            rat = kCGold * deltax;
        } else {
            double tmp1 = (x - w) * (fx - fv);
            double tmp2 = (x - v) * (fx - fw);
            double p = (x - v) * tmp2 - (x - w) * tmp1;
            tmp2 = 2.0 * (tmp2 - tmp1);
            if (tmp2 > 0.0) p = -p;
            tmp2 = std::abs(tmp2);
            const double dx_prev = deltax;
            deltax = rat;
            if (p > tmp2 * (a - x) && p < tmp2 * (b - x) && std::abs(p) < std::abs(0.5 * tmp2 * dx_prev)) {
                rat = p / tmp2;
                const double u = x + rat;
                if ((u - a) < tol2 || (b - u) < tol2) rat = (xmid - x >= 0.0) ? tol1 : -tol1;
            } else {
                deltax = (x >= xmid) ? a - x : b - x;
                rat = kCGold * deltax;
            }
        }
        const double u = std::abs(rat) < tol1 ? (rat >= 0.0 ? x + tol1 : x - tol1) : x + rat;
        const double fu = f(u);
        if (fu > fx) {
            if (u < x) a = u; else b = u;
            if (fu <= fw || w == x) {
                v = w;
                w = u;
                fv = fw;
                fw = fu;
            } else if (fu <= fv || v == x || v == w) {
                v = u;
                fv = fu;
            }
        } else {
            if (u >= x) a = x; else b = x;
            v = w;
            w = x;
            x = u;
            fv = fw;
            fw = fx;
            fx = fu;
        }
    }
    return {x, fx};
}

// Minimizes along `dir` from `x`; updates x in place and returns (f, step).
std::pair<double, std::vector<double>> line_search(CountingObjective& f, std::vector<double>& x,
                                                   const std::vector<double>& dir, double tol, double grow) {
    std::vector<double> trial(x.size());
    auto along = [&](double t) {
        for (std::size_t k = 0; k < x.size(); ++k) trial[k] = x[k] + t * dir[k];
        return f(trial);
    };
    const Bracket br = bracket_minimum(along, grow);
    const auto [t, ft] = brent(along, br, tol);
    std::vector<double> step(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) {
        step[k] = t * dir[k];
        x[k] += step[k];
    }
    return {ft, std::move(step)};
}

}  // namespace

OptimizationResult powell_minimize(const Objective& objective, std::vector<double> x0, const OptimizerConfig& cfg) {
    cfg.validate();
    if (x0.empty()) throw std::invalid_argument("powell_minimize: need at least one parameter");
    const std::size_t dim = x0.size();

    CountingObjective f(objective, cfg.evaluation_cap());
    OptimizationResult result;

    // Seeds the tracker with x0 so an exhausted budget still reports a valid point.
    double fval = f(x0);
    if (!std::isfinite(fval)) throw std::invalid_argument("powell_minimize: objective is not finite at x0");
    result.initial_value = fval;

    std::vector<std::vector<double>> direc(dim, std::vector<double>(dim, 0.0));
    for (std::size_t k = 0; k < dim; ++k) direc[k][k] = 1.0;

    std::vector<double> x = x0;
    const double line_tol = cfg.x_tolerance * 100.0;
    try {
        while (true) {
            const double fx = fval;
            const std::vector<double> x1 = x;
            std::size_t bigind = 0;
            double delta = 0.0;
            for (std::size_t i = 0; i < dim; ++i) {
                const double fx2 = fval;
                fval = line_search(f, x, direc[i], line_tol, cfg.bracket_grow_limit).first;
                if (fx2 - fval > delta) {
                    delta = fx2 - fval;
                    bigind = i;
                }
            }
            ++result.iterations;
            const double bound = cfg.f_tolerance * (std::abs(fx) + std::abs(fval)) + 1e-20;
            if (2.0 * (fx - fval) <= bound) {
                result.converged = true;
                break;
            }
            if (result.iterations >= cfg.max_iterations) break;

            // Extrapolated point and the net direction of this cycle.
            std::vector<double> dnet(dim), x2(dim);
            for (std::size_t k = 0; k < dim; ++k) {
                dnet[k] = x[k] - x1[k];
                x2[k] = 2.0 * x[k] - x1[k];
            }
            const double fx2 = f(x2);
            if (fx > fx2) {
                double t = 2.0 * (fx + fx2 - 2.0 * fval);
                double temp = fx - fval - delta;
                t *= temp * temp;
                temp = fx - fx2;
                t -= delta * temp * temp;
                if (t < 0.0) {
                    auto [fnew, step] = line_search(f, x, dnet, line_tol, cfg.bracket_grow_limit);
                    fval = fnew;
                    direc[bigind] = direc.back();
                    direc.back() = std::move(step);
                }
            }
        }
    } catch (const BudgetExhausted&) {
        // Fall through with the best point seen so far.
    }

    result.best_parameters = f.best_point();
    result.best_value = f.best_value();
    result.evaluations = f.evaluations();
    return result;
}

}  // namespace qaoafs
