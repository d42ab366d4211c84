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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qaoafs/problem.hpp"
#include "qaoafs/routing.hpp"
#include "qaoafs/topology.hpp"

namespace qaoafs {

/// Gate durations in microseconds and error probabilities per operation.
struct CalibrationData {
    double t1_us = 0.0;
    double t2_us = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    double em = 0.0;

    void validate() const;
};

struct DeviceProfile {
    std::string name;
    CalibrationData calibration;
    Topology topology;
};

/// ibm_brisbane calibration snapshot (heavy-hex device).
CalibrationData ibm_brisbane_calibration();
/// Quantinuum H2; durations include the ion-transport (shift) time.
CalibrationData quantinuum_h2_calibration();

/// ibm_brisbane on heavy-hex, square-lattice and all-to-all couplings, and
/// Quantinuum H2 (56 qubits, all-to-all), in that order.
std::vector<DeviceProfile> builtin_device_profiles();

/// Looks up a builtin profile by name; throws std::invalid_argument.
DeviceProfile builtin_device(const std::string& name);

/// (d1 t1 + d2 t2) N S, in microseconds.
double estimate_layer_time(const DepthProfile& d, const CalibrationData& calib, std::uint64_t iterations,
                           std::uint64_t shots);

/// Sum of estimate_layer_time over the per-layer profiles, in microseconds.
double estimate_total_time(std::span<const DepthProfile> profiles, const CalibrationData& calib,
                           std::uint64_t iterations, std::uint64_t shots);

/// 1 - (1-e1)^n1 (1-e2)^n2 (1-em)^nm.
double estimate_error_probability(const DepthProfile& d, const CalibrationData& calib);

struct EstimateOptions {
    std::size_t layers = 30;             // QAOA depth for the time estimate
    std::uint64_t iterations = 1500;     // optimiser iterations per layer (N)
    std::uint64_t shots = 10000;         // shots per iteration (S)
    std::size_t error_layers = 1;        // QAOA depth for the error estimate
    std::size_t swap_cost = 3;
};

struct ResourceEstimate {
    std::string device;
    std::string topology;
    std::size_t n = 0;
    std::size_t layers = 0;
    DepthProfile profile;                   // native routed circuit at full depth
    std::size_t swaps = 0;                  // at full depth
    std::vector<double> layer_times_us;     // T_layer for k = 1..layers
    double total_time_s = 0.0;
    DepthProfile error_profile;             // circuit used for e_tot
    double error_probability = 0.0;
};

/// Routed, native-gate standard QAOA circuit with `layers` layers.
RoutedCircuit routed_qaoa_circuit(const IsingHamiltonian& h, std::size_t layers, const Topology& t);

/// Time and error estimate for standard QAOA on `device`. Layer k of the
/// iterative protocol executes the k-layer circuit N * S times, so the total
/// time sums T_layer over k = 1..layers. Angles do not affect the estimate.
ResourceEstimate estimate_resources(const IsingHamiltonian& h, const DeviceProfile& device,
                                    const EstimateOptions& opts = {});

}  // namespace qaoafs
