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

#include "qaoafs/device.hpp"

#include <cmath>
#include <stdexcept>

#include "qaoafs/qaoa.hpp"

namespace qaoafs {

void CalibrationData::validate() const {
    if (!(t1_us > 0.0) || !(t2_us > 0.0)) throw std::invalid_argument("gate durations must be > 0");
    for (double e : {e1, e2, em}) {
        if (!(e >= 0.0 && e < 1.0)) throw std::invalid_argument("error probabilities must lie in [0, 1)");
    }
}

CalibrationData ibm_brisbane_calibration() { return {0.06, 0.66, 3.3e-4, 1.2e-2, 3.7e-2}; }

CalibrationData quantinuum_h2_calibration() { return {63.0, 308.0, 3.0e-5, 1.0e-3, 1.0e-3}; }

std::vector<DeviceProfile> builtin_device_profiles() {
    return {
        {"ibm_brisbane", ibm_brisbane_calibration(), Topology::heavy_hex_127()},
        {"ibm_brisbane_square", ibm_brisbane_calibration(), Topology::square_lattice(11, 12)},
        {"ibm_brisbane_all_to_all", ibm_brisbane_calibration(), Topology::all_to_all(127)},
        {"quantinuum_h2", quantinuum_h2_calibration(), Topology::all_to_all(56)},
    };
}

DeviceProfile builtin_device(const std::string& name) {
    for (auto& d : builtin_device_profiles()) {
        if (d.name == name) return d;
    }
    throw std::invalid_argument("unknown device '" + name + "'");
}

double estimate_layer_time(const DepthProfile& d, const CalibrationData& calib, std::uint64_t iterations,
                           std::uint64_t shots) {
    if (iterations < 1 || shots < 1) throw std::invalid_argument("iterations and shots must be >= 1");
    const double single = static_cast<double>(d.d1) * calib.t1_us + static_cast<double>(d.d2) * calib.t2_us;
    return single * static_cast<double>(iterations) * static_cast<double>(shots);
}

double estimate_total_time(std::span<const DepthProfile> profiles, const CalibrationData& calib,
                           std::uint64_t iterations, std::uint64_t shots) {
    if (profiles.empty()) throw std::invalid_argument("total time needs at least one layer profile");
    double total = 0.0;
    for (const auto& p : profiles) total += estimate_layer_time(p, calib, iterations, shots);
    return total;
}

double estimate_error_probability(const DepthProfile& d, const CalibrationData& calib) {
    const double survive = std::pow(1.0 - calib.e1, static_cast<double>(d.n1)) *
                           std::pow(1.0 - calib.e2, static_cast<double>(d.n2)) *
                           std::pow(1.0 - calib.em, static_cast<double>(d.nm));
    return 1.0 - survive;
}

RoutedCircuit routed_qaoa_circuit(const IsingHamiltonian& h, std::size_t layers, const Topology& t) {
    // Gate structure is angle independent; any non-zero angles will do.
    const std::vector<double> params(2 * layers, 0.5);
    const std::vector<MixerOperator> mixers(layers, MixerOperator::global_x());
    return route_circuit(build_qaoa_circuit(h, params, mixers, CircuitForm::Native), t);
}

ResourceEstimate estimate_resources(const IsingHamiltonian& h, const DeviceProfile& device, const EstimateOptions& opts) {
    device.calibration.validate();
    if (opts.layers < 1 || opts.error_layers < 1) throw std::invalid_argument("estimates need at least one layer");
    if (h.n > device.topology.size()) {
        throw std::invalid_argument("problem with " + std::to_string(h.n) + " qubits does not fit on " + device.name +
                                    " (" + std::to_string(device.topology.size()) + " qubits)");
    }
    const ProfileOptions popts{opts.swap_cost, h.n};

    ResourceEstimate est;
    est.device = device.name;
    est.topology = to_string(device.topology.kind());
    est.n = h.n;
    est.layers = opts.layers;

    std::vector<DepthProfile> profiles;
    for (std::size_t k = 1; k <= opts.layers; ++k) {
        const RoutedCircuit rc = routed_qaoa_circuit(h, k, device.topology);
        profiles.push_back(compute_depth_profile(rc.physical, popts));
        est.layer_times_us.push_back(
            estimate_layer_time(profiles.back(), device.calibration, opts.iterations, opts.shots));
        if (k == opts.layers) est.swaps = rc.swaps;
    }
    est.profile = profiles.back();
    est.total_time_s = estimate_total_time(profiles, device.calibration, opts.iterations, opts.shots) * 1e-6;

    const RoutedCircuit err = routed_qaoa_circuit(h, opts.error_layers, device.topology);
    est.error_profile = compute_depth_profile(err.physical, popts);
    est.error_probability = estimate_error_probability(est.error_profile, device.calibration);
    return est;
}

}  // namespace qaoafs
