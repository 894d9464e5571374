// Copyright 2026 The MCI Authors
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

#ifndef MCI_ANALYSIS_HPP_
#define MCI_ANALYSIS_HPP_

// Error analysis for reconstructions of signals that are not bandlimited to
// the configured band.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mci/channels.hpp"
#include "mci/engine.hpp"
#include "mci/spectrum.hpp"

namespace mci {

// Largest deviation between the input samples and the samples obtained by
// filtering T_N f with each channel and resampling on the same grid. Zero up
// to rounding for any input, bandlimited or not.
double consistency_residual(const SampleSet& samples, const Kernel& kernel,
                            const ChannelBank& channels);

struct ErrorReport {
  double epsilon = 0.0;             // shift-averaged L2 error of T_N
  double bound = 0.0;               // Cauchy-Schwarz upper bound on epsilon
  double out_of_band_energy = 0.0;  // sum of |a(n)|^2 over n outside I^N
  std::vector<double> omega;        // per channel: sup over I^N of |r_m|^2
};

// Closed form of the averaged error over every sampling phase, computed from
// the true coefficients. `true_spec` may extend past the band.
ErrorReport averaged_error(const Spectrum& true_spec, const Kernel& kernel);

// JSON object with fields epsilon, bound, out_of_band_energy, omega.
std::string to_json(const ErrorReport& report);

// Source of phase-shifted copies f_tau(t) = f(t - tau) for the empirical
// oracle: channel samples on the kernel's grid, and the true values on a
// dense evaluation grid.
struct ShiftedSampler {
  std::function<SampleSet(double tau)> channel_samples;
  std::function<GridSignal(double tau, std::size_t grid)> values;
};

// Sampler for a signal given by its (finite) coefficients: channel samples
// by spectral folding, values by synthesis.
ShiftedSampler spectrum_sampler(const Spectrum& spec,
                                const ChannelBank& channels,
                                const BandSpec& band);

// Brute-force averaged error: mean over tau_count uniform phases in
// [0, 2*pi/L) of the grid-estimated ||f_tau - T_N f_tau||^2, square-rooted.
// Requires tau_count >= 8.
double averaged_error_empirical(const ShiftedSampler& sampler,
                                const Kernel& kernel, std::size_t tau_count,
                                std::size_t grid_size);

// Relative RMS error ||ref - approx|| / ||ref||. Throws SizeMismatch for
// different lengths and ZeroReference for an all-zero reference.
double rmse(std::span<const double> reference, std::span<const double> approx);
double rmse(const GridSignal& reference, const GridSignal& approx);

}  // namespace mci

#endif  // MCI_ANALYSIS_HPP_
