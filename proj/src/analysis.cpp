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

#include "mci/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "mci/errors.hpp"

namespace mci {

double consistency_residual(const SampleSet& samples, const Kernel& kernel,
                            const ChannelBank& channels) {
  if (!(samples.band() == kernel.band())) {
    throw BandMismatch("samples and kernel were built for different bands");
  }
  const Spectrum approx = reconstruct_spectrum(samples, kernel);
  const SampleSet resampled = sample_channels(approx, channels, samples.band());
  double worst = 0.0;
  for (int m = 0; m < samples.channels(); ++m) {
    for (long p = 0; p < samples.per_channel(); ++p) {
      worst = std::max(worst, std::abs(resampled(m, p) - samples(m, p)));
    }
  }
  return worst;
}

ErrorReport averaged_error(const Spectrum& true_spec, const Kernel& kernel) {
  const BandSpec& band = kernel.band();
  const ChannelBank& channels = kernel.channels();
  const int m = band.channels();
  const long l = band.per_channel();

  ErrorReport report;
  report.omega.assign(static_cast<std::size_t>(m), 0.0);
  for (int ch = 0; ch < m; ++ch) {
    for (long n = band.n1(); n <= band.n2(); ++n) {
      report.omega[ch] = std::max(report.omega[ch],
                                  std::norm(kernel.r_value(ch, n)));
    }
  }

  double aliased = 0.0;        // second term of epsilon^2
  double channel_energy = 0.0; // sum over n outside I^N of sum_m |a b_m|^2
  for (long n = true_spec.first(); n <= true_spec.last(); ++n) {
    if (band.contains(n)) continue;
    const cplx a = true_spec[n];
    const double a2 = std::norm(a);
    if (a2 == 0.0) continue;
    report.out_of_band_energy += a2;
    const long k = band.block_of(n);
    double leak = 0.0;
    for (int target = 0; target < m; ++target) {
      const long image = n + (target - k) * l;
      cplx s{};
      for (int ch = 0; ch < m; ++ch) {
        s += kernel.r_value(ch, image) * channels[ch].multiplier(n);
      }
      leak += std::norm(s);
    }
    aliased += a2 * leak;
    for (int ch = 0; ch < m; ++ch) {
      channel_energy += std::norm(a * channels[ch].multiplier(n));
    }
  }

  double omega_sq = 0.0;
  for (double w : report.omega) omega_sq += w * w;
  report.epsilon = std::sqrt(report.out_of_band_energy + aliased);
  report.bound = std::sqrt(report.out_of_band_energy +
                           channel_energy * static_cast<double>(m) * omega_sq);
  return report;
}

std::string to_json(const ErrorReport& report) {
  nlohmann::json j;
  j["epsilon"] = report.epsilon;
  j["bound"] = report.bound;
  j["out_of_band_energy"] = report.out_of_band_energy;
  j["omega"] = report.omega;
  return j.dump();
}

ShiftedSampler spectrum_sampler(const Spectrum& spec,
                                const ChannelBank& channels,
                                const BandSpec& band) {
  auto shifted = [spec](double tau) {
    return apply_multiplier(spec, [tau](long n) {
      const double phase = -static_cast<double>(n) * tau;
      return cplx{std::cos(phase), std::sin(phase)};
    });
  };
  ShiftedSampler sampler;
  sampler.channel_samples = [shifted, channels, band](double tau) {
    return sample_channels(shifted(tau), channels, band);
  };
  sampler.values = [shifted](double tau, std::size_t grid) {
    return synthesize(shifted(tau), grid);
  };
  return sampler;
}

double averaged_error_empirical(const ShiftedSampler& sampler,
                                const Kernel& kernel, std::size_t tau_count,
                                std::size_t grid_size) {
  if (tau_count < 8) throw ConfigError("tau_count must be at least 8");
  const double period =
      kTwoPi / static_cast<double>(kernel.band().per_channel());
  double total = 0.0;
  for (std::size_t q = 0; q < tau_count; ++q) {
    const double tau =
        period * static_cast<double>(q) / static_cast<double>(tau_count);
    const GridSignal approx =
        evaluate(sampler.channel_samples(tau), kernel, grid_size);
    const GridSignal truth = sampler.values(tau, grid_size);
    if (truth.size() != approx.size()) {
      throw SizeMismatch("sampler returned a grid of the wrong size");
    }
    double err = 0.0;
    for (std::size_t j = 0; j < truth.size(); ++j) {
      err += std::norm(truth[j] - approx[j]);
    }
    total += err / static_cast<double>(truth.size());
  }
  return std::sqrt(total / static_cast<double>(tau_count));
}

double rmse(std::span<const double> reference, std::span<const double> approx) {
  if (reference.size() != approx.size()) {
    throw SizeMismatch("rmse needs grids of equal size");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const double d = reference[i] - approx[i];
    num += d * d;
    den += reference[i] * reference[i];
  }
  if (den == 0.0) throw ZeroReference("rmse reference is identically zero");
  return std::sqrt(num / den);
}

double rmse(const GridSignal& reference, const GridSignal& approx) {
  if (reference.size() != approx.size()) {
    throw SizeMismatch("rmse needs grids of equal size");
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    num += std::norm(reference[i] - approx[i]);
    den += std::norm(reference[i]);
  }
  if (den == 0.0) throw ZeroReference("rmse reference is identically zero");
  return std::sqrt(num / den);
}

}  // namespace mci
