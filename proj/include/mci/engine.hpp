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

#ifndef MCI_ENGINE_HPP_
#define MCI_ENGINE_HPP_

// Multichannel reconstruction.
//
// Given L uniform samples g_m(2*pi*p/L) of each of the M channel outputs, the
// engine recovers the Fourier coefficients of T_N f on I^N and evaluates them.
// For f bandlimited to I^N the result is f itself; otherwise it is the
// approximation T_N f, which still reproduces the input samples exactly.

#include <cstddef>
#include <span>
#include <vector>

#include "mci/channels.hpp"
#include "mci/spectrum.hpp"

namespace mci {

// M x L channel samples, g(m, p) = g_m(2*pi*p/L).
class SampleSet {
 public:
  SampleSet(BandSpec band, std::vector<cplx> g);

  const BandSpec& band() const { return band_; }
  int channels() const { return band_.channels(); }
  long per_channel() const { return band_.per_channel(); }
  cplx operator()(int m, long p) const {
    return g_[static_cast<std::size_t>(m) * per_channel() + p];
  }
  std::span<const cplx> row(int m) const {
    return std::span<const cplx>(g_).subspan(
        static_cast<std::size_t>(m) * per_channel(), per_channel());
  }
  // Total samples consumed by a reconstruction, L*M.
  std::size_t count() const { return g_.size(); }

 private:
  BandSpec band_;
  std::vector<cplx> g_;
};

// d(m, j) = d_m(n1 + j), the L-periodic folding of channel m's spectrum.
class DemodTable {
 public:
  DemodTable(BandSpec band, std::vector<cplx> d)
      : band_(band), d_(std::move(d)) {}

  const BandSpec& band() const { return band_; }
  cplx operator()(int m, long j) const {
    return d_[static_cast<std::size_t>(m) * band_.per_channel() + j];
  }
  std::span<const cplx> row(int m) const {
    return std::span<const cplx>(d_).subspan(
        static_cast<std::size_t>(m) * band_.per_channel(),
        band_.per_channel());
  }

 private:
  BandSpec band_;
  std::vector<cplx> d_;
};

// Samples every channel output of the signal with coefficients `spec` on the
// L-point grid. The spectrum may extend beyond the band; its full support is
// folded, which is what physical sampling of a non-bandlimited signal does.
SampleSet sample_channels(const Spectrum& spec, const ChannelBank& channels,
                          const BandSpec& band);

// Wraps raw channel rows; throws SizeMismatch unless there are M rows of L.
SampleSet ingest(const std::vector<std::vector<cplx>>& raw,
                 const BandSpec& band);

DemodTable demodulate(const SampleSet& samples);

// Coefficients of T_N f on I^N. Exempt frequencies come out as zero.
// Throws BandMismatch when the kernel was built for a different band.
Spectrum reconstruct_spectrum(const SampleSet& samples, const Kernel& kernel);

// T_N f on a grid of grid_size >= L*M points (AliasError otherwise).
GridSignal evaluate(const SampleSet& samples, const Kernel& kernel,
                    std::size_t grid_size);

// T_N f at an arbitrary t through the kernel translates v_{m,n}.
cplx evaluate_at(const SampleSet& samples, const Kernel& kernel, double t);

// Literal translate sum (1/L) sum_m sum_p g_m(t_p) y_m(t - t_p) on a grid,
// with y_m tabulated once when grid_size is a multiple of L. Quadratic cost;
// kept as the reference for the FFT path.
GridSignal evaluate_translates(const SampleSet& samples, const Kernel& kernel,
                               std::size_t grid_size);

// H(T_N f) on a grid / at a point.
GridSignal hilbert_evaluate(const SampleSet& samples, const Kernel& kernel,
                            std::size_t grid_size);
cplx hilbert_evaluate_at(const SampleSet& samples, const Kernel& kernel,
                         double t);

enum class A0Mode {
  kFromF,         // mean of the identity channel
  kFromFAndHF,    // mean of f + i Hf over identity and Hilbert channels
};

// Estimate of the mean a(0). Throws ModeMismatch when the bank lacks the
// channels the mode needs.
cplx estimate_a0(const SampleSet& samples, const ChannelBank& channels,
                 A0Mode mode);

}  // namespace mci

#endif  // MCI_ENGINE_HPP_
