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

#include "mci/engine.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "fft.hpp"
#include "mci/errors.hpp"

namespace mci {
namespace {

// e^{i * 2*pi * k / l}, with k reduced first so large frequencies keep
// full phase accuracy.
cplx unit_root(long k, long l) {
  const double phase = kTwoPi * static_cast<double>(positive_mod(k, l)) /
                       static_cast<double>(l);
  return {std::cos(phase), std::sin(phase)};
}

cplx expi(double phase) { return {std::cos(phase), std::sin(phase)}; }

void require_same_band(const SampleSet& samples, const Kernel& kernel) {
  if (!(samples.band() == kernel.band())) {
    throw BandMismatch("samples and kernel were built for different bands");
  }
}

std::optional<int> find_channel(const ChannelBank& channels,
                                ChannelSpec::Kind kind) {
  for (std::size_t i = 0; i < channels.size(); ++i) {
    if (channels[i].kind() == kind) return static_cast<int>(i);
  }
  return std::nullopt;
}

}  // namespace

SampleSet::SampleSet(BandSpec band, std::vector<cplx> g)
    : band_(band), g_(std::move(g)) {
  if (static_cast<long>(g_.size()) != band_.size()) {
    throw SizeMismatch("sample set needs " + std::to_string(band_.size()) +
                       " values, got " + std::to_string(g_.size()));
  }
}

SampleSet sample_channels(const Spectrum& spec, const ChannelBank& channels,
                          const BandSpec& band) {
  const int m = band.channels();
  const long l = band.per_channel();
  if (static_cast<int>(channels.size()) != m) {
    throw BandMismatch("band expects " + std::to_string(m) +
                       " channels, bank has " +
                       std::to_string(channels.size()));
  }
  std::vector<cplx> g;
  g.reserve(static_cast<std::size_t>(band.size()));
  std::vector<cplx> folded(static_cast<std::size_t>(l));
  for (int ch = 0; ch < m; ++ch) {
    std::fill(folded.begin(), folded.end(), cplx{});
    for (long n = spec.first(); n <= spec.last(); ++n) {
      const cplx a = spec[n];
      if (a == cplx{}) continue;
      folded[static_cast<std::size_t>(positive_mod(n - band.n1(), l))] +=
          a * channels[ch].multiplier(n);
    }
    const std::vector<cplx> row = fft::backward(folded);
    for (long p = 0; p < l; ++p) {
      g.push_back(row[static_cast<std::size_t>(p)] *
                  unit_root(band.n1() * p, l));
    }
  }
  return SampleSet(band, std::move(g));
}

SampleSet ingest(const std::vector<std::vector<cplx>>& raw,
                 const BandSpec& band) {
  if (static_cast<int>(raw.size()) != band.channels()) {
    throw SizeMismatch("expected " + std::to_string(band.channels()) +
                       " channel rows, got " + std::to_string(raw.size()));
  }
  std::vector<cplx> g;
  g.reserve(static_cast<std::size_t>(band.size()));
  for (std::size_t m = 0; m < raw.size(); ++m) {
    if (static_cast<long>(raw[m].size()) != band.per_channel()) {
      throw SizeMismatch("channel " + std::to_string(m) + " has " +
                         std::to_string(raw[m].size()) + " samples, expected " +
                         std::to_string(band.per_channel()));
    }
    g.insert(g.end(), raw[m].begin(), raw[m].end());
  }
  return SampleSet(band, std::move(g));
}

DemodTable demodulate(const SampleSet& samples) {
  const BandSpec& band = samples.band();
  const long l = band.per_channel();
  const double scale = 1.0 / static_cast<double>(l);
  std::vector<cplx> d;
  d.reserve(static_cast<std::size_t>(band.size()));
  std::vector<cplx> modulated(static_cast<std::size_t>(l));
  for (int m = 0; m < band.channels(); ++m) {
    const auto row = samples.row(m);
    for (long p = 0; p < l; ++p) {
      modulated[static_cast<std::size_t>(p)] =
          row[static_cast<std::size_t>(p)] * unit_root(-band.n1() * p, l);
    }
    for (const cplx& v : fft::forward(modulated)) d.push_back(v * scale);
  }
  return DemodTable(band, std::move(d));
}

Spectrum reconstruct_spectrum(const SampleSet& samples, const Kernel& kernel) {
  require_same_band(samples, kernel);
  const BandSpec& band = samples.band();
  const int m = band.channels();
  const long l = band.per_channel();
  const DemodTable d = demodulate(samples);
  Spectrum out = Spectrum::zeros(band.range());
  for (long j = 0; j < l; ++j) {
    const long n = band.n1() + j;
    for (int k = 0; k < m; ++k) {
      cplx a{};
      for (int ch = 0; ch < m; ++ch) a += d(ch, j) * kernel.q(ch, k, n);
      out.set(n + k * l, a);
    }
  }
  return out;
}

GridSignal evaluate(const SampleSet& samples, const Kernel& kernel,
                    std::size_t grid_size) {
  if (static_cast<long>(grid_size) < samples.band().size()) {
    throw AliasError("output grid of " + std::to_string(grid_size) +
                     " points is smaller than the band width " +
                     std::to_string(samples.band().size()));
  }
  return synthesize(reconstruct_spectrum(samples, kernel), grid_size);
}

cplx evaluate_at(const SampleSet& samples, const Kernel& kernel, double t) {
  require_same_band(samples, kernel);
  const BandSpec& band = samples.band();
  const int m = band.channels();
  const long l = band.per_channel();
  const DemodTable d = demodulate(samples);
  cplx sum{};
  for (long j = 0; j < l; ++j) {
    const long n = band.n1() + j;
    for (int k = 0; k < m; ++k) {
      const cplx e = expi(static_cast<double>(n + k * l) * t);
      for (int ch = 0; ch < m; ++ch) sum += d(ch, j) * kernel.q(ch, k, n) * e;
    }
  }
  return sum;
}

GridSignal evaluate_translates(const SampleSet& samples, const Kernel& kernel,
                               std::size_t grid_size) {
  require_same_band(samples, kernel);
  const BandSpec& band = samples.band();
  const int m = band.channels();
  const long l = band.per_channel();
  const long grid = static_cast<long>(grid_size);
  std::vector<cplx> out(grid_size);
  const double inv_l = 1.0 / static_cast<double>(l);

  if (grid % l == 0) {
    const long stride = grid / l;
    std::vector<cplx> y(grid_size);
    for (int ch = 0; ch < m; ++ch) {
      for (long s = 0; s < grid; ++s) {
        y[static_cast<std::size_t>(s)] = kernel.eval_y(
            ch, kTwoPi * static_cast<double>(s) / static_cast<double>(grid));
      }
      const auto row = samples.row(ch);
      for (long j = 0; j < grid; ++j) {
        cplx sum{};
        for (long p = 0; p < l; ++p) {
          sum += row[static_cast<std::size_t>(p)] *
                 y[static_cast<std::size_t>(positive_mod(j - p * stride, grid))];
        }
        out[static_cast<std::size_t>(j)] += sum * inv_l;
      }
    }
    return GridSignal(std::move(out));
  }

  for (long j = 0; j < grid; ++j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(grid);
    cplx sum{};
    for (int ch = 0; ch < m; ++ch) {
      const auto row = samples.row(ch);
      for (long p = 0; p < l; ++p) {
        const double tp = kTwoPi * static_cast<double>(p) / static_cast<double>(l);
        sum += row[static_cast<std::size_t>(p)] * kernel.eval_y(ch, t - tp);
      }
    }
    out[static_cast<std::size_t>(j)] = sum * inv_l;
  }
  return GridSignal(std::move(out));
}

GridSignal hilbert_evaluate(const SampleSet& samples, const Kernel& kernel,
                            std::size_t grid_size) {
  if (static_cast<long>(grid_size) < samples.band().size()) {
    throw AliasError("output grid of " + std::to_string(grid_size) +
                     " points is smaller than the band width " +
                     std::to_string(samples.band().size()));
  }
  return synthesize(apply_multiplier(reconstruct_spectrum(samples, kernel),
                                     hilbert_multiplier),
                    grid_size);
}

cplx hilbert_evaluate_at(const SampleSet& samples, const Kernel& kernel,
                         double t) {
  const Spectrum h = apply_multiplier(reconstruct_spectrum(samples, kernel),
                                      hilbert_multiplier);
  cplx sum{};
  for (long n = h.first(); n <= h.last(); ++n) {
    sum += h[n] * expi(static_cast<double>(n) * t);
  }
  return sum;
}

cplx estimate_a0(const SampleSet& samples, const ChannelBank& channels,
                 A0Mode mode) {
  if (static_cast<int>(channels.size()) != samples.channels()) {
    throw BandMismatch("channel bank does not match the sample set");
  }
  const auto identity = find_channel(channels, ChannelSpec::Kind::kIdentity);
  if (!identity) throw ModeMismatch("a(0) estimate needs an identity channel");
  const double inv_l = 1.0 / static_cast<double>(samples.per_channel());

  cplx sum{};
  if (mode == A0Mode::kFromF) {
    for (const cplx& v : samples.row(*identity)) sum += v;
    return sum * inv_l;
  }
  const auto hilbert = find_channel(channels, ChannelSpec::Kind::kHilbert);
  if (!hilbert) {
    throw ModeMismatch("a(0) estimate from f and Hf needs a Hilbert channel");
  }
  const auto f = samples.row(*identity);
  const auto hf = samples.row(*hilbert);
  for (std::size_t p = 0; p < f.size(); ++p) {
    sum += f[p] + cplx{0.0, 1.0} * hf[p];
  }
  return sum * inv_l;
}

}  // namespace mci
