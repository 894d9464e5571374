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

#include "mci/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fft.hpp"
#include "mci/errors.hpp"

namespace mci {

BandSpec::BandSpec(long n1, long n2, int m) : n1_(n1), n2_(n2), m_(m), l_(0) {
  if (m < 1) throw ConfigError("channel count must be positive");
  if (n2 < n1) {
    throw ConfigError("band upper edge " + std::to_string(n2) +
                      " is below lower edge " + std::to_string(n1));
  }
  const long width = n2 - n1 + 1;
  if (width % m != 0) {
    throw ConfigError("band width " + std::to_string(width) +
                      " is not divisible by channel count " +
                      std::to_string(m));
  }
  l_ = width / m;
}

BandSpec BandSpec::centered(long total, int m) {
  const long n1 = -floor_div(total, 2);
  return BandSpec(n1, n1 + total - 1, m);
}

IndexRange BandSpec::block(long k) const {
  return {n1_ + k * l_, n1_ + (k + 1) * l_ - 1};
}

std::vector<IndexRange> partition_bands(const BandSpec& band) {
  std::vector<IndexRange> blocks;
  blocks.reserve(band.channels());
  for (int k = 0; k < band.channels(); ++k) blocks.push_back(band.block(k));
  return blocks;
}

Spectrum Spectrum::zeros(IndexRange range) {
  return Spectrum(range.first,
                  std::vector<cplx>(static_cast<std::size_t>(
                      std::max<long>(range.size(), 0))));
}

void Spectrum::set(long n, cplx value) {
  const long i = n - offset_;
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) {
    throw SizeMismatch("frequency " + std::to_string(n) +
                       " outside stored spectrum range");
  }
  coeffs_[static_cast<std::size_t>(i)] = value;
}

double Spectrum::energy() const {
  double e = 0.0;
  for (const cplx& c : coeffs_) e += std::norm(c);
  return e;
}

RealSignal real_part(const GridSignal& signal) {
  RealSignal out;
  out.values.reserve(signal.size());
  for (const cplx& v : signal.values()) {
    out.values.push_back(v.real());
    out.max_abs_imag = std::max(out.max_abs_imag, std::abs(v.imag()));
  }
  return out;
}

GridSignal synthesize(const Spectrum& spec, std::size_t grid_size) {
  if (grid_size == 0) throw AliasError("grid size must be positive");
  if (spec.width() > grid_size) {
    throw AliasError("grid of " + std::to_string(grid_size) +
                     " points cannot hold a spectrum of width " +
                     std::to_string(spec.width()));
  }
  const long j = static_cast<long>(grid_size);
  std::vector<cplx> bins(grid_size);
  for (std::size_t i = 0; i < spec.width(); ++i) {
    const long n = spec.first() + static_cast<long>(i);
    bins[static_cast<std::size_t>(positive_mod(n, j))] = spec.coeffs()[i];
  }
  return GridSignal(fft::backward(bins));
}

Spectrum analyze(const GridSignal& signal, const BandSpec& band) {
  if (static_cast<long>(signal.size()) != band.size()) {
    throw SizeMismatch("analyze expects " + std::to_string(band.size()) +
                       " samples, got " + std::to_string(signal.size()));
  }
  const long j = band.size();
  const std::vector<cplx> bins = fft::forward(signal.values());
  std::vector<cplx> coeffs(static_cast<std::size_t>(j));
  const double scale = 1.0 / static_cast<double>(j);
  for (long n = band.n1(); n <= band.n2(); ++n) {
    coeffs[static_cast<std::size_t>(n - band.n1())] =
        bins[static_cast<std::size_t>(positive_mod(n, j))] * scale;
  }
  return Spectrum(band.n1(), std::move(coeffs));
}

}  // namespace mci
