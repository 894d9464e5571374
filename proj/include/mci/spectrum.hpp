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

#ifndef MCI_SPECTRUM_HPP_
#define MCI_SPECTRUM_HPP_

// Fourier-series core for 2*pi-periodic signals.
//
// Frequency n occupies bin (n mod J) of a length-J transform. synthesize()
// evaluates sum_n a(n) e^{i n t_j} on t_j = 2*pi*j/J and analyze() is its exact
// inverse on a grid of mu(I^N) points, so analyze() returns the Fourier
// coefficients themselves with no extra scaling.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace mci {

using cplx = std::complex<double>;

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

// Floor division and non-negative remainder for signed frequency arithmetic.
constexpr long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
constexpr long positive_mod(long a, long b) { return a - b * floor_div(a, b); }

// Closed range of consecutive frequencies {first, ..., last}.
struct IndexRange {
  long first = 0;
  long last = -1;

  long size() const { return last - first + 1; }
  bool contains(long n) const { return n >= first && n <= last; }
  bool operator==(const IndexRange&) const = default;
};

// The frequency window I^N = {n1..n2} split across `m` channels, each sampled
// at l = (n2 - n1 + 1) / m uniform points.
class BandSpec {
 public:
  // Throws ConfigError unless n2 >= n1, m >= 1 and m divides the width.
  BandSpec(long n1, long n2, int m);

  // Band of `total` frequencies starting at -floor(total / 2).
  static BandSpec centered(long total, int m);

  long n1() const { return n1_; }
  long n2() const { return n2_; }
  int channels() const { return m_; }
  long per_channel() const { return l_; }
  long size() const { return n2_ - n1_ + 1; }
  IndexRange range() const { return {n1_, n2_}; }
  bool contains(long n) const { return n >= n1_ && n <= n2_; }

  // Block I_{k+1} (k is zero based here). Defined for every integer k, so
  // blocks outside 0..m-1 tile the rest of the integers.
  IndexRange block(long k) const;
  // Zero-based index of the block containing n; may fall outside 0..m-1.
  long block_of(long n) const { return floor_div(n - n1_, l_); }

  bool operator==(const BandSpec&) const = default;

 private:
  long n1_;
  long n2_;
  int m_;
  long l_;
};

std::vector<IndexRange> partition_bands(const BandSpec& band);

// Finitely supported Fourier coefficients stored densely from `first()`.
// Frequencies outside the stored range are zero.
class Spectrum {
 public:
  Spectrum() = default;
  Spectrum(long offset, std::vector<cplx> coeffs)
      : offset_(offset), coeffs_(std::move(coeffs)) {}
  static Spectrum zeros(IndexRange range);

  long first() const { return offset_; }
  long last() const { return offset_ + static_cast<long>(coeffs_.size()) - 1; }
  IndexRange range() const { return {first(), last()}; }
  // Number of stored coefficients (zero for the empty spectrum).
  std::size_t width() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }

  cplx operator[](long n) const {
    const long i = n - offset_;
    return (i >= 0 && i < static_cast<long>(coeffs_.size())) ? coeffs_[i]
                                                              : cplx{};
  }
  // Requires n inside range().
  void set(long n, cplx value);

  std::span<const cplx> coeffs() const { return coeffs_; }
  double energy() const;

 private:
  long offset_ = 0;
  std::vector<cplx> coeffs_;
};

// Samples on the uniform grid t_j = 2*pi*j/size().
class GridSignal {
 public:
  GridSignal() = default;
  explicit GridSignal(std::vector<cplx> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  cplx operator[](std::size_t j) const { return values_[j]; }
  std::span<const cplx> values() const { return values_; }
  double time(std::size_t j) const {
    return kTwoPi * static_cast<double>(j) / static_cast<double>(size());
  }

 private:
  std::vector<cplx> values_;
};

// Real part of a grid together with the largest discarded imaginary part.
struct RealSignal {
  std::vector<double> values;
  double max_abs_imag = 0.0;
};
RealSignal real_part(const GridSignal& signal);

// Throws AliasError when grid_size is smaller than the stored support width.
GridSignal synthesize(const Spectrum& spec, std::size_t grid_size);

// Inverse of synthesize on a grid of exactly band.size() points; throws
// SizeMismatch otherwise.
Spectrum analyze(const GridSignal& signal, const BandSpec& band);

template <typename Multiplier>
Spectrum apply_multiplier(const Spectrum& spec, Multiplier&& mult) {
  std::vector<cplx> out(spec.coeffs().begin(), spec.coeffs().end());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] *= static_cast<cplx>(mult(spec.first() + static_cast<long>(i)));
  }
  return Spectrum(spec.first(), std::move(out));
}

// -i*sgn(n), the circular Hilbert transform multiplier.
inline cplx hilbert_multiplier(long n) {
  return n > 0 ? cplx{0.0, -1.0} : (n < 0 ? cplx{0.0, 1.0} : cplx{});
}

}  // namespace mci

#endif  // MCI_SPECTRUM_HPP_
