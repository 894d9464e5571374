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

#ifndef MCI_CHANNELS_HPP_
#define MCI_CHANNELS_HPP_

// Channel banks and the reconstruction kernel built from them.
//
// A channel is a linear filter acting on f through a Fourier multiplier b(n).
// For each frequency n of the first sub-band I_1 the M x M matrix
// H_n[j][k] = b_k(n + j*L) collects the multipliers at the M aliases of n;
// the kernel stores Q_n = H_n^{-1}, whose entries q_{mk}(n) weight the
// demodulated samples during reconstruction.

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mci/spectrum.hpp"

namespace mci {

class ChannelSpec {
 public:
  enum class Kind { kIdentity, kDerivative, kHilbert, kAnalyticProjection, kTable };

  static ChannelSpec identity() { return ChannelSpec(Kind::kIdentity); }
  static ChannelSpec derivative(int order);
  static ChannelSpec hilbert() { return ChannelSpec(Kind::kHilbert); }
  static ChannelSpec analytic_projection() {
    return ChannelSpec(Kind::kAnalyticProjection);
  }
  // Frequencies missing from `table` have multiplier 0.
  static ChannelSpec table(std::map<long, cplx> table);

  Kind kind() const { return kind_; }
  int order() const { return order_; }
  const std::map<long, cplx>& entries() const { return table_; }
  std::string name() const;

  cplx multiplier(long n) const;

  bool operator==(const ChannelSpec&) const = default;

 private:
  explicit ChannelSpec(Kind kind) : kind_(kind) {}

  Kind kind_;
  int order_ = 0;
  std::map<long, cplx> table_;
};

using ChannelBank = std::vector<ChannelSpec>;

inline cplx multiplier(const ChannelSpec& channel, long n) {
  return channel.multiplier(n);
}

// Small dense row-major complex matrix.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  cplx operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  CMatrix operator*(const CMatrix& rhs) const;
  double norm1() const;     // max column sum
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

// Result of inverting one H_n.
struct Inversion {
  bool singular = false;
  CMatrix inverse;
  double condition = 0.0;  // 1-norm condition number, 0 when singular
};

// Gauss-Jordan elimination with partial pivoting. A pivot below
// 1e-12 * (largest row max-norm of the input) marks the matrix singular.
Inversion invert(const CMatrix& matrix);

// H_n for n in I_1.
CMatrix build_matrix(const BandSpec& band, const ChannelBank& channels, long n);

class Kernel {
 public:
  // Raw constructor: q holds M*M*L values with q[(m*M + k)*L + j] =
  // q_{mk}(n1 + j). Dimensions are validated, contents are not.
  Kernel(BandSpec band, ChannelBank channels, std::vector<cplx> q,
         std::set<long> null_band, double cond_max);

  const BandSpec& band() const { return band_; }
  const ChannelBank& channels() const { return channels_; }
  const std::set<long>& null_band() const { return null_band_; }
  double cond_max() const { return cond_max_; }
  std::span<const cplx> q_table() const { return q_; }

  int m() const { return band_.channels(); }
  long l() const { return band_.per_channel(); }

  // q_{mk}(n) with zero-based m, k and n in I_1.
  cplx q(int m, int k, long n) const {
    return q_[(static_cast<std::size_t>(m) * this->m() + k) * l() +
              static_cast<std::size_t>(n - band_.n1())];
  }
  CMatrix block(long n) const;
  bool is_exempt(long n) const { return null_band_.count(n) != 0; }

  // r_m(n): q_{mk}(n - k*L) for n in block k of I^N, zero outside I^N.
  cplx r_value(int m, long n) const;

  // v_{m,n}(t) = sum_k q_{mk}(n) e^{i(n + kL)t}, n in I_1.
  cplx eval_v(int m, long n, double t) const;

  // y_m(t) as the sum of v_{m,n}(t) over I_1.
  cplx eval_y(int m, double t) const;

  // y_m(t) by direct summation of r_m(n) e^{int} over I^N.
  cplx eval_y_direct(int m, double t) const;

 private:
  BandSpec band_;
  ChannelBank channels_;
  std::vector<cplx> q_;
  std::set<long> null_band_;
  double cond_max_;
};

// Inverts H_n for every n in I_1. Frequencies in `null_band` get an all-zero
// block; any other numerically singular H_n throws SingularMatrix(n).
Kernel build_kernel(const BandSpec& band, const ChannelBank& channels,
                    const std::set<long>& null_band = {});

}  // namespace mci

#endif  // MCI_CHANNELS_HPP_
