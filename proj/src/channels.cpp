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

#include "mci/channels.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "mci/errors.hpp"

namespace mci {

ChannelSpec ChannelSpec::derivative(int order) {
  if (order < 0) throw ConfigError("derivative order must be non-negative");
  ChannelSpec c(Kind::kDerivative);
  c.order_ = order;
  return c;
}

ChannelSpec ChannelSpec::table(std::map<long, cplx> table) {
  ChannelSpec c(Kind::kTable);
  c.table_ = std::move(table);
  return c;
}

std::string ChannelSpec::name() const {
  switch (kind_) {
    case Kind::kIdentity:
      return "identity";
    case Kind::kDerivative:
      return "derivative" + std::to_string(order_);
    case Kind::kHilbert:
      return "hilbert";
    case Kind::kAnalyticProjection:
      return "analytic";
    case Kind::kTable:
      return "table";
  }
  return "unknown";
}

cplx ChannelSpec::multiplier(long n) const {
  switch (kind_) {
    case Kind::kIdentity:
      return 1.0;
    case Kind::kDerivative: {
      // (i n)^k, built from integer powers so small orders stay exact.
      const double mag = std::pow(static_cast<double>(n), order_);
      switch (order_ % 4) {
        case 0: return {mag, 0.0};
        case 1: return {0.0, mag};
        case 2: return {-mag, 0.0};
        default: return {0.0, -mag};
      }
    }
    case Kind::kHilbert:
      return hilbert_multiplier(n);
    case Kind::kAnalyticProjection:
      return n >= 0 ? 1.0 : 0.0;
    case Kind::kTable: {
      auto it = table_.find(n);
      return it == table_.end() ? cplx{} : it->second;
    }
  }
  return {};
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = 1.0;
  return id;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  CMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx a = (*this)(r, k);
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

double CMatrix::norm1() const {
  double best = 0.0;
  for (std::size_t c = 0; c < cols_; ++c) {
    double s = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) s += std::abs((*this)(r, c));
    best = std::max(best, s);
  }
  return best;
}

double CMatrix::max_abs() const {
  double best = 0.0;
  for (const cplx& v : data_) best = std::max(best, std::abs(v));
  return best;
}

Inversion invert(const CMatrix& matrix) {
  const std::size_t n = matrix.rows();
  Inversion result;

  // Columns are equilibrated first so that channels with very different
  // magnitudes (high-order derivatives) do not read as rank deficient.
  std::vector<double> col_scale(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      col_scale[c] = std::max(col_scale[c], std::abs(matrix(r, c)));
    }
    if (col_scale[c] == 0.0) {
      result.singular = true;
      return result;
    }
  }
  constexpr double threshold = 1e-12;

  CMatrix a = matrix;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a(r, c) /= col_scale[c];
  }
  CMatrix inv = CMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (!(std::abs(a(pivot, col)) > threshold)) {
      result.singular = true;
      return result;
    }
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const cplx p = 1.0 / a(col, col);
    for (std::size_t c = 0; c < n; ++c) {
      a(col, c) *= p;
      inv(col, c) *= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const cplx f = a(r, col);
      if (f == cplx{}) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) /= col_scale[r];
  }
  result.condition = matrix.norm1() * inv.norm1();
  result.inverse = std::move(inv);
  return result;
}

CMatrix build_matrix(const BandSpec& band, const ChannelBank& channels,
                     long n) {
  const std::size_t m = static_cast<std::size_t>(band.channels());
  if (channels.size() != m) {
    throw BandMismatch("band expects " + std::to_string(m) +
                       " channels, bank has " +
                       std::to_string(channels.size()));
  }
  CMatrix h(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    const long freq = n + static_cast<long>(j) * band.per_channel();
    for (std::size_t k = 0; k < m; ++k) h(j, k) = channels[k].multiplier(freq);
  }
  return h;
}

Kernel::Kernel(BandSpec band, ChannelBank channels, std::vector<cplx> q,
               std::set<long> null_band, double cond_max)
    : band_(band),
      channels_(std::move(channels)),
      q_(std::move(q)),
      null_band_(std::move(null_band)),
      cond_max_(cond_max) {
  const std::size_t m = static_cast<std::size_t>(band_.channels());
  if (channels_.size() != m) {
    throw BandMismatch("kernel band expects " + std::to_string(m) +
                       " channels, got " + std::to_string(channels_.size()));
  }
  if (q_.size() != m * m * static_cast<std::size_t>(band_.per_channel())) {
    throw SizeMismatch("kernel table has wrong size");
  }
}

CMatrix Kernel::block(long n) const {
  const std::size_t mm = static_cast<std::size_t>(m());
  CMatrix out(mm, mm);
  for (std::size_t r = 0; r < mm; ++r) {
    for (std::size_t c = 0; c < mm; ++c) {
      out(r, c) = q(static_cast<int>(r), static_cast<int>(c), n);
    }
  }
  return out;
}

cplx Kernel::r_value(int m, long n) const {
  if (!band_.contains(n)) return {};
  const long k = band_.block_of(n);
  return q(m, static_cast<int>(k), n - k * l());
}

cplx Kernel::eval_v(int m, long n, double t) const {
  cplx sum{};
  for (int k = 0; k < this->m(); ++k) {
    const double phase = static_cast<double>(n + k * l()) * t;
    sum += q(m, k, n) * cplx{std::cos(phase), std::sin(phase)};
  }
  return sum;
}

cplx Kernel::eval_y(int m, double t) const {
  cplx sum{};
  const IndexRange first = band_.block(0);
  for (long n = first.first; n <= first.last; ++n) sum += eval_v(m, n, t);
  return sum;
}

cplx Kernel::eval_y_direct(int m, double t) const {
  cplx sum{};
  for (long n = band_.n1(); n <= band_.n2(); ++n) {
    const double phase = static_cast<double>(n) * t;
    sum += r_value(m, n) * cplx{std::cos(phase), std::sin(phase)};
  }
  return sum;
}

Kernel build_kernel(const BandSpec& band, const ChannelBank& channels,
                    const std::set<long>& null_band) {
  const IndexRange first = band.block(0);
  for (long n : null_band) {
    if (!first.contains(n)) {
      throw ConfigError("null-band frequency " + std::to_string(n) +
                        " is outside the first sub-band [" +
                        std::to_string(first.first) + ", " +
                        std::to_string(first.last) + "]");
    }
  }
  const int m = band.channels();
  const long l = band.per_channel();
  std::vector<cplx> q(static_cast<std::size_t>(m) * m * l);
  double cond_max = 0.0;
  for (long n = first.first; n <= first.last; ++n) {
    if (null_band.count(n) != 0) continue;
    const Inversion inv = invert(build_matrix(band, channels, n));
    if (inv.singular) throw SingularMatrix(n);
    cond_max = std::max(cond_max, inv.condition);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        q[(static_cast<std::size_t>(r) * m + c) * l + (n - band.n1())] =
            inv.inverse(r, c);
      }
    }
  }
  return Kernel(band, channels, std::move(q), null_band, cond_max);
}

}  // namespace mci
