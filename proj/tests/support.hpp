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

#ifndef MCI_TESTS_SUPPORT_HPP_
#define MCI_TESTS_SUPPORT_HPP_

// Independent reference computations for the test suites. Nothing here calls
// into the FFT paths of the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "mci/channels.hpp"
#include "mci/spectrum.hpp"

namespace mci::test {

inline const cplx kI{0.0, 1.0};

inline Spectrum random_spectrum(const IndexRange& r, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(r.size()));
  for (cplx& v : c) v = cplx(g(rng), g(rng));
  return Spectrum(r.first, std::move(c));
}

// Conjugate-symmetric spectrum on -n..n (a real signal).
inline Spectrum random_real_spectrum(long n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> c(static_cast<std::size_t>(2 * n + 1));
  c[n] = g(rng);
  for (long k = 1; k <= n; ++k) {
    const cplx v(g(rng), g(rng));
    c[n + k] = v;
    c[n - k] = std::conj(v);
  }
  return Spectrum(-n, std::move(c));
}

// Direct summation of sum_n mult(n) a(n) e^{i n t}.
template <typename Mult>
cplx direct_sum(const Spectrum& s, Mult mult, double t) {
  cplx sum{};
  for (long n = s.first(); n <= s.last(); ++n) {
    sum += mult(n) * s[n] * std::exp(kI * (static_cast<double>(n) * t));
  }
  return sum;
}

inline cplx direct_sum(const Spectrum& s, double t) {
  return direct_sum(s, [](long) { return cplx(1.0); }, t);
}

// Channel multipliers written out from their definitions.
inline cplx ref_multiplier(const ChannelSpec& c, long n) {
  switch (c.kind()) {
    case ChannelSpec::Kind::kIdentity:
      return 1.0;
    case ChannelSpec::Kind::kDerivative:
      return std::pow(kI * static_cast<double>(n), c.order());
    case ChannelSpec::Kind::kHilbert:
      return n > 0 ? -kI : (n < 0 ? kI : cplx(0.0));
    case ChannelSpec::Kind::kAnalyticProjection:
      return n >= 0 ? 1.0 : 0.0;
    case ChannelSpec::Kind::kTable: {
      const auto it = c.entries().find(n);
      return it == c.entries().end() ? cplx(0.0) : it->second;
    }
  }
  return 0.0;
}

// g_m(t_p) by direct summation, t_p = 2 pi p / L.
inline std::vector<std::vector<cplx>> direct_samples(const Spectrum& s,
                                                      const ChannelBank& bank,
                                                      long l) {
  std::vector<std::vector<cplx>> g(bank.size(), std::vector<cplx>(l));
  for (std::size_t m = 0; m < bank.size(); ++m) {
    for (long p = 0; p < l; ++p) {
      g[m][p] = direct_sum(
          s, [&](long n) { return ref_multiplier(bank[m], n); },
          kTwoPi * static_cast<double>(p) / static_cast<double>(l));
    }
  }
  return g;
}

// Solves A x = b by Cramer's rule for n <= 3.
inline std::vector<cplx> cramer(const std::vector<std::vector<cplx>>& a,
                                const std::vector<cplx>& b) {
  auto det = [](const std::vector<std::vector<cplx>>& m) -> cplx {
    if (m.size() == 1) return m[0][0];
    if (m.size() == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const cplx d = det(a);
  std::vector<cplx> x(b.size());
  for (std::size_t k = 0; k < b.size(); ++k) {
    auto ak = a;
    for (std::size_t r = 0; r < b.size(); ++r) ak[r][k] = b[r];
    x[k] = det(ak) / d;
  }
  return x;
}

inline double max_abs_diff(const Spectrum& a, const Spectrum& b) {
  const long lo = std::min(a.first(), b.first());
  const long hi = std::max(a.last(), b.last());
  double e = 0.0;
  for (long n = lo; n <= hi; ++n) e = std::max(e, std::abs(a[n] - b[n]));
  return e;
}

inline double relative_error(const Spectrum& ref, const Spectrum& got) {
  double num = 0.0;
  double den = 0.0;
  const long lo = std::min(ref.first(), got.first());
  const long hi = std::max(ref.last(), got.last());
  for (long n = lo; n <= hi; ++n) {
    num += std::norm(ref[n] - got[n]);
    den += std::norm(ref[n]);
  }
  return std::sqrt(num / den);
}

// A generic t in (0, 2 pi), away from multiples of 2 pi / 64.
inline std::vector<double> generic_points(std::size_t count,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  std::vector<double> t;
  while (t.size() < count) {
    const double v = u(rng);
    const double r = std::remainder(v, kTwoPi / 64.0);
    if (std::abs(r) > 1e-3) t.push_back(v);
  }
  return t;
}

inline ChannelBank bank_identity() { return {ChannelSpec::identity()}; }
inline ChannelBank bank_hilbert() {
  return {ChannelSpec::identity(), ChannelSpec::hilbert()};
}
inline ChannelBank bank_d1() {
  return {ChannelSpec::identity(), ChannelSpec::derivative(1)};
}
inline ChannelBank bank_d12() {
  return {ChannelSpec::identity(), ChannelSpec::derivative(1),
          ChannelSpec::derivative(2)};
}

}  // namespace mci::test

#endif  // MCI_TESTS_SUPPORT_HPP_
