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

#include "mci/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mci/errors.hpp"

namespace mci::oracle {
namespace {

constexpr double kPi = kTwoPi / 2.0;
constexpr double kGuard = 1e-6;
constexpr cplx kI{0.0, 1.0};

// Representative of t in (-pi, pi].
double wrap(double t) {
  double s = std::remainder(t, kTwoPi);
  if (s <= -kPi) s += kTwoPi;
  return s;
}

void guard(double t) {
  if (std::abs(wrap(t)) < kGuard) {
    throw NearSingularity("closed form evaluated within 1e-6 of a 0/0 point");
  }
}

// Taylor coefficients of 1/((a - z)(b - z)) and 1/((a + z)(b + z)).
double minus_pair(double a, double b, long k) {
  if (k < 0) return 0.0;
  return (std::pow(a, -(k + 1)) - std::pow(b, -(k + 1))) / (b - a);
}
double plus_pair(double a, double b, long k) {
  if (k < 0) return 0.0;
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * (std::pow(a, -(k + 1)) - std::pow(b, -(k + 1))) / (b - a);
}

double phi_taylor(long k) {
  return 0.08 * minus_pair(1.3, 1.5, k - 2) + 0.06 * minus_pair(1.3, 1.5, k - 10) +
         0.05 * plus_pair(1.2, 1.3, k - 3) + 0.09 * plus_pair(1.2, 1.3, k - 10);
}

double sample_time(long p, long count) {
  return kTwoPi * static_cast<double>(p) / static_cast<double>(count);
}

void require_count(std::span<const cplx> v, long count, const char* what) {
  if (static_cast<long>(v.size()) != count) {
    throw SizeMismatch(std::string(what) + " needs " + std::to_string(count) +
                       " samples, got " + std::to_string(v.size()));
  }
}

void require_real(std::span<const cplx> v) {
  double scale = 0.0, imag = 0.0;
  for (const cplx& x : v) {
    scale = std::max(scale, std::abs(x));
    imag = std::max(imag, std::abs(x.imag()));
  }
  if (imag > 1e-12 * std::max(scale, 1.0)) {
    throw ConfigError("real-valued sampling formula given complex samples");
  }
}

cplx mean(std::span<const cplx> v) {
  cplx s{};
  for (const cplx& x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

PhiSample phi_eval(double t) {
  const cplx z{std::cos(t), std::sin(t)};
  const cplx z2 = z * z;
  const cplx z3 = z2 * z;
  const cplx z10 = std::pow(z, 10);
  const cplx phi = (0.08 * z2 + 0.06 * z10) / ((1.3 - z) * (1.5 - z)) +
                   (0.05 * z3 + 0.09 * z10) / ((1.2 + z) * (1.3 + z));
  return {phi.real(), phi.imag()};
}

Spectrum phi_spectrum(double threshold) {
  // Coefficients decay like 1.2^{-n}; 4000 terms is far past any threshold
  // above the double underflow range.
  constexpr long kMaxTerms = 4000;
  long last = 0;
  for (long n = 1; n < kMaxTerms; ++n) {
    if (std::abs(phi_taylor(n)) / 2.0 >= threshold) last = n;
  }
  std::vector<cplx> coeffs(static_cast<std::size_t>(2 * last + 1));
  for (long n = 1; n <= last; ++n) {
    const double a = phi_taylor(n) / 2.0;
    coeffs[static_cast<std::size_t>(last + n)] = a;
    coeffs[static_cast<std::size_t>(last - n)] = a;
  }
  coeffs[static_cast<std::size_t>(last)] = phi_taylor(0);
  return Spectrum(-last, std::move(coeffs));
}

cplx dirichlet_interpolate(std::span<const cplx> values, double t) {
  const long count = static_cast<long>(values.size());
  if (count % 2 == 0) {
    throw SizeMismatch("Dirichlet interpolation needs an odd sample count");
  }
  const long n = (count - 1) / 2;
  cplx sum{};
  for (long p = 0; p < count; ++p) {
    const double s = wrap(t - sample_time(p, count));
    double kernel;
    if (std::abs(s) < 1e-8) {
      kernel = 1.0;
      for (long k = 1; k <= n; ++k) kernel += 2.0 * std::cos(k * s);
    } else {
      kernel = std::sin((n + 0.5) * s) / std::sin(0.5 * s);
    }
    sum += values[static_cast<std::size_t>(p)] * kernel;
  }
  return sum / static_cast<double>(count);
}

cplx closed_form_y(ClosedForm form, long param, double t) {
  guard(t);
  const double n = static_cast<double>(param);
  const double half = std::sin(0.5 * t);
  switch (form) {
    case ClosedForm::kEx1:
      return std::sin((n + 0.5) * t) / half;
    case ClosedForm::kEx2Y1: {
      const double s3 = std::pow(std::sin((n + 0.5) * t), 3);
      return s3 * (n * n + n + 1.0 - (n + 1.0) * n * std::cos(t)) /
             ((2.0 * n + 1.0) * (2.0 * n + 1.0) * std::pow(half, 3));
    }
    case ClosedForm::kEx2Y2:
      return std::sin(t) * std::pow(std::sin((n + 0.5) * t), 3) /
             ((2.0 * n + 1.0) * (2.0 * n + 1.0) * std::pow(half, 3));
    case ClosedForm::kEx2Y3:
      return 2.0 * std::pow(std::sin((n + 0.5) * t), 3) /
             ((2.0 * n + 1.0) * (2.0 * n + 1.0) * half);
    case ClosedForm::kEx3:
      return -2.0 / half * std::sin(0.5 * n * t) *
             std::sin(0.5 * (1.0 + n) * t);
    case ClosedForm::kEx4Yr:
      return std::cos(0.5 * n * t) * std::sin(0.5 * (1.0 + n) * t) / half;
    case ClosedForm::kEx4Yi:
      return std::sin(0.5 * n * t) * std::sin(0.5 * (1.0 + n) * t) / half;
    case ClosedForm::kEx5Y1:
      return (std::cos((n + 1.0) * t) - std::cos(n * t) + std::cos(t) - 1.0) /
             (2.0 * std::cos(t) - 2.0);
    case ClosedForm::kEx5Y2: {
      const cplx e_next = std::exp(kI * ((n + 1.0) * t));
      const cplx e_back = std::exp(-kI * (n * t));
      const cplx e_one = std::exp(kI * t);
      return e_next - kI -
             kI * (e_back - 1.0) * (e_next - 1.0) / (2.0 * (e_one - 1.0));
    }
  }
  return {};
}

cplx hilbert_sampling_reference(HilbertFormula formula,
                                std::span<const cplx> values,
                                std::span<const cplx> hvalues, long n,
                                double t) {
  const long odd = 2 * n + 1;
  const long half = n + 1;
  cplx sum{};
  switch (formula) {
    case HilbertFormula::kSamplingByHilbert: {
      require_count(hvalues, odd, "sampling from Hf");
      for (long p = 0; p < odd; ++p) {
        sum += hvalues[p] * closed_form_y(ClosedForm::kEx3, n,
                                          t - sample_time(p, odd));
      }
      return sum / static_cast<double>(odd);
    }
    case HilbertFormula::kComputeHilbert: {
      require_count(values, odd, "Hilbert from f");
      const cplx a0 = mean(values);
      // The Ex3 kernel carries the -2 factor; the formula uses +2.
      for (long p = 0; p < odd; ++p) {
        sum -= (values[p] - a0) * closed_form_y(ClosedForm::kEx3, n,
                                                t - sample_time(p, odd));
      }
      return sum / static_cast<double>(odd);
    }
    case HilbertFormula::kRealValued:
    case HilbertFormula::kRealValuedHilbert: {
      require_count(values, half, "real-valued formula (f)");
      require_count(hvalues, half, "real-valued formula (Hf)");
      require_real(values);
      require_real(hvalues);
      const bool want_h = formula == HilbertFormula::kRealValuedHilbert;
      for (long p = 0; p < half; ++p) {
        const double s = t - sample_time(p, half);
        const cplx yr = closed_form_y(ClosedForm::kEx4Yr, n, s);
        const cplx yi = closed_form_y(ClosedForm::kEx4Yi, n, s);
        sum += want_h ? values[p] * yi + hvalues[p] * yr
                      : values[p] * yr - hvalues[p] * yi;
      }
      return sum / static_cast<double>(half);
    }
    case HilbertFormula::kComplexByHilbert:
    case HilbertFormula::kComplexByHilbertHilbert: {
      require_count(values, half, "complex formula (f)");
      require_count(hvalues, half, "complex formula (Hf)");
      const bool want_h = formula == HilbertFormula::kComplexByHilbertHilbert;
      cplx a0{};
      if (want_h) {
        for (long p = 0; p < half; ++p) a0 += values[p] + kI * hvalues[p];
        a0 /= static_cast<double>(half);
      }
      for (long p = 0; p < half; ++p) {
        const double s = t - sample_time(p, half);
        const cplx y1 = closed_form_y(ClosedForm::kEx5Y1, n, s);
        const cplx y2 = closed_form_y(ClosedForm::kEx5Y2, n, s);
        sum += want_h ? hvalues[p] * y1 + (a0 - values[p]) * y2
                      : values[p] * y1 + hvalues[p] * y2;
      }
      return sum / static_cast<double>(half);
    }
  }
  return {};
}

}  // namespace mci::oracle
