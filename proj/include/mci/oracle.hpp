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

#ifndef MCI_ORACLE_HPP_
#define MCI_ORACLE_HPP_

// Reference implementations used to cross-check the fast paths: the
// trigonometric-interpolation Dirichlet formula, literal closed-form kernels
// for the standard channel banks, the Hilbert sampling formulas, and the
// analytic test signal phi.
//
// Closed forms here are 0/0 at t = 2k*pi and are evaluated literally; callers
// must stay away from those points. Nothing in this header is fast.

#include <span>

#include "mci/spectrum.hpp"

namespace mci::oracle {

// phi(z) = (0.08 z^2 + 0.06 z^10) / ((1.3 - z)(1.5 - z))
//        + (0.05 z^3 + 0.09 z^10) / ((1.2 + z)(1.3 + z)),
// analytic on the closed unit disk, so on z = e^{it} its imaginary part is
// the circular Hilbert transform of its real part.
struct PhiSample {
  double f = 0.0;   // Re phi(e^{it})
  double hf = 0.0;  // Im phi(e^{it})
};
PhiSample phi_eval(double t);

// Fourier coefficients of f = Re phi(e^{it}) from the power series of phi,
// kept for |n| up to the last index with |a(n)| >= threshold.
Spectrum phi_spectrum(double threshold = 1e-14);

// (1/(2N+1)) sum_p values[p] D_N(t - t_p) with the Dirichlet kernel
// D_N(s) = sin((N + 1/2)s) / sin(s/2); within 1e-8 of s = 2k*pi the kernel
// is summed as a series instead. values.size() must be odd.
cplx dirichlet_interpolate(std::span<const cplx> values, double t);

enum class ClosedForm {
  kEx1,     // N-th order Dirichlet kernel, param N
  kEx2Y1,   // sample/derivative bank kernels, param N0 (N = 3 N0 + 1)
  kEx2Y2,
  kEx2Y3,
  kEx3,     // Hilbert-only bank, param N
  kEx4Yr,   // real / imaginary parts of sum_{n=0}^{N} e^{int}, param N
  kEx4Yi,
  kEx5Y1,   // identity + Hilbert bank on {-N..N+1}, param N
  kEx5Y2,
};

// Literal evaluation of the printed kernel. Throws NearSingularity within
// 1e-6 of t = 2k*pi.
cplx closed_form_y(ClosedForm form, long param, double t);

enum class HilbertFormula {
  kSamplingByHilbert,      // f from 2N+1 samples of Hf (requires a(0) = 0)
  kComputeHilbert,         // Hf from 2N+1 samples of f
  kRealValued,             // f from N+1 samples of f and Hf, f real
  kRealValuedHilbert,      // Hf from N+1 samples of f and Hf, f real
  kComplexByHilbert,       // f from N+1 samples of f and Hf
  kComplexByHilbertHilbert // Hf from N+1 samples of f and Hf
};

// Evaluates the selected sampling formula at t. `values` are samples of f and
// `hvalues` samples of Hf on the formula's grid (2N+1 or N+1 points); the
// unused one may be empty. a(0) is estimated from the samples where the
// formula needs it. Throws SizeMismatch on wrong counts, ConfigError for
// complex input to the real-valued formulas, NearSingularity when t is
// within 1e-6 of a sample point.
cplx hilbert_sampling_reference(HilbertFormula formula,
                                std::span<const cplx> values,
                                std::span<const cplx> hvalues, long n,
                                double t);

}  // namespace mci::oracle

#endif  // MCI_ORACLE_HPP_
