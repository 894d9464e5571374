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

#ifndef MCI_SRC_FFT_HPP_
#define MCI_SRC_FFT_HPP_

#include <span>
#include <vector>

#include "mci/spectrum.hpp"

namespace mci::fft {

// X[k] = sum_j x[j] exp(-2*pi*i*j*k/n), no scaling.
std::vector<cplx> forward(std::span<const cplx> x);

// x[j] = sum_k X[k] exp(+2*pi*i*j*k/n), no scaling.
std::vector<cplx> backward(std::span<const cplx> x);

}  // namespace mci::fft

#endif  // MCI_SRC_FFT_HPP_
