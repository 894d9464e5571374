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

#ifndef MCI_SISR_HPP_
#define MCI_SISR_HPP_

// Single-image super-resolution by separable multichannel interpolation.
//
// Each row is treated as L = W samples of a 2*pi-periodic signal together with
// centered-difference estimates of its first and second derivatives; the
// three-channel (f, f', f'') bank reconstructs the row on a grid `factor`
// times finer. Columns of the intermediate image are then processed the same
// way.

#include <cstdint>
#include <utility>
#include <vector>

namespace mci {

// Single luminance plane, row-major. Values are nominally in [0, 255] but
// intermediate results may leave that range.
struct ImagePlane {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;

  ImagePlane() = default;
  ImagePlane(int w, int h, double fill = 0.0);
  ImagePlane(int w, int h, std::vector<double> px);

  double& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
};

struct DegradeConfig {
  int kernel_size = 5;
  double sigma = 1.0;
  int factor = 3;
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
};

// Gaussian blur (replicate edges), optional additive noise, decimation keeping
// pixels (factor*i, factor*j), clamp to [0, 255]. Throws
// DimensionNotDivisible when the image size is not a multiple of factor.
ImagePlane degrade(const ImagePlane& img, const DegradeConfig& cfg);

struct RowDerivatives {
  std::vector<double> d1;
  std::vector<double> d2;
};

// Three-point centered differences with periodic wrap, scaled from pixel
// units to derivatives with respect to t = 2*pi*p/W. Throws TooShort for
// W < 3.
RowDerivatives row_derivatives(const std::vector<double>& row);

enum class Extension { kPeriodic, kMirror };

// Upscales one line by `factor` without clamping. Output sample j sits at
// input position j / factor, so every factor-th output reproduces the input.
std::vector<double> upscale_line(const std::vector<double>& line, int factor,
                                 Extension extend = Extension::kPeriodic);

// Separable rows-then-columns upscale without clamping.
ImagePlane upscale_unclamped(const ImagePlane& img, int factor,
                             Extension extend = Extension::kPeriodic);

// upscale_unclamped followed by a clamp to [0, 255].
ImagePlane upscale(const ImagePlane& img, int factor,
                   Extension extend = Extension::kPeriodic);

// PSNR in dB over the image with `crop` border pixels removed; +infinity for
// identical inputs.
double psnr(const ImagePlane& a, const ImagePlane& b, int crop);

// Pearson correlation over the same cropped region as psnr.
double cc(const ImagePlane& a, const ImagePlane& b, int crop);

}  // namespace mci

#endif  // MCI_SISR_HPP_
