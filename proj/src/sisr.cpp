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

#include "mci/sisr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "mci/channels.hpp"
#include "mci/engine.hpp"
#include "mci/errors.hpp"

namespace mci {
namespace {

// Reconstructs lines of one fixed (extended) width with the (f, f', f'')
// bank. The kernel is shared by every line of that width.
class LineUpscaler {
 public:
  LineUpscaler(int width, int factor, Extension extend)
      : width_(width),
        factor_(factor),
        extend_(extend),
        extended_(extend == Extension::kMirror ? 2 * width : width),
        offset_(extend == Extension::kMirror ? width / 2 : 0),
        band_(BandSpec::centered(3L * extended_, 3)),
        kernel_(build_kernel(band_, {ChannelSpec::identity(),
                                     ChannelSpec::derivative(1),
                                     ChannelSpec::derivative(2)})),
        oversample_((3 + factor - 1) / factor) {}

  std::vector<double> operator()(const std::vector<double>& line) const {
    std::vector<double> ext;
    if (extend_ == Extension::kMirror) {
      // Half-sample symmetric extension: mirrored head, line, mirrored tail.
      ext.reserve(static_cast<std::size_t>(extended_));
      for (int i = offset_ - 1; i >= 0; --i) ext.push_back(line[i]);
      ext.insert(ext.end(), line.begin(), line.end());
      for (int i = width_ - 1; i >= offset_; --i) ext.push_back(line[i]);
    } else {
      ext = line;
    }
    const RowDerivatives d = row_derivatives(ext);
    auto to_complex = [](const std::vector<double>& v) {
      return std::vector<cplx>(v.begin(), v.end());
    };
    const SampleSet samples = ingest(
        {to_complex(ext), to_complex(d.d1), to_complex(d.d2)}, band_);
    // A factor below 3 gives fewer output points than the band holds; the
    // grid is oversampled and strided back down instead of folding bins.
    const std::size_t grid = static_cast<std::size_t>(factor_) * extended_ *
                             static_cast<std::size_t>(oversample_);
    const GridSignal out = evaluate(samples, kernel_, grid);
    std::vector<double> result;
    result.reserve(static_cast<std::size_t>(width_) * factor_);
    const std::size_t first = static_cast<std::size_t>(offset_) * factor_;
    for (std::size_t j = 0; j < static_cast<std::size_t>(width_) * factor_; ++j) {
      result.push_back(out[(first + j) * oversample_].real());
    }
    return result;
  }

 private:
  int width_;
  int factor_;
  Extension extend_;
  int extended_;
  int offset_;
  BandSpec band_;
  Kernel kernel_;
  int oversample_;
};

void require_same_size(const ImagePlane& a, const ImagePlane& b, int crop) {
  if (a.width != b.width || a.height != b.height) {
    throw SizeMismatch("images differ in size");
  }
  if (crop < 0 || a.width <= 2 * crop || a.height <= 2 * crop) {
    throw SizeMismatch("crop border leaves no pixels to compare");
  }
}

}  // namespace

ImagePlane::ImagePlane(int w, int h, double fill)
    : width(w), height(h),
      pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

ImagePlane::ImagePlane(int w, int h, std::vector<double> px)
    : width(w), height(h), pixels(std::move(px)) {
  if (pixels.size() != static_cast<std::size_t>(w) * static_cast<std::size_t>(h)) {
    throw SizeMismatch("pixel buffer does not match image dimensions");
  }
}

ImagePlane degrade(const ImagePlane& img, const DegradeConfig& cfg) {
  if (cfg.kernel_size < 1 || cfg.kernel_size % 2 == 0) {
    throw ConfigError("blur kernel size must be odd and positive");
  }
  if (cfg.factor < 1) throw ConfigError("downsampling factor must be >= 1");
  if (!(cfg.sigma > 0.0)) throw ConfigError("blur sigma must be positive");
  if (img.width % cfg.factor != 0 || img.height % cfg.factor != 0) {
    throw DimensionNotDivisible(
        std::to_string(img.width) + "x" + std::to_string(img.height) +
        " image is not divisible by factor " + std::to_string(cfg.factor));
  }

  const int r = cfg.kernel_size / 2;
  std::vector<double> weights;
  double total = 0.0;
  for (int dy = -r; dy <= r; ++dy) {
    for (int dx = -r; dx <= r; ++dx) {
      const double w =
          std::exp(-(dx * dx + dy * dy) / (2.0 * cfg.sigma * cfg.sigma));
      weights.push_back(w);
      total += w;
    }
  }
  for (double& w : weights) w /= total;

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> noise(0.0, cfg.noise_sigma > 0.0 ? cfg.noise_sigma : 1.0);

  const int ow = img.width / cfg.factor;
  const int oh = img.height / cfg.factor;
  ImagePlane out(ow, oh);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      double v = 0.0;
      std::size_t w = 0;
      for (int dy = -r; dy <= r; ++dy) {
        const int sy = std::clamp(y + dy, 0, img.height - 1);
        for (int dx = -r; dx <= r; ++dx) {
          const int sx = std::clamp(x + dx, 0, img.width - 1);
          v += weights[w++] * img.at(sx, sy);
        }
      }
      // One draw per full-resolution pixel keeps the noise field independent
      // of the decimation phase.
      if (cfg.noise_sigma > 0.0) v += noise(rng);
      if (x % cfg.factor == 0 && y % cfg.factor == 0) {
        out.at(x / cfg.factor, y / cfg.factor) = std::clamp(v, 0.0, 255.0);
      }
    }
  }
  return out;
}

RowDerivatives row_derivatives(const std::vector<double>& row) {
  const std::size_t w = row.size();
  if (w < 3) throw TooShort("derivative estimate needs at least 3 samples");
  const double scale = static_cast<double>(w) / kTwoPi;
  RowDerivatives d;
  d.d1.resize(w);
  d.d2.resize(w);
  for (std::size_t p = 0; p < w; ++p) {
    const double prev = row[(p + w - 1) % w];
    const double next = row[(p + 1) % w];
    d.d1[p] = scale * 0.5 * (next - prev);
    d.d2[p] = scale * scale * (next - 2.0 * row[p] + prev);
  }
  return d;
}

std::vector<double> upscale_line(const std::vector<double>& line, int factor,
                                 Extension extend) {
  if (factor < 1) throw ConfigError("upscale factor must be >= 1");
  if (line.size() < 3) throw TooShort("upscale needs lines of at least 3 pixels");
  if (factor == 1) return line;
  return LineUpscaler(static_cast<int>(line.size()), factor, extend)(line);
}

ImagePlane upscale_unclamped(const ImagePlane& img, int factor,
                             Extension extend) {
  if (factor < 1) throw ConfigError("upscale factor must be >= 1");
  if (factor == 1) return img;
  if (img.width < 3 || img.height < 3) {
    throw TooShort("upscale needs images of at least 3x3 pixels");
  }
  const int ow = img.width * factor;
  const int oh = img.height * factor;

  ImagePlane rows(ow, img.height);
  const LineUpscaler row_pass(img.width, factor, extend);
  std::vector<double> line(static_cast<std::size_t>(img.width));
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) line[x] = img.at(x, y);
    const std::vector<double> up = row_pass(line);
    for (int x = 0; x < ow; ++x) rows.at(x, y) = up[x];
  }

  ImagePlane out(ow, oh);
  const LineUpscaler col_pass(img.height, factor, extend);
  std::vector<double> column(static_cast<std::size_t>(img.height));
  for (int x = 0; x < ow; ++x) {
    for (int y = 0; y < img.height; ++y) column[y] = rows.at(x, y);
    const std::vector<double> up = col_pass(column);
    for (int y = 0; y < oh; ++y) out.at(x, y) = up[y];
  }
  return out;
}

ImagePlane upscale(const ImagePlane& img, int factor, Extension extend) {
  ImagePlane out = upscale_unclamped(img, factor, extend);
  for (double& v : out.pixels) v = std::clamp(v, 0.0, 255.0);
  return out;
}

double psnr(const ImagePlane& a, const ImagePlane& b, int crop) {
  require_same_size(a, b, crop);
  double sum = 0.0;
  std::size_t count = 0;
  for (int y = crop; y < a.height - crop; ++y) {
    for (int x = crop; x < a.width - crop; ++x) {
      const double d = a.at(x, y) - b.at(x, y);
      sum += d * d;
      ++count;
    }
  }
  const double mse = sum / static_cast<double>(count);
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

double cc(const ImagePlane& a, const ImagePlane& b, int crop) {
  require_same_size(a, b, crop);
  double ma = 0.0, mb = 0.0;
  std::size_t count = 0;
  for (int y = crop; y < a.height - crop; ++y) {
    for (int x = crop; x < a.width - crop; ++x) {
      ma += a.at(x, y);
      mb += b.at(x, y);
      ++count;
    }
  }
  ma /= static_cast<double>(count);
  mb /= static_cast<double>(count);
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (int y = crop; y < a.height - crop; ++y) {
    for (int x = crop; x < a.width - crop; ++x) {
      const double da = a.at(x, y) - ma;
      const double db = b.at(x, y) - mb;
      sab += da * db;
      saa += da * da;
      sbb += db * db;
    }
  }
  if (saa == 0.0 || sbb == 0.0) {
    throw ZeroVariance("correlation undefined for a constant image");
  }
  return sab / std::sqrt(saa * sbb);
}

}  // namespace mci
