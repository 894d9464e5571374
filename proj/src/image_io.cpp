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

#include "mci/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "mci/errors.hpp"

namespace mci {
namespace {

// Next whitespace-delimited header token, skipping '#' comments.
std::string header_token(std::istream& in) {
  std::string token;
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {}
      if (!token.empty()) break;
      continue;
    }
    if (std::isspace(c)) {
      if (!token.empty()) break;
      continue;
    }
    token.push_back(static_cast<char>(c));
  }
  if (token.empty()) throw IoError("truncated image header");
  return token;
}

int header_int(std::istream& in, const char* what) {
  const std::string token = header_token(in);
  try {
    std::size_t used = 0;
    const int v = std::stoi(token, &used);
    if (used != token.size() || v <= 0) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw IoError(std::string("bad ") + what + " in image header: " + token);
  }
}

}  // namespace

ImagePlane read_image(std::istream& in) {
  const std::string magic = header_token(in);
  if (magic != "P5" && magic != "P6") {
    throw IoError("unsupported image format '" + magic +
                  "', expected binary PGM (P5) or PPM (P6)");
  }
  const int width = header_int(in, "width");
  const int height = header_int(in, "height");
  const int maxval = header_int(in, "maxval");
  if (maxval > 255) throw IoError("only 8-bit images (maxval <= 255) are supported");
  // header_token consumed exactly one whitespace byte after maxval.

  const int channels = magic == "P6" ? 3 : 1;
  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<unsigned char> raw(count * channels);
  in.read(reinterpret_cast<char*>(raw.data()),
          static_cast<std::streamsize>(raw.size()));
  if (static_cast<std::size_t>(in.gcount()) != raw.size()) {
    throw IoError("image data truncated");
  }

  const double scale = 255.0 / maxval;
  ImagePlane img(width, height);
  for (std::size_t i = 0; i < count; ++i) {
    if (channels == 1) {
      img.pixels[i] = raw[i] * scale;
    } else {
      const double y = 0.299 * raw[3 * i] + 0.587 * raw[3 * i + 1] +
                       0.114 * raw[3 * i + 2];
      img.pixels[i] = std::round(y * scale);
    }
  }
  return img;
}

ImagePlane read_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open image " + path);
  try {
    return read_image(in);
  } catch (const IoError& e) {
    throw IoError(path + ": " + e.what());
  }
}

void write_pgm(std::ostream& out, const ImagePlane& img) {
  out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
  std::vector<unsigned char> raw(img.pixels.size());
  std::transform(img.pixels.begin(), img.pixels.end(), raw.begin(),
                 [](double v) {
                   return static_cast<unsigned char>(
                       std::lround(std::clamp(v, 0.0, 255.0)));
                 });
  out.write(reinterpret_cast<const char*>(raw.data()),
            static_cast<std::streamsize>(raw.size()));
  if (!out) throw IoError("failed writing image data");
}

void write_pgm(const std::string& path, const ImagePlane& img) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot create image " + path);
  write_pgm(out, img);
}

}  // namespace mci
