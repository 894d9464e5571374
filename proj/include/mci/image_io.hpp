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

#ifndef MCI_IMAGE_IO_HPP_
#define MCI_IMAGE_IO_HPP_

#include <iosfwd>
#include <string>

#include "mci/sisr.hpp"

namespace mci {

// Binary PGM ("P5") or PPM ("P6") with maxval <= 255. Color input is reduced
// to luminance, Y = round(0.299 R + 0.587 G + 0.114 B).
ImagePlane read_image(std::istream& in);
ImagePlane read_image(const std::string& path);

// Binary PGM, maxval 255; pixels are clamped and rounded to nearest.
void write_pgm(std::ostream& out, const ImagePlane& img);
void write_pgm(const std::string& path, const ImagePlane& img);

}  // namespace mci

#endif  // MCI_IMAGE_IO_HPP_
