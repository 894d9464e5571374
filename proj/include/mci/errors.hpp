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

#ifndef MCI_ERRORS_HPP_
#define MCI_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mci {

// Base of every error thrown by the library. Callers that do not care about
// the category can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Output grid too small to hold a spectrum without folding bins together.
class AliasError : public Error {
 public:
  using Error::Error;
};

class SizeMismatch : public Error {
 public:
  using Error::Error;
};

class BandMismatch : public Error {
 public:
  using Error::Error;
};

// A per-frequency channel matrix could not be inverted and the frequency was
// not listed in the null band.
class SingularMatrix : public Error {
 public:
  explicit SingularMatrix(long frequency)
      : Error("channel matrix is singular at frequency " +
              std::to_string(frequency)),
        frequency_(frequency) {}
  long frequency() const { return frequency_; }

 private:
  long frequency_;
};

class ModeMismatch : public Error {
 public:
  using Error::Error;
};

// Closed-form reference evaluated too close to one of its 0/0 points.
class NearSingularity : public Error {
 public:
  using Error::Error;
};

class DimensionNotDivisible : public Error {
 public:
  using Error::Error;
};

class TooShort : public Error {
 public:
  using Error::Error;
};

class ZeroReference : public Error {
 public:
  using Error::Error;
};

class ZeroVariance : public Error {
 public:
  using Error::Error;
};

// Invalid parameters: malformed bands, channel descriptions, CLI config.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace mci

#endif  // MCI_ERRORS_HPP_
