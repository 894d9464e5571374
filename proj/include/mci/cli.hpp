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

#ifndef MCI_CLI_HPP_
#define MCI_CLI_HPP_

// Command-line surface: experiment reproduction, signal reconstruction,
// image degradation and super-resolution, kernel dumps.

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "mci/analysis.hpp"
#include "mci/channels.hpp"
#include "mci/spectrum.hpp"

namespace mci::cli {

// Channel bank plus null band, as read from
// {"channels":[{"kind":"derivative","order":1}, ...], "null_band":[0]}.
// Kinds: identity, derivative (order), hilbert, analytic_projection,
// table (entries: [[n, re, im], ...]).
struct ChannelConfig {
  ChannelBank channels;
  std::set<long> null_band;
};
ChannelConfig parse_channels(const nlohmann::json& j);
// Accepts inline JSON (starting with '{') or a path to a JSON file.
ChannelConfig parse_channels_arg(const std::string& text_or_path);
nlohmann::json channels_to_json(const ChannelConfig& config);

// "n1:n2:m"
BandSpec parse_band(const std::string& text);

// Parses "1.5", "-2e-3", "1+2i", "0.5-1e-3j".
cplx parse_complex(const std::string& text);

// Numeric CSV cell: full round-trip precision when digits <= 0, otherwise
// `digits` significant digits.
std::string format_number(double v, int digits);

// One row of the phi approximation experiment: sample counts per data type.
// Nonzero counts must be equal; they give L, and their sum is mu = L*M.
struct TableRow {
  int mu = 0;
  int f = 0;
  int hf = 0;
  int d1 = 0;
  int d2 = 0;
};
std::vector<TableRow> default_table_rows();

struct TableResult {
  TableRow row;
  double delta1 = 0.0;   // relative RMS error of Re T_N f against f
  double delta2 = 0.0;   // relative RMS error of Re H(T_N f) against Hf
  double max_imag = 0.0; // largest discarded imaginary part
  double cond_max = 0.0;
  ErrorReport error;     // averaged error of T_N on phi for this bank
};

// Channel bank (in f, Hf, f', f'' order) and centered band for a row.
ChannelBank table_bank(const TableRow& row);
BandSpec table_band(const TableRow& row);

TableResult run_table_row(const TableRow& row, std::size_t grid = 2048);

// CSV with header mu,f,hf,d1,d2,delta1,delta2; deltas in scientific notation
// with 4 significant digits.
std::string table_csv(const std::vector<TableResult>& results);

// Full CLI entry point. Returns the process exit code; diagnostics and errors
// go to `err`, data written to stdout goes to `out`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace mci::cli

#endif  // MCI_CLI_HPP_
