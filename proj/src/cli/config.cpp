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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <locale>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mci/analysis.hpp"
#include "mci/cli.hpp"
#include "mci/engine.hpp"
#include "mci/errors.hpp"
#include "mci/oracle.hpp"

namespace mci::cli {

namespace {

using nlohmann::json;

ChannelSpec parse_channel(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ConfigError("channel entry needs a string \"kind\": " + j.dump());
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "identity") return ChannelSpec::identity();
  if (kind == "hilbert") return ChannelSpec::hilbert();
  if (kind == "analytic_projection") return ChannelSpec::analytic_projection();
  if (kind == "derivative") {
    if (!j.contains("order") || !j["order"].is_number_integer()) {
      throw ConfigError("derivative channel needs an integer \"order\"");
    }
    return ChannelSpec::derivative(j["order"].get<int>());
  }
  if (kind == "table") {
    if (!j.contains("entries") || !j["entries"].is_array()) {
      throw ConfigError("table channel needs \"entries\": [[n, re, im], ...]");
    }
    std::map<long, cplx> table;
    for (const json& e : j["entries"]) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3 ||
          !e[0].is_number_integer()) {
        throw ConfigError("bad table entry: " + e.dump());
      }
      const double re = e[1].get<double>();
      const double im = e.size() == 3 ? e[2].get<double>() : 0.0;
      table[e[0].get<long>()] = cplx(re, im);
    }
    return ChannelSpec::table(std::move(table));
  }
  throw ConfigError("unknown channel kind \"" + kind + "\"");
}

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string trim(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && is_blank(s[a])) ++a;
  while (b > a && is_blank(s[b - 1])) --b;
  return s.substr(a, b - a);
}

// Strict decimal parse of the whole string.
bool parse_double(const std::string& s, double* out) {
  if (s.empty()) return false;
  std::istringstream is(s);
  is.imbue(std::locale::classic());
  is >> *out;
  return !is.fail() && is.peek() == std::char_traits<char>::eof();
}

}  // namespace

ChannelConfig parse_channels(const json& j) {
  if (!j.is_object() || !j.contains("channels") || !j["channels"].is_array()) {
    throw ConfigError("channel configuration needs a \"channels\" array");
  }
  ChannelConfig config;
  for (const json& c : j["channels"]) config.channels.push_back(parse_channel(c));
  if (config.channels.empty()) throw ConfigError("empty channel bank");
  if (j.contains("null_band")) {
    if (!j["null_band"].is_array()) {
      throw ConfigError("\"null_band\" must be an array of integers");
    }
    for (const json& n : j["null_band"]) {
      if (!n.is_number_integer()) {
        throw ConfigError("\"null_band\" must be an array of integers");
      }
      config.null_band.insert(n.get<long>());
    }
  }
  return config;
}

ChannelConfig parse_channels_arg(const std::string& text_or_path) {
  const std::string text = trim(text_or_path);
  json j;
  try {
    if (!text.empty() && text.front() == '{') {
      j = json::parse(text);
    } else {
      std::ifstream in(text);
      if (!in) throw IoError("cannot open channel file " + text);
      j = json::parse(in);
    }
  } catch (const json::exception& e) {
    throw ConfigError("channel configuration " + text + ": " + e.what());
  }
  return parse_channels(j);
}

json channels_to_json(const ChannelConfig& config) {
  json list = json::array();
  for (const ChannelSpec& c : config.channels) {
    json e;
    switch (c.kind()) {
      case ChannelSpec::Kind::kIdentity:
        e["kind"] = "identity";
        break;
      case ChannelSpec::Kind::kDerivative:
        e["kind"] = "derivative";
        e["order"] = c.order();
        break;
      case ChannelSpec::Kind::kHilbert:
        e["kind"] = "hilbert";
        break;
      case ChannelSpec::Kind::kAnalyticProjection:
        e["kind"] = "analytic_projection";
        break;
      case ChannelSpec::Kind::kTable: {
        e["kind"] = "table";
        json entries = json::array();
        for (const auto& [n, v] : c.entries()) {
          entries.push_back({n, v.real(), v.imag()});
        }
        e["entries"] = entries;
        break;
      }
    }
    list.push_back(e);
  }
  json out;
  out["channels"] = list;
  out["null_band"] = json(std::vector<long>(config.null_band.begin(),
                                            config.null_band.end()));
  return out;
}

BandSpec parse_band(const std::string& text) {
  long v[3];
  int used = 0;
  std::istringstream is(text);
  is.imbue(std::locale::classic());
  for (int i = 0; i < 3; ++i) {
    if (!(is >> v[i])) break;
    ++used;
    if (i < 2 && is.get() != ':') break;
  }
  if (used != 3 || is.peek() != std::char_traits<char>::eof()) {
    throw ConfigError("band must be n1:n2:m, got \"" + text + "\"");
  }
  if (v[2] < 1 || v[2] > 1 << 20) {
    throw ConfigError("channel count out of range in \"" + text + "\"");
  }
  return BandSpec(v[0], v[1], static_cast<int>(v[2]));
}

cplx parse_complex(const std::string& raw) {
  std::string s = trim(raw);
  double re = 0.0;
  if (parse_double(s, &re)) return {re, 0.0};
  if (!s.empty() && (s.back() == 'i' || s.back() == 'j')) {
    s.pop_back();
    // Split at the last sign that is not an exponent sign or a leading sign.
    for (std::size_t k = s.size(); k-- > 1;) {
      if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
        double im = 0.0;
        std::string im_text = s.substr(k);
        if (im_text == "+" || im_text == "-") im_text += "1";
        if (parse_double(s.substr(0, k), &re) && parse_double(im_text, &im)) {
          return {re, im};
        }
        break;
      }
    }
    double im = 0.0;
    if (s.empty() || s == "+" || s == "-") s += "1";
    if (parse_double(s, &im)) return {0.0, im};
  }
  throw ConfigError("cannot parse number \"" + raw + "\"");
}

std::string format_number(double v, int digits) {
  char buf[64];
  if (digits <= 0) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  }
  return buf;
}

std::vector<TableRow> default_table_rows() {
  return {
      {16, 16, 0, 0, 0},   {24, 24, 0, 0, 0},   {32, 16, 16, 0, 0},
      {32, 32, 0, 0, 0},   {48, 16, 0, 16, 16}, {48, 24, 24, 0, 0},
      {48, 48, 0, 0, 0},   {72, 24, 0, 24, 24}, {72, 36, 36, 0, 0},
      {72, 72, 0, 0, 0},   {96, 32, 0, 32, 32}, {96, 48, 48, 0, 0},
      {96, 96, 0, 0, 0},   {108, 36, 0, 36, 36}, {108, 54, 54, 0, 0},
      {108, 108, 0, 0, 0},
  };
}

ChannelBank table_bank(const TableRow& row) {
  const int counts[4] = {row.f, row.hf, row.d1, row.d2};
  const ChannelSpec kinds[4] = {ChannelSpec::identity(), ChannelSpec::hilbert(),
                                ChannelSpec::derivative(1),
                                ChannelSpec::derivative(2)};
  ChannelBank bank;
  int per = 0;
  int total = 0;
  for (int i = 0; i < 4; ++i) {
    if (counts[i] < 0) throw ConfigError("negative sample count in table row");
    if (counts[i] == 0) continue;
    if (per != 0 && counts[i] != per) {
      throw ConfigError("table row mu=" + std::to_string(row.mu) +
                        ": nonzero sample counts must be equal");
    }
    per = counts[i];
    total += counts[i];
    bank.push_back(kinds[i]);
  }
  if (bank.empty()) throw ConfigError("table row has no samples");
  if (total != row.mu) {
    throw ConfigError("table row mu=" + std::to_string(row.mu) +
                      ": sample counts sum to " + std::to_string(total));
  }
  return bank;
}

BandSpec table_band(const TableRow& row) {
  return BandSpec::centered(row.mu, static_cast<int>(table_bank(row).size()));
}

TableResult run_table_row(const TableRow& row, std::size_t grid) {
  const ChannelBank bank = table_bank(row);
  const BandSpec band = table_band(row);
  const Kernel kernel = build_kernel(band, bank);
  const Spectrum phi = oracle::phi_spectrum();
  const SampleSet samples = sample_channels(phi, bank, band);

  const RealSignal f_rec = real_part(evaluate(samples, kernel, grid));
  const RealSignal hf_rec = real_part(hilbert_evaluate(samples, kernel, grid));
  std::vector<double> f(grid);
  std::vector<double> hf(grid);
  for (std::size_t j = 0; j < grid; ++j) {
    const oracle::PhiSample s = oracle::phi_eval(kTwoPi * j / grid);
    f[j] = s.f;
    hf[j] = s.hf;
  }
  TableResult r;
  r.row = row;
  r.delta1 = rmse(f, f_rec.values);
  r.delta2 = rmse(hf, hf_rec.values);
  r.max_imag = std::max(f_rec.max_abs_imag, hf_rec.max_abs_imag);
  r.cond_max = kernel.cond_max();
  r.error = averaged_error(phi, kernel);
  return r;
}

std::string table_csv(const std::vector<TableResult>& results) {
  std::string out = "mu,f,hf,d1,d2,delta1,delta2\n";
  char buf[160];
  for (const TableResult& r : results) {
    std::snprintf(buf, sizeof buf, "%d,%d,%d,%d,%d,%.3e,%.3e\n", r.row.mu,
                  r.row.f, r.row.hf, r.row.d1, r.row.d2, r.delta1, r.delta2);
    out += buf;
  }
  return out;
}

}  // namespace mci::cli
