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
#include <cstdint>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mci/analysis.hpp"
#include "mci/cli.hpp"
#include "mci/engine.hpp"
#include "mci/errors.hpp"
#include "mci/image_io.hpp"
#include "mci/sisr.hpp"

namespace mci::cli {

namespace {

using nlohmann::json;

constexpr double kCondWarn = 1e8;
constexpr double kImagWarn = 1e-6;
// phi coefficients below this magnitude are dropped.
constexpr double kPhiTruncation = 1e-14;

// Raw flag values; only those given on the command line override the config
// file.
struct Flags {
  std::string config;
  std::uint64_t seed = 0;
  std::string out;
  long grid = 0;
  std::string band;
  std::string channels;
  std::string extend;
  double noise_sigma = 0.0;
  int digits = 0;
  // command specific
  std::string input;
  std::string reference;
  std::string metrics;
  std::string error_report;
  int factor = 0;
  int kernel_size = 0;
  double sigma = 0.0;
  int crop = 0;
  bool hilbert = false;
  bool real = false;
  std::vector<int> row;
};

class RunConfig {
 public:
  RunConfig(const CLI::App& sub, const Flags& flags) {
    if (!flags.config.empty()) {
      std::ifstream in(flags.config);
      if (!in) throw IoError("cannot open config " + flags.config);
      try {
        values_ = json::parse(in);
      } catch (const json::exception& e) {
        throw ConfigError(flags.config + ": " + e.what());
      }
      if (!values_.is_object()) {
        throw ConfigError(flags.config + ": top level must be an object");
      }
    } else {
      values_ = json::object();
    }
    auto given = [&](const char* name) {
      const CLI::Option* opt = sub.get_option_no_throw(name);
      return opt != nullptr && opt->count() > 0;
    };
    if (given("--seed")) values_["seed"] = flags.seed;
    if (given("--out")) values_["out"] = flags.out;
    if (given("--grid")) values_["grid"] = flags.grid;
    if (given("--band")) values_["band"] = flags.band;
    if (given("--channels")) values_["channels"] = flags.channels;
    if (given("--extend")) values_["extend"] = flags.extend;
    if (given("--noise-sigma")) values_["noise_sigma"] = flags.noise_sigma;
    if (given("--digits")) values_["digits"] = flags.digits;
    if (given("input")) values_["input"] = flags.input;
    if (given("--reference")) values_["reference"] = flags.reference;
    if (given("--metrics")) values_["metrics"] = flags.metrics;
    if (given("--error-report")) values_["error_report"] = flags.error_report;
    if (given("--factor")) values_["factor"] = flags.factor;
    if (given("--kernel-size")) values_["kernel_size"] = flags.kernel_size;
    if (given("--sigma")) values_["sigma"] = flags.sigma;
    if (given("--crop")) values_["crop"] = flags.crop;
    if (given("--hilbert")) values_["hilbert"] = flags.hilbert;
    if (given("--real")) values_["real"] = flags.real;
    if (given("--row")) {
      if (flags.row.size() != 5) throw ConfigError("--row takes mu f hf d1 d2");
      values_["rows"] = json::array({flags.row});
    }
  }

  bool has(const char* key) const { return values_.contains(key); }

  template <typename T>
  T get(const char* key, T fallback) const {
    if (!values_.contains(key)) return fallback;
    try {
      return values_.at(key).get<T>();
    } catch (const json::exception&) {
      throw ConfigError(std::string("bad value for \"") + key +
                        "\": " + values_.at(key).dump());
    }
  }

  std::string require_string(const char* key, const char* what) const {
    const std::string v = get<std::string>(key, "");
    if (v.empty()) throw ConfigError(std::string("missing ") + what);
    return v;
  }

  long positive(const char* key, long fallback) const {
    const long v = get<long>(key, fallback);
    if (v <= 0) throw ConfigError(std::string(key) + " must be positive");
    return v;
  }

  BandSpec band() const {
    if (!has("band")) throw ConfigError("missing band (--band n1:n2:m)");
    const json& b = values_.at("band");
    if (b.is_string()) return parse_band(b.get<std::string>());
    if (b.is_object()) {
      try {
        return BandSpec(b.at("n1").get<long>(), b.at("n2").get<long>(),
                        b.at("m").get<int>());
      } catch (const json::exception&) {
      }
    }
    throw ConfigError("band must be \"n1:n2:m\" or {\"n1\",\"n2\",\"m\"}");
  }

  ChannelConfig channels() const {
    if (!has("channels")) throw ConfigError("missing channel bank (--channels)");
    const json& c = values_.at("channels");
    if (c.is_string()) return parse_channels_arg(c.get<std::string>());
    if (c.is_object()) return parse_channels(c);
    // Bare array form inside a config file.
    return parse_channels(json{{"channels", c}});
  }

  Extension extend() const {
    const std::string e = get<std::string>("extend", "periodic");
    if (e == "periodic") return Extension::kPeriodic;
    if (e == "mirror") return Extension::kMirror;
    throw ConfigError("extend must be periodic or mirror, got \"" + e + "\"");
  }

  int digits() const {
    const int d = get<int>("digits", 0);
    if (d < 0 || d > 17) throw ConfigError("digits must lie in 0..17");
    return d;
  }

  const json& raw(const char* key) const { return values_.at(key); }

 private:
  json values_;
};

// Writes `text` to the configured output or to `out` for "-" / unset.
void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  const std::string path = cfg.get<std::string>("out", "-");
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot create " + path);
  file << text;
  if (!file) throw IoError("failed writing " + path);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot create " + path);
  file << text;
  if (!file) throw IoError("failed writing " + path);
}

void warn_condition(const Kernel& kernel, std::ostream& err) {
  if (kernel.cond_max() > kCondWarn) {
    err << "warning: interpolation matrices are ill-conditioned (cond_max = "
        << format_number(kernel.cond_max(), 4) << ")\n";
  }
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

bool blank_line(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<TableRow> table_rows(const RunConfig& cfg) {
  if (!cfg.has("rows")) return default_table_rows();
  const json& rows = cfg.raw("rows");
  if (!rows.is_array()) throw ConfigError("\"rows\" must be an array");
  std::vector<TableRow> out;
  for (const json& r : rows) {
    TableRow row;
    try {
      if (r.is_array() && r.size() == 5) {
        row = {r[0].get<int>(), r[1].get<int>(), r[2].get<int>(),
               r[3].get<int>(), r[4].get<int>()};
      } else if (r.is_object()) {
        row.mu = r.at("mu").get<int>();
        row.f = r.value("f", 0);
        row.hf = r.value("hf", 0);
        row.d1 = r.value("d1", 0);
        row.d2 = r.value("d2", 0);
      } else {
        throw ConfigError("table row must be [mu,f,hf,d1,d2] or an object");
      }
    } catch (const json::exception&) {
      throw ConfigError("bad table row: " + r.dump());
    }
    table_bank(row);  // validates
    out.push_back(row);
  }
  return out;
}

int cmd_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::vector<TableRow> rows = table_rows(cfg);
  const std::size_t grid = static_cast<std::size_t>(cfg.positive("grid", 2048));
  const std::string report_path = cfg.get<std::string>("error_report", "");

  std::vector<TableResult> results;
  for (const TableRow& row : rows) {
    results.push_back(run_table_row(row, grid));
    const TableResult& r = results.back();
    if (r.cond_max > kCondWarn) {
      err << "warning: mu=" << row.mu << " cond_max = "
          << format_number(r.cond_max, 4) << "\n";
    }
    if (r.max_imag > kImagWarn) {
      err << "warning: mu=" << row.mu << " imaginary residual "
          << format_number(r.max_imag, 4) << " discarded\n";
    }
  }
  emit(cfg, table_csv(results), out);

  if (!report_path.empty()) {
    json report = json::array();
    for (const TableResult& r : results) {
      json e = json::parse(to_json(r.error));
      e["mu"] = r.row.mu;
      e["f"] = r.row.f;
      e["hf"] = r.row.hf;
      e["d1"] = r.row.d1;
      e["d2"] = r.row.d2;
      e["truncation"] = kPhiTruncation;
      report.push_back(e);
    }
    write_file(report_path, report.dump(2) + "\n");
  }
  return 0;
}

std::vector<std::vector<cplx>> read_sample_csv(const std::string& path,
                                               const BandSpec& band) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open samples " + path);
  std::vector<std::vector<cplx>> columns(
      static_cast<std::size_t>(band.channels()));
  std::string line;
  long line_no = 0;
  bool header = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_line(line)) continue;
    const std::vector<std::string> cells = split_csv_line(line);
    if (static_cast<int>(cells.size()) != band.channels()) {
      throw SizeMismatch(path + ":" + std::to_string(line_no) + ": expected " +
                         std::to_string(band.channels()) + " columns, found " +
                         std::to_string(cells.size()));
    }
    if (header) {
      header = false;
      continue;
    }
    for (std::size_t m = 0; m < cells.size(); ++m) {
      try {
        columns[m].push_back(parse_complex(cells[m]));
      } catch (const ConfigError& e) {
        throw ConfigError(path + ":" + std::to_string(line_no) + ": " +
                          e.what());
      }
    }
  }
  if (header) throw IoError(path + ": missing header row");
  if (static_cast<long>(columns[0].size()) != band.per_channel()) {
    throw SizeMismatch(path + ": expected " +
                       std::to_string(band.per_channel()) +
                       " sample rows per channel, found " +
                       std::to_string(columns[0].size()));
  }
  return columns;
}

int cmd_reconstruct(const RunConfig& cfg, std::ostream& out,
                    std::ostream& err) {
  const BandSpec band = cfg.band();
  const ChannelConfig channels = cfg.channels();
  const std::string input = cfg.require_string("input", "samples CSV");
  const long grid = cfg.positive("grid", std::max<long>(1024, band.size()));
  const int digits = cfg.digits();
  const bool with_hilbert = cfg.get<bool>("hilbert", false);
  const bool real_only = cfg.get<bool>("real", false);
  if (grid < band.size()) {
    throw AliasError("grid " + std::to_string(grid) +
                     " is smaller than the band size " +
                     std::to_string(band.size()));
  }

  const Kernel kernel =
      build_kernel(band, channels.channels, channels.null_band);
  warn_condition(kernel, err);
  const SampleSet samples = ingest(read_sample_csv(input, band), band);
  const auto n = static_cast<std::size_t>(grid);
  const GridSignal f = evaluate(samples, kernel, n);
  GridSignal hf(std::vector<cplx>{});
  if (with_hilbert) hf = hilbert_evaluate(samples, kernel, n);

  std::string csv = "t";
  csv += real_only ? ",f" : ",re,im";
  if (with_hilbert) csv += real_only ? ",hf" : ",hre,him";
  csv += "\n";
  double max_imag = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    csv += format_number(f.time(j), digits);
    auto put = [&](cplx v) {
      csv += ',';
      csv += format_number(v.real(), digits);
      if (real_only) {
        max_imag = std::max(max_imag, std::abs(v.imag()));
      } else {
        csv += ',';
        csv += format_number(v.imag(), digits);
      }
    };
    put(f[j]);
    if (with_hilbert) put(hf[j]);
    csv += '\n';
  }
  if (real_only && max_imag > kImagWarn) {
    err << "warning: imaginary residual " << format_number(max_imag, 4)
        << " discarded by --real\n";
  }
  emit(cfg, csv, out);
  return 0;
}

int cmd_kernels(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const BandSpec band = cfg.band();
  const ChannelConfig channels = cfg.channels();
  const long grid = cfg.positive("grid", 1024);
  const int digits = cfg.digits();
  const Kernel kernel =
      build_kernel(band, channels.channels, channels.null_band);
  warn_condition(kernel, err);

  std::string csv = "t";
  for (int m = 1; m <= band.channels(); ++m) {
    const std::string idx = std::to_string(m);
    csv += ",y" + idx + "_re,y" + idx + "_im";
  }
  csv += '\n';
  for (long j = 0; j < grid; ++j) {
    const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(grid);
    csv += format_number(t, digits);
    for (int m = 0; m < band.channels(); ++m) {
      const cplx y = kernel.eval_y(m, t);
      csv += ',';
      csv += format_number(y.real(), digits);
      csv += ',';
      csv += format_number(y.imag(), digits);
    }
    csv += '\n';
  }
  emit(cfg, csv, out);
  return 0;
}

std::string require_out_path(const RunConfig& cfg) {
  const std::string path = cfg.get<std::string>("out", "");
  if (path.empty() || path == "-") {
    throw ConfigError("an output image path is required (--out)");
  }
  return path;
}

int cmd_degrade(const RunConfig& cfg, std::ostream&, std::ostream&) {
  const std::string input = cfg.require_string("input", "input image");
  const std::string out_path = require_out_path(cfg);
  DegradeConfig dc;
  dc.kernel_size = static_cast<int>(cfg.positive("kernel_size", dc.kernel_size));
  dc.sigma = cfg.get<double>("sigma", dc.sigma);
  dc.factor = static_cast<int>(cfg.positive("factor", dc.factor));
  dc.noise_sigma = cfg.get<double>("noise_sigma", dc.noise_sigma);
  dc.seed = cfg.get<std::uint64_t>("seed", dc.seed);
  const ImagePlane img = read_image(input);
  ImagePlane low;
  try {
    low = degrade(img, dc);
  } catch (const DimensionNotDivisible& e) {
    throw DimensionNotDivisible(input + ": " + e.what());
  }
  write_pgm(out_path, low);
  return 0;
}

int cmd_sisr(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  const std::string input = cfg.require_string("input", "input image");
  const std::string out_path = require_out_path(cfg);
  const int factor = static_cast<int>(cfg.positive("factor", 3));
  const Extension extend = cfg.extend();
  const std::string reference = cfg.get<std::string>("reference", "");
  const std::string metrics_path = cfg.get<std::string>("metrics", "-");
  const int crop = cfg.get<int>("crop", factor);
  if (crop < 0) throw ConfigError("crop must be non-negative");

  const ImagePlane low = read_image(input);
  const ImagePlane high = upscale(low, factor, extend);
  write_pgm(out_path, high);
  if (reference.empty()) return 0;

  const ImagePlane ref = read_image(reference);
  if (ref.width != high.width || ref.height != high.height) {
    throw SizeMismatch(reference + " is " + std::to_string(ref.width) + "x" +
                       std::to_string(ref.height) + ", upscaled image is " +
                       std::to_string(high.width) + "x" +
                       std::to_string(high.height));
  }
  json m;
  const double p = psnr(ref, high, crop);
  m["psnr"] = std::isfinite(p) ? json(p) : json("inf");
  m["cc"] = cc(ref, high, crop);
  m["crop"] = crop;
  m["factor"] = factor;
  const std::string text = m.dump(2) + "\n";
  if (metrics_path == "-") {
    out << text;
  } else {
    write_file(metrics_path, text);
  }
  return 0;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON config file; flags override it")
      ->check(CLI::ExistingFile);
  sub->add_option("--seed", f.seed, "random seed");
  sub->add_option("--out", f.out, "output path ('-' for stdout)");
  sub->add_option("--grid", f.grid, "evaluation grid size");
  sub->add_option("--band", f.band, "band as n1:n2:m");
  sub->add_option("--channels", f.channels, "channel bank JSON or JSON file");
  sub->add_option("--extend", f.extend, "boundary extension")
      ->check(CLI::IsMember({"periodic", "mirror"}));
  sub->add_option("--noise-sigma", f.noise_sigma, "additive noise level");
  sub->add_option("--digits", f.digits,
                  "significant digits for CSV output (default: round trip)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Multichannel interpolation of periodic signals and images",
               "mci"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* table = app.add_subcommand(
      "table", "RMSE table for phi under the configured sample mixes");
  add_common(table, flags);
  table->add_option("--error-report", flags.error_report,
                    "write the averaged-error report of each row as JSON");
  table->add_option("--row", flags.row, "single row: mu f hf d1 d2")
      ->expected(5);

  CLI::App* recon = app.add_subcommand(
      "reconstruct", "reconstruct a signal from channel samples (CSV)");
  add_common(recon, flags);
  recon->add_option("input", flags.input, "samples CSV, one column per channel");
  recon->add_flag("--hilbert", flags.hilbert, "also output the Hilbert transform");
  recon->add_flag("--real", flags.real, "output real parts only");

  CLI::App* sisr = app.add_subcommand("sisr", "upscale an image");
  add_common(sisr, flags);
  sisr->add_option("input", flags.input, "PGM/PPM image");
  sisr->add_option("--factor", flags.factor, "upscaling factor (default 3)");
  sisr->add_option("--reference", flags.reference, "ground-truth image");
  sisr->add_option("--metrics", flags.metrics, "metrics JSON path");
  sisr->add_option("--crop", flags.crop, "border excluded from metrics");

  CLI::App* deg = app.add_subcommand("degrade", "blur and decimate an image");
  add_common(deg, flags);
  deg->add_option("input", flags.input, "PGM/PPM image");
  deg->add_option("--factor", flags.factor, "decimation factor (default 3)");
  deg->add_option("--kernel-size", flags.kernel_size,
                  "Gaussian kernel size (default 5)");
  deg->add_option("--sigma", flags.sigma, "Gaussian sigma (default 1.0)");

  CLI::App* kern = app.add_subcommand("kernels", "tabulate y_m(t) as CSV");
  add_common(kern, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  using Command = std::function<int(const RunConfig&, std::ostream&,
                                    std::ostream&)>;
  const std::pair<CLI::App*, Command> commands[] = {
      {table, cmd_table},   {recon, cmd_reconstruct}, {sisr, cmd_sisr},
      {deg, cmd_degrade},   {kern, cmd_kernels},
  };
  for (const auto& [sub, command] : commands) {
    if (!sub->parsed()) continue;
    try {
      const RunConfig cfg(*sub, flags);
      return command(cfg, out, err);
    } catch (const std::exception& e) {
      err << "mci " << sub->get_name() << ": " << e.what() << "\n";
      return 1;
    }
  }
  return 1;
}

}  // namespace mci::cli
