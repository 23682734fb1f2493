// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include "mulnet/datagen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mulnet/rng.hpp"

namespace mulnet {

namespace {

std::string format_double(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw IoError("bad numeric field: '" + std::string(s) + "'");
  }
  return v;
}

void check_target(const TargetFunction& t) {
  if (t.kind == TargetKind::kProduct) {
    if (t.n_inputs < 2 || t.n_inputs > 4) {
      throw ConfigError("product target takes 2-4 inputs");
    }
  } else if (t.n_inputs != 4) {
    throw ConfigError("complex target takes exactly 4 inputs");
  }
  if (!(t.normalizer >= 1.0)) {
    throw ConfigError("normalizer must be >= 1");
  }
}

}  // namespace

TargetFunction TargetFunction::product(std::size_t n, double normalizer) {
  TargetFunction t{TargetKind::kProduct, n, normalizer};
  check_target(t);
  return t;
}

TargetFunction TargetFunction::complex() {
  return TargetFunction{TargetKind::kComplex, 4, 1.0};
}

std::string TargetFunction::to_string() const {
  if (kind == TargetKind::kComplex) return "complex";
  std::ostringstream out;
  out << "product:n=" << n_inputs << ",N=" << normalizer;
  return out.str();
}

TargetFunction TargetFunction::parse(std::string_view text) {
  if (text == "complex") return complex();
  constexpr std::string_view kPrefix = "product:";
  if (!text.starts_with(kPrefix)) {
    throw ConfigError("bad target spec '" + std::string(text) +
                      "' (want 'product:n=K,N=V' or 'complex')");
  }
  std::size_t n = 0;
  double normalizer = 1.0;
  bool have_n = false;
  std::string_view rest = text.substr(kPrefix.size());
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{}
                                           : rest.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("bad target spec item '" + std::string(item) + "'");
    }
    const std::string_view key = item.substr(0, eq);
    const std::string_view value = item.substr(eq + 1);
    if (key == "n") {
      n = static_cast<std::size_t>(parse_double(value));
      have_n = true;
    } else if (key == "N") {
      normalizer = parse_double(value);
    } else {
      throw ConfigError("unknown target spec key '" + std::string(key) + "'");
    }
  }
  if (!have_n) {
    throw ConfigError("target spec missing n");
  }
  return product(n, normalizer);
}

std::string TargetFunction::expression() const {
  if (kind == TargetKind::kComplex) return "x1(x2+x3)+x4";
  std::ostringstream out;
  for (std::size_t i = 1; i <= n_inputs; ++i) out << "x" << i;
  if (normalizer != 1.0) out << "/" << normalizer;
  return out.str();
}

double target_value(const TargetFunction& target, std::span<const double> x) {
  check_target(target);
  if (x.size() != target.n_inputs) {
    throw ShapeError("target_value: row width " + std::to_string(x.size()) +
                     " != " + std::to_string(target.n_inputs));
  }
  if (target.kind == TargetKind::kProduct) {
    double prod = 1.0;
    for (double v : x) prod *= v;
    return prod / target.normalizer;
  }
  return x[0] * (x[1] + x[2]) + x[3];
}

Dataset generate(const TargetFunction& target, double low, double high,
                 std::size_t samples, std::uint64_t seed) {
  check_target(target);
  if (!(low < high)) {
    throw ConfigError("range low must be < high");
  }
  if (samples < 1) {
    throw ConfigError("need at least one sample");
  }
  Rng rng(seed);
  Dataset d;
  d.X = Matrix(samples, target.n_inputs);
  d.y = Matrix(samples, 1);
  for (std::size_t r = 0; r < samples; ++r) {
    double* row = d.X.data() + r * target.n_inputs;
    for (std::size_t c = 0; c < target.n_inputs; ++c) {
      row[c] = rng.uniform(low, high);
    }
    d.y(r, 0) = target_value(target, {row, target.n_inputs});
  }
  d.meta = {low, high, target, seed, samples};
  return d;
}

Histogram histogram(const Dataset& data, std::size_t bins) {
  if (bins < 1) {
    throw ConfigError("need at least one bin");
  }
  const double* begin = data.X.data();
  const double* end = begin + data.X.size();
  const auto [min_it, max_it] = std::minmax_element(begin, end);
  const double lo = *min_it;
  const double hi = *max_it;

  Histogram h;
  h.edges.resize(bins + 1);
  h.counts.assign(bins, 0);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t i = 0; i <= bins; ++i) {
    h.edges[i] = lo + width * static_cast<double>(i);
  }
  h.edges.back() = hi;
  for (const double* p = begin; p != end; ++p) {
    std::size_t idx = bins - 1;
    if (width > 0.0) {
      idx = static_cast<std::size_t>((*p - lo) / width);
      if (idx >= bins) idx = bins - 1;  // max lands in the last bin
    }
    ++h.counts[idx];
  }
  return h;
}

void write_dataset_csv(const Dataset& data, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  const std::size_t n = data.X.cols();
  for (std::size_t c = 1; c <= n; ++c) out << "x" << c << ",";
  out << "y\n";
  for (std::size_t r = 0; r < data.X.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) out << format_double(data.X(r, c)) << ",";
    out << format_double(data.y(r, 0)) << "\n";
  }
  if (!out) {
    throw IoError("write failed: " + path.string());
  }

  nlohmann::json meta = {
      {"target", data.meta.target.to_string()},
      {"n", data.meta.target.n_inputs},
      {"N", data.meta.target.normalizer},
      {"low", data.meta.range_low},
      {"high", data.meta.range_high},
      {"seed", data.meta.seed},
      {"samples", data.meta.sample_count},
  };
  const std::filesystem::path side = path.string() + ".meta.json";
  std::ofstream mout(side);
  if (!mout) {
    throw IoError("cannot write " + side.string());
  }
  mout << meta.dump(2) << '\n';
}

void write_histogram_csv(const Histogram& h, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << "bin_low,bin_high,count\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out << format_double(h.edges[i]) << "," << format_double(h.edges[i + 1])
        << "," << h.counts[i] << "\n";
  }
}

Dataset load_dataset_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw IoError(path.string() + ": empty file");
  }
  std::size_t n_cols = static_cast<std::size_t>(
      std::count(line.begin(), line.end(), ',') + 1);
  if (n_cols < 2) {
    throw IoError(path.string() + ": need at least one input column and y");
  }
  const std::size_t n = n_cols - 1;

  std::vector<double> xs;
  std::vector<double> ys;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::string_view rest = line;
    for (std::size_t c = 0; c < n_cols; ++c) {
      const std::size_t comma = rest.find(',');
      const std::string_view field = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{}
                                             : rest.substr(comma + 1);
      const double v = parse_double(field);
      if (c < n) {
        xs.push_back(v);
      } else {
        ys.push_back(v);
      }
    }
  }
  const std::size_t samples = ys.size();
  Dataset d;
  d.X = Matrix(samples, n, std::move(xs));
  d.y = Matrix(samples, 1, std::move(ys));
  d.meta.sample_count = samples;
  d.meta.target.n_inputs = n;

  const std::filesystem::path side = path.string() + ".meta.json";
  if (std::filesystem::exists(side)) {
    std::ifstream min(side);
    nlohmann::json meta = nlohmann::json::parse(min);
    d.meta.target = TargetFunction::parse(meta.at("target").get<std::string>());
    d.meta.range_low = meta.at("low").get<double>();
    d.meta.range_high = meta.at("high").get<double>();
    d.meta.seed = meta.at("seed").get<std::uint64_t>();
    d.meta.sample_count = meta.at("samples").get<std::size_t>();
  }
  return d;
}

}  // namespace mulnet
