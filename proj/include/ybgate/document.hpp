// Copyright 2026 The ybgate Authors
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

#pragma once

// Serialised forms used by the command-line tool:
//
//   MatrixDocument  {"dim": n, "data": [[re, im], ...], "meta": {...}}
//                   row-major, complex entries as two-element arrays
//   SweepReport     per-point residuals with a max and a pass flag, as JSON
//                   or as CSV with header "param,value,quantity"
//
// Doubles are written in the shortest form that parses back to the same
// bits, so documents round-trip exactly.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <nlohmann/json.hpp>

#include "ybgate/errors.hpp"
#include "ybgate/linalg.hpp"

namespace ybgate {

/// Malformed or inconsistent document text.
class DocumentError : public Error {
 public:
  using Error::Error;
};

/// Shortest round-trip decimal form of a finite double.
inline std::string format_double(double v) {
  char buf[32];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw Error("format_double: conversion failed");
  return std::string(buf, end);
}

struct MatrixDocument {
  std::size_t dim = 0;
  std::vector<Complex> data;
  std::map<std::string, std::string> meta;

  template <std::size_t N>
  static MatrixDocument from_matrix(const Matrix<N>& m,
                                    std::map<std::string, std::string> meta = {}) {
    MatrixDocument doc;
    doc.dim = N;
    doc.data.assign(m.entries().begin(), m.entries().end());
    doc.meta = std::move(meta);
    return doc;
  }

  /// Throws DimMismatch unless dim == N.
  template <std::size_t N>
  Matrix<N> to_matrix() const {
    if (dim != N || data.size() != N * N) {
      throw DimMismatch("matrix document has dim " + std::to_string(dim) +
                        ", expected " + std::to_string(N));
    }
    return Matrix<N>(std::span<const Complex, N * N>(data.data(), N * N));
  }

  std::string to_json() const {
    nlohmann::ordered_json j;
    j["dim"] = dim;
    auto entries = nlohmann::ordered_json::array();
    for (const Complex& z : data) entries.push_back({z.real(), z.imag()});
    j["data"] = std::move(entries);
    j["meta"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : meta) j["meta"][key] = value;
    return j.dump() + "\n";
  }

  static MatrixDocument parse(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& e) {
      throw DocumentError(std::string("matrix document: ") + e.what());
    }
    if (!j.is_object()) throw DocumentError("matrix document: not an object");

    MatrixDocument doc;
    const auto dim_it = j.find("dim");
    if (dim_it == j.end() || !dim_it->is_number_unsigned() || dim_it->get<std::size_t>() == 0) {
      throw DocumentError("matrix document: \"dim\" must be a positive integer");
    }
    doc.dim = dim_it->get<std::size_t>();

    const auto data_it = j.find("data");
    if (data_it == j.end() || !data_it->is_array() ||
        data_it->size() != doc.dim * doc.dim) {
      throw DocumentError("matrix document: \"data\" must hold dim^2 entries");
    }
    doc.data.reserve(data_it->size());
    for (const auto& entry : *data_it) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
          !entry[1].is_number()) {
        throw DocumentError("matrix document: entries must be [re, im] pairs");
      }
      const double re = entry[0].get<double>();
      const double im = entry[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw DocumentError("matrix document: non-finite entry");
      }
      doc.data.emplace_back(re, im);
    }

    if (const auto meta_it = j.find("meta"); meta_it != j.end()) {
      if (!meta_it->is_object()) throw DocumentError("matrix document: \"meta\" must be an object");
      for (const auto& [key, value] : meta_it->items()) {
        if (!value.is_string()) {
          throw DocumentError("matrix document: meta values must be strings");
        }
        doc.meta[key] = value.get<std::string>();
      }
    }
    return doc;
  }

  friend bool operator==(const MatrixDocument&, const MatrixDocument&) = default;
};

struct SweepPoint {
  std::string label;
  double value = 0.0;
  double quantity = 0.0;
  double residual = 0.0;
};

struct SweepReport {
  std::string quantity;
  std::string param;
  double tolerance = 0.0;
  std::vector<SweepPoint> points;

  /// Largest residual; NaN if any residual is NaN.
  double max_residual() const {
    double m = 0.0;
    for (const SweepPoint& p : points) {
      if (std::isnan(p.residual)) return p.residual;
      m = std::max(m, p.residual);
    }
    return m;
  }

  bool pass() const { return max_residual() < tolerance; }

  std::string to_json() const {
    nlohmann::ordered_json j;
    j["quantity"] = quantity;
    j["param"] = param;
    j["tolerance"] = tolerance;
    j["max_residual"] = max_residual();
    j["pass"] = pass();
    auto rows = nlohmann::ordered_json::array();
    for (const SweepPoint& p : points) {
      nlohmann::ordered_json row;
      row["label"] = p.label;
      row["value"] = p.value;
      row["quantity"] = p.quantity;
      row["residual"] = p.residual;
      rows.push_back(std::move(row));
    }
    j["points"] = std::move(rows);
    return j.dump(2) + "\n";
  }

  std::string to_csv() const {
    std::string out = "param,value,quantity\n";
    for (const SweepPoint& p : points) {
      out += p.label;
      out += ',';
      out += format_double(p.value);
      out += ',';
      out += format_double(p.quantity);
      out += '\n';
    }
    return out;
  }
};

}  // namespace ybgate
