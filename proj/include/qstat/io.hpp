// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file io.hpp
 * @brief File formats: JSON state files, level specs, CSV number formatting.
 *
 *   product spec   {"d": D, "parts": [[[re,im], ... D], ... N]}
 *   N-body vector  {"d": D, "n": N, "amplitudes": [[re,im], ... D^N]}
 *   Fock state     {"modes": M, "statistics": "fermion"|"boson"|{"quon": q},
 *                   "n_max": K, "terms": [{"occ": [...], "amp": [re,im]}, ...]}
 *   level spec     one "E g" pair per line, '#' starts a comment
 */

#pragma once

#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <locale>
#include <sstream>
#include <string>
#include <vector>

#include "qstat/errors.hpp"
#include "qstat/fock.hpp"
#include "qstat/first_quantization.hpp"
#include "qstat/thermal.hpp"

namespace qstat::io {

using nlohmann::json;

inline constexpr int kCsvSignificantDigits = 15;

/// Shortest-form general formatting with a fixed significant-digit count;
/// independent of the C++ and C locales.
inline std::string format_number(double x, int digits = kCsvSignificantDigits) {
  if (x == 0.0) x = 0.0;  // no "-0"
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x, std::chars_format::general, digits);
  return std::string(buf.data(), res.ptr);
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace detail {

inline const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

inline std::size_t require_count(const json& j, const char* key) {
  const json& v = require(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("\"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

inline Complex parse_complex(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError("complex amplitude must be [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

inline std::vector<Complex> parse_complex_array(const json& j) {
  if (!j.is_array()) throw ParseError("expected an array of [re, im] amplitudes");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& c : j) out.push_back(parse_complex(c));
  return out;
}

inline json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

}  // namespace detail

inline bool is_product_spec(const json& j) { return j.is_object() && j.contains("parts"); }

inline std::vector<SingleParticleVector> parse_product_spec(const json& j) {
  const std::size_t d = detail::require_count(j, "d");
  const json& parts = detail::require(j, "parts");
  if (!parts.is_array() || parts.empty()) throw ParseError("\"parts\" must be a non-empty array");
  std::vector<SingleParticleVector> out;
  for (const auto& p : parts) {
    auto amps = detail::parse_complex_array(p);
    if (amps.size() != d) {
      throw DimensionError("part has " + std::to_string(amps.size()) + " entries, expected d = " + std::to_string(d));
    }
    out.emplace_back(std::move(amps));
  }
  return out;
}

inline NBodyVector parse_nbody(const json& j) {
  const std::size_t d = detail::require_count(j, "d");
  const std::size_t n = detail::require_count(j, "n");
  return NBodyVector(d, n, detail::parse_complex_array(detail::require(j, "amplitudes")));
}

/// Either file shape: a product spec is expanded with `tensor_product`.
inline NBodyVector parse_state(const json& j) {
  if (is_product_spec(j)) {
    const auto parts = parse_product_spec(j);
    return tensor_product(parts);
  }
  return parse_nbody(j);
}

inline json to_json(const NBodyVector& v) {
  json amps = json::array();
  for (const Complex& c : v.amplitudes()) amps.push_back(detail::complex_to_json(c));
  return json{{"d", v.d()}, {"n", v.n()}, {"amplitudes", std::move(amps)}};
}

inline Statistics parse_statistics(const json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "fermion") return Statistics::fermion();
    if (s == "boson") return Statistics::boson();
    throw ParseError("unknown statistics \"" + s + "\"");
  }
  if (j.is_object() && j.contains("quon") && j.at("quon").is_number()) {
    return Statistics::quon(j.at("quon").get<double>());
  }
  throw ParseError("statistics must be \"fermion\", \"boson\" or {\"quon\": q}");
}

inline json statistics_to_json(const Statistics& s) {
  if (s.is_quon()) return json{{"quon", s.q()}};
  return s.is_fermion() ? json("fermion") : json("boson");
}

inline FockVector parse_fock(const json& j) {
  const std::size_t modes = detail::require_count(j, "modes");
  const Statistics stats = parse_statistics(detail::require(j, "statistics"));
  const unsigned n_max = j.contains("n_max") ? static_cast<unsigned>(detail::require_count(j, "n_max")) : 1u;
  FockVector v(FockContext(modes, stats, n_max));
  const json& terms = detail::require(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  for (const auto& t : terms) {
    const json& occ = detail::require(t, "occ");
    if (!occ.is_array()) throw ParseError("\"occ\" must be an array of integers");
    std::vector<unsigned> n;
    for (const auto& k : occ) {
      if (!k.is_number_integer() || k.get<long long>() < 0) throw ParseError("occupations must be non-negative integers");
      n.push_back(k.get<unsigned>());
    }
    v.add(OccupationVector(std::move(n)), detail::parse_complex(detail::require(t, "amp")));
  }
  return v;
}

inline json to_json(const FockVector& v) {
  json terms = json::array();
  for (const auto& [occ, amp] : v.terms()) {
    json o = json::array();
    for (unsigned k : occ.occupations()) o.push_back(k);
    terms.push_back(json{{"occ", std::move(o)}, {"amp", detail::complex_to_json(amp)}});
  }
  return json{{"modes", v.context().modes()},
              {"statistics", statistics_to_json(v.context().statistics())},
              {"n_max", v.context().n_max()},
              {"terms", std::move(terms)}};
}

/// Parses "E g" lines; blank lines and '#' comments are skipped. Levels are
/// returned sorted by energy.
inline std::vector<EnergyLevel> parse_levels(std::istream& in) {
  std::vector<EnergyLevel> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    ls.imbue(std::locale::classic());
    double e = 0;
    long long g = 0;
    if (!(ls >> e)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("level spec line " + std::to_string(lineno) + ": expected \"E g\"");
    }
    if (!(ls >> g) || g < 1) throw ParseError("level spec line " + std::to_string(lineno) + ": degeneracy must be >= 1");
    std::string rest;
    if (ls >> rest) throw ParseError("level spec line " + std::to_string(lineno) + ": trailing input");
    out.push_back({e, static_cast<unsigned>(g)});
  }
  if (out.empty()) throw ParseError("level spec contains no levels");
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.energy < b.energy; });
  return out;
}

inline std::vector<EnergyLevel> read_levels_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_levels(in);
}

}  // namespace qstat::io
