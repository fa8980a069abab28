// Copyright 2026 The qstat Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end. Exit codes: 0 success, 1 usage or input-file
// error, 2 domain/convergence error or failed verification, 3 a
// Pauli-forbidden (vanishing antisymmetric) state.

#pragma once

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "qstat/qstat.hpp"
#include "verify_suite.hpp"

namespace qstat::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kExclusion = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

inline constexpr double kZeroStateTolerance = 1e-12;

/// Writes `content` to `path`; an existing file is kept unless `force`.
inline void write_output(const std::string& path, const std::string& content, bool force) {
  if (!force && std::filesystem::exists(path)) {
    throw UsageError("refusing to overwrite " + path + " (pass --force)");
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw UsageError("cannot write " + path);
  f << content;
  if (!f) throw UsageError("failed writing " + path);
}

inline void emit(const std::string& path, const std::string& content, bool force, std::ostream& out) {
  if (path.empty()) {
    out << content;
  } else {
    write_output(path, content, force);
  }
}

inline std::string csv_row(std::initializer_list<double> values) {
  std::string row;
  bool first = true;
  for (double v : values) {
    if (!first) row += ',';
    row += io::format_number(v);
    first = false;
  }
  row += '\n';
  return row;
}

inline Statistics thermal_statistics(const std::string& s) {
  if (s == "fd") return Statistics::fermion();
  if (s == "be") return Statistics::boson();
  return Statistics::distinguishable();
}

inline FockVector apply_ops(const std::string& ops, FockVector v) {
  // Operators compose like a product: the rightmost token acts first.
  std::istringstream in(ops);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  for (auto it = tokens.rbegin(); it != tokens.rend(); ++it) {
    const std::string& t = *it;
    if (t.size() < 2 || (t[0] != 'c' && t[0] != 'a')) {
      throw UsageError("operator token \"" + t + "\" must be c<mode> or a<mode>");
    }
    std::size_t mode = 0;
    try {
      std::size_t used = 0;
      mode = std::stoul(t.substr(1), &used);
      if (used != t.size() - 1) throw std::invalid_argument(t);
    } catch (const std::exception&) {
      throw UsageError("operator token \"" + t + "\" has a malformed mode index");
    }
    v = t[0] == 'c' ? create(mode, v) : annihilate(mode, v);
  }
  return v;
}

inline int run_verify(const std::string& statistics, std::optional<double> q, std::optional<std::size_t> modes,
                      std::optional<unsigned> n_max, std::ostream& out) {
  std::vector<VerifyRow> rows;
  const bool all = statistics.empty();
  if (all || statistics == "f") append_algebra(rows, verify_algebra(Statistics::fermion(), modes.value_or(4), 1));
  if (all || statistics == "b") {
    append_algebra(rows, verify_algebra(Statistics::boson(), modes.value_or(2), n_max.value_or(6)));
  }
  if (all || statistics == "quon") {
    const std::vector<double> grid = q ? std::vector<double>{*q} : std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0};
    for (double qq : grid) append_algebra(rows, verify_algebra(Statistics::quon(qq), modes.value_or(1), n_max.value_or(8)));
  }
  append_projector_suite(rows);
  append_bridge_suite(rows);
  append_thermal_suite(rows);
  append_beamsplitter_suite(rows);

  bool ok = true;
  out << "suite,check,deviation,status\n";
  for (const auto& r : rows) {
    const bool pass = r.deviation <= kVerifyTolerance;
    ok = ok && pass;
    std::ostringstream dev;
    dev << std::scientific << std::setprecision(3) << r.deviation;
    out << r.suite << ',' << r.check << ',' << dev.str() << ',' << (pass ? "ok" : "FAIL") << '\n';
  }
  out << (ok ? "all checks passed\n" : "verification FAILED\n");
  return ok ? kOk : kDomain;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"qstat: indistinguishable-particle states, operator algebras and statistics"};
  app.require_subcommand(1);

  bool force = false;
  auto add_force = [&](CLI::App* sub) { sub->add_flag("--force", force, "Overwrite existing output files"); };

  // verify
  auto* verify = app.add_subcommand("verify", "Check operator algebras and projector identities");
  std::string v_stats;
  double v_q = 0;
  std::size_t v_modes = 0;
  unsigned v_nmax = 0;
  verify->add_option("--statistics", v_stats, "f | b | quon (default: all)")->check(CLI::IsMember({"f", "b", "quon"}));
  auto* v_q_opt = verify->add_option("--q", v_q, "Quon parameter (default: -1,-0.5,0,0.5,1)");
  auto* v_modes_opt = verify->add_option("--modes", v_modes, "Mode count")->check(CLI::PositiveNumber);
  auto* v_nmax_opt = verify->add_option("--nmax", v_nmax, "Bosonic/quon cutoff")->check(CLI::PositiveNumber);

  // symmetrize
  auto* sym = app.add_subcommand("symmetrize", "Apply S or A to a state file");
  std::string s_in, s_mode, s_out;
  bool s_norm = false;
  sym->add_option("--in", s_in, "Product spec or N-body vector JSON")->required();
  sym->add_option("--mode", s_mode, "sym | antisym")->required()->check(CLI::IsMember({"sym", "antisym"}));
  sym->add_flag("--normalize", s_norm, "Rescale to unit norm");
  sym->add_option("--out", s_out, "Output JSON (default: stdout)");
  add_force(sym);

  // slater
  auto* sl = app.add_subcommand("slater", "Build the Slater-determinant state of a product spec");
  std::string sl_in, sl_out;
  bool sl_norm = false;
  sl->add_option("--in", sl_in, "Product spec JSON")->required();
  sl->add_flag("--normalize", sl_norm, "Rescale to unit norm");
  sl->add_option("--out", sl_out, "Output JSON (default: stdout)");
  add_force(sl);

  // dims
  auto* dims = app.add_subcommand("dims", "Dimensions of the symmetric, antisymmetric and mixed subspaces");
  std::size_t d_d = 0, d_n = 0;
  dims->add_option("--d", d_d, "Single-particle dimension")->required()->check(CLI::PositiveNumber);
  dims->add_option("--n", d_n, "Particle count")->required()->check(CLI::PositiveNumber);

  // fock-apply
  auto* fa = app.add_subcommand("fock-apply", "Apply a product of ladder operators to a Fock state file");
  std::string fa_in, fa_ops, fa_out;
  bool fa_expect = false;
  fa->add_option("--in", fa_in, "Fock state JSON")->required();
  fa->add_option("--ops", fa_ops, "Operator product, e.g. \"c0 c2 a1\" (rightmost acts first)")->required();
  fa->add_option("--out", fa_out, "Output JSON (default: stdout)");
  fa->add_flag("--expect", fa_expect, "Print per-mode number expectations of the result to stdout");
  add_force(fa);

  // occupancy
  auto* occ = app.add_subcommand("occupancy", "Solve mu for N particles and write the occupancy curve");
  std::string o_stats, o_levels, o_out;
  double o_temp = 0, o_particles = 0;
  bool o_si = false;
  occ->add_option("--statistics", o_stats, "fd | be | mb")->required()->check(CLI::IsMember({"fd", "be", "mb"}));
  occ->add_option("--levels", o_levels, "Level spec file")->required();
  occ->add_option("--temp", o_temp, "Temperature")->required();
  occ->add_option("--particles", o_particles, "Particle number")->required();
  occ->add_option("--out", o_out, "Output CSV")->required();
  occ->add_flag("--si", o_si, "Use k_B in J/K instead of natural units");
  add_force(occ);

  // hom
  auto* hom = app.add_subcommand("hom", "Two-particle beam-splitter distribution over an overlap grid");
  std::string h_stats, h_out;
  std::size_t h_sweep = 21;
  hom->add_option("--statistics", h_stats, "boson | fermion | distinguishable")
      ->required()
      ->check(CLI::IsMember({"boson", "fermion", "distinguishable"}));
  hom->add_option("--sweep", h_sweep, "Number of s values in [0, 1]")->check(CLI::Range(2, 1000000));
  hom->add_option("--out", h_out, "Output CSV")->required();
  add_force(hom);

  // condensate
  auto* cond = app.add_subcommand("condensate", "Ground-level fraction of a Bose system over a temperature grid");
  std::string c_levels, c_out;
  double c_particles = 0, c_tmin = 0, c_tmax = 0;
  std::size_t c_steps = 0;
  bool c_si = false;
  cond->add_option("--levels", c_levels, "Level spec file")->required();
  cond->add_option("--particles", c_particles, "Particle number")->required();
  cond->add_option("--tmin", c_tmin, "Lowest temperature")->required();
  cond->add_option("--tmax", c_tmax, "Highest temperature")->required();
  cond->add_option("--steps", c_steps, "Grid points")->required()->check(CLI::Range(1, 1000000));
  cond->add_option("--out", c_out, "Output CSV")->required();
  cond->add_flag("--si", c_si, "Use k_B in J/K instead of natural units");
  add_force(cond);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (verify->parsed()) {
      return run_verify(v_stats, *v_q_opt ? std::optional<double>(v_q) : std::nullopt,
                        *v_modes_opt ? std::optional<std::size_t>(v_modes) : std::nullopt,
                        *v_nmax_opt ? std::optional<unsigned>(v_nmax) : std::nullopt, out);
    }
    if (sym->parsed()) {
      const NBodyVector v = io::parse_state(io::read_json_file(s_in));
      NBodyVector p = s_mode == "sym" ? symmetrize(v) : antisymmetrize(v);
      if (s_norm) {
        if (!(p.norm() > kZeroStateTolerance)) {
          if (s_mode == "antisym") throw ExclusionError("antisymmetrized state vanishes (Pauli-forbidden)");
          throw DomainError("symmetrized state vanishes and cannot be normalized");
        }
        p = normalized(std::move(p));
      }
      emit(s_out, io::to_json(p).dump(2) + "\n", force, out);
      return kOk;
    }
    if (sl->parsed()) {
      const auto parts = io::parse_product_spec(io::read_json_file(sl_in));
      const NBodyVector v = slater(parts, false);
      if (!(v.norm() > kZeroStateTolerance)) {
        throw ExclusionError("Slater determinant vanishes: repeated or linearly dependent parts (Pauli-forbidden)");
      }
      emit(sl_out, io::to_json(sl_norm ? normalized(v) : v).dump(2) + "\n", force, out);
      return kOk;
    }
    if (dims->parsed()) {
      const SubspaceDimensions dd = subspace_dimensions(d_d, d_n);
      out << dd.symmetric << ',' << dd.antisymmetric << ',' << dd.mixed << '\n';
      return kOk;
    }
    if (fa->parsed()) {
      const FockVector result = apply_ops(fa_ops, io::parse_fock(io::read_json_file(fa_in)));
      if (result.truncated()) err << "warning: components above n_max were dropped\n";
      emit(fa_out, io::to_json(result).dump(2) + "\n", force, out);
      if (fa_expect) {
        out << "mode,number\n";
        for (std::size_t i = 0; i < result.context().modes(); ++i) {
          out << i << ',' << io::format_number(number_expectation(i, result)) << '\n';
        }
      }
      return kOk;
    }
    if (occ->parsed()) {
      const ThermalSystem sys(io::read_levels_file(o_levels), thermal_statistics(o_stats), o_temp,
                              o_si ? kBoltzmannSI : kBoltzmannNatural);
      const ChemicalPotential mu = solve_mu(sys, o_particles);
      std::string csv = "E,occupancy\n";
      for (const auto& [e, n] : occupancy_curve(sys, mu.mu)) csv += csv_row({e, n});
      write_output(o_out, csv, force);
      out << io::format_number(mu.mu) << '\n';
      return kOk;
    }
    if (hom->parsed()) {
      const Statistics stats = h_stats == "boson"     ? Statistics::boson()
                               : h_stats == "fermion" ? Statistics::fermion()
                                                      : Statistics::distinguishable();
      std::string csv = "s,p_both_left,p_both_right,p_coincidence\n";
      for (std::size_t k = 0; k < h_sweep; ++k) {
        const double s = static_cast<double>(k) / static_cast<double>(h_sweep - 1);
        const auto [l, r] = states_with_overlap(s);
        const OutputDistribution dist = output_distribution(l, r, stats);
        csv += csv_row({s, dist.p_both_left, dist.p_both_right, dist.p_coincidence});
      }
      write_output(h_out, csv, force);
      return kOk;
    }
    if (cond->parsed()) {
      if (!(c_tmin > 0) || !(c_tmax >= c_tmin)) throw DomainError("need 0 < tmin <= tmax");
      const ThermalSystem sys(io::read_levels_file(c_levels), Statistics::boson(), c_tmin,
                              c_si ? kBoltzmannSI : kBoltzmannNatural);
      std::string csv = "T,fraction\n";
      for (std::size_t k = 0; k < c_steps; ++k) {
        const double t = c_steps == 1 ? c_tmin
                                      : c_tmin + (c_tmax - c_tmin) * static_cast<double>(k) /
                                                     static_cast<double>(c_steps - 1);
        csv += csv_row({t, condensate_fraction(sys, c_particles, t)});
      }
      write_output(c_out, csv, force);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ExclusionError& e) {
    err << "error: " << e.what() << '\n';
    return kExclusion;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace qstat::cli
