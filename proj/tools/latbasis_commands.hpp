#pragma once

// Command implementations behind the latbasis executable. Everything here
// works on streams so the unit tests can drive it without a subprocess.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "latbasis/latbasis.hpp"

namespace latbasis::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kDegenerate = 2,
  kVerifyFailed = 3,
  kInternalError = 4,
};

enum class Algorithm { kFast, kBasic };

struct BasisOptions {
  Algorithm algorithm = Algorithm::kFast;
  bool lowrank_auto = true;
  bool reduce = false;
  bool verify = false;
  std::size_t minor_cap = kDefaultMinorCap;
};

struct ReducedReport {
  IntMatrix basis;
  Int max_norm_sq_before = 0;
  Int max_norm_sq_after = 0;
  Rational bound_sq = 0;
};

struct Verdict {
  bool pass = false;
  std::string mode;  // "full" or "membership-only"
  std::string message;
};

struct RunReport {
  std::string algorithm;  // fast, basic or lowrank
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
  IntMatrix basis;
  Int det_abs = 0;              // of S, or of its projection when rank < rows
  bool det_projected = false;
  std::vector<std::size_t> pivot_order;  // 0-based internally
  std::size_t iterations = 0;
  std::size_t exchanges = 0;
  std::size_t updates = 0;
  std::size_t integer_to_one = 0;
  std::size_t max_denominator_bits = 0;
  double wall_ms = 0;
  std::optional<ReducedReport> reduced;
  std::optional<Verdict> verification;
};

inline Verdict verdict_from(const BasisReport& rep) {
  return Verdict{rep.is_basis, rep.det_checked ? "full" : "membership-only", rep.message};
}

inline Int max_column_norm_sq(const IntMatrix& m) {
  Int worst = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) worst = std::max(worst, squared_norm(m.col(c)));
  return worst;
}

inline RunReport run_basis(const IntMatrix& a, const BasisOptions& opt) {
  if (opt.reduce && opt.algorithm == Algorithm::kBasic)
    throw DimensionMismatch("--reduce needs the coefficient matrix of the fast algorithm");
  const auto start = std::chrono::steady_clock::now();
  RunReport rep;
  rep.rows = a.rows();
  rep.cols = a.cols();
  rep.rank = rank(a);
  const bool full = rep.rank == a.rows();
  if (!full && !opt.lowrank_auto)
    throw RankDeficient("rank " + std::to_string(rep.rank) + " < " + std::to_string(a.rows()) +
                        " rows and --lowrank off");

  std::optional<BasisResult> fast;
  if (full && opt.algorithm == Algorithm::kBasic) {
    BasicResult res = basic_basis(a);
    rep.algorithm = "basic";
    rep.basis = std::move(res.basis);
    rep.iterations = res.trace.steps.size();
    rep.exchanges = res.trace.exchanges;
  } else {
    fast = full ? fast_basis(a) : lowrank_basis(a);
    rep.algorithm = full ? "fast" : "lowrank";
    rep.basis = fast->basis;
    rep.pivot_order = fast->pivot_order;
    rep.iterations = fast->chains.size();
    rep.updates = fast->stats.updates;
    rep.integer_to_one = fast->stats.integer_to_one;
    rep.max_denominator_bits = fast->stats.max_denominator_bits;
  }

  if (full) {
    rep.det_abs = abs_int(det(rep.basis));
  } else if (rep.rank == 0) {
    rep.det_abs = 1;
    rep.det_projected = true;
  } else {
    rep.det_abs = abs_int(det(rep.basis.select_rows(fast->projection_rows)));
    rep.det_projected = true;
  }

  if (opt.reduce && fast && rep.rank > 0) {
    ReducedBasis red = reduce_basis(fast->initial, fast->coefficients, fast->pivot_order);
    ReducedReport rr;
    rr.max_norm_sq_before = max_column_norm_sq(rep.basis);
    rr.max_norm_sq_after = max_column_norm_sq(red.basis);
    rr.bound_sq = reduced_norm_bound_sq(fast->initial);
    rr.basis = std::move(red.basis);
    rep.reduced = std::move(rr);
  }

  if (opt.verify) {
    Verdict v = verdict_from(is_basis_of_any_rank(rep.basis, a, false, opt.minor_cap));
    if (rep.reduced) {
      const Verdict r = verdict_from(is_basis_of_any_rank(rep.reduced->basis, a, false, opt.minor_cap));
      if (!r.pass) v = Verdict{false, r.mode, "reduced basis: " + r.message};
      else if (Rational(rep.reduced->max_norm_sq_after) > rep.reduced->bound_sq)
        v = Verdict{false, r.mode, "reduced basis exceeds its norm bound"};
    }
    rep.verification = std::move(v);
  }
  rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline std::vector<std::size_t> one_based(const std::vector<std::size_t>& v) {
  std::vector<std::size_t> out(v);
  for (auto& x : out) ++x;
  return out;
}

inline nlohmann::json report_to_json(const RunReport& rep) {
  nlohmann::json j;
  j["algorithm"] = rep.algorithm;
  j["rows"] = rep.rows;
  j["cols"] = rep.cols;
  j["rank"] = rep.rank;
  j["basis"] = matrix_to_json(rep.basis);
  j["det_abs"] = rep.det_abs.str();
  j["det_projected"] = rep.det_projected;
  j["pivot_order"] = one_based(rep.pivot_order);
  j["iterations"] = rep.iterations;
  j["exchanges"] = rep.exchanges;
  j["updates"] = rep.updates;
  j["integer_to_one"] = rep.integer_to_one;
  j["max_denominator_bits"] = rep.max_denominator_bits;
  j["wall_time_ms"] = rep.wall_ms;
  if (rep.reduced) {
    j["reduced"] = {{"basis", matrix_to_json(rep.reduced->basis)},
                    {"max_norm_sq_before", rep.reduced->max_norm_sq_before.str()},
                    {"max_norm_sq_after", rep.reduced->max_norm_sq_after.str()},
                    {"bound_sq", to_string(rep.reduced->bound_sq)}};
  }
  if (rep.verification) {
    j["verification"] = {{"verdict", rep.verification->pass ? "pass" : "fail"},
                         {"mode", rep.verification->mode},
                         {"message", rep.verification->message}};
  }
  return j;
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline void print_report(std::ostream& out, const RunReport& rep) {
  out << "algorithm: " << rep.algorithm << "\n";
  out << "input: " << rep.rows << " x " << rep.cols << ", rank " << rep.rank << "\n";
  out << (rep.det_projected ? "|det S| (projected): " : "|det S|: ") << rep.det_abs << "\n";
  if (!rep.pivot_order.empty()) out << "pivot order: " << join(one_based(rep.pivot_order)) << "\n";
  out << "iterations: " << rep.iterations << "\n";
  if (rep.algorithm == "basic") {
    out << "exchanges: " << rep.exchanges << "\n";
  } else {
    out << "updates: " << rep.updates << "\n";
    out << "integer-to-one folds: " << rep.integer_to_one << "\n";
    out << "max denominator bits: " << rep.max_denominator_bits << "\n";
  }
  out << "wall time ms: " << rep.wall_ms << "\n";
  out << "basis:\n" << write_matrix(rep.basis);
  if (rep.reduced) {
    out << "reduced basis:\n" << write_matrix(rep.reduced->basis);
    out << "max squared column norm: " << rep.reduced->max_norm_sq_before << " -> " << rep.reduced->max_norm_sq_after
        << " (bound " << to_string(rep.reduced->bound_sq) << ")\n";
  }
  if (rep.verification)
    out << "verify: " << (rep.verification->pass ? "pass" : "fail") << " (" << rep.verification->message << ")\n";
}

inline IntMatrix load_matrix(const std::string& path, bool transpose, std::istream& in) {
  if (path == "-") return read_matrix(in, transpose);
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open '" + path + "'");
  return read_matrix(f, transpose);
}

// Parses argv-style arguments, runs one subcommand and returns the exit code.
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice bases from integer generating sets"};
  app.name("latbasis");
  app.require_subcommand(1);

  std::string file, second;
  bool transpose = false, json = false;

  BasisOptions bopt;
  bool basic = false, fast = false;
  std::string lowrank = "auto";
  auto* basis_cmd = app.add_subcommand("basis", "Compute a basis of the lattice spanned by the columns");
  basis_cmd->add_option("file", file, "Matrix file, or - for stdin")->required();
  auto* basic_flag = basis_cmd->add_flag("--basic", basic, "Reference exchange algorithm");
  basis_cmd->add_flag("--fast", fast, "Fast algorithm (default)")->excludes(basic_flag);
  basis_cmd->add_option("--lowrank", lowrank, "Low-rank handling")->check(CLI::IsMember({"auto", "off"}));
  basis_cmd->add_flag("--reduce", bopt.reduce, "Balance the basis columns afterwards");
  basis_cmd->add_flag("--verify", bopt.verify, "Check the result against the oracles");
  basis_cmd->add_option("--minor-cap", bopt.minor_cap, "Largest number of minors the verifier enumerates");

  std::size_t index = 1;
  auto* det_cmd = app.add_subcommand("det", "Determinant of a square matrix");
  det_cmd->add_option("file", file)->required();
  auto* frac_cmd = app.add_subcommand("frac", "Fractionality of a coordinate (1-based index)");
  frac_cmd->add_option("file", file)->required();
  frac_cmd->add_option("--index", index, "Coordinate, 1-based")->required()->check(CLI::PositiveNumber);

  bool points = false;
  std::size_t cap = kDefaultEnumerationCap;
  auto* enum_cmd = app.add_subcommand("enumerate", "Integer points of the half-open parallelepiped");
  enum_cmd->add_option("file", file)->required();
  enum_cmd->add_flag("--points", points, "List the points");
  enum_cmd->add_option("--cap", cap, "Largest bounding box to scan");
  frac_cmd->add_option("--cap", cap, "Largest bounding box to scan");

  std::size_t minor_cap = kDefaultMinorCap;
  auto* verify_cmd = app.add_subcommand("verify", "Check that S is a basis of the lattice of A");
  verify_cmd->add_option("basis", file, "Candidate basis S")->required();
  verify_cmd->add_option("generators", second, "Generating matrix A")->required();
  verify_cmd->add_option("--minor-cap", minor_cap);

  GenSpec gen;
  std::optional<std::size_t> gen_rank;
  auto* gen_cmd = app.add_subcommand("gen", "Random instance with a given rank");
  gen_cmd->add_option("--rows", gen.rows)->required();
  gen_cmd->add_option("--cols", gen.cols)->required();
  gen_cmd->add_option("--max-entry", gen.max_entry)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--rank", gen_rank, "Defaults to min(rows, cols)");

  for (auto* sub : {basis_cmd, det_cmd, frac_cmd, enum_cmd, verify_cmd}) {
    sub->add_flag("--transpose", transpose, "Rows of the file are the generators");
    sub->add_flag("--json", json, "JSON output");
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "latbasis: " << e.what() << "\n";
    return kParseError;
  }

  try {
    if (*basis_cmd) {
      bopt.algorithm = basic ? Algorithm::kBasic : Algorithm::kFast;
      bopt.lowrank_auto = lowrank == "auto";
      const RunReport rep = run_basis(load_matrix(file, transpose, in), bopt);
      if (json) out << report_to_json(rep).dump(2) << "\n";
      else print_report(out, rep);
      if (rep.verification && !rep.verification->pass) return kVerifyFailed;
    } else if (*det_cmd) {
      const Int d = det(load_matrix(file, transpose, in));
      if (json) out << nlohmann::json{{"det", d.str()}}.dump() << "\n";
      else out << d << "\n";
    } else if (*frac_cmd) {
      const Int f = fractionality_bruteforce(load_matrix(file, transpose, in), index - 1, cap);
      if (json) out << nlohmann::json{{"index", index}, {"fractionality", f.str()}}.dump() << "\n";
      else out << f << "\n";
    } else if (*enum_cmd) {
      const auto census = enumerate_parallelepiped(load_matrix(file, transpose, in), cap);
      if (json) {
        nlohmann::json j{{"count", census.count.str()}};
        if (points) {
          IntMatrix p(census.basis.rows(), census.points.size());
          for (std::size_t c = 0; c < census.points.size(); ++c) p.set_col(c, census.points[c]);
          j["points"] = matrix_to_json(p.transpose());
        }
        out << j.dump() << "\n";
      } else {
        out << census.count << "\n";
        if (points)
          for (const auto& p : census.points) {
            for (std::size_t r = 0; r < p.size(); ++r) out << (r ? " " : "") << p[r];
            out << "\n";
          }
      }
    } else if (*verify_cmd) {
      const IntMatrix s = load_matrix(file, transpose, in);
      const IntMatrix a = load_matrix(second, transpose, in);
      const Verdict v = verdict_from(is_basis_of_any_rank(s, a, false, minor_cap));
      if (json) out << nlohmann::json{{"verdict", v.pass ? "pass" : "fail"}, {"mode", v.mode}, {"message", v.message}}.dump() << "\n";
      else out << (v.pass ? "pass" : "fail") << " (" << v.message << ")\n";
      if (!v.pass) return kVerifyFailed;
    } else if (*gen_cmd) {
      gen.rank = gen_rank.value_or(std::min(gen.rows, gen.cols));
      out << write_matrix(generate_instance(gen));
    }
  } catch (const ParseError& e) {
    err << "latbasis: " << e.what() << "\n";
    return kParseError;
  } catch (const InvariantViolation& e) {
    err << "latbasis: internal error: " << e.what() << "\n";
    return kInternalError;
  } catch (const LatticeError& e) {
    err << "latbasis: " << e.what() << "\n";
    return kDegenerate;
  }
  return kOk;
}

}  // namespace latbasis::cli
