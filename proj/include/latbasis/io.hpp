#pragma once

// Plain-text matrix files and JSON encoding of matrices.
//
// File layout: a header line "d n", then d lines of n integers each. Each line
// of the body is a row; the generators are the n columns. With `transpose`
// the file's rows are read as generators instead.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "latbasis/errors.hpp"
#include "latbasis/exact_arith.hpp"
#include "latbasis/matrix.hpp"

namespace latbasis {

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

inline std::size_t parse_count(const std::string& tok, const char* what) {
  const Int v = parse_int(tok);
  if (v < 0 || v > Int(1000000)) throw ParseError(std::string("bad ") + what + " '" + tok + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

inline IntMatrix read_matrix(std::istream& in, bool transpose = false) {
  std::string line;
  std::vector<std::vector<std::string>> lines;
  std::size_t lineno = 0;
  std::vector<std::size_t> numbers;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = detail::split_ws(line);
    if (toks.empty()) continue;
    lines.push_back(std::move(toks));
    numbers.push_back(lineno);
  }
  if (lines.empty()) throw ParseError("empty matrix file");
  if (lines[0].size() != 2) throw ParseError("line " + std::to_string(numbers[0]) + ": header must be 'rows cols'");
  const std::size_t d = detail::parse_count(lines[0][0], "row count");
  const std::size_t n = detail::parse_count(lines[0][1], "column count");
  if (d == 0 || n == 0) throw ParseError("matrix dimensions must be positive");
  if (lines.size() - 1 != d)
    throw ParseError("header promises " + std::to_string(d) + " rows, body has " + std::to_string(lines.size() - 1));
  IntMatrix m(d, n);
  for (std::size_t r = 0; r < d; ++r) {
    const auto& toks = lines[r + 1];
    if (toks.size() != n)
      throw ParseError("line " + std::to_string(numbers[r + 1]) + ": expected " + std::to_string(n) + " entries, got " +
                       std::to_string(toks.size()));
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_int(toks[c]);
  }
  return transpose ? m.transpose() : m;
}

inline IntMatrix parse_matrix(const std::string& text, bool transpose = false) {
  std::istringstream in(text);
  return read_matrix(in, transpose);
}

inline std::string write_matrix(const IntMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  return out + to_string(m);
}

// Row-major array of decimal strings, so no entry is limited to 64 bits.
inline nlohmann::json matrix_to_json(const IntMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json matrix_to_json(const RatMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Inverse of matrix_to_json for integer matrices; `rows` is needed when the
// matrix has no columns.
inline IntMatrix matrix_from_json(const nlohmann::json& j, std::size_t rows_if_empty = 0) {
  if (!j.is_array()) throw ParseError("matrix JSON must be an array of rows");
  const std::size_t d = j.size();
  std::size_t n = 0;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix JSON row must be an array");
    n = std::max(n, row.size());
  }
  IntMatrix m(d == 0 ? rows_if_empty : d, n);
  for (std::size_t r = 0; r < d; ++r) {
    if (j[r].size() != n) throw ParseError("ragged matrix JSON");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& v = j[r][c];
      if (v.is_string()) m(r, c) = parse_int(v.get<std::string>());
      else if (v.is_number_integer()) m(r, c) = Int(v.get<long long>());
      else throw ParseError("matrix JSON entry must be a decimal string");
    }
  }
  return m;
}

}  // namespace latbasis
