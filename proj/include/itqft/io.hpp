#pragma once

// JSON and CSV encodings used by the command-line tool.
//
// CycNum     -> array of the p-1 power-basis coefficients. Integers that fit in
//               64 bits are JSON numbers, larger ones decimal strings, and
//               non-integral coefficients "num/den" strings.
// HDigits    -> {"p": int, "N": int, "digits": [d_0, ..., d_N]}
// matrices   -> row-major nested arrays.
// CSV        -> header "matrix,row,col,values"; values are ';'-separated.

#include <json.hpp>

#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "itqft/cyclotomic.hpp"
#include "itqft/fp_rep.hpp"
#include "itqft/hadic.hpp"
#include "itqft/rep.hpp"

namespace itqft::io {

using Json = nlohmann::ordered_json;

inline Json integer_to_json(const mpz_class& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

inline Json to_json(const CycNum& x) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x.is_integral()) {
      arr.push_back(integer_to_json(x.numerator(i)));
    } else {
      arr.push_back(x.coeff(i).get_str());
    }
  }
  return arr;
}

inline Json to_json(const HDigits& x) {
  Json j;
  j["p"] = x.p;
  j["N"] = x.N;
  j["digits"] = x.digits;
  return j;
}

inline Json to_json(const RepMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const HDigitsMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const FpMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json header(int p, int c) {
  Json j;
  j["p"] = p;
  j["c"] = c;
  j["basis"] = "Qprime";
  j["convention"] = Json{{"rows", "m"}, {"cols", "n"}};
  return j;
}

inline void write_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

inline void write_csv_header(std::ostream& os) { os << "matrix,row,col,values\n"; }

inline std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ';';
    s += parts[i];
  }
  return s;
}

inline std::string csv_value(const CycNum& x) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < x.size(); ++i) parts.push_back(x.coeff(i).get_str());
  return join(parts);
}

inline std::string csv_value(const HDigits& x) {
  std::vector<std::string> parts;
  for (int dgt : x.digits) parts.push_back(std::to_string(dgt));
  return join(parts);
}

inline std::string csv_value(std::int64_t x) { return std::to_string(x); }

template <class Matrix>
void write_csv_matrix(std::ostream& os, const std::string& name, const Matrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      os << name << ',' << i << ',' << j << ',' << csv_value(m(i, j)) << '\n';
}

}  // namespace itqft::io
