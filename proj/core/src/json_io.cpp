#include "lgr/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lgr {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument("malformed JSON: " + what);
}

int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string(key));
  return j[key].get<int>();
}

Rat get_rat(const json& j) {
  if (!j.is_string()) bad("rational must be a string");
  return rat_from_string(j.get<std::string>());
}

std::vector<int> get_int_array(const json& j, const std::string& what) {
  if (!j.is_array()) bad(what);
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad(what);
    out.push_back(x.get<int>());
  }
  return out;
}

RatMatrix get_matrix(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) bad(std::string(key));
  const auto& rows = j[key];
  const int r = static_cast<int>(rows.size());
  int c = -1;
  for (const auto& row : rows) {
    if (!row.is_array()) bad("matrix row");
    if (c < 0) c = static_cast<int>(row.size());
    if (static_cast<int>(row.size()) != c) bad("ragged matrix");
  }
  if (r == 0 || c <= 0) bad("empty matrix");
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < c; ++k) m.at(i, k) = get_rat(rows[i][k]);
  return m;
}

json matrix_rows(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RatMatrix affine_from_json(const std::string& text) {
  json j = parse(text);
  const int n = get_int(j, "n");
  RatMatrix m = get_matrix(j, "affine");
  if (m.rows() != n || m.cols() != n) bad("affine matrix must be n x n");
  return m;
}

std::string affine_to_json(const RatMatrix& A) {
  json j;
  j["n"] = A.rows();
  j["affine"] = matrix_rows(A);
  return j.dump();
}

Subspace subspace_from_json(const std::string& text) {
  json j = parse(text);
  Subspace w;
  w.N = get_int(j, "n");
  w.W = get_matrix(j, "w");
  if (w.W.rows() != 2 * w.N || w.W.cols() != w.N) bad("w must be 2N x N");
  return w;
}

std::string subspace_to_json(const Subspace& w) {
  json j;
  j["n"] = w.N;
  j["w"] = matrix_rows(w.W);
  return j.dump();
}

ExtVector extvector_from_json(const std::string& text) {
  json j = parse(text);
  const int n = get_int(j, "n");
  if (!j.contains("terms") || !j["terms"].is_array()) bad("terms");
  ExtVector v(n);
  for (const auto& t : j["terms"]) {
    if (!t.contains("idx") || !t.contains("c")) bad("term");
    std::vector<int> idx = get_int_array(t["idx"], "idx");
    ExtVector mono = ExtVector::basis(n, idx);
    if (mono.is_zero() && !idx.empty()) bad("repeated index in term");
    for (const auto& [key, sign] : mono.terms()) v.add_term(key, sign * get_rat(t["c"]));
  }
  return v;
}

std::string extvector_to_json(const ExtVector& v) {
  json j;
  j["n"] = v.half_dim();
  json terms = json::array();
  for (const auto& [key, c] : v.terms()) {
    json t;
    t["idx"] = key;
    t["c"] = rat_to_string(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j.dump();
}

SymPoly sympoly_from_json(const std::string& text) {
  json j = parse(text);
  const int m = get_int(j, "m");
  if (m < 0) bad("m");
  if (!j.contains("terms") || !j["terms"].is_array()) bad("terms");
  SymPoly p(m);
  for (const auto& t : j["terms"]) {
    if (!t.contains("exp") || !t.contains("c")) bad("term");
    std::vector<int> e = get_int_array(t["exp"], "exp");
    if (static_cast<int>(e.size()) != m) bad("exp length");
    for (int x : e)
      if (x < 0) bad("negative exponent");
    p.add_term(e, get_rat(t["c"]));
  }
  return p;
}

std::string sympoly_to_json(const SymPoly& p) {
  json j;
  j["m"] = p.vars();
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json t;
    t["exp"] = e;
    t["c"] = rat_to_string(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j.dump();
}

namespace {

std::vector<int> subset_from_key(const std::string& key) {
  std::vector<int> s;
  for (char ch : key) {
    if (ch < '1' || ch > '3') bad("cube key");
    s.push_back(ch - '0');
  }
  return s;
}

std::string subset_key(const std::vector<int>& s) {
  std::string k;
  for (int x : s) k += static_cast<char>('0' + x);
  return k;
}

}  // namespace

MinorCube minorcube_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("L") || !j["L"].is_object()) bad("L");
  MinorCube cube;
  int seen = 0;
  for (const auto& [key, val] : j["L"].items()) {
    cube.at(subset_from_key(key)) = get_rat(val);
    ++seen;
  }
  if (seen != 8) bad("cube needs exactly 8 entries");
  return cube;
}

std::string minorcube_to_json(const MinorCube& c) {
  ordered_json L;
  for (int size = 0; size <= 3; ++size)
    for (const auto& S : subsets_of(3, size))
      L[subset_key(S)] = rat_to_string(c.at(S));
  ordered_json j;
  j["L"] = L;
  return j.dump();
}

FockVector fockvector_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.contains("terms") || !j["terms"].is_array()) bad("terms");
  FockVector v;
  for (const auto& t : j["terms"]) {
    if (!t.contains("lambda") || !t.contains("c")) bad("term");
    Partition lam = get_int_array(t["lambda"], "lambda");
    if (!is_valid_partition(lam)) bad("lambda");
    v.add_term({lam, get_int(t, "n")}, get_rat(t["c"]));
  }
  return v;
}

std::string fockvector_to_json(const FockVector& v) {
  json terms = json::array();
  for (const auto& [s, c] : v.terms()) {
    json t;
    t["lambda"] = s.lambda;
    t["n"] = s.n;
    t["c"] = rat_to_string(c);
    terms.push_back(t);
  }
  json j;
  j["terms"] = terms;
  return j.dump();
}

PluckerVector pluckervector_from_json(const std::string& text) {
  json j = parse(text);
  const int n = get_int(j, "n");
  if (!j.contains("plucker") || !j["plucker"].is_array()) bad("plucker");
  PluckerVector pi(n);
  for (const auto& t : j["plucker"]) {
    if (!t.contains("lambda") || !t.contains("c")) bad("term");
    Partition lam = get_int_array(t["lambda"], "lambda");
    if (!is_valid_partition(lam) || !fits_in_box(lam, n)) bad("lambda");
    pi.set(lam, get_rat(t["c"]));
  }
  return pi;
}

static json plucker_terms(const PluckerVector& pi) {
  json terms = json::array();
  for (const auto& [lam, c] : pi.coords()) {
    json t;
    t["lambda"] = lam;
    t["c"] = rat_to_string(c);
    terms.push_back(t);
  }
  return terms;
}

std::string pluckervector_to_json(const PluckerVector& pi) {
  json j;
  j["n"] = pi.box();
  j["plucker"] = plucker_terms(pi);
  return j.dump();
}

TauPoly taupoly_from_json(const std::string& text) {
  json j = parse(text);
  const int m = get_int(j, "m");
  return tau_from_plucker(pluckervector_from_json(text), m);
}

std::string taupoly_to_json(const TauPoly& tau) {
  json j;
  j["n"] = tau.N;
  j["m"] = tau.poly.vars();
  j["plucker"] = plucker_terms(tau.source);
  return j.dump();
}

std::string lagrange_to_json(const LagrangeCoefficients& L) {
  ordered_json obj;
  for (int size = 0; size <= L.N; ++size)
    for (const auto& S : subsets_of(L.N, size)) {
      std::string key;
      for (int x : S) key += std::to_string(x);
      obj[key] = rat_to_string(L.at(S));
    }
  ordered_json j;
  j["L"] = obj;
  return j.dump();
}

std::string residuals_to_json(const std::vector<Residual>& rs) {
  json arr = json::array();
  for (const auto& r : rs) {
    json item;
    item["relation"] = r.id;
    item["residual"] = rat_to_string(r.value);
    arr.push_back(item);
  }
  return arr.dump();
}

}  // namespace lgr
