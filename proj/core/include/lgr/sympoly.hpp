#pragma once

#include <map>
#include <vector>

#include "lgr/rational.hpp"

namespace lgr {

/* Sparse polynomial over Rat in the flow variables t_1..t_M. Exponent keys
 * are dense vectors of length M; the weight of t_k is k, so the weighted
 * degree of a monomial is sum k*e_k. Zero coefficients are never stored. */
class SymPoly {
 public:
  explicit SymPoly(int m) : m_(m) {}

  static SymPoly constant(int m, const Rat& c);
  /* t_k, 1-based. */
  static SymPoly var(int m, int k);

  int vars() const { return m_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  /* Adds c * t^e, erasing the key if the total cancels. */
  void add_term(const std::vector<int>& e, const Rat& c);
  Rat coeff(const std::vector<int>& e) const;
  Rat constant_term() const { return coeff(std::vector<int>(m_, 0)); }

  SymPoly operator+(const SymPoly& o) const;
  SymPoly operator-(const SymPoly& o) const;
  SymPoly operator-() const;
  SymPoly operator*(const SymPoly& o) const;
  SymPoly operator*(const Rat& c) const;
  bool operator==(const SymPoly& o) const {
    return m_ == o.m_ && terms_ == o.terms_;
  }

  /* Product with all monomials of weight > bound dropped. Exact whenever the
   * true product has weight <= bound; otherwise it is the working truncation
   * used by the series routines. */
  SymPoly mul_trunc(const SymPoly& o, int bound) const;
  SymPoly truncate_weight(int bound) const;

  int weighted_degree() const;  // -1 for the zero polynomial

  /* Exact evaluation; point must have length M. */
  Rat eval(const std::vector<Rat>& point) const;

  SymPoly derivative(int k) const;  // d/dt_k, 1-based

  /* Reinterpret in new_m >= M variables (new variables absent). */
  SymPoly widen(int new_m) const;

 private:
  int m_;
  std::map<std::vector<int>, Rat> terms_;
  void require_same_vars(const SymPoly& o) const;
};

inline SymPoly operator*(const Rat& c, const SymPoly& p) { return p * c; }

/* Evaluation under the spec's name. */
Rat poly_eval(const SymPoly& p, const std::vector<Rat>& point);

}  // namespace lgr
