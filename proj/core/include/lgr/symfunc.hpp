#pragma once

#include <map>

#include "lgr/combinat.hpp"
#include "lgr/sympoly.hpp"

namespace lgr {

/* Schur polynomial s_lambda in the variables t_1..t_M (t_k = p_k/k), via
 * Jacobi-Trudi. The complete homogeneous h_k obey k h_k = sum r t_r h_{k-r};
 * the elementary e_k are the h_k with t_r replaced by (-1)^(r-1) t_r. Of the
 * two determinant realizations det(h_{lambda_i-i+j}) and its transpose in e,
 * the one with the smaller matrix is used. Requires M >= |lambda|. */
SymPoly schur(const Partition& lambda, int M);

/* h_k as a polynomial in t_1..t_M (memoized per M). */
SymPoly complete_homogeneous(int k, int M);

/* p_r = r t_r. */
SymPoly power_sum(int r, int M);

/* Finite linear combination of Schur functions by partition label. */
class SchurCombo {
 public:
  SchurCombo() = default;
  void add(const Partition& p, const Rat& c);
  Rat coeff(const Partition& p) const;
  const std::map<Partition, Rat>& terms() const { return terms_; }
  bool operator==(const SchurCombo& o) const { return terms_ == o.terms_; }

 private:
  std::map<Partition, Rat> terms_;
};

/* Murnaghan-Nakayama transforms: M_r adds r-border strips with sign
 * (-1)^(h+1), its dual removes them. Under the Schur realization these are
 * multiplication by p_r and d/dt_r respectively. */
SchurCombo mn_apply(int r, const SchurCombo& c);
SchurCombo mn_dual(int r, const SchurCombo& c);

SymPoly schur_combo_poly(const SchurCombo& c, int M);

/* Sets every even-indexed variable to zero. */
SymPoly restrict_odd(const SymPoly& p);

/* Substitution t_j -> t_j + sign * x^j / j (the Miwa shift [x]). */
SymPoly miwa_shift(const SymPoly& p, const Rat& x, int sign);

/* The combined [x] - [-x] shift: only odd t_j move, by 2 x^j / j. */
SymPoly miwa_pm_shift(const SymPoly& p, const Rat& x);

}  // namespace lgr
