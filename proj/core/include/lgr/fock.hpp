#pragma once

#include <map>
#include <vector>

#include "lgr/combinat.hpp"
#include "lgr/rational.hpp"
#include "lgr/sympoly.hpp"

namespace lgr {

/* Charged fermionic basis state |lambda; n>. The particle positions are
 * l_k = lambda_k - k + n, strictly decreasing and saturating to the
 * consecutive sea n-k once k exceeds the length of lambda. */
struct FockState {
  Partition lambda;
  int n = 0;

  bool operator<(const FockState& o) const {
    if (n != o.n) return n < o.n;
    return lambda < o.lambda;
  }
  bool operator==(const FockState& o) const {
    return n == o.n && lambda == o.lambda;
  }
};

/* First `count` particle positions of the state, descending. */
std::vector<int> state_positions(const FockState& s, int count);

/* Finitely supported linear combination of basis states. */
class FockVector {
 public:
  FockVector() = default;

  static FockVector basis(const FockState& s);
  static FockVector vacuum(int n);

  bool is_zero() const { return terms_.empty(); }
  const std::map<FockState, Rat>& terms() const { return terms_; }
  void add_term(const FockState& s, const Rat& c);
  Rat coeff(const FockState& s) const;

  FockVector operator+(const FockVector& o) const;
  FockVector operator-(const FockVector& o) const;
  FockVector operator*(const Rat& c) const;
  bool operator==(const FockVector& o) const { return terms_ == o.terms_; }

 private:
  std::map<FockState, Rat> terms_;
};

inline FockVector operator*(const Rat& c, const FockVector& v) { return v * c; }

/* Creation psi_i: wedges e_i in, with the sign (-1)^(number of occupied
 * positions above i); zero on an occupied slot. Charge rises by one. */
FockVector psi(int i, const FockVector& v);

/* Annihilation psi_dag_i: removes e_i with the same sign rule; zero on an
 * empty slot. Charge drops by one. */
FockVector psi_dag(int i, const FockVector& v);

/* Current J_r = sum_j psi_j psi_dag_{j+r}, r != 0: moves one particle down
 * by r. Only particles whose landing slot is free contribute, and any
 * particle deep in the consecutive sea lands on an occupied slot, so the
 * sum over j is finite on every state. */
FockVector current(int r, const FockVector& v);

/* omega_hat = -sum_{i>=0} (-1)^i psi_{-i-1} psi_i (charge +2). For i past
 * the sea level the slot -i-1 is occupied, so finitely many i contribute. */
FockVector omega_hat(const FockVector& v);

/* omega_hat_dag = sum_{i>=0} (-1)^i psi_dag_{-i-1} psi_dag_i (charge -2).
 * For i above the top particle the slot i is empty: again a finite sum. */
FockVector omega_hat_dag(const FockVector& v);

enum class Chevalley { E, F, H };

/* The sl2-triple generators at node j >= 0:
 *   E_0 = psi_{-1} psi_dag_0,              F_0 = psi_0 psi_dag_{-1},
 *   H_0 = psi_{-1}psi_dag_{-1} - psi_0 psi_dag_0,
 * and for j >= 1
 *   E_j = psi_{j-1}psi_dag_j + psi_{-j-1}psi_dag_{-j},
 *   F_j = psi_j psi_dag_{j-1} + psi_{-j}psi_dag_{-j-1},
 *   H_j = n_{j-1} - n_j + n_{-j-1} - n_{-j}. */
FockVector chevalley(Chevalley kind, int j, const FockVector& v);

/* |v(j)> = omega_hat^j |empty; -2j>, the highest-weight vector at charge 0. */
FockVector hw_vector(int j);

/* Orthogonal projector averaging lambda with its transpose. Charge 0 only. */
FockVector pi_S(const FockVector& v);

/* Null-condition residuals of a charge-0 vector: omega_hat v, omega_hat_dag
 * v, and the projected current constraints Pi_S(J_{2j}(Pi_S v)) for even
 * 2j <= weight_bound. The raw J_{2j}(Pi_S v) need not vanish termwise even
 * on genuine null vectors; its symmetric part must, and that symmetric part
 * is exactly the linear constraint on the coefficient map (the derivative
 * of the associated series in an even time, restricted back to the
 * symmetric locus). */
std::vector<FockVector> ckp_null_residuals(const FockVector& v,
                                           int weight_bound = 12);

/* Charge-0 vectors map to polynomials: sum of coeff(lambda) * schur(lambda)
 * in t_1..t_M. */
SymPoly bosonize(const FockVector& v, int M);

}  // namespace lgr
