#pragma once

#include <array>
#include <map>
#include <vector>

#include "lgr/grassmann.hpp"
#include "lgr/matrix.hpp"
#include "lgr/rational.hpp"
#include "lgr/sympoly.hpp"

namespace lgr {

/* Polynomial tau function tau = sum pi_lambda * s_lambda over the N x N
 * box, in the flow variables t_1..t_M. Weighted degree is at most N^2. */
struct TauPoly {
  SymPoly poly;
  PluckerVector source;
  int N = 0;
};

/* M < 0 picks the smallest complete variable count N^2. Throws if some
 * nonzero coordinate needs more variables than M provides. */
TauPoly tau_from_plucker(const PluckerVector& pi, int M = -1);
TauPoly tau_from_symmetric(const RatMatrix& A, int M = -1);

/* tau(t) - tau(t_tilde) with t_tilde = (t1,-t2,t3,-t4,...): the zero
 * polynomial exactly when pi_lambda = pi_lambda-transpose throughout. */
SymPoly ckp_residual(const TauPoly& tau);

/* The even-flow constraints: restrict_odd(d tau / d t_{2j}) for
 * 2 <= 2j <= M, zero on the same locus. */
std::vector<SymPoly> ckp_even_constraints(const TauPoly& tau);

/* Coefficients a_1..a_z_order of tau(t - [1/z])/tau(t) as a series in 1/z,
 * with the quotient expanded modulo weighted degree > weight_bound. Throws
 * std::domain_error when tau has zero constant term (no unit to invert). */
std::vector<SymPoly> baker_series(const TauPoly& tau, int z_order,
                                  int weight_bound = 12);

/* Coefficient of z^{-1} in e^{xi(z,-dt)} tau(t-[1/z]) tau(t+dt+[1/z]) at
 * the exact point t. The u = 1/z expansion of a weighted-degree-d
 * polynomial stops at u^d, so the residue is a finite sum; truncation must
 * be at least twice the weighted degree or the call throws. Zero for every
 * (t, dt) exactly when the source satisfies the quadratic relations. */
Rat hirota_residual(const TauPoly& tau, const std::vector<Rat>& t,
                    const std::vector<Rat>& dt, int truncation);

/* A_{ij} = tau(t' + [x_i] - [-x_j]) / ((x_i + x_j) tau(t')). t' must have
 * zero even entries (shorter vectors are zero-padded); x_i + x_j must not
 * vanish. Symmetric exactly when tau is CKP. */
RatMatrix a_matrix(const TauPoly& tau, const std::vector<Rat>& tprime,
                   const std::vector<Rat>& x);

/* LHS minus RHS of the k x k determinantal addition formula at the exact
 * point t, for k = |x| = |y| <= 3:
 *   tau(t + sum [x_i] - sum [y_i]) / tau(t)
 *     * prod_{i<j} (x_i-x_j)(y_j-y_i) / prod_{i,j} (x_i-y_j)
 *   - det[ tau(t + [x_i] - [y_j]) / ((x_i - y_j) tau(t)) ]. */
Rat fay_residual(const TauPoly& tau, const std::vector<Rat>& t,
                 const std::vector<Rat>& x, const std::vector<Rat>& y);

/* Lattice translate data: base points x_a and multiplicities n_a of the
 * odd-time shifts [x_a] - [-x_a]. */
struct ShiftSpec {
  std::vector<Rat> x;
  std::vector<int> n;
};

/* Memoized evaluation of a CKP tau along the odd-time shift lattice
 * t' + sum m_a ([x_a] - [-x_a]). The pair shift [x]-[-x] moves only odd
 * times, and t' has zero even entries, so every lattice point lives on the
 * odd locus and the odd restriction of tau suffices. Construction enforces
 * the family preconditions: CKP tau, even-zero t', x_a + x_b != 0. */
class TauLatticeEvaluator {
 public:
  TauLatticeEvaluator(const TauPoly& tau, const std::vector<Rat>& tprime,
                      const std::vector<Rat>& x);

  const Rat& at(const std::vector<int>& m);
  const std::vector<Rat>& x() const { return x_; }

 private:
  SymPoly odd_;
  std::vector<Rat> tprime_;
  std::vector<Rat> x_;
  std::map<std::vector<int>, Rat> cache_;
};

/* The eight sigma evaluations over subsets of the triple, indexed by the
 * subset mask (bit s marks triple[s]):
 *   sigma          = tau(u),
 *   sigma_a        = tau(u + [x_a] - [-x_a]) / (2 x_a),
 *   sigma_ab       = tau(u + ...) (x_a-x_b)^2 / (4 x_a x_b (x_a+x_b)^2),
 *   sigma_abc      = tau(u + ...) prod_{a<b} (x_a-x_b)^2
 *                    / (8 x_a x_b x_c prod_{a<b} (x_a+x_b)^2),
 * where u = t' + sum n_a([x_a] - [-x_a]). Throws std::domain_error when a
 * needed tau evaluation vanishes. */
std::array<Rat, 8> family_sigma_cube(TauLatticeEvaluator& ev,
                                     const ShiftSpec& spec,
                                     const std::array<int, 3>& triple);

/* cayley222 of the sigma cube: zero on the whole lattice for CKP tau. */
Rat family_residual(TauLatticeEvaluator& ev, const ShiftSpec& spec,
                    const std::array<int, 3>& triple);
Rat family_residual(const TauPoly& tau, const std::vector<Rat>& tprime,
                    const ShiftSpec& spec, const std::array<int, 3>& triple);

}  // namespace lgr
