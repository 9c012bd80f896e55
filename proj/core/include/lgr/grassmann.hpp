#pragma once

#include <map>
#include <string>
#include <vector>

#include "lgr/combinat.hpp"
#include "lgr/extalg.hpp"
#include "lgr/matrix.hpp"

namespace lgr {

/* An N-plane in the 2N-dimensional symplectic space, as the column span of
 * a rank-N matrix W. Row p+N of W is the e_p coordinate, p = -N..N-1. */
struct Subspace {
  int N = 0;
  RatMatrix W;
};

/* The big-cell chart: column i-1 of W is
 *   e_{-i} + sum_j A_{ij} (-1)^(j-1) e_{j-1},
 * which is Lagrangian exactly when A is symmetric. Throws on A != A^T. */
Subspace from_affine(const RatMatrix& A);

/* Same column formula without the symmetry check; the resulting plane is
 * generally not Lagrangian. Used to build counterexamples. */
Subspace graph_subspace(const RatMatrix& A);

/* Plucker coordinates indexed by partitions in the N x N box:
 * pi_lambda = det of the rows of W at the particle positions of lambda,
 * taken in decreasing order. Defined up to one global scale. */
class PluckerVector {
 public:
  PluckerVector() = default;
  explicit PluckerVector(int N) : n_(N) {}

  int box() const { return n_; }
  void set(const Partition& p, const Rat& c);
  Rat at(const Partition& p) const;
  const std::map<Partition, Rat>& coords() const { return coords_; }
  bool is_zero() const;

  /* Coordinate of an arbitrary tuple of distinct positions: the sign of the
   * permutation sorting it into decreasing order times the partition
   * coordinate. Zero on a repeated position. */
  Rat signed_coord(const std::vector<int>& positions) const;

  /* Projective equality: proportional by a single nonzero scale. */
  bool proportional_to(const PluckerVector& o) const;

 private:
  int n_ = 0;
  std::map<Partition, Rat> coords_;
};

PluckerVector plucker(const Subspace& w);

/* The column wedge of W as an element of degree N. */
ExtVector ext_from_subspace(const Subspace& w);

PluckerVector plucker_from_ext(const ExtVector& phi);
ExtVector ext_from_plucker(const PluckerVector& pi);

enum class PluckerMode { full, shortened };

struct Residual {
  std::string id;
  Rat value;
};

/* Quadratic relation residuals.
 * full: for every increasing I (|I| = N-1) and J (|J| = N+1),
 *   sum_m (-1)^m pi(I, J_m) pi(J minus J_m).
 * shortened: the three-term instances
 *   pi(I',i,j1) pi(I',j2,j3) + pi(I',i,j3) pi(I',j1,j2) + pi(I',i,j2) pi(I',j3,j1).
 * All zero iff the vector is decomposable. */
std::vector<Residual> plucker_residuals(const PluckerVector& pi,
                                        PluckerMode mode);

/* Same relations for a degree-k multivector on indices {-n..n-1}, used for
 * the reduced 3-planes in C^6. */
std::vector<Residual> ext_plucker_residuals(const ExtVector& phi);

/* omega_N(W_a, W_b) = 0 for all column pairs, with
 * omega_N(e_i, e_j) = (-1)^i delta_{i,-j-1}. */
bool is_lagrangian(const Subspace& w);

/* Linear conditions cutting out the Lagrangian image inside degree N:
 * the coefficients of i_omega applied to sum pi_lambda |lambda>, one per
 * index set of cardinality N-2, followed by the two-term differences
 * pi_lambda - pi_lambda' over unordered non-symmetric pairs. */
std::vector<Residual> lagrangian_linear_residuals(const PluckerVector& pi);

/* Unordered {lambda, transpose} pairs with lambda != transpose(lambda) in
 * the N x N box; (C(2N,N) - 2^N)/2 of them. */
std::vector<std::pair<Partition, Partition>> two_term_pairs(int N);

/* Principal-minor coordinates: L_J = pi_{lambda(J,J)} over J subset {1..N},
 * scaled so L_empty = 1 whenever pi_empty != 0. Requires a Lagrangian
 * input. */
struct LagrangeCoefficients {
  int N = 0;
  std::map<std::vector<int>, Rat> values;
  Rat at(const std::vector<int>& J) const;
};

LagrangeCoefficients lagrange_map(const Subspace& w);

/* Scales each symplectic coordinate pair (e_{-i}, e_{i-1}) by eps_i = +-1.
 * The Lagrange coefficients only move by a global factor. */
Subspace z2_orbit(const Subspace& w, const std::vector<int>& eps);

/* Contraction + projection onto a 3-plane in C^6. The marked vectors of
 * (A,I) are contracted out, the complementary (B,I) directions are
 * projected away, and the three surviving index pairs are relabelled to
 * (1,2,3) in increasing order. A zero image certifies nothing and is
 * flagged inconclusive. */
struct Reduce36Result {
  bool conclusive = false;
  ExtVector phi;  // degree 3 on half_dim 3
  Reduce36Result() : phi(3) {}
};

Reduce36Result reduce36(const ExtVector& phi, const MarkedMultiIndex& m);

/* f_i = e_{-i}, f*_i = (-1)^(i-1) e_{i-1}, 1-based i. */
ExtVector f_vector(int N, int i, bool starred);

/* Isotropy residuals for a 3-vector on C^6: the coefficients of
 * i_omega(phi), which vanish iff a decomposable phi spans a null plane. */
std::vector<Residual> isotropy_residuals(const ExtVector& phi);

}  // namespace lgr
