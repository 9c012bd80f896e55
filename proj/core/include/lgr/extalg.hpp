#pragma once

#include <map>
#include <vector>

#include "lgr/combinat.hpp"
#include "lgr/rational.hpp"

namespace lgr {

/* Sparse element of the exterior algebra on the 2N-dimensional space with
 * basis e_{-N},...,e_{N-1}. A term is stored against its strictly increasing
 * index list; wedge monomials are normalized to that order, with the sign of
 * the sorting permutation absorbed into the coefficient. The contraction
 * pairing treats the integer-indexed e-basis as orthonormal, which agrees
 * with the orthonormal (f_i, f*_i) convention because the sign twists of the
 * basis change square to one. */
class ExtVector {
 public:
  explicit ExtVector(int N) : n_(N) {}

  static ExtVector one(int N) {
    ExtVector v(N);
    v.terms_[{}] = 1;
    return v;
  }
  /* e_{idx[0]} ^ ... ^ e_{idx[k-1]} for pairwise distinct indices in
   * [-N, N-1], in any order (zero vector if a repeat appears). */
  static ExtVector basis(int N, const std::vector<int>& idx);

  int half_dim() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }

  void add_term(std::vector<int> key, const Rat& c);  // key must be increasing
  Rat coeff(const std::vector<int>& key) const;

  /* -1 if mixed-degree or zero; otherwise the common key length. */
  int degree() const;

  ExtVector operator+(const ExtVector& o) const;
  ExtVector operator-(const ExtVector& o) const;
  ExtVector operator-() const;
  ExtVector operator*(const Rat& c) const;
  bool operator==(const ExtVector& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
  }

 private:
  int n_;
  std::map<std::vector<int>, Rat> terms_;
};

inline ExtVector operator*(const Rat& c, const ExtVector& v) { return v * c; }

ExtVector wedge(const ExtVector& u, const ExtVector& v);

/* Interior product i_dual(phi) against the orthonormal pairing above.
 * For a monomial dual u ^ v the convention is i_{u^v} = i_v o i_u, so the
 * factors of the dual are contracted in increasing index order. */
ExtVector contract(const ExtVector& phi, const ExtVector& dual);

/* The symplectic 2-form omega_N = sum_{i=1..N} (-1)^i e_{-i} ^ e_{i-1}. */
ExtVector omega_form(int N);

/* X_i = (-1)^i e_i ^ e_{-i-1}, defined for i in [-N, N-1]; X_i = X_{-i-1}. */
ExtVector x_form(int N, int i);

ExtVector omega_wedge(const ExtVector& phi);     // omega_N ^ phi
ExtVector omega_contract(const ExtVector& phi);  // i_{omega_N} phi

/* Keeps only terms whose indices all lie in `allowed`. */
ExtVector project_keep(const ExtVector& phi, const std::vector<int>& allowed);

/* Isotropic index sets K: subsets of {-N..N-1} meeting each symplectic pair
 * {-i, i-1} at most once, i.e. K and -K-1 disjoint. 3^N of them. */
std::vector<std::vector<int>> isotropic_index_sets(int N);

/* Complement pairs of K listed by their negative member, in decreasing
 * order: -1 side first. */
std::vector<int> complement_pairs(const std::vector<int>& K, int N);

/* Label (j, T, K) of a basis vector Phi_{j,T,K}: T is a standard tableau of
 * shape (2^l, 1^(m-2l)) on the m = N - |K| complement pairs, and
 * 0 <= j <= m - 2l. */
struct BasisElement {
  int N = 0;
  int j = 0;
  StandardTableau T;
  std::vector<int> K;
};

/* Phi_{j,T,K} = (1/j!) omega_Kbar^j ^ V_T ^ e_K, where omega_Kbar sums X
 * over the complement pairs, each two-entry tableau row (u,v) contributes a
 * factor X_{Kbar_u} - X_{Kbar_v}, single-entry rows contribute nothing, and
 * e_K wedges the K indices in decreasing order. */
ExtVector phi_basis_element(const BasisElement& b);

/* All Phi_{j,T,K} of total degree k = 2j + 2l + |K|: a basis of the
 * irreducible submodule P^k_{k-2j}. Requires 0 <= j and 2j <= k <= N+j. */
std::vector<ExtVector> basis_P(int N, int k, int j);
std::vector<BasisElement> basis_P_labels(int N, int k, int j);

/* The two ladder identities on one basis label:
 *   omega ^ Phi_{j,T,K}   = (j+1) Phi_{j+1,T,K}
 *   i_omega Phi_{j,T,K}   = (m - 2l - j + 1) Phi_{j-1,T,K}
 * with the out-of-range Phi read as zero (string ends). */
bool ladder_check(const BasisElement& b);

}  // namespace lgr
