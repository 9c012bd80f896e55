#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <stdexcept>
#include <vector>

#include "lgr/hyperdet.hpp"
#include "lgr/random.hpp"
#include "lgr/symfunc.hpp"
#include "lgr/tau.hpp"

using namespace lgr;

namespace {

RatMatrix tridiagonal3() {
  RatMatrix a(3, 3);
  const int vals[3][3] = {{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = vals[i][j];
  return a;
}

RatMatrix nonsym2() {
  RatMatrix a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 3;
  a.at(1, 1) = 1;
  return a;
}

/* KP-but-not-CKP sources: graphs of non-symmetric matrices. */
TauPoly tau_from_graph(const RatMatrix& a) {
  return tau_from_plucker(plucker(graph_subspace(a)));
}

/* tau = 1 + t1, the smallest nontrivial polynomial tau function. */
TauPoly line_tau() {
  PluckerVector pi(1);
  pi.set({}, 1);
  pi.set({1}, 1);
  return tau_from_plucker(pi);
}

/* Indicator coordinates of {}, (2), (1,1): violates the quadratic relation,
 * and tau = 1 + t1^2. */
TauPoly bad_tau() {
  PluckerVector pi(2);
  pi.set({}, 1);
  pi.set({2}, 1);
  pi.set({1, 1}, 1);
  return tau_from_plucker(pi);
}

/* t' + sum n_a ([x_a] - [-x_a]) as an explicit point of length M. */
std::vector<Rat> lattice_point(const std::vector<Rat>& tprime, int M,
                               const std::vector<Rat>& x,
                               const std::vector<int>& n) {
  std::vector<Rat> u(M, 0);
  for (size_t k = 0; k < tprime.size() && k < u.size(); ++k) u[k] = tprime[k];
  for (size_t a = 0; a < x.size(); ++a) {
    if (n[a] == 0) continue;
    Rat xp = 1;
    for (int k = 1; k <= M; ++k) {
      xp *= x[a];
      if (k % 2 == 1) u[k - 1] += Rat(2 * n[a]) * xp / Rat(k);
    }
  }
  return u;
}

}  // namespace

TEST_CASE("tau polynomial fixtures") {
  const TauPoly one = tau_from_symmetric(RatMatrix::identity(2));
  CHECK(one.N == 2);
  CHECK(one.poly.vars() == 4);
  /* pi = (1,1,0,0,1,1): tau = 1 + s1 + s21 + s22 */
  CHECK(one.poly.constant_term() == 1);
  CHECK(one.poly.coeff({1, 0, 0, 0}) == 1);
  CHECK(one.poly.coeff({0, 0, 1, 0}) == -1);       // -t3 from s21
  CHECK(one.poly.coeff({0, 2, 0, 0}) == 1);        // t2^2 from s22
  CHECK(one.poly.coeff({0, 0, 0, 1}) == 0);        // no bare t4
  CHECK(one.poly.weighted_degree() == 4);

  const TauPoly lt = line_tau();
  CHECK(lt.poly == SymPoly::constant(1, 1) + SymPoly::var(1, 1));

  CHECK(tau_from_symmetric(tridiagonal3()).poly ==
        tau_from_plucker(plucker(from_affine(tridiagonal3()))).poly);
  CHECK_THROWS_AS((void)tau_from_plucker(plucker(from_affine(tridiagonal3())), 2),
                  std::invalid_argument);
}

TEST_CASE("ckp residual separates symmetric sources") {
  Rng rng(101);
  for (int N = 2; N <= 3; ++N)
    CHECK(ckp_residual(tau_from_symmetric(rng.symmetric(N, 9, 9))).is_zero());

  /* tau = 1 + s2: residual is tau(t) - tau(t-tilde) = 2 t2 */
  PluckerVector pi(2);
  pi.set({}, 1);
  pi.set({2}, 1);
  const TauPoly t = tau_from_plucker(pi);
  CHECK(ckp_residual(t) == SymPoly::var(4, 2) * Rat(2));

  const TauPoly ns = tau_from_graph(nonsym2());
  CHECK_FALSE(ckp_residual(ns).is_zero());
}

TEST_CASE("tau_from_symmetric rejects non-symmetric input") {
  CHECK_THROWS_AS((void)tau_from_symmetric(nonsym2()), std::invalid_argument);
  /* the graph path carries the non-symmetric counterexamples instead */
  CHECK(tau_from_graph(nonsym2()).N == 2);
}

TEST_CASE("even flow constraints") {
  const TauPoly good = tau_from_symmetric(tridiagonal3());
  const auto cs = ckp_even_constraints(good);
  CHECK(cs.size() == 4);  // 2j in {2,4,6,8} for M = 9
  for (const SymPoly& c : cs) CHECK(c.is_zero());
  bool any = false;
  for (const SymPoly& c : ckp_even_constraints(tau_from_graph(nonsym2())))
    if (!c.is_zero()) any = true;
  CHECK(any);
}

TEST_CASE("baker series coefficients satisfy the log-derivative identities") {
  const int wb = 12;
  Rng rng(107);
  const TauPoly tau = tau_from_symmetric(rng.symmetric(2, 5, 5));
  const auto a = baker_series(tau, 2, wb);
  REQUIRE(a.size() == 2);
  const SymPoly& p = tau.poly;
  /* a1 tau = -d tau/dt1 and 2 a2 tau = d^2 tau/dt1^2 - d tau/dt2,
   * both modulo weight > wb */
  CHECK((a[0] * p + p.derivative(1)).truncate_weight(wb).is_zero());
  CHECK((a[1] * p * Rat(2) - p.derivative(1).derivative(1) + p.derivative(2))
            .truncate_weight(wb)
            .is_zero());
}

TEST_CASE("baker series needs an invertible constant term") {
  PluckerVector pi(1);
  pi.set({1}, 1);  // tau = t1
  CHECK_THROWS_AS((void)baker_series(tau_from_plucker(pi), 1),
                  std::domain_error);
}

TEST_CASE("hirota residual vanishes on genuine tau functions") {
  const TauPoly lt = line_tau();
  CHECK(hirota_residual(lt, {rat_frac(1, 3)}, {rat_frac(2, 5)}, 2) == 0);
  CHECK(hirota_residual(lt, {Rat(4)}, {Rat(-7)}, 12) == 0);

  Rng rng(113);
  const TauPoly tau = tau_from_symmetric(rng.symmetric(2, 5, 5));
  const int trunc = 2 * tau.poly.weighted_degree();
  for (int s = 0; s < 5; ++s) {
    std::vector<Rat> t, dt;
    for (int k = 0; k < 4; ++k) {
      t.push_back(rng.rat(3, 3));
      dt.push_back(rng.rat(3, 3));
    }
    CHECK(hirota_residual(tau, t, dt, trunc) == 0);
  }
}

TEST_CASE("hirota residual catches quadratic violations") {
  const TauPoly bad = bad_tau();
  Rng rng(117);
  bool any = false;
  for (int s = 0; s < 5; ++s) {
    std::vector<Rat> t, dt;
    for (int k = 0; k < 4; ++k) {
      t.push_back(rng.rat(3, 3));
      dt.push_back(rng.rat(3, 3));
    }
    if (hirota_residual(bad, t, dt, 8) != 0) any = true;
  }
  CHECK(any);
}

TEST_CASE("hirota residual enforces its truncation floor") {
  CHECK_THROWS_AS(
      (void)hirota_residual(line_tau(), {Rat(1)}, {Rat(1)}, 1),
      std::invalid_argument);
}

TEST_CASE("a_matrix of the constant tau is the Cauchy kernel") {
  PluckerVector pi(1);
  pi.set({}, 1);
  const TauPoly tau = tau_from_plucker(pi);  // tau = 1
  const std::vector<Rat> x{rat_frac(1, 2), rat_frac(1, 3), rat_frac(2, 5)};
  const RatMatrix A = a_matrix(tau, {}, x);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(A.at(i, j) == Rat(1) / (x[i] + x[j]));
}

TEST_CASE("a_matrix symmetry characterizes CKP") {
  const std::vector<Rat> x{rat_frac(1, 2), rat_frac(1, 3), rat_frac(1, 5)};
  const std::vector<Rat> tp{rat_frac(1, 7), Rat(0), rat_frac(-1, 4)};
  CHECK(a_matrix(tau_from_symmetric(tridiagonal3()), tp, x).is_symmetric());
  CHECK_FALSE(a_matrix(tau_from_graph(nonsym2()), tp, x).is_symmetric());
}

TEST_CASE("a_matrix preconditions") {
  const TauPoly tau = tau_from_symmetric(tridiagonal3());
  CHECK_THROWS_AS((void)a_matrix(tau, {Rat(0), Rat(1)}, {Rat(1)}),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)a_matrix(tau, {}, {Rat(1), Rat(-1)}),
                  std::invalid_argument);
}

TEST_CASE("fay residual at k = 1 is identically zero") {
  for (const TauPoly& tau : {tau_from_graph(tridiagonal3()), bad_tau()}) {
    CHECK(fay_residual(tau, {rat_frac(1, 3), Rat(0), rat_frac(1, 2)},
                       {rat_frac(1, 2)}, {rat_frac(-1, 3)}) == 0);
  }
}

TEST_CASE("fay residual vanishes for all plucker sources") {
  Rng rng(131);
  /* Fay needs only the quadratic relations, not symmetry */
  for (const RatMatrix& a : {rng.symmetric(3, 5, 5), nonsym2()}) {
    const TauPoly tau = tau_from_graph(a);
    for (int k = 1; k <= 3; ++k) {
      std::vector<Rat> t(4), x, y;
      for (auto& v : t) v = rng.rat(3, 3);
      for (int i = 0; i < k; ++i) {
        x.push_back(rat_frac(1, 2 + i));
        y.push_back(rat_frac(-1, 3 + i));
      }
      CHECK(fay_residual(tau, t, x, y) == 0);
    }
  }
}

TEST_CASE("fay residual catches quadratic violations") {
  const TauPoly bad = bad_tau();
  CHECK(fay_residual(bad, {Rat(1), Rat(1), Rat(0), Rat(0)},
                     {rat_frac(1, 2), rat_frac(1, 3)},
                     {rat_frac(-1, 2), rat_frac(-1, 5)}) != 0);
}

TEST_CASE("fay residual validates its arguments") {
  const TauPoly tau = tau_from_symmetric(tridiagonal3());
  CHECK_THROWS_AS((void)fay_residual(tau, {}, {Rat(1)}, {Rat(1)}),
                  std::invalid_argument);  // x - y vanishes
  CHECK_THROWS_AS(
      (void)fay_residual(tau, {}, {Rat(1), Rat(2), Rat(3), Rat(4)},
                         {Rat(5), Rat(6), Rat(7), Rat(8)}),
      std::invalid_argument);  // k > 3
}

TEST_CASE("lattice evaluator preconditions and values") {
  const TauPoly good = tau_from_symmetric(tridiagonal3());
  const std::vector<Rat> x{rat_frac(1, 2), rat_frac(1, 3)};
  const std::vector<Rat> tp{rat_frac(1, 5)};

  CHECK_THROWS_AS(TauLatticeEvaluator(tau_from_graph(nonsym2()), tp, x),
                  std::invalid_argument);
  CHECK_THROWS_AS(TauLatticeEvaluator(good, {Rat(0), Rat(1)}, x),
                  std::invalid_argument);
  CHECK_THROWS_AS(TauLatticeEvaluator(good, tp, {Rat(1), Rat(-1)}),
                  std::invalid_argument);

  TauLatticeEvaluator ev(good, tp, x);
  const int M = good.poly.vars();
  CHECK(ev.at({0, 0}) ==
        poly_eval(good.poly, lattice_point(tp, M, x, {0, 0})));
  CHECK(ev.at({2, -1}) ==
        poly_eval(good.poly, lattice_point(tp, M, x, {2, -1})));
  CHECK(ev.at({2, -1}) == ev.at({2, -1}));  // cached path
  CHECK_THROWS_AS((void)ev.at({1}), std::invalid_argument);
}

TEST_CASE("sigma cube entries are tau-scaled principal minors of a_matrix") {
  /* The k <= 3 addition formula in determinant form: with u the lattice
   * base point, sigma_S = tau(u) * det(A_S) for A = a_matrix(tau, u, x).
   * This pins every prefactor in family_sigma_cube against an independent
   * computation. */
  const TauPoly tau = tau_from_symmetric(tridiagonal3());
  const int M = tau.poly.vars();
  const std::vector<Rat> x{rat_frac(1, 2), rat_frac(1, 3), rat_frac(1, 5),
                           rat_frac(1, 7)};
  const std::vector<Rat> tp{rat_frac(1, 4)};
  const std::vector<int> n{1, 0, -1, 2};
  const std::array<int, 3> triple{1, 3, 4};

  TauLatticeEvaluator ev(tau, tp, x);
  ShiftSpec spec;
  spec.x = x;
  spec.n = n;
  const std::array<Rat, 8> cube = family_sigma_cube(ev, spec, triple);

  const std::vector<Rat> u = lattice_point(tp, M, x, n);
  const Rat tau_u = poly_eval(tau.poly, u);
  CHECK(cube[0] == tau_u);

  const std::vector<Rat> xt{x[0], x[2], x[3]};
  const RatMatrix A = a_matrix(tau, u, xt);
  for (int mask = 1; mask < 8; ++mask) {
    std::vector<int> idx;
    for (int s = 0; s < 3; ++s)
      if (mask & (1 << s)) idx.push_back(s + 1);
    CHECK(cube[mask] == tau_u * minor_det(A, idx, idx));
  }
}

TEST_CASE("family residual vanishes on the lattice and flags perturbations") {
  const TauPoly tau = tau_from_symmetric(tridiagonal3());
  const std::vector<Rat> x{rat_frac(1, 2), rat_frac(1, 3), rat_frac(1, 5)};
  const std::vector<Rat> tp{rat_frac(1, 4)};
  TauLatticeEvaluator ev(tau, tp, x);
  const std::array<int, 3> triple{1, 2, 3};

  for (const std::vector<int>& n :
       {std::vector<int>{0, 0, 0}, {1, -1, 0}, {2, 1, -2}}) {
    ShiftSpec spec;
    spec.x = x;
    spec.n = n;
    CHECK(family_residual(ev, spec, triple) == 0);
    CHECK(family_residual(tau, tp, spec, triple) == 0);

    std::array<Rat, 8> cube = family_sigma_cube(ev, spec, triple);
    for (int m = 0; m < 8; ++m) {
      std::array<Rat, 8> bent = cube;
      bent[m] += 1;
      CHECK(cayley222_of<Rat>(bent) != 0);
    }
  }
}

TEST_CASE("family evaluation refuses vanishing translates") {
  /* tau = 1 + t1 vanishes at the base point t' = (-1) */
  TauLatticeEvaluator ev(line_tau(), {Rat(-1)},
                         {rat_frac(1, 2), rat_frac(1, 3), rat_frac(1, 5)});
  ShiftSpec spec;
  spec.x = {rat_frac(1, 2), rat_frac(1, 3), rat_frac(1, 5)};
  CHECK_THROWS_AS((void)family_sigma_cube(ev, spec, {1, 2, 3}),
                  std::domain_error);
}

TEST_CASE("empty n defaults to the origin") {
  const TauPoly tau = tau_from_symmetric(tridiagonal3());
  const std::vector<Rat> x{rat_frac(1, 2), rat_frac(1, 3), rat_frac(1, 5)};
  TauLatticeEvaluator ev(tau, {}, x);
  ShiftSpec defaulted, origin;
  defaulted.x = origin.x = x;
  origin.n = {0, 0, 0};
  CHECK(family_sigma_cube(ev, defaulted, {1, 2, 3}) ==
        family_sigma_cube(ev, origin, {1, 2, 3}));
}
