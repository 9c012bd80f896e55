/* Acceptance sweep: twelve end-to-end properties over fixed seeded
 * families. Every check is exact rational equality; a single nonzero
 * residual fails its criterion. Run with no arguments for the full sweep,
 * or pass criterion numbers to run a subset. */

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "lgr/combinat.hpp"
#include "lgr/extalg.hpp"
#include "lgr/fock.hpp"
#include "lgr/grassmann.hpp"
#include "lgr/hyperdet.hpp"
#include "lgr/matrix.hpp"
#include "lgr/random.hpp"
#include "lgr/rational.hpp"
#include "lgr/symfunc.hpp"
#include "lgr/sympoly.hpp"
#include "lgr/tau.hpp"

namespace {

using namespace lgr;

bool all_zero(const std::vector<Residual>& rs) {
  for (const auto& r : rs)
    if (r.value != 0) return false;
  return true;
}

RatMatrix tridiagonal3() {
  RatMatrix a(3, 3);
  const long v[3][3] = {{2, 1, 0}, {1, 2, 1}, {0, 1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = Rat(v[i][j]);
  return a;
}

/* Asymmetry in the leading 2x2 block guarantees the graph is not
 * Lagrangian. */
RatMatrix random_nonsymmetric(Rng& rng, int n) {
  RatMatrix a = rng.matrix(n, n, 9, 9);
  if (a.at(0, 1) == a.at(1, 0)) a.at(0, 1) = a.at(1, 0) + 1;
  return a;
}

MinorCube principal_minor_cube(const RatMatrix& a) {
  MinorCube c;
  for (int k = 0; k <= 3; ++k)
    for (const auto& s : subsets_of(3, k)) c.at(s) = minor_det(a, s, s);
  return c;
}

/* 1. The 2x2x2 hyperdeterminant of the principal-minor cube vanishes for
 * every symmetric 3x3 matrix: fixtures plus 10,000 samples with numerators
 * and denominators up to 99. */
bool criterion_1() {
  if (cayley222(principal_minor_cube(RatMatrix::identity(3))) != 0)
    return false;
  if (cayley222(principal_minor_cube(tridiagonal3())) != 0) return false;
  Rng rng(101);
  for (int s = 0; s < 10000; ++s)
    if (cayley222(principal_minor_cube(rng.symmetric(3, 99, 99))) != 0)
      return false;
  return true;
}

/* 2. Every (J, triple) core residual vanishes at N = 4 and N = 5. */
bool criterion_2() {
  Rng rng(202);
  for (int n : {4, 5})
    for (int s = 0; s < 50; ++s) {
      const LagrangeCoefficients L =
          lagrange_map(from_affine(rng.symmetric(n, 9, 9)));
      for (int k = 0; k + 3 <= n; ++k)
        for (const auto& J : subsets_of(n, k)) {
          std::vector<int> comp;
          for (int i = 1; i <= n; ++i)
            if (std::find(J.begin(), J.end(), i) == J.end())
              comp.push_back(i);
          for (const auto& pick :
               subsets_of(static_cast<int>(comp.size()), 3)) {
            const std::array<int, 3> triple{comp[pick[0] - 1],
                                            comp[pick[1] - 1],
                                            comp[pick[2] - 1]};
            if (core_residual(L, J, triple) != 0) return false;
          }
        }
    }
  return true;
}

/* 3. Graded decomposition under the symplectic pair: dimensions match the
 * binomial difference formula, grade totals match C(2N,k), and the ladder
 * identities hold on every basis element. */
bool criterion_3() {
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 2 * n; ++k) {
      long total = 0;
      for (int j = std::max(0, k - n); 2 * j <= k; ++j) {
        const auto labels = basis_P_labels(n, k, j);
        const int d = k - 2 * j;
        Rat expect = binomial(2 * n, d);
        if (d >= 2) expect -= binomial(2 * n, d - 2);
        if (Rat(static_cast<long>(labels.size())) != expect) return false;
        for (const auto& b : labels)
          if (!ladder_check(b)) return false;
        total += static_cast<long>(labels.size());
      }
      if (Rat(total) != binomial(2 * n, k)) return false;
    }
  return true;
}

/* 4. Graphs of symmetric matrices satisfy all quadratic relations, all
 * linear contraction relations, and all two-term transpose relations; the
 * two-term census matches (C(2N,N) - 2^N)/2. */
bool criterion_4() {
  for (int n = 1; n <= 4; ++n) {
    const Rat expect = (binomial(2 * n, n) - Rat(1L << n)) / Rat(2);
    if (Rat(static_cast<long>(two_term_pairs(n).size())) != expect)
      return false;
  }
  if (two_term_pairs(3).size() != 6 || two_term_pairs(4).size() != 27)
    return false;

  Rng rng(404);
  for (int s = 0; s < 100; ++s) {
    const int n = s % 4 + 1;
    const PluckerVector pi = plucker(graph_subspace(rng.symmetric(n, 9, 9)));
    if (!all_zero(plucker_residuals(pi, PluckerMode::full))) return false;
    if (!all_zero(lagrangian_linear_residuals(pi))) return false;
    for (const auto& [p, q] : two_term_pairs(n))
      if (pi.at(p) != pi.at(q)) return false;
  }
  return true;
}

/* 5. The sixteen-identity chain holds on Lagrangian 3-planes and fails for
 * nearly all random coordinate tuples. */
bool criterion_5() {
  Rng rng(505);
  for (int s = 0; s < 100; ++s) {
    const Gr36Coords g =
        gr36_coords(ext_from_subspace(from_affine(rng.symmetric(3, 9, 9))));
    if (!all_zero(g.consistency)) return false;
    if (!all_zero(identity_chain_residuals(g))) return false;
  }
  int caught = 0;
  for (int s = 0; s < 100; ++s) {
    auto r = [&]() -> Rat { return rng.rat(9, 9); };
    const ChainTuple<Rat> t{r(), r(), r(), r(), r(), r(), r(),
                            r(), r(), r(), r(), r(), r(), r()};
    for (const auto& [id, value] : chain_residuals_of<Rat>(t))
      if (value != 0) {
        ++caught;
        break;
      }
  }
  return caught >= 95;
}

/* 6. Every marked reduction of a Lagrangian element is a decomposable
 * isotropic 3-plane in C^6; for a decomposable non-Lagrangian element at
 * least one reduction fails. */
bool criterion_6() {
  Rng rng(606);
  for (int n : {4, 5})
    for (int s = 0; s < 25; ++s) {
      /* Skip degenerate draws where some reduction has zero image and
       * certifies nothing. */
      for (int tries = 0;; ++tries) {
        if (tries > 20) return false;
        const ExtVector phi =
            ext_from_subspace(from_affine(rng.symmetric(n, 9, 9)));
        bool all_conclusive = true;
        bool ok = true;
        for (const auto& m : marked_indices(n)) {
          const Reduce36Result red = reduce36(phi, m);
          if (!red.conclusive) {
            all_conclusive = false;
            break;
          }
          if (!all_zero(ext_plucker_residuals(red.phi))) ok = false;
          if (!all_zero(isotropy_residuals(red.phi))) ok = false;
        }
        if (!all_conclusive) continue;
        if (!ok) return false;
        break;
      }
    }

  for (int n : {4, 5})
    for (int s = 0; s < 25; ++s) {
      const ExtVector phi =
          ext_from_subspace(graph_subspace(random_nonsymmetric(rng, n)));
      bool some_failure = false;
      for (const auto& m : marked_indices(n)) {
        const Reduce36Result red = reduce36(phi, m);
        if (!red.conclusive) continue;
        if (!all_zero(ext_plucker_residuals(red.phi)) ||
            !all_zero(isotropy_residuals(red.phi)))
          some_failure = true;
      }
      if (!some_failure) return false;
    }
  return true;
}

/* 7. Lowering currents bosonize to power-sum multiplication and raising
 * currents to flow differentiation, for all |lambda| <= 8 and r <= 8. */
bool criterion_7() {
  for (int w = 0; w <= 8; ++w)
    for (const auto& lam : partitions_of_weight(w))
      for (int r = 1; r <= 8; ++r) {
        const FockVector state = FockVector::basis({lam, 0});
        const int m = std::max(1, w + r);
        if (bosonize(current(-r, state), m) !=
            power_sum(r, m) * schur(lam, m))
          return false;
        const int md = std::max({1, w, r});
        if (bosonize(current(r, state), md) !=
            schur(lam, md).derivative(r))
          return false;
      }
  return true;
}

/* 8. Symmetric sources give a parity-even tau annihilated by the charge-two
 * ladder and by the projected even currents up to flow 8; non-symmetric
 * sources break parity. */
bool criterion_8() {
  Rng rng(808);
  for (int s = 0; s < 100; ++s) {
    const int n = s % 3 + 1;
    const TauPoly tau = tau_from_symmetric(rng.symmetric(n, 9, 9));
    if (!ckp_residual(tau).is_zero()) return false;
    FockVector v;
    for (const auto& [lam, c] : tau.source.coords()) v.add_term({lam, 0}, c);
    for (const auto& r : ckp_null_residuals(v, 8))
      if (!r.is_zero()) return false;
  }
  for (int s = 0; s < 100; ++s) {
    const int n = s % 2 + 2;
    const TauPoly tau =
        tau_from_plucker(plucker(graph_subspace(random_nonsymmetric(rng, n))));
    if (ckp_residual(tau).is_zero()) return false;
  }
  return true;
}

/* 9. The k x k determinantal addition formula holds at admissible sample
 * points for k = 1, 2, 3, symmetric source or not. */
bool criterion_9() {
  Rng rng(909);
  for (int s = 0; s < 25; ++s) {
    const int n = s % 3 + 1;
    const RatMatrix a =
        s % 2 == 0 ? rng.symmetric(n, 9, 9) : rng.matrix(n, n, 9, 9);
    const TauPoly tau = tau_from_plucker(plucker(graph_subspace(a)));
    const int m = tau.poly.vars();
    for (int pt = 0; pt < 25; ++pt) {
      std::vector<Rat> t(m);
      for (int tries = 0;; ++tries) {
        if (tries > 100) return false;
        for (int i = 0; i < m; ++i) t[i] = rng.rat(3, 3);
        if (tau.poly.eval(t) != 0) break;
      }
      for (int k = 1; k <= 3; ++k) {
        std::vector<Rat> x, y;
        for (int tries = 0;; ++tries) {
          if (tries > 100) return false;
          x.clear();
          y.clear();
          for (int i = 0; i < k; ++i) x.push_back(rng.rat_nonzero(5, 5));
          for (int i = 0; i < k; ++i) y.push_back(rng.rat_nonzero(5, 5));
          bool ok = true;
          for (int i = 0; i < k && ok; ++i)
            for (int j = 0; j < k && ok; ++j) {
              if (x[i] == y[j]) ok = false;
              if (i < j && (x[i] == x[j] || y[i] == y[j])) ok = false;
            }
          if (ok) break;
        }
        if (fay_residual(tau, t, x, y) != 0) return false;
      }
    }
  }
  return true;
}

/* 10. The sigma-cube residual vanishes over the whole shift lattice
 * |n_a| <= 2 for every triple from four base points, at 10 sample t' per
 * source; bumping any single cube entry by one breaks it. */
bool criterion_10() {
  const std::vector<Rat> xs = {rat_frac(1, 2), rat_frac(1, 3),
                               rat_frac(1, 5), rat_frac(1, 7)};
  std::vector<std::vector<int>> shifts;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      for (int c = -2; c <= 2; ++c)
        for (int d = -2; d <= 2; ++d) shifts.push_back({a, b, c, d});

  Rng rng(1010);
  for (int s = 0; s < 25; ++s) {
    const int n = s < 13 ? 3 : 4;
    const TauPoly tau = tau_from_symmetric(rng.symmetric(n, 9, 9));
    const int m = tau.poly.vars();
    bool perturbed = false;
    for (int pt = 0; pt < 10; ++pt) {
      /* Resample t' when some lattice translate of tau vanishes and the
       * sigma cube is undefined there. */
      for (int tries = 0;; ++tries) {
        if (tries > 50) return false;
        std::vector<Rat> tprime(m, Rat(0));
        for (int i = 0; i < m; i += 2) tprime[i] = rng.rat(3, 5);
        try {
          TauLatticeEvaluator ev(tau, tprime, xs);
          for (const auto& pick : subsets_of(4, 3)) {
            const std::array<int, 3> triple{pick[0], pick[1], pick[2]};
            for (const auto& nvec : shifts)
              if (family_residual(ev, ShiftSpec{xs, nvec}, triple) != 0)
                return false;
          }
          if (!perturbed) {
            const std::array<int, 3> triple{1, 2, 3};
            const auto cube =
                family_sigma_cube(ev, ShiftSpec{xs, {0, 0, 0, 0}}, triple);
            for (int mask = 0; mask < 8; ++mask) {
              auto bumped = cube;
              bumped[mask] += 1;
              if (cayley222_of<Rat>(bumped) == 0) return false;
            }
            perturbed = true;
          }
          break;
        } catch (const std::domain_error&) {
          if (tries > 50) return false;
        }
      }
    }
  }
  return true;
}

/* 11. The bilinear residue vanishes at every sample exactly when the
 * source satisfies all quadratic relations: genuine subspaces pass, singly
 * corrupted coordinate vectors are detected. */
bool criterion_11() {
  Rng rng(1111);
  for (int s = 0; s < 50; ++s) {
    const int n = s % 2 + 2;
    PluckerVector pi;
    if (s < 25) {
      pi = plucker(graph_subspace(rng.matrix(n, n, 9, 9)));
    } else {
      /* Resample in the unlikely event the bump lands back on the
       * quadratic locus. */
      for (int tries = 0;; ++tries) {
        if (tries > 20) return false;
        pi = plucker(graph_subspace(rng.matrix(n, n, 9, 9)));
        const auto box = partitions_in_box(n);
        const auto& lam = box[static_cast<size_t>(
            rng.int_in(0, static_cast<int64_t>(box.size()) - 1))];
        pi.set(lam, pi.at(lam) + 1);
        if (!all_zero(plucker_residuals(pi, PluckerMode::full))) break;
      }
    }
    const bool plucker_ok =
        all_zero(plucker_residuals(pi, PluckerMode::full));
    const TauPoly tau = tau_from_plucker(pi);
    const int m = tau.poly.vars();
    const int trunc = std::max(2 * tau.poly.weighted_degree(), 2);
    bool hirota_ok = true;
    for (int pt = 0; pt < 10; ++pt) {
      std::vector<Rat> t(m), dt(std::min(m, 4));
      for (auto& v : t) v = rng.rat(3, 3);
      for (auto& v : dt) v = rng.rat(3, 3);
      if (hirota_residual(tau, t, dt, trunc) != 0) hirota_ok = false;
    }
    if (hirota_ok != plucker_ok) return false;
  }
  return true;
}

/* 12. s_lambda and s_lambda-transpose agree on the odd locus for every
 * |lambda| <= 10. */
bool criterion_12() {
  for (int w = 0; w <= 10; ++w)
    for (const auto& lam : partitions_of_weight(w)) {
      const int m = std::max(1, w);
      if (!restrict_odd(schur(lam, m) - schur(transpose(lam), m)).is_zero())
        return false;
    }
  return true;
}

struct Criterion {
  const char* what;
  bool (*fn)();
};

const Criterion kCriteria[] = {
    {"hyperdeterminant of principal-minor cubes vanishes (10000 samples)",
     criterion_1},
    {"core residual vanishes for every (J, triple) at N = 4, 5", criterion_2},
    {"decomposition dimensions and ladder identities (N <= 4)", criterion_3},
    {"quadratic, linear and two-term relations on graph subspaces",
     criterion_4},
    {"identity chain holds on 3-planes, fails on random tuples", criterion_5},
    {"marked reductions stay decomposable isotropic; violations caught",
     criterion_6},
    {"currents bosonize to p_r multiplication and d/dt_r (weights <= 8)",
     criterion_7},
    {"parity and null conditions for symmetric sources (flows <= 8)",
     criterion_8},
    {"determinantal addition formula at sampled points (k <= 3)",
     criterion_9},
    {"sigma-cube family vanishes over the shift lattice; bumps caught",
     criterion_10},
    {"bilinear residue vanishes exactly on quadratic-locus sources",
     criterion_11},
    {"Schur transpose symmetry on the odd locus (weights <= 10)",
     criterion_12},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) {
    const int k = std::atoi(argv[i]);
    if (k < 1 || k > 12) {
      std::fprintf(stderr, "usage: %s [criterion numbers 1..12]\n", argv[0]);
      return 2;
    }
    which.push_back(k);
  }
  if (which.empty())
    for (int k = 1; k <= 12; ++k) which.push_back(k);

  int failed = 0;
  for (const int k : which) {
    bool ok = false;
    try {
      ok = kCriteria[k - 1].fn();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "criterion %d threw: %s\n", k, e.what());
    }
    std::printf("[%s] %2d. %s\n", ok ? "PASS" : "FAIL", k,
                kCriteria[k - 1].what);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  if (failed) std::printf("%d of %zu criteria failed\n", failed, which.size());
  return failed ? 1 : 0;
}
