#include "lgr/tau.hpp"

#include <algorithm>
#include <stdexcept>

#include "lgr/hyperdet.hpp"
#include "lgr/symfunc.hpp"

namespace lgr {

namespace {

/* [u^j] p(t + sign*[u]) for j = 0..jmax: expand each monomial's
 * (t_k + sign*u^k/k)^e binomially, tracking the accumulated u power. */
std::vector<SymPoly> miwa_u_coeffs(const SymPoly& p, int jmax, int sign) {
  const int M = p.vars();
  std::vector<SymPoly> out(static_cast<size_t>(jmax) + 1, SymPoly(M));
  struct Item {
    int upow;
    Rat coef;
    std::vector<int> exps;
  };
  for (const auto& [e, c] : p.terms()) {
    std::vector<Item> cur{{0, c, e}};
    for (int k = 1; k <= M; ++k) {
      const int E = e[k - 1];
      if (E == 0) continue;
      std::vector<Item> next;
      for (const Item& it : cur) {
        Rat binom = 1;
        Rat shift_pow = 1;
        for (int q = 0; q <= E; ++q) {
          if (it.upow + k * q <= jmax) {
            Item ni = it;
            ni.upow += k * q;
            ni.coef *= binom * shift_pow;
            ni.exps[k - 1] = E - q;
            next.push_back(std::move(ni));
          }
          binom *= rat_frac(E - q, q + 1);
          shift_pow *= rat_frac(sign, k);
        }
      }
      cur = std::move(next);
    }
    for (const Item& it : cur) out[it.upow].add_term(it.exps, it.coef);
  }
  return out;
}

std::vector<Rat> padded(const std::vector<Rat>& v, int M) {
  std::vector<Rat> p(M, Rat(0));
  for (size_t k = 0; k < v.size() && k < static_cast<size_t>(M); ++k)
    p[k] = v[k];
  return p;
}

/* point_k += sign * x^k / k for k = 1..M. */
void add_miwa(std::vector<Rat>& point, const Rat& x, int sign) {
  Rat xp = 1;
  for (size_t k = 1; k <= point.size(); ++k) {
    xp *= x;
    point[k - 1] += Rat(sign) * xp / Rat(static_cast<int>(k));
  }
}

void require_even_zero(const std::vector<Rat>& t, const char* who) {
  for (size_t k = 1; k <= t.size(); ++k)
    if (k % 2 == 0 && t[k - 1] != 0)
      throw std::invalid_argument(std::string(who) +
                                  ": even entries of t' must vanish");
}

}  // namespace

TauPoly tau_from_plucker(const PluckerVector& pi, int M) {
  const int N = pi.box();
  if (M < 0) M = N * N;
  SymPoly p(M);
  for (const auto& [lam, c] : pi.coords()) {
    if (weight(lam) > M)
      throw std::invalid_argument("tau_from_plucker: M too small for the box");
    p = p + schur(lam, M) * c;
  }
  return TauPoly{p, pi, N};
}

TauPoly tau_from_symmetric(const RatMatrix& A, int M) {
  return tau_from_plucker(plucker(from_affine(A)), M);
}

SymPoly ckp_residual(const TauPoly& tau) {
  SymPoly r(tau.poly.vars());
  for (const auto& [e, c] : tau.poly.terms()) {
    int even = 0;
    for (size_t k = 2; k <= e.size(); k += 2) even += e[k - 1];
    if (even % 2 == 1) r.add_term(e, c * 2);
  }
  return r;
}

std::vector<SymPoly> ckp_even_constraints(const TauPoly& tau) {
  std::vector<SymPoly> out;
  for (int k = 2; k <= tau.poly.vars(); k += 2)
    out.push_back(restrict_odd(tau.poly.derivative(k)));
  return out;
}

std::vector<SymPoly> baker_series(const TauPoly& tau, int z_order,
                                  int weight_bound) {
  if (z_order < 1)
    throw std::invalid_argument("baker_series: z_order must be >= 1");
  const int M = tau.poly.vars();
  const Rat c0 = tau.poly.constant_term();
  if (c0 == 0)
    throw std::domain_error("baker_series: tau has zero constant term");
  /* 1/tau = (1/c0) sum_i g^i with g = 1 - tau/c0 of positive weight. */
  SymPoly g = SymPoly::constant(M, 1) - tau.poly * (Rat(1) / c0);
  SymPoly inv = SymPoly::constant(M, Rat(1) / c0);
  SymPoly term = inv;
  while (true) {
    term = term.mul_trunc(g, weight_bound);
    if (term.is_zero()) break;
    inv = inv + term;
  }
  std::vector<SymPoly> shifted = miwa_u_coeffs(tau.poly, z_order, -1);
  std::vector<SymPoly> out;
  for (int i = 1; i <= z_order; ++i)
    out.push_back(shifted[i].mul_trunc(inv, weight_bound));
  return out;
}

Rat hirota_residual(const TauPoly& tau, const std::vector<Rat>& t,
                    const std::vector<Rat>& dt, int truncation) {
  const int M = tau.poly.vars();
  const int wd = std::max(tau.poly.weighted_degree(), 0);
  if (truncation < 2 * wd)
    throw std::invalid_argument(
        "hirota_residual: truncation below twice the weighted degree");
  std::vector<Rat> tM = padded(t, M);
  std::vector<Rat> tdM = tM;
  for (size_t k = 0; k < dt.size() && k < static_cast<size_t>(M); ++k)
    tdM[k] += dt[k];

  std::vector<SymPoly> down = miwa_u_coeffs(tau.poly, wd, -1);
  std::vector<SymPoly> up = miwa_u_coeffs(tau.poly, wd, +1);
  std::vector<Rat> a(wd + 1), b(wd + 1);
  for (int j = 0; j <= wd; ++j) {
    a[j] = down[j].eval(tM);
    b[j] = up[j].eval(tdM);
  }
  std::vector<Rat> c(2 * wd + 1, Rat(0));
  for (int p = 0; p <= wd; ++p)
    for (int q = 0; q <= wd; ++q) c[p + q] += a[p] * b[q];

  /* e^{xi(z,-dt)} = sum_m h_m(-dt) z^m; h_m in |dt| variables is exact
   * because the absent higher times carry zero coefficients. */
  const int L = static_cast<int>(dt.size());
  std::vector<Rat> mdt(L);
  for (int k = 0; k < L; ++k) mdt[k] = -dt[k];
  Rat res = 0;
  for (int m = 0; m + 1 <= 2 * wd; ++m) {
    Rat hm = L == 0 ? Rat(m == 0 ? 1 : 0)
                    : complete_homogeneous(m, L).eval(mdt);
    res += hm * c[m + 1];
  }
  return res;
}

RatMatrix a_matrix(const TauPoly& tau, const std::vector<Rat>& tprime,
                   const std::vector<Rat>& x) {
  const int M = tau.poly.vars();
  require_even_zero(tprime, "a_matrix");
  const int k = static_cast<int>(x.size());
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      if (x[i] + x[j] == 0)
        throw std::invalid_argument("a_matrix: x_i + x_j must not vanish");
  std::vector<Rat> base = padded(tprime, M);
  Rat tau0 = tau.poly.eval(base);
  if (tau0 == 0)
    throw std::domain_error("a_matrix: tau vanishes at t'");
  RatMatrix A(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<Rat> pt = base;
      add_miwa(pt, x[i], +1);
      add_miwa(pt, -x[j], -1);
      A.at(i, j) = tau.poly.eval(pt) / ((x[i] + x[j]) * tau0);
    }
  return A;
}

Rat fay_residual(const TauPoly& tau, const std::vector<Rat>& t,
                 const std::vector<Rat>& x, const std::vector<Rat>& y) {
  const int k = static_cast<int>(x.size());
  if (k < 1 || k > 3 || y.size() != x.size())
    throw std::invalid_argument("fay_residual: need |x| = |y| in 1..3");
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (x[i] - y[j] == 0)
        throw std::invalid_argument("fay_residual: x_i - y_j must not vanish");
  const int M = tau.poly.vars();
  std::vector<Rat> base = padded(t, M);
  Rat tau0 = tau.poly.eval(base);
  if (tau0 == 0) throw std::domain_error("fay_residual: tau vanishes at t");

  std::vector<Rat> all = base;
  for (int i = 0; i < k; ++i) {
    add_miwa(all, x[i], +1);
    add_miwa(all, y[i], -1);
  }
  Rat lhs = tau.poly.eval(all) / tau0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) lhs *= (x[i] - x[j]) * (y[j] - y[i]);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) lhs /= x[i] - y[j];

  RatMatrix m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      std::vector<Rat> pt = base;
      add_miwa(pt, x[i], +1);
      add_miwa(pt, y[j], -1);
      m.at(i, j) = tau.poly.eval(pt) / ((x[i] - y[j]) * tau0);
    }
  return lhs - det(m);
}

TauLatticeEvaluator::TauLatticeEvaluator(const TauPoly& tau,
                                         const std::vector<Rat>& tprime,
                                         const std::vector<Rat>& x)
    : odd_(restrict_odd(tau.poly)), tprime_(padded(tprime, tau.poly.vars())),
      x_(x) {
  if (!ckp_residual(tau).is_zero())
    throw std::invalid_argument("family: tau is not CKP");
  require_even_zero(tprime, "family");
  for (size_t a = 0; a < x_.size(); ++a)
    for (size_t b = a; b < x_.size(); ++b)
      if (x_[a] + x_[b] == 0)
        throw std::invalid_argument("family: x_a + x_b must not vanish");
}

const Rat& TauLatticeEvaluator::at(const std::vector<int>& m) {
  if (m.size() != x_.size())
    throw std::invalid_argument("family: translate length mismatch");
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;
  /* [x] - [-x] contributes 2 x^k / k at odd k and nothing at even k. */
  std::vector<Rat> pt = tprime_;
  for (size_t a = 0; a < m.size(); ++a) {
    if (m[a] == 0) continue;
    Rat xp = 1;
    for (size_t k = 1; k <= pt.size(); ++k) {
      xp *= x_[a];
      if (k % 2 == 1)
        pt[k - 1] += Rat(2 * m[a]) * xp / Rat(static_cast<int>(k));
    }
  }
  return cache_.emplace(m, odd_.eval(pt)).first->second;
}

std::array<Rat, 8> family_sigma_cube(TauLatticeEvaluator& ev,
                                     const ShiftSpec& spec,
                                     const std::array<int, 3>& triple) {
  const int nx = static_cast<int>(ev.x().size());
  for (int s = 0; s < 3; ++s) {
    if (triple[s] < 1 || triple[s] > nx)
      throw std::invalid_argument("family: triple index out of range");
    for (int r = s + 1; r < 3; ++r)
      if (triple[s] == triple[r])
        throw std::invalid_argument("family: triple indices must be distinct");
  }
  std::vector<int> n = spec.n;
  if (n.empty()) n.assign(nx, 0);
  if (static_cast<int>(n.size()) != nx)
    throw std::invalid_argument("family: |n| must match |x|");

  const Rat xa = ev.x()[triple[0] - 1];
  const Rat xb = ev.x()[triple[1] - 1];
  const Rat xc = ev.x()[triple[2] - 1];
  /* The explicit return type forces evaluation; mpq expression templates
   * must not escape the lambda holding references to its temporaries. */
  auto pair_factor = [](const Rat& u, const Rat& v) -> Rat {
    return (u - v) * (u - v) / (Rat(4) * u * v * (u + v) * (u + v));
  };
  std::array<Rat, 8> cube;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> m = n;
    for (int s = 0; s < 3; ++s)
      if (mask & (1 << s)) m[triple[s] - 1] += 1;
    Rat T = ev.at(m);
    if (T == 0)
      throw std::domain_error("family: tau vanishes at a lattice translate");
    switch (mask) {
      case 0: cube[mask] = T; break;
      case 1: cube[mask] = T / (2 * xa); break;
      case 2: cube[mask] = T / (2 * xb); break;
      case 4: cube[mask] = T / (2 * xc); break;
      case 3: cube[mask] = T * pair_factor(xa, xb); break;
      case 5: cube[mask] = T * pair_factor(xa, xc); break;
      case 6: cube[mask] = T * pair_factor(xb, xc); break;
      case 7:
        cube[mask] = T * (xa - xb) * (xa - xb) * (xa - xc) * (xa - xc) *
                     (xb - xc) * (xb - xc) /
                     (Rat(8) * xa * xb * xc * (xa + xb) * (xa + xb) *
                      (xa + xc) * (xa + xc) * (xb + xc) * (xb + xc));
        break;
    }
  }
  return cube;
}

Rat family_residual(TauLatticeEvaluator& ev, const ShiftSpec& spec,
                    const std::array<int, 3>& triple) {
  return cayley222_of<Rat>(family_sigma_cube(ev, spec, triple));
}

Rat family_residual(const TauPoly& tau, const std::vector<Rat>& tprime,
                    const ShiftSpec& spec, const std::array<int, 3>& triple) {
  TauLatticeEvaluator ev(tau, tprime, spec.x);
  return family_residual(ev, spec, triple);
}

}  // namespace lgr
