#include "lgr/symfunc.hpp"

#include <mutex>
#include <stdexcept>

namespace lgr {

namespace {

/* h-table per variable count, built once and then shared read-only. */
std::map<int, std::vector<SymPoly>>& h_tables() {
  static std::map<int, std::vector<SymPoly>> tables;
  return tables;
}
std::mutex h_mutex;

const std::vector<SymPoly>& h_table(int M, int upto) {
  std::lock_guard<std::mutex> lock(h_mutex);
  auto& tab = h_tables()[M];
  if (tab.empty()) tab.push_back(SymPoly::constant(M, 1));
  while (static_cast<int>(tab.size()) <= upto) {
    const int k = static_cast<int>(tab.size());
    SymPoly h(M);
    for (int r = 1; r <= k && r <= M; ++r)
      h = h + SymPoly::var(M, r) * tab[k - r] * rat_frac(r, k);
    tab.push_back(std::move(h));
  }
  return tab;
}

/* e_k = h_k at t_r -> (-1)^(r-1) t_r: flip the coefficient sign when the
 * total exponent of even-indexed variables is odd. */
SymPoly elementary_from_h(const SymPoly& h) {
  SymPoly e(h.vars());
  for (const auto& [exp, c] : h.terms()) {
    int even = 0;
    for (size_t i = 0; i < exp.size(); ++i)
      if ((i + 1) % 2 == 0) even += exp[i];
    e.add_term(exp, even % 2 == 0 ? c : -c);
  }
  return e;
}

/* det of a small matrix of polynomials by Laplace expansion along the first
 * remaining column, memoized on the surviving row set. */
SymPoly poly_det(const std::vector<std::vector<SymPoly>>& a, int M) {
  const int n = static_cast<int>(a.size());
  std::map<std::vector<int>, SymPoly> memo;
  struct Rec {
    const std::vector<std::vector<SymPoly>>& a;
    int n, M;
    std::map<std::vector<int>, SymPoly>& memo;
    SymPoly go(const std::vector<int>& rows) {
      const int col = n - static_cast<int>(rows.size());
      if (rows.empty()) return SymPoly::constant(M, 1);
      auto it = memo.find(rows);
      if (it != memo.end()) return it->second;
      SymPoly d(M);
      for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<int> rest;
        for (size_t k = 0; k < rows.size(); ++k)
          if (k != i) rest.push_back(rows[k]);
        SymPoly sub = go(rest);
        SymPoly term = a[rows[i]][col] * sub;
        d = (i % 2 == 0) ? d + term : d - term;
      }
      memo.emplace(rows, d);
      return d;
    }
  } rec{a, n, M, memo};
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  return rec.go(all);
}

}  // namespace

SymPoly complete_homogeneous(int k, int M) {
  if (k < 0) return SymPoly(M);
  return h_table(M, k)[k];
}

SymPoly power_sum(int r, int M) { return SymPoly::var(M, r) * Rat(r); }

SymPoly schur(const Partition& lambda, int M) {
  validate_partition(lambda);
  if (M < weight(lambda))
    throw std::invalid_argument("schur: variable count below the partition weight");
  if (lambda.empty()) return SymPoly::constant(M, 1);

  const Partition lt = transpose(lambda);
  const bool use_dual = lt.size() < lambda.size();
  const Partition& mu = use_dual ? lt : lambda;
  const int n = static_cast<int>(mu.size());

  const int maxidx = mu[0] + n - 1;
  const auto& h = h_table(M, maxidx);

  std::vector<std::vector<SymPoly>> a(n, std::vector<SymPoly>(n, SymPoly(M)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int k = mu[i] - (i + 1) + (j + 1);
      if (k < 0) continue;
      a[i][j] = use_dual ? elementary_from_h(h[k]) : h[k];
    }
  return poly_det(a, M);
}

void SchurCombo::add(const Partition& p, const Rat& c) {
  if (c == 0) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat SchurCombo::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rat(0) : it->second;
}

SchurCombo mn_apply(int r, const SchurCombo& c) {
  if (r < 1) throw std::invalid_argument("mn_apply: r must be positive");
  SchurCombo out;
  for (const auto& [p, coef] : c.terms())
    for (const auto& [q, h] : border_strip_add(p, r))
      out.add(q, h % 2 == 0 ? -coef : coef);  // sign (-1)^(h+1)
  return out;
}

SchurCombo mn_dual(int r, const SchurCombo& c) {
  if (r < 1) throw std::invalid_argument("mn_dual: r must be positive");
  SchurCombo out;
  for (const auto& [p, coef] : c.terms())
    for (const auto& [q, h] : border_strip_remove(p, r))
      out.add(q, h % 2 == 0 ? -coef : coef);
  return out;
}

SymPoly schur_combo_poly(const SchurCombo& c, int M) {
  SymPoly p(M);
  for (const auto& [lam, coef] : c.terms()) p = p + schur(lam, M) * coef;
  return p;
}

SymPoly restrict_odd(const SymPoly& p) {
  SymPoly r(p.vars());
  for (const auto& [e, c] : p.terms()) {
    bool keep = true;
    for (size_t i = 1; i < e.size(); i += 2)  // t_2, t_4, ...
      if (e[i] != 0) {
        keep = false;
        break;
      }
    if (keep) r.add_term(e, c);
  }
  return r;
}

SymPoly miwa_shift(const SymPoly& p, const Rat& x, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("miwa_shift: sign must be +-1");
  const int M = p.vars();
  /* Per-variable binomial expansion of t_j -> t_j + c_j, c_j = sign x^j/j. */
  std::vector<Rat> shift(M);
  Rat xp = 1;
  for (int j = 1; j <= M; ++j) {
    xp *= x;
    shift[j - 1] = Rat(sign) * xp / Rat(j);
  }
  SymPoly out(M);
  for (const auto& [e, c] : p.terms()) {
    std::vector<std::pair<std::vector<int>, Rat>> acc = {{e, c}};
    for (int j = 0; j < M; ++j) {
      if (e[j] == 0 || shift[j] == 0) continue;
      std::vector<std::pair<std::vector<int>, Rat>> next;
      for (const auto& [ee, cc] : acc) {
        Rat binom = 1;
        Rat power = 1;
        for (int q = 0; q <= e[j]; ++q) {
          std::vector<int> ne = ee;
          ne[j] = e[j] - q;
          next.emplace_back(std::move(ne), cc * binom * power);
          binom *= rat_frac(e[j] - q, q + 1);
          power *= shift[j];
        }
      }
      acc = std::move(next);
    }
    for (const auto& [ee, cc] : acc) out.add_term(ee, cc);
  }
  return out;
}

SymPoly miwa_pm_shift(const SymPoly& p, const Rat& x) {
  return miwa_shift(miwa_shift(p, x, 1), -x, -1);
}

}  // namespace lgr
