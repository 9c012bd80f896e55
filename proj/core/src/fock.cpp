#include "lgr/fock.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "lgr/symfunc.hpp"

namespace lgr {

std::vector<int> state_positions(const FockState& s, int count) {
  validate_partition(s.lambda);
  std::vector<int> l(count);
  for (int k = 1; k <= count; ++k)
    l[k - 1] =
        (k <= static_cast<int>(s.lambda.size()) ? s.lambda[k - 1] : 0) - k +
        s.n;
  return l;
}

FockVector FockVector::basis(const FockState& s) {
  FockVector v;
  v.add_term(s, 1);
  return v;
}

FockVector FockVector::vacuum(int n) { return basis({{}, n}); }

void FockVector::add_term(const FockState& s, const Rat& c) {
  if (c == 0) return;
  Rat& slot = terms_[s];
  slot += c;
  if (slot == 0) terms_.erase(s);
}

Rat FockVector::coeff(const FockState& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rat(0) : it->second;
}

FockVector FockVector::operator+(const FockVector& o) const {
  FockVector r = *this;
  for (const auto& [s, c] : o.terms_) r.add_term(s, c);
  return r;
}

FockVector FockVector::operator-(const FockVector& o) const {
  FockVector r = *this;
  for (const auto& [s, c] : o.terms_) r.add_term(s, -c);
  return r;
}

FockVector FockVector::operator*(const Rat& c) const {
  FockVector r;
  for (const auto& [s, v] : terms_) r.add_term(s, v * c);
  return r;
}

namespace {

/* Window size large enough that every position at or below the last window
 * slot belongs to the consecutive sea and sits at least two below i. */
int window(const FockState& s, int i) {
  return static_cast<int>(s.lambda.size()) + std::abs(s.n) + std::abs(i) + 2;
}

/* Rebuild (lambda, n) from an explicit descending position list whose tail
 * continues the consecutive sea for the given charge. */
FockState state_from_positions(const std::vector<int>& l, int n) {
  FockState s;
  s.n = n;
  s.lambda.assign(l.size(), 0);
  for (size_t k = 1; k <= l.size(); ++k)
    s.lambda[k - 1] = l[k - 1] + static_cast<int>(k) - n;
  while (!s.lambda.empty() && s.lambda.back() == 0) s.lambda.pop_back();
  validate_partition(s.lambda);
  return s;
}

/* psi_i on one basis state: (sign, new state); zero signalled by sign 0. */
int apply_psi(const FockState& s, int i, FockState& out) {
  const int R = window(s, i);
  std::vector<int> l = state_positions(s, R);
  auto it = std::lower_bound(l.begin(), l.end(), i, std::greater<int>());
  if (it != l.end() && *it == i) return 0;  // slot occupied
  const int above = static_cast<int>(it - l.begin());
  l.insert(it, i);
  out = state_from_positions(l, s.n + 1);
  return above % 2 == 0 ? 1 : -1;
}

int apply_psi_dag(const FockState& s, int i, FockState& out) {
  const int R = window(s, i);
  std::vector<int> l = state_positions(s, R);
  auto it = std::lower_bound(l.begin(), l.end(), i, std::greater<int>());
  if (it == l.end() || *it != i) return 0;  // slot empty
  const int above = static_cast<int>(it - l.begin());
  l.erase(it);
  out = state_from_positions(l, s.n - 1);
  return above % 2 == 0 ? 1 : -1;
}

template <class Op>
FockVector map_terms(const FockVector& v, Op op) {
  FockVector out;
  for (const auto& [s, c] : v.terms()) op(s, c, out);
  return out;
}

/* psi_a psi_dag_b applied to one basis state, accumulated into out. */
void bilinear(const FockState& s, const Rat& c, int a, int b,
              FockVector& out) {
  FockState mid;
  int s1 = apply_psi_dag(s, b, mid);
  if (s1 == 0) return;
  FockState fin;
  int s2 = apply_psi(mid, a, fin);
  if (s2 == 0) return;
  out.add_term(fin, c * s1 * s2);
}

}  // namespace

FockVector psi(int i, const FockVector& v) {
  return map_terms(v, [i](const FockState& s, const Rat& c, FockVector& out) {
    FockState t;
    int sg = apply_psi(s, i, t);
    if (sg != 0) out.add_term(t, c * sg);
  });
}

FockVector psi_dag(int i, const FockVector& v) {
  return map_terms(v, [i](const FockState& s, const Rat& c, FockVector& out) {
    FockState t;
    int sg = apply_psi_dag(s, i, t);
    if (sg != 0) out.add_term(t, c * sg);
  });
}

FockVector current(int r, const FockVector& v) {
  if (r == 0) throw std::invalid_argument("current: r must be nonzero");
  return map_terms(v, [r](const FockState& s, const Rat& c, FockVector& out) {
    /* Sea particles land on occupied sea slots, so only the first
     * len + |n| + |r| window positions can contribute. */
    const int R = window(s, r);
    for (int p : state_positions(s, R)) bilinear(s, c, p - r, p, out);
  });
}

FockVector omega_hat(const FockVector& v) {
  return map_terms(v, [](const FockState& s, const Rat& c, FockVector& out) {
    /* Both slots i and -i-1 must be free; once -i-1 dips below the sea
     * level the term dies, so i ranges over a finite window. */
    const int top = static_cast<int>(s.lambda.size()) + std::abs(s.n) + 4;
    for (int i = 0; i <= top; ++i) {
      FockState mid;
      int s1 = apply_psi(s, i, mid);
      if (s1 == 0) continue;
      FockState fin;
      int s2 = apply_psi(mid, -i - 1, fin);
      if (s2 == 0) continue;
      Rat coefficient = c * s1 * s2;
      if (i % 2 == 0) coefficient = -coefficient;  // -(-1)^i
      out.add_term(fin, coefficient);
    }
  });
}

FockVector omega_hat_dag(const FockVector& v) {
  return map_terms(v, [](const FockState& s, const Rat& c, FockVector& out) {
    /* Slot i must be occupied: i cannot exceed the top particle. */
    const int head = s.lambda.empty() ? 0 : s.lambda[0];
    const int top = head + std::abs(s.n) + 4;
    for (int i = 0; i <= top; ++i) {
      FockState mid;
      int s1 = apply_psi_dag(s, i, mid);
      if (s1 == 0) continue;
      FockState fin;
      int s2 = apply_psi_dag(mid, -i - 1, fin);
      if (s2 == 0) continue;
      Rat coefficient = c * s1 * s2;
      if (i % 2 == 1) coefficient = -coefficient;  // (-1)^i
      out.add_term(fin, coefficient);
    }
  });
}

FockVector chevalley(Chevalley kind, int j, const FockVector& v) {
  if (j < 0) throw std::invalid_argument("chevalley: node must be >= 0");
  return map_terms(
      v, [kind, j](const FockState& s, const Rat& c, FockVector& out) {
        switch (kind) {
          case Chevalley::E:
            if (j == 0) {
              bilinear(s, c, -1, 0, out);
            } else {
              bilinear(s, c, j - 1, j, out);
              bilinear(s, c, -j - 1, -j, out);
            }
            break;
          case Chevalley::F:
            if (j == 0) {
              bilinear(s, c, 0, -1, out);
            } else {
              bilinear(s, c, j, j - 1, out);
              bilinear(s, c, -j, -j - 1, out);
            }
            break;
          case Chevalley::H:
            if (j == 0) {
              bilinear(s, c, -1, -1, out);
              bilinear(s, -c, 0, 0, out);
            } else {
              bilinear(s, c, j - 1, j - 1, out);
              bilinear(s, -c, j, j, out);
              bilinear(s, c, -j - 1, -j - 1, out);
              bilinear(s, -c, -j, -j, out);
            }
            break;
        }
      });
}

FockVector hw_vector(int j) {
  if (j < 0) throw std::invalid_argument("hw_vector: j must be >= 0");
  FockVector v = FockVector::vacuum(-2 * j);
  for (int k = 0; k < j; ++k) v = omega_hat(v);
  return v;
}

namespace {

void require_charge0(const FockVector& v, const char* who) {
  for (const auto& term : v.terms())
    if (term.first.n != 0)
      throw std::invalid_argument(std::string(who) + ": charge-0 vector required");
}

}  // namespace

FockVector pi_S(const FockVector& v) {
  require_charge0(v, "pi_S");
  FockVector out;
  for (const auto& [s, c] : v.terms()) {
    out.add_term(s, c / 2);
    out.add_term({transpose(s.lambda), 0}, c / 2);
  }
  return out;
}

std::vector<FockVector> ckp_null_residuals(const FockVector& v,
                                           int weight_bound) {
  require_charge0(v, "ckp_null_residuals");
  std::vector<FockVector> out;
  out.push_back(omega_hat(v));
  out.push_back(omega_hat_dag(v));
  FockVector sym = pi_S(v);
  for (int r = 2; r <= weight_bound; r += 2)
    out.push_back(pi_S(current(r, sym)));
  return out;
}

SymPoly bosonize(const FockVector& v, int M) {
  require_charge0(v, "bosonize");
  SymPoly p = SymPoly(M);
  for (const auto& [s, c] : v.terms()) p = p + schur(s.lambda, M) * c;
  return p;
}

}  // namespace lgr
