#include "lgr/extalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgr {

namespace {

void check_index(int N, int i) {
  if (i < -N || i > N - 1)
    throw std::invalid_argument("ExtVector: index outside [-N, N-1]");
}

void check_same_space(const ExtVector& a, const ExtVector& b) {
  if (a.half_dim() != b.half_dim())
    throw std::invalid_argument("ExtVector: operands live in different spaces");
}

/* Sign of merging two increasing blocks into one increasing list: count the
 * transpositions, i.e. pairs (a in left, b in right) with a > b. Returns 0
 * on a shared index. */
int merge_sign(const std::vector<int>& left, const std::vector<int>& right,
               std::vector<int>& out) {
  out.clear();
  out.reserve(left.size() + right.size());
  size_t i = 0, j = 0;
  long inv = 0;
  while (i < left.size() && j < right.size()) {
    if (left[i] == right[j]) return 0;
    if (left[i] < right[j]) {
      out.push_back(left[i++]);
    } else {
      inv += static_cast<long>(left.size() - i);
      out.push_back(right[j++]);
    }
  }
  for (; i < left.size(); ++i) out.push_back(left[i]);
  for (; j < right.size(); ++j) out.push_back(right[j]);
  return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

ExtVector ExtVector::basis(int N, const std::vector<int>& idx) {
  ExtVector v(N);
  std::vector<int> key;
  int sign = 1;
  for (int x : idx) {
    check_index(N, x);
    std::vector<int> merged;
    int s = merge_sign(key, {x}, merged);
    if (s == 0) return v;  // repeated factor
    sign *= s;
    key = std::move(merged);
  }
  v.terms_[key] = sign;
  return v;
}

void ExtVector::add_term(std::vector<int> key, const Rat& c) {
  if (c == 0) return;
  for (size_t i = 0; i < key.size(); ++i) {
    check_index(n_, key[i]);
    if (i > 0 && key[i] <= key[i - 1])
      throw std::invalid_argument("ExtVector::add_term: key not strictly increasing");
  }
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rat ExtVector::coeff(const std::vector<int>& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? Rat(0) : it->second;
}

int ExtVector::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    if (d < 0)
      d = static_cast<int>(k.size());
    else if (d != static_cast<int>(k.size()))
      return -1;
  }
  return d;
}

ExtVector ExtVector::operator+(const ExtVector& o) const {
  check_same_space(*this, o);
  ExtVector r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

ExtVector ExtVector::operator-(const ExtVector& o) const {
  check_same_space(*this, o);
  ExtVector r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

ExtVector ExtVector::operator-() const {
  ExtVector r(n_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

ExtVector ExtVector::operator*(const Rat& c) const {
  ExtVector r(n_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

ExtVector wedge(const ExtVector& u, const ExtVector& v) {
  check_same_space(u, v);
  ExtVector r(u.half_dim());
  std::vector<int> merged;
  for (const auto& [ka, ca] : u.terms())
    for (const auto& [kb, cb] : v.terms()) {
      int s = merge_sign(ka, kb, merged);
      if (s == 0) continue;
      r.add_term(merged, ca * cb * s);
    }
  return r;
}

ExtVector contract(const ExtVector& phi, const ExtVector& dual) {
  check_same_space(phi, dual);
  ExtVector r(phi.half_dim());
  for (const auto& [dk, dc] : dual.terms()) {
    for (const auto& [pk, pc] : phi.terms()) {
      if (dk.size() > pk.size()) continue;
      /* Contract the dual factors in increasing order; each removal of the
       * entry at position m costs (-1)^m. */
      std::vector<int> key = pk;
      int sign = 1;
      bool ok = true;
      for (int d : dk) {
        auto it = std::lower_bound(key.begin(), key.end(), d);
        if (it == key.end() || *it != d) {
          ok = false;
          break;
        }
        if ((it - key.begin()) % 2 != 0) sign = -sign;
        key.erase(it);
      }
      if (!ok) continue;
      r.add_term(std::move(key), pc * dc * sign);
    }
  }
  return r;
}

ExtVector omega_form(int N) {
  ExtVector w(N);
  for (int i = 1; i <= N; ++i)
    w.add_term({-i, i - 1}, (i % 2 == 0) ? 1 : -1);
  return w;
}

ExtVector x_form(int N, int i) {
  check_index(N, i);
  /* X_i = (-1)^i e_i ^ e_{-i-1}; for i < 0 the factors already sit in
   * increasing order as {i, -i-1}. X_i = X_{-i-1} by inspection. */
  const int sign = (((i % 2) + 2) % 2 == 0) ? 1 : -1;
  ExtVector v(N);
  if (i < -i - 1)
    v.add_term({i, -i - 1}, sign);  // factors already increasing
  else
    v.add_term({-i - 1, i}, -sign);  // one transposition
  return v;
}

ExtVector omega_wedge(const ExtVector& phi) {
  return wedge(omega_form(phi.half_dim()), phi);
}

ExtVector omega_contract(const ExtVector& phi) {
  return contract(phi, omega_form(phi.half_dim()));
}

ExtVector project_keep(const ExtVector& phi, const std::vector<int>& allowed) {
  std::vector<int> a = allowed;
  std::sort(a.begin(), a.end());
  ExtVector r(phi.half_dim());
  for (const auto& [k, c] : phi.terms()) {
    bool keep = true;
    for (int x : k)
      if (!std::binary_search(a.begin(), a.end(), x)) {
        keep = false;
        break;
      }
    if (keep) r.add_term(k, c);
  }
  return r;
}

std::vector<std::vector<int>> isotropic_index_sets(int N) {
  /* Three choices per symplectic pair {-i, i-1}: skip it, take -i, or take
   * i-1. Enumerated with i = 1 outermost for a deterministic order. */
  std::vector<std::vector<int>> out = {{}};
  for (int i = 1; i <= N; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& k : out) {
      next.push_back(k);
      auto neg = k;
      neg.push_back(-i);
      next.push_back(std::move(neg));
      auto pos = k;
      pos.push_back(i - 1);
      next.push_back(std::move(pos));
    }
    out = std::move(next);
  }
  for (auto& k : out) std::sort(k.begin(), k.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> complement_pairs(const std::vector<int>& K, int N) {
  std::vector<int> bar;
  for (int i = 1; i <= N; ++i) {
    bool touched = false;
    for (int x : K)
      if (x == -i || x == i - 1) touched = true;
    if (!touched) bar.push_back(-i);
  }
  return bar;  // decreasing: -1 before -2 before ...
}

/* Raw constructor: assumes the label was validated, allows any j >= 0.
 * For j past the string end the omega power collapses and the result is
 * the zero vector, which is exactly what the ladder identities need. */
static ExtVector build_phi(int N, int j, const StandardTableau& T,
                           const std::vector<int>& K,
                           const std::vector<int>& bar) {
  ExtVector result = ExtVector::one(N);

  /* (1/j!) omega_Kbar^j */
  ExtVector omega_bar(N);
  for (int x : bar) omega_bar = omega_bar + x_form(N, x);
  Rat fact = 1;
  for (int q = 1; q <= j; ++q) {
    result = wedge(result, omega_bar);
    fact *= q;
  }
  result = result * Rat(Rat(1) / fact);

  /* V_T: one difference factor per two-entry row. Entry v refers to the
   * v-th complement pair, counted from the -1 side. */
  for (const auto& row : T.rows) {
    if (row.size() != 2) continue;
    ExtVector f = x_form(N, bar[row[0] - 1]) - x_form(N, bar[row[1] - 1]);
    result = wedge(result, f);
  }

  /* e_K in decreasing index order. */
  for (auto it = K.rbegin(); it != K.rend(); ++it)
    result = wedge(result, ExtVector::basis(N, {*it}));

  return result;
}

/* Validates the label, returns the complement pair list and writes m, l. */
static std::vector<int> validate_label(const BasisElement& b, int& m, int& l) {
  const int N = b.N;
  for (size_t i = 0; i < b.K.size(); ++i) {
    check_index(N, b.K[i]);
    if (i > 0 && b.K[i] <= b.K[i - 1])
      throw std::invalid_argument("phi_basis_element: K must be increasing");
  }
  for (int x : b.K)
    for (int y : b.K)
      if (x == -y - 1)
        throw std::invalid_argument("phi_basis_element: K meets a pair twice");

  std::vector<int> bar = complement_pairs(b.K, N);
  m = static_cast<int>(bar.size());
  if (!is_standard(b.T) || weight(b.T.shape) != m)
    throw std::invalid_argument("phi_basis_element: tableau does not fill the complement");
  l = 0;
  for (int part : b.T.shape) {
    if (part > 2)
      throw std::invalid_argument("phi_basis_element: tableau shape not admissible");
    if (part == 2) ++l;
  }
  return bar;
}

ExtVector phi_basis_element(const BasisElement& b) {
  int m = 0, l = 0;
  const std::vector<int> bar = validate_label(b, m, l);
  if (b.j < 0 || b.j > m - 2 * l)
    throw std::invalid_argument("phi_basis_element: omega power out of range");
  return build_phi(b.N, b.j, b.T, b.K, bar);
}

bool ladder_check(const BasisElement& b) {
  int m = 0, l = 0;
  const std::vector<int> bar = validate_label(b, m, l);
  if (b.j < 0 || b.j > m - 2 * l)
    throw std::invalid_argument("ladder_check: omega power out of range");
  const ExtVector phi = build_phi(b.N, b.j, b.T, b.K, bar);

  const ExtVector up = build_phi(b.N, b.j + 1, b.T, b.K, bar) * Rat(b.j + 1);
  if (!(omega_wedge(phi) == up)) return false;

  ExtVector down(b.N);
  if (b.j > 0)
    down = build_phi(b.N, b.j - 1, b.T, b.K, bar) * Rat(m - 2 * l - b.j + 1);
  return omega_contract(phi) == down;
}

std::vector<BasisElement> basis_P_labels(int N, int k, int j) {
  if (j < 0 || 2 * j > k || k > N + j)
    throw std::invalid_argument("basis_P: need 0 <= j and 2j <= k <= N+j");
  std::vector<BasisElement> out;
  for (const auto& K : isotropic_index_sets(N)) {
    const int m = N - static_cast<int>(K.size());
    const int rem = k - 2 * j - static_cast<int>(K.size());
    if (rem < 0 || rem % 2 != 0) continue;
    const int l = rem / 2;
    if (2 * l > m) continue;
    if (j > m - 2 * l) continue;
    for (const auto& T : admissible_tableaux(m, l)) {
      BasisElement b;
      b.N = N;
      b.j = j;
      b.T = T;
      b.K = K;
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::vector<ExtVector> basis_P(int N, int k, int j) {
  std::vector<ExtVector> out;
  for (const auto& b : basis_P_labels(N, k, j))
    out.push_back(phi_basis_element(b));
  return out;
}

}  // namespace lgr
