#include "lgr/grassmann.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lgr {

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

/* Shift {1..2N} lexicographic subsets down to {-N..N-1}. */
std::vector<std::vector<int>> index_subsets(int N, int k) {
  auto raw = subsets_of(2 * N, k);
  for (auto& s : raw)
    for (int& x : s) x -= N + 1;
  return raw;
}

/* Sign of the permutation sorting v into decreasing order; 0 on repeats. */
int sort_decreasing(std::vector<int>& v) {
  int sign = 1;
  for (size_t i = 1; i < v.size(); ++i)
    for (size_t j = i; j > 0 && v[j] > v[j - 1]; --j) {
      std::swap(v[j], v[j - 1]);
      sign = -sign;
    }
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] == v[i - 1]) return 0;
  return sign;
}

}  // namespace

Subspace graph_subspace(const RatMatrix& A) {
  if (A.rows() != A.cols())
    throw std::invalid_argument("graph_subspace: matrix must be square");
  const int N = A.rows();
  Subspace w;
  w.N = N;
  w.W = RatMatrix(2 * N, N);
  for (int i = 1; i <= N; ++i) {
    w.W.at(N - i, i - 1) = 1;
    for (int j = 1; j <= N; ++j) {
      Rat c = A.at(i - 1, j - 1);
      if (j % 2 == 0) c = -c;
      w.W.at(N + j - 1, i - 1) = c;
    }
  }
  return w;
}

Subspace from_affine(const RatMatrix& A) {
  if (A.rows() != A.cols() || !A.is_symmetric())
    throw std::invalid_argument("from_affine: matrix must be symmetric");
  return graph_subspace(A);
}

void PluckerVector::set(const Partition& p, const Rat& c) {
  if (!fits_in_box(p, n_))
    throw std::invalid_argument("PluckerVector: partition exceeds the box");
  if (c == 0)
    coords_.erase(p);
  else
    coords_[p] = c;
}

Rat PluckerVector::at(const Partition& p) const {
  if (!fits_in_box(p, n_))
    throw std::invalid_argument("PluckerVector: partition exceeds the box");
  auto it = coords_.find(p);
  return it == coords_.end() ? Rat(0) : it->second;
}

bool PluckerVector::is_zero() const { return coords_.empty(); }

Rat PluckerVector::signed_coord(const std::vector<int>& positions) const {
  if (static_cast<int>(positions.size()) != n_)
    throw std::invalid_argument("signed_coord: need exactly N positions");
  std::vector<int> v = positions;
  int sign = sort_decreasing(v);
  if (sign == 0) return 0;
  Partition p = partition_from_positions(v, n_);
  return sign * at(p);
}

bool PluckerVector::proportional_to(const PluckerVector& o) const {
  if (n_ != o.n_) return false;
  if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
  /* Both maps hold only nonzero entries, so the key sets must agree. */
  if (coords_.size() != o.coords_.size()) return false;
  Rat scale = 0;
  for (auto it = coords_.begin(), jt = o.coords_.begin();
       it != coords_.end(); ++it, ++jt) {
    if (it->first != jt->first) return false;
    if (scale == 0)
      scale = it->second / jt->second;
    else if (it->second != scale * jt->second)
      return false;
  }
  return true;
}

PluckerVector plucker(const Subspace& w) {
  const int N = w.N;
  if (w.W.rows() != 2 * N || w.W.cols() != N)
    throw std::invalid_argument("plucker: W must be 2N x N");
  if (rank(w.W) != N)
    throw std::invalid_argument("plucker: columns are dependent");
  std::vector<int> cols(N);
  for (int c = 0; c < N; ++c) cols[c] = c;
  PluckerVector pi(N);
  for (const auto& p : partitions_in_box(N)) {
    std::vector<int> rows = particle_positions(p, N);  // decreasing
    for (int& r : rows) r += N;
    pi.set(p, det(submatrix(w.W, rows, cols)));
  }
  return pi;
}

ExtVector ext_from_subspace(const Subspace& w) {
  const int N = w.N;
  if (w.W.rows() != 2 * N || w.W.cols() != N)
    throw std::invalid_argument("ext_from_subspace: W must be 2N x N");
  ExtVector acc = ExtVector::one(N);
  for (int c = 0; c < N; ++c) {
    ExtVector col(N);
    for (int row = 0; row < 2 * N; ++row)
      if (w.W.at(row, c) != 0) col.add_term({row - N}, w.W.at(row, c));
    acc = wedge(acc, col);
  }
  return acc;
}

/* pi stores the coordinate of the decreasing wedge; ExtVector keys are
 * increasing, so the two differ by the fixed reversal sign (-1)^(N(N-1)/2).
 * The same sign appears in both directions and cancels on round trips. */
PluckerVector plucker_from_ext(const ExtVector& phi) {
  const int N = phi.half_dim();
  if (!phi.is_zero() && phi.degree() != N)
    throw std::invalid_argument("plucker_from_ext: need a degree-N vector");
  const int rev = (N * (N - 1) / 2) % 2 ? -1 : 1;
  PluckerVector pi(N);
  for (const auto& [key, c] : phi.terms())
    pi.set(partition_from_positions(key, N), rev * c);
  return pi;
}

ExtVector ext_from_plucker(const PluckerVector& pi) {
  const int N = pi.box();
  const int rev = (N * (N - 1) / 2) % 2 ? -1 : 1;
  ExtVector phi(N);
  for (const auto& [p, c] : pi.coords()) {
    std::vector<int> key = particle_positions(p, N);
    std::reverse(key.begin(), key.end());
    phi.add_term(key, rev * c);
  }
  return phi;
}

std::vector<Residual> plucker_residuals(const PluckerVector& pi,
                                        PluckerMode mode) {
  const int N = pi.box();
  std::vector<Residual> out;
  if (mode == PluckerMode::full) {
    for (const auto& I : index_subsets(N, N - 1))
      for (const auto& J : index_subsets(N, N + 1)) {
        Rat r = 0;
        for (size_t m = 0; m < J.size(); ++m) {
          std::vector<int> first = I;
          first.push_back(J[m]);
          std::vector<int> second;
          for (size_t t = 0; t < J.size(); ++t)
            if (t != m) second.push_back(J[t]);
          Rat term = pi.signed_coord(first) * pi.signed_coord(second);
          if (m % 2 == 0) r -= term;  // (-1)^m with 1-based m
          else r += term;
        }
        out.push_back({"full:I=" + join(I) + ";J=" + join(J), r});
      }
    return out;
  }
  for (const auto& Ip : index_subsets(N, N - 2)) {
    std::vector<int> rest;
    for (int x = -N; x <= N - 1; ++x)
      if (!std::binary_search(Ip.begin(), Ip.end(), x)) rest.push_back(x);
    for (size_t a = 0; a < rest.size(); ++a) {
      std::vector<int> pool;
      for (size_t t = 0; t < rest.size(); ++t)
        if (t != a) pool.push_back(rest[t]);
      for (size_t u = 0; u < pool.size(); ++u)
        for (size_t v = u + 1; v < pool.size(); ++v)
          for (size_t s = v + 1; s < pool.size(); ++s) {
            const int i = rest[a];
            const int j1 = pool[u], j2 = pool[v], j3 = pool[s];
            auto tup = [&Ip](int x, int y) {
              std::vector<int> t = Ip;
              t.push_back(x);
              t.push_back(y);
              return t;
            };
            Rat r = pi.signed_coord(tup(i, j1)) * pi.signed_coord(tup(j2, j3))
                  + pi.signed_coord(tup(i, j3)) * pi.signed_coord(tup(j1, j2))
                  + pi.signed_coord(tup(i, j2)) * pi.signed_coord(tup(j3, j1));
            out.push_back({"short:I=" + join(Ip) + ";i=" + std::to_string(i) +
                               ";j=" + join({j1, j2, j3}),
                           r});
          }
    }
  }
  return out;
}

namespace {

/* Coefficient of the sorted key with the sorting sign, for plain
 * exterior-vector indices (increasing storage order). */
Rat signed_ext_coord(const ExtVector& phi, std::vector<int> v) {
  int sign = sort_decreasing(v);
  if (sign == 0) return 0;
  std::reverse(v.begin(), v.end());
  /* sort_decreasing gave the decreasing sign; reversing k elements adds
   * (-1)^(k(k-1)/2). */
  if ((v.size() * (v.size() - 1) / 2) % 2) sign = -sign;
  return sign * phi.coeff(v);
}

}  // namespace

std::vector<Residual> ext_plucker_residuals(const ExtVector& phi) {
  const int k = phi.degree();
  if (k < 0)
    throw std::invalid_argument("ext_plucker_residuals: zero or mixed degree");
  const int n = phi.half_dim();
  std::vector<Residual> out;
  auto shifted = [n](int card) {
    auto raw = subsets_of(2 * n, card);
    for (auto& s : raw)
      for (int& x : s) x -= n + 1;
    return raw;
  };
  for (const auto& I : shifted(k - 1))
    for (const auto& J : shifted(k + 1)) {
      Rat r = 0;
      for (size_t m = 0; m < J.size(); ++m) {
        std::vector<int> first = I;
        first.push_back(J[m]);
        std::vector<int> second;
        for (size_t t = 0; t < J.size(); ++t)
          if (t != m) second.push_back(J[t]);
        Rat term = signed_ext_coord(phi, first) * signed_ext_coord(phi, second);
        if (m % 2 == 0) r -= term;
        else r += term;
      }
      out.push_back({"ext:I=" + join(I) + ";J=" + join(J), r});
    }
  return out;
}

bool is_lagrangian(const Subspace& w) {
  const int N = w.N;
  if (w.W.rows() != 2 * N || w.W.cols() != N)
    throw std::invalid_argument("is_lagrangian: W must be 2N x N");
  for (int a = 0; a < N; ++a)
    for (int b = a + 1; b < N; ++b) {
      Rat s = 0;
      for (int p = -N; p <= N - 1; ++p) {
        Rat term = w.W.at(p + N, a) * w.W.at(-p - 1 + N, b);
        if ((p % 2 + 2) % 2 == 1) term = -term;
        s += term;
      }
      if (s != 0) return false;
    }
  return true;
}

std::vector<std::pair<Partition, Partition>> two_term_pairs(int N) {
  std::vector<std::pair<Partition, Partition>> out;
  for (const auto& p : partitions_in_box(N)) {
    Partition t = transpose(p);
    if (p > t) out.emplace_back(p, t);
  }
  return out;
}

std::vector<Residual> lagrangian_linear_residuals(const PluckerVector& pi) {
  const int N = pi.box();
  ExtVector phi = ext_from_plucker(pi);
  ExtVector c = omega_contract(phi);
  std::vector<Residual> out;
  for (const auto& K : index_subsets(N, N - 2))
    out.push_back({"omega:K=" + join(K), c.coeff(K)});
  for (const auto& [p, t] : two_term_pairs(N))
    out.push_back({"pair:lambda=" + join(p), pi.at(p) - pi.at(t)});
  return out;
}

Rat LagrangeCoefficients::at(const std::vector<int>& J) const {
  auto it = values.find(J);
  if (it == values.end())
    throw std::invalid_argument("LagrangeCoefficients: unknown index set");
  return it->second;
}

LagrangeCoefficients lagrange_map(const Subspace& w) {
  if (!is_lagrangian(w))
    throw std::invalid_argument("lagrange_map: subspace is not Lagrangian");
  PluckerVector pi = plucker(w);
  LagrangeCoefficients L;
  L.N = w.N;
  for (int k = 0; k <= w.N; ++k)
    for (const auto& J : subsets_of(w.N, k))
      L.values[J] = pi.at(from_ij_label({J, J, w.N}));
  Rat base = L.values[{}];
  if (base != 0)
    for (auto& [J, v] : L.values) v /= base;
  return L;
}

Subspace z2_orbit(const Subspace& w, const std::vector<int>& eps) {
  const int N = w.N;
  if (static_cast<int>(eps.size()) != N)
    throw std::invalid_argument("z2_orbit: need N signs");
  for (int e : eps)
    if (e != 1 && e != -1)
      throw std::invalid_argument("z2_orbit: signs must be +-1");
  Subspace out = w;
  for (int i = 1; i <= N; ++i)
    if (eps[i - 1] == -1)
      for (int c = 0; c < N; ++c) {
        out.W.at(N - i, c) = -out.W.at(N - i, c);
        out.W.at(N + i - 1, c) = -out.W.at(N + i - 1, c);
      }
  return out;
}

ExtVector f_vector(int N, int i, bool starred) {
  if (i < 1 || i > N) throw std::invalid_argument("f_vector: index out of range");
  ExtVector v(N);
  if (!starred)
    v.add_term({-i}, 1);
  else
    v.add_term({i - 1}, i % 2 == 1 ? 1 : -1);
  return v;
}

Reduce36Result reduce36(const ExtVector& phi, const MarkedMultiIndex& m) {
  const int N = phi.half_dim();
  if (static_cast<int>(m.I.size()) != N - 3 || m.starred.size() != m.I.size())
    throw std::invalid_argument("reduce36: need N-3 marked indices");
  for (size_t t = 0; t < m.I.size(); ++t) {
    if (m.I[t] < 1 || m.I[t] > N)
      throw std::invalid_argument("reduce36: index out of range");
    if (t > 0 && m.I[t] <= m.I[t - 1])
      throw std::invalid_argument("reduce36: indices must increase");
  }
  ExtVector dual = ExtVector::one(N);
  for (size_t t = 0; t < m.I.size(); ++t)
    dual = wedge(dual, f_vector(N, m.I[t], m.starred[t]));
  ExtVector cut = contract(phi, dual);

  std::vector<int> survivors;
  for (int i = 1; i <= N; ++i)
    if (!std::binary_search(m.I.begin(), m.I.end(), i)) survivors.push_back(i);
  std::vector<int> allowed;
  for (int i : survivors) {
    allowed.push_back(-i);
    allowed.push_back(i - 1);
  }
  ExtVector kept = project_keep(cut, allowed);

  /* Relabel the surviving pairs i_1 < i_2 < i_3 to 1,2,3 via the paired
   * basis, f_{i_t} -> f_t and f*_{i_t} -> f*_t, under which the symplectic
   * form keeps its shape. The index map -i_t -> -t, i_t - 1 -> t - 1
   * preserves the order of all six indices, so keys stay sorted; but
   * f*_i = (-1)^(i-1) e_{i-1}, so each positive member contributes the
   * sign (-1)^(i_t - t). */
  Reduce36Result res;
  for (const auto& [key, c] : kept.terms()) {
    std::vector<int> nk;
    int sign = 1;
    for (int x : key) {
      const int pair = x < 0 ? -x : x + 1;
      int t = 0;
      for (size_t s = 0; s < survivors.size(); ++s)
        if (survivors[s] == pair) t = static_cast<int>(s) + 1;
      if (x >= 0 && (pair - t) % 2 != 0) sign = -sign;
      nk.push_back(x < 0 ? -t : t - 1);
    }
    res.phi.add_term(nk, c * sign);
  }
  res.conclusive = !res.phi.is_zero();
  return res;
}

std::vector<Residual> isotropy_residuals(const ExtVector& phi) {
  const int k = phi.degree();
  if (k < 0)
    throw std::invalid_argument("isotropy_residuals: zero or mixed degree");
  const int n = phi.half_dim();
  ExtVector c = omega_contract(phi);
  std::vector<Residual> out;
  auto keys = subsets_of(2 * n, k - 2);
  for (auto& K : keys) {
    for (int& x : K) x -= n + 1;
    out.push_back({"iso:K=" + join(K), c.coeff(K)});
  }
  return out;
}

}  // namespace lgr
