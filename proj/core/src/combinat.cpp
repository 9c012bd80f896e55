#include "lgr/combinat.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace lgr {

bool is_valid_partition(const Partition& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] <= 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

void validate_partition(const Partition& p) {
  if (!is_valid_partition(p))
    throw std::invalid_argument("not a partition (parts must weakly decrease and stay positive)");
}

int weight(const Partition& p) {
  int w = 0;
  for (int x : p) w += x;
  return w;
}

Partition transpose(const Partition& p) {
  validate_partition(p);
  Partition t;
  if (p.empty()) return t;
  t.resize(p[0]);
  for (int j = 0; j < p[0]; ++j) {
    int c = 0;
    for (int x : p)
      if (x > j) ++c;
    t[j] = c;
  }
  return t;
}

Frobenius frobenius(const Partition& p) {
  validate_partition(p);
  Partition t = transpose(p);
  Frobenius f;
  for (size_t i = 0; i < p.size(); ++i) {
    int d = static_cast<int>(i) + 1;
    if (p[i] < d) break;
    f.a.push_back(p[i] - d);
    f.b.push_back(t[i] - d);
  }
  return f;
}

Partition from_frobenius(const Frobenius& f) {
  if (f.a.size() != f.b.size())
    throw std::invalid_argument("from_frobenius: rank mismatch between arms and legs");
  auto strictly_decreasing_nonneg = [](const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) return false;
      if (i > 0 && v[i] >= v[i - 1]) return false;
    }
    return true;
  };
  if (!strictly_decreasing_nonneg(f.a) || !strictly_decreasing_nonneg(f.b))
    throw std::invalid_argument("from_frobenius: indices must strictly decrease and be nonnegative");
  const int r = static_cast<int>(f.a.size());
  if (r == 0) return {};
  /* Hook i covers row i out to column i+a_i and column i down to row i+b_i. */
  Partition p(f.b[0] + 1, 0);
  for (int i = 0; i < r; ++i) {
    p[i] = f.a[i] + i + 1;
    for (int row = i + 1; row <= f.b[i] + i; ++row)
      p[row] = std::max(p[row], i + 1);
  }
  validate_partition(p);
  return p;
}

std::vector<int> particle_positions(const Partition& p, int N) {
  if (!fits_in_box(p, N))
    throw std::invalid_argument("particle_positions: partition exceeds the box");
  std::vector<int> l(N);
  for (int j = 1; j <= N; ++j)
    l[j - 1] = (j <= static_cast<int>(p.size()) ? p[j - 1] : 0) - j;
  return l;
}

bool fits_in_box(const Partition& p, int N) {
  validate_partition(p);
  if (static_cast<int>(p.size()) > N) return false;
  return p.empty() || p[0] <= N;
}

Partition partition_from_positions(std::vector<int> positions, int N) {
  if (static_cast<int>(positions.size()) != N)
    throw std::invalid_argument("partition_from_positions: need exactly N positions");
  std::sort(positions.begin(), positions.end(), std::greater<int>());
  Partition p(N, 0);
  for (int j = 1; j <= N; ++j) {
    int v = positions[j - 1];
    if (v < -N || v > N - 1)
      throw std::invalid_argument("partition_from_positions: position out of range");
    if (j > 1 && positions[j - 1] == positions[j - 2])
      throw std::invalid_argument("partition_from_positions: duplicate position");
    p[j - 1] = v + j;
    if (p[j - 1] < 0)
      throw std::invalid_argument("partition_from_positions: not a partition");
  }
  while (!p.empty() && p.back() == 0) p.pop_back();
  validate_partition(p);
  return p;
}

IJLabel ij_label(const Partition& p, int N) {
  if (!fits_in_box(p, N))
    throw std::invalid_argument("ij_label: partition exceeds the box");
  Frobenius f = frobenius(p);
  IJLabel l;
  l.N = N;
  for (auto it = f.a.rbegin(); it != f.a.rend(); ++it) l.I.push_back(*it + 1);
  for (auto it = f.b.rbegin(); it != f.b.rend(); ++it) l.J.push_back(*it + 1);
  return l;
}

Partition from_ij_label(const IJLabel& l) {
  if (l.I.size() != l.J.size())
    throw std::invalid_argument("from_ij_label: |I| != |J|");
  Frobenius f;
  for (auto it = l.I.rbegin(); it != l.I.rend(); ++it) f.a.push_back(*it - 1);
  for (auto it = l.J.rbegin(); it != l.J.rend(); ++it) f.b.push_back(*it - 1);
  Partition p = from_frobenius(f);
  if (!fits_in_box(p, l.N))
    throw std::invalid_argument("from_ij_label: indices exceed the box");
  return p;
}

namespace {

void enumerate_box(int N, int maxpart, Partition& cur,
                   std::vector<Partition>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == N) return;
  int top = cur.empty() ? maxpart : cur.back();
  for (int x = 1; x <= top; ++x) {
    cur.push_back(x);
    enumerate_box(N, maxpart, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_in_box(int N) {
  if (N < 0) throw std::invalid_argument("partitions_in_box: negative N");
  std::vector<Partition> out;
  Partition cur;
  enumerate_box(N, N, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> symmetric_partitions_in_box(int N) {
  std::vector<Partition> out;
  for (const Partition& p : partitions_in_box(N))
    if (p == transpose(p)) out.push_back(p);
  return out;
}

std::vector<Partition> partitions_of_weight(int w) {
  std::vector<Partition> out;
  Partition cur;
  /* Recursive descent by largest part. */
  struct Gen {
    std::vector<Partition>& out;
    Partition& cur;
    void go(int rem, int maxpart) {
      if (rem == 0) {
        out.push_back(cur);
        return;
      }
      for (int x = std::min(rem, maxpart); x >= 1; --x) {
        cur.push_back(x);
        go(rem - x, x);
        cur.pop_back();
      }
    }
  } gen{out, cur};
  if (w >= 0) gen.go(w, w == 0 ? 1 : w);
  return out;
}

bool is_standard(const StandardTableau& t) {
  if (!is_valid_partition(t.shape) && !t.shape.empty()) return false;
  if (t.rows.size() != t.shape.size()) return false;
  int m = weight(t.shape);
  std::vector<bool> seen(m + 1, false);
  for (size_t i = 0; i < t.rows.size(); ++i) {
    if (static_cast<int>(t.rows[i].size()) != t.shape[i]) return false;
    for (size_t j = 0; j < t.rows[i].size(); ++j) {
      int v = t.rows[i][j];
      if (v < 1 || v > m || seen[v]) return false;
      seen[v] = true;
      if (j > 0 && t.rows[i][j - 1] >= v) return false;
      if (i > 0 && static_cast<int>(t.rows[i - 1].size()) > static_cast<int>(j) &&
          t.rows[i - 1][j] >= v)
        return false;
    }
  }
  return true;
}

std::vector<StandardTableau> admissible_tableaux(int m, int l) {
  if (m < 0 || l < 0 || 2 * l > m)
    throw std::invalid_argument("admissible_tableaux: need 0 <= 2l <= m");
  Partition shape;
  for (int i = 0; i < l; ++i) shape.push_back(2);
  for (int i = 0; i < m - 2 * l; ++i) shape.push_back(1);

  std::vector<StandardTableau> out;
  StandardTableau t;
  t.shape = shape;
  t.rows.assign(shape.size(), {});

  /* Place 1..m one at a time at any row whose next free cell keeps rows and
   * columns increasing; entries are placed in increasing order so the
   * increasing conditions reduce to shape-legality of each placement. */
  struct Gen {
    const Partition& shape;
    StandardTableau& t;
    std::vector<StandardTableau>& out;
    int m;
    void go(int v) {
      if (v > m) {
        out.push_back(t);
        return;
      }
      for (size_t i = 0; i < shape.size(); ++i) {
        size_t col = t.rows[i].size();
        if (static_cast<int>(col) >= shape[i]) continue;
        if (i > 0 && t.rows[i - 1].size() <= col) continue;
        t.rows[i].push_back(v);
        go(v + 1);
        t.rows[i].pop_back();
      }
    }
  } gen{shape, t, out, m};
  gen.go(1);
  return out;
}

namespace {

/* Shared Maya-diagram walk. Adding a strip of size r moves one particle from
 * l to l+r; removing moves l to l-r. A move is legal iff the target is free,
 * and the strip height is 1 + (number of particles strictly between source
 * and target). A window of len(lambda)+r rows suffices: every deeper
 * particle sits in the frozen sea and can neither move nor be jumped over
 * by a legal move. */
std::vector<std::pair<Partition, int>> strip_moves(const Partition& p, int r,
                                                   bool add) {
  validate_partition(p);
  if (r < 1) throw std::invalid_argument("border strips need r >= 1");
  const int R = static_cast<int>(p.size()) + r;
  std::vector<int> l(R);
  for (int j = 1; j <= R; ++j)
    l[j - 1] = (j <= static_cast<int>(p.size()) ? p[j - 1] : 0) - j;
  std::set<int> occ(l.begin(), l.end());

  std::vector<std::pair<Partition, int>> out;
  for (int j = 0; j < R; ++j) {
    const int src = l[j];
    const int dst = add ? src + r : src - r;
    if (dst < -R) continue;  // below the window lies the fully occupied sea
    if (occ.count(dst)) continue;
    int between = 0;
    for (int x : l)
      if (x > std::min(src, dst) && x < std::max(src, dst)) ++between;
    std::vector<int> moved = l;
    moved[j] = dst;
    std::sort(moved.begin(), moved.end(), std::greater<int>());
    Partition q(R);
    bool ok = true;
    for (int i = 1; i <= R; ++i) {
      q[i - 1] = moved[i - 1] + i;
      if (q[i - 1] < 0) ok = false;
    }
    if (!ok) continue;
    while (!q.empty() && q.back() == 0) q.pop_back();
    out.emplace_back(std::move(q), between + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::pair<Partition, int>> border_strip_add(const Partition& p,
                                                        int r) {
  return strip_moves(p, r, true);
}

std::vector<std::pair<Partition, int>> border_strip_remove(const Partition& p,
                                                           int r) {
  return strip_moves(p, r, false);
}

MarkedMultiIndex flip_marks(const MarkedMultiIndex& m) {
  MarkedMultiIndex f = m;
  for (size_t i = 0; i < f.starred.size(); ++i) f.starred[i] = !f.starred[i];
  return f;
}

std::vector<MarkedMultiIndex> marked_indices(int N) {
  if (N < 3) throw std::invalid_argument("marked_indices: need N >= 3");
  std::vector<MarkedMultiIndex> out;
  for (const auto& I : subsets_of(N, N - 3)) {
    const int k = static_cast<int>(I.size());
    for (int mask = 0; mask < (1 << k); ++mask) {
      MarkedMultiIndex m;
      m.I = I;
      for (int i = 0; i < k; ++i) m.starred.push_back((mask >> i) & 1);
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::vector<std::vector<int>> subsets_of(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  struct Gen {
    int n, k;
    std::vector<int>& cur;
    std::vector<std::vector<int>>& out;
    void go(int next) {
      if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
      }
      int need = k - static_cast<int>(cur.size());
      for (int x = next; x <= n - need + 1; ++x) {
        cur.push_back(x);
        go(x + 1);
        cur.pop_back();
      }
    }
  } gen{n, k, cur, out};
  gen.go(1);
  return out;
}

Rat binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rat r = 1;
  for (int i = 0; i < k; ++i) r *= rat_frac(n - i, i + 1);
  r.canonicalize();
  return r;
}

}  // namespace lgr
