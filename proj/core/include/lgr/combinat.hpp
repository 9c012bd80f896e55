#pragma once

#include <utility>
#include <vector>

#include "lgr/rational.hpp"

namespace lgr {

/* Weakly decreasing positive parts; the empty vector is the empty partition.
 * Stored canonically (no trailing zeros). */
using Partition = std::vector<int>;

bool is_valid_partition(const Partition& p);
void validate_partition(const Partition& p);
int weight(const Partition& p);

Partition transpose(const Partition& p);

/* Frobenius coordinates: a_i = lambda_i - i, b_i = lambda'_i - i along the
 * diagonal, both strictly decreasing and nonnegative. A partition is
 * symmetric iff a = b. */
struct Frobenius {
  std::vector<int> a, b;
  bool operator==(const Frobenius& o) const { return a == o.a && b == o.b; }
};

Frobenius frobenius(const Partition& p);
Partition from_frobenius(const Frobenius& f);

bool fits_in_box(const Partition& p, int N);

/* Particle positions l_j = lambda_j - j for j = 1..N, strictly decreasing
 * with values in [-N, N-1]. Requires the partition to fit the N x N box. */
std::vector<int> particle_positions(const Partition& p, int N);

/* Recover the partition whose first N particle positions (any order, but
 * pairwise distinct, values in [-N, N-1]) are the given set. */
Partition partition_from_positions(std::vector<int> positions, int N);

/* The (I,J) relabelling of Frobenius data inside an N x N box:
 * I = reversed(a) + 1, J = reversed(b) + 1, both increasing subsets of
 * {1..N}. Transposition swaps I and J; symmetric partitions have I = J. */
struct IJLabel {
  std::vector<int> I, J;
  int N = 0;
  bool operator==(const IJLabel& o) const {
    return I == o.I && J == o.J && N == o.N;
  }
};

IJLabel ij_label(const Partition& p, int N);
Partition from_ij_label(const IJLabel& l);

std::vector<Partition> partitions_in_box(int N);
std::vector<Partition> symmetric_partitions_in_box(int N);
std::vector<Partition> partitions_of_weight(int w);

/* Standard Young tableau of admissible shape (2^l, 1^(m-2l)): the shape has
 * at most two columns, and entries 1..m increase along rows and columns.
 * rows[i] lists row i+1 left to right. */
struct StandardTableau {
  Partition shape;
  std::vector<std::vector<int>> rows;
};

bool is_standard(const StandardTableau& t);
std::vector<StandardTableau> admissible_tableaux(int m, int l);

/* All mu obtained from lambda by adding (removing) a connected border strip
 * of r boxes, with the strip height (number of rows met). In the Maya view a
 * strip addition moves one particle up by r; the height is one more than the
 * number of particles jumped over. */
std::vector<std::pair<Partition, int>> border_strip_add(const Partition& p,
                                                        int r);
std::vector<std::pair<Partition, int>> border_strip_remove(const Partition& p,
                                                           int r);

/* Marked multi-index: an increasing I subset of {1..N} of cardinality N-3,
 * each element marked starred or unstarred. The complementary marking flips
 * every mark. Enumeration is lexicographic in (I, marks) with unstarred
 * ordered before starred, so reports are deterministic. */
struct MarkedMultiIndex {
  std::vector<int> I;
  std::vector<bool> starred;  // parallel to I
};

MarkedMultiIndex flip_marks(const MarkedMultiIndex& m);
std::vector<MarkedMultiIndex> marked_indices(int N);

/* Increasing k-subsets of {1..n} in lexicographic order. */
std::vector<std::vector<int>> subsets_of(int n, int k);

Rat binomial(int n, int k);

}  // namespace lgr
