#include "lgr/hyperdet.hpp"

#include <algorithm>
#include <stdexcept>

namespace lgr {

int MinorCube::mask_of(const std::vector<int>& S) {
  int mask = 0;
  for (int x : S) {
    if (x < 1 || x > 3)
      throw std::invalid_argument("MinorCube: subset of {1,2,3} required");
    if (mask & (1 << (x - 1)))
      throw std::invalid_argument("MinorCube: repeated index");
    mask |= 1 << (x - 1);
  }
  return mask;
}

Rat cayley222(const MinorCube& c) { return cayley222_of<Rat>(c.c); }

Rat core_residual(const LagrangeCoefficients& L, const std::vector<int>& J,
                  const std::array<int, 3>& triple) {
  std::vector<int> seen = J;
  for (int j : triple) {
    if (j < 1 || j > L.N)
      throw std::invalid_argument("core_residual: index out of range");
    seen.push_back(j);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("core_residual: index collision");
  std::array<Rat, 8> cube;
  for (int mask = 0; mask < 8; ++mask) {
    std::vector<int> idx = J;
    for (int s = 0; s < 3; ++s)
      if (mask & (1 << s)) idx.push_back(triple[s]);
    std::sort(idx.begin(), idx.end());
    cube[mask] = L.at(idx);
  }
  return cayley222_of<Rat>(cube);
}

namespace {

struct Label {
  int i;
  bool starred;
};

Rat pi_coord(const ExtVector& phi, std::initializer_list<Label> labels) {
  ExtVector dual = ExtVector::one(3);
  for (const Label& l : labels) dual = wedge(dual, f_vector(3, l.i, l.starred));
  return contract(phi, dual).coeff({});
}

}  // namespace

Gr36Coords gr36_coords(const ExtVector& phi) {
  if (phi.half_dim() != 3 || phi.degree() != 3)
    throw std::invalid_argument("gr36_coords: need a degree-3 vector on C^6");
  auto pi = [&phi](std::initializer_list<Label> l) { return pi_coord(phi, l); };
  Gr36Coords g;
  g.S0 = pi({{1, false}, {2, false}, {3, false}});
  g.S1 = pi({{2, false}, {3, false}, {1, true}});
  g.S2 = -pi({{1, false}, {3, false}, {2, true}});
  g.S3 = pi({{1, false}, {2, false}, {3, true}});
  g.S0s = pi({{1, true}, {2, true}, {3, true}});
  g.S1s = pi({{1, false}, {2, true}, {3, true}});
  g.S2s = -pi({{2, false}, {1, true}, {3, true}});
  g.S3s = pi({{3, false}, {1, true}, {2, true}});
  /* Each T has two carriers that coincide exactly on the Lagrangian locus;
   * the first is taken as the value, the difference is reported. */
  g.T1 = pi({{1, false}, {2, false}, {2, true}});
  g.T2 = pi({{2, false}, {3, false}, {3, true}});
  g.T3 = pi({{2, false}, {3, false}, {2, true}});
  g.T1s = pi({{2, false}, {1, true}, {2, true}});
  g.T2s = pi({{3, false}, {2, true}, {3, true}});
  g.T3s = -pi({{1, false}, {1, true}, {3, true}});
  g.consistency = {
      {"T1", g.T1 + pi({{1, false}, {3, false}, {3, true}})},
      {"T2", g.T2 - pi({{1, false}, {2, false}, {1, true}})},
      {"T3", g.T3 + pi({{1, false}, {3, false}, {1, true}})},
      {"T1*", g.T1s + pi({{3, false}, {1, true}, {3, true}})},
      {"T2*", g.T2s - pi({{1, false}, {1, true}, {2, true}})},
      {"T3*", g.T3s - pi({{2, false}, {2, true}, {3, true}})},
  };
  return g;
}

std::vector<Residual> identity_chain_residuals(const Gr36Coords& g) {
  ChainTuple<Rat> t{g.S0, g.S1, g.S2, g.S3,  g.S0s, g.S1s, g.S2s,
                    g.S3s, g.T1, g.T2, g.T3, g.T1s, g.T2s, g.T3s};
  std::vector<Residual> out;
  for (auto& [id, v] : chain_residuals_of<Rat>(t)) out.push_back({id, v});
  return out;
}

}  // namespace lgr
