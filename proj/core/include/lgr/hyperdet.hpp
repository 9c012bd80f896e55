#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "lgr/extalg.hpp"
#include "lgr/grassmann.hpp"
#include "lgr/rational.hpp"

namespace lgr {

/* Eight values indexed by subsets S of {1,2,3}; bit i-1 of the mask marks
 * element i. Semantically the value at S is the principal minor L_{J u S}
 * for some fixed ambient J. */
struct MinorCube {
  std::array<Rat, 8> c{};

  static int mask_of(const std::vector<int>& S);
  Rat& at(const std::vector<int>& S) { return c[mask_of(S)]; }
  const Rat& at(const std::vector<int>& S) const { return c[mask_of(S)]; }
};

/* The 2x2x2 hyperdeterminant in the +4 convention:
 *   sum over complementary pairs of squares
 *   - 2 * (the six products of two complementary pairs)
 *   + 4 * (c_0 c_12 c_13 c_23 + c_1 c_2 c_3 c_123).
 * Vanishes exactly on principal-minor cubes of symmetric matrices.
 * Templated so the same polynomial can be evaluated over Rat or over a
 * polynomial ring in identity checks. */
template <class T>
T cayley222_of(const std::array<T, 8>& c) {
  auto sq = [&](int m) -> T { return c[m] * c[m]; };
  T squares = sq(0) * sq(7) + sq(1) * sq(6) + sq(2) * sq(5) + sq(4) * sq(3);
  T pairs = c[0] * c[7] * (c[1] * c[6] + c[2] * c[5] + c[4] * c[3]) +
            c[1] * c[6] * (c[2] * c[5] + c[4] * c[3]) +
            c[2] * c[5] * (c[4] * c[3]);
  T quartic = c[0] * c[3] * c[5] * c[6] + c[1] * c[2] * c[4] * c[7];
  return squares - pairs * Rat(2) + quartic * Rat(4);
}

Rat cayley222(const MinorCube& c);

/* cayley222 of the cube {L_{J u S}}, S over subsets of the given triple.
 * Zero whenever L comes from principal minors of a symmetric matrix. */
Rat core_residual(const LagrangeCoefficients& L, const std::vector<int>& J,
                  const std::array<int, 3>& triple);

/* The fourteen Gr(3,6) coordinates of a degree-3 vector in the f-basis
 * {f_1,f_2,f_3,f*_1,f*_2,f*_3}, eight S (symmetric labels) and six T. Each
 * T is carried by two coefficients that agree exactly on the Lagrangian
 * locus; `consistency` reports those six differences. */
struct Gr36Coords {
  Rat S0, S1, S2, S3;
  Rat S0s, S1s, S2s, S3s;
  Rat T1, T2, T3;
  Rat T1s, T2s, T3s;
  std::vector<Residual> consistency;
};

Gr36Coords gr36_coords(const ExtVector& phi);

/* Coefficient-ring-generic copy of the fourteen coordinates, for evaluating
 * the identity chain over a polynomial ring. Aggregate: initialize all
 * fourteen members. */
template <class T>
struct ChainTuple {
  T S0, S1, S2, S3;
  T S0s, S1s, S2s, S3s;
  T T1, T2, T3;
  T T1s, T2s, T3s;
};

/* Residuals of the identity chain: six short relations
 *   T_a^2 + S_0 S*_a - S_b S_c     (and the starred mirror),
 * three long relations
 *   2 T_a T*_a - (S_0 S*_0 + S_a S*_a - S_b S*_b - S_c S*_c),
 * six hexahedron relations
 *   S_0 (T_a T*_a - S_a S*_a) - (T_1 T_2 T_3 - S_1 S_2 S_3)  (and mirror),
 * and the single hyperdeterminantal relation: cayley222 of the cube
 *   (c_0,c_1,c_2,c_3,c_23,c_13,c_12,c_123) = (S0,S1,S2,S3,S1*,S2*,S3*,S0*).
 * All sixteen vanish on the image of the Lagrangian Grassmannian. */
template <class T>
std::vector<std::pair<std::string, T>> chain_residuals_of(
    const ChainTuple<T>& g) {
  const std::array<const T*, 4> S{&g.S0, &g.S1, &g.S2, &g.S3};
  const std::array<const T*, 4> Ss{&g.S0s, &g.S1s, &g.S2s, &g.S3s};
  const std::array<const T*, 4> Tt{nullptr, &g.T1, &g.T2, &g.T3};
  const std::array<const T*, 4> Ts{nullptr, &g.T1s, &g.T2s, &g.T3s};
  std::vector<std::pair<std::string, T>> out;
  auto others = [](int a) {
    return a == 1 ? std::pair<int, int>{2, 3}
                  : a == 2 ? std::pair<int, int>{1, 3}
                           : std::pair<int, int>{1, 2};
  };
  for (int a = 1; a <= 3; ++a) {
    auto [b, c] = others(a);
    out.emplace_back("short" + std::to_string(a),
                     *Tt[a] * *Tt[a] + *S[0] * *Ss[a] - *S[b] * *S[c]);
  }
  for (int a = 1; a <= 3; ++a) {
    auto [b, c] = others(a);
    out.emplace_back("short" + std::to_string(a) + "*",
                     *Ts[a] * *Ts[a] + *Ss[0] * *S[a] - *Ss[b] * *Ss[c]);
  }
  for (int a = 1; a <= 3; ++a) {
    auto [b, c] = others(a);
    out.emplace_back(
        "long" + std::to_string(a),
        *Tt[a] * *Ts[a] * Rat(2) -
            (*S[0] * *Ss[0] + *S[a] * *Ss[a] - *S[b] * *Ss[b] - *S[c] * *Ss[c]));
  }
  T hexT = *Tt[1] * *Tt[2] * *Tt[3] - *S[1] * *S[2] * *S[3];
  T hexTs = *Ts[1] * *Ts[2] * *Ts[3] - *Ss[1] * *Ss[2] * *Ss[3];
  for (int a = 1; a <= 3; ++a)
    out.emplace_back("hex" + std::to_string(a),
                     *S[0] * (*Tt[a] * *Ts[a] - *S[a] * *Ss[a]) - hexT);
  for (int a = 1; a <= 3; ++a)
    out.emplace_back("hex" + std::to_string(a) + "*",
                     *Ss[0] * (*Tt[a] * *Ts[a] - *S[a] * *Ss[a]) - hexTs);
  /* Cube entries live at their subset masks: index 3 is {1,2}, index 4 is
   * {3}, so the starred S interleave with S3. */
  out.emplace_back("hyperdet",
                   cayley222_of<T>({g.S0, g.S1, g.S2, g.S3s, g.S3, g.S2s,
                                    g.S1s, g.S0s}));
  return out;
}

std::vector<Residual> identity_chain_residuals(const Gr36Coords& g);

}  // namespace lgr
