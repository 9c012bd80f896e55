#pragma once

#include <string>
#include <vector>

#include "lgr/extalg.hpp"
#include "lgr/fock.hpp"
#include "lgr/grassmann.hpp"
#include "lgr/hyperdet.hpp"
#include "lgr/matrix.hpp"
#include "lgr/sympoly.hpp"
#include "lgr/tau.hpp"

namespace lgr {

/* JSON round trips for every on-disk format. Rationals travel as strings
 * "p/q" or "p"; every from_json throws std::invalid_argument on malformed
 * text. Serialization is deterministic: object keys are emitted in a fixed
 * order, so identical data gives identical bytes. */

std::string read_text_file(const std::string& path);

/* {"n": N, "affine": [[...rationals...]]} */
RatMatrix affine_from_json(const std::string& text);
std::string affine_to_json(const RatMatrix& A);

/* {"n": N, "w": [[...2N rows of N rationals...]]} */
Subspace subspace_from_json(const std::string& text);
std::string subspace_to_json(const Subspace& w);

/* {"n": N, "terms": [{"idx": [-2,0], "c": "1/2"}, ...]} */
ExtVector extvector_from_json(const std::string& text);
std::string extvector_to_json(const ExtVector& v);

/* {"m": M, "terms": [{"exp": [2,0,1], "c": "1/3"}, ...]} */
SymPoly sympoly_from_json(const std::string& text);
std::string sympoly_to_json(const SymPoly& p);

/* {"L": {"": "1", "1": "2", ..., "123": "4"}} */
MinorCube minorcube_from_json(const std::string& text);
std::string minorcube_to_json(const MinorCube& c);

/* {"terms": [{"lambda": [2,1], "n": 0, "c": "1/3"}, ...]} */
FockVector fockvector_from_json(const std::string& text);
std::string fockvector_to_json(const FockVector& v);

/* {"n": N, "plucker": [{"lambda": [2,1], "c": "1/3"}, ...]} */
PluckerVector pluckervector_from_json(const std::string& text);
std::string pluckervector_to_json(const PluckerVector& pi);

/* {"n": N, "m": M, "plucker": [{"lambda": [2,1], "c": "1/3"}, ...]};
 * the polynomial is rebuilt from the coordinates on load. */
TauPoly taupoly_from_json(const std::string& text);
std::string taupoly_to_json(const TauPoly& tau);

/* {"L": {...}} over all 2^N subsets, ordered by size then lexicographically. */
std::string lagrange_to_json(const LagrangeCoefficients& L);

/* [{"relation": id, "residual": "p/q"}, ...] in the given order. */
std::string residuals_to_json(const std::vector<Residual>& rs);

}  // namespace lgr
