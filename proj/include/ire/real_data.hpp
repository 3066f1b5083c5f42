#pragma once

#include <map>
#include <vector>

#include "ire/linalg.hpp"
#include "ire/rational.hpp"
#include "ire/scheme.hpp"

namespace ire {

/// Endpoint vector x indexed by extended label (width 2d).
using Endpoints = RatVec;
/// Length vector v indexed by label (width d).
using Lengths = RatVec;

struct Basis {
  RatMat vectors;  // RREF-normalized rows
  int dim() const { return static_cast<int>(vectors.size()); }
};

/// d x 2d matrix of the endpoint relations: row a has +1 at a.b and a.e,
/// -1 at sigma(a.b) and sigma(a.e), entries summed on coincidence.
RatMat delta_matrix(const Scheme& s);

/// Kernel of delta; dim = d + P, cross-checked against the component count.
Basis endpoint_space_basis(const Scheme& s);

/// Image of the endpoint space under the length map; dim = d + P - N.
Basis length_space_basis(const Scheme& s);

bool in_endpoint_space(const Scheme& s, const Endpoints& x);

/// True iff the signed sum of v around every cycle of sigma closes to zero,
/// which characterizes membership in V_sigma.
bool in_length_space(const Scheme& s, const Lengths& v);

/// v_a = x_{sigma(a.b)} - x_{a.b} = x_{a.e} - x_{sigma(a.e)}; raises
/// NotInEndpointSpace if the two expressions disagree for some a.
Lengths lengths_from_endpoints(const Scheme& s, const Endpoints& x);

/// Rebuilds x from v by walking each cycle from one anchored endpoint,
/// adding v on b-marked elements and subtracting on e-marked ones.
/// `anchors` maps canonical cycle index to (extended label, coordinate).
Endpoints endpoints_from_lengths(const Scheme& s, const Lengths& v,
                                 const std::map<int, std::pair<ExtIdx, Rat>>& anchors);

struct IreValidation {
  Lengths v;
  bool positive = false;
  // Interval realizations: I_{a.b} = [x_{a.b}, x_{sigma(a.b)}),
  // I_{a.e} = [x_{sigma(a.e)}, x_{a.e}).
  std::vector<std::pair<Rat, Rat>> begin_intervals;  // by label
  std::vector<std::pair<Rat, Rat>> end_intervals;    // by label
};

IreValidation validate_ire(const Scheme& s, const Endpoints& x);

}  // namespace ire
