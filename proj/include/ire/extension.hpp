#pragma once

#include "ire/induction.hpp"
#include "ire/real_data.hpp"
#include "ire/scheme.hpp"

namespace ire {

/// A scheme together with endpoint data on both itself and its dual:
/// x lives in the endpoint space of `scheme`, y in that of dual(scheme).
struct NaturalExtension {
  Scheme scheme;
  Endpoints x;
  Endpoints y;
};

/// Length-only variant: v for the scheme, w for its dual.
struct FloatingExtension {
  Scheme scheme;
  Lengths v;
  Lengths w;
};

NaturalExtension make_extension(const Scheme& s, const Endpoints& x, const Endpoints& y);
FloatingExtension make_floating(const Scheme& s, const Lengths& v, const Lengths& w);

/// The invariant area v . w.
Rat area(const FloatingExtension& f);

/// Step applied on the dual side: the forward step on the primal side is
/// balanced by the inverse of this step on the dual data.
InductionStep dual_counterpart(const InductionStep& step);

/// Applies the step forward on (scheme, x) and the matching inverse step on
/// (dual(scheme), y). Requires the positivity inequality for the step;
/// equality raises TieDetected.
NaturalExtension apply_step_extension(const NaturalExtension& ne, const InductionStep& step);
FloatingExtension apply_step_floating(const FloatingExtension& f, const InductionStep& step);

}  // namespace ire
