#include "ire/extension.hpp"

#include "ire/error.hpp"

namespace ire {

NaturalExtension make_extension(const Scheme& s, const Endpoints& x, const Endpoints& y) {
  if (!in_endpoint_space(s, x))
    fail(ErrorCode::NotInEndpointSpace, "primal endpoints not in the endpoint space");
  if (!in_endpoint_space(dual(s), y))
    fail(ErrorCode::NotInEndpointSpace, "dual endpoints not in the dual endpoint space");
  return {s, x, y};
}

FloatingExtension make_floating(const Scheme& s, const Lengths& v, const Lengths& w) {
  if (!in_length_space(s, v))
    fail(ErrorCode::NotInLengthSpace, "primal lengths not in the length space");
  if (!in_length_space(dual(s), w))
    fail(ErrorCode::NotInLengthSpace, "dual lengths not in the dual length space");
  return {s, v, w};
}

Rat area(const FloatingExtension& f) {
  Rat a = 0;
  for (size_t i = 0; i < f.v.size(); ++i) a += f.v[i] * f.w[i];
  return a;
}

InductionStep dual_counterpart(const InductionStep& step) {
  switch (step.kind) {
    case StepKind::rb: return {StepKind::rb, step.beta, step.alpha};
    case StepKind::re: return {StepKind::lb, step.alpha, step.beta};
    case StepKind::lb: return {StepKind::re, step.alpha, step.beta};
    case StepKind::le: return {StepKind::le, step.beta, step.alpha};
  }
  return step;
}

static void check_positive_direction(const Lengths& v, const InductionStep& step) {
  if (v[step.alpha] == v[step.beta])
    fail(ErrorCode::TieDetected, "step lengths are equal");
  bool crop_begin = step.kind == StepKind::rb || step.kind == StepKind::lb;
  if (crop_begin ? v[step.alpha] < v[step.beta] : v[step.alpha] > v[step.beta])
    fail(ErrorCode::StepNotApplicable, "length inequality points the other way");
}

NaturalExtension apply_step_extension(const NaturalExtension& ne, const InductionStep& step) {
  check_positive_direction(lengths_from_endpoints(ne.scheme, ne.x), step);
  SchemeEndpoints fwd = apply_step(ne.scheme, ne.x, step);
  SchemeEndpoints bwd = invert_step(dual(ne.scheme), ne.y, dual_counterpart(step));
  if (!(bwd.scheme == dual(fwd.scheme)))
    fail(ErrorCode::InternalInvariantViolation,
         "dual-side inverse disagrees with the dual of the stepped scheme");
  return {fwd.scheme, fwd.x, bwd.x};
}

FloatingExtension apply_step_floating(const FloatingExtension& f, const InductionStep& step) {
  check_positive_direction(f.v, step);
  SchemeLengths fwd = apply_step_lengths(f.scheme, f.v, step);
  SchemeLengths bwd = invert_step_lengths(dual(f.scheme), f.w, dual_counterpart(step));
  if (!(bwd.scheme == dual(fwd.scheme)))
    fail(ErrorCode::InternalInvariantViolation,
         "dual-side inverse disagrees with the dual of the stepped scheme");
  return {fwd.scheme, fwd.v, bwd.v};
}

}  // namespace ire
