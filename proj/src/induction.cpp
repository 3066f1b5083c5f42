#include "ire/induction.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ire/error.hpp"

namespace ire {

const char* step_kind_name(StepKind k) {
  switch (k) {
    case StepKind::rb: return "rb";
    case StepKind::re: return "re";
    case StepKind::lb: return "lb";
    case StepKind::le: return "le";
  }
  return "?";
}

static bool is_right_kind(StepKind k) { return k == StepKind::rb || k == StepKind::re; }

std::string format_step(const Scheme& s, const InductionStep& step) {
  return std::string(step_kind_name(step.kind)) + ":" + s.label_name(step.alpha) + "," +
         s.label_name(step.beta);
}

InductionStep parse_step(const Scheme& s, const std::string& text) {
  size_t colon = text.find(':');
  size_t comma = text.find(',', colon == std::string::npos ? 0 : colon);
  if (colon == std::string::npos || comma == std::string::npos)
    fail(ErrorCode::ParseError, "step literal must look like rb:a,b");
  std::string kind = text.substr(0, colon);
  InductionStep step;
  if (kind == "rb")
    step.kind = StepKind::rb;
  else if (kind == "re")
    step.kind = StepKind::re;
  else if (kind == "lb")
    step.kind = StepKind::lb;
  else if (kind == "le")
    step.kind = StepKind::le;
  else
    fail(ErrorCode::ParseError, "unknown step kind '" + kind + "'");
  auto a = s.find_label(text.substr(colon + 1, comma - colon - 1));
  auto b = s.find_label(text.substr(comma + 1));
  if (!a || !b) fail(ErrorCode::UnknownLabel, "step labels not in alphabet");
  step.alpha = *a;
  step.beta = *b;
  return step;
}

std::vector<InductionStep> applicable_steps(const Scheme& s) {
  std::vector<InductionStep> out;
  for (ExtIdx e = 0; e < s.ext_size(); ++e) {
    ExtIdx img = s.sigma(e);
    if (marker_of(e) == Marker::b && marker_of(img) == Marker::e) {
      LabelIdx alpha = label_of(e), beta = label_of(img);
      if (alpha != beta) {
        out.push_back({StepKind::rb, alpha, beta});
        out.push_back({StepKind::re, alpha, beta});
      }
    } else if (marker_of(e) == Marker::e && marker_of(img) == Marker::b) {
      LabelIdx beta = label_of(e), alpha = label_of(img);
      if (alpha != beta) {
        out.push_back({StepKind::lb, alpha, beta});
        out.push_back({StepKind::le, alpha, beta});
      }
    }
  }
  return out;
}

PositiveSteps applicable_positive_steps(const Scheme& s, const Lengths& v) {
  PositiveSteps out;
  for (const InductionStep& step : applicable_steps(s)) {
    if (v[step.alpha] == v[step.beta]) {
      std::pair<LabelIdx, LabelIdx> site{step.alpha, step.beta};
      if (out.ties.empty() || out.ties.back() != site) out.ties.push_back(site);
      continue;
    }
    bool crop_begin = step.kind == StepKind::rb || step.kind == StepKind::lb;
    if (crop_begin ? v[step.alpha] > v[step.beta] : v[step.alpha] < v[step.beta])
      out.steps.push_back(step);
  }
  return out;
}

// Checks the defining turn for the step and raises StepNotApplicable
// otherwise; returns true when the scheme is left unchanged.
static bool scheme_step_is_noop(const Scheme& s, const InductionStep& step) {
  if (step.alpha == step.beta)
    fail(ErrorCode::StepNotApplicable, "step labels must differ");
  ExtIdx ab = make_ext(step.alpha, Marker::b), ae = make_ext(step.alpha, Marker::e);
  ExtIdx bb = make_ext(step.beta, Marker::b), be = make_ext(step.beta, Marker::e);
  if (is_right_kind(step.kind)) {
    if (s.sigma(ab) != be)
      fail(ErrorCode::StepNotApplicable,
           "no turn back " + s.ext_name(ab) + " -> " + s.ext_name(be));
  } else {
    if (s.sigma(be) != ab)
      fail(ErrorCode::StepNotApplicable,
           "no turn forward " + s.ext_name(be) + " -> " + s.ext_name(ab));
  }
  switch (step.kind) {
    case StepKind::rb: return s.sigma(be) == ae;
    case StepKind::re: return s.sigma(bb) == ab;
    case StepKind::lb: return s.sigma(ae) == be;
    case StepKind::le: return s.sigma(ab) == bb;
  }
  return false;
}

Scheme apply_step_scheme(const Scheme& s, const InductionStep& step) {
  if (scheme_step_is_noop(s, step)) return s;
  ExtIdx ab = make_ext(step.alpha, Marker::b), ae = make_ext(step.alpha, Marker::e);
  ExtIdx bb = make_ext(step.beta, Marker::b), be = make_ext(step.beta, Marker::e);
  std::vector<ExtIdx> sig(s.ext_size());
  for (ExtIdx e = 0; e < s.ext_size(); ++e) sig[e] = s.sigma(e);
  switch (step.kind) {
    case StepKind::rb:  // beta.e leaves its slot and lands before alpha.e
      sig[ab] = s.sigma(be);
      sig[be] = ae;
      sig[s.sigma_inv(ae)] = be;
      break;
    case StepKind::re:  // alpha.b leaves its slot and lands after beta.b
      sig[s.sigma_inv(ab)] = be;
      sig[bb] = ab;
      sig[ab] = s.sigma(bb);
      break;
    case StepKind::lb:  // beta.e leaves its slot and lands after alpha.e
      sig[s.sigma_inv(be)] = ab;
      sig[ae] = be;
      sig[be] = s.sigma(ae);
      break;
    case StepKind::le:  // alpha.b leaves its slot and lands before beta.b
      sig[be] = s.sigma(ab);
      sig[ab] = bb;
      sig[s.sigma_inv(bb)] = ab;
      break;
  }
  std::vector<std::pair<ExtIdx, ExtIdx>> mapping;
  for (ExtIdx e = 0; e < s.ext_size(); ++e) mapping.emplace_back(e, sig[e]);
  return Scheme::make(s.alphabet(), mapping);
}

// Image-side condition satisfied by every result of the step; its failure
// means the given scheme cannot be the output of the step.
static void check_in_image(const Scheme& sp, const InductionStep& step) {
  if (step.alpha == step.beta) fail(ErrorCode::NotInImage, "step labels must differ");
  ExtIdx ab = make_ext(step.alpha, Marker::b), ae = make_ext(step.alpha, Marker::e);
  ExtIdx bb = make_ext(step.beta, Marker::b), be = make_ext(step.beta, Marker::e);
  bool ok = false;
  switch (step.kind) {
    case StepKind::rb: ok = sp.sigma(be) == ae; break;
    case StepKind::re: ok = sp.sigma(bb) == ab; break;
    case StepKind::lb: ok = sp.sigma(ae) == be; break;
    case StepKind::le: ok = sp.sigma(ab) == bb; break;
  }
  if (!ok)
    fail(ErrorCode::NotInImage, "scheme is not in the image of " +
                                    std::string(step_kind_name(step.kind)) + " at (" +
                                    sp.label_name(step.alpha) + "," +
                                    sp.label_name(step.beta) + ")");
}

static bool inverse_step_is_noop(const Scheme& sp, const InductionStep& step) {
  ExtIdx ab = make_ext(step.alpha, Marker::b);
  ExtIdx be = make_ext(step.beta, Marker::e);
  // The scheme-level no-op cases re-read from the output side.
  if (is_right_kind(step.kind)) return sp.sigma(ab) == be;
  return sp.sigma(be) == ab;
}

Scheme invert_step_scheme(const Scheme& sp, const InductionStep& step) {
  check_in_image(sp, step);
  if (inverse_step_is_noop(sp, step)) return sp;
  ExtIdx ab = make_ext(step.alpha, Marker::b), ae = make_ext(step.alpha, Marker::e);
  ExtIdx bb = make_ext(step.beta, Marker::b), be = make_ext(step.beta, Marker::e);
  std::vector<ExtIdx> sig(sp.ext_size());
  for (ExtIdx e = 0; e < sp.ext_size(); ++e) sig[e] = sp.sigma(e);
  switch (step.kind) {
    case StepKind::rb:
      sig[be] = sp.sigma(ab);
      sig[ab] = be;
      sig[sp.sigma_inv(be)] = ae;
      break;
    case StepKind::re:
      sig[sp.sigma_inv(be)] = ab;
      sig[ab] = be;
      sig[bb] = sp.sigma(ab);
      break;
    case StepKind::lb:
      sig[sp.sigma_inv(ab)] = be;
      sig[be] = ab;
      sig[ae] = sp.sigma(be);
      break;
    case StepKind::le:
      sig[ab] = sp.sigma(be);
      sig[be] = ab;
      sig[sp.sigma_inv(ab)] = bb;
      break;
  }
  std::vector<std::pair<ExtIdx, ExtIdx>> mapping;
  for (ExtIdx e = 0; e < sp.ext_size(); ++e) mapping.emplace_back(e, sig[e]);
  return Scheme::make(sp.alphabet(), mapping);
}

SchemeEndpoints apply_step(const Scheme& s, const Endpoints& x, const InductionStep& step) {
  Lengths v = lengths_from_endpoints(s, x);
  SchemeEndpoints out{apply_step_scheme(s, step), x};
  ExtIdx ab = make_ext(step.alpha, Marker::b), ae = make_ext(step.alpha, Marker::e);
  ExtIdx bb = make_ext(step.beta, Marker::b), be = make_ext(step.beta, Marker::e);
  switch (step.kind) {
    case StepKind::rb:
      out.x[be] = x[ae];
      out.x[ae] = x[ae] - v[step.beta];
      break;
    case StepKind::re:
      out.x[be] = x[ab];
      out.x[ab] = x[s.sigma(bb)] - v[step.alpha];
      break;
    case StepKind::lb:
      out.x[ab] = x[be];
      out.x[be] = x[s.sigma(ae)] + v[step.beta];
      break;
    case StepKind::le:
      out.x[ab] = x[bb];
      out.x[bb] = x[bb] + v[step.alpha];
      break;
  }
  if (!in_endpoint_space(out.scheme, out.x))
    fail(ErrorCode::InternalInvariantViolation, "step output left the endpoint space");
  return out;
}

SchemeLengths apply_step_lengths(const Scheme& s, const Lengths& v,
                                 const InductionStep& step) {
  if (!in_length_space(s, v))
    fail(ErrorCode::NotInLengthSpace, "lengths incompatible with the scheme");
  SchemeLengths out{apply_step_scheme(s, step), v};
  if (step.kind == StepKind::rb || step.kind == StepKind::lb)
    out.v[step.alpha] = v[step.alpha] - v[step.beta];
  else
    out.v[step.beta] = v[step.beta] - v[step.alpha];
  if (!in_length_space(out.scheme, out.v))
    fail(ErrorCode::InternalInvariantViolation, "step output left the length space");
  return out;
}

SchemeEndpoints invert_step(const Scheme& sp, const Endpoints& xp,
                            const InductionStep& step) {
  Lengths vp = lengths_from_endpoints(sp, xp);
  SchemeEndpoints out{invert_step_scheme(sp, step), xp};
  ExtIdx ab = make_ext(step.alpha, Marker::b), ae = make_ext(step.alpha, Marker::e);
  ExtIdx bb = make_ext(step.beta, Marker::b), be = make_ext(step.beta, Marker::e);
  switch (step.kind) {
    case StepKind::rb:
      out.x[ae] = xp[be];
      out.x[be] = xp[sp.sigma(ab)] + vp[step.beta];
      break;
    case StepKind::re:
      out.x[ab] = xp[be];
      out.x[be] = xp[be] + vp[step.alpha];
      break;
    case StepKind::lb:
      out.x[be] = xp[ab];
      out.x[ab] = xp[ab] - vp[step.beta];
      break;
    case StepKind::le:
      out.x[bb] = xp[ab];
      out.x[ab] = xp[be] - vp[step.beta] - vp[step.alpha];
      break;
  }
  if (!in_endpoint_space(out.scheme, out.x))
    fail(ErrorCode::InternalInvariantViolation, "inverse step output left the endpoint space");
  return out;
}

SchemeLengths invert_step_lengths(const Scheme& sp, const Lengths& vp,
                                  const InductionStep& step) {
  if (!in_length_space(sp, vp))
    fail(ErrorCode::NotInLengthSpace, "lengths incompatible with the scheme");
  SchemeLengths out{invert_step_scheme(sp, step), vp};
  if (step.kind == StepKind::rb || step.kind == StepKind::lb)
    out.v[step.alpha] = vp[step.alpha] + vp[step.beta];
  else
    out.v[step.beta] = vp[step.beta] + vp[step.alpha];
  if (!in_length_space(out.scheme, out.v))
    fail(ErrorCode::InternalInvariantViolation, "inverse step output left the length space");
  return out;
}

// ---- Two-row oracles ----

std::vector<std::string> two_row_alphabet(const TwoRowIET& t) {
  std::vector<std::string> alphabet;
  for (const auto& br : t.brackets)
    for (const auto& name : br.upper)
      if (std::find(alphabet.begin(), alphabet.end(), name) == alphabet.end())
        alphabet.push_back(name);
  return alphabet;
}

ClassicalStepResult classical_rv_step(const TwoRowIET& t, const Lengths& v) {
  if (t.brackets.size() != 1)
    fail(ErrorCode::MalformedTwoRow, "classical step needs a single bracket");
  auto alphabet = two_row_alphabet(t);
  auto index = [&](const std::string& name) {
    return static_cast<size_t>(std::find(alphabet.begin(), alphabet.end(), name) -
                               alphabet.begin());
  };
  ClassicalStepResult out{t, v};
  auto& upper = out.t.brackets[0].upper;
  auto& lower = out.t.brackets[0].lower;
  if (upper.size() < 2 || lower.size() < 2)
    fail(ErrorCode::MalformedTwoRow, "classical step needs at least two labels");
  size_t iu = index(upper.back()), il = index(lower.back());
  if (v[iu] == v[il]) fail(ErrorCode::TieDetected, "rightmost subintervals have equal length");
  if (v[iu] > v[il]) {
    // Upper (beginning) side wins: the losing ending label is re-slotted in
    // the lower row right after the winner's position there.
    std::string loser = lower.back();
    lower.pop_back();
    auto pos = std::find(lower.begin(), lower.end(), alphabet[iu]);
    lower.insert(pos + 1, loser);
    out.v[iu] = v[iu] - v[il];
  } else {
    std::string loser = upper.back();
    upper.pop_back();
    auto pos = std::find(upper.begin(), upper.end(), alphabet[il]);
    upper.insert(pos + 1, loser);
    out.v[il] = v[il] - v[iu];
  }
  return out;
}

CropStepResult two_row_crop_step(const TwoRowIET& t, const Lengths& v, const RatVec& A,
                                 const InductionStep& step) {
  auto alphabet = two_row_alphabet(t);
  if (v.size() != alphabet.size() || A.size() != t.brackets.size())
    fail(ErrorCode::MalformedTwoRow, "lengths or left endpoints have wrong width");
  const std::string& an = alphabet[step.alpha];
  const std::string& bn = alphabet[step.beta];
  CropStepResult out{t, v, A};
  auto& brs = out.t.brackets;
  // Locate the bracket carrying the defining turn: for right crops alpha
  // ends the upper row and beta the lower; for left crops they start them.
  int site = -1;
  for (size_t i = 0; i < brs.size(); ++i) {
    bool hit = is_right_kind(step.kind)
                   ? (brs[i].upper.back() == an && brs[i].lower.back() == bn)
                   : (brs[i].upper.front() == an && brs[i].lower.front() == bn);
    if (hit) {
      site = static_cast<int>(i);
      break;
    }
  }
  if (site < 0)
    fail(ErrorCode::StepNotApplicable,
         "no bracket with the required turn for " + std::string(step_kind_name(step.kind)));
  if (v[step.alpha] == v[step.beta])
    fail(ErrorCode::TieDetected, "crop with equal lengths");
  bool crop_begin = step.kind == StepKind::rb || step.kind == StepKind::lb;
  if (crop_begin ? v[step.alpha] < v[step.beta] : v[step.alpha] > v[step.beta])
    fail(ErrorCode::StepNotApplicable, "length inequality points the other way");
  auto move = [&](bool in_upper, const std::string& moved, const std::string& target,
                  int offset) {
    for (auto& br : brs) {
      auto& row = in_upper ? br.upper : br.lower;
      auto it = std::find(row.begin(), row.end(), moved);
      if (it != row.end()) {
        if (row.size() == 1)
          fail(ErrorCode::StepNotApplicable, "crop would empty a row");
        row.erase(it);
        break;
      }
    }
    for (auto& br : brs) {
      auto& row = in_upper ? br.upper : br.lower;
      auto it = std::find(row.begin(), row.end(), target);
      if (it != row.end()) {
        row.insert(it + offset, moved);
        return;
      }
    }
    fail(ErrorCode::InternalInvariantViolation, "crop target vanished");
  };
  switch (step.kind) {
    case StepKind::rb:  // beta moves right after alpha's ending position
      move(false, bn, an, 1);
      out.v[step.alpha] = v[step.alpha] - v[step.beta];
      break;
    case StepKind::re:  // alpha moves right after beta's beginning position
      move(true, an, bn, 1);
      out.v[step.beta] = v[step.beta] - v[step.alpha];
      break;
    case StepKind::lb:  // beta moves right before alpha's ending position
      move(false, bn, an, 0);
      out.v[step.alpha] = v[step.alpha] - v[step.beta];
      out.A[site] = A[site] + v[step.beta];
      break;
    case StepKind::le:  // alpha moves right before beta's beginning position
      move(true, an, bn, 0);
      out.v[step.beta] = v[step.beta] - v[step.alpha];
      out.A[site] = A[site] + v[step.alpha];
      break;
  }
  return out;
}

// ---- Rauzy classes ----

static std::string canonical_text(const Scheme& s) {
  std::string out;
  for (const auto& cyc : cycles(s).cycles) {
    out += "(";
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += " ";
      out += s.ext_name(cyc[i]);
    }
    out += ")";
  }
  return out;
}

RauzyClass rauzy_class(const Scheme& seed, int max_size) {
  RauzyClass out;
  std::map<std::string, int> id_of;
  std::set<std::string> pending;
  auto intern = [&](const Scheme& s) -> int {
    std::string key = canonical_text(s);
    auto it = id_of.find(key);
    if (it != id_of.end()) return it->second;
    if (static_cast<int>(out.schemes.size()) >= max_size) {
      out.truncated = true;
      return -1;
    }
    int id = static_cast<int>(out.schemes.size());
    id_of.emplace(key, id);
    out.schemes.push_back(s);
    pending.insert(key);
    return id;
  };
  intern(seed);
  while (!pending.empty()) {
    std::string key = *pending.begin();
    pending.erase(pending.begin());
    int from = id_of.at(key);
    Scheme s = out.schemes[from];
    for (const InductionStep& step : applicable_steps(s)) {
      int to = intern(apply_step_scheme(s, step));
      if (to >= 0) out.edges.push_back({from, step, to});
    }
    // Predecessors: every step literal whose image condition holds here.
    for (StepKind k : {StepKind::rb, StepKind::re, StepKind::lb, StepKind::le}) {
      for (LabelIdx a = 0; a < s.d(); ++a) {
        for (LabelIdx b = 0; b < s.d(); ++b) {
          if (a == b) continue;
          try {
            intern(invert_step_scheme(s, {k, a, b}));
          } catch (const Error& err) {
            if (err.code() != ErrorCode::NotInImage) throw;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace ire
