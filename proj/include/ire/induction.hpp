#pragma once

#include <string>
#include <vector>

#include "ire/real_data.hpp"
#include "ire/scheme.hpp"

namespace ire {

enum class StepKind { rb, re, lb, le };

const char* step_kind_name(StepKind k);

/// One elementary induction step. rb/re are defined at a turn back
/// sigma(alpha.b) = beta.e; lb/le at a turn forward sigma(beta.e) = alpha.b.
/// alpha != beta always.
struct InductionStep {
  StepKind kind;
  LabelIdx alpha;
  LabelIdx beta;

  bool operator==(const InductionStep&) const = default;
};

std::string format_step(const Scheme& s, const InductionStep& step);
/// Parses "rb:a,b" style literals against the scheme's alphabet.
InductionStep parse_step(const Scheme& s, const std::string& text);

std::vector<InductionStep> applicable_steps(const Scheme& s);

struct PositiveSteps {
  std::vector<InductionStep> steps;
  // Turn sites where v_alpha = v_beta; no step there is defined.
  std::vector<std::pair<LabelIdx, LabelIdx>> ties;
};

/// Keeps rb/lb where v_alpha > v_beta and re/le where v_alpha < v_beta;
/// equal lengths are reported as ties.
PositiveSteps applicable_positive_steps(const Scheme& s, const Lengths& v);

Scheme apply_step_scheme(const Scheme& s, const InductionStep& step);
Scheme invert_step_scheme(const Scheme& s_prime, const InductionStep& step);

struct SchemeEndpoints {
  Scheme scheme;
  Endpoints x;
};
struct SchemeLengths {
  Scheme scheme;
  Lengths v;
};

SchemeEndpoints apply_step(const Scheme& s, const Endpoints& x, const InductionStep& step);
SchemeLengths apply_step_lengths(const Scheme& s, const Lengths& v, const InductionStep& step);

SchemeEndpoints invert_step(const Scheme& s_prime, const Endpoints& x_prime,
                            const InductionStep& step);
SchemeLengths invert_step_lengths(const Scheme& s_prime, const Lengths& v_prime,
                                  const InductionStep& step);

// ---- Oracles on two-row data ----

/// Classical single-interval Rauzy-Veech step: compares the rightmost
/// beginning and ending subintervals and crops the longer one. Lengths are
/// indexed by the order labels first appear in the upper row.
struct ClassicalStepResult {
  TwoRowIET t;
  Lengths v;
};
ClassicalStepResult classical_rv_step(const TwoRowIET& t, const Lengths& v);

/// Label order used for length vectors attached to a two-row IET.
std::vector<std::string> two_row_alphabet(const TwoRowIET& t);

/// Multi-interval crop step acting on (two-row data, lengths, left
/// endpoints A). `step` is given in scheme-step naming; the matching
/// two-row crop is performed.
struct CropStepResult {
  TwoRowIET t;
  Lengths v;
  RatVec A;
};
CropStepResult two_row_crop_step(const TwoRowIET& t, const Lengths& v, const RatVec& A,
                                 const InductionStep& step);

// ---- Rauzy classes ----

struct RauzyClass {
  std::vector<Scheme> schemes;  // in BFS discovery order
  struct Edge {
    int from;
    InductionStep step;
    int to;
  };
  std::vector<Edge> edges;  // forward steps, self-loops included
  bool truncated = false;
};

/// BFS closure of the seed under applicable steps and inverse steps,
/// de-duplicated by canonical text, frontier processed in lexicographic
/// order. Stops (with the truncated flag) once max_size schemes are known.
RauzyClass rauzy_class(const Scheme& seed, int max_size);

}  // namespace ire
