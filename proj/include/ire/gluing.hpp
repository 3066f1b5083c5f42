#pragma once

#include <vector>

#include "ire/real_data.hpp"
#include "ire/scheme.hpp"

namespace ire {

/// The closed polygonal chain of turning points of one cycle: coordinates
/// rise along beginning-point runs and fall along ending-point runs.
struct TurnChain {
  int cycle = 0;
  struct Vertex {
    ExtIdx site;  // alternating turn-forward (b) and turn-back (e) sites
    Rat coord;
  };
  std::vector<Vertex> vertices;  // cyclic, 2(t+1) entries for t twists
};

TurnChain turn_chain(const Scheme& s, const Endpoints& x, int cycle_index);

/// How to choose the branch coordinate on the shortest chain segment.
struct BranchRule {
  enum class Kind { Midpoint, LowEndpoint, Explicit };
  Kind kind = Kind::Midpoint;
  std::vector<Rat> coords;  // Explicit only; consumed in reduction order
};

struct GluedTree {
  Scheme scheme;
  Endpoints x;
  struct BranchPoint {
    int cycle;
    Rat coord;
    std::vector<ExtIdx> meeting;  // labels whose interval passes through
  };
  std::vector<BranchPoint> branch_points;  // sorted by (cycle, coord)
  /// A rigid identification of a beginning subinterval with an ending
  /// subinterval at identical coordinates.
  struct Pairing {
    ExtIdx from;  // b-marked
    ExtIdx to;    // e-marked
    Rat lo, hi;
  };
  std::vector<Pairing> pairings;  // sorted by (from, lo)
};

GluedTree glue_ire(const Scheme& s, const Endpoints& x, const BranchRule& rule = {});

/// Image of the tree point (start, q) under the interval exchange on the
/// glued tree: one (ending label, coordinate) per beginning interval in the
/// equivalence class of the point. Singleton off branch points.
std::vector<std::pair<ExtIdx, Rat>> tree_map_eval(const GluedTree& t, ExtIdx start,
                                                  const Rat& q);

}  // namespace ire
