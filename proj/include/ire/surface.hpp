#pragma once

#include <string>
#include <vector>

#include "ire/extension.hpp"
#include "ire/gluing.hpp"

namespace ire {

enum class Side { Bottom, Top, Left, Right };

const char* side_name(Side s);

/// Rigid identification between two rectangle side segments, ranges in the
/// side's own coordinate (0 at the rectangle corner).
struct SideGluing {
  LabelIdx from;
  Side from_side;
  Rat from_lo, from_hi;
  LabelIdx to;
  Side to_side;
  Rat to_lo, to_hi;
};

/// Flat surface from d rectangles v_l x w_l, horizontal sides glued along
/// the tree of (scheme, x), vertical sides along the tree of (dual, y).
struct ZipperedSurface {
  Scheme scheme;
  Endpoints x, y;
  Lengths v, w;
  GluedTree h_tree;  // tree of (scheme, x): bottom/top gluing
  GluedTree v_tree;  // tree of (dual(scheme), y): left/right gluing
  std::vector<SideGluing> horizontal;
  std::vector<SideGluing> vertical;
  struct ConePoint {
    int k;                              // angle = 2(k+1)pi, k >= 1
    std::vector<std::string> corners;   // member points, "label:side:coord"
  };
  std::vector<ConePoint> cone_points;
  int V = 0, E = 0, F = 0, chi = 0;
  int genus = 0;
};

ZipperedSurface build_surface(const NaturalExtension& e, const BranchRule& rule_h = {},
                              const BranchRule& rule_v = {});

struct FirstReturnReport {
  int passed = 0;
  int failed = 0;
  int skipped = 0;  // samples landing on branch coordinates
  std::vector<std::string> failures;
};

/// Flows sample points vertically (resp. horizontally) through the
/// rectangle identifications and compares the landing with the tree map.
FirstReturnReport first_return_check(const ZipperedSurface& surf, int samples);

/// Static net of the rectangles with identification labels.
std::string surface_svg(const ZipperedSurface& surf);

}  // namespace ire
