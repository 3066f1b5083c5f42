#include "ire/gluing.hpp"

#include <algorithm>
#include <set>

#include "ire/error.hpp"

namespace ire {

namespace {

struct Piece {
  ExtIdx ext;
  Rat lo, hi;
};

struct Seg {
  bool increasing;   // beginning-point run
  Rat lo, hi;
  ExtIdx start_site; // chain vertex at the traversal start of the run
  std::vector<Piece> pieces;  // ascending, tiling [lo, hi]
};

// Runs of one cycle in chain order, starting with the run that contains the
// cycle's canonical first element.
std::vector<Seg> build_runs(const Scheme& s, const Endpoints& x,
                            const std::vector<ExtIdx>& cyc) {
  const size_t n = cyc.size();
  Marker m0 = marker_of(cyc[0]);
  bool mixed = false;
  for (ExtIdx e : cyc)
    if (marker_of(e) != m0) mixed = true;
  if (!mixed)
    fail(ErrorCode::DegenerateCycle,
         "cycle through " + s.ext_name(cyc[0]) + " has no turns");
  size_t start = 0;
  while (marker_of(cyc[(start + n - 1) % n]) == marker_of(cyc[start]))
    start = (start + n - 1) % n;
  std::vector<Seg> segs;
  size_t i = 0;
  while (i < n) {
    std::vector<ExtIdx> run;
    Marker m = marker_of(cyc[(start + i) % n]);
    while (i < n && marker_of(cyc[(start + i) % n]) == m)
      run.push_back(cyc[(start + i++) % n]);
    Seg seg;
    seg.increasing = m == Marker::b;
    seg.start_site = run.front();
    if (seg.increasing) {
      seg.lo = x[run.front()];
      seg.hi = x[s.sigma(run.back())];
      for (ExtIdx e : run) seg.pieces.push_back({e, x[e], x[s.sigma(e)]});
    } else {
      seg.hi = x[run.front()];
      seg.lo = x[s.sigma(run.back())];
      for (auto it = run.rbegin(); it != run.rend(); ++it)
        seg.pieces.push_back({*it, x[s.sigma(*it)], x[*it]});
    }
    for (const Piece& p : seg.pieces)
      if (!(p.lo < p.hi))
        fail(ErrorCode::InternalInvariantViolation, "non-increasing run piece");
    segs.push_back(std::move(seg));
  }
  // Alternation and shared endpoints between consecutive segments.
  for (size_t j = 0; j < segs.size(); ++j) {
    const Seg& a = segs[j];
    const Seg& b = segs[(j + 1) % segs.size()];
    Rat a_end = a.increasing ? a.hi : a.lo;
    Rat b_begin = b.increasing ? b.lo : b.hi;
    if (a.increasing == b.increasing || a_end != b_begin)
      fail(ErrorCode::InternalInvariantViolation, "turn chain does not close");
  }
  return segs;
}

std::vector<Piece> restrict_pieces(const std::vector<Piece>& pieces, const Rat& lo,
                                   const Rat& hi) {
  std::vector<Piece> out;
  for (const Piece& p : pieces) {
    Rat a = std::max(p.lo, lo), b = std::min(p.hi, hi);
    if (a < b) out.push_back({p.ext, a, b});
  }
  return out;
}

// Overlays two piece tilings of the same range and emits one pairing per
// elementary subinterval; one side must carry beginning pieces, the other
// ending pieces.
void emit_match(const std::vector<Piece>& a, const std::vector<Piece>& b,
                std::vector<GluedTree::Pairing>& out) {
  if (a.empty() && b.empty()) return;
  if (a.empty() || b.empty() || a.front().lo != b.front().lo ||
      a.back().hi != b.back().hi)
    fail(ErrorCode::InternalInvariantViolation, "matched ranges disagree");
  size_t i = 0, j = 0;
  Rat cur = a.front().lo;
  while (i < a.size() && j < b.size()) {
    Rat next = std::min(a[i].hi, b[j].hi);
    ExtIdx ea = a[i].ext, eb = b[j].ext;
    if (marker_of(ea) == marker_of(eb))
      fail(ErrorCode::InternalInvariantViolation, "matched runs of equal kind");
    if (marker_of(ea) == Marker::e) std::swap(ea, eb);
    out.push_back({ea, eb, cur, next});
    if (a[i].hi == next) ++i;
    if (b[j].hi == next) ++j;
    cur = next;
  }
  if (i != a.size() || j != b.size())
    fail(ErrorCode::InternalInvariantViolation, "matched tilings misaligned");
}

}  // namespace

TurnChain turn_chain(const Scheme& s, const Endpoints& x, int cycle_index) {
  IreValidation val = validate_ire(s, x);
  if (!val.positive) fail(ErrorCode::NotPositive, "lengths are not all positive");
  auto dec = cycles(s);
  if (cycle_index < 0 || cycle_index >= dec.N())
    fail(ErrorCode::UnknownLabel, "cycle index out of range");
  TurnChain chain;
  chain.cycle = cycle_index;
  for (const Seg& seg : build_runs(s, x, dec.cycles[cycle_index]))
    chain.vertices.push_back({seg.start_site, seg.increasing ? seg.lo : seg.hi});
  return chain;
}

GluedTree glue_ire(const Scheme& s, const Endpoints& x, const BranchRule& rule) {
  IreValidation val = validate_ire(s, x);
  if (!val.positive) fail(ErrorCode::NotPositive, "lengths are not all positive");
  GluedTree tree{s, x, {}, {}};
  size_t next_explicit = 0;
  struct Seed {
    int cycle;
    Rat coord;
    ExtIdx ext;
  };
  std::vector<Seed> seeds;
  auto dec = cycles(s);
  for (int ci = 0; ci < dec.N(); ++ci) {
    const auto& cyc = dec.cycles[ci];
    std::vector<Seg> chain = build_runs(s, x, cyc);
    // Tie-break rank: position along the cycle from the minimal
    // turn-forward site.
    std::vector<int> pos(s.ext_size(), -1);
    for (size_t k = 0; k < cyc.size(); ++k) pos[cyc[k]] = static_cast<int>(k);
    ExtIdx min_tf = -1;
    for (const Seg& seg : chain)
      if (seg.increasing && (min_tf < 0 || seg.start_site < min_tf))
        min_tf = seg.start_site;
    auto rank = [&](ExtIdx site) {
      int n = static_cast<int>(cyc.size());
      return (pos[site] - pos[min_tf] + n) % n;
    };
    while (chain.size() > 2) {
      size_t best = 0;
      for (size_t i = 1; i < chain.size(); ++i) {
        Rat li = chain[i].hi - chain[i].lo, lb = chain[best].hi - chain[best].lo;
        if (li < lb || (li == lb && rank(chain[i].start_site) < rank(chain[best].start_site)))
          best = i;
      }
      const size_t n = chain.size();
      size_t prev = (best + n - 1) % n, next = (best + 1) % n;
      size_t lo_n = chain[best].increasing ? prev : next;
      size_t hi_n = chain[best].increasing ? next : prev;
      const Seg& S = chain[best];
      Rat c;
      switch (rule.kind) {
        case BranchRule::Kind::Midpoint: c = (S.lo + S.hi) / 2; break;
        case BranchRule::Kind::LowEndpoint: c = S.lo; break;
        case BranchRule::Kind::Explicit:
          if (next_explicit >= rule.coords.size())
            fail(ErrorCode::ExplicitBranchOutOfRange,
                 "fewer explicit branch coordinates than reduction rounds");
          c = rule.coords[next_explicit++];
          if (c < S.lo || c > S.hi)
            fail(ErrorCode::ExplicitBranchOutOfRange,
                 format_rational(c) + " is outside [" + format_rational(S.lo) + ", " +
                     format_rational(S.hi) + "]");
          break;
      }
      // The shortest segment fits inside both neighbors, so both halves can
      // be matched entirely.
      emit_match(restrict_pieces(S.pieces, S.lo, c),
                 restrict_pieces(chain[lo_n].pieces, S.lo, c), tree.pairings);
      emit_match(restrict_pieces(S.pieces, c, S.hi),
                 restrict_pieces(chain[hi_n].pieces, c, S.hi), tree.pairings);
      for (const Piece& p : S.pieces)
        if (p.lo <= c && c <= p.hi) {
          seeds.push_back({ci, c, p.ext});
          break;
        }
      Seg merged;
      merged.increasing = !S.increasing;
      merged.lo = chain[hi_n].lo;
      merged.hi = chain[lo_n].hi;
      merged.start_site =
          S.increasing ? chain[lo_n].start_site : chain[hi_n].start_site;
      merged.pieces = restrict_pieces(chain[hi_n].pieces, chain[hi_n].lo, c);
      for (Piece& p : restrict_pieces(chain[lo_n].pieces, c, chain[lo_n].hi))
        merged.pieces.push_back(p);
      std::vector<Seg> reduced;
      // Keep chain order: the merged segment replaces prev,best,next.
      for (size_t i = 0; i < n; ++i) {
        if (i == best || i == next) continue;
        if (i == prev)
          reduced.push_back(merged);
        else
          reduced.push_back(chain[i]);
      }
      chain = std::move(reduced);
    }
    if (chain[0].lo != chain[1].lo || chain[0].hi != chain[1].hi ||
        chain[0].increasing == chain[1].increasing)
      fail(ErrorCode::InternalInvariantViolation, "final chain is not a back-and-forth pair");
    emit_match(chain[0].pieces, chain[1].pieces, tree.pairings);
  }
  // Branch meeting sets: closure of the seed label through all pairings
  // whose closed range contains the branch coordinate.
  for (const Seed& seed : seeds) {
    std::set<ExtIdx> meeting{seed.ext};
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& p : tree.pairings) {
        if (p.lo > seed.coord || seed.coord > p.hi) continue;
        bool has_from = meeting.count(p.from) > 0, has_to = meeting.count(p.to) > 0;
        if (has_from != has_to) {
          meeting.insert(has_from ? p.to : p.from);
          grew = true;
        }
      }
    }
    tree.branch_points.push_back(
        {seed.cycle, seed.coord, std::vector<ExtIdx>(meeting.begin(), meeting.end())});
  }
  std::sort(tree.branch_points.begin(), tree.branch_points.end(),
            [](const auto& a, const auto& b) {
              return a.cycle != b.cycle ? a.cycle < b.cycle : a.coord < b.coord;
            });
  std::sort(tree.pairings.begin(), tree.pairings.end(), [](const auto& a, const auto& b) {
    if (a.from != b.from) return a.from < b.from;
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.to < b.to;
  });
  return tree;
}

std::vector<std::pair<ExtIdx, Rat>> tree_map_eval(const GluedTree& t, ExtIdx start,
                                                  const Rat& q) {
  const Scheme& s = t.scheme;
  if (start < 0 || start >= s.ext_size() || marker_of(start) != Marker::b)
    fail(ErrorCode::PointOutsideInterval, "evaluation point must name a beginning interval");
  ExtIdx sb = start;
  if (q < t.x[sb] || q > t.x[s.sigma(sb)])
    fail(ErrorCode::PointOutsideInterval,
         format_rational(q) + " is not in " + s.ext_name(sb) + "'s interval");
  std::set<ExtIdx> cls{sb};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& p : t.pairings) {
      if (p.lo > q || q > p.hi) continue;
      bool has_from = cls.count(p.from) > 0, has_to = cls.count(p.to) > 0;
      if (has_from != has_to) {
        cls.insert(has_from ? p.to : p.from);
        grew = true;
      }
    }
  }
  std::vector<std::pair<ExtIdx, Rat>> images;
  for (ExtIdx e : cls) {
    if (marker_of(e) != Marker::b) continue;
    ExtIdx ee = flip_marker(e);
    images.emplace_back(ee, t.x[s.sigma(ee)] + (q - t.x[e]));
  }
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

}  // namespace ire
