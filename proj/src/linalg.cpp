#include "ire/linalg.hpp"

#include <algorithm>

#include "ire/error.hpp"

namespace ire {

int rref(RatMat& m, std::vector<int>* pivots) {
  if (pivots) pivots->clear();
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    Rat inv = m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] /= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

int rank(RatMat m) { return rref(m); }

RatMat kernel_basis(const RatMat& m, int cols) {
  RatMat a = m;
  std::vector<int> pivots;
  int r = a.empty() ? 0 : rref(a, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  RatMat basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rat(0));
    v[free] = 1;
    for (int i = 0; i < r; ++i) v[pivots[i]] = -a[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat row_space_basis(RatMat vectors) {
  int r = rref(vectors);
  vectors.resize(r);
  return vectors;
}

RatVec mat_apply(const RatMat& m, const RatVec& v) {
  RatVec out(m.size(), Rat(0));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

std::optional<RatVec> fm_feasible(const RatMat& m, const RatVec& rhs) {
  const int vars = m.empty() ? 0 : static_cast<int>(m[0].size());
  // Constraint rows kept as (coefficients, bound): coeffs . t >= bound.
  struct Cons {
    RatVec a;
    Rat b;
  };
  std::vector<Cons> cur;
  for (size_t i = 0; i < m.size(); ++i) cur.push_back({m[i], rhs[i]});
  // Eliminate the last variable first; remember each stage's constraints
  // for back-substitution.
  std::vector<std::vector<Cons>> stages;
  for (int v = vars - 1; v >= 0; --v) {
    stages.push_back(cur);
    std::vector<Cons> next;
    std::vector<const Cons*> pos, neg;
    for (const Cons& c : cur) {
      if (c.a[v] > 0)
        pos.push_back(&c);
      else if (c.a[v] < 0)
        neg.push_back(&c);
      else
        next.push_back(c);
    }
    // a_p.t >= b_p with a_p[v]>0 gives t_v >= lower; a_n[v]<0 gives
    // t_v <= upper; pair every lower with every upper.
    for (const Cons* p : pos) {
      for (const Cons* n : neg) {
        Cons combined;
        combined.a.assign(vars, Rat(0));
        Rat cp = p->a[v], cn = -n->a[v];
        for (int j = 0; j < vars; ++j)
          combined.a[j] = p->a[j] * cn + n->a[j] * cp;
        combined.b = p->b * cn + n->b * cp;
        combined.a[v] = 0;
        next.push_back(std::move(combined));
      }
    }
    cur = std::move(next);
  }
  for (const Cons& c : cur)
    if (c.b > 0) return std::nullopt;  // 0 >= b with b > 0
  // Back-substitute, tightest bounds first.
  RatVec t(vars, Rat(0));
  for (int v = 0; v < vars; ++v) {
    const auto& stage = stages[vars - 1 - v];
    bool has_lo = false, has_hi = false;
    Rat lo, hi;
    for (const Cons& c : stage) {
      if (c.a[v] == 0) continue;
      Rat rest = c.b;
      for (int j = 0; j < vars; ++j)
        if (j != v) rest -= c.a[j] * t[j];
      Rat bound = rest / c.a[v];
      if (c.a[v] > 0) {
        if (!has_lo || bound > lo) lo = bound, has_lo = true;
      } else {
        if (!has_hi || bound < hi) hi = bound, has_hi = true;
      }
    }
    if (has_lo && has_hi)
      t[v] = (lo + hi) / 2;
    else if (has_lo)
      t[v] = lo + 1;
    else if (has_hi)
      t[v] = hi - 1;
  }
  return t;
}

}  // namespace ire
