#include "ire/real_data.hpp"

#include "ire/error.hpp"

namespace ire {

RatMat delta_matrix(const Scheme& s) {
  RatMat m(s.d(), RatVec(s.ext_size(), Rat(0)));
  for (LabelIdx a = 0; a < s.d(); ++a) {
    ExtIdx ab = make_ext(a, Marker::b), ae = make_ext(a, Marker::e);
    m[a][ab] += 1;
    m[a][ae] += 1;
    m[a][s.sigma(ab)] -= 1;
    m[a][s.sigma(ae)] -= 1;
  }
  return m;
}

Basis endpoint_space_basis(const Scheme& s) {
  Basis b;
  b.vectors = row_space_basis(kernel_basis(delta_matrix(s), s.ext_size()));
  int expected = s.d() + irreducible_components(s).P();
  if (b.dim() != expected)
    fail(ErrorCode::InternalInvariantViolation,
         "dim X = " + std::to_string(b.dim()) + ", expected " + std::to_string(expected));
  return b;
}

static Lengths length_map(const Scheme& s, const Endpoints& x) {
  Lengths v(s.d());
  for (LabelIdx a = 0; a < s.d(); ++a) {
    ExtIdx ab = make_ext(a, Marker::b);
    v[a] = x[s.sigma(ab)] - x[ab];
  }
  return v;
}

Basis length_space_basis(const Scheme& s) {
  RatMat images;
  for (const RatVec& xb : endpoint_space_basis(s).vectors)
    images.push_back(length_map(s, xb));
  Basis b;
  b.vectors = row_space_basis(std::move(images));
  int expected = s.d() + irreducible_components(s).P() - cycles(s).N();
  if (b.dim() != expected)
    fail(ErrorCode::InternalInvariantViolation,
         "dim V = " + std::to_string(b.dim()) + ", expected " + std::to_string(expected));
  return b;
}

bool in_endpoint_space(const Scheme& s, const Endpoints& x) {
  if (static_cast<int>(x.size()) != s.ext_size()) return false;
  for (LabelIdx a = 0; a < s.d(); ++a) {
    ExtIdx ab = make_ext(a, Marker::b), ae = make_ext(a, Marker::e);
    if (x[s.sigma(ab)] - x[ab] != x[ae] - x[s.sigma(ae)]) return false;
  }
  return true;
}

bool in_length_space(const Scheme& s, const Lengths& v) {
  if (static_cast<int>(v.size()) != s.d()) return false;
  for (const auto& cyc : cycles(s).cycles) {
    Rat sum = 0;
    for (ExtIdx e : cyc)
      sum += (marker_of(e) == Marker::b) ? v[label_of(e)] : -v[label_of(e)];
    if (sum != 0) return false;
  }
  return true;
}

Lengths lengths_from_endpoints(const Scheme& s, const Endpoints& x) {
  if (!in_endpoint_space(s, x))
    fail(ErrorCode::NotInEndpointSpace, "the two length expressions disagree");
  return length_map(s, x);
}

Endpoints endpoints_from_lengths(const Scheme& s, const Lengths& v,
                                 const std::map<int, std::pair<ExtIdx, Rat>>& anchors) {
  if (static_cast<int>(v.size()) != s.d())
    fail(ErrorCode::NotInLengthSpace, "length vector has wrong width");
  auto dec = cycles(s);
  if (static_cast<int>(anchors.size()) != dec.N())
    fail(anchors.size() < static_cast<size_t>(dec.N()) ? ErrorCode::MissingAnchor
                                                       : ErrorCode::DuplicateAnchor,
         "need exactly one anchor per cycle");
  auto idx = cycle_index_of(s);
  Endpoints x(s.ext_size());
  for (int i = 0; i < dec.N(); ++i) {
    auto it = anchors.find(i);
    if (it == anchors.end())
      fail(ErrorCode::MissingAnchor, "no anchor for cycle " + std::to_string(i));
    auto [start, value] = it->second;
    if (idx[start] != i)
      fail(ErrorCode::MissingAnchor,
           s.ext_name(start) + " is not in cycle " + std::to_string(i));
    ExtIdx cur = start;
    Rat coord = value;
    do {
      x[cur] = coord;
      coord += (marker_of(cur) == Marker::b) ? v[label_of(cur)] : -v[label_of(cur)];
      cur = s.sigma(cur);
    } while (cur != start);
    if (coord != value)
      fail(ErrorCode::NotInLengthSpace,
           "cycle " + std::to_string(i) + " does not close");
  }
  return x;
}

IreValidation validate_ire(const Scheme& s, const Endpoints& x) {
  IreValidation out;
  out.v = lengths_from_endpoints(s, x);
  out.positive = true;
  for (const Rat& len : out.v)
    if (len <= 0) out.positive = false;
  for (LabelIdx a = 0; a < s.d(); ++a) {
    ExtIdx ab = make_ext(a, Marker::b), ae = make_ext(a, Marker::e);
    out.begin_intervals.emplace_back(x[ab], x[s.sigma(ab)]);
    out.end_intervals.emplace_back(x[s.sigma(ae)], x[ae]);
  }
  return out;
}

bool is_positive_scheme(const Scheme& s) {
  Basis vb = length_space_basis(s);
  if (vb.dim() == 0) return false;
  // Feasibility of v >= 1 componentwise over v = B^T t.
  RatMat m(s.d(), RatVec(vb.dim()));
  RatVec rhs(s.d(), Rat(1));
  for (LabelIdx a = 0; a < s.d(); ++a)
    for (int j = 0; j < vb.dim(); ++j) m[a][j] = vb.vectors[j][a];
  return fm_feasible(m, rhs).has_value();
}

}  // namespace ire
