#include "ire/scheme.hpp"

#include <algorithm>

#include "ire/error.hpp"

namespace ire {

std::string Scheme::ext_name(ExtIdx e) const {
  return alphabet_[label_of(e)] + (marker_of(e) == Marker::b ? ".b" : ".e");
}

std::optional<LabelIdx> Scheme::find_label(const std::string& name) const {
  for (LabelIdx i = 0; i < d(); ++i)
    if (alphabet_[i] == name) return i;
  return std::nullopt;
}

bool Scheme::operator==(const Scheme& other) const {
  if (alphabet_ == other.alphabet_) return sigma_ == other.sigma_;
  if (alphabet_.size() != other.alphabet_.size()) return false;
  std::vector<LabelIdx> to_other(d());
  for (LabelIdx l = 0; l < d(); ++l) {
    auto o = other.find_label(alphabet_[l]);
    if (!o) return false;
    to_other[l] = *o;
  }
  auto conv = [&](ExtIdx e) { return make_ext(to_other[label_of(e)], marker_of(e)); };
  for (ExtIdx e = 0; e < ext_size(); ++e)
    if (conv(sigma_[e]) != other.sigma_[conv(e)]) return false;
  return true;
}

static void check_alphabet(const std::vector<std::string>& alphabet) {
  if (alphabet.empty()) fail(ErrorCode::DuplicateLabel, "alphabet must be non-empty");
  for (size_t i = 0; i < alphabet.size(); ++i) {
    const std::string& name = alphabet[i];
    if (name.empty()) fail(ErrorCode::UnknownLabel, "empty label name");
    for (char c : name)
      if (!(isalnum(static_cast<unsigned char>(c)) || c == '_'))
        fail(ErrorCode::UnknownLabel, "label '" + name + "' has invalid characters");
    for (size_t j = i + 1; j < alphabet.size(); ++j)
      if (alphabet[i] == alphabet[j])
        fail(ErrorCode::DuplicateLabel, "label '" + name + "' repeated");
  }
}

Scheme Scheme::make(const std::vector<std::string>& alphabet,
                    const std::vector<std::pair<ExtIdx, ExtIdx>>& mapping) {
  check_alphabet(alphabet);
  Scheme s;
  s.alphabet_ = alphabet;
  const int n = s.ext_size();
  s.sigma_.assign(n, -1);
  s.sigma_inv_.assign(n, -1);
  for (auto [from, to] : mapping) {
    if (from < 0 || from >= n || to < 0 || to >= n)
      fail(ErrorCode::UnknownLabel, "extended label out of range");
    if (s.sigma_[from] != -1)
      fail(ErrorCode::NotABijection, "duplicate image for " + s.ext_name(from));
    if (s.sigma_inv_[to] != -1)
      fail(ErrorCode::NotABijection, s.ext_name(to) + " has two preimages");
    s.sigma_[from] = to;
    s.sigma_inv_[to] = from;
  }
  for (int e = 0; e < n; ++e)
    if (s.sigma_[e] == -1)
      fail(ErrorCode::NotABijection, "no image for " + s.ext_name(e));
  return s;
}

Scheme Scheme::from_cycles(const std::vector<std::string>& alphabet,
                           const std::vector<std::vector<ExtIdx>>& cycs) {
  std::vector<std::pair<ExtIdx, ExtIdx>> mapping;
  for (const auto& c : cycs) {
    for (size_t i = 0; i < c.size(); ++i)
      mapping.emplace_back(c[i], c[(i + 1) % c.size()]);
  }
  return make(alphabet, mapping);
}

CycleDecomposition cycles(const Scheme& s) {
  CycleDecomposition out;
  std::vector<bool> seen(s.ext_size(), false);
  for (ExtIdx start = 0; start < s.ext_size(); ++start) {
    if (seen[start]) continue;
    std::vector<ExtIdx> cyc;
    ExtIdx cur = start;
    do {
      seen[cur] = true;
      cyc.push_back(cur);
      cur = s.sigma(cur);
    } while (cur != start);
    out.cycles.push_back(std::move(cyc));
  }
  // Scanning starts from the minimal unseen element, so every cycle already
  // begins at its minimal element and cycles are sorted by start.
  return out;
}

std::vector<int> cycle_index_of(const Scheme& s) {
  auto dec = cycles(s);
  std::vector<int> idx(s.ext_size(), -1);
  for (int i = 0; i < dec.N(); ++i)
    for (ExtIdx e : dec.cycles[i]) idx[e] = i;
  return idx;
}

TurnsReport turns(const Scheme& s) {
  TurnsReport rep;
  auto dec = cycles(s);
  rep.per_cycle_twists.resize(dec.N());
  for (int i = 0; i < dec.N(); ++i) {
    int back = 0;
    for (ExtIdx e : dec.cycles[i]) {
      ExtIdx img = s.sigma(e);
      if (marker_of(e) == Marker::b && marker_of(img) == Marker::e) {
        rep.turns_back.push_back(img);
        ++back;
      } else if (marker_of(e) == Marker::e && marker_of(img) == Marker::b) {
        rep.turns_forward.push_back(img);
      }
    }
    rep.per_cycle_twists[i] = back - 1;  // all-b / all-e cycles get -1
    rep.T += back - 1;
  }
  std::sort(rep.turns_back.begin(), rep.turns_back.end());
  std::sort(rep.turns_forward.begin(), rep.turns_forward.end());
  return rep;
}

ComponentPartition irreducible_components(const Scheme& s) {
  // Labels sharing a sigma-cycle must share a component; the component
  // partition is the transitive closure of that relation.
  std::vector<LabelIdx> parent(s.d());
  for (LabelIdx i = 0; i < s.d(); ++i) parent[i] = i;
  auto find = [&](LabelIdx x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](LabelIdx a, LabelIdx b) { parent[find(a)] = find(b); };
  for (const auto& cyc : cycles(s).cycles)
    for (size_t i = 1; i < cyc.size(); ++i)
      unite(label_of(cyc[0]), label_of(cyc[i]));
  ComponentPartition out;
  std::vector<int> comp_of(s.d(), -1);
  for (LabelIdx l = 0; l < s.d(); ++l) {
    LabelIdx root = find(l);
    if (comp_of[root] == -1) {
      comp_of[root] = static_cast<int>(out.components.size());
      out.components.emplace_back();
    }
    out.components[comp_of[root]].push_back(l);
  }
  return out;
}

Scheme dual(const Scheme& s) {
  std::vector<std::pair<ExtIdx, ExtIdx>> mapping;
  for (ExtIdx e = 0; e < s.ext_size(); ++e)
    mapping.emplace_back(e, s.sigma(flip_marker(e)));
  return Scheme::make(s.alphabet(), mapping);
}

int twists_total(const Scheme& s) {
  Scheme ds = dual(s);
  TurnsReport t = turns(s), td = turns(ds);
  int total = t.T + td.T;
  int n = cycles(s).N(), nd = cycles(ds).N();
  if (t.T + td.T + n + nd != s.d())
    fail(ErrorCode::InternalInvariantViolation,
         "turn/cycle balance violated for scheme on d=" + std::to_string(s.d()));
  if (total % 2 != 0)
    fail(ErrorCode::InternalInvariantViolation, "twists total is odd");
  return total;
}

int genus(const Scheme& s) { return twists_total(s) / 2 + 1; }

bool is_iet(const Scheme& s) {
  auto dec = cycles(s);
  for (const auto& cyc : dec.cycles) {
    int back = 0;
    for (ExtIdx e : cyc)
      if (marker_of(e) == Marker::b && marker_of(s.sigma(e)) == Marker::e) ++back;
    if (back != 1) return false;
  }
  return true;
}

TwoRowIET to_two_row(const Scheme& s) {
  if (!is_iet(s)) fail(ErrorCode::NotAnIET, "a cycle has not exactly one turn back");
  TwoRowIET t;
  for (const auto& cyc : cycles(s).cycles) {
    // Rotate to start at the unique turn forward site (the first b after
    // the e-arc); then the cycle reads: b-arc left-to-right, e-arc being
    // the lower row right-to-left.
    size_t n = cyc.size(), start = 0;
    for (size_t i = 0; i < n; ++i) {
      ExtIdx prev = cyc[(i + n - 1) % n];
      if (marker_of(cyc[i]) == Marker::b && marker_of(prev) == Marker::e) {
        start = i;
        break;
      }
    }
    TwoRowIET::Bracket br;
    for (size_t i = 0; i < n; ++i) {
      ExtIdx e = cyc[(start + i) % n];
      if (marker_of(e) == Marker::b)
        br.upper.push_back(s.label_name(label_of(e)));
      else
        br.lower.insert(br.lower.begin(), s.label_name(label_of(e)));
    }
    t.brackets.push_back(std::move(br));
  }
  return t;
}

Scheme from_two_row(const TwoRowIET& t) {
  if (t.brackets.empty()) fail(ErrorCode::MalformedTwoRow, "no brackets");
  std::vector<std::string> alphabet;
  for (const auto& br : t.brackets)
    for (const auto& name : br.upper)
      if (std::find(alphabet.begin(), alphabet.end(), name) == alphabet.end())
        alphabet.push_back(name);
  auto index = [&](const std::string& name) -> LabelIdx {
    auto it = std::find(alphabet.begin(), alphabet.end(), name);
    if (it == alphabet.end())
      fail(ErrorCode::MalformedTwoRow, "label '" + name + "' missing from upper rows");
    return static_cast<LabelIdx>(it - alphabet.begin());
  };
  std::vector<std::vector<ExtIdx>> cycs;
  for (const auto& br : t.brackets) {
    if (br.upper.empty() || br.lower.empty())
      fail(ErrorCode::MalformedTwoRow, "bracket with an empty row");
    std::vector<ExtIdx> cyc;
    for (const auto& name : br.upper) cyc.push_back(make_ext(index(name), Marker::b));
    for (auto it = br.lower.rbegin(); it != br.lower.rend(); ++it)
      cyc.push_back(make_ext(index(*it), Marker::e));
    cycs.push_back(std::move(cyc));
  }
  size_t upper_count = 0, lower_count = 0;
  for (const auto& br : t.brackets) {
    upper_count += br.upper.size();
    lower_count += br.lower.size();
  }
  if (upper_count != alphabet.size() || lower_count != alphabet.size())
    fail(ErrorCode::MalformedTwoRow, "label multiplicity violated");
  try {
    return Scheme::from_cycles(alphabet, cycs);
  } catch (const Error& e) {
    fail(ErrorCode::MalformedTwoRow, e.what());
  }
}

}  // namespace ire
