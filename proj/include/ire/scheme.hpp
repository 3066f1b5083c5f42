#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ire {

// Labels and extended labels are small indices into a Scheme's alphabet.
// For an alphabet of d labels, extended labels run over 0..2d-1 with
// ext = 2*label + marker, marker 0 = 'b' (beginning), 1 = 'e' (ending).

enum class Marker : std::uint8_t { b = 0, e = 1 };

using LabelIdx = int;
using ExtIdx = int;

inline ExtIdx make_ext(LabelIdx label, Marker m) {
  return 2 * label + (m == Marker::e ? 1 : 0);
}
inline LabelIdx label_of(ExtIdx e) { return e / 2; }
inline Marker marker_of(ExtIdx e) {
  return (e % 2) ? Marker::e : Marker::b;
}
inline ExtIdx flip_marker(ExtIdx e) { return e ^ 1; }

/// A permutation sigma on the doubled alphabet A x {b,e}.
class Scheme {
 public:
  /// Builds a scheme from label names and an explicit bijection given as
  /// (from, to) extended-label pairs. Validates label uniqueness and
  /// bijectivity.
  static Scheme make(const std::vector<std::string>& alphabet,
                     const std::vector<std::pair<ExtIdx, ExtIdx>>& mapping);

  /// Builds a scheme from its cycles, each a sequence of extended labels.
  static Scheme from_cycles(const std::vector<std::string>& alphabet,
                            const std::vector<std::vector<ExtIdx>>& cycles);

  int d() const { return static_cast<int>(alphabet_.size()); }
  int ext_size() const { return 2 * d(); }

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::string& label_name(LabelIdx l) const { return alphabet_[l]; }
  std::optional<LabelIdx> find_label(const std::string& name) const;

  ExtIdx sigma(ExtIdx e) const { return sigma_[e]; }
  ExtIdx sigma_inv(ExtIdx e) const { return sigma_inv_[e]; }

  /// Equality as named mappings: alphabets may list the labels in different
  /// orders, only the induced map on named sites matters.
  bool operator==(const Scheme& other) const;

  std::string ext_name(ExtIdx e) const;

  /// Empty placeholder; every usable scheme comes from make/from_cycles.
  Scheme() = default;

 private:
  std::vector<std::string> alphabet_;
  std::vector<ExtIdx> sigma_;
  std::vector<ExtIdx> sigma_inv_;
};

struct CycleDecomposition {
  // Canonical form: each cycle rotated to start at its minimal element,
  // cycles sorted by starting element.
  std::vector<std::vector<ExtIdx>> cycles;
  int N() const { return static_cast<int>(cycles.size()); }
};

CycleDecomposition cycles(const Scheme& s);

/// Index of the cycle containing each extended label, numbered in canonical
/// cycle order.
std::vector<int> cycle_index_of(const Scheme& s);

struct TurnsReport {
  std::vector<ExtIdx> turns_back;     // sites beta.e with sigma(alpha.b)=beta.e
  std::vector<ExtIdx> turns_forward;  // sites alpha.b with sigma(beta.e)=alpha.b
  std::vector<int> per_cycle_twists;  // #turns back in cycle - 1
  int T = 0;                          // sum of per-cycle twists
};

TurnsReport turns(const Scheme& s);

struct ComponentPartition {
  std::vector<std::vector<LabelIdx>> components;  // sorted, disjoint
  int P() const { return static_cast<int>(components.size()); }
};

ComponentPartition irreducible_components(const Scheme& s);

/// The duality involution: dual(s)(a.b) = s(a.e), dual(s)(a.e) = s(a.b).
Scheme dual(const Scheme& s);

/// T(s) + T(dual(s)); checks the balance identity T+T*+N+N* = d and evenness
/// before returning, raising InternalInvariantViolation on failure.
int twists_total(const Scheme& s);

/// twists_total / 2 + 1.
int genus(const Scheme& s);

/// True iff every cycle has exactly one turn back (the scheme encodes a
/// multi-interval IET).
bool is_iet(const Scheme& s);

struct TwoRowIET {
  struct Bracket {
    std::vector<std::string> upper;  // beginning labels, left to right
    std::vector<std::string> lower;  // ending labels, left to right
  };
  std::vector<Bracket> brackets;
};

TwoRowIET to_two_row(const Scheme& s);
Scheme from_two_row(const TwoRowIET& t);

/// Exact-rational feasibility of {v in V_sigma : v_a >= 1 for all a}.
bool is_positive_scheme(const Scheme& s);

}  // namespace ire
