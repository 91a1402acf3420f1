#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pea/numeric.hpp"
#include "pea/table.hpp"

namespace pea {

/// Values indexed by element id.
struct StateVector {
  std::vector<Rational> values;

  const Rational& operator[](Elem e) const { return values[e.id]; }
  friend bool operator==(const StateVector&, const StateVector&) = default;
  friend bool operator<(const StateVector& a, const StateVector& b) { return a.values < b.values; }
};

/// Empty string when s is a state on t, otherwise the reason it is not.
std::string state_error(const PartialAdditionTable& t, const StateVector& s);

/// The states form {particular + sum_f t_f * basis[f]} intersected with
/// [0,1]^E. `free` lists the elements whose values are the parameters t_f.
struct StateSpace {
  bool consistent = true;  // additivity equations solvable at all
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> basis;
  std::vector<Elem> free;
  std::vector<StateVector> extremal;  // sorted; empty iff there is no state

  std::size_t dimension() const { return basis.size(); }
};

inline constexpr std::size_t kMaxFreeParameters = 12;

/// Exact elimination plus double-description vertex enumeration.
/// Requires the PEA axioms. Throws TooLarge beyond kMaxFreeParameters.
StateSpace solve_state_space(const PartialAdditionTable& t);

/// Additive surjective labelings l: E -> {0..n} with l(0)=0, l(1)=n, in
/// lexicographic order. Requires the PEA axioms; n >= 1.
std::vector<std::vector<std::size_t>> additive_labelings(const PartialAdditionTable& t,
                                                         std::size_t n);

/// The (n+1)-valued discrete states, sorted.
std::vector<StateVector> enumerate_discrete_states(const PartialAdditionTable& t, std::size_t n);

StateVector state_from_labeling(const std::vector<std::size_t>& labels, std::size_t n);

struct StateClass {
  bool discrete = false;  // image is exactly {0, 1/n, ..., 1}
  std::size_t n = 0;      // |s(E)| - 1
  std::vector<Rational> image;
  Integer common_denominator;  // least m with s(E) inside {0, 1/m, ..., 1}
  bool cond_i = false;         // (n+1)-valued discrete
  bool cond_ii = false;        // s(E) is a sub-effect algebra of [0,1]
  bool cond_iii = false;       // t <= u in s(E) implies u - t in s(E)
  std::optional<std::array<Rational, 3>> gap;  // (t, u, u - t) with u - t missing
};

/// Throws InputError when s is not a state and Inconsistency when the three
/// conditions disagree.
StateClass classify_state(const PartialAdditionTable& t, const StateVector& s);

struct Extremality {
  bool extremal = true;
  std::optional<std::pair<StateVector, StateVector>> witness;  // s = (s1 + s2)/2, s1 < s2
};

/// Vertex test on the state polytope. Throws InputError when s is not a state.
Extremality is_extremal(const PartialAdditionTable& t, const StateVector& s);

/// {x : s(x) = 0}. Throws Inconsistency if it is not a normal ideal.
ElemSet kernel(const PartialAdditionTable& t, const StateVector& s);

}  // namespace pea
