#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pea/ideals.hpp"
#include "pea/states.hpp"
#include "pea/table.hpp"

namespace pea {

/// A partition (E0, ..., En) of E.
struct Decomposition {
  std::size_t n = 0;
  std::vector<ElemSet> parts;
  std::vector<std::size_t> labels;  // element id -> part index

  friend bool operator==(const Decomposition& a, const Decomposition& b) {
    return a.n == b.n && a.labels == b.labels;
  }
};

Decomposition decomposition_from_labels(const std::vector<std::size_t>& labels, std::size_t n);

/// Empty when D satisfies (a)-(d) with nonempty parts, otherwise the first
/// failing clause with a witness.
std::string decomposition_error(const PartialAdditionTable& t, const Decomposition& d);

/// Every n-decomposition, ordered by label vector. Requires the PEA axioms;
/// InputError for n = 0.
std::vector<Decomposition> find_decompositions(const PartialAdditionTable& t, std::size_t n);

/// s(E_i) = i/n.
StateVector state_of(const Decomposition& d);
/// E_i = s^-1(i/n). Refused unless s takes exactly the values i/n.
Decomposition decomposition_of(const PartialAdditionTable& t, const StateVector& s, std::size_t n);

struct DecompositionStatePairing {
  std::vector<std::pair<Decomposition, StateVector>> pairs;
  std::size_t decompositions = 0;
  std::size_t states = 0;
  bool mutually_inverse = true;
  bool bijective() const { return mutually_inverse && decompositions == states && pairs.size() == states; }
};

/// Both directions of the correspondence, checked on this instance.
DecompositionStatePairing decomposition_state_bijection(const PartialAdditionTable& t, std::size_t n);

struct ComparabilityReport {
  bool chain = true;  // (A) E0 <= E1 <= ... <= En
  std::optional<std::pair<Elem, Elem>> chain_witness;
  bool sums_exist = true;  // (B) E_i + E_j exists for i + j < n
  std::optional<std::pair<Elem, Elem>> sums_witness;
  bool agree() const { return chain == sums_exist; }

  // consequences, evaluated only when (A) and (B) hold
  bool consequences_checked = false;
  bool e0_is_infinit = false;
  bool e0_is_normal = false;
  bool low_sums_fill = false;    // E_i + E_j = E_(i+j) for i + j < n
  bool high_sums_absent = false; // no sums from E_i x E_j for i + j > n
  bool consequences_hold() const {
    return !consequences_checked || (e0_is_infinit && e0_is_normal && low_sums_fill && high_sums_absent);
  }
};

/// "A <= B" and "A + B exists" quantify over all pairs.
ComparabilityReport check_comparability(const PartialAdditionTable& t, const Decomposition& d);

struct PerfectReport {
  bool perfect = false;
  std::optional<Decomposition> certificate;
  std::vector<ElemSet> maximal_ideals;
  std::string reason;  // why no decomposition qualifies
};

/// Some n-decomposition has E_i + E_j existing for i + j < n and E0 as the
/// unique maximal ideal.
PerfectReport is_n_perfect(const PartialAdditionTable& t, std::size_t n);

/// Every part is upward and downward directed inside itself.
Check check_condition_e(const PartialAdditionTable& t, const Decomposition& d);

struct ChainReport {
  Elem c;
  std::vector<Elem> multiples;  // 0, c, 2c, ..., nc
  bool quotient_is_chain = false;
};

/// The smallest c in E1 with E = {0, c, ..., nc} and E/E0 = C_n. Refused
/// naming the failing hypothesis unless t is n-perfect with condition (e);
/// Inconsistency if a consequence fails.
ChainReport canonical_chain_report(const PartialAdditionTable& t, std::size_t n);

}  // namespace pea
