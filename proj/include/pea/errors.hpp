#pragma once

#include <stdexcept>
#include <string>

namespace pea {

/// Malformed input: unknown element names, dangling references, bad arguments.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation's precondition does not hold on a structurally valid input
/// (axioms fail, ideal is not normal, hypotheses of a construction fail).
class Refused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// a is not below b, so a difference b\a or a/b does not exist.
class UndefinedDifference : public Refused {
 public:
  using Refused::Refused;
};

/// Unitization was asked for a GPEA violating condition (C).
class NonSymmetric : public Refused {
 public:
  using Refused::Refused;
};

/// The proposed cyclic element c does not satisfy nc = u.
class NotCyclic : public Refused {
 public:
  using Refused::Refused;
};

/// The cyclic element is not central, or the ambient group is not torsion-free.
class NotStrong : public Refused {
 public:
  using Refused::Refused;
};

/// Two presentations of one group element were mapped to different values.
class WellDefinednessFailure : public Refused {
 public:
  using Refused::Refused;
};

/// Something that a theorem guarantees did not happen. Always a bug or a
/// counterexample worth reporting.
class Inconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Work would exceed a hard cap (free parameters, enumeration bound).
class TooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pea
