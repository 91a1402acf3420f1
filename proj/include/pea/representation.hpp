#pragma once

#include <memory>

#include "pea/symbolic.hpp"

namespace pea {

/// The map x -> (i, -(ic)+x) for x in E_i, from E = Gamma(H, u) onto
/// Gamma(Z lex G, (n, 0)) where G is the level kernel of H.
class StrongRepresentation {
 public:
  /// Throws NotCyclic unless nc = u, NotStrong when the centrality or
  /// torsion-freeness probe fails.
  StrongRepresentation(std::shared_ptr<IntervalPea> source, GroupElem c, std::size_t probe_samples,
                       std::uint64_t seed);

  GroupElem apply(const GroupElem& x) const;
  /// ic + g for a target element (i, g).
  GroupElem preimage(const GroupElem& y) const;

  const IntervalPea& source() const { return *source_; }
  const std::shared_ptr<IntervalPea>& target() const { return target_; }
  const GroupPtr& kernel() const { return kernel_; }
  const GroupElem& cyclic() const { return c_; }

  /// Level preservation, additivity, order reflection and preservation,
  /// injectivity and constructive surjectivity on samples.
  SampledReport verify(std::size_t samples, std::uint64_t seed, long bound) const;

 private:
  GroupElem multiple(std::size_t i) const;

  std::shared_ptr<IntervalPea> source_;
  GroupElem c_;
  GroupPtr kernel_;
  std::shared_ptr<IntervalPea> target_;
};

/// f(i, g) = (i, h(g)) from Gamma(Z lex G, (n, 0)) to Gamma(Z lex H, (n, 0)).
class LiftedMorphism {
 public:
  /// Throws Refused when h fails the additivity probe.
  LiftedMorphism(GroupPtr g, GroupPtr h, GroupHom hom, std::size_t n, std::size_t probe_samples,
                 std::uint64_t seed);

  GroupElem apply(const GroupElem& x) const;
  const std::shared_ptr<IntervalPea>& source() const { return source_; }
  const std::shared_ptr<IntervalPea>& target() const { return target_; }

  /// f(E_i) inside F_i and additivity on samples.
  SampledReport verify(std::size_t samples, std::uint64_t seed, long bound) const;

 private:
  GroupHom hom_;
  std::shared_ptr<IntervalPea> source_, target_;
};

LiftedMorphism lift_group_hom(GroupPtr g, GroupPtr h, GroupHom hom, std::size_t n,
                              std::size_t probe_samples = 1000, std::uint64_t seed = 1);

/// A group-valued additive map on a symbolic PEA.
struct Measure {
  std::shared_ptr<IntervalPea> domain;
  GroupPtr codomain;
  GroupHom map;
};

/// phi* on Z lex G built by phi*(m, g1 - g2) = m phi(1,0) + phi(0,g1) - phi(0,g2),
/// for a measure on Gamma(Z lex G, (n, 0)).
class UniversalExtension {
 public:
  /// Throws Refused when phi is not additive on samples or the domain is
  /// not of the form Gamma(Z lex G, (n, 0)).
  UniversalExtension(Measure phi, std::size_t probe_samples, std::uint64_t seed);

  /// phi*(m, g) for the presentation g = g1 - g2 with g1, g2 >= 0.
  GroupElem from_difference(const Integer& m, const GroupElem& g1, const GroupElem& g2) const;
  /// phi*(m, g) for the presentation g = -g1 + g2.
  GroupElem from_left_difference(const Integer& m, const GroupElem& g1, const GroupElem& g2) const;
  /// phi*(x) using a canonical presentation of x in Z lex G.
  GroupElem apply(const GroupElem& x) const;

  const GroupPtr& kernel() const { return kernel_; }

  /// Well-definedness over several presentations per sample (throws
  /// WellDefinednessFailure on disagreement), the homomorphism law and
  /// phi = phi* o gamma.
  SampledReport verify(std::size_t samples, std::uint64_t seed, long bound) const;

 private:
  GroupElem at_level0(const GroupElem& g) const;
  GroupElem positive_offset(const GroupElem& g, std::mt19937_64* rng, long bound) const;

  Measure phi_;
  GroupPtr kernel_;
  GroupElem phi_c_;
};

UniversalExtension universal_group_extension(Measure phi, std::size_t probe_samples = 1000,
                                             std::uint64_t seed = 1);

/// alpha(m, g) = (m, 3m - g) on Z lex Z, an involutive automorphism of the
/// group structure it induces; used to disguise Gamma(Z lex Z, (n, 0)).
GroupPtr obfuscated_lex_z();
GroupElem obfuscate(const GroupElem& x);

}  // namespace pea
