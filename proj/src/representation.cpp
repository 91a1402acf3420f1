#include "pea/representation.hpp"

#include "pea/errors.hpp"

namespace pea {

namespace {

GroupElem with_level(const Integer& m, const GroupElem& g) {
  GroupElem x{m};
  x.insert(x.end(), g.begin(), g.end());
  return x;
}

GroupElem tail(const GroupElem& x) { return GroupElem(x.begin() + 1, x.end()); }

}  // namespace

// ---------------------------------------------------------------------------

StrongRepresentation::StrongRepresentation(std::shared_ptr<IntervalPea> source, GroupElem c,
                                           std::size_t probe_samples, std::uint64_t seed)
    : source_(std::move(source)), c_(std::move(c)) {
  const PoGroup& h = source_->group();
  const std::size_t n = source_->levels();
  if (!source_->member(c_) || source_->level(c_) != 1)
    throw NotCyclic(source_->format(c_) + " is not a member of E1");
  if (h.times(static_cast<long>(n), c_) != source_->unit())
    throw NotCyclic(std::to_string(n) + source_->format(c_) + " != " + source_->format(source_->unit()));
  if (auto r = is_commutator(h, c_, probe_samples, seed); !r.passed)
    throw NotStrong(source_->format(c_) + " is not central: " + r.failure);
  if (auto r = probe_torsion_free(h, probe_samples, seed); !r.passed)
    throw NotStrong("ambient group is not torsion-free: " + r.failure);
  kernel_ = level_kernel(source_->group_ptr());
  target_ = lex_product_pea(n, kernel_, kernel_->zero());
}

GroupElem StrongRepresentation::multiple(std::size_t i) const {
  return source_->group().times(static_cast<long>(i), c_);
}

GroupElem StrongRepresentation::apply(const GroupElem& x) const {
  const std::size_t i = source_->level(x);
  const PoGroup& h = source_->group();
  const GroupElem g = h.add(h.neg(multiple(i)), x);
  if (g[0] != 0) throw Inconsistency("-(ic)+x left level 0");
  return with_level(Integer(i), tail(g));
}

GroupElem StrongRepresentation::preimage(const GroupElem& y) const {
  const std::size_t i = target_->level(y);
  return source_->group().add(multiple(i), with_level(Integer(0), tail(y)));
}

SampledReport StrongRepresentation::verify(std::size_t samples, std::uint64_t seed, long bound) const {
  SampledReport report{"phi: " + source_->describe() + " -> " + target_->describe(), seed, {}};
  std::mt19937_64 rng(seed);
  const IntervalPea& e = *source_;
  const IntervalPea& t = *target_;
  SampledCheck levels{"phi(E_i) inside the target level i"}, additive{"phi additive"};
  SampledCheck order{"x <= y iff phi(x) <= phi(y)"}, injective{"phi injective"};
  SampledCheck surjective{"preimage ic+g maps back to (i,g)"};

  for (std::size_t k = 0; k < samples; ++k) {
    auto [x, y] = sample_pair(e, rng, bound);
    const GroupElem px = apply(x), py = apply(y);

    ++levels.samples;
    if (!t.member(px) || t.level(px) != e.level(x)) levels.fail("phi" + e.format(x) + " = " + t.format(px));

    ++additive.samples;
    if (const auto s = e.add(x, y)) {
      ++additive.instances;
      const auto ps = t.add(px, py);
      if (!ps || *ps != apply(*s)) additive.fail("phi(" + e.format(x) + "+" + e.format(y) + ")");
    }

    ++order.samples;
    if (e.leq(x, y) != t.leq(px, py)) order.fail("order disagreement at " + e.format(x) + "," + e.format(y));
    if (const auto s = e.add(x, y)) {
      ++order.instances;
      if (!t.leq(px, apply(*s)) || !t.leq(py, apply(*s))) order.fail("summand not below sum after phi");
    }

    ++injective.samples;
    if (x != y) {
      ++injective.instances;
      if (px == py) injective.fail(e.format(x) + " and " + e.format(y) + " share an image");
    }

    ++surjective.samples;
    const GroupElem target = t.sample(rng, bound);
    const GroupElem pre = preimage(target);
    ++surjective.instances;
    if (!e.member(pre) || apply(pre) != target)
      surjective.fail("no preimage for " + t.format(target) + " (tried " + e.format(pre) + ")");
  }
  levels.instances = levels.samples;
  report.checks = {levels, additive, order, injective, surjective};
  return report;
}

// ---------------------------------------------------------------------------

LiftedMorphism::LiftedMorphism(GroupPtr g, GroupPtr h, GroupHom hom, std::size_t n,
                               std::size_t probe_samples, std::uint64_t seed)
    : hom_(std::move(hom)) {
  if (auto r = probe_additive(*g, *h, hom_, probe_samples, seed); !r.passed)
    throw Refused("group map is not additive: " + r.failure);
  source_ = lex_product_pea(n, g, g->zero());
  target_ = lex_product_pea(n, h, h->zero());
}

GroupElem LiftedMorphism::apply(const GroupElem& x) const { return with_level(x[0], hom_(tail(x))); }

SampledReport LiftedMorphism::verify(std::size_t samples, std::uint64_t seed, long bound) const {
  SampledReport report{"f: " + source_->describe() + " -> " + target_->describe(), seed, {}};
  std::mt19937_64 rng(seed);
  SampledCheck levels{"f(E_i) inside F_i"}, additive{"f additive"};
  for (std::size_t k = 0; k < samples; ++k) {
    auto [x, y] = sample_pair(*source_, rng, bound);
    const GroupElem fx = apply(x), fy = apply(y);
    ++levels.samples;
    if (!target_->member(fx) || target_->level(fx) != source_->level(x))
      levels.fail("f" + source_->format(x) + " = " + target_->format(fx));
    ++additive.samples;
    if (const auto s = source_->add(x, y)) {
      ++additive.instances;
      const auto fs = target_->add(fx, fy);
      if (!fs || *fs != apply(*s)) additive.fail("f(" + source_->format(x) + "+" + source_->format(y) + ")");
    }
  }
  levels.instances = levels.samples;
  report.checks = {levels, additive};
  return report;
}

LiftedMorphism lift_group_hom(GroupPtr g, GroupPtr h, GroupHom hom, std::size_t n, std::size_t probe_samples,
                              std::uint64_t seed) {
  return LiftedMorphism(std::move(g), std::move(h), std::move(hom), n, probe_samples, seed);
}

// ---------------------------------------------------------------------------

UniversalExtension::UniversalExtension(Measure phi, std::size_t probe_samples, std::uint64_t seed)
    : phi_(std::move(phi)) {
  const IntervalPea& e = *phi_.domain;
  const GroupElem& u = e.unit();
  for (std::size_t i = 1; i < u.size(); ++i)
    if (u[i] != 0) throw Refused("domain unit must be (n, 0)");
  kernel_ = level_kernel(e.group_ptr());
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < probe_samples; ++k) {
    auto [x, y] = sample_pair(e, rng, 8);
    const auto s = e.add(x, y);
    if (!s) continue;
    if (phi_.map(*s) != phi_.codomain->add(phi_.map(x), phi_.map(y)))
      throw Refused("measure is not additive at " + e.format(x) + "," + e.format(y));
  }
  phi_c_ = phi_.map(with_level(Integer(1), kernel_->zero()));
}

GroupElem UniversalExtension::at_level0(const GroupElem& g) const {
  if (!kernel_->is_positive(g)) throw Inconsistency("presentation uses a non-positive part " + to_string(g));
  return phi_.map(with_level(Integer(0), g));
}

GroupElem UniversalExtension::from_difference(const Integer& m, const GroupElem& g1, const GroupElem& g2) const {
  const PoGroup& k = *phi_.codomain;
  const GroupElem lead = k.times(m.convert_to<long>(), phi_c_);
  return k.add(lead, k.add(at_level0(g1), k.neg(at_level0(g2))));
}

GroupElem UniversalExtension::from_left_difference(const Integer& m, const GroupElem& g1,
                                                   const GroupElem& g2) const {
  const PoGroup& k = *phi_.codomain;
  const GroupElem lead = k.times(m.convert_to<long>(), phi_c_);
  return k.add(lead, k.add(k.neg(at_level0(g1)), at_level0(g2)));
}

// p >= 0 with p >= -g, optionally raised by a random positive element.
GroupElem UniversalExtension::positive_offset(const GroupElem& g, std::mt19937_64* rng, long bound) const {
  const auto hint = kernel_->upper_bound_hint(kernel_->neg(g), kernel_->zero());
  if (!hint) throw Refused("the group offers no upper bounds for presentations");
  GroupElem p = *hint;
  if (rng) {
    for (int attempt = 0; attempt < 64; ++attempt) {
      const GroupElem q = kernel_->sample(*rng, bound);
      if (kernel_->is_positive(q)) {
        p = kernel_->add(p, q);
        break;
      }
    }
  }
  return p;
}

GroupElem UniversalExtension::apply(const GroupElem& x) const {
  const GroupElem g = tail(x);
  const GroupElem p = positive_offset(g, nullptr, 0);
  return from_difference(x[0], kernel_->add(g, p), p);
}

SampledReport UniversalExtension::verify(std::size_t samples, std::uint64_t seed, long bound) const {
  SampledReport report{"phi* on Z lex " + kernel_->name() + " into " + phi_.codomain->name(), seed, {}};
  std::mt19937_64 rng(seed);
  const IntervalPea& e = *phi_.domain;
  const PoGroup& h = e.group();
  const PoGroup& k = *phi_.codomain;
  SampledCheck well{"presentations agree"}, hom{"phi* additive"}, factor{"phi = phi* o gamma"};
  for (std::size_t s = 0; s < samples; ++s) {
    const GroupElem x = h.sample(rng, bound);
    const GroupElem g = tail(x);
    // g = g1 - g2, twice with different offsets, and g = -g3 + g4
    const GroupElem p1 = positive_offset(g, &rng, bound), p2 = positive_offset(g, &rng, bound);
    const GroupElem p3 = positive_offset(g, &rng, bound);
    const GroupElem v1 = from_difference(x[0], kernel_->add(g, p1), p1);
    const GroupElem v2 = from_difference(x[0], kernel_->add(g, p2), p2);
    const GroupElem v3 = from_left_difference(x[0], p3, kernel_->add(p3, g));
    well.samples += 2;
    well.instances += 2;
    if (v1 != v2 || v1 != v3)
      throw WellDefinednessFailure("phi*" + to_string(x) + ": " + to_string(kernel_->add(g, p1)) + "-" +
                                   to_string(p1) + " gives " + to_string(v1) + ", " +
                                   (v1 != v2 ? to_string(kernel_->add(g, p2)) + "-" + to_string(p2) + " gives " + to_string(v2)
                                             : "-" + to_string(p3) + "+" + to_string(kernel_->add(p3, g)) + " gives " + to_string(v3)));

    ++hom.samples;
    const GroupElem y = h.sample(rng, bound);
    if (apply(h.add(x, y)) != k.add(apply(x), apply(y))) hom.fail("phi*(x+y) at " + to_string(x) + "," + to_string(y));

    ++factor.samples;
    const GroupElem m = e.sample(rng, bound);
    if (phi_.map(m) != apply(m)) factor.fail("phi" + e.format(m) + " != phi*" + e.format(m));
  }
  hom.instances = hom.samples;
  factor.instances = factor.samples;
  report.checks = {well, hom, factor};
  return report;
}

UniversalExtension universal_group_extension(Measure phi, std::size_t probe_samples, std::uint64_t seed) {
  return UniversalExtension(std::move(phi), probe_samples, seed);
}

// ---------------------------------------------------------------------------

GroupElem obfuscate(const GroupElem& x) { return {x[0], 3 * x[0] - x[1]}; }

GroupPtr obfuscated_lex_z() {
  return transported(lex_extension(int_vector(1, VectorOrder::Pointwise)), obfuscate, obfuscate, "alpha(lex:z:1)");
}

}  // namespace pea
