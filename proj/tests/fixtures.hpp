// Shared example presentations used across the test suite.
#pragma once

#include "spbw/presentation.hpp"

namespace fixtures {

using namespace spbw;

// Fieldwise equality of every data member two presentations carry.
inline bool same_presentation(const Presentation& a, const Presentation& b) {
  if (a.base.names != b.base.names || a.base.degrees != b.base.degrees ||
      a.base.ideal != b.base.ideal || a.base.field.p != b.base.field.p)
    return false;
  if (a.xnames != b.xnames || a.xdegrees != b.xdegrees) return false;
  for (std::size_t i = 0; i < a.n(); ++i) {
    if (!(a.sigma[i].images == b.sigma[i].images)) return false;
    if (!(a.delta[i].images == b.delta[i].images)) return false;
  }
  for (std::size_t t = 0; t < a.rel.size(); ++t) {
    if (!(a.rel[t].c == b.rel[t].c)) return false;
    if (!(a.rel[t].d0 == b.rel[t].d0)) return false;
    if (a.rel[t].dlin.size() != b.rel[t].dlin.size()) return false;
    for (std::size_t k = 0; k < a.rel[t].dlin.size(); ++k)
      if (!(a.rel[t].dlin[k] == b.rel[t].dlin[k])) return false;
  }
  return true;
}

// K<x1,..,xk> commutative, c = 1 everywhere.
inline Presentation commutative(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("x" + std::to_string(i));
  return make_presentation(ground_field(FieldSpec{}), std::move(names));
}

// Quantum plane: x2 x1 = q x1 x2 over the rationals.
inline Presentation qplane(long q = 2) {
  Presentation p = commutative(2);
  p.relation(0, 1).c = BaseElement::constant(p.base, Scalar::from_long(p.base.field, q));
  return p;
}

// First Weyl algebra: x2 x1 = x1 x2 + 1.
inline Presentation weyl() {
  Presentation p = commutative(2);
  p.relation(0, 1).d0 = BaseElement::one(p.base);
  return p;
}

// Diffusion algebra on two variables: base Q[x1, x2], constant coefficients,
// relation D2 D1 = D1 D2 - x2 D1 + x1 D2.
inline Presentation diffusion() {
  BaseRingSpec base{FieldSpec{}, {"x1", "x2"}, {1, 1}, {}};
  Presentation p = make_presentation(base, {"D1", "D2"});
  p.relation(0, 1).dlin[0] = -BaseElement::variable(base, 1);
  p.relation(0, 1).dlin[1] = BaseElement::variable(base, 0);
  return p;
}

// Dual numbers extended by one central variable: (Q[y]/(y^2))[x].
inline Presentation dual_numbers_poly() {
  BaseRingSpec base{FieldSpec{}, {"y"}, {1}, {Exp{2}}};
  return make_presentation(base, {"x"});
}

// Quantum plane with dual-number coefficients, y central.
inline Presentation qplane_over_dual(long q = 2) {
  BaseRingSpec base{FieldSpec{}, {"y"}, {1}, {Exp{2}}};
  Presentation p = make_presentation(base, {"x1", "x2"});
  p.relation(0, 1).c = BaseElement::constant(base, Scalar::from_long(base.field, q));
  return p;
}

// Commutative in two variables with weights 1 and 2; the standard grading
// then has an inhomogeneously placed generator.
inline Presentation weighted_commutative() {
  Presentation p = commutative(2);
  p.xdegrees = {1, 2};
  return p;
}

// Deliberately inconsistent: over Q[y], three variables with x2 x1 =
// x1 x2 + y while sigma of x3 scales y. Reducing x3 x2 x1 the two ways
// gives x1 x2 x3 + y x3 against x1 x2 x3 + 2 y x3.
inline Presentation broken_triple() {
  BaseRingSpec base{FieldSpec{}, {"y"}, {1}, {}};
  Presentation p = make_presentation(base, {"x1", "x2", "x3"});
  p.relation(0, 1).d0 = BaseElement::variable(base, 0);
  p.sigma[2].images = {BaseElement::variable(base, 0).scaled(Scalar::from_long(base.field, 2))};
  return p;
}

}  // namespace fixtures
