// Classification of a presentation into the structural sub-classes that
// drive grading validity and resolution modes, plus the constant-term map,
// augmentation structure, base extension, and the opposite presentation.
#pragma once

#include <stdexcept>
#include <string>

#include "spbw/presentation.hpp"

namespace spbw {

struct ClassificationReport {
  bool constant = false;           // every sigma_i = id and delta_i = 0
  bool pre_commutative = false;    // every d0 = 0
  bool quasi_commutative = false;  // no delta, no defects at all
  bool endomorphism_type = false;  // every delta_i = 0
  bool derivation_type = false;    // every sigma_i = id
  bool semi_commutative = false;   // quasi_commutative and constant
  bool r_augmented = false;        // pre_commutative and constant
  bool augmented_over_K = false;   // pre_commutative and endomorphism_type
  Cert bijective = Cert::Unverified;
  std::string bijective_detail;
};

inline ClassificationReport classify(const Presentation& p) {
  ClassificationReport r;
  std::size_t n = p.n();
  bool sigma_id = true, delta_zero = true, d0_zero = true, dlin_zero = true;
  for (std::size_t i = 0; i < n; ++i) {
    sigma_id = sigma_id && p.sigma[i].is_identity(p.base);
    delta_zero = delta_zero && p.delta[i].is_zero();
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairRelation& R = p.relation(i, j);
      d0_zero = d0_zero && R.d0.is_zero();
      for (const auto& d : R.dlin) dlin_zero = dlin_zero && d.is_zero();
    }
  r.constant = sigma_id && delta_zero;
  r.pre_commutative = d0_zero;
  r.quasi_commutative = delta_zero && d0_zero && dlin_zero;
  r.endomorphism_type = delta_zero;
  r.derivation_type = sigma_id;
  r.semi_commutative = r.quasi_commutative && r.constant;
  r.r_augmented = r.pre_commutative && r.constant;
  r.augmented_over_K = r.pre_commutative && r.endomorphism_type;

  r.bijective = Cert::Yes;
  for (std::size_t i = 0; i < n && r.bijective != Cert::No; ++i) {
    InjectivityReport b = endo_bijectivity(p.base, p.sigma[i]);
    if (b.cert == Cert::No) {
      r.bijective = Cert::No;
      r.bijective_detail = "sigma of " + p.xnames[i] + ": " + b.detail;
    } else if (b.cert == Cert::Unverified && r.bijective == Cert::Yes) {
      r.bijective = Cert::Unverified;
      r.bijective_detail = "sigma of " + p.xnames[i] + ": " + b.detail;
    }
  }
  for (std::size_t i = 0; i < n && r.bijective != Cert::No; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!is_unit(p.base, p.relation(i, j).c)) {
        r.bijective = Cert::No;
        r.bijective_detail =
            "c for (" + p.xnames[i] + ", " + p.xnames[j] + ") is not a unit";
      }
  return r;
}

struct ConstantTermReport {
  BaseElement value;
  bool is_ring_hom = false;
};

// The coefficient of x^0; base-linear and surjective always, a ring map
// exactly for pre-commutative endomorphism-type presentations.
inline ConstantTermReport constant_term(const Presentation& p, const SkewElement& a) {
  ConstantTermReport r;
  r.value = a.coeff(Exp(p.n(), 0));
  if (r.value.field() != p.base.field) r.value = BaseElement::zero(p.base);
  ClassificationReport c = classify(p);
  r.is_ring_hom = c.pre_commutative && c.endomorphism_type;
  return r;
}

// a = r0 + a_plus with r0 in R and a_plus supported on monomials x^alpha,
// alpha != 0; unique by left-freeness. For r-augmented presentations a_plus
// lies in the two-sided ideal generated by the variables.
struct AugSplit {
  BaseElement r0;
  SkewElement a_plus;
};

inline AugSplit aug_decompose(const Presentation& p, const SkewElement& a) {
  AugSplit s;
  s.r0 = a.coeff(Exp(p.n(), 0));
  if (s.r0.field() != p.base.field) s.r0 = BaseElement::zero(p.base);
  s.a_plus = a - SkewElement::embed(p, s.r0);
  return s;
}

// Extend the coefficients of a presentation over the ground field to a
// commutative base B; the new base generators are central.
inline Presentation base_extend(const Presentation& p, const BaseRingSpec& b) {
  if (p.base.m() != 0)
    throw std::domain_error("base extension starts from a ground-field presentation");
  if (b.field != p.base.field) throw std::invalid_argument("mismatched fields");
  BaseValidation bv = validate_base_spec(b);
  if (!bv.ok) throw std::invalid_argument("invalid base ring spec");
  Presentation q = make_presentation(bv.normalized, p.xnames);
  q.xdegrees = p.xdegrees;
  auto embed = [&](const BaseElement& e) {
    return BaseElement::constant(q.base, e.constant_coeff());
  };
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j) {
      const PairRelation& src = p.relation(i, j);
      PairRelation& dst = q.relation(i, j);
      dst.c = embed(src.c);
      dst.d0 = embed(src.d0);
      for (std::size_t k = 0; k < p.n(); ++k) dst.dlin[k] = embed(src.dlin[k]);
    }
  return q;
}

// Opposite presentation for constant extensions with unit c's: reversing the
// multiplication turns x_j x_i = c x_i x_j + sum dlin_k x_k + d0 into
// x_j o x_i = c^{-1} x_i o x_j - c^{-1} dlin_k x_k - c^{-1} d0, with the
// (central) coefficients staying in place. Right-module statements about A
// are left-module statements about this presentation.
inline Presentation opposite_presentation(const Presentation& p) {
  ClassificationReport cls = classify(p);
  if (!cls.constant)
    throw std::domain_error("opposite presentation implemented for constant extensions");
  Presentation q = p;
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j) {
      const PairRelation& src = p.relation(i, j);
      if (!is_unit(p.base, src.c))
        throw std::domain_error("opposite presentation needs unit coefficients c");
      // Invert c = c0 (1 + nil) exactly: geometric series in the nilpotent
      // part, truncated when powers die in R.
      Scalar c0 = src.c.constant_coeff();
      BaseElement nil = src.c.scaled(c0.inverse()) - BaseElement::one(p.base);
      BaseElement inv = BaseElement::one(p.base);
      BaseElement pow_term = BaseElement::one(p.base);
      Scalar sign = Scalar::one(p.base.field);
      while (true) {
        pow_term = mul(p.base, pow_term, nil);
        if (pow_term.is_zero()) break;
        sign = -sign;
        inv = inv + pow_term.scaled(sign);
      }
      inv = inv.scaled(c0.inverse());
      PairRelation& dst = q.relation(i, j);
      dst.c = inv;
      dst.d0 = -mul(p.base, inv, src.d0);
      for (std::size_t k = 0; k < p.n(); ++k)
        dst.dlin[k] = -mul(p.base, inv, src.dlin[k]);
    }
  return q;
}

}  // namespace spbw
