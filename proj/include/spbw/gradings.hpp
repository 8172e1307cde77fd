// Gradings on a skew extension: the associated quasi-commutative extension,
// homogeneity audits for the three supported gradings, graded component
// dimensions, the radical quotient, and the radical-commutation identity.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "spbw/classify.hpp"
#include "spbw/linalg.hpp"

namespace spbw {

// Standard: x_i in its declared degree, base generators in theirs (total
// weighted degree). BaseInduced: base generators keep their degrees, x's in
// degree 0. XDegree: x_i in its declared degree, base generators in 0.
enum class GradingKind { Standard, BaseInduced, XDegree };

inline std::string to_string(GradingKind k) {
  switch (k) {
    case GradingKind::Standard: return "standard";
    case GradingKind::BaseInduced: return "base-induced";
    default: return "x-degree";
  }
}

inline std::optional<GradingKind> parse_grading(const std::string& s) {
  if (s == "standard") return GradingKind::Standard;
  if (s == "base-induced") return GradingKind::BaseInduced;
  if (s == "x-degree") return GradingKind::XDegree;
  return std::nullopt;
}

inline unsigned x_weight(const Presentation& p, GradingKind g, std::size_t i) {
  return g == GradingKind::BaseInduced ? 0 : p.xdegrees[i];
}

inline unsigned base_weight(const Presentation& p, GradingKind g, std::size_t j) {
  return g == GradingKind::XDegree ? 0 : p.base.degrees[j];
}

// Degree of an x-exponent under the grading.
inline unsigned long x_deg(const Presentation& p, GradingKind g, const Exp& alpha) {
  unsigned long d = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    d += static_cast<unsigned long>(alpha[i]) * x_weight(p, g, i);
  return d;
}

// All x-exponents of exact weighted degree k. Positive weights make the set
// finite; zero weights are rejected (enumerate by x-count instead).
inline std::vector<Exp> x_monomials(std::size_t n, const std::vector<unsigned>& w, unsigned k) {
  for (unsigned wi : w)
    if (wi == 0) throw std::invalid_argument("x_monomials needs positive weights");
  std::vector<Exp> out;
  Exp cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned rem) -> void {
    if (i == n) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    for (unsigned e = 0; static_cast<unsigned long>(e) * w[i] <= rem; ++e) {
      cur[i] = e;
      self(self, i + 1, rem - e * w[i]);
    }
    cur[i] = 0;
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end(), GrLexGreater());
  return out;
}

// The extension with the same sigma and the same leading coefficients c but
// every delta and every defect dropped; quasi-commutative by construction
// and the model of the associated graded ring of the degree filtration.
inline Presentation associated_quasicommutative(const Presentation& p) {
  Presentation q = p;
  for (std::size_t i = 0; i < q.n(); ++i) q.delta[i] = DerMap::zero(q.base);
  for (auto& r : q.rel) {
    r.d0 = BaseElement::zero(q.base);
    for (auto& d : r.dlin) d = BaseElement::zero(q.base);
  }
  return q;
}

struct RelationLedgerRow {
  std::string relation;
  std::vector<long> degrees;  // distinct degrees of the terms, ascending
  bool homogeneous = false;
};

struct CompatibleWitness {
  std::vector<std::string> generators;
  std::vector<std::string> relations;
};

struct HomogeneityReport {
  GradingKind kind = GradingKind::Standard;
  bool homogeneous = false;
  std::vector<RelationLedgerRow> rows;
  std::optional<CompatibleWitness> compatible;
};

namespace detail {

inline void collect_base_degrees(const Presentation& p, GradingKind g, const BaseElement& e,
                                 long shift, std::vector<long>& out) {
  for (const auto& [exp, c] : e.terms()) {
    unsigned long d = 0;
    for (std::size_t j = 0; j < exp.size(); ++j)
      d += static_cast<unsigned long>(exp[j]) * base_weight(p, g, j);
    out.push_back(static_cast<long>(d) + shift);
  }
}

inline void dedup(std::vector<long>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

// Audits every defining relation: a relation is homogeneous when all its
// terms, both sides, sit in one degree. The rows keep the full degree
// ledger so a failure shows exactly which terms disagree.
inline HomogeneityReport homogeneity_check(const Presentation& p, GradingKind g) {
  HomogeneityReport rep;
  rep.kind = g;
  rep.homogeneous = true;
  std::size_t n = p.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const PairRelation& R = p.relation(i, j);
      RelationLedgerRow row;
      row.relation = p.xnames[j] + "*" + p.xnames[i];
      long lhs = static_cast<long>(x_weight(p, g, i)) + x_weight(p, g, j);
      std::vector<long> degs{lhs};
      detail::collect_base_degrees(p, g, R.c, lhs, degs);
      for (std::size_t k = 0; k < n; ++k)
        detail::collect_base_degrees(p, g, R.dlin[k], x_weight(p, g, k), degs);
      detail::collect_base_degrees(p, g, R.d0, 0, degs);
      detail::dedup(degs);
      row.degrees = degs;
      row.homogeneous = degs.size() == 1;
      rep.homogeneous = rep.homogeneous && row.homogeneous;
      rep.rows.push_back(std::move(row));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < p.base.m(); ++j) {
      RelationLedgerRow row;
      row.relation = p.xnames[i] + "*" + p.base.names[j];
      long lhs = static_cast<long>(x_weight(p, g, i)) + base_weight(p, g, j);
      std::vector<long> degs{lhs};
      detail::collect_base_degrees(p, g, p.sigma[i].images[j],
                                   static_cast<long>(x_weight(p, g, i)), degs);
      detail::collect_base_degrees(p, g, p.delta[i].images[j], 0, degs);
      detail::dedup(degs);
      row.degrees = degs;
      row.homogeneous = degs.size() == 1;
      rep.homogeneous = rep.homogeneous && row.homogeneous;
      rep.rows.push_back(std::move(row));
    }

  // For a quasi-commutative r-augmented presentation the standard grading
  // exhibits A as a quadratic quotient of the tensor algebra over R on the
  // span of the variables.
  if (g == GradingKind::Standard && rep.homogeneous) {
    ClassificationReport c = classify(p);
    if (c.quasi_commutative && c.r_augmented) {
      CompatibleWitness w;
      w.generators = p.xnames;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          w.relations.push_back(p.xnames[j] + "*" + p.xnames[i] + " - (" +
                                p.relation(i, j).c.to_string(p.base.names) + ")*" +
                                p.xnames[i] + "*" + p.xnames[j]);
      rep.compatible = std::move(w);
    }
  }
  return rep;
}

struct GradedDims {
  GradingKind kind = GradingKind::Standard;
  bool bigraded = false;
  // Single gradings: (degree, dim). Bigraded: (base-degree j, x-degree k, dim).
  std::vector<std::pair<unsigned, std::size_t>> single;
  std::vector<std::tuple<unsigned, unsigned, std::size_t>> pairs;
};

// Exact K-dimensions of graded components, through the free left-module
// decomposition A = (+)_alpha R x^alpha.
//   Standard:    needs the grading to pass the homogeneity audit.
//   BaseInduced: needs a constant presentation; components are bigraded by
//                (base degree, x-count).
//   XDegree:     needs a finite-dimensional base.
inline GradedDims grading_dims(const Presentation& p, GradingKind g, unsigned bound_a,
                               unsigned bound_b = 0) {
  GradedDims out;
  out.kind = g;
  RingBasis rb(p.base);
  switch (g) {
    case GradingKind::Standard: {
      if (!homogeneity_check(p, g).homogeneous)
        throw std::domain_error("standard grading is not valid for this presentation");
      for (unsigned d = 0; d <= bound_a; ++d) {
        std::size_t dim = 0;
        for (unsigned k = 0; k <= d; ++k)
          dim += x_monomials(p.n(), p.xdegrees, k).size() * rb.dim(d - k);
        out.single.emplace_back(d, dim);
      }
      return out;
    }
    case GradingKind::BaseInduced: {
      if (!classify(p).constant)
        throw std::domain_error("base-induced grading needs a constant presentation");
      out.bigraded = true;
      std::vector<unsigned> ones(p.n(), 1);
      for (unsigned j = 0; j <= bound_a; ++j)
        for (unsigned k = 0; k <= bound_b; ++k)
          out.pairs.emplace_back(j, k, rb.dim(j) * x_monomials(p.n(), ones, k).size());
      return out;
    }
    case GradingKind::XDegree: {
      if (!rb.finite_dimensional())
        throw std::domain_error("x-degree components are infinite over this base");
      for (unsigned k = 0; k <= bound_a; ++k)
        out.single.emplace_back(k, rb.total_dim() * x_monomials(p.n(), p.xdegrees, k).size());
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

// A modulo the two-sided ideal generated by the base radical <y_1..y_m>:
// the base collapses to K and each c is replaced by its constant term.
inline Presentation radical_quotient(const Presentation& p) {
  ClassificationReport cls = classify(p);
  if (!cls.quasi_commutative)
    throw std::domain_error("radical quotient needs a quasi-commutative presentation");
  if (!validate_base_spec(p.base).finite_dimensional)
    throw std::domain_error("radical quotient needs a finite-dimensional local base");
  // Sigma must keep the radical inside itself or the quotient kills
  // variables: x_i y = sigma_i(y) x_i forces sigma images of radical
  // elements to stay radical.
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = 0; j < p.base.m(); ++j)
      if (!p.sigma[i].images[j].constant_coeff().is_zero())
        throw std::domain_error("sigma of " + p.xnames[i] +
                                " does not preserve the base radical");
  Presentation q = make_presentation(ground_field(p.base.field), p.xnames);
  q.xdegrees = p.xdegrees;
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = i + 1; j < p.n(); ++j) {
      Scalar c0 = p.relation(i, j).c.constant_coeff();
      if (c0.is_zero())
        throw std::domain_error("c image vanishes for (" + p.xnames[i] + ", " + p.xnames[j] +
                                "); the quotient is not a skew extension");
      q.relation(i, j).c = BaseElement::constant(q.base, c0);
    }
  return q;
}

struct RadicalCommutationReport {
  bool ok = false;
  std::string detail;
};

// Verifies A_1 rad = rad A_1 inside the x-degree-1 component
// A_1 = (+)_i R x_i, with rad the span of the positive-degree base
// monomials. Both sides are whole subspaces: a bijective sigma may permute
// the radical without fixing individual elements, so the comparison is
// span against span, as row spaces over K.
inline RadicalCommutationReport radical_commutation_check(const Presentation& p) {
  RadicalCommutationReport rep;
  ClassificationReport cls = classify(p);
  if (!cls.quasi_commutative)
    throw std::domain_error("radical commutation check needs quasi-commutativity");
  if (cls.bijective != Cert::Yes)
    throw std::domain_error("radical commutation check needs a bijective presentation");
  RingBasis rb(p.base);
  if (!rb.finite_dimensional())
    throw std::domain_error("radical commutation check needs a finite-dimensional base");

  std::vector<Exp> rmons = rb.all_monomials();
  std::vector<Exp> radical;
  for (const Exp& e : rmons)
    if (!exp_is_zero(e)) radical.push_back(e);
  if (radical.empty()) {
    rep.ok = true;
    rep.detail = "zero radical";
    return rep;
  }
  // Coordinates on A_1: (base monomial, variable index).
  std::map<Exp, std::size_t> rindex;
  for (std::size_t t = 0; t < rmons.size(); ++t) rindex.emplace(rmons[t], t);
  std::size_t dim = rmons.size() * p.n();
  Rewriter rw(p);
  auto coords = [&](const SkewElement& e) {
    std::vector<Scalar> v(dim, Scalar::zero(p.base.field));
    for (const auto& [alpha, c] : e.terms()) {
      if (exp_total(alpha) != 1) throw std::logic_error("product left the x-degree-1 window");
      std::size_t i = 0;
      while (alpha[i] == 0) ++i;
      for (const auto& [exp, s] : c.terms())
        v[rindex.at(exp) * p.n() + i] = s;
    }
    return v;
  };
  std::size_t rows = radical.size() * rmons.size() * p.n();
  Matrix left(rows, dim, p.base.field);
  Matrix right(rows, dim, p.base.field);
  std::size_t row = 0;
  for (const Exp& re : radical) {
    SkewElement r = SkewElement::embed(p, BaseElement::monomial(p.base.field, re,
                                                                Scalar::one(p.base.field)));
    for (const Exp& be : rmons)
      for (std::size_t i = 0; i < p.n(); ++i, ++row) {
        SkewElement a = SkewElement::monomial(
            p, [&] { Exp a1(p.n(), 0); a1[i] = 1; return a1; }(),
            BaseElement::monomial(p.base.field, be, Scalar::one(p.base.field)));
        left.set_row(row, coords(rw.mul(a, r)));
        right.set_row(row, coords(rw.mul(r, a)));
      }
  }
  if (!rowspaces_equal(left, right)) {
    rep.ok = false;
    rep.detail = "A_1 rad and rad A_1 differ as subspaces of A_1";
    return rep;
  }
  rep.ok = true;
  rep.detail = "A_1 rad = rad A_1";
  return rep;
}

}  // namespace spbw
