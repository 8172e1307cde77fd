// Finite-dimensional windows of graded and bigraded modules over a skew
// extension: ambient monomial bases per degree, coordinates for free
// modules, Nakayama multipliers for minimal-generator selection, and the
// quotient-module windows with explicit generator actions.
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "spbw/classify.hpp"
#include "spbw/gradings.hpp"
#include "spbw/linalg.hpp"

namespace spbw {

// Degree label. Single gradings use a alone (b = 0): the total weighted
// degree in classical mode, the x-degree in generalized mode. Bigraded use
// (a, b) = (base degree, x-count).
struct ADeg {
  unsigned a = 0;
  unsigned b = 0;
  auto operator<=>(const ADeg&) const = default;
};

inline std::string to_string(const ADeg& d, bool bigraded) {
  return bigraded ? "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")"
                  : std::to_string(d.a);
}

// Componentwise difference; false when it would go negative.
inline bool adeg_sub(const ADeg& x, const ADeg& s, ADeg& out) {
  if (x.a < s.a || x.b < s.b) return false;
  out = ADeg{x.a - s.a, x.b - s.b};
  return true;
}

// Classical resolves A0 = K under the standard grading; Generalized
// resolves A0 = R under the x-degree grading; RAugmented resolves R = A/A+
// under the bigraded (base degree, x-count) decomposition.
enum class ResolutionMode { Classical, Generalized, RAugmented };

inline std::string to_string(ResolutionMode m) {
  switch (m) {
    case ResolutionMode::Classical: return "classical";
    case ResolutionMode::Generalized: return "generalized";
    default: return "r-augmented";
  }
}

// Degree of each algebra generator in the mode's grading; base generators
// first, then the x's.
inline std::vector<ADeg> generator_shifts(const Presentation& p, ResolutionMode mode) {
  std::vector<ADeg> out;
  for (std::size_t j = 0; j < p.base.m(); ++j) {
    if (mode == ResolutionMode::Generalized)
      out.push_back(ADeg{0, 0});
    else
      out.push_back(ADeg{p.base.degrees[j], 0});
  }
  for (std::size_t i = 0; i < p.n(); ++i) {
    if (mode == ResolutionMode::RAugmented)
      out.push_back(ADeg{0, 1});
    else
      out.push_back(ADeg{p.xdegrees[i], 0});
  }
  return out;
}

// Degree bookkeeping shared by the resolution engine and the module
// windows: monomial bases of A per degree, coordinates, and the left-ideal
// generators of the irrelevant ideal.
class ModeContext {
 public:
  // Owns a copy of the presentation: the rewriter and the cached bases
  // reference it for the context's whole lifetime.
  ModeContext(const Presentation& p, ResolutionMode m)
      : p_(p), mode_(m), rb_(p_.base), rw_(p_) {
    build_multipliers();
  }

  const Presentation& presentation() const { return p_; }
  ResolutionMode mode() const { return mode_; }
  Rewriter& rewriter() const { return rw_; }
  const RingBasis& ring_basis() const { return rb_; }
  bool bigraded() const { return mode_ == ResolutionMode::RAugmented; }

  // The coordinate the certificate compares against the homological index.
  unsigned internal(const ADeg& d) const { return bigraded() ? d.b : d.a; }

  // Window degrees below the bound, ascending so every earlier-degree
  // kernel is available when a degree is processed.
  std::vector<ADeg> window_degrees(const ADeg& bound) const {
    std::vector<ADeg> out;
    for (unsigned a = 0; a <= bound.a; ++a) {
      if (bigraded())
        for (unsigned b = 0; b <= bound.b; ++b) out.push_back(ADeg{a, b});
      else
        out.push_back(ADeg{a, 0});
    }
    return out;
  }

  // Monomial K-basis (base monomial, x monomial) of A in one degree.
  const std::vector<std::pair<Exp, Exp>>& ambient(const ADeg& d) const {
    auto it = ambient_.find(d);
    if (it != ambient_.end()) return it->second;
    std::vector<std::pair<Exp, Exp>> mons;
    switch (mode_) {
      case ResolutionMode::Classical:
        for (unsigned k = d.a; k + 1 > 0; --k)
          for (const Exp& x : x_monomials(p_.n(), p_.xdegrees, k))
            for (const Exp& r : rb_.monomials(d.a - k)) mons.emplace_back(r, x);
        break;
      case ResolutionMode::Generalized:
        if (!rb_.finite_dimensional())
          throw std::domain_error("x-degree windows need a finite-dimensional base");
        for (const Exp& x : x_monomials(p_.n(), p_.xdegrees, d.a))
          for (const Exp& r : rb_.all_monomials()) mons.emplace_back(r, x);
        break;
      case ResolutionMode::RAugmented: {
        std::vector<unsigned> ones(p_.n(), 1);
        for (const Exp& x : x_monomials(p_.n(), ones, d.b))
          for (const Exp& r : rb_.monomials(d.a)) mons.emplace_back(r, x);
        break;
      }
    }
    auto [pos, inserted] = ambient_.emplace(d, std::move(mons));
    (void)inserted;
    std::map<std::pair<Exp, Exp>, std::size_t>& idx = index_[d];
    for (std::size_t t = 0; t < pos->second.size(); ++t) idx.emplace(pos->second[t], t);
    return pos->second;
  }

  // Degree of a monomial r x^alpha under this mode's grading.
  ADeg monomial_degree(const Exp& r, const Exp& x) const {
    unsigned rdeg = static_cast<unsigned>(exp_wdeg(r, p_.base.degrees));
    unsigned xw = static_cast<unsigned>(x_deg(p_, GradingKind::Standard, x));
    switch (mode_) {
      case ResolutionMode::Classical: return ADeg{rdeg + xw, 0};
      case ResolutionMode::Generalized: return ADeg{xw, 0};
      default: return ADeg{rdeg, static_cast<unsigned>(exp_total(x))};
    }
  }

  // Coordinates of a homogeneous element in the degree-d ambient basis.
  std::vector<Scalar> coords(const SkewElement& e, const ADeg& d) const {
    ambient(d);
    const auto& idx = index_.at(d);
    std::vector<Scalar> v(idx.size(), Scalar::zero(p_.base.field));
    for (const auto& [alpha, c] : e.terms())
      for (const auto& [rexp, s] : c.terms()) {
        if (monomial_degree(rexp, alpha) != d)
          throw std::logic_error("element is not homogeneous of the expected degree");
        v[idx.at({rexp, alpha})] = s;
      }
    return v;
  }

  struct Mult {
    SkewElement elem;
    ADeg shift;
    std::string label;
  };

  // Left-ideal generators of the irrelevant ideal J: every homogeneous
  // element of J is a sum of terms w * (element of A) over these w, which
  // makes (J*K)_d = sum_w w*K_{d - shift_w} for a submodule K. In
  // generalized mode J is the positive x-degree part and the base
  // generators are excluded; they belong to the coefficient ring A0 = R.
  const std::vector<Mult>& nakayama_multipliers() const { return mult_; }

  // K-basis of the degree-0 coefficient ring the covers are free over:
  // {1} in classical and r-augmented mode, a monomial basis of R in
  // generalized mode.
  std::vector<BaseElement> cover_ring_basis() const {
    std::vector<BaseElement> out{BaseElement::one(p_.base)};
    if (mode_ == ResolutionMode::Generalized)
      for (const Exp& e : rb_.all_monomials())
        if (!exp_is_zero(e))
          out.push_back(BaseElement::monomial(p_.base.field, e, Scalar::one(p_.base.field)));
    return out;
  }

 private:
  void build_multipliers() {
    std::vector<ADeg> shifts = generator_shifts(p_, mode_);
    if (mode_ != ResolutionMode::Generalized)
      for (std::size_t j = 0; j < p_.base.m(); ++j)
        mult_.push_back(Mult{SkewElement::embed(p_, BaseElement::variable(p_.base, j)),
                             shifts[j], p_.base.names[j]});
    for (std::size_t i = 0; i < p_.n(); ++i)
      mult_.push_back(
          Mult{SkewElement::xvar(p_, i), shifts[p_.base.m() + i], p_.xnames[i]});
  }

  Presentation p_;
  ResolutionMode mode_;
  RingBasis rb_;
  mutable Rewriter rw_;
  mutable std::map<ADeg, std::vector<std::pair<Exp, Exp>>> ambient_;
  mutable std::map<ADeg, std::map<std::pair<Exp, Exp>, std::size_t>> index_;
  std::vector<Mult> mult_;
};

// A free graded left module presented by the degrees of its generators.
struct FreeModule {
  std::vector<ADeg> gens;
};

// Layout of the degree-d K-basis of a free module: per-generator slices of
// ambient monomials.
struct FreeBasis {
  std::vector<std::size_t> offset;  // per generator; offset[g+1]-offset[g] = slice
  std::vector<ADeg> slice_degree;   // degree of the A-part for each generator
  std::vector<bool> active;
  std::size_t dim = 0;
};

inline FreeBasis free_basis(const ModeContext& ctx, const FreeModule& f, const ADeg& d) {
  FreeBasis fb;
  fb.offset.resize(f.gens.size() + 1, 0);
  fb.slice_degree.resize(f.gens.size());
  fb.active.resize(f.gens.size(), false);
  for (std::size_t g = 0; g < f.gens.size(); ++g) {
    fb.offset[g] = fb.dim;
    ADeg rem;
    if (adeg_sub(d, f.gens[g], rem)) {
      fb.active[g] = true;
      fb.slice_degree[g] = rem;
      fb.dim += ctx.ambient(rem).size();
    }
  }
  fb.offset[f.gens.size()] = fb.dim;
  return fb;
}

// Coordinates at degree d of (a_1, .., a_q) with a_g homogeneous of degree
// d - deg(gen g).
inline std::vector<Scalar> free_coords(const ModeContext& ctx, const FreeModule& f,
                                       const FreeBasis& fb, const ADeg& d,
                                       const std::vector<SkewElement>& comps) {
  (void)d;
  std::vector<Scalar> v(fb.dim, Scalar::zero(ctx.presentation().base.field));
  for (std::size_t g = 0; g < f.gens.size(); ++g) {
    if (comps[g].is_zero()) continue;
    if (!fb.active[g]) throw std::logic_error("component on a generator above this degree");
    std::vector<Scalar> part = ctx.coords(comps[g], fb.slice_degree[g]);
    for (std::size_t t = 0; t < part.size(); ++t) v[fb.offset[g] + t] = part[t];
  }
  return v;
}

// Inverse of free_coords: the component list of one coordinate vector.
inline std::vector<SkewElement> free_components(const ModeContext& ctx, const FreeModule& f,
                                                const FreeBasis& fb,
                                                const std::vector<Scalar>& v) {
  const Presentation& p = ctx.presentation();
  std::vector<SkewElement> comps(f.gens.size(), SkewElement::zero(p));
  for (std::size_t g = 0; g < f.gens.size(); ++g) {
    if (!fb.active[g]) continue;
    const auto& mons = ctx.ambient(fb.slice_degree[g]);
    for (std::size_t t = 0; t < mons.size(); ++t) {
      const Scalar& s = v[fb.offset[g] + t];
      if (s.is_zero()) continue;
      comps[g] = comps[g] + SkewElement::monomial(
                                p, mons[t].second,
                                BaseElement::monomial(p.base.field, mons[t].first, s));
    }
  }
  return comps;
}

// Window of a quotient target module with explicit generator actions. The
// two targets are the trivial module A0 (classical or generalized grading)
// and the base module R = A/A+ (bigraded).
enum class WindowTarget { TrivialA0, BaseR };

struct GradedWindow {
  ResolutionMode mode = ResolutionMode::Classical;
  WindowTarget target = WindowTarget::TrivialA0;
  ADeg bound;
  std::map<ADeg, std::size_t> dims;
  // Surviving base-monomial basis per degree (the x-part of a basis
  // element is always trivial on these quotients).
  std::map<ADeg, std::vector<Exp>> basis;
  // Generator order: base generators then x's, as in generator_shifts.
  std::vector<ADeg> shifts;
  std::vector<std::string> labels;
  // actions[g] holds, per source degree, the matrix M_d -> M_{d + shift}
  // with rows indexed by the source basis.
  std::vector<std::map<ADeg, Matrix>> actions;
};

// The quotient-module window: A0 = A/J keeps only internal degree 0, and
// R = A/A+ keeps only x-count 0. Base generators act by multiplication on
// what survives; every x_i acts as zero on the quotient.
inline GradedWindow build_window(const Presentation& p, ResolutionMode mode,
                                 WindowTarget target, const ADeg& bound) {
  if ((target == WindowTarget::BaseR) != (mode == ResolutionMode::RAugmented))
    throw std::domain_error("the base-module target is exactly the bigraded mode");
  if (target == WindowTarget::BaseR && !classify(p).r_augmented)
    throw std::domain_error("the base-module target needs an r-augmented presentation");
  ModeContext ctx(p, mode);
  RingBasis rb(p.base);
  GradedWindow w;
  w.mode = mode;
  w.target = target;
  w.bound = bound;
  w.shifts = generator_shifts(p, mode);
  w.labels = p.base.names;
  w.labels.insert(w.labels.end(), p.xnames.begin(), p.xnames.end());
  for (const ADeg& d : ctx.window_degrees(bound)) {
    std::vector<Exp> b;
    if (target == WindowTarget::BaseR) {
      if (d.b == 0) b = rb.monomials(d.a);
    } else if (mode == ResolutionMode::Generalized) {
      if (d.a == 0) b = rb.all_monomials();
    } else {
      if (d.a == 0 && d.b == 0) b = {Exp(p.base.m(), 0)};
    }
    w.dims[d] = b.size();
    w.basis[d] = std::move(b);
  }
  for (std::size_t g = 0; g < w.shifts.size(); ++g) {
    std::map<ADeg, Matrix> maps;
    bool is_x = g >= p.base.m();
    for (const auto& [d, src] : w.basis) {
      ADeg dst{d.a + w.shifts[g].a, d.b + w.shifts[g].b};
      auto it = w.basis.find(dst);
      if (it == w.basis.end()) continue;  // shifts outside the window
      const std::vector<Exp>& out = it->second;
      Matrix m(src.size(), out.size(), p.base.field);
      if (!is_x && !src.empty() && !out.empty()) {
        std::map<Exp, std::size_t> oidx;
        for (std::size_t t = 0; t < out.size(); ++t) oidx.emplace(out[t], t);
        BaseElement gen = BaseElement::variable(p.base, g);
        for (std::size_t s = 0; s < src.size(); ++s) {
          BaseElement prod =
              mul(p.base, gen,
                  BaseElement::monomial(p.base.field, src[s], Scalar::one(p.base.field)));
          for (const auto& [e, c] : prod.terms()) {
            auto pos = oidx.find(e);
            if (pos == oidx.end()) throw std::logic_error("product left the window basis");
            m.at(s, pos->second) = c;
          }
        }
      }
      maps.emplace(d, std::move(m));
    }
    w.actions.push_back(std::move(maps));
  }
  return w;
}

namespace detail {

// An element of the window with components in several degrees; components
// that shift outside the window are dropped on both sides of a comparison.
using WinElem = std::map<ADeg, std::vector<Scalar>>;

inline void win_add(WinElem& into, const ADeg& d, const std::vector<Scalar>& v,
                    const Scalar& scale) {
  if (v.empty()) return;
  auto it = into.find(d);
  if (it == into.end()) {
    std::vector<Scalar> scaled = v;
    for (Scalar& s : scaled) s = s * scale;
    into.emplace(d, std::move(scaled));
    return;
  }
  for (std::size_t t = 0; t < v.size(); ++t) it->second[t] = it->second[t] + v[t] * scale;
}

inline WinElem win_act_gen(const GradedWindow& w, std::size_t g, const WinElem& e) {
  WinElem out;
  for (const auto& [d, v] : e) {
    auto it = w.actions[g].find(d);
    if (it == w.actions[g].end()) continue;
    const Matrix& m = it->second;
    if (m.cols() == 0) continue;
    std::vector<Scalar> img(m.cols(), Scalar::zero(m.field()));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) img[c] = img[c] + v[r] * m.at(r, c);
    win_add(out, ADeg{d.a + w.shifts[g].a, d.b + w.shifts[g].b}, img,
            Scalar::one(m.field()));
  }
  return out;
}

inline WinElem win_act_base(const GradedWindow& w, std::size_t m_base, const BaseElement& b,
                            const WinElem& e) {
  WinElem out;
  for (const auto& [exp, c] : b.terms()) {
    WinElem cur = e;
    for (std::size_t j = 0; j < m_base; ++j)
      for (unsigned t = 0; t < exp[j]; ++t) cur = win_act_gen(w, j, cur);
    for (const auto& [d, v] : cur) win_add(out, d, v, c);
  }
  return out;
}

inline bool win_eq(const WinElem& x, const WinElem& y) {
  auto nonzero = [](const WinElem& e) {
    WinElem out;
    for (const auto& [d, v] : e) {
      bool z = true;
      for (const Scalar& s : v) z = z && s.is_zero();
      if (!z) out.emplace(d, v);
    }
    return out;
  };
  WinElem a = nonzero(x), b = nonzero(y);
  if (a.size() != b.size()) return false;
  for (const auto& [d, v] : a) {
    auto it = b.find(d);
    if (it == b.end()) return false;
    for (std::size_t t = 0; t < v.size(); ++t)
      if (!(v[t] == it->second[t])) return false;
  }
  return true;
}

}  // namespace detail

// Replays every defining relation of the presentation on the window's
// action matrices: pair relations, the sigma/delta exchange laws, base
// commutativity, and the base ideal. True when every one holds on every
// in-window basis vector.
inline bool check_window_relations(const Presentation& p, const GradedWindow& w) {
  using detail::WinElem;
  std::size_t m = p.base.m();
  auto xg = [&](std::size_t i) { return m + i; };
  auto unit = [&](const ADeg& d, std::size_t t) {
    WinElem e;
    std::vector<Scalar> v(w.dims.at(d), Scalar::zero(p.base.field));
    v[t] = Scalar::one(p.base.field);
    e.emplace(d, std::move(v));
    return e;
  };
  for (const auto& [d, dim] : w.dims)
    for (std::size_t t = 0; t < dim; ++t) {
      WinElem v = unit(d, t);
      for (std::size_t i = 0; i < p.n(); ++i)
        for (std::size_t j = i + 1; j < p.n(); ++j) {
          const PairRelation& R = p.relation(i, j);
          WinElem lhs = detail::win_act_gen(w, xg(j), detail::win_act_gen(w, xg(i), v));
          WinElem rhs = detail::win_act_base(
              w, m, R.c, detail::win_act_gen(w, xg(i), detail::win_act_gen(w, xg(j), v)));
          for (std::size_t k = 0; k < p.n(); ++k) {
            WinElem term =
                detail::win_act_base(w, m, R.dlin[k], detail::win_act_gen(w, xg(k), v));
            for (const auto& [dd, vv] : term)
              detail::win_add(rhs, dd, vv, Scalar::one(p.base.field));
          }
          WinElem d0 = detail::win_act_base(w, m, R.d0, v);
          for (const auto& [dd, vv] : d0)
            detail::win_add(rhs, dd, vv, Scalar::one(p.base.field));
          if (!detail::win_eq(lhs, rhs)) return false;
        }
      for (std::size_t i = 0; i < p.n(); ++i)
        for (std::size_t j = 0; j < m; ++j) {
          WinElem lhs = detail::win_act_gen(w, xg(i), detail::win_act_gen(w, j, v));
          WinElem rhs = detail::win_act_base(w, m, p.sigma[i].images[j],
                                             detail::win_act_gen(w, xg(i), v));
          WinElem dterm = detail::win_act_base(w, m, p.delta[i].images[j], v);
          for (const auto& [dd, vv] : dterm)
            detail::win_add(rhs, dd, vv, Scalar::one(p.base.field));
          if (!detail::win_eq(lhs, rhs)) return false;
        }
      for (std::size_t j1 = 0; j1 < m; ++j1)
        for (std::size_t j2 = j1 + 1; j2 < m; ++j2) {
          WinElem lhs = detail::win_act_gen(w, j2, detail::win_act_gen(w, j1, v));
          WinElem rhs = detail::win_act_gen(w, j1, detail::win_act_gen(w, j2, v));
          if (!detail::win_eq(lhs, rhs)) return false;
        }
      for (const Exp& g : p.base.ideal) {
        WinElem img = detail::win_act_base(
            w, m, BaseElement::monomial(p.base.field, g, Scalar::one(p.base.field)), v);
        if (!detail::win_eq(img, WinElem{})) return false;
      }
    }
  return true;
}

}  // namespace spbw
