// Commutative coefficient rings K[y1..ym]/M for a monomial ideal M:
// canonical-form elements, weighted gradings, graded bases, ring
// endomorphisms and twisted derivations with exact validity checks.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "spbw/linalg.hpp"
#include "spbw/scalar.hpp"

namespace spbw {

using Exp = std::vector<unsigned>;

inline Exp exp_add(const Exp& a, const Exp& b) {
  if (a.size() != b.size()) throw std::invalid_argument("exponent size mismatch");
  Exp r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] + b[i];
    if (r[i] < a[i]) throw std::overflow_error("exponent overflow");
  }
  return r;
}

inline bool exp_divides(const Exp& a, const Exp& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline unsigned long exp_total(const Exp& a) {
  unsigned long t = 0;
  for (unsigned e : a) t += e;
  return t;
}

inline unsigned long exp_wdeg(const Exp& a, const std::vector<unsigned>& w) {
  unsigned long t = 0;
  for (std::size_t i = 0; i < a.size(); ++i) t += static_cast<unsigned long>(a[i]) * w[i];
  return t;
}

inline bool exp_is_zero(const Exp& a) {
  for (unsigned e : a)
    if (e != 0) return false;
  return true;
}

// Graded-lexicographic, highest term first; earlier variables dominate ties.
struct GrLexGreater {
  bool operator()(const Exp& a, const Exp& b) const {
    unsigned long ta = exp_total(a), tb = exp_total(b);
    if (ta != tb) return ta > tb;
    return a > b;
  }
};

struct BaseRingSpec {
  FieldSpec field;
  std::vector<std::string> names;
  std::vector<unsigned> degrees;  // weights, one per variable, all positive
  std::vector<Exp> ideal;         // monomial generators, exponent vectors

  std::size_t m() const { return names.size(); }
};

// A spec over the same field with no variables, i.e. the ground field itself.
inline BaseRingSpec ground_field(const FieldSpec& f) { return BaseRingSpec{f, {}, {}, {}}; }

// Elements in canonical form: no term divisible by an ideal generator, terms
// ordered graded-lex descending, zero coefficients dropped.
class BaseElement {
 public:
  BaseElement() : m_(0) {}
  BaseElement(FieldSpec f, std::size_t m) : f_(f), m_(m) {}

  static BaseElement zero(const BaseRingSpec& s) { return BaseElement(s.field, s.m()); }

  static BaseElement constant(const BaseRingSpec& s, const Scalar& c) {
    BaseElement r(s.field, s.m());
    r.add_term(Exp(s.m(), 0), c);
    return r;
  }

  static BaseElement one(const BaseRingSpec& s) {
    return constant(s, Scalar::one(s.field));
  }

  static BaseElement variable(const BaseRingSpec& s, std::size_t j) {
    if (j >= s.m()) throw std::out_of_range("no such base variable");
    Exp e(s.m(), 0);
    e[j] = 1;
    BaseElement r(s.field, s.m());
    r.add_term(e, Scalar::one(s.field));
    return r;
  }

  // Caller is responsible for reduction; use reduce() when exps may hit M.
  static BaseElement monomial(const FieldSpec& f, const Exp& e, const Scalar& c) {
    BaseElement r(f, e.size());
    r.add_term(e, c);
    return r;
  }

  FieldSpec field() const { return f_; }
  std::size_t vars() const { return m_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t num_terms() const { return t_.size(); }

  const std::map<Exp, Scalar, GrLexGreater>& terms() const { return t_; }

  Scalar coeff(const Exp& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? Scalar::zero(f_) : it->second;
  }

  Scalar constant_coeff() const { return coeff(Exp(m_, 0)); }

  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && exp_is_zero(t_.begin()->first));
  }

  void add_term(const Exp& e, const Scalar& c) {
    if (e.size() != m_) throw std::invalid_argument("exponent size mismatch");
    if (c.is_zero()) return;
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  BaseElement operator+(const BaseElement& o) const {
    check(o);
    BaseElement r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
  }

  BaseElement operator-(const BaseElement& o) const {
    check(o);
    BaseElement r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
  }

  BaseElement operator-() const {
    BaseElement r(f_, m_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }

  BaseElement scaled(const Scalar& s) const {
    BaseElement r(f_, m_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : t_) {
      Scalar v = c * s;
      if (!v.is_zero()) r.t_.emplace(e, v);
    }
    return r;
  }

  bool operator==(const BaseElement& o) const {
    check(o);
    return t_ == o.t_;
  }
  bool operator!=(const BaseElement& o) const { return !(*this == o); }

  // Weighted degree of the element, -1 for zero.
  long degree(const std::vector<unsigned>& w) const {
    long d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, static_cast<long>(exp_wdeg(e, w)));
    return d;
  }

  std::optional<long> homogeneous_degree(const std::vector<unsigned>& w) const {
    std::optional<long> d;
    for (const auto& [e, c] : t_) {
      long t = static_cast<long>(exp_wdeg(e, w));
      if (!d)
        d = t;
      else if (*d != t)
        return std::nullopt;
    }
    return d;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : t_) {
      Scalar a = c;
      std::string cs = a.to_string();
      bool neg = !cs.empty() && cs[0] == '-';
      if (first) {
        if (neg) out << "-";
      } else {
        out << (neg ? " - " : " + ");
      }
      if (neg) cs = cs.substr(1);
      std::string mono = monomial_string(e, names);
      if (mono.empty()) {
        out << cs;
      } else if (cs == "1") {
        out << mono;
      } else {
        out << cs << "*" << mono;
      }
      first = false;
    }
    return out.str();
  }

 private:
  static std::string monomial_string(const Exp& e, const std::vector<std::string>& names) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!first) out << "*";
      out << names[j];
      if (e[j] > 1) out << "^" << e[j];
      first = false;
    }
    return out.str();
  }

  void check(const BaseElement& o) const {
    if (f_ != o.f_ || m_ != o.m_)
      throw std::invalid_argument("elements from different base rings");
  }

  FieldSpec f_;
  std::size_t m_;
  std::map<Exp, Scalar, GrLexGreater> t_;
};

inline bool ideal_member(const BaseRingSpec& s, const Exp& e) {
  for (const Exp& g : s.ideal)
    if (exp_divides(g, e)) return true;
  return false;
}

inline BaseElement reduce(const BaseRingSpec& s, const BaseElement& a) {
  BaseElement r(s.field, s.m());
  for (const auto& [e, c] : a.terms())
    if (!ideal_member(s, e)) r.add_term(e, c);
  return r;
}

inline BaseElement mul(const BaseRingSpec& s, const BaseElement& a, const BaseElement& b) {
  BaseElement r(s.field, s.m());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      Exp e = exp_add(ea, eb);
      if (!ideal_member(s, e)) r.add_term(e, ca * cb);
    }
  return r;
}

inline BaseElement pow(const BaseRingSpec& s, const BaseElement& a, unsigned k) {
  BaseElement r = BaseElement::one(s);
  for (unsigned i = 0; i < k; ++i) r = mul(s, r, a);
  return r;
}

// A monomial class is nilpotent exactly when some ideal generator is
// supported inside its support (then a high power is divisible by it).
inline bool monomial_nilpotent(const BaseRingSpec& s, const Exp& e) {
  for (const Exp& g : s.ideal) {
    bool inside = true;
    for (std::size_t j = 0; j < g.size(); ++j)
      if (g[j] > 0 && e[j] == 0) {
        inside = false;
        break;
      }
    if (inside) return true;
  }
  return false;
}

// Units of K[y]/M: nonzero constant part plus a nilpotent tail. The tail is
// nilpotent exactly when each of its monomials is (sums of nilpotents in a
// commutative ring stay nilpotent).
inline bool is_unit(const BaseRingSpec& s, const BaseElement& a) {
  if (a.constant_coeff().is_zero()) return false;
  for (const auto& [e, c] : a.terms()) {
    if (exp_is_zero(e)) continue;
    if (!monomial_nilpotent(s, e)) return false;
  }
  return true;
}

struct BaseValidation {
  bool ok = false;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool finite_dimensional = false;
  bool local = false;
  std::string radical;
  BaseRingSpec normalized;  // redundant ideal generators removed
};

inline bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

inline BaseValidation validate_base_spec(const BaseRingSpec& s) {
  BaseValidation v;
  v.normalized = s;
  if (auto err = validate_field(s.field)) v.errors.push_back(*err);
  if (s.degrees.size() != s.m())
    v.errors.push_back("degree list does not match variable count");
  std::set<std::string> seen;
  for (const auto& n : s.names) {
    if (!valid_identifier(n)) v.errors.push_back("bad variable name: " + n);
    if (!seen.insert(n).second) v.errors.push_back("duplicate variable name: " + n);
  }
  for (unsigned d : s.degrees)
    if (d == 0) v.errors.push_back("variable degrees must be positive");
  for (const Exp& g : s.ideal) {
    if (g.size() != s.m()) {
      v.errors.push_back("ideal generator arity mismatch");
      continue;
    }
    if (exp_is_zero(g)) v.errors.push_back("ideal generator 1 collapses the ring");
  }
  if (!v.errors.empty()) return v;
  // Total degree at least 2: a bare variable in the ideal would collapse a
  // generator, and the degree-1 slice of M being empty is what makes the
  // linear-substitution rank test for injectivity exact.
  for (const Exp& g : s.ideal)
    if (exp_total(g) < 2)
      v.errors.push_back("ideal generator of degree below 2");
  if (!v.errors.empty()) return v;

  // Minimize the generating set: drop generators divisible by another.
  std::vector<Exp> kept;
  for (std::size_t i = 0; i < s.ideal.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < s.ideal.size(); ++j) {
      if (i == j) continue;
      if (exp_divides(s.ideal[j], s.ideal[i]) &&
          (!exp_divides(s.ideal[i], s.ideal[j]) || j < i)) {
        redundant = true;
        break;
      }
    }
    if (redundant)
      v.warnings.push_back("redundant ideal generator removed");
    else
      kept.push_back(s.ideal[i]);
  }
  v.normalized.ideal = kept;

  // Finite-dimensional iff every variable has a pure power in the ideal.
  v.finite_dimensional = true;
  for (std::size_t j = 0; j < s.m(); ++j) {
    bool pure = false;
    for (const Exp& g : kept) {
      bool only_j = g[j] > 0;
      for (std::size_t t = 0; t < g.size() && only_j; ++t)
        if (t != j && g[t] > 0) only_j = false;
      if (only_j) {
        pure = true;
        break;
      }
    }
    if (!pure) {
      v.finite_dimensional = false;
      break;
    }
  }
  v.local = v.finite_dimensional;
  if (v.local) {
    std::string r = "<";
    for (std::size_t j = 0; j < s.m(); ++j) {
      if (j) r += ", ";
      r += s.names[j];
    }
    r += ">";
    v.radical = r;
  }
  v.ok = true;
  return v;
}

// Graded monomial bases of R, one degree at a time, cached.
class RingBasis {
 public:
  explicit RingBasis(BaseRingSpec spec) : spec_(std::move(spec)) {
    BaseValidation v = validate_base_spec(spec_);
    if (!v.ok) throw std::invalid_argument("invalid base ring spec");
    spec_ = v.normalized;
    finite_ = v.finite_dimensional;
    if (finite_) {
      unsigned long bound = 0;
      for (std::size_t j = 0; j < spec_.m(); ++j) {
        unsigned cap = 0;
        for (const Exp& g : spec_.ideal) {
          bool only_j = g[j] > 0;
          for (std::size_t t = 0; t < g.size() && only_j; ++t)
            if (t != j && g[t] > 0) only_j = false;
          if (only_j && (cap == 0 || g[j] < cap)) cap = g[j];
        }
        bound += static_cast<unsigned long>(cap - 1) * spec_.degrees[j];
      }
      max_degree_ = static_cast<unsigned>(bound);
    }
  }

  const BaseRingSpec& spec() const { return spec_; }
  bool finite_dimensional() const { return finite_; }

  // Largest degree with a nonzero component (finite-dimensional case only).
  unsigned max_degree() const {
    if (!finite_) throw std::domain_error("base ring is not finite-dimensional");
    return max_degree_;
  }

  const std::vector<Exp>& monomials(unsigned d) const {
    while (by_degree_.size() <= d) {
      unsigned next = static_cast<unsigned>(by_degree_.size());
      std::vector<Exp> mons;
      Exp cur(spec_.m(), 0);
      enumerate(0, next, cur, mons);
      std::sort(mons.begin(), mons.end(), GrLexGreater());
      std::map<Exp, std::size_t> idx;
      for (std::size_t i = 0; i < mons.size(); ++i) idx.emplace(mons[i], i);
      by_degree_.push_back(std::move(mons));
      index_.push_back(std::move(idx));
    }
    return by_degree_[d];
  }

  std::size_t dim(unsigned d) const { return monomials(d).size(); }

  std::size_t index(unsigned d, const Exp& e) const {
    monomials(d);
    auto it = index_[d].find(e);
    if (it == index_[d].end()) throw std::out_of_range("monomial not in graded basis");
    return it->second;
  }

  // All monomials of the finite-dimensional ring, degree-major order.
  std::vector<Exp> all_monomials() const {
    std::vector<Exp> out;
    for (unsigned d = 0; d <= max_degree(); ++d)
      for (const Exp& e : monomials(d)) out.push_back(e);
    return out;
  }

  std::size_t total_dim() const {
    std::size_t n = 0;
    for (unsigned d = 0; d <= max_degree(); ++d) n += dim(d);
    return n;
  }

 private:
  void enumerate(std::size_t j, unsigned remaining, Exp& cur, std::vector<Exp>& out) const {
    if (j == spec_.m()) {
      if (remaining == 0 && !ideal_member(spec_, cur)) out.push_back(cur);
      return;
    }
    unsigned w = spec_.degrees[j];
    for (unsigned e = 0; static_cast<unsigned long>(e) * w <= remaining; ++e) {
      cur[j] = e;
      enumerate(j + 1, remaining - e * w, cur, out);
    }
    cur[j] = 0;
  }

  BaseRingSpec spec_;
  bool finite_ = false;
  unsigned max_degree_ = 0;
  mutable std::vector<std::vector<Exp>> by_degree_;
  mutable std::vector<std::map<Exp, std::size_t>> index_;
};

enum class Cert { Yes, No, Unverified };

inline std::string to_string(Cert c) {
  switch (c) {
    case Cert::Yes: return "yes";
    case Cert::No: return "no";
    default: return "unverified";
  }
}

struct InjectivityReport {
  Cert cert = Cert::Unverified;
  std::string detail;
};

// Ring endomorphism of R fixing K, given by the images of the variables.
struct EndoMap {
  std::vector<BaseElement> images;

  static EndoMap identity(const BaseRingSpec& s) {
    EndoMap e;
    for (std::size_t j = 0; j < s.m(); ++j)
      e.images.push_back(BaseElement::variable(s, j));
    return e;
  }

  bool is_identity(const BaseRingSpec& s) const {
    for (std::size_t j = 0; j < s.m(); ++j)
      if (images[j] != BaseElement::variable(s, j)) return false;
    return true;
  }

  // Every image is a K-combination of variables (no constant, no higher terms).
  bool is_linear() const {
    for (const auto& im : images)
      for (const auto& [e, c] : im.terms())
        if (exp_total(e) != 1) return false;
    return true;
  }

  // Row j holds the coordinates of the image of variable j.
  Matrix matrix(const BaseRingSpec& s) const {
    Matrix m(s.m(), s.m(), s.field);
    for (std::size_t j = 0; j < s.m(); ++j)
      for (const auto& [e, c] : images[j].terms())
        for (std::size_t k = 0; k < s.m(); ++k)
          if (e[k] == 1) m.at(j, k) = c;
    return m;
  }
};

inline BaseElement apply_endo(const BaseRingSpec& s, const EndoMap& f, const BaseElement& a) {
  BaseElement out = BaseElement::zero(s);
  for (const auto& [e, c] : a.terms()) {
    BaseElement term = BaseElement::constant(s, c);
    for (std::size_t j = 0; j < s.m(); ++j)
      if (e[j] > 0) term = mul(s, term, pow(s, f.images[j], e[j]));
    out = out + term;
  }
  return out;
}

// The map respects the ideal: each generator must land in M.
inline std::optional<std::string> endo_well_defined(const BaseRingSpec& s, const EndoMap& f) {
  if (f.images.size() != s.m()) return "endomorphism image count mismatch";
  for (const auto& im : f.images)
    if (im.field() != s.field || im.vars() != s.m())
      return "endomorphism image from wrong ring";
  for (const Exp& g : s.ideal) {
    BaseElement img = apply_endo(s, f, BaseElement::monomial(s.field, g, Scalar::one(s.field)));
    if (!img.is_zero())
      return "endomorphism does not respect the ideal";
  }
  return std::nullopt;
}

// Injectivity is decided exactly for linear maps via rank; otherwise the map
// is probed on the graded pieces up to degree 3, which can refute but never
// confirm.
inline InjectivityReport endo_injectivity(const BaseRingSpec& s, const EndoMap& f) {
  InjectivityReport r;
  if (s.m() == 0) {
    r.cert = Cert::Yes;
    r.detail = "trivial base";
    return r;
  }
  if (f.is_linear()) {
    Matrix m = f.matrix(s);
    if (rank(m) == s.m()) {
      r.cert = Cert::Yes;
      r.detail = "linear with invertible matrix";
    } else {
      r.cert = Cert::No;
      r.detail = "linear with singular matrix";
    }
    return r;
  }
  // Probe: restrict the map to the span of all monomials of total degree at
  // most 3 and look for a kernel vector. The window is cumulative because a
  // kernel element of an inhomogeneous substitution mixes degrees.
  std::vector<unsigned> ones(s.m(), 1);
  BaseRingSpec plain = s;
  plain.degrees = ones;
  RingBasis pb(plain);
  std::vector<Exp> window;
  for (unsigned d = 0; d <= 3; ++d)
    for (const Exp& e : pb.monomials(d)) window.push_back(e);
  std::vector<BaseElement> images;
  std::set<Exp, GrLexGreater> support;
  for (const Exp& e : window) {
    BaseElement img = apply_endo(s, f, BaseElement::monomial(s.field, e, Scalar::one(s.field)));
    for (const auto& [ee, cc] : img.terms()) support.insert(ee);
    images.push_back(std::move(img));
  }
  std::map<Exp, std::size_t, GrLexGreater> col;
  for (const Exp& e : support) col.emplace(e, col.size());
  Matrix m(window.size(), std::max<std::size_t>(col.size(), 1), s.field);
  for (std::size_t i = 0; i < images.size(); ++i)
    for (const auto& [ee, cc] : images[i].terms()) m.at(i, col[ee]) = cc;
  if (rank(m) < window.size()) {
    r.cert = Cert::No;
    r.detail = "kernel element within the degree-3 window";
    return r;
  }
  r.cert = Cert::Unverified;
  r.detail = "nonlinear images, probed to degree 3 only";
  return r;
}

inline InjectivityReport endo_bijectivity(const BaseRingSpec& s, const EndoMap& f) {
  InjectivityReport r;
  if (s.m() == 0) {
    r.cert = Cert::Yes;
    r.detail = "trivial base";
    return r;
  }
  if (!f.is_linear()) {
    r.cert = Cert::Unverified;
    r.detail = "nonlinear images";
    return r;
  }
  Matrix m = f.matrix(s);
  Matrix aug(s.m(), 2 * s.m(), s.field);
  for (std::size_t i = 0; i < s.m(); ++i) {
    for (std::size_t j = 0; j < s.m(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, s.m() + i) = Scalar::one(s.field);
  }
  auto piv = rref(aug);
  if (piv.size() < s.m() || piv.back() >= s.m()) {
    r.cert = Cert::No;
    r.detail = "linear with singular matrix";
    return r;
  }
  // Inverse substitution must respect the ideal as well.
  EndoMap inv;
  for (std::size_t j = 0; j < s.m(); ++j) {
    BaseElement im(s.field, s.m());
    for (std::size_t k = 0; k < s.m(); ++k) {
      Exp e(s.m(), 0);
      e[k] = 1;
      im.add_term(e, aug.at(j, s.m() + k));
    }
    inv.images.push_back(im);
  }
  if (endo_well_defined(s, inv)) {
    r.cert = Cert::No;
    r.detail = "inverse substitution does not respect the ideal";
    return r;
  }
  r.cert = Cert::Yes;
  r.detail = "linear with invertible matrix, inverse respects the ideal";
  return r;
}

// Twisted derivation for a companion endomorphism sigma, given on variables;
// extended by d(ab) = sigma(a) d(b) + d(a) b.
struct DerMap {
  std::vector<BaseElement> images;

  static DerMap zero(const BaseRingSpec& s) {
    DerMap d;
    for (std::size_t j = 0; j < s.m(); ++j) d.images.push_back(BaseElement::zero(s));
    return d;
  }

  bool is_zero() const {
    for (const auto& im : images)
      if (!im.is_zero()) return false;
    return true;
  }
};

namespace detail {
inline BaseElement der_monomial(const BaseRingSpec& s, const EndoMap& sig, const DerMap& d,
                                const Exp& e) {
  // Peel the first variable present; lower factors recurse.
  std::size_t j = 0;
  while (j < s.m() && e[j] == 0) ++j;
  if (j == s.m()) return BaseElement::zero(s);
  Exp rest = e;
  rest[j] -= 1;
  BaseElement tail = BaseElement::monomial(s.field, rest, Scalar::one(s.field));
  BaseElement dtail = der_monomial(s, sig, d, rest);
  return mul(s, sig.images[j], dtail) + mul(s, d.images[j], reduce(s, tail));
}
}  // namespace detail

inline BaseElement apply_der(const BaseRingSpec& s, const EndoMap& sig, const DerMap& d,
                             const BaseElement& a) {
  BaseElement out = BaseElement::zero(s);
  for (const auto& [e, c] : a.terms())
    out = out + detail::der_monomial(s, sig, d, e).scaled(c);
  return out;
}

// A twisted derivation over a commutative base must not see factor order:
// d(y_j y_k) computed either way forces
//   d(y_k)(sigma(y_j) - y_j) = d(y_j)(sigma(y_k) - y_k).
// Together with vanishing on ideal generators this makes the Leibniz
// extension well defined on R.
inline std::optional<std::string> der_well_defined(const BaseRingSpec& s, const EndoMap& sig,
                                                   const DerMap& d) {
  if (d.images.size() != s.m()) return "derivation image count mismatch";
  for (const auto& im : d.images)
    if (im.field() != s.field || im.vars() != s.m())
      return "derivation image from wrong ring";
  for (std::size_t j = 0; j < s.m(); ++j)
    for (std::size_t k = j + 1; k < s.m(); ++k) {
      BaseElement yj = BaseElement::variable(s, j), yk = BaseElement::variable(s, k);
      BaseElement lhs = mul(s, d.images[k], apply_endo(s, sig, yj) - yj);
      BaseElement rhs = mul(s, d.images[j], apply_endo(s, sig, yk) - yk);
      if (lhs != rhs)
        return "derivation incompatible with commutativity of " + s.names[j] + ", " + s.names[k];
    }
  for (const Exp& g : s.ideal) {
    BaseElement img = detail::der_monomial(s, sig, d, g);
    if (!img.is_zero()) return "derivation does not respect the ideal";
  }
  return std::nullopt;
}

}  // namespace spbw
