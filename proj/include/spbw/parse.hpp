// Text front end: the presentation file format, an expression grammar for
// ring elements, and the canonical writer whose output parses back to an
// identical presentation.
//
// File format, line oriented, '#' starts a comment:
//   [field]      "rationals" or "prime <p>"
//   [base]       "<name> <degree>" per generator; "ideal <mon> <mon> .."
//   [vars]       "<name> <degree>" per skew variable
//   [sigma]      "<xvar>: <basevar> -> <expr>"   (omitted images: identity)
//   [delta]      "<xvar>: <basevar> -> <expr>"   (omitted images: zero)
//   [relations]  "<xj>*<xi> = <expr>"            (omitted pairs: c = 1)
// Expressions use +, -, *, ^ with integer or fraction literals; products in
// a file are formal (coefficients times a commutative word), so relation
// right-hand sides name plain monomials, not rewritten products.
#pragma once

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "spbw/presentation.hpp"

namespace spbw {

// Malformed text: files, sections, expressions, unknown identifiers.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

inline std::vector<Token> lex_expr(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i < s.size() && s[i] == '/') {
        std::size_t j = i + 1;
        if (j >= s.size() || !std::isdigit(static_cast<unsigned char>(s[j])))
          throw ParseError("fraction needs a denominator at position " +
                           std::to_string(i));
        i = j;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      }
      out.push_back({Tok::Number, s.substr(start, i - start), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, c) +
                         "' at position " + std::to_string(i));
    }
    out.push_back({k, s.substr(i, 1), i});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Recursive-descent evaluator over SkewElement with a pluggable product:
// the formal product for file data, the rewriting product for nf and mul.
class ExprParser {
 public:
  using VarFn = std::function<SkewElement(const std::string&)>;
  using MulFn = std::function<SkewElement(const SkewElement&, const SkewElement&)>;

  ExprParser(const Presentation& p, const std::string& text, VarFn var, MulFn mul)
      : p_(p), toks_(lex_expr(text)), var_(std::move(var)), mul_(std::move(mul)) {}

  SkewElement parse() {
    SkewElement e = expr();
    expect(Tok::End, "end of expression");
    return e;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }
  void expect(Tok k, const std::string& what) {
    if (peek().kind != k)
      throw ParseError("expected " + what + " at position " + std::to_string(peek().pos));
    ++at_;
  }

  SkewElement expr() {
    SkewElement acc = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool plus = take().kind == Tok::Plus;
      SkewElement t = term();
      acc = plus ? acc + t : acc - t;
    }
    return acc;
  }

  SkewElement term() {
    SkewElement acc = factor();
    while (peek().kind == Tok::Star) {
      ++at_;
      acc = mul_(acc, factor());
    }
    return acc;
  }

  SkewElement factor() {
    SkewElement base = primary();
    if (peek().kind != Tok::Caret) return base;
    ++at_;
    if (peek().kind != Tok::Number || peek().text.find('/') != std::string::npos)
      throw ParseError("exponent must be a nonnegative integer at position " +
                       std::to_string(peek().pos));
    unsigned long e = std::stoul(take().text);
    SkewElement acc = SkewElement::one(p_);
    for (unsigned long t = 0; t < e; ++t) acc = mul_(acc, base);
    return acc;
  }

  SkewElement primary() {
    switch (peek().kind) {
      case Tok::Number:
        return SkewElement::embed(
            p_, BaseElement::constant(p_.base, Scalar::parse(p_.base.field, take().text)));
      case Tok::Ident:
        return var_(take().text);
      case Tok::Minus: {
        ++at_;
        return SkewElement::zero(p_) - factor();
      }
      case Tok::LParen: {
        ++at_;
        SkewElement e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        throw ParseError("expected a value at position " + std::to_string(peek().pos));
    }
  }

  const Presentation& p_;
  std::vector<Token> toks_;
  VarFn var_;
  MulFn mul_;
  std::size_t at_ = 0;
};

// Formal product: coefficients multiply in the base, x-exponents add.
// Exactly the arithmetic of the free left module with commuting symbols.
inline SkewElement formal_mul(const Presentation& p, const SkewElement& a,
                              const SkewElement& b) {
  SkewElement out = SkewElement::zero(p);
  for (const auto& [ea, ra] : a.terms())
    for (const auto& [eb, rb] : b.terms()) {
      Exp e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out = out + SkewElement::monomial(p, e, mul(p.base, ra, rb));
    }
  return out;
}

inline SkewElement resolve_any(const Presentation& p, const std::string& name) {
  for (std::size_t i = 0; i < p.n(); ++i)
    if (p.xnames[i] == name) return SkewElement::xvar(p, i);
  for (std::size_t j = 0; j < p.base.m(); ++j)
    if (p.base.names[j] == name)
      return SkewElement::embed(p, BaseElement::variable(p.base, j));
  throw ParseError("unknown variable: " + name);
}

}  // namespace detail

// Normalized evaluation: products rewrite through the commutation rules.
inline SkewElement parse_element(const Presentation& p, const std::string& text) {
  Rewriter rw(p);
  detail::ExprParser ep(
      p, text, [&](const std::string& n) { return detail::resolve_any(p, n); },
      [&](const SkewElement& a, const SkewElement& b) { return rw.mul(a, b); });
  return ep.parse();
}

// Formal evaluation for presentation data; no rewriting is involved.
inline SkewElement parse_formal(const Presentation& p, const std::string& text) {
  detail::ExprParser ep(
      p, text, [&](const std::string& n) { return detail::resolve_any(p, n); },
      [&](const SkewElement& a, const SkewElement& b) {
        return detail::formal_mul(p, a, b);
      });
  return ep.parse();
}

// Expression over the base generators alone, reduced modulo the ideal.
inline BaseElement parse_base_element(const BaseRingSpec& spec, const std::string& text) {
  // A scratch presentation carries the evaluator; the placeholder variable
  // is unreachable because the resolver only accepts base names.
  Presentation scratch = make_presentation(spec, {"__expr"});
  detail::ExprParser ep(
      scratch, text,
      [&](const std::string& n) -> SkewElement {
        for (std::size_t j = 0; j < spec.m(); ++j)
          if (spec.names[j] == n)
            return SkewElement::embed(scratch, BaseElement::variable(spec, j));
        throw ParseError("unknown base variable: " + n);
      },
      [&](const SkewElement& a, const SkewElement& b) {
        return detail::formal_mul(scratch, a, b);
      });
  return ep.parse().coeff(Exp(1, 0));
}

namespace detail {

inline std::string strip_comment(const std::string& line) {
  std::size_t h = line.find('#');
  std::string s = h == std::string::npos ? line : line.substr(0, h);
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

// "name", "name^3", products joined by '*'.
inline Exp parse_monomial(const std::vector<std::string>& names, const std::string& text) {
  Exp e(names.size(), 0);
  std::size_t at = 0;
  while (at < text.size()) {
    std::size_t star = text.find('*', at);
    std::string piece = text.substr(at, star == std::string::npos ? star : star - at);
    at = star == std::string::npos ? text.size() : star + 1;
    std::size_t caret = piece.find('^');
    std::string name = piece.substr(0, caret);
    unsigned long pow = 1;
    if (caret != std::string::npos) {
      const std::string ex = piece.substr(caret + 1);
      if (ex.empty() || ex.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad exponent in monomial: " + text);
      pow = std::stoul(ex);
    }
    bool found = false;
    for (std::size_t j = 0; j < names.size(); ++j)
      if (names[j] == name) {
        e[j] += static_cast<unsigned>(pow);
        found = true;
        break;
      }
    if (!found) throw ParseError("unknown base variable in monomial: " + name);
  }
  return e;
}

inline unsigned long parse_degree(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("bad " + what + ": " + text);
  return std::stoul(text);
}

}  // namespace detail

inline Presentation parse_presentation_text(const std::string& text) {
  static const std::vector<std::string> known = {"field",  "base",  "vars",
                                                 "sigma", "delta", "relations"};
  std::map<std::string, std::vector<std::string>> sections;
  std::string current;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = detail::strip_comment(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError("line " + std::to_string(lineno) + ": unterminated section header");
      std::string name = line.substr(1, line.size() - 2);
      bool ok = false;
      for (const auto& k : known) ok = ok || k == name;
      if (!ok)
        throw ParseError("line " + std::to_string(lineno) + ": unknown section [" + name + "]");
      if (sections.count(name))
        throw ParseError("line " + std::to_string(lineno) + ": duplicate section [" + name + "]");
      sections[name];
      current = name;
      continue;
    }
    if (current.empty())
      throw ParseError("line " + std::to_string(lineno) + ": content before any section");
    sections[current].push_back(line);
  }

  if (!sections.count("field")) throw ParseError("missing [field] section");
  const auto& fl = sections["field"];
  if (fl.size() != 1) throw ParseError("[field] needs exactly one line");
  FieldSpec field;
  {
    std::vector<std::string> w = detail::split_ws(fl[0]);
    if (w.size() == 1 && w[0] == "rationals") {
      field.p = 0;
    } else if (w.size() == 2 && w[0] == "prime") {
      field.p = detail::parse_degree(w[1], "field modulus");
      if (auto err = validate_field(field)) throw ParseError(*err);
    } else {
      throw ParseError("[field] line must be 'rationals' or 'prime <p>'");
    }
  }

  BaseRingSpec base;
  base.field = field;
  std::vector<std::string> base_lines =
      sections.count("base") ? sections["base"] : std::vector<std::string>{};
  std::vector<std::string> ideal_lines;
  for (const std::string& line : base_lines) {
    std::vector<std::string> w = detail::split_ws(line);
    if (!w.empty() && w[0] == "ideal") {
      ideal_lines.push_back(line);
      continue;
    }
    if (w.size() != 2)
      throw ParseError("[base] line needs '<name> <degree>' or 'ideal ..': " + line);
    base.names.push_back(w[0]);
    base.degrees.push_back(static_cast<unsigned>(detail::parse_degree(w[1], "base degree")));
  }
  for (const std::string& line : ideal_lines) {
    std::vector<std::string> w = detail::split_ws(line);
    for (std::size_t t = 1; t < w.size(); ++t)
      base.ideal.push_back(detail::parse_monomial(base.names, w[t]));
  }

  if (!sections.count("vars")) throw ParseError("missing [vars] section");
  std::vector<std::string> xnames;
  std::vector<unsigned> xdegrees;
  for (const std::string& line : sections["vars"]) {
    std::vector<std::string> w = detail::split_ws(line);
    if (w.size() != 2) throw ParseError("[vars] line needs '<name> <degree>': " + line);
    xnames.push_back(w[0]);
    xdegrees.push_back(static_cast<unsigned>(detail::parse_degree(w[1], "variable degree")));
  }
  if (xnames.empty()) throw ParseError("[vars] section declares no variables");

  Presentation p = make_presentation(base, xnames);
  p.xdegrees = xdegrees;

  auto xindex = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < p.n(); ++i)
      if (p.xnames[i] == name) return i;
    throw ParseError("unknown skew variable: " + name);
  };
  auto bindex = [&](const std::string& name) -> std::size_t {
    for (std::size_t j = 0; j < base.m(); ++j)
      if (base.names[j] == name) return j;
    throw ParseError("unknown base variable: " + name);
  };

  // "<xvar>: <basevar> -> <expr>"
  auto parse_map_line = [&](const std::string& line, const char* section) {
    std::size_t colon = line.find(':');
    std::size_t arrow = line.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon)
      throw ParseError(std::string("[") + section +
                       "] line needs '<xvar>: <basevar> -> <expr>': " + line);
    std::string xn = detail::strip_comment(line.substr(0, colon));
    std::string bn = detail::strip_comment(line.substr(colon + 1, arrow - colon - 1));
    std::string ex = line.substr(arrow + 2);
    return std::make_tuple(xindex(xn), bindex(bn), reduce(base, parse_base_element(base, ex)));
  };
  std::set<std::pair<std::size_t, std::size_t>> seen_sigma, seen_delta, seen_rel;
  if (sections.count("sigma"))
    for (const std::string& line : sections["sigma"]) {
      auto [i, j, e] = parse_map_line(line, "sigma");
      if (!seen_sigma.emplace(i, j).second)
        throw ParseError("duplicate sigma image: " + line);
      p.sigma[i].images[j] = e;
    }
  if (sections.count("delta"))
    for (const std::string& line : sections["delta"]) {
      auto [i, j, e] = parse_map_line(line, "delta");
      if (!seen_delta.emplace(i, j).second)
        throw ParseError("duplicate delta image: " + line);
      p.delta[i].images[j] = e;
    }

  if (sections.count("relations"))
    for (const std::string& line : sections["relations"]) {
      std::size_t eq = line.find('=');
      if (eq == std::string::npos)
        throw ParseError("[relations] line needs '<xj>*<xi> = <expr>': " + line);
      std::vector<detail::Token> lhs = detail::lex_expr(line.substr(0, eq));
      if (lhs.size() != 4 || lhs[0].kind != detail::Tok::Ident ||
          lhs[1].kind != detail::Tok::Star || lhs[2].kind != detail::Tok::Ident)
        throw ParseError("relation left side must be '<xj>*<xi>': " + line);
      std::size_t j = xindex(lhs[0].text);
      std::size_t i = xindex(lhs[2].text);
      if (i >= j)
        throw ParseError("relation left side must order the later variable first: " + line);
      if (!seen_rel.emplace(i, j).second)
        throw ParseError("duplicate relation for the same pair: " + line);
      SkewElement rhs = parse_formal(p, line.substr(eq + 1));
      PairRelation& R = p.relation(i, j);
      R.c = BaseElement::zero(base);
      Exp cexp(p.n(), 0);
      cexp[i] = 1;
      cexp[j] += 1;
      for (const auto& [alpha, r] : rhs.terms()) {
        if (alpha == cexp) {
          R.c = r;
        } else if (exp_total(alpha) == 1) {
          for (std::size_t k = 0; k < p.n(); ++k)
            if (alpha[k] == 1) R.dlin[k] = r;
        } else if (exp_is_zero(alpha)) {
          R.d0 = r;
        } else {
          throw ParseError("relation right side has an unsupported monomial: " + line);
        }
      }
    }
  return p;
}

inline Presentation parse_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation_text(buf.str());
}

namespace detail {

// File-expression form of a base element: every term "(scalar)*mon" so the
// output re-lexes regardless of signs; exponent 1 is left implicit.
inline std::string format_base_expr(const BaseRingSpec& s, const BaseElement& e) {
  if (e.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, c] : e.terms()) {
    if (!first) out += " + ";
    out += "(" + c.to_string() + ")";
    for (std::size_t j = 0; j < s.m(); ++j) {
      if (exp[j] == 0) continue;
      out += "*" + s.names[j];
      if (exp[j] > 1) out += "^" + std::to_string(exp[j]);
    }
    first = false;
  }
  return out;
}

inline std::string format_monomial(const std::vector<std::string>& names, const Exp& e) {
  std::string out;
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (e[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[j];
    if (e[j] > 1) out += "^" + std::to_string(e[j]);
  }
  return out;
}

}  // namespace detail

// Canonical file form; parsing it back yields an identical presentation.
inline std::string format_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "[field]\n";
  if (p.base.field.rational())
    out << "rationals\n";
  else
    out << "prime " << p.base.field.p << "\n";
  if (p.base.m() > 0) {
    out << "\n[base]\n";
    for (std::size_t j = 0; j < p.base.m(); ++j)
      out << p.base.names[j] << " " << p.base.degrees[j] << "\n";
    if (!p.base.ideal.empty()) {
      out << "ideal";
      for (const Exp& g : p.base.ideal)
        out << " " << detail::format_monomial(p.base.names, g);
      out << "\n";
    }
  }
  out << "\n[vars]\n";
  for (std::size_t i = 0; i < p.n(); ++i)
    out << p.xnames[i] << " " << p.xdegrees[i] << "\n";
  std::ostringstream sig, del;
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = 0; j < p.base.m(); ++j) {
      if (p.sigma[i].images[j] != BaseElement::variable(p.base, j))
        sig << p.xnames[i] << ": " << p.base.names[j] << " -> "
            << detail::format_base_expr(p.base, p.sigma[i].images[j]) << "\n";
      if (!p.delta[i].images[j].is_zero())
        del << p.xnames[i] << ": " << p.base.names[j] << " -> "
            << detail::format_base_expr(p.base, p.delta[i].images[j]) << "\n";
    }
  if (!sig.str().empty()) out << "\n[sigma]\n" << sig.str();
  if (!del.str().empty()) out << "\n[delta]\n" << del.str();
  if (p.n() >= 2) {
    out << "\n[relations]\n";
    for (std::size_t i = 0; i < p.n(); ++i)
      for (std::size_t j = i + 1; j < p.n(); ++j) {
        const PairRelation& R = p.relation(i, j);
        out << p.xnames[j] << "*" << p.xnames[i] << " = ";
        // A multi-term coefficient needs parentheses to bind the product.
        auto coef = [&](const BaseElement& e) {
          std::string s = detail::format_base_expr(p.base, e);
          return e.terms().size() > 1 ? "(" + s + ")" : s;
        };
        std::vector<std::string> terms;
        if (!R.c.is_zero())
          terms.push_back(coef(R.c) + "*" + p.xnames[i] + "*" + p.xnames[j]);
        for (std::size_t k = 0; k < p.n(); ++k)
          if (!R.dlin[k].is_zero()) terms.push_back(coef(R.dlin[k]) + "*" + p.xnames[k]);
        if (!R.d0.is_zero()) terms.push_back(detail::format_base_expr(p.base, R.d0));
        if (terms.empty()) terms.push_back("0");
        for (std::size_t t = 0; t < terms.size(); ++t)
          out << (t ? " + " : "") << terms[t];
        out << "\n";
      }
  }
  return out.str();
}

}  // namespace spbw
