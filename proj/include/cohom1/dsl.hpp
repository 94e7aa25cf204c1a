#pragma once

// Text format for family instances and group diagrams.
//
//   document    := (family_decl | diagram_decl)+
//   family_decl := "family" NAME "{" (IDENT "=" INT ";")* "}"
//   diagram_decl:= "diagram" "{" assign* "}"
//   assign      := ("G"|"Kminus"|"Kplus"|"H") "=" group_expr ";"
//   group_expr  := term ("x" term)*
//   term        := "S3" | "T2" | "SU3" | "torus" "(" ")" | "circle" "(" INT ("," INT)* ")"
//                | "cyclic" "(" INT ("," ratvec)? ")" | "SU2SU1" | "S_U2U1"
//   ratvec      := "[" rat ("," rat)* "]",  rat := INT ("/" INT)?
//
// '#' starts a comment; the ';' before a closing '}' may be omitted; "S3xS3" is
// read as "S3 x S3".

#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cohom1/diagram.hpp"
#include "cohom1/errors.hpp"
#include "cohom1/intlin.hpp"
#include "cohom1/liegroup.hpp"

namespace cohom1::dsl {

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line), column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

class SemanticError : public Error {
 public:
  SemanticError(std::string field, const std::string& msg) : Error(field + ": " + msg), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// ---------------------------------------------------------------------------
// AST

struct Rational {
  BigInt num = 0, den = 1;
  friend bool operator==(const Rational&, const Rational&) = default;
};

enum class TermKind { S3, T2, SU3, Torus, Circle, Cyclic, SU2SU1, S_U2U1 };

struct Term {
  TermKind kind = TermKind::S3;
  std::vector<BigInt> ints;                    // circle slope, or {n} for cyclic
  std::optional<std::vector<Rational>> point;  // cyclic generator
  friend bool operator==(const Term&, const Term&) = default;
};

struct GroupExpr {
  std::vector<Term> terms;
  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

struct Assign {
  std::string name;
  GroupExpr expr;
  friend bool operator==(const Assign&, const Assign&) = default;
};

struct FamilyDecl {
  std::string name;
  std::vector<std::pair<std::string, BigInt>> params;
  friend bool operator==(const FamilyDecl&, const FamilyDecl&) = default;
};

struct DiagramDecl {
  std::vector<Assign> assigns;
  friend bool operator==(const DiagramDecl&, const DiagramDecl&) = default;
};

using Decl = std::variant<FamilyDecl, DiagramDecl>;

struct Document {
  std::vector<Decl> decls;
  friend bool operator==(const Document&, const Document&) = default;
};

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Int, LBrace, RBrace, LParen, RParen, LBracket, RBracket, Comma, Semi, Eq, Slash, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, column;
};

inline std::string describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Eq: return "'='";
    case Tok::Slash: return "'/'";
    case Tok::End: return "end of input";
  }
  return "?";
}

inline std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0, line = 1, col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
        ++col;  // count code points, not UTF-8 continuation bytes
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, src.substr(i, j - i), l, cl});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && i + 1 < src.size() && std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
      std::size_t j = i + 1;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Int, src.substr(i, j - i), l, cl});
      advance(j - i);
      continue;
    }
    Tok t;
    switch (c) {
      case '{': t = Tok::LBrace; break;
      case '}': t = Tok::RBrace; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case '[': t = Tok::LBracket; break;
      case ']': t = Tok::RBracket; break;
      case ',': t = Tok::Comma; break;
      case ';': t = Tok::Semi; break;
      case '=': t = Tok::Eq; break;
      case '/': t = Tok::Slash; break;
      default: throw ParseError(l, cl, std::string("unexpected character '") + c + "'");
    }
    out.push_back({t, std::string(1, c), l, cl});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace detail {

inline const std::set<std::string>& bare_terms() {
  static const std::set<std::string> s = {"S3", "T2", "SU3", "SU2SU1", "S_U2U1"};
  return s;
}

inline std::optional<TermKind> bare_kind(const std::string& s) {
  if (s == "S3") return TermKind::S3;
  if (s == "T2") return TermKind::T2;
  if (s == "SU3") return TermKind::SU3;
  if (s == "SU2SU1") return TermKind::SU2SU1;
  if (s == "S_U2U1") return TermKind::S_U2U1;
  return std::nullopt;
}

/// "S3xS3" -> {"S3", "S3"} when every piece is a bare term.
inline std::optional<std::vector<std::string>> split_product(const std::string& s) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k)
    if (k == s.size() || s[k] == 'x') {
      parts.push_back(s.substr(start, k - start));
      start = k + 1;
    }
  if (parts.size() < 2) return std::nullopt;
  for (const auto& p : parts)
    if (!bare_terms().count(p)) return std::nullopt;
  return parts;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Document document() {
    Document doc;
    while (peek().kind != Tok::End) doc.decls.push_back(decl());
    if (doc.decls.empty()) fail(peek(), "expected 'family' or 'diagram'");
    return doc;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const Token& t, const std::string& msg) const {
    throw ParseError(t.line, t.column, msg + (t.kind == Tok::End ? " at end of input" : ", found '" + t.text + "'"));
  }
  const Token& expect(Tok k) {
    if (peek().kind != k) fail(peek(), "expected " + describe(k));
    return take();
  }
  void expect_word(const std::string& w) {
    if (peek().kind != Tok::Ident || peek().text != w) fail(peek(), "expected '" + w + "'");
    take();
  }
  BigInt integer() { return BigInt(expect(Tok::Int).text); }

  // ';' is required between items and optional before '}'.
  void terminator() {
    if (peek().kind == Tok::Semi) {
      take();
      return;
    }
    if (peek().kind != Tok::RBrace) fail(peek(), "expected ';' or '}'");
  }

  Decl decl() {
    const auto& t = peek();
    if (t.kind == Tok::Ident && t.text == "family") return family();
    if (t.kind == Tok::Ident && t.text == "diagram") return diagram();
    fail(t, "expected 'family' or 'diagram'");
  }

  FamilyDecl family() {
    expect_word("family");
    FamilyDecl f;
    f.name = expect(Tok::Ident).text;
    expect(Tok::LBrace);
    while (peek().kind != Tok::RBrace) {
      std::string name = expect(Tok::Ident).text;
      expect(Tok::Eq);
      f.params.emplace_back(std::move(name), integer());
      terminator();
    }
    expect(Tok::RBrace);
    return f;
  }

  DiagramDecl diagram() {
    expect_word("diagram");
    expect(Tok::LBrace);
    DiagramDecl d;
    while (peek().kind != Tok::RBrace) {
      const auto& t = peek();
      if (t.kind != Tok::Ident || (t.text != "G" && t.text != "Kminus" && t.text != "Kplus" && t.text != "H"))
        fail(t, "expected 'G', 'Kminus', 'Kplus' or 'H'");
      Assign a{take().text, {}};
      expect(Tok::Eq);
      a.expr = group_expr();
      d.assigns.push_back(std::move(a));
      terminator();
    }
    expect(Tok::RBrace);
    return d;
  }

  GroupExpr group_expr() {
    GroupExpr g;
    terms(g);
    while (peek().kind == Tok::Ident && peek().text == "x") {
      take();
      terms(g);
    }
    return g;
  }

  void terms(GroupExpr& g) {
    const auto& t = peek();
    if (t.kind != Tok::Ident) fail(t, "expected a group term");
    if (auto k = bare_kind(t.text)) {
      take();
      g.terms.push_back({*k, {}, std::nullopt});
      return;
    }
    if (auto parts = split_product(t.text)) {
      take();
      for (const auto& p : *parts) g.terms.push_back({*bare_kind(p), {}, std::nullopt});
      return;
    }
    if (t.text == "torus") {
      take();
      expect(Tok::LParen);
      expect(Tok::RParen);
      g.terms.push_back({TermKind::Torus, {}, std::nullopt});
      return;
    }
    if (t.text == "circle") {
      take();
      expect(Tok::LParen);
      Term c{TermKind::Circle, {integer()}, std::nullopt};
      while (peek().kind == Tok::Comma) {
        take();
        c.ints.push_back(integer());
      }
      expect(Tok::RParen);
      g.terms.push_back(std::move(c));
      return;
    }
    if (t.text == "cyclic") {
      take();
      expect(Tok::LParen);
      Term c{TermKind::Cyclic, {integer()}, std::nullopt};
      if (peek().kind == Tok::Comma) {
        take();
        c.point = ratvec();
      }
      expect(Tok::RParen);
      g.terms.push_back(std::move(c));
      return;
    }
    fail(t, "expected a group term (S3, T2, SU3, torus(), circle(...), cyclic(...), SU2SU1, S_U2U1)");
  }

  std::vector<Rational> ratvec() {
    expect(Tok::LBracket);
    std::vector<Rational> v{rational()};
    while (peek().kind == Tok::Comma) {
      take();
      v.push_back(rational());
    }
    expect(Tok::RBracket);
    return v;
  }

  Rational rational() {
    Rational r{integer(), 1};
    if (peek().kind == Tok::Slash) {
      take();
      const auto& t = peek();
      r.den = integer();
      if (r.den <= 0) throw ParseError(t.line, t.column, "denominator must be positive");
    }
    return r;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Document parse(const std::string& src) { return detail::Parser(lex(src)).document(); }

// ---------------------------------------------------------------------------
// Printer (canonical layout; parse(print(d)) == d)

inline std::string print(const Term& t) {
  switch (t.kind) {
    case TermKind::S3: return "S3";
    case TermKind::T2: return "T2";
    case TermKind::SU3: return "SU3";
    case TermKind::SU2SU1: return "SU2SU1";
    case TermKind::S_U2U1: return "S_U2U1";
    case TermKind::Torus: return "torus()";
    case TermKind::Circle: {
      std::string s = "circle(";
      for (std::size_t i = 0; i < t.ints.size(); ++i) s += (i ? ", " : "") + to_string(t.ints[i]);
      return s + ")";
    }
    case TermKind::Cyclic: {
      std::string s = "cyclic(" + to_string(t.ints.at(0));
      if (t.point) {
        s += ", [";
        for (std::size_t i = 0; i < t.point->size(); ++i) {
          const auto& r = (*t.point)[i];
          s += (i ? ", " : "") + to_string(r.num);
          if (r.den != 1) s += "/" + to_string(r.den);
        }
        s += "]";
      }
      return s + ")";
    }
  }
  return "?";
}

inline std::string print(const GroupExpr& g) {
  std::string s;
  for (std::size_t i = 0; i < g.terms.size(); ++i) s += (i ? " x " : "") + print(g.terms[i]);
  return s;
}

inline std::string print(const Decl& d) {
  std::ostringstream os;
  if (const auto* f = std::get_if<FamilyDecl>(&d)) {
    os << "family " << f->name << " {";
    for (const auto& [k, v] : f->params) os << ' ' << k << " = " << v << ';';
    os << (f->params.empty() ? "}" : " }");
  } else {
    const auto& g = std::get<DiagramDecl>(d);
    os << "diagram {\n";
    for (const auto& a : g.assigns) os << "  " << a.name << " = " << print(a.expr) << ";\n";
    os << "}";
  }
  return os.str();
}

inline std::string print(const Document& doc) {
  std::string s;
  for (const auto& d : doc.decls) s += print(d) + "\n";
  return s;
}

// ---------------------------------------------------------------------------
// Lowering

namespace detail {

inline AmbientGroup lower_ambient(const GroupExpr& g) {
  std::vector<TermKind> k;
  for (const auto& t : g.terms) k.push_back(t.kind);
  if (k == std::vector<TermKind>{TermKind::S3, TermKind::T2}) return AmbientGroup::s3xt2();
  if (k == std::vector<TermKind>{TermKind::S3, TermKind::S3}) return AmbientGroup::s3xs3();
  if (k == std::vector<TermKind>{TermKind::SU3}) return AmbientGroup::su3();
  throw SemanticError("G", "expected S3 x T2, S3 x S3 or SU3, got " + print(g));
}

/// A vector completing the S3 slots and circle slopes to a basis of Z^n; requires
/// them to span a primitive sublattice of rank n - 1.
inline std::vector<BigInt> complement(std::size_t n, const std::set<std::size_t>& s3,
                                      const std::vector<std::vector<BigInt>>& slopes, const std::string& field) {
  std::vector<std::vector<BigInt>> cols;
  for (auto i : s3) cols.push_back(cohom1::detail::unit_vector(n, i));
  for (const auto& s : slopes) cols.push_back(s);
  if (cols.empty()) {
    if (n == 1) return {1};
    throw SemanticError(field, "cyclic(n) without a generator needs a circle or S3 factor to place it against");
  }
  const IntMatrix m = IntMatrix::from_columns(n, cols);
  const auto snf = smith_normal_form(m);
  const auto r = snf.rank();
  if (r != n - 1) throw SemanticError(field, "placement of cyclic(n) is ambiguous; give the generator explicitly");
  for (std::size_t i = 0; i < r; ++i)
    if (snf.D(i, i) != 1) throw SemanticError(field, "circle and S3 factors do not span a primitive sublattice");
  return snf.U_inv.col(n - 1);
}

inline SubgroupSpec lower_su3(const GroupExpr& g, const std::string& field) {
  const auto& t = g.terms;
  auto is = [&](std::size_t i, TermKind k) { return i < t.size() && t[i].kind == k; };
  if (t.size() == 1 && is(0, TermKind::S_U2U1)) return SubgroupSpec(SU3Block{SU3BlockKind::S_U2U1, 1});
  if (t.size() == 1 && is(0, TermKind::SU2SU1)) return SubgroupSpec(SU3Block{SU3BlockKind::SU2SU1_Zn, 1});
  if (t.size() == 2 && is(0, TermKind::SU2SU1) && is(1, TermKind::Cyclic) && !t[1].point)
    return SubgroupSpec(SU3Block{SU3BlockKind::SU2SU1_Zn, t[1].ints[0]});
  if (t.size() == 1 && is(0, TermKind::Cyclic) && !t[0].point)
    return SubgroupSpec(SU3Block{SU3BlockKind::Zn_diagonal, t[0].ints[0]});
  throw SemanticError(field, "SU3 subgroups are S_U2U1, SU2SU1, SU2SU1 x cyclic(n) or cyclic(n); got " + print(g));
}

inline SubgroupSpec lower_subgroup(const AmbientGroup& G, const GroupExpr& g, const std::string& field) {
  if (!G.has_torus_model()) return lower_su3(g, field);
  const std::size_t n = G.maximal_torus_rank();
  std::set<std::size_t> s3;
  std::vector<std::vector<BigInt>> slopes;
  std::vector<const Term*> bare_cyclic;
  std::vector<FiniteGenerator> gens;
  const auto slots = G.s3_slots();
  for (std::size_t i = 0; i < g.terms.size(); ++i) {
    const auto& t = g.terms[i];
    switch (t.kind) {
      case TermKind::S3:
        if (std::find(slots.begin(), slots.end(), i) == slots.end())
          throw SemanticError(field, "term " + std::to_string(i + 1) + " of " + G.name() + " is not an S3 factor");
        s3.insert(i);
        break;
      case TermKind::T2:
        if (G.tag == AmbientTag::S3xT2) {
          slopes.push_back(cohom1::detail::unit_vector(n, 1));
          slopes.push_back(cohom1::detail::unit_vector(n, 2));
        } else {
          for (std::size_t k = 0; k < n; ++k) slopes.push_back(cohom1::detail::unit_vector(n, k));
        }
        break;
      case TermKind::Torus:
        for (std::size_t k = 0; k < n; ++k) slopes.push_back(cohom1::detail::unit_vector(n, k));
        break;
      case TermKind::Circle:
        if (t.ints.size() != n)
          throw SemanticError(field, "circle slope has " + std::to_string(t.ints.size()) + " entries, " + G.name() +
                                         " needs " + std::to_string(n));
        if (std::all_of(t.ints.begin(), t.ints.end(), [](const BigInt& x) { return x == 0; }))
          throw SemanticError(field, "circle slope is zero");
        slopes.push_back(t.ints);
        break;
      case TermKind::Cyclic: {
        if (t.ints[0] < 1) throw SemanticError(field, "cyclic(n) needs n >= 1");
        if (!t.point) {
          bare_cyclic.push_back(&t);
          break;
        }
        if (t.point->size() != n)
          throw SemanticError(field, "cyclic generator has " + std::to_string(t.point->size()) + " entries, " +
                                         G.name() + " needs " + std::to_string(n));
        BigInt den = 1;
        for (const auto& r : *t.point) den = lcm(den, r.den);
        std::vector<BigInt> num;
        for (const auto& r : *t.point) num.push_back(r.num * (den / r.den));
        const auto gen = cohom1::detail::reduce(FiniteGenerator{num, den});
        if (gen.order != t.ints[0])
          throw SemanticError(field, "cyclic(" + to_string(t.ints[0]) + ") generator has order " + to_string(gen.order));
        gens.push_back(gen);
        break;
      }
      default: throw SemanticError(field, print(t) + " is not a subgroup of " + G.name());
    }
  }
  for (const auto* t : bare_cyclic) gens.push_back(cohom1::detail::reduce(FiniteGenerator{complement(n, s3, slopes, field), t->ints[0]}));
  try {
    return SubgroupSpec(G, s3, slopes, gens);
  } catch (const Error& e) {
    throw SemanticError(field, e.what());
  }
}

}  // namespace detail

inline GroupDiagram lower(const DiagramDecl& d) {
  std::map<std::string, const GroupExpr*> by_name;
  for (const auto& a : d.assigns)
    if (!by_name.emplace(a.name, &a.expr).second) throw SemanticError(a.name, "assigned twice");
  for (const char* k : {"G", "Kminus", "Kplus", "H"})
    if (!by_name.count(k)) throw SemanticError(k, "missing");
  const auto G = detail::lower_ambient(*by_name["G"]);
  return {G, detail::lower_subgroup(G, *by_name["Kminus"], "Kminus"), detail::lower_subgroup(G, *by_name["Kplus"], "Kplus"),
          detail::lower_subgroup(G, *by_name["H"], "H")};
}

inline FamilyInstance lower(const FamilyDecl& f) {
  const auto tag = parse_family_tag(f.name);
  if (!tag) throw SemanticError("family", "unknown family '" + f.name + "'");
  FamilyInstance out{*tag, {}, std::nullopt};
  for (const auto& [k, v] : f.params)
    if (!out.params.emplace(k, v).second) throw SemanticError(k, "assigned twice");
  try {
    check_param_names(out);
  } catch (const MalformedFamily& e) {
    throw SemanticError("params", e.what());
  }
  return out;
}

/// Family instance of a declaration; diagrams go through recognize_family.
inline FamilyInstance to_family(const Decl& d) {
  if (const auto* f = std::get_if<FamilyDecl>(&d)) return lower(*f);
  return recognize_family(lower(std::get<DiagramDecl>(d)));
}

inline FamilyDecl to_decl(const FamilyInstance& f) {
  FamilyDecl d{to_string(f.tag), {}};
  for (const auto& kv : f.ordered_params()) d.params.push_back(kv);
  return d;
}

}  // namespace cohom1::dsl
