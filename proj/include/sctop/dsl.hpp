#pragma once

// A small description language for spaces and maps.
//
//   space := 'finite' '{' 'elems' ':' names [';' 'leq' ':' [chain {',' chain}]] [';'] '}'
//          | atom
//          | 'lift' '(' space ')'
//          | 'sum' '(' space ',' space ')'
//   chain := name (('<' | '<=') name)+
//   map   := 'map' '{' 'from' ':' space ';' 'to' ':' space ';' 'pairs' ':' pair {',' pair} [';'] '}'
//   pair  := name '->' name
//
// '<' and '<=' both generate the (non-strict) order; the reflexive-transitive
// closure is taken during elaboration. '#' starts a comment.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "sctop/catalog.hpp"
#include "sctop/error.hpp"
#include "sctop/maps.hpp"
#include "sctop/order.hpp"
#include "sctop/space.hpp"

namespace sctop::dsl {

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct SpaceDoc;

struct FiniteDoc {
  std::vector<std::string> elems;
  /// Generating pairs (a, b) meaning a <= b, in source order.
  std::vector<std::pair<std::string, std::string>> leq;
};
struct AtomDoc {
  std::string name;
};
struct LiftDoc {
  std::shared_ptr<SpaceDoc> inner;
};
struct SumDoc {
  std::shared_ptr<SpaceDoc> left;
  std::shared_ptr<SpaceDoc> right;
};

struct SpaceDoc {
  std::variant<FiniteDoc, AtomDoc, LiftDoc, SumDoc> node;
  SourcePos pos;
};

struct MapDoc {
  SpaceDoc from;
  SpaceDoc to;
  std::vector<std::pair<std::string, std::string>> pairs;
  SourcePos pos;
};

// Structural equality, ignoring source positions.
inline bool same(const SpaceDoc& a, const SpaceDoc& b);
inline bool same(const FiniteDoc& a, const FiniteDoc& b) { return a.elems == b.elems && a.leq == b.leq; }
inline bool same(const AtomDoc& a, const AtomDoc& b) { return a.name == b.name; }
inline bool same(const LiftDoc& a, const LiftDoc& b) { return same(*a.inner, *b.inner); }
inline bool same(const SumDoc& a, const SumDoc& b) { return same(*a.left, *b.left) && same(*a.right, *b.right); }
inline bool same(const SpaceDoc& a, const SpaceDoc& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        return same(x, std::get<T>(b.node));
      },
      a.node);
}
inline bool same(const MapDoc& a, const MapDoc& b) { return same(a.from, b.from) && same(a.to, b.to) && a.pairs == b.pairs; }

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, LBrace, RBrace, LParen, RParen, Colon, Semi, Comma, Less, LessEq, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

inline std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

inline bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
}

inline std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t k) {
    for (std::size_t s = 0; s < k; ++s, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const SourcePos start = pos;
    auto single = [&](Tok k, std::size_t len) {
      out.push_back({k, std::string(text.substr(i, len)), start});
      advance(len);
    };
    switch (c) {
      case '{': single(Tok::LBrace, 1); continue;
      case '}': single(Tok::RBrace, 1); continue;
      case '(': single(Tok::LParen, 1); continue;
      case ')': single(Tok::RParen, 1); continue;
      case ':': single(Tok::Colon, 1); continue;
      case ';': single(Tok::Semi, 1); continue;
      case ',': single(Tok::Comma, 1); continue;
      case '<':
        if (i + 1 < text.size() && text[i + 1] == '=') single(Tok::LessEq, 2);
        else single(Tok::Less, 1);
        continue;
      case '-':
        if (i + 1 < text.size() && text[i + 1] == '>') {
          single(Tok::Arrow, 2);
          continue;
        }
        break;
      default:
        break;
    }
    if (is_name_char(c) && c != '.' && c != '\'') {
      std::size_t j = i;
      while (j < text.size() && is_name_char(text[j])) ++j;
      single(Tok::Ident, j - i);
      continue;
    }
    // Report a whole UTF-8 sequence as the offending token.
    std::size_t len = 1;
    while (i + len < text.size() && (static_cast<unsigned char>(text[i + len]) & 0xC0) == 0x80) ++len;
    throw ParseError(start.line, start.column, "a token", "'" + std::string(text.substr(i, len)) + "'");
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  SpaceDoc space_document() {
    SpaceDoc d = space();
    expect(Tok::End, "end of input");
    return d;
  }
  MapDoc map_document() {
    MapDoc m = map();
    expect(Tok::End, "end of input");
    return m;
  }

 private:
  const Token& peek() const { return toks_[at_]; }
  const Token& next() { return toks_[at_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++at_;
    return true;
  }
  bool accept_word(std::string_view w) {
    if (peek().kind != Tok::Ident || peek().text != w) return false;
    ++at_;
    return true;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError(peek().pos.line, peek().pos.column, expected, describe(peek()));
  }
  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) fail(what);
    return next();
  }
  void expect_word(std::string_view w) {
    if (!accept_word(w)) fail("'" + std::string(w) + "'");
  }
  std::string name() { return expect(Tok::Ident, "a name").text; }

  SpaceDoc space() {
    const SourcePos pos = peek().pos;
    if (peek().kind != Tok::Ident) fail("a space");
    const std::string head = peek().text;
    if (head == "finite") {
      next();
      return {finite_body(), pos};
    }
    if (head == "lift") {
      next();
      expect(Tok::LParen, "'('");
      auto inner = std::make_shared<SpaceDoc>(space());
      expect(Tok::RParen, "')'");
      return {LiftDoc{inner}, pos};
    }
    if (head == "sum") {
      next();
      expect(Tok::LParen, "'('");
      auto l = std::make_shared<SpaceDoc>(space());
      expect(Tok::Comma, "','");
      auto r = std::make_shared<SpaceDoc>(space());
      expect(Tok::RParen, "')'");
      return {SumDoc{l, r}, pos};
    }
    if (head == "map" || head == "from" || head == "to" || head == "elems" || head == "leq" || head == "pairs")
      fail("a space");
    next();
    return {AtomDoc{head}, pos};
  }

  FiniteDoc finite_body() {
    FiniteDoc d;
    expect(Tok::LBrace, "'{'");
    expect_word("elems");
    expect(Tok::Colon, "':'");
    if (peek().kind == Tok::Ident) {
      d.elems.push_back(name());
      while (accept(Tok::Comma)) d.elems.push_back(name());
    }
    if (accept(Tok::Semi)) {
      if (accept_word("leq")) {
        expect(Tok::Colon, "':'");
        if (peek().kind == Tok::Ident) {
          chain(d);
          while (accept(Tok::Comma)) chain(d);
        }
        accept(Tok::Semi);
      }
    }
    if (peek().kind != Tok::RBrace) fail(d.elems.empty() ? "a name or '}'" : "',', ';' or '}'");
    next();
    return d;
  }

  void chain(FiniteDoc& d) {
    std::string prev = name();
    if (peek().kind != Tok::Less && peek().kind != Tok::LessEq) fail("'<' or '<='");
    while (accept(Tok::Less) || accept(Tok::LessEq)) {
      std::string cur = name();
      d.leq.emplace_back(prev, cur);
      prev = std::move(cur);
    }
  }

  MapDoc map() {
    MapDoc m;
    m.pos = peek().pos;
    expect_word("map");
    expect(Tok::LBrace, "'{'");
    expect_word("from");
    expect(Tok::Colon, "':'");
    m.from = space();
    expect(Tok::Semi, "';'");
    expect_word("to");
    expect(Tok::Colon, "':'");
    m.to = space();
    expect(Tok::Semi, "';'");
    expect_word("pairs");
    expect(Tok::Colon, "':'");
    if (peek().kind == Tok::Ident) {
      pair(m);
      while (accept(Tok::Comma)) pair(m);
    }
    accept(Tok::Semi);
    expect(Tok::RBrace, "',', ';' or '}'");
    return m;
  }

  void pair(MapDoc& m) {
    std::string a = name();
    expect(Tok::Arrow, "'->'");
    m.pairs.emplace_back(std::move(a), name());
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

inline SpaceDoc parse_space(std::string_view text) { return Parser(text).space_document(); }
inline MapDoc parse_map(std::string_view text) { return Parser(text).map_document(); }

using Document = std::variant<SpaceDoc, MapDoc>;

/// A map document when the first token is 'map', a space document otherwise.
inline Document parse_document(std::string_view text) {
  const auto toks = lex(text);
  if (toks.front().kind == Tok::Ident && toks.front().text == "map") return parse_map(text);
  return parse_space(text);
}

// ---------------------------------------------------------------------------
// Printer (canonical text; parse . print is a fixpoint)

inline std::string print(const SpaceDoc& d) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteDoc>) {
          std::string s = "finite { elems: ";
          for (std::size_t i = 0; i < x.elems.size(); ++i) s += (i ? ", " : "") + x.elems[i];
          s += "; leq: ";
          for (std::size_t i = 0; i < x.leq.size(); ++i) s += (i ? ", " : "") + x.leq[i].first + " < " + x.leq[i].second;
          return s + " }";
        } else if constexpr (std::is_same_v<T, AtomDoc>) {
          return x.name;
        } else if constexpr (std::is_same_v<T, LiftDoc>) {
          return "lift(" + print(*x.inner) + ")";
        } else {
          return "sum(" + print(*x.left) + ", " + print(*x.right) + ")";
        }
      },
      d.node);
}

inline std::string print(const MapDoc& m) {
  std::string s = "map { from: " + print(m.from) + "; to: " + print(m.to) + "; pairs: ";
  for (std::size_t i = 0; i < m.pairs.size(); ++i) s += (i ? ", " : "") + m.pairs[i].first + " -> " + m.pairs[i].second;
  return s + " }";
}

inline std::string print(const Document& d) {
  return std::visit([](const auto& x) { return print(x); }, d);
}

inline bool same(const Document& a, const Document& b) {
  if (a.index() != b.index()) return false;
  if (a.index() == 0) return same(std::get<0>(a), std::get<0>(b));
  return same(std::get<1>(a), std::get<1>(b));
}

// ---------------------------------------------------------------------------
// Elaboration

/// A finite space together with its element names.
struct NamedSpace {
  FinSpace space;
  std::vector<std::string> names;

  std::optional<std::size_t> index_of(std::string_view n) const {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names.begin());
  }
};

using Elaborated = std::variant<NamedSpace, SymbolicHandle>;

namespace detail {

inline std::string at(const SourcePos& p) {
  return "line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": ";
}

inline NamedSpace elaborate_finite(const FiniteDoc& d, const SourcePos& pos) {
  std::map<std::string, std::size_t> index;
  for (const auto& e : d.elems)
    if (!index.emplace(e, index.size()).second)
      throw Error(ErrorKind::SemanticError, at(pos) + "duplicate element name '" + e + "'");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : d.leq) {
    for (const auto* n : {&a, &b})
      if (!index.contains(*n))
        throw Error(ErrorKind::SemanticError, at(pos) + "order mentions undeclared element '" + *n + "'");
    pairs.emplace_back(index[a], index[b]);
  }
  const std::size_t n = d.elems.size();
  std::vector<Subset> up(n, Subset(n));
  for (std::size_t i = 0; i < n; ++i) up[i].insert(i);
  for (auto [a, b] : pairs) up[a].insert(b);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i].contains(k)) up[i] |= up[k];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (up[i].contains(j) && up[j].contains(i))
        throw Error(ErrorKind::SemanticError, at(pos) + "antisymmetry violated: " + d.elems[i] + " <= " +
                                                  d.elems[j] + " and " + d.elems[j] + " <= " + d.elems[i]);
  return {alexandroff(FinPoset::from_up_sets(std::move(up))), d.elems};
}

inline std::string fresh(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
  return base;
}

}  // namespace detail

inline Elaborated elaborate(const SpaceDoc& doc);

inline NamedSpace elaborate_finite(const SpaceDoc& doc) {
  Elaborated e = elaborate(doc);
  if (auto* s = std::get_if<NamedSpace>(&e)) return *s;
  throw Error(ErrorKind::SemanticError, detail::at(doc.pos) + "a finite space is required here, found catalog entry '" +
                                            std::get<SymbolicHandle>(e)->id() + "'");
}

inline Elaborated elaborate(const SpaceDoc& doc) {
  return std::visit(
      [&](const auto& x) -> Elaborated {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FiniteDoc>) {
          return detail::elaborate_finite(x, doc.pos);
        } else if constexpr (std::is_same_v<T, AtomDoc>) {
          if (x.name == "sierpinski") return NamedSpace{sierpinski(), {"0", "1"}};
          if (auto h = catalog_lookup(x.name)) return h;
          throw Error(ErrorKind::SemanticError, detail::at(doc.pos) + "unknown catalog entry '" + x.name + "'");
        } else if constexpr (std::is_same_v<T, LiftDoc>) {
          // A new bottom element, placed first.
          const NamedSpace in = elaborate_finite(*x.inner);
          const std::size_t n = in.space.size() + 1;
          std::vector<Subset> up(n, Subset(n));
          up[0] = Subset::full(n);
          for (std::size_t i = 0; i < in.space.size(); ++i)
            in.space.order().up(i).for_each([&](std::size_t j) { up[i + 1].insert(j + 1); });
          std::vector<std::string> names{detail::fresh(in.names, "bot")};
          names.insert(names.end(), in.names.begin(), in.names.end());
          return NamedSpace{alexandroff(FinPoset::from_up_sets(std::move(up))), std::move(names)};
        } else {
          // Disjoint sum; names are prefixed with "l." / "r." when they clash.
          const NamedSpace l = elaborate_finite(*x.left);
          const NamedSpace r = elaborate_finite(*x.right);
          const std::size_t nl = l.space.size();
          const std::size_t n = nl + r.space.size();
          std::vector<Subset> up(n, Subset(n));
          for (std::size_t i = 0; i < nl; ++i) l.space.order().up(i).for_each([&](std::size_t j) { up[i].insert(j); });
          for (std::size_t i = 0; i < r.space.size(); ++i)
            r.space.order().up(i).for_each([&](std::size_t j) { up[nl + i].insert(nl + j); });
          bool clash = false;
          for (const auto& a : l.names) clash = clash || std::find(r.names.begin(), r.names.end(), a) != r.names.end();
          std::vector<std::string> names;
          for (const auto& a : l.names) names.push_back(clash ? "l." + a : a);
          for (const auto& b : r.names) names.push_back(clash ? "r." + b : b);
          return NamedSpace{alexandroff(FinPoset::from_up_sets(std::move(up))), std::move(names)};
        }
      },
      doc.node);
}

struct NamedMap {
  NamedSpace from;
  NamedSpace to;
  SpaceMap map;
};

inline NamedMap elaborate(const MapDoc& doc) {
  NamedMap m{elaborate_finite(doc.from), elaborate_finite(doc.to), {}};
  std::vector<std::optional<std::size_t>> table(m.from.space.size());
  for (const auto& [a, b] : doc.pairs) {
    auto i = m.from.index_of(a);
    if (!i) throw Error(ErrorKind::SemanticError, detail::at(doc.pos) + "'" + a + "' is not an element of the source");
    auto j = m.to.index_of(b);
    if (!j) throw Error(ErrorKind::SemanticError, detail::at(doc.pos) + "'" + b + "' is not an element of the target");
    if (table[*i] && *table[*i] != *j)
      throw Error(ErrorKind::SemanticError, detail::at(doc.pos) + "'" + a + "' is mapped twice");
    table[*i] = *j;
  }
  std::vector<std::size_t> t;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (!table[i])
      throw Error(ErrorKind::SemanticError, detail::at(doc.pos) + "map is not total: '" + m.from.names[i] + "' has no image");
    t.push_back(*table[i]);
  }
  m.map = SpaceMap(m.from.space, m.to.space, std::move(t));
  return m;
}

/// Default names "0", "1", ... for an unnamed space.
inline std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// A finite document describing the space by its covering pairs.
inline SpaceDoc to_doc(const NamedSpace& s) {
  FiniteDoc d;
  d.elems = s.names;
  for (auto [a, b] : s.space.order().covers()) d.leq.emplace_back(s.names[a], s.names[b]);
  return {d, {}};
}

inline std::string to_text(const NamedSpace& s) { return print(to_doc(s)); }

/// Parses a space document and elaborates it.
inline Elaborated read_space(std::string_view text) { return elaborate(parse_space(text)); }
inline NamedMap read_map(std::string_view text) { return elaborate(parse_map(text)); }

}  // namespace sctop::dsl
