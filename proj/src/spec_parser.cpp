#include "valgroup/spec_parser.hpp"

#include <cctype>
#include <sstream>

#include "valgroup/errors.hpp"

namespace valgroup {

namespace {

struct Tok {
  enum Kind { Ident, Number, Punct, End } kind;
  std::string text;
  int col;
};

class LineLexer {
 public:
  LineLexer(const std::string& line, int lineno) : line_(line), lineno_(lineno) { advance(); }

  const Tok& peek() const { return tok_; }

  Tok take() {
    Tok t = tok_;
    advance();
    return t;
  }

  [[noreturn]] void error(const std::string& msg, int col) const {
    fail(errc::parse,
         "line " + std::to_string(lineno_) + ", col " + std::to_string(col) + ": " + msg);
  }
  [[noreturn]] void error(const std::string& msg) const { error(msg, tok_.col); }

  std::string expect_ident(const char* what) {
    if (tok_.kind != Tok::Ident) error(std::string("expected ") + what);
    return take().text;
  }

  long long expect_number(const char* what) {
    if (tok_.kind != Tok::Number) error(std::string("expected ") + what);
    return std::stoll(take().text);
  }

  void expect_punct(const std::string& p) {
    if (tok_.kind != Tok::Punct || tok_.text != p) error("expected '" + p + "'");
    take();
  }

  bool accept_punct(const std::string& p) {
    if (tok_.kind == Tok::Punct && tok_.text == p) {
      take();
      return true;
    }
    return false;
  }

  void expect_end() {
    if (tok_.kind != Tok::End) error("unexpected trailing input");
  }

 private:
  void advance() {
    while (pos_ < line_.size() && std::isspace((unsigned char)line_[pos_])) ++pos_;
    tok_.col = (int)pos_ + 1;
    if (pos_ >= line_.size()) {
      tok_ = {Tok::End, "", (int)pos_ + 1};
      return;
    }
    char c = line_[pos_];
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::size_t b = pos_;
      while (pos_ < line_.size() &&
             (std::isalnum((unsigned char)line_[pos_]) || line_[pos_] == '_'))
        ++pos_;
      tok_ = {Tok::Ident, line_.substr(b, pos_ - b), (int)b + 1};
      return;
    }
    if (std::isdigit((unsigned char)c) ||
        (c == '-' && pos_ + 1 < line_.size() && std::isdigit((unsigned char)line_[pos_ + 1]) &&
         !(pos_ + 1 < line_.size() && line_[pos_ + 1] == '>'))) {
      std::size_t b = pos_;
      ++pos_;
      while (pos_ < line_.size() && std::isdigit((unsigned char)line_[pos_])) ++pos_;
      tok_ = {Tok::Number, line_.substr(b, pos_ - b), (int)b + 1};
      return;
    }
    if (c == '-' && pos_ + 1 < line_.size() && line_[pos_ + 1] == '>') {
      tok_ = {Tok::Punct, "->", (int)pos_ + 1};
      pos_ += 2;
      return;
    }
    tok_ = {Tok::Punct, std::string(1, c), (int)pos_ + 1};
    ++pos_;
  }

  const std::string& line_;
  int lineno_;
  std::size_t pos_ = 0;
  Tok tok_;
};

FiniteGroupPtr lookup_group(const SpecFile& f, LineLexer& lx, const std::string& name) {
  auto it = f.groups.find(name);
  if (it == f.groups.end()) lx.error("undeclared group '" + name + "'");
  return it->second;
}

const Subgroup& lookup_subgroup(const SpecFile& f, LineLexer& lx, const std::string& name) {
  auto it = f.subgroups.find(name);
  if (it == f.subgroups.end()) lx.error("undeclared subgroup '" + name + "'");
  return it->second;
}

const Isomorphism& lookup_iso(const SpecFile& f, LineLexer& lx, const std::string& name) {
  auto it = f.isos.find(name);
  if (it == f.isos.end()) lx.error("undeclared iso '" + name + "'");
  return it->second;
}

void check_fresh(const SpecFile& f, LineLexer& lx, const std::string& name) {
  bool used = f.groups.count(name) || f.subgroups.count(name) || f.isos.count(name);
  for (const auto& [n, c] : f.contexts) used = used || n == name;
  if (used) lx.error("name '" + name + "' already declared");
}

void parse_group_decl(SpecFile& f, LineLexer& lx) {
  std::string name = lx.expect_ident("group name");
  check_fresh(f, lx, name);
  lx.expect_punct("=");
  std::string ctor = lx.expect_ident("cyclic or table");
  if (ctor == "cyclic") {
    lx.expect_punct("(");
    long long n = lx.expect_number("order");
    lx.expect_punct(")");
    lx.expect_end();
    f.groups.emplace(name, make_cyclic_group((int)n));
    return;
  }
  if (ctor == "table") {
    lx.expect_punct("(");
    lx.expect_punct("[");
    std::vector<std::vector<int>> table;
    do {
      lx.expect_punct("[");
      std::vector<int> row;
      if (!lx.accept_punct("]")) {
        do {
          row.push_back((int)lx.expect_number("table entry"));
        } while (lx.accept_punct(","));
        lx.expect_punct("]");
      }
      table.push_back(std::move(row));
    } while (lx.accept_punct(","));
    lx.expect_punct("]");
    lx.expect_punct(")");
    lx.expect_end();
    f.groups.emplace(name, validate_table(std::move(table)));
    return;
  }
  lx.error("unknown group constructor '" + ctor + "'");
}

void parse_subgroup_decl(SpecFile& f, LineLexer& lx) {
  std::string name = lx.expect_ident("subgroup name");
  check_fresh(f, lx, name);
  lx.expect_punct("=");
  std::string gname = lx.expect_ident("group name");
  FiniteGroupPtr g = lookup_group(f, lx, gname);
  lx.expect_punct(".");
  std::string method = lx.expect_ident("generated");
  if (method != "generated") lx.error("expected 'generated'");
  lx.expect_punct("(");
  std::vector<int> gens;
  if (!lx.accept_punct(")")) {
    do {
      gens.push_back((int)lx.expect_number("generator index"));
    } while (lx.accept_punct(","));
    lx.expect_punct(")");
  }
  lx.expect_end();
  f.subgroups.emplace(name, subgroup_from_generators(std::move(g), gens));
}

void parse_iso_decl(SpecFile& f, LineLexer& lx) {
  std::string name = lx.expect_ident("iso name");
  check_fresh(f, lx, name);
  lx.expect_punct("=");
  const Subgroup& src = lookup_subgroup(f, lx, lx.expect_ident("source subgroup"));
  lx.expect_punct("->");
  const Subgroup& dst = lookup_subgroup(f, lx, lx.expect_ident("target subgroup"));
  lx.expect_punct("{");
  std::vector<std::pair<int, int>> pairs;
  if (!lx.accept_punct("}")) {
    do {
      int a = (int)lx.expect_number("source index");
      lx.expect_punct("->");
      int b = (int)lx.expect_number("image index");
      pairs.emplace_back(a, b);
    } while (lx.accept_punct(","));
    lx.expect_punct("}");
  }
  lx.expect_end();
  f.isos.emplace(name, make_isomorphism(src, dst, pairs));
}

void parse_valuated_decl(SpecFile& f, LineLexer& lx) {
  std::string name = lx.expect_ident("context name");
  check_fresh(f, lx, name);
  lx.expect_punct("=");
  std::string ctor = lx.expect_ident("construction");
  lx.expect_punct("(");
  ContextPtr ctx;
  if (ctor == "free") {
    long long rank = lx.expect_number("rank");
    lx.expect_punct(")");
    ctx = build_free_group((int)rank);
  } else if (ctor == "free_product") {
    FiniteGroupPtr g1 = lookup_group(f, lx, lx.expect_ident("first factor"));
    lx.expect_punct(",");
    FiniteGroupPtr g2 = lookup_group(f, lx, lx.expect_ident("second factor"));
    lx.expect_punct(")");
    ctx = build_free_product(std::move(g1), std::move(g2));
  } else if (ctor == "amalgam") {
    FiniteGroupPtr g1 = lookup_group(f, lx, lx.expect_ident("first factor"));
    lx.expect_punct(",");
    FiniteGroupPtr g2 = lookup_group(f, lx, lx.expect_ident("second factor"));
    lx.expect_punct(";");
    const Subgroup& a1 = lookup_subgroup(f, lx, lx.expect_ident("first edge subgroup"));
    lx.expect_punct("~");
    const Subgroup& a2 = lookup_subgroup(f, lx, lx.expect_ident("second edge subgroup"));
    std::string via = lx.expect_ident("via");
    if (via != "via") lx.error("expected 'via'");
    const Isomorphism& iso = lookup_iso(f, lx, lx.expect_ident("iso name"));
    lx.expect_punct(")");
    ctx = build_amalgam(std::move(g1), std::move(g2), a1, a2, iso);
  } else if (ctor == "hnn") {
    FiniteGroupPtr g = lookup_group(f, lx, lx.expect_ident("base group"));
    lx.expect_punct(";");
    const Subgroup& a = lookup_subgroup(f, lx, lx.expect_ident("subgroup A"));
    lx.expect_punct("~");
    const Subgroup& b = lookup_subgroup(f, lx, lx.expect_ident("subgroup B"));
    std::string via = lx.expect_ident("via");
    if (via != "via") lx.error("expected 'via'");
    const Isomorphism& phi = lookup_iso(f, lx, lx.expect_ident("iso name"));
    lx.expect_punct(")");
    ctx = build_hnn(std::move(g), a, b, phi);
  } else {
    lx.error("unknown construction '" + ctor + "'");
  }
  lx.expect_end();
  f.contexts.emplace_back(name, std::move(ctx));
}

}  // namespace

const ContextPtr& SpecFile::context(const std::string& name) const {
  for (const auto& [n, c] : contexts)
    if (n == name) return c;
  fail(errc::parse, "no valuated group named '" + name + "'");
}

const ContextPtr& SpecFile::primary() const {
  if (contexts.empty()) fail(errc::parse, "no valuated group declared");
  return contexts.front().second;
}

SpecFile parse_spec(const std::string& text) {
  SpecFile f;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    LineLexer lx(line, lineno);
    if (lx.peek().kind == Tok::End) continue;
    std::string keyword = lx.expect_ident("declaration keyword");
    try {
      if (keyword == "group")
        parse_group_decl(f, lx);
      else if (keyword == "subgroup")
        parse_subgroup_decl(f, lx);
      else if (keyword == "iso")
        parse_iso_decl(f, lx);
      else if (keyword == "valuated")
        parse_valuated_decl(f, lx);
      else
        lx.error("unknown declaration '" + keyword + "'");
    } catch (const Error& e) {
      if (e.code() == errc::parse) throw;
      // surface validation failures with their location
      fail(e.code(), "line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return f;
}

namespace {

[[noreturn]] void word_error(const std::string& tok, const std::string& msg) {
  fail(errc::parse, "word atom '" + tok + "': " + msg);
}

// letter, then either digits (element index) or ^exponent
struct WordAtom {
  char letter;
  bool has_index = false;
  int index = 1;
  bool has_exp = false;
  long long exp = 1;
};

WordAtom split_token(const std::string& tok) {
  WordAtom a;
  if (tok.empty() || !std::isalpha((unsigned char)tok[0]))
    word_error(tok, "expected a letter");
  a.letter = tok[0];
  std::size_t i = 1;
  if (i < tok.size() && std::isdigit((unsigned char)tok[i])) {
    a.has_index = true;
    a.index = 0;
    while (i < tok.size() && std::isdigit((unsigned char)tok[i]))
      a.index = a.index * 10 + (tok[i++] - '0');
  }
  if (i < tok.size() && tok[i] == '^') {
    ++i;
    bool neg = i < tok.size() && tok[i] == '-';
    if (neg) ++i;
    if (i >= tok.size() || !std::isdigit((unsigned char)tok[i]))
      word_error(tok, "expected an integer exponent after '^'");
    a.has_exp = true;
    a.exp = 0;
    while (i < tok.size() && std::isdigit((unsigned char)tok[i]))
      a.exp = a.exp * 10 + (tok[i++] - '0');
    if (neg) a.exp = -a.exp;
  }
  if (i != tok.size()) word_error(tok, "trailing characters");
  if (a.has_index && a.has_exp) word_error(tok, "use either an index or an exponent, not both");
  return a;
}

GroupElement token_element(const GroupContext& ctx, const std::string& tok) {
  WordAtom a = split_token(tok);
  switch (ctx.kind) {
    case ContextKind::Free: {
      int gen = a.letter - 'a';
      if (gen < 0 || gen >= ctx.rank || a.has_index)
        word_error(tok, "free group letters are a.." + std::string(1, (char)('a' + ctx.rank - 1)));
      GroupElement g{&ctx, {Atom{AtomKind::FreeLetter, gen, 1}}};
      return a.has_exp ? power(g, a.exp) : g;
    }
    case ContextKind::FreeProduct:
    case ContextKind::Amalgam: {
      int factor;
      if (a.letter == 'x')
        factor = 0;
      else if (a.letter == 'y')
        factor = 1;
      else
        word_error(tok, "factor letters are x (first factor) and y (second factor)");
      const FiniteGroup& fg = *ctx.factors[factor];
      int idx = a.has_index ? a.index : 1;
      if (idx < 0 || idx >= fg.order) word_error(tok, "element index out of range");
      GroupElement g = canonicalize(ctx, {{Atom{AtomKind::Factor, factor, idx}}});
      return a.has_exp ? power(g, a.exp) : g;
    }
    case ContextKind::Hnn: {
      if (a.letter == 't') {
        if (a.has_index) word_error(tok, "the stable letter takes an exponent, not an index");
        GroupElement g{&ctx, {Atom{AtomKind::Base, 0, 0}, Atom{AtomKind::Stable, 1, 0},
                              Atom{AtomKind::Base, 0, 0}}};
        return a.has_exp ? power(g, a.exp) : g;
      }
      if (a.letter != 'u') word_error(tok, "hnn atoms are u<k> and t");
      int idx = a.has_index ? a.index : 1;
      if (idx < 0 || idx >= ctx.base->order) word_error(tok, "element index out of range");
      GroupElement g = canonicalize(ctx, {{Atom{AtomKind::Base, idx, 0}}});
      return a.has_exp ? power(g, a.exp) : g;
    }
  }
  word_error(tok, "unsupported context");
}

}  // namespace

GroupElement parse_word(const GroupContext& ctx, const std::string& text) {
  GroupElement out = identity_element(ctx);
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    out = multiply(out, token_element(ctx, tok));
  }
  return out;
}

std::string render_word(const GroupElement& g) {
  const GroupContext& ctx = *g.ctx;
  std::vector<std::string> toks;
  for (const Atom& a : g.atoms) {
    switch (a.kind) {
      case AtomKind::FreeLetter:
        toks.push_back(std::string(1, (char)('a' + a.a)) + (a.b == -1 ? "^-1" : ""));
        break;
      case AtomKind::Factor: {
        std::string t(1, a.a == 0 ? 'x' : 'y');
        if (a.b != 1) t += std::to_string(a.b);
        toks.push_back(t);
        break;
      }
      case AtomKind::Stable:
        toks.push_back(a.a == 1 ? "t" : "t^-1");
        break;
      case AtomKind::Base: {
        if (a.a == 0) break;  // trivial head or transversal part
        std::string t = ctx.kind == ContextKind::Hnn ? "u" : "x";
        if (a.a != 1) t += std::to_string(a.a);
        toks.push_back(t);
        break;
      }
    }
  }
  if (toks.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < toks.size(); ++i) {
    if (i) out += ' ';
    out += toks[i];
  }
  return out;
}

}  // namespace valgroup
