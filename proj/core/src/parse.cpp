#include "contalg/parse.hpp"

#include <cctype>

namespace contalg {

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  bool eof() const { return pos >= s.size(); }
  char peek() const { return eof() ? '\0' : s[pos]; }
  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  [[noreturn]] void fail(const std::string& expected) const {
    throw ParseError("syntax error at offset " + std::to_string(pos) +
                         ": expected " + expected,
                     pos, expected);
  }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("'") + c + "'");
    ++pos;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  std::uint32_t nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
      if (v > 0xFFFFFFFFull) fail("a smaller number");
      ++pos;
    }
    return static_cast<std::uint32_t>(v);
  }
  std::string ident() {
    skip_ws();
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("an identifier");
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      out += s[pos];
      ++pos;
    }
    return out;
  }
  /// consumes a balanced "(...)" group, returns the inner text
  std::string paren_group() {
    expect('(');
    std::size_t depth = 1, start = pos;
    while (!eof() && depth) {
      if (s[pos] == '(') ++depth;
      if (s[pos] == ')') --depth;
      ++pos;
    }
    if (depth) fail("')'");
    return s.substr(start, pos - 1 - start);
  }
  /// product separator: "x" or the UTF-8 multiplication sign
  bool accept_times() {
    skip_ws();
    if (peek() == 'x') {
      ++pos;
      return true;
    }
    if (pos + 1 < s.size() && static_cast<unsigned char>(s[pos]) == 0xC3 &&
        static_cast<unsigned char>(s[pos + 1]) == 0x97) {
      pos += 2;
      return true;
    }
    return false;
  }
};

std::vector<std::uint32_t> parse_upoly(Cursor& c, const std::string& var,
                                       std::uint32_t n) {
  std::vector<std::uint32_t> coeffs;
  auto add_at = [&](std::uint32_t exp, std::uint32_t co) {
    if (coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
    coeffs[exp] = (coeffs[exp] + co) % n;
  };
  while (true) {
    c.skip_ws();
    std::uint32_t co = 1;
    bool have_co = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      co = c.nat() % n;
      have_co = true;
      c.accept('*');
    }
    c.skip_ws();
    if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
      std::string v = c.ident();
      if (v != var) c.fail("the variable '" + var + "'");
      std::uint32_t e = c.accept('^') ? c.nat() : 1;
      add_at(e, co);
    } else if (have_co) {
      add_at(0, co);
    } else {
      c.fail("a coefficient or '" + var + "'");
    }
    if (!c.accept('+')) break;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

std::vector<std::uint32_t> parse_monomial(Cursor& c,
                                          const std::vector<std::string>& vars) {
  std::vector<std::uint32_t> exps(vars.size(), 0);
  while (true) {
    std::string v = c.ident();
    std::size_t vi = vars.size();
    for (std::size_t i = 0; i < vars.size(); ++i)
      if (vars[i] == v) vi = i;
    if (vi == vars.size()) c.fail("one of the declared variables");
    exps[vi] += c.accept('^') ? c.nat() : 1;
    if (!c.accept('*')) break;
  }
  return exps;
}

RingExpr parse_expr(Cursor& c);

RingExpr parse_atom(Cursor& c) {
  c.skip_ws();
  if (c.peek() == '(') {
    c.expect('(');
    RingExpr e = parse_expr(c);
    c.expect(')');
    return e;
  }
  if (c.peek() != 'Z') c.fail("'Z' or '('");
  ++c.pos;
  RingExpr e;
  e.n = c.nat();
  c.skip_ws();
  if (c.peek() != '[') {
    e.kind = RingKind::Zn;
    return e;
  }
  c.expect('[');
  std::vector<std::string> vars;
  vars.push_back(c.ident());
  while (c.accept(',')) vars.push_back(c.ident());
  c.expect(']');
  c.skip_ws();
  if (c.peek() == '@') {
    ++c.pos;
    e.kind = RingKind::TruncLocal;
    e.vars = std::move(vars);
    e.trunc = c.nat();
    c.skip_ws();
    if (c.peek() == '/') {
      ++c.pos;
      c.expect('(');
      e.extra.push_back(parse_monomial(c, e.vars));
      while (c.accept(',')) e.extra.push_back(parse_monomial(c, e.vars));
      c.expect(')');
    }
    return e;
  }
  c.expect('/');
  c.expect('(');
  if (vars.size() != 1) c.fail("'@' (a quotient takes a single variable)");
  e.kind = RingKind::UnivarQuot;
  e.var = vars[0];
  e.monic = parse_upoly(c, e.var, e.n);
  c.expect(')');
  return e;
}

RingExpr parse_expr(Cursor& c) {
  RingExpr left = parse_atom(c);
  while (c.accept_times()) {
    RingExpr right = parse_atom(c);
    RingExpr prod;
    prod.kind = RingKind::Product;
    prod.left = std::make_shared<RingExpr>(std::move(left));
    prod.right = std::make_shared<RingExpr>(std::move(right));
    left = std::move(prod);
  }
  return left;
}

std::string upoly_text(const std::vector<std::uint32_t>& coeffs,
                       const std::string& var) {
  std::string s;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(coeffs[i]);
    } else {
      if (coeffs[i] != 1) s += std::to_string(coeffs[i]);
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string monomial_text(const std::vector<std::uint32_t>& exps,
                          const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (exps[i] > 1) s += "^" + std::to_string(exps[i]);
  }
  return s;
}

}  // namespace

bool operator==(const RingExpr& a, const RingExpr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RingKind::Zn:
      return a.n == b.n;
    case RingKind::UnivarQuot:
      return a.n == b.n && a.var == b.var && a.monic == b.monic;
    case RingKind::TruncLocal:
      return a.n == b.n && a.vars == b.vars && a.trunc == b.trunc &&
             a.extra == b.extra;
    case RingKind::Product:
      return *a.left == *b.left && *a.right == *b.right;
  }
  return false;
}

RingExpr parse_ring_expr(const std::string& text) {
  Cursor c{text};
  RingExpr e = parse_expr(c);
  c.skip_ws();
  if (!c.eof()) c.fail("end of input");
  return e;
}

std::string print_ring_expr(const RingExpr& e) {
  switch (e.kind) {
    case RingKind::Zn:
      return "Z" + std::to_string(e.n);
    case RingKind::UnivarQuot:
      return "Z" + std::to_string(e.n) + "[" + e.var + "]/(" +
             upoly_text(e.monic, e.var) + ")";
    case RingKind::TruncLocal: {
      std::string s = "Z" + std::to_string(e.n) + "[";
      for (std::size_t i = 0; i < e.vars.size(); ++i)
        s += (i ? "," : "") + e.vars[i];
      s += "]@" + std::to_string(e.trunc);
      if (!e.extra.empty()) {
        s += "/(";
        for (std::size_t i = 0; i < e.extra.size(); ++i)
          s += (i ? "," : "") + monomial_text(e.extra[i], e.vars);
        s += ")";
      }
      return s;
    }
    case RingKind::Product: {
      std::string rhs = print_ring_expr(*e.right);
      if (e.right->kind == RingKind::Product) rhs = "(" + rhs + ")";
      return print_ring_expr(*e.left) + " x " + rhs;
    }
  }
  return {};
}

RingPtr build_ring(const RingExpr& e, const Limits& limits) {
  switch (e.kind) {
    case RingKind::Zn:
      return make_zn(e.n);
    case RingKind::UnivarQuot:
      return make_univariate_quotient(e.n, e.var, e.monic);
    case RingKind::TruncLocal:
      return make_trunc_local(e.n, e.vars, e.trunc, e.extra, limits);
    case RingKind::Product:
      return make_product(build_ring(*e.left, limits),
                          build_ring(*e.right, limits), limits);
  }
  throw InvalidParameter("unknown ring expression kind");
}

RingPtr ring_from_text(const std::string& text, const Limits& limits) {
  return build_ring(parse_ring_expr(text), limits);
}

namespace {

std::uint32_t coeff_from(Cursor& c, const FiniteRing& r) {
  c.skip_ws();
  if (c.peek() == '(') {
    std::size_t at = c.pos;
    std::string inner = c.paren_group();
    if (auto idx = r.index_of(inner)) return *idx;
    if (auto idx = r.index_of("(" + inner + ")")) return *idx;
    throw ParseError("unknown ring element '(" + inner + ")' at offset " +
                         std::to_string(at),
                     at, "a ring element name");
  }
  std::size_t at = c.pos;
  if (!std::isdigit(static_cast<unsigned char>(c.peek())))
    c.fail("a coefficient");
  std::string digits;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    digits += c.s[c.pos];
    ++c.pos;
  }
  if (auto idx = r.index_of(digits)) return *idx;
  // "0" always denotes the zero element, even when it is named differently
  // (product rings); poly_to_string prints the zero polynomial as "0".
  if (digits == "0") return r.zero();
  throw ParseError("unknown ring element '" + digits + "' at offset " +
                       std::to_string(at),
                   at, "a ring element name");
}

MonoidElem monomial_from(Cursor& c, const Monoid& m) {
  if (m.kind() == Monoid::Kind::Finite) {
    c.expect('X');
    c.expect('^');
    c.skip_ws();
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_') {
      name += c.s[c.pos];
      ++c.pos;
    }
    auto e = m.elem_by_name(name);
    if (!e) c.fail("a monoid element name");
    return *e;
  }
  MonoidElem exps(m.arity(), 0);
  while (true) {
    c.expect('X');
    std::uint32_t vi = 0;
    if (m.arity() > 1) {
      vi = c.nat();
      if (vi == 0 || vi > m.arity()) c.fail("a variable index within arity");
      --vi;
    }
    exps[vi] += c.accept('^') ? c.nat() : 1;
    c.skip_ws();
    // '*' continues the monomial only when an X follows; otherwise it
    // belongs to the caller (there is none in the literal grammar, so
    // require X after '*').
    if (c.peek() != '*') break;
    ++c.pos;
  }
  return exps;
}

}  // namespace

MRElem parse_poly_literal(const std::string& text, const RingPtr& r, MonoidPtr m) {
  static MonoidPtr free1 = Monoid::free_comm(1);
  if (!m) m = free1;
  Cursor c{text};
  MRElem acc = mr_zero(r, m);
  while (true) {
    c.skip_ws();
    std::uint32_t co = r->one();
    bool have_co = false;
    if (c.peek() != 'X') {
      co = coeff_from(c, *r);
      have_co = true;
    }
    c.skip_ws();
    bool has_mon = false;
    if (!have_co) {
      has_mon = true;
    } else if (c.peek() == '*') {
      ++c.pos;
      has_mon = true;
    }
    MonoidElem e = m->identity();
    if (has_mon) e = monomial_from(c, *m);
    if (co != r->zero()) acc = mr_add(acc, mr_term(r, m, co, e));
    if (!c.accept('+')) break;
  }
  c.skip_ws();
  if (!c.eof()) c.fail("end of input");
  return acc;
}

std::uint32_t parse_element(const std::string& text, const FiniteRing& r) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  std::string t = b == std::string::npos ? "" : text.substr(b, e - b + 1);
  if (auto idx = r.index_of(t)) return *idx;
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
    if (auto idx = r.index_of(t.substr(1, t.size() - 2))) return *idx;
  throw ParseError("unknown ring element '" + t + "'", 0,
                   "a ring element name");
}

}  // namespace contalg
