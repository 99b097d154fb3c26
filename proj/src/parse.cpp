#include "burnside/parse.hpp"

#include <cctype>

#include "burnside/errors.hpp"

namespace burnside {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(const std::string& w) {
    skip_ws();
    if (s.compare(pos, w.size(), w) == 0) {
      pos += w.size();
      return true;
    }
    return false;
  }
  int number() {
    skip_ws();
    size_t j = pos;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == pos) throw ParseError("expected a number at '" + s.substr(pos) + "'");
    int v = std::stoi(s.substr(pos, j - pos));
    pos = j;
    return v;
  }
};

GroupPtr parse_group_expr(Cursor& c);

GroupPtr parse_group_atom(Cursor& c) {
  if (c.eat('(')) {
    GroupPtr g = parse_group_expr(c);
    if (!c.eat(')')) throw ParseError("expected ')' in group spec");
    return g;
  }
  if (c.eat_word("perm")) {
    if (!c.eat('(')) throw ParseError("expected '(' after perm");
    int degree = c.number();
    if (!c.eat(')') || !c.eat(':')) throw ParseError("expected 'perm(<n>):'");
    // generators separated by commas; each generator a cycle product
    std::vector<Perm> gens;
    std::string current;
    int depth = 0;
    c.skip_ws();
    size_t end = c.s.size();
    // an enclosing ')' (from a parenthesized atom) terminates the list
    for (; c.pos < end; ++c.pos) {
      char ch = c.s[c.pos];
      if (ch == '(') ++depth;
      if (ch == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (ch == ',' && depth == 0) {
        gens.push_back(perm_from_cycles(degree, current));
        current.clear();
        continue;
      }
      current += ch;
    }
    if (current.find_first_not_of(" \t") != std::string::npos)
      gens.push_back(perm_from_cycles(degree, current));
    return closure(degree, gens);
  }
  if (c.eat_word("e")) return trivial_group();
  if (c.eat_word("S")) {
    int m = c.number();
    if (c.eat_word("wr")) {
      GroupPtr base = parse_group_atom(c);
      return wreath_product(m, base).group;
    }
    return symmetric_group(m);
  }
  if (c.eat_word("C")) return cyclic_group(c.number());
  throw ParseError("cannot parse group spec at '" + c.s.substr(c.pos) + "'");
}

GroupPtr parse_group_expr(Cursor& c) {
  GroupPtr g = parse_group_atom(c);
  while (c.eat('x')) {
    GroupPtr h = parse_group_atom(c);
    g = direct_product(g, h).group;
  }
  return g;
}

}  // namespace

GroupPtr parse_group(const std::string& spec) {
  Cursor c{spec};
  GroupPtr g = parse_group_expr(c);
  if (!c.at_end()) throw ParseError("trailing input in group spec: '" + spec.substr(c.pos) + "'");
  return g;
}

namespace {

// Scalar literal, greedy for the active ring: digits, optional /q for Q,
// optional gaussian tail a+bi / bare i forms for Zi.
Scalar parse_scalar_at(Cursor& c, const CoeffRing& ring) {
  c.skip_ws();
  size_t start = c.pos;
  auto digits = [&]() {
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  };
  if (ring.kind == RingKind::Gaussian && c.pos < c.s.size() && c.s[c.pos] == 'i') {
    ++c.pos;
    return Scalar::parse(ring, "i");
  }
  digits();
  if (c.pos == start) throw ParseError("expected a scalar at '" + c.s.substr(start) + "'");
  if (ring.kind == RingKind::Rationals && c.pos < c.s.size() && c.s[c.pos] == '/') {
    ++c.pos;
    digits();
  } else if (ring.kind == RingKind::Gaussian) {
    if (c.pos < c.s.size() && c.s[c.pos] == 'i') {
      ++c.pos;
    } else if (c.pos < c.s.size() && (c.s[c.pos] == '+' || c.s[c.pos] == '-')) {
      // consume the imaginary tail only if it really ends in i
      size_t probe = c.pos + 1;
      while (probe < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[probe]))) ++probe;
      if (probe < c.s.size() && c.s[probe] == 'i') c.pos = probe + 1;
    }
  }
  return Scalar::parse(ring, c.s.substr(start, c.pos - start));
}

std::string parse_bracket_body(Cursor& c) {
  if (!c.eat('[')) throw ParseError("expected '['");
  std::string body;
  while (c.pos < c.s.size() && c.s[c.pos] != ']') body += c.s[c.pos++];
  if (!c.eat(']')) throw ParseError("unterminated '[' in element");
  return body;
}

int class_index_for(const SubgroupClassTable& t, const std::string& token) {
  if (token == "e") return 0;  // the trivial subgroup is always the first class
  int idx = t.class_by_label(token);
  if (idx >= 0) return idx;
  // "S<n>" or the group's own label means the full subgroup
  if (!t.group()->label().empty() && token == t.group()->label()) return t.num_classes() - 1;
  throw ParseError("unknown subgroup class '" + token + "'");
}

}  // namespace

BurnsideElement parse_element(const std::string& text, GroupPtr group, CoeffRing ring) {
  const SubgroupClassTable& t = subgroup_classes(group);
  BurnsideElement out(group, ring);
  Cursor c{text};
  bool first = true;
  while (!c.at_end()) {
    Scalar sign(ring, 1);
    if (c.eat('-'))
      sign = Scalar(ring, -1);
    else
      c.eat('+');
    if (first && sign.is_one() && c.at_end()) break;
    first = false;

    Scalar coef = sign;
    bool have_scalar = false;
    c.skip_ws();
    if (c.peek() != '[' && c.peek() != 't') {
      coef = sign * parse_scalar_at(c, ring);
      have_scalar = true;
    }
    c.skip_ws();
    if (have_scalar && !c.eat('*')) {
      // bare scalar: multiple of the unit [G/G]
      int unit = t.num_classes() - 1;
      out.set_coeff(unit, out.coeff(unit) + coef);
      continue;
    }
    c.skip_ws();
    int idx;
    if (c.peek() == 't') {
      if (group != symmetric_group(2))
        throw ParseError("'t' denotes [S2/e] and needs the group S2");
      c.eat('t');
      idx = 0;
    } else {
      std::string body = parse_bracket_body(c);
      // element brackets may carry "G/H" or a plain class label
      auto slash = body.find('/');
      std::string label = (slash == std::string::npos) ? body : body.substr(slash + 1);
      idx = class_index_for(t, label);
    }
    out.set_coeff(idx, out.coeff(idx) + coef);
  }
  return out;
}

namespace {

long long parse_int_coef(Cursor& c) {
  c.skip_ws();
  size_t start = c.pos;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) ++c.pos;
  if (c.pos == start) throw ParseError("expected an integer coefficient");
  return std::stoll(c.s.substr(start, c.pos - start));
}

}  // namespace

OperatorElement parse_operator(const std::string& text) {
  OperatorElement out;
  Cursor c{text};
  while (!c.at_end()) {
    long long sign = 1;
    if (c.eat('-'))
      sign = -1;
    else
      c.eat('+');

    long long coef = sign;
    c.skip_ws();
    char p = c.peek();
    if (std::isdigit(static_cast<unsigned char>(p))) {
      coef = sign * parse_int_coef(c);
      if (!c.eat('*')) {
        // bare integer: multiple of the unit in A(S0)
        out = out + OperatorElement::unit().scaled(coef);
        continue;
      }
      c.skip_ws();
      p = c.peek();
    }
    if (p == 'e') {
      c.eat('e');
      out = out + OperatorElement::identity_op().scaled(coef);
      continue;
    }
    if (p == 't') {
      c.eat('t');
      out = out + OperatorElement::basis(2, 0).scaled(coef);
      continue;
    }
    std::string body = parse_bracket_body(c);
    auto slash = body.find('/');
    if (slash == std::string::npos) throw ParseError("operator atom needs the form [S<n>/<class>]");
    std::string gspec = body.substr(0, slash);
    if (gspec.empty() || gspec[0] != 'S')
      throw ParseError("operator atoms live over symmetric groups: " + body);
    int n = std::stoi(gspec.substr(1));
    const SubgroupClassTable& t = subgroup_classes(symmetric_group(n));
    int idx = class_index_for(t, body.substr(slash + 1));
    out = out + OperatorElement::basis(n, idx).scaled(coef);
  }
  return out;
}

OperatorElement2 parse_operator2(const std::string& text) {
  OperatorElement2 out;
  Cursor c{text};
  while (!c.at_end()) {
    long long sign = 1;
    if (c.eat('-'))
      sign = -1;
    else
      c.eat('+');
    long long coef = sign;
    c.skip_ws();
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = sign * parse_int_coef(c);
      if (!c.eat('*')) {
        out = out + OperatorElement2::of(0, 0, BurnsideElement::unit(bidegree_group(0, 0))
                                                   .scaled(Scalar(CoeffRing::integers(), mpz_ll(coef))));
        continue;
      }
    }
    std::string body = parse_bracket_body(c);
    auto slash = body.find('/');
    if (slash == std::string::npos)
      throw ParseError("bidegree atom needs the form [S<p>xS<q>/<class>]");
    std::string gspec = body.substr(0, slash);
    auto xsep = gspec.find('x');
    if (xsep == std::string::npos || gspec[0] != 'S' || gspec[xsep + 1] != 'S')
      throw ParseError("bidegree atom needs the form [S<p>xS<q>/<class>]: " + body);
    int p = std::stoi(gspec.substr(1, xsep - 1));
    int q = std::stoi(gspec.substr(xsep + 2));
    const SubgroupClassTable& t = subgroup_classes(bidegree_group(p, q));
    int idx = class_index_for(t, body.substr(slash + 1));
    out = out + OperatorElement2::of(
                    p, q, BurnsideElement::basis(bidegree_group(p, q), idx)
                              .scaled(Scalar(CoeffRing::integers(), mpz_ll(coef))));
  }
  return out;
}

}  // namespace burnside
