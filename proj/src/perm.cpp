#include "burnside/perm.hpp"

#include <algorithm>
#include <cctype>

#include "burnside/errors.hpp"

namespace burnside {

Perm perm_identity(int degree) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t x = 0; x < p.size(); ++x) r[p[x]] = static_cast<int>(x);
  return r;
}

bool perm_is_even(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int transpositions = 0;
  for (size_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (int y = static_cast<int>(x); !seen[y]; y = p[y]) {
      seen[y] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

std::string perm_to_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.size(), 0);
  for (size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == static_cast<int>(x)) continue;
    out += "(";
    bool first = true;
    for (int y = static_cast<int>(x); !seen[y]; y = p[y]) {
      seen[y] = 1;
      if (!first) out += " ";
      out += std::to_string(y);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Perm perm_from_cycles(int degree, const std::string& text) {
  Perm p = perm_identity(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw ParseError("unterminated cycle: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      if (j == i) throw ParseError("expected point index in cycle: " + text);
      int pt = std::stoi(text.substr(i, j - i));
      if (pt < 0 || pt >= degree)
        throw ParseError("point " + std::to_string(pt) + " out of range for degree " +
                         std::to_string(degree));
      cyc.push_back(pt);
      i = j;
    }
    // apply the cycle on the left of what we have so far
    Perm c = perm_identity(degree);
    for (size_t k = 0; k < cyc.size(); ++k) c[cyc[k]] = cyc[(k + 1) % cyc.size()];
    if (!is_permutation(c)) throw ParseError("repeated point in cycle: " + text);
    p = perm_compose(p, c);
    skip_ws();
  }
  return p;
}

}  // namespace burnside
