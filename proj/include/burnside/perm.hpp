#pragma once

#include <string>
#include <vector>

namespace burnside {

/// A permutation of {0,...,deg-1} stored as its image table: p[x] is the
/// image of x. Composition is function composition, (a*b)(x) = a[b[x]].
using Perm = std::vector<int>;

Perm perm_identity(int degree);
bool is_permutation(const Perm& p);
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& p);
bool perm_is_even(const Perm& p);

/// Cycle notation. "(0 1)(2 3 4)" on parse; fixed points omitted on print,
/// identity prints as "()".
std::string perm_to_cycles(const Perm& p);
Perm perm_from_cycles(int degree, const std::string& text);

}  // namespace burnside
