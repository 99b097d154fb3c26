#pragma once

#include <string>

#include "burnside/beta.hpp"

namespace burnside {

/// Group specs: "S<m>", "C<n>", "e", "S<m>wr<term>", "<spec>x<spec>",
/// parenthesized subexpressions, and explicit generators
/// "perm(<degree>): (0 1), (0 1 2)" (standalone or parenthesized).
GroupPtr parse_group(const std::string& spec);

/// Linear combinations "a*[H<ord>_<idx>] + ...". Bare scalars are multiples
/// of the unit [G/G]; "t" is the free class when the group is S2. Scalar
/// literals follow the ring: "3", "-2", "1/2", "2+1i".
BurnsideElement parse_element(const std::string& text, GroupPtr group, CoeffRing ring);

/// Operator elements of B: integer combinations of "[S<n>/<class>]" where
/// <class> is "e", "S<n>" or a class label; shorthands "1" (unit of A(S0)),
/// "e" (unit of A(S1)) and "t" (= [S2/e]).
OperatorElement parse_operator(const std::string& text);

/// Bidegree operators: "[S<p>xS<q>/<class>]" combinations.
OperatorElement2 parse_operator2(const std::string& text);

}  // namespace burnside
