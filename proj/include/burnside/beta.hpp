#pragma once

#include "burnside/global_ops.hpp"

namespace burnside {

/// Element of the operator ring, a finite sum of classes over the symmetric
/// groups; degree-m part lives over S_m with integer coefficients.
struct OperatorElement {
  std::map<int, BurnsideElement> parts;

  static OperatorElement zero() { return {}; }
  static OperatorElement unit();         // 1 in A(S_0)
  static OperatorElement identity_op();  // e = 1 in A(S_1), the plethysm unit
  static OperatorElement of(int degree, BurnsideElement part);
  static OperatorElement basis(int degree, int class_index);

  int max_degree() const;
  BurnsideElement part(int degree) const;  // zero element when absent
  void set_part(int degree, BurnsideElement value);

  OperatorElement operator+(const OperatorElement& o) const;
  OperatorElement operator-() const;
  OperatorElement scaled(long long c) const;
  bool operator==(const OperatorElement& o) const;

  std::string to_string() const;
};

/// x . y = tr_{S_k x S_l}^{S_{k+l}} (x X y), extended bilinearly.
OperatorElement transfer_product(const OperatorElement& x, const OperatorElement& y);

/// Plethysm x * y, over all decompositions of y into homogeneous summands.
/// The wrong-way map on each term is the deflation K x_G X, which restricts
/// to induction along the imprimitive embeddings and collapses the
/// degree-zero wreath factors.
OperatorElement plethysm(const OperatorElement& x, const OperatorElement& y);

/// Same, with an explicitly chosen decomposition of y (the result must not
/// depend on it; that independence is a tested invariant).
OperatorElement plethysm_with_parts(const OperatorElement& x,
                                    const std::vector<std::pair<int, BurnsideElement>>& parts);

/// Bidegree-graded analogue over the products S_p x S_q.
struct OperatorElement2 {
  std::map<std::pair<int, int>, BurnsideElement> parts;

  static OperatorElement2 zero() { return {}; }
  static OperatorElement2 of(int p, int q, BurnsideElement part);

  BurnsideElement part(int p, int q) const;
  void set_part(int p, int q, BurnsideElement value);
  OperatorElement2 operator+(const OperatorElement2& o) const;
  bool operator==(const OperatorElement2& o) const;
  std::string to_string() const;
};

GroupPtr bidegree_group(int p, int q);  // the interned S_p x S_q

OperatorElement2 transfer_product2(const OperatorElement2& x, const OperatorElement2& y);

/// Phi: B -> B^2, x over S_m to the sum of its restrictions along all
/// juxtapositions S_p x S_q -> S_m with p + q = m.
OperatorElement2 phi_map(const OperatorElement& x);

/// x (x) y to x X y in bidegree (deg x, deg y), extended bilinearly.
OperatorElement2 times2(const OperatorElement& x, const OperatorElement& y);

/// D_G: evaluates an exponential sequence against an operator,
///   sum_n <(delta_n^G)^* s_n, x_n>;  a ring homomorphism for fixed s.
BurnsideElement duality_eval(const ExpSequence& s, const OperatorElement& x);

/// theta(x)(a) = D_G(P(a))(x). Over Z directly; over Z/n through integral
/// lifts, gated by the induced-candidate check for the degrees involved;
/// over Z[i] and Q only for elements with integral lifts.
BurnsideElement theta(const OperatorElement& x, const BurnsideElement& a);

/// Closed form for a basis operator [S_n/H] on an effective integral a:
/// the G-set X^n/H.
BurnsideElement theta_closed_form(int n, const Subgroup& h, const BurnsideElement& a);

/// theta^2(z)(c,d) = sum_{p,q} <(delta_{p,q}^G)^* (P^p c x P^q d), z_{p,q}>.
BurnsideElement theta2(const OperatorElement2& z, const BurnsideElement& c,
                       const BurnsideElement& d);

// --- checker harnesses ---------------------------------------------------------

/// beta-ring axioms i)-v) on A(G) (x) Z: operator grid of basis elements of
/// degree <= degree_bound (every operator occurring in an instance respects
/// the bound, products and plethysms included), ring arguments all basis
/// elements and their pairwise sums.
Report check_beta_axioms(GroupPtr g, int degree_bound, int threads = 1);

/// Additivity axioms i)-ii) of the theta^2 structure on the same grid.
Report check_additive_axioms(GroupPtr g, int degree_bound, int threads = 1);

/// Restrictions are morphisms of beta-rings: phi^*(theta(x)(a)) =
/// theta(x)(phi^* a) on the sample grid.
Report check_morphisms(const GroupHom& phi, int degree_bound, int threads = 1);

/// Demonstration that transfers are not beta-ring morphisms: searches for a
/// violating instance and reports the first one found.
Report transfer_morphism_demo();

/// Divisibility obstruction against power operations on A (x) Z/n, plus the
/// truncated operations below the smallest prime factor.
Report obstruction_zmodn(const mpz_class& n);

/// P^2(-1) = t - 1 is not a square over Z[i]; becomes one after inverting 2.
Report obstruction_gaussian();

/// Tests whether reducing P^m mod n is well defined on A(G) (x) Z/n:
/// P^m(x + n y) = P^m(x) mod n over the sample grid.
Report check_induced_candidate(GroupPtr g, const mpz_class& n, int degree_bound);

/// Cached verdict of the candidate check (used as the gate for theta over Z/n).
bool induced_candidate_ok(const GroupPtr& g, const mpz_class& n, int degree);

}  // namespace burnside
