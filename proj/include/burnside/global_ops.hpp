#pragma once

#include <string>
#include <vector>

#include "burnside/burnside.hpp"

namespace burnside {

// --- functorial operations on canonical elements ------------------------------

/// Restriction along alpha: G -> K of x in A(K)(x)C; a ring homomorphism.
BurnsideElement restrict_along(const GroupHom& alpha, const BurnsideElement& x);

/// Transfer along an injective homomorphism (induction); additive only.
BurnsideElement transfer_along(const GroupHom& alpha, const BurnsideElement& x);

/// Transfer from a subgroup: x lives over subgroup_as_group(h).
BurnsideElement transfer(const Subgroup& h, const BurnsideElement& x);

/// Deflation f_*(X) = K x_G X along any homomorphism f: G -> K.
BurnsideElement deflate(const GroupHom& f, const BurnsideElement& x);

/// External product A(G) x A(K) -> A(G x K).
BurnsideElement external_product(const ProductGroup& prod, const BurnsideElement& x,
                                 const BurnsideElement& y);

// --- set-level helpers over virtual representatives ---------------------------

/// Diagonal product of two virtual elements over the same group.
VirtualGSet mul_sets(const VirtualGSet& a, const VirtualGSet& b);

// --- power operations ----------------------------------------------------------

/// Transfer along the juxtaposition Phi_{p,q} into Sigma_{p+q} wr G, as the
/// middle step of the exponential sum formula.
VirtualGSet juxtaposition_transfer(GroupPtr base, int p, int q, const VirtualGSet& left,
                                   const VirtualGSet& right);

/// P^m of an integral element, as a virtual set over Sigma_m wr G.
/// Sums are expanded by the exponential formula
///   P^m(u+v) = sum_{p+q=m} tr(P^p(u) x P^q(v)),
/// negatives by the recursion that formula forces on x + (-x) = 0.
VirtualGSet power_virtual(const BurnsideElement& x, int m);

/// Canonicalized power; requires the wreath lattice to be in bounds.
BurnsideElement power(const BurnsideElement& x, int m);

/// (P^0 x, ..., P^N x); computed in one pass over the summands of x.
struct ExpSequence {
  GroupPtr group;
  int bound = 0;
  std::vector<VirtualGSet> entries;

  const VirtualGSet& entry(int m) const;
};

ExpSequence exp_sequence(const BurnsideElement& x, int bound);

/// The defining invariant: Phi_{p,q}-restriction of entry p+q equals
/// entry p x entry q for all p+q <= bound.
bool exp_sequence_is_exponential(const ExpSequence& s);

/// delta_m-restricted entries decompose(pullback(delta_m, P^m x)) over
/// Sigma_m x G; the form every beta-operation consumes.
std::vector<BurnsideElement> restricted_powers(const BurnsideElement& x, int bound);

// --- the A-deflation pairing ----------------------------------------------------

/// <r, x>_{K,G}: external product, restriction along the K-diagonal, then
/// deflation along pr_G. kxg must be the interned product of (K, G);
/// r lives over kxg.group, x over K with integer coefficients.
BurnsideElement pair_deflate(const ProductGroup& kxg, const BurnsideElement& r,
                             const BurnsideElement& x);

/// Set-level route, usable when K x G has no lattice.
VirtualGSet pair_deflate_sets(const ProductGroup& kxg, const VirtualGSet& r,
                              const VirtualGSet& x);

// --- reports -------------------------------------------------------------------

struct ReportEntry {
  std::string check;
  std::string instance;
  bool pass = false;
  std::string lhs, rhs;
};

struct Report {
  std::string title;
  std::vector<std::string> notes;
  std::vector<ReportEntry> entries;

  int failures() const;
  void add(std::string check, std::string instance, bool pass, std::string lhs = "",
           std::string rhs = "");
};

// --- identity checkers -----------------------------------------------------------

/// (a) Phi_{i,j}-restriction of P^{i+j} factors as P^i x P^j,
/// (b) naturality of P^n along restrictions,
/// (c) the sum formula against direct powers of realized unions.
Report check_power_identities(const std::vector<GroupPtr>& corpus, int max_degree,
                              int threads = 1);

struct PairingInstanceGroups {
  std::vector<GroupPtr> groups;        // candidates for K, L and G
  long max_product_order = 24;         // bound on |K x G|
  int wreath_degree = 2;               // n in axiom vii
  std::vector<GroupPtr> wreath_bases;  // G values for axiom vii
};
PairingInstanceGroups default_pairing_corpus();

/// Axioms i)-vii) of the deflation pairing on the Burnside rings, plus the
/// single-double-coset instance used by the additivity argument.
Report check_pairing_axioms(const PairingInstanceGroups& corpus, int threads = 1);

/// Runs instances in parallel when threads > 1; result order is fixed.
void parallel_instances(int count, int threads, const std::function<void(int)>& run);

}  // namespace burnside
