#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

/// Finite G-set as a dense action table, act(g, x) for every element index g
/// and point x. Tables are shared on copy and immutable after construction.
class GSet {
 public:
  /// `table` has group->order() * size entries, laid out by element row.
  /// Construction checks the identity row and multiplicativity on generator
  /// pairs; full associativity is rechecked in debug builds for small sets.
  GSet(GroupPtr group, long long size, std::vector<int32_t> table);

  const GroupPtr& group() const { return group_; }
  long long size() const { return size_; }
  int act(int g, long long x) const { return (*table_)[g * size_ + x]; }

  void check_full_associativity() const;  // throws on violation

 private:
  GroupPtr group_;
  long long size_ = 0;
  std::shared_ptr<const std::vector<int32_t>> table_;
};

struct Orbit {
  long long rep;
  long long size;
  Subgroup stabilizer;
};

/// One entry per orbit, reps increasing; asserts orbit-stabilizer on each.
std::vector<Orbit> orbits(const GSet& x);

long long fixed_points_count(const GSet& x, const Subgroup& h);

GSet cosets_gset(GroupPtr g, const Subgroup& h);      // G/H, left translation
GSet point_gset(GroupPtr g);                          // G/G
GSet pullback(const GroupHom& alpha, const GSet& y);  // same carrier, g.y = alpha(g).y
GSet disjoint_union(const GSet& x, const GSet& y);

/// X^m over Sigma_m wr G; coordinate j of (sigma; g_1..g_m).x is
/// g_j . x_{sigma^{-1}(j)}.
GSet power_set(const GSet& x, int m);

/// G x_H X along an injective homomorphism alpha: H -> G.
GSet induce_along(const GroupHom& alpha, const GSet& x);
/// Convenience for a subgroup: X must live over subgroup_as_group(h).
GSet induce(const Subgroup& h, const GSet& x);

/// K x_G X along f: G -> K, i.e. (K x X) / ((k f(g), x) ~ (k, g x)).
GSet coinduce_deflate(const GroupHom& f, const GSet& x);

GSet external_set_product(const ProductGroup& prod, const GSet& x, const GSet& y);

/// Orbit space X/H for H <= W acting on X, with the residual action of G
/// through psi: G -> W; psi(G) must normalize H.
GSet quotient_by_subgroup(const GSet& x, const Subgroup& h, const GroupHom& psi);

/// Formal integer combination of G-sets over one group: the working
/// representation of a Burnside-ring element when the ambient group is too
/// large for canonical subgroup-lattice coordinates.
struct VirtualGSet {
  GroupPtr group;
  std::vector<std::pair<GSet, long long>> terms;

  static VirtualGSet zero(GroupPtr g) { return {std::move(g), {}}; }
  static VirtualGSet of(GSet x, long long mult = 1);

  VirtualGSet operator+(const VirtualGSet& o) const;
  VirtualGSet operator-() const;
  VirtualGSet scaled(long long c) const;
  bool effective() const;  // all multiplicities >= 0
};

VirtualGSet pullback(const GroupHom& alpha, const VirtualGSet& x);
VirtualGSet induce_along(const GroupHom& alpha, const VirtualGSet& x);
VirtualGSet coinduce_deflate(const GroupHom& f, const VirtualGSet& x);
VirtualGSet external_product(const ProductGroup& prod, const VirtualGSet& x,
                             const VirtualGSet& y);

/// Net multiplicity of each stabilizer conjugacy class occurring among the
/// orbits of the terms; pairwise conjugacy tests only, no subgroup lattice.
std::vector<std::pair<Subgroup, long long>> stabilizer_class_multiplicities(const VirtualGSet& x);

/// Equality in the Burnside ring, decided through the occurring stabilizer
/// classes. Works for groups of any size.
bool virtual_equal(const VirtualGSet& a, const VirtualGSet& b);

}  // namespace burnside
