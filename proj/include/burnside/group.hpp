#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "burnside/perm.hpp"

namespace burnside {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// A finite permutation group with a fully enumerated, lexicographically
/// sorted element list. Instances are interned: two constructions of the
/// same set of permutations yield the same shared object, so pointer
/// equality is group equality and per-group caches are shared.
///
/// Immutable after construction; lazy lookup tables are built under locks.
class PermGroup : public std::enable_shared_from_this<PermGroup> {
 public:
  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }
  const std::vector<int>& generator_indices() const { return generators_; }
  int identity() const { return id_index_; }
  const std::string& label() const { return label_; }

  /// Index of p in the sorted element list, or -1.
  int index_of(const Perm& p) const;

  int mul(int i, int j) const;  // index of element(i) * element(j)
  int inv(int i) const;

  int apply(int g, int point) const { return elements_[g][point]; }

  bool is_trivial() const { return elements_.size() == 1; }

  /// Order-independent identity key, shared with the on-disk cache.
  std::string fingerprint() const;

 private:
  friend GroupPtr intern_group(int, std::vector<Perm>, std::vector<Perm>, std::string);

  PermGroup() = default;

  int degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<int> generators_;
  int id_index_ = 0;
  std::string label_;

  // lazy tables
  mutable std::once_flag tables_once_;
  mutable std::vector<int> inv_;
  mutable std::vector<int> mul_table_;  // dense |G|^2 when the order is small
  void build_tables() const;
};

/// Interns (and if necessary sorts) the element list; `generators` may be
/// empty for directly enumerated groups, in which case a small generating
/// set is chosen.
GroupPtr intern_group(int degree, std::vector<Perm> elements, std::vector<Perm> generators,
                      std::string label = "");

// --- constructors -----------------------------------------------------------

GroupPtr closure(int degree, const std::vector<Perm>& generators, std::string label = "");
GroupPtr symmetric_group(int m);
GroupPtr cyclic_group(int n);
GroupPtr trivial_group();  // on one point

/// Subgroup of a fixed parent group, canonically encoded as the sorted list
/// of member element indices. Construction asserts Lagrange and (in debug
/// builds) closure under multiplication.
struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;

  Subgroup(GroupPtr parent, std::vector<int> members);
  long order() const { return static_cast<long>(members.size()); }
  bool contains(int elem) const;
  bool operator==(const Subgroup& o) const { return parent == o.parent && members == o.members; }
};

Subgroup whole_group(GroupPtr g);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup subgroup_generated(GroupPtr g, const std::vector<int>& seed);

/// Small generating set (greedy); empty for the trivial subgroup.
std::vector<int> subgroup_generators(const Subgroup& h);

/// The subgroup as a standalone PermGroup plus its inclusion into parent.
struct GroupHom;
std::pair<GroupPtr, GroupHom> subgroup_as_group(const Subgroup& h);

// --- homomorphisms -----------------------------------------------------------

/// Homomorphism stored as a full element map; validated completely at
/// construction (groups are small enough that this is a total check).
struct GroupHom {
  GroupPtr source, target;
  std::vector<int> image_of;

  GroupHom() = default;  // empty slot, filled by the group constructors
  GroupHom(GroupPtr source, GroupPtr target, std::vector<int> image_of);
  int operator()(int i) const { return image_of[i]; }
  bool is_injective() const;
};

GroupHom hom_identity(GroupPtr g);
GroupHom hom_compose(const GroupHom& outer, const GroupHom& inner);
GroupHom hom_from_fn(GroupPtr source, GroupPtr target, const std::function<int(int)>& fn);
GroupHom hom_trivial(GroupPtr source, GroupPtr target);  // everything to id
GroupHom sign_hom(GroupPtr sym);                         // S_n -> S_2 by parity

/// Source and target act on the same points and every source element is a
/// target element; the hom is the identity on permutations.
GroupHom embed_by_carrier(GroupPtr sub, GroupPtr big);

/// point_map is an injection of source points into target points such that
/// relabelled source elements are target elements.
GroupHom hom_by_point_bijection(GroupPtr source, GroupPtr target,
                                const std::vector<int>& point_map);

// --- products and wreath products -------------------------------------------

/// G x K on the disjoint union of the two carriers, with the structure maps.
struct ProductGroup {
  GroupPtr group, left, right;
  GroupHom pr1, pr2;      // group -> left / right
  GroupHom incl1, incl2;  // left / right -> group

  int pair_index(int a, int b) const;  // element with components (a, b)
};

const ProductGroup& direct_product(GroupPtr left, GroupPtr right);
GroupHom diagonal_hom(GroupPtr g);  // G -> G x G

/// Sigma_m wr G acting imprimitively on m blocks of deg(G) points,
/// with the convention (sigma; g_1,...,g_m) . (i, x) = (sigma(i), g_sigma(i) x).
struct WreathGroup {
  int m = 0;
  GroupPtr group;  // the wreath product
  GroupPtr top;    // Sigma_m
  GroupPtr base;   // G
  GroupHom incl_top;            // Sigma_m -> W, sigma -> (sigma; e,...,e)
  GroupHom proj_top;            // W -> Sigma_m
  std::vector<GroupHom> slot;   // G -> W placing g in block i
  const ProductGroup* top_times_base = nullptr;  // Sigma_m x G
  GroupHom diag;                // delta_m: Sigma_m x G -> W, (sigma, g) -> (sigma; g,...,g)

  int encode(int sigma, const std::vector<int>& base_elems) const;
  std::pair<int, std::vector<int>> decode(int w) const;
};

const WreathGroup& wreath_product(int m, GroupPtr base);

/// Sigma_m wr phi for phi: K -> G, applying phi blockwise.
GroupHom wreath_hom(const WreathGroup& source, const WreathGroup& target, const GroupHom& phi);

/// Phi_{i,j}: (Sigma_i wr G) x (Sigma_j wr G) -> Sigma_{i+j} wr G by
/// juxtaposition; returns the hom from the interned product group.
GroupHom wreath_juxtaposition(const WreathGroup& wi, const WreathGroup& wj,
                              const WreathGroup& wij);

// --- conjugacy and double cosets --------------------------------------------

std::optional<int> conjugating_element(const Subgroup& h, const Subgroup& k);
bool is_conjugate(const Subgroup& h, const Subgroup& k);
std::vector<int> conjugate_members(const Subgroup& h, int g);

/// One representative per H\G/K double coset, in increasing element order.
std::vector<int> double_coset_reps(GroupPtr g, const Subgroup& h, const Subgroup& k);

/// Left coset decomposition: reps plus point->coset lookup.
struct CosetDecomposition {
  std::vector<int> reps;            // one element per coset, rep[0] = id coset
  std::vector<int> coset_of;        // |G| entries
};
CosetDecomposition left_cosets(GroupPtr g, const std::vector<int>& members);

}  // namespace burnside
