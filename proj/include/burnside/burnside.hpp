#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "burnside/gset.hpp"
#include "burnside/group.hpp"
#include "burnside/scalar.hpp"

namespace burnside {

/// Conjugacy classes of subgroups of G plus the table of marks,
/// marks[i][j] = |(G/H_j)^{H_i}|. Classes are ordered by increasing subgroup
/// order, ties broken by the lexicographically smallest member encoding in
/// the class; with that order the matrix is upper triangular with nonzero
/// diagonal.
class SubgroupClassTable {
 public:
  const GroupPtr& group() const { return group_; }
  int num_classes() const { return static_cast<int>(class_reps_.size()); }
  const std::vector<Subgroup>& class_reps() const { return class_reps_; }
  const std::vector<std::vector<long long>>& marks() const { return marks_; }

  /// Conjugacy class index of an arbitrary subgroup (memoized).
  int class_of(const Subgroup& h) const;

  /// Labels "H<order>_<index>", indexed within classes of equal order.
  std::string class_label(int i) const;
  int class_by_label(const std::string& label) const;  // -1 if unknown

  /// Cached product [H_i] * [H_j] as class multiplicities, by the double
  /// coset formula.
  const std::vector<std::pair<int, long long>>& basis_product(int i, int j) const;

 private:
  friend const SubgroupClassTable& subgroup_classes(GroupPtr g);
  SubgroupClassTable() = default;

  GroupPtr group_;
  std::vector<Subgroup> class_reps_;
  std::vector<std::vector<long long>> marks_;

  mutable std::mutex memo_mu_;
  mutable std::map<std::vector<int>, int> class_memo_;
  mutable std::map<std::pair<int, int>, std::vector<std::pair<int, long long>>> product_memo_;
};

/// Computed once per group (under the lattice order bound), then shared;
/// consults the on-disk cache when one is configured.
const SubgroupClassTable& subgroup_classes(GroupPtr g);

/// All subgroups of g, not up to conjugacy (exhaustive cyclic-join closure).
std::vector<Subgroup> all_subgroups(GroupPtr g);

/// Element of A(G) (x) C in the canonical basis of subgroup classes.
/// Zero coefficients are never stored.
class BurnsideElement {
 public:
  BurnsideElement(GroupPtr group, CoeffRing ring);

  static BurnsideElement zero(GroupPtr group, CoeffRing ring = CoeffRing::integers());
  static BurnsideElement basis(GroupPtr group, int class_index,
                               CoeffRing ring = CoeffRing::integers());
  static BurnsideElement unit(GroupPtr group, CoeffRing ring = CoeffRing::integers());

  const GroupPtr& group() const { return group_; }
  const CoeffRing& ring() const { return ring_; }
  const std::map<int, Scalar>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coeff(int class_index) const;
  void set_coeff(int class_index, Scalar value);

  BurnsideElement operator+(const BurnsideElement& o) const;
  BurnsideElement operator-(const BurnsideElement& o) const;
  BurnsideElement operator-() const;
  BurnsideElement scaled(const Scalar& c) const;
  bool operator==(const BurnsideElement& o) const;
  bool operator!=(const BurnsideElement& o) const { return !(*this == o); }

  /// Mark vector (value of the mark homomorphism at every class).
  std::vector<Scalar> marks() const;

  /// All coefficients as plain integers; throws NotIntegral otherwise.
  std::map<int, mpz_class> integral_coeffs() const;

  std::string to_string() const;  // canonical term list, "0" when zero

 private:
  GroupPtr group_;
  CoeffRing ring_;
  std::map<int, Scalar> coeffs_;
};

/// Diagonal product via the double coset formula on basis pairs (cached).
BurnsideElement mul(const BurnsideElement& x, const BurnsideElement& y);

/// The same product computed from concrete product sets; kept as the
/// independent second route for cross-checking.
BurnsideElement mul_by_sets(const BurnsideElement& x, const BurnsideElement& y);

BurnsideElement decompose(const GSet& x);
BurnsideElement decompose(const VirtualGSet& x);

/// Inverse of the mark homomorphism by back-substitution; throws NotIntegral
/// when the vector is not in its image.
BurnsideElement from_marks(GroupPtr g, const std::vector<mpz_class>& marks);

BurnsideElement extend_coefficients(const BurnsideElement& x, const CoeffRing& target);

/// Integral element as a formal combination of coset spaces G/H.
VirtualGSet realize(const BurnsideElement& x);

/// Sum of coefficients (the orbit-count augmentation).
Scalar augmentation(const BurnsideElement& x);

}  // namespace burnside
