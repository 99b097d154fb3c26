#include <doctest.h>

#include <random>
#include <set>

#include "burnside/burnside.hpp"
#include "burnside/errors.hpp"

using namespace burnside;

namespace {

// brute-force subgroup enumeration for tiny groups: every subset that is
// closed and contains the identity
std::set<std::vector<int>> subgroups_by_subsets(const GroupPtr& g) {
  std::set<std::vector<int>> out;
  const int n = static_cast<int>(g->order());
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (!(mask & (1u << g->identity()))) continue;
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) members.push_back(i);
    bool closed = true;
    for (int a : members)
      for (int b : members)
        if (!(mask & (1u << g->mul(a, b)))) {
          closed = false;
          break;
        }
    if (closed) out.insert(members);
  }
  return out;
}

BurnsideElement random_element(const GroupPtr& g, std::mt19937& rng, int span = 9) {
  const SubgroupClassTable& t = subgroup_classes(g);
  std::uniform_int_distribution<int> d(-span, span);
  BurnsideElement x(g, CoeffRing::integers());
  for (int i = 0; i < t.num_classes(); ++i)
    x.set_coeff(i, Scalar(CoeffRing::integers(), d(rng)));
  return x;
}

}  // namespace

TEST_CASE("subgroup class tables") {
  const SubgroupClassTable& te = subgroup_classes(trivial_group());
  CHECK(te.num_classes() == 1);
  CHECK(te.marks()[0][0] == 1);

  const SubgroupClassTable& t2 = subgroup_classes(symmetric_group(2));
  REQUIRE(t2.num_classes() == 2);
  CHECK(t2.marks()[0][0] == 2);
  CHECK(t2.marks()[0][1] == 1);
  CHECK(t2.marks()[1][0] == 0);
  CHECK(t2.marks()[1][1] == 1);

  CHECK(subgroup_classes(symmetric_group(3)).num_classes() == 4);
  CHECK(subgroup_classes(symmetric_group(4)).num_classes() == 11);
  CHECK(all_subgroups(symmetric_group(4)).size() == 30);
}

TEST_CASE("subgroup enumeration matches the exhaustive subset oracle") {
  for (const GroupPtr& g : {trivial_group(), symmetric_group(2), cyclic_group(3),
                            cyclic_group(4), cyclic_group(6), symmetric_group(3),
                            direct_product(symmetric_group(2), symmetric_group(2)).group}) {
    std::set<std::vector<int>> expected = subgroups_by_subsets(g);
    std::set<std::vector<int>> got;
    for (const Subgroup& s : all_subgroups(g)) got.insert(s.members);
    CHECK(got == expected);
  }
}

TEST_CASE("marks are triangular with nonzero diagonal") {
  for (const GroupPtr& g : {symmetric_group(3), symmetric_group(4),
                            wreath_product(2, symmetric_group(2)).group}) {
    const SubgroupClassTable& t = subgroup_classes(g);
    for (int i = 0; i < t.num_classes(); ++i) {
      CHECK(t.marks()[i][i] != 0);
      for (int j = 0; j < i; ++j) CHECK(t.marks()[i][j] == 0);
    }
  }
}

TEST_CASE("every subgroup is conjugate to exactly one class representative") {
  for (const GroupPtr& g : {symmetric_group(3), symmetric_group(4),
                            direct_product(symmetric_group(2), symmetric_group(2)).group}) {
    const SubgroupClassTable& t = subgroup_classes(g);
    for (int i = 0; i < t.num_classes(); ++i)
      for (int j = i + 1; j < t.num_classes(); ++j)
        CHECK(!is_conjugate(t.class_reps()[i], t.class_reps()[j]));
    for (const Subgroup& s : all_subgroups(g)) {
      int matches = 0;
      for (int i = 0; i < t.num_classes(); ++i) matches += is_conjugate(s, t.class_reps()[i]);
      CHECK(matches == 1);
    }
  }
}

TEST_CASE("class_of classifies arbitrary subgroups") {
  GroupPtr s3 = symmetric_group(3);
  const SubgroupClassTable& t = subgroup_classes(s3);
  Subgroup other_c2 = subgroup_generated(s3, {s3->index_of(perm_from_cycles(3, "(1 2)"))});
  int cls = t.class_of(other_c2);
  CHECK(t.class_reps()[cls].order() == 2);
  CHECK(t.class_label(cls) == "H2_0");
}

TEST_CASE("decompose") {
  GroupPtr s3 = symmetric_group(3);
  const SubgroupClassTable& t = subgroup_classes(s3);
  // G/H is the basis element of the class of H
  for (int i = 0; i < t.num_classes(); ++i) {
    BurnsideElement d = decompose(cosets_gset(s3, t.class_reps()[i]));
    CHECK(d == BurnsideElement::basis(s3, i));
  }

  // [2]^2 over S2 is 2[S2] + [e]
  GroupPtr e = trivial_group();
  std::vector<int32_t> id2 = {0, 1};
  GSet two(e, 2, id2);
  BurnsideElement d = decompose(power_set(two, 2));
  GroupPtr s2 = symmetric_group(2);
  CHECK(d == BurnsideElement::basis(s2, 0) + BurnsideElement::unit(s2).scaled(
                                                 Scalar(CoeffRing::integers(), 2)));

  // free-class coefficient of [n]^p is C(n,p)
  std::vector<int32_t> id4 = {0, 1, 2, 3};
  GSet four(e, 4, id4);
  BurnsideElement d2 = decompose(power_set(four, 2));
  CHECK(d2.coeff(0) == Scalar(CoeffRing::integers(), 6));
}

TEST_CASE("marks of a decomposition are fixed point counts") {
  GroupPtr s2 = symmetric_group(2);
  const SubgroupClassTable& t = subgroup_classes(s2);
  GroupPtr e = trivial_group();
  std::vector<int32_t> id3 = {0, 1, 2};
  GSet sq = power_set(GSet(e, 3, id3), 2);
  BurnsideElement d = decompose(sq);
  std::vector<Scalar> m = d.marks();
  for (int i = 0; i < t.num_classes(); ++i)
    CHECK(m[i] == Scalar(CoeffRing::integers(),
                         mpz_ll(fixed_points_count(sq, t.class_reps()[i]))));
}

TEST_CASE("from_marks inverts the mark homomorphism") {
  GroupPtr s2 = symmetric_group(2);
  CHECK(from_marks(s2, {0, 0}).is_zero());
  CHECK(from_marks(s2, {1, 1}) == BurnsideElement::unit(s2));
  CHECK(from_marks(s2, {2, 0}) == BurnsideElement::basis(s2, 0));
  CHECK_THROWS_AS(from_marks(s2, {1, 0}), NotIntegral);

  std::mt19937 rng(7);
  for (const GroupPtr& g : {symmetric_group(3), symmetric_group(4)}) {
    for (int trial = 0; trial < 20; ++trial) {
      BurnsideElement x = random_element(g, rng);
      std::vector<mpz_class> marks;
      for (const Scalar& s : x.marks()) marks.push_back(s.integer_value());
      CHECK(from_marks(g, marks) == x);
    }
  }
}

TEST_CASE("multiplication by double cosets") {
  GroupPtr s2 = symmetric_group(2);
  BurnsideElement t = BurnsideElement::basis(s2, 0);
  BurnsideElement one = BurnsideElement::unit(s2);

  CHECK(mul(one, t) == t);
  // t . t = 2t
  CHECK(mul(t, t) == t.scaled(Scalar(CoeffRing::integers(), 2)));

  // (a t + b)^2 = 2a(a+b) t + b^2 over Z
  Scalar a(CoeffRing::integers(), 3), b(CoeffRing::integers(), -2);
  BurnsideElement x = t.scaled(a) + one.scaled(b);
  BurnsideElement expected =
      t.scaled(Scalar(CoeffRing::integers(), 2) * a * (a + b)) + one.scaled(b * b);
  CHECK(mul(x, x) == expected);
}

TEST_CASE("ring laws on sampled elements") {
  std::mt19937 rng(11);
  for (const GroupPtr& g :
       {trivial_group(), symmetric_group(2), symmetric_group(3),
        direct_product(symmetric_group(2), symmetric_group(2)).group, symmetric_group(4)}) {
    BurnsideElement one = BurnsideElement::unit(g);
    for (int trial = 0; trial < 6; ++trial) {
      BurnsideElement x = random_element(g, rng, 4);
      BurnsideElement y = random_element(g, rng, 4);
      BurnsideElement z = random_element(g, rng, 4);
      CHECK(mul(one, x) == x);
      CHECK(mul(x, y) == mul(y, x));
      CHECK(mul(mul(x, y), z) == mul(x, mul(y, z)));
      CHECK(mul(x, y + z) == mul(x, y) + mul(x, z));
    }
  }
}

TEST_CASE("the mark homomorphism is an injective ring map") {
  std::mt19937 rng(13);
  for (const GroupPtr& g : {symmetric_group(3), symmetric_group(4)}) {
    for (int trial = 0; trial < 25; ++trial) {
      BurnsideElement x = random_element(g, rng);
      BurnsideElement y = random_element(g, rng);
      std::vector<Scalar> mx = x.marks(), my = y.marks(), mxy = mul(x, y).marks();
      for (size_t i = 0; i < mx.size(); ++i) CHECK(mxy[i] == mx[i] * my[i]);
      // injectivity: zero marks means the zero element
      bool all_zero = true;
      for (const Scalar& s : mx) all_zero = all_zero && s.is_zero();
      CHECK(all_zero == x.is_zero());
    }
  }
}

TEST_CASE("double coset products equal concrete product sets") {
  for (const GroupPtr& g :
       {symmetric_group(2), symmetric_group(3), symmetric_group(4),
        direct_product(symmetric_group(2), symmetric_group(2)).group,
        wreath_product(2, symmetric_group(2)).group}) {
    const SubgroupClassTable& t = subgroup_classes(g);
    for (int i = 0; i < t.num_classes(); ++i)
      for (int j = i; j < t.num_classes(); ++j) {
        BurnsideElement a = BurnsideElement::basis(g, i);
        BurnsideElement b = BurnsideElement::basis(g, j);
        CHECK(mul(a, b) == mul_by_sets(a, b));
      }
  }
}

TEST_CASE("operations reject mismatched coefficient rings") {
  GroupPtr s2 = symmetric_group(2);
  BurnsideElement t = BurnsideElement::basis(s2, 0);
  BurnsideElement tq = extend_coefficients(t, CoeffRing::rationals());
  CHECK_THROWS_AS(mul(t, tq), RingMismatch);
  CHECK_THROWS_AS(t + tq, RingMismatch);
}

TEST_CASE("module operations and coefficient extension") {
  GroupPtr s2 = symmetric_group(2);
  BurnsideElement t = BurnsideElement::basis(s2, 0);
  CHECK(t + BurnsideElement::zero(s2) == t);
  CHECK((t + (-t)).is_zero());

  BurnsideElement reduced = extend_coefficients(t, CoeffRing::residues(2));
  CHECK(reduced.coeff(0) == Scalar(CoeffRing::residues(2), 1));
  BurnsideElement doubled = t.scaled(Scalar(CoeffRing::integers(), 2));
  CHECK(extend_coefficients(doubled, CoeffRing::residues(2)).is_zero());

  BurnsideElement gauss = extend_coefficients(t, CoeffRing::gaussian());
  CHECK(gauss.coeff(0) == Scalar::gaussian(1, 0));
  CHECK_THROWS_AS(extend_coefficients(gauss, CoeffRing::integers()), RingMismatch);

  CHECK(augmentation(mul(t, t)) == Scalar(CoeffRing::integers(), 2));
}
