#include <doctest.h>

#include <numeric>

#include "burnside/group.hpp"
#include "burnside/errors.hpp"
#include "burnside/limits.hpp"

using namespace burnside;

TEST_CASE("closure enumerates the generated group") {
  GroupPtr s3 = closure(3, {perm_from_cycles(3, "(0 1)"), perm_from_cycles(3, "(0 1 2)")});
  CHECK(s3->order() == 6);
  GroupPtr triv = closure(1, {});
  CHECK(triv->order() == 1);

  // imprimitive wreath-type group on 3 blocks of 2, order 2^3 * 3!
  GroupPtr w = closure(6, {perm_from_cycles(6, "(0 1)"),
                           perm_from_cycles(6, "(0 2)(1 3)"),
                           perm_from_cycles(6, "(0 2 4)(1 3 5)")});
  CHECK(w->order() == 48);
}

TEST_CASE("closure respects the group order bound") {
  long saved = limits().group_order;
  limits().group_order = 10;
  CHECK_THROWS_AS(closure(4, {perm_from_cycles(4, "(0 1)"), perm_from_cycles(4, "(0 1 2 3)")}),
                  GroupTooLarge);
  limits().group_order = saved;
}

TEST_CASE("symmetric groups") {
  CHECK(symmetric_group(0)->order() == 1);
  CHECK(symmetric_group(3)->order() == 6);
  CHECK(symmetric_group(4)->order() == 24);
  long saved = limits().symmetric_degree;
  limits().symmetric_degree = 5;
  CHECK_THROWS_AS(symmetric_group(6), GroupTooLarge);
  limits().symmetric_degree = saved;
}

TEST_CASE("groups are interned") {
  CHECK(symmetric_group(3) == symmetric_group(3));
  // the same group through a different presentation
  GroupPtr via_closure =
      closure(3, {perm_from_cycles(3, "(0 2)"), perm_from_cycles(3, "(1 2)")});
  CHECK(via_closure == symmetric_group(3));
  // wreath over a one-point base is the plain symmetric group
  CHECK(wreath_product(5, trivial_group()).group == symmetric_group(5));
  CHECK(wreath_product(1, symmetric_group(3)).group == symmetric_group(3));
}

TEST_CASE("wreath products respect the group order bound") {
  CHECK_THROWS_AS(wreath_product(4, symmetric_group(3)), GroupTooLarge);
}

TEST_CASE("wreath products have order |G|^m m! and consistent structure maps") {
  const WreathGroup& w22 = wreath_product(2, symmetric_group(2));
  CHECK(w22.group->order() == 8);
  const WreathGroup& w23 = wreath_product(2, symmetric_group(3));
  CHECK(w23.group->order() == 72);

  for (const WreathGroup* w : {&w22, &w23}) {
    CHECK(w->diag.is_injective());
    // projection after the diagonal recovers the top component
    const ProductGroup& txb = *w->top_times_base;
    for (long i = 0; i < txb.group->order(); ++i) {
      int wr = w->diag.image_of[i];
      CHECK(w->proj_top.image_of[wr] == txb.pr1.image_of[i]);
    }
    // the top projection is surjective
    std::vector<char> hit(w->top->order(), 0);
    for (int im : w->proj_top.image_of) hit[im] = 1;
    CHECK(std::accumulate(hit.begin(), hit.end(), 0) == w->top->order());
  }
}

TEST_CASE("wreath encode and decode are inverse") {
  const WreathGroup& w = wreath_product(2, symmetric_group(3));
  for (int i = 0; i < w.group->order(); ++i) {
    auto [sigma, tuple] = w.decode(i);
    CHECK(w.encode(sigma, tuple) == i);
  }
}

TEST_CASE("juxtaposition embeddings are injective and associative") {
  GroupPtr s2 = symmetric_group(2);
  const WreathGroup& w1 = wreath_product(1, s2);
  const WreathGroup& w2 = wreath_product(2, s2);
  const WreathGroup& w3 = wreath_product(3, s2);
  GroupHom f12 = wreath_juxtaposition(w1, w2, w3);
  CHECK(f12.is_injective());

  // Phi_{1+1,1} (Phi_{1,1} x id) = Phi_{1,1+1} (id x Phi_{1,1}) after the
  // canonical reassociation of the product carriers
  GroupHom f11 = wreath_juxtaposition(w1, w1, w2);
  const ProductGroup& p11 = direct_product(w1.group, w1.group);
  const ProductGroup& p21 = direct_product(w2.group, w1.group);
  const ProductGroup& p12 = direct_product(w1.group, w2.group);
  GroupHom f21 = wreath_juxtaposition(w2, w1, w3);
  const ProductGroup& p111 = direct_product(p11.group, w1.group);
  for (long i = 0; i < p111.group->order(); ++i) {
    int ab = p111.pr1.image_of[i];
    int a = p11.pr1.image_of[ab], b = p11.pr2.image_of[ab], c = p111.pr2.image_of[i];
    int left = f21.image_of[p21.pair_index(f11.image_of[p11.pair_index(a, b)], c)];
    int right = f12.image_of[p12.pair_index(a, f11.image_of[p11.pair_index(b, c)])];
    CHECK(left == right);
  }
}

TEST_CASE("direct products with projections and the diagonal") {
  GroupPtr s2 = symmetric_group(2);
  CHECK(direct_product(s2, trivial_group()).group->order() == 2);
  const ProductGroup& v4 = direct_product(s2, s2);
  CHECK(v4.group->order() == 4);
  GroupHom d = diagonal_hom(s2);
  CHECK(d.is_injective());
  std::vector<int> img(d.image_of);
  std::sort(img.begin(), img.end());
  Subgroup diag(v4.group, img);
  CHECK(diag.order() == 2);
}

TEST_CASE("subgroup construction checks Lagrange and the identity") {
  GroupPtr s3 = symmetric_group(3);
  CHECK_THROWS_AS(Subgroup(s3, std::vector<int>{2, 3}), Error);
  Subgroup whole = whole_group(s3);
  CHECK(whole.order() == 6);
  CHECK(trivial_subgroup(s3).order() == 1);
}

TEST_CASE("conjugacy of subgroups") {
  GroupPtr s3 = symmetric_group(3);
  auto sub_of = [&](const char* cyc) {
    return subgroup_generated(s3, {s3->index_of(perm_from_cycles(3, cyc))});
  };
  Subgroup h1 = sub_of("(0 1)");
  Subgroup h2 = sub_of("(1 2)");
  Subgroup c3 = sub_of("(0 1 2)");

  CHECK(conjugating_element(h1, h1) == s3->identity());
  auto g = conjugating_element(h1, h2);
  REQUIRE(g.has_value());
  CHECK(conjugate_members(h1, *g) == h2.members);
  CHECK(!is_conjugate(h1, c3));

  // exhaustive conjugation oracle: every witness really conjugates
  for (long e = 0; e < s3->order(); ++e) {
    if (conjugate_members(h1, static_cast<int>(e)) == h2.members) {
      CHECK(is_conjugate(h1, h2));
    }
  }
}

TEST_CASE("double cosets partition the group") {
  GroupPtr s3 = symmetric_group(3);
  CHECK(double_coset_reps(s3, whole_group(s3), whole_group(s3)).size() == 1);
  CHECK(double_coset_reps(s3, trivial_subgroup(s3), trivial_subgroup(s3)).size() == 6);

  // sum of |HgK| over representatives covers G exactly once
  GroupPtr s4 = symmetric_group(4);
  Subgroup h = subgroup_generated(s4, {s4->index_of(perm_from_cycles(4, "(0 1)")),
                                       s4->index_of(perm_from_cycles(4, "(2 3)"))});
  Subgroup k = subgroup_generated(s4, {s4->index_of(perm_from_cycles(4, "(0 1 2 3)"))});
  std::vector<char> covered(s4->order(), 0);
  for (int rep : double_coset_reps(s4, h, k))
    for (int a : h.members)
      for (int b : k.members) {
        int e = s4->mul(s4->mul(a, rep), b);
        covered[e] = 1;
      }
  CHECK(std::accumulate(covered.begin(), covered.end(), 0) == s4->order());
}

TEST_CASE("only one double coset in the additivity decomposition at p=q=1 over S2") {
  GroupPtr s2 = symmetric_group(2);
  const WreathGroup& w2 = wreath_product(2, s2);
  Subgroup diag_sub(w2.group, std::vector<int>(w2.diag.image_of));
  const WreathGroup& w1 = wreath_product(1, s2);
  GroupHom jux = wreath_juxtaposition(w1, w1, w2);
  Subgroup base_sub(w2.group, std::vector<int>(jux.image_of));
  CHECK(double_coset_reps(w2.group, diag_sub, base_sub).size() == 1);
}

TEST_CASE("homomorphism validation is a complete multiplicativity check") {
  GroupPtr s3 = symmetric_group(3);
  GroupPtr s2 = symmetric_group(2);
  GroupHom sgn = sign_hom(s3);
  for (long a = 0; a < s3->order(); ++a)
    for (long b = 0; b < s3->order(); ++b)
      CHECK(sgn.image_of[s3->mul(static_cast<int>(a), static_cast<int>(b))] ==
            s2->mul(sgn.image_of[a], sgn.image_of[b]));

  // a non-multiplicative table is rejected
  std::vector<int> bad(s3->order(), s2->identity());
  bad[s3->index_of(perm_from_cycles(3, "(0 1)"))] = 1 - s2->identity();
  CHECK_THROWS_AS(GroupHom(s3, s2, bad), Error);
}

TEST_CASE("subgroup_as_group aligns indices with the inclusion") {
  GroupPtr s3 = symmetric_group(3);
  Subgroup c3 = subgroup_generated(s3, {s3->index_of(perm_from_cycles(3, "(0 1 2)"))});
  auto [g, incl] = subgroup_as_group(c3);
  CHECK(g->order() == 3);
  for (long i = 0; i < g->order(); ++i)
    CHECK(s3->element(incl.image_of[i]) == g->element(static_cast<int>(i)));
}
