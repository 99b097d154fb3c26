#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "burnside/gset.hpp"
#include "burnside/errors.hpp"
#include "burnside/limits.hpp"

using namespace burnside;

namespace {

// independent orbit counter: union-find over all (g, x) moves
long long orbit_count_oracle(const GSet& x) {
  std::vector<long long> parent(x.size());
  for (long long i = 0; i < x.size(); ++i) parent[i] = i;
  std::function<long long(long long)> find = [&](long long a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (long e = 0; e < x.group()->order(); ++e)
    for (long long p = 0; p < x.size(); ++p) {
      long long a = find(p), b = find(x.act(static_cast<int>(e), p));
      if (a != b) parent[a] = b;
    }
  long long n = 0;
  for (long long i = 0; i < x.size(); ++i) n += find(i) == i;
  return n;
}

GSet trivial_points(long long n) {
  GroupPtr e = trivial_group();
  std::vector<int32_t> table(n);
  for (long long i = 0; i < n; ++i) table[i] = static_cast<int32_t>(i);
  return GSet(e, n, std::move(table));
}

}  // namespace

TEST_CASE("coset spaces") {
  GroupPtr s3 = symmetric_group(3);
  CHECK(cosets_gset(s3, whole_group(s3)).size() == 1);

  GroupPtr s2 = symmetric_group(2);
  GSet free2 = cosets_gset(s2, trivial_subgroup(s2));
  CHECK(free2.size() == 2);
  CHECK(orbits(free2).size() == 1);
  CHECK(orbits(free2)[0].stabilizer.order() == 1);

  // S3 / <(0 1)>: 3 points, transitive, stabilizers of order 2
  Subgroup h = subgroup_generated(s3, {s3->index_of(perm_from_cycles(3, "(0 1)"))});
  GSet c = cosets_gset(s3, h);
  CHECK(c.size() == 3);
  auto orbs = orbits(c);
  REQUIRE(orbs.size() == 1);
  CHECK(orbs[0].stabilizer.order() == 2);
  CHECK(is_conjugate(orbs[0].stabilizer, h));
}

TEST_CASE("orbits and the orbit-stabilizer relation") {
  GroupPtr s2 = symmetric_group(2);
  // [2]^2 with the swap action on coordinates
  GSet sq = power_set(trivial_points(2), 2);
  CHECK(sq.group() == wreath_product(2, trivial_group()).group);
  auto orbs = orbits(sq);
  CHECK(orbs.size() == 3);
  std::multiset<long long> sizes;
  for (const auto& o : orbs) {
    sizes.insert(o.size);
    CHECK(o.size * o.stabilizer.order() == sq.group()->order());
  }
  CHECK(sizes == std::multiset<long long>{1, 1, 2});
  CHECK(orbit_count_oracle(sq) == 3);

  GSet empty(s2, 0, {});
  CHECK(orbits(empty).empty());
}

TEST_CASE("Burnside orbit counting") {
  // sum of |Fix(g)| = |G| * number of orbits, on a few sample sets
  GroupPtr s3 = symmetric_group(3);
  for (const GSet& x : {cosets_gset(s3, trivial_subgroup(s3)),
                        cosets_gset(s3, subgroup_generated(
                                            s3, {s3->index_of(perm_from_cycles(3, "(0 1)"))})),
                        power_set(trivial_points(3), 2)}) {
    long long fix_total = 0;
    for (long e = 0; e < x.group()->order(); ++e)
      for (long long p = 0; p < x.size(); ++p) fix_total += x.act(static_cast<int>(e), p) == p;
    CHECK(fix_total == x.group()->order() * orbit_count_oracle(x));
  }
}

TEST_CASE("fixed point counts") {
  GroupPtr s3 = symmetric_group(3);
  Subgroup h = subgroup_generated(s3, {s3->index_of(perm_from_cycles(3, "(0 1)"))});
  Subgroup c3 = subgroup_generated(s3, {s3->index_of(perm_from_cycles(3, "(0 1 2)"))});
  GSet ch = cosets_gset(s3, h);
  CHECK(fixed_points_count(ch, trivial_subgroup(s3)) == ch.size());
  CHECK(fixed_points_count(ch, h) == 1);
  CHECK(fixed_points_count(cosets_gset(s3, trivial_subgroup(s3)), c3) == 0);
}

TEST_CASE("power sets carry the wreath action") {
  // X = S2 free orbit, X^2: one orbit of size 4, stabilizer of order 2
  GroupPtr s2 = symmetric_group(2);
  GSet x = cosets_gset(s2, trivial_subgroup(s2));
  GSet x2 = power_set(x, 2);
  CHECK(x2.size() == 4);
  auto orbs = orbits(x2);
  REQUIRE(orbs.size() == 1);
  CHECK(orbs[0].size == 4);
  CHECK(orbs[0].stabilizer.order() == 2);
  // the stabilizer is generated by a block transposition with identity base
  const WreathGroup& w = wreath_product(2, s2);
  for (int m : orbs[0].stabilizer.members) {
    if (m == w.group->identity()) continue;
    auto [sigma, tuple] = w.decode(m);
    CHECK(sigma != w.top->identity());
    for (int t : tuple) CHECK(t == s2->identity());
  }

  CHECK(power_set(x, 1).group() == s2);
  CHECK(power_set(x, 0).size() == 1);
  CHECK_THROWS_AS(power_set(trivial_points(200), 3), SetTooLarge);
}

TEST_CASE("power set restricted to the base is the iterated external product") {
  GroupPtr s2 = symmetric_group(2);
  GSet x = cosets_gset(s2, trivial_subgroup(s2));
  const WreathGroup& w = wreath_product(2, s2);
  const ProductGroup& gg = direct_product(s2, s2);
  GroupHom base_incl = hom_from_fn(gg.group, w.group, [&](int i) {
    std::vector<int> tuple = {gg.pr1.image_of[i], gg.pr2.image_of[i]};
    return w.encode(w.top->identity(), tuple);
  });
  VirtualGSet restricted = pullback(base_incl, VirtualGSet::of(power_set(x, 2)));
  VirtualGSet ext = VirtualGSet::of(external_set_product(gg, x, x));
  CHECK(virtual_equal(restricted, ext));
}

TEST_CASE("pullback along homomorphisms") {
  GroupPtr s2 = symmetric_group(2);
  GroupPtr s3 = symmetric_group(3);
  GSet y = cosets_gset(s2, trivial_subgroup(s2));
  GSet same = pullback(hom_identity(s2), y);
  CHECK(virtual_equal(VirtualGSet::of(same), VirtualGSet::of(y)));

  // e -> S2 on the free orbit: two trivial points
  GSet two = pullback(hom_trivial(trivial_group(), s2), y);
  CHECK(orbits(two).size() == 2);

  // S2 < S3 acting on S3 / C3: one free orbit
  Subgroup c3 = subgroup_generated(s3, {s3->index_of(perm_from_cycles(3, "(0 1 2)"))});
  GroupHom incl = hom_by_point_bijection(s2, s3, {0, 1});
  GSet r = pullback(incl, cosets_gset(s3, c3));
  auto orbs = orbits(r);
  REQUIRE(orbs.size() == 1);
  CHECK(orbs[0].stabilizer.order() == 1);
}

TEST_CASE("induction") {
  GroupPtr s2 = symmetric_group(2);
  GroupPtr s3 = symmetric_group(3);

  // full subgroup: nothing changes
  auto [g_all, incl_all] = subgroup_as_group(whole_group(s3));
  GSet x = cosets_gset(g_all, trivial_subgroup(g_all));
  CHECK(induce_along(incl_all, x).size() == x.size());

  // e < S2 on a point gives the free orbit
  auto [e_grp, incl_e] = subgroup_as_group(trivial_subgroup(s2));
  GSet induced = induce_along(incl_e, point_gset(e_grp));
  CHECK(induced.size() == 2);
  CHECK(orbits(induced)[0].stabilizer.order() == 1);

  // C2 < S3 with the free C2-orbit gives the free S3-orbit
  Subgroup c2 = subgroup_generated(s3, {s3->index_of(perm_from_cycles(3, "(0 1)"))});
  auto [h, incl] = subgroup_as_group(c2);
  GSet free_h = cosets_gset(h, trivial_subgroup(h));
  GSet ind = induce(c2, free_h);
  CHECK(ind.size() == 6);
  CHECK(orbits(ind).size() == 1);
  CHECK(orbits(ind)[0].stabilizer.order() == 1);

  // size is always [G:H] |X|
  CHECK(ind.size() == (s3->order() / c2.order()) * free_h.size());
}

TEST_CASE("deflation K x_G X") {
  GroupPtr s2 = symmetric_group(2);
  GSet free2 = cosets_gset(s2, trivial_subgroup(s2));

  GSet same = coinduce_deflate(hom_identity(s2), free2);
  CHECK(virtual_equal(VirtualGSet::of(same), VirtualGSet::of(free2)));

  // collapsing S2 to e sends the free orbit to a point
  GSet collapsed = coinduce_deflate(hom_trivial(s2, trivial_group()), free2);
  CHECK(collapsed.size() == 1);

  // pr: S2 x S2 -> S2 on the free orbit: collapses to one free S2-orbit,
  // of size |K| / |f(G/e ... )| = |S2| (the quotient (K x X)/G has
  // |K||X|/|G| = 2 points here)
  const ProductGroup& v4 = direct_product(s2, s2);
  GSet free4 = cosets_gset(v4.group, trivial_subgroup(v4.group));
  GSet defl = coinduce_deflate(v4.pr1, free4);
  CHECK(defl.size() == 2);
  auto orbs = orbits(defl);
  REQUIRE(orbs.size() == 1);
  CHECK(orbs[0].stabilizer.order() == 1);

  // surjective images: |f_*(G/H)| = |K| / |f(H)| against the quotient
  GroupPtr s3 = symmetric_group(3);
  GroupHom sgn = sign_hom(s3);
  for (const Subgroup& h : {trivial_subgroup(s3),
                            subgroup_generated(s3, {s3->index_of(perm_from_cycles(3, "(0 1)"))}),
                            subgroup_generated(s3, {s3->index_of(perm_from_cycles(3, "(0 1 2)"))}),
                            whole_group(s3)}) {
    GSet quotient = coinduce_deflate(sgn, cosets_gset(s3, h));
    std::vector<char> image_hit(s2->order(), 0);
    for (int m : h.members) image_hit[sgn.image_of[m]] = 1;
    long image_size = std::count(image_hit.begin(), image_hit.end(), char(1));
    CHECK(quotient.size() == s2->order() / image_size);
  }
}

TEST_CASE("deflation along an injective hom agrees with induction") {
  // the wrong-way map K x_G X specializes to induction for subgroups
  GroupPtr s3 = symmetric_group(3);
  Subgroup c2 = subgroup_generated(s3, {s3->index_of(perm_from_cycles(3, "(0 1)"))});
  auto [h, incl] = subgroup_as_group(c2);
  for (const GSet& x : {cosets_gset(h, trivial_subgroup(h)), point_gset(h)}) {
    CHECK(virtual_equal(VirtualGSet::of(coinduce_deflate(incl, x)),
                        VirtualGSet::of(induce_along(incl, x))));
  }
}

TEST_CASE("external products") {
  GroupPtr s2 = symmetric_group(2);
  GSet x = cosets_gset(s2, trivial_subgroup(s2));

  // against a point: isomorphic to x through the product with e
  const ProductGroup& with_e = direct_product(s2, trivial_group());
  GSet xe = external_set_product(with_e, x, point_gset(trivial_group()));
  CHECK(xe.size() == 2);
  CHECK(orbits(xe).size() == 1);

  // free x free is free
  const ProductGroup& v4 = direct_product(s2, s2);
  GSet ff = external_set_product(v4, x, x);
  CHECK(ff.size() == 4);
  CHECK(orbits(ff).size() == 1);
  CHECK(orbits(ff)[0].stabilizer.order() == 1);

  // fixed point x free: two points moved by the second factor only
  GSet pf = external_set_product(v4, point_gset(s2), x);
  CHECK(pf.size() == 2);
  REQUIRE(orbits(pf).size() == 1);
  CHECK(orbits(pf)[0].stabilizer.order() == 2);
}

TEST_CASE("virtual sets aggregate stabilizer classes") {
  GroupPtr s2 = symmetric_group(2);
  GSet free2 = cosets_gset(s2, trivial_subgroup(s2));
  GSet pt = point_gset(s2);
  VirtualGSet a = VirtualGSet::of(free2) + VirtualGSet::of(pt, 2);
  VirtualGSet b = VirtualGSet::of(pt, 2) + VirtualGSet::of(free2);
  CHECK(virtual_equal(a, b));
  CHECK(!virtual_equal(a, VirtualGSet::of(free2)));
  CHECK(virtual_equal(a + (-a), VirtualGSet::zero(s2)));
  CHECK(stabilizer_class_multiplicities(a).size() == 2);
}

TEST_CASE("action table validation") {
  GroupPtr s2 = symmetric_group(2);
  // identity row broken
  std::vector<int32_t> bad = {1, 0, 0, 1};
  CHECK_THROWS_AS(GSet(s2, 2, bad), Error);
}
