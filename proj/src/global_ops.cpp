#include "burnside/global_ops.hpp"

#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <thread>

#include "burnside/errors.hpp"
#include "burnside/limits.hpp"

namespace burnside {

namespace {

/// Linear extension of a set-level map over the basis realization of x.
BurnsideElement extend_basis_map(const BurnsideElement& x, GroupPtr target,
                                 const std::function<GSet(const GSet&)>& on_sets) {
  const SubgroupClassTable& t = subgroup_classes(x.group());
  BurnsideElement out(std::move(target), x.ring());
  for (const auto& [cls, coef] : x.coeffs()) {
    GSet image = on_sets(cosets_gset(x.group(), t.class_reps()[cls]));
    BurnsideElement dec = decompose(image);
    for (const auto& [c2, v2] : dec.coeffs())
      out.set_coeff(c2, out.coeff(c2) + coef * extend_scalar(v2, x.ring()));
  }
  return out;
}

}  // namespace

BurnsideElement restrict_along(const GroupHom& alpha, const BurnsideElement& x) {
  if (alpha.target != x.group()) throw Error("restrict: element over a different group");
  return extend_basis_map(x, alpha.source, [&](const GSet& s) { return pullback(alpha, s); });
}

BurnsideElement transfer_along(const GroupHom& alpha, const BurnsideElement& x) {
  if (alpha.source != x.group()) throw Error("transfer: element over a different group");
  return extend_basis_map(x, alpha.target, [&](const GSet& s) { return induce_along(alpha, s); });
}

BurnsideElement transfer(const Subgroup& h, const BurnsideElement& x) {
  auto [hg, incl] = subgroup_as_group(h);
  if (x.group() != hg) throw Error("transfer: element does not live over the subgroup");
  return transfer_along(incl, x);
}

BurnsideElement deflate(const GroupHom& f, const BurnsideElement& x) {
  if (f.source != x.group()) throw Error("deflate: element over a different group");
  return extend_basis_map(x, f.target, [&](const GSet& s) { return coinduce_deflate(f, s); });
}

BurnsideElement external_product(const ProductGroup& prod, const BurnsideElement& x,
                                 const BurnsideElement& y) {
  if (x.group() != prod.left || y.group() != prod.right)
    throw Error("external product: factor groups mismatch");
  if (x.ring() != y.ring()) throw RingMismatch("external product: coefficient rings differ");
  const SubgroupClassTable& tx = subgroup_classes(x.group());
  const SubgroupClassTable& ty = subgroup_classes(y.group());
  BurnsideElement out(prod.group, x.ring());
  for (const auto& [i, xi] : x.coeffs())
    for (const auto& [j, yj] : y.coeffs()) {
      GSet p = external_set_product(prod, cosets_gset(x.group(), tx.class_reps()[i]),
                                    cosets_gset(y.group(), ty.class_reps()[j]));
      Scalar c = xi * yj;
      BurnsideElement dec = decompose(p);
      for (const auto& [c2, v2] : dec.coeffs())
        out.set_coeff(c2, out.coeff(c2) + c * extend_scalar(v2, x.ring()));
    }
  return out;
}

VirtualGSet mul_sets(const VirtualGSet& a, const VirtualGSet& b) {
  if (a.group != b.group) throw Error("mul_sets: groups differ");
  const ProductGroup& sq = direct_product(a.group, a.group);
  return pullback(diagonal_hom(a.group), external_product(sq, a, b));
}

// --- powers ------------------------------------------------------------------

namespace {

std::mutex jux_mu;
std::map<std::tuple<const PermGroup*, int, int>, GroupHom>& jux_cache() {
  static std::map<std::tuple<const PermGroup*, int, int>, GroupHom> c;
  return c;
}

const GroupHom& juxtaposition_hom(const GroupPtr& base, int p, int q) {
  std::scoped_lock lock(jux_mu);
  auto key = std::make_tuple(base.get(), p, q);
  auto it = jux_cache().find(key);
  if (it != jux_cache().end()) return it->second;
  const WreathGroup& wp = wreath_product(p, base);
  const WreathGroup& wq = wreath_product(q, base);
  const WreathGroup& wm = wreath_product(p + q, base);
  GroupHom h = wreath_juxtaposition(wp, wq, wm);
  return jux_cache().emplace(key, std::move(h)).first->second;
}

GSet realize_scaled(const GSet& x, long long count) {
  GSet acc = x;
  for (long long i = 1; i < count; ++i) acc = disjoint_union(acc, x);
  return acc;
}

}  // namespace

VirtualGSet juxtaposition_transfer(GroupPtr base, int p, int q, const VirtualGSet& left,
                                   const VirtualGSet& right) {
  const GroupHom& jux = juxtaposition_hom(base, p, q);
  const ProductGroup& prod = direct_product(wreath_product(p, base).group,
                                            wreath_product(q, base).group);
  return induce_along(jux, external_product(prod, left, right));
}

namespace {

VirtualGSet unit_power(const GroupPtr& base) {
  return VirtualGSet::of(point_gset(wreath_product(0, base).group));
}

/// P^p of a single signed term c * [X] for 0 <= p <= bound.
std::vector<VirtualGSet> single_term_powers(const GroupPtr& base, const GSet& x, long long c,
                                            int bound) {
  std::vector<VirtualGSet> out;
  if (c > 0) {
    GSet xc = realize_scaled(x, c);
    for (int p = 0; p <= bound; ++p) out.push_back(VirtualGSet::of(power_set(xc, p)));
    return out;
  }
  // negative: P^q(-u) is forced by 0 = P^q(u + (-u))
  GSet xc = realize_scaled(x, -c);
  std::vector<VirtualGSet> pos;
  for (int p = 0; p <= bound; ++p) pos.push_back(VirtualGSet::of(power_set(xc, p)));
  out.push_back(unit_power(base));
  for (int q = 1; q <= bound; ++q) {
    VirtualGSet acc = VirtualGSet::zero(wreath_product(q, base).group);
    for (int p = 1; p <= q; ++p)
      acc = acc + juxtaposition_transfer(base, p, q - p, pos[p], out[q - p]);
    out.push_back(-acc);
  }
  return out;
}

std::vector<VirtualGSet> all_powers(const BurnsideElement& x, int bound) {
  const GroupPtr& g = x.group();
  VirtualGSet terms = realize(x);
  // tail DP over the summands
  std::vector<VirtualGSet> tail;
  tail.push_back(unit_power(g));
  for (int p = 1; p <= bound; ++p) tail.push_back(VirtualGSet::zero(wreath_product(p, g).group));
  for (size_t i = terms.terms.size(); i-- > 0;) {
    const auto& [set, mult] = terms.terms[i];
    if (mult == 0) continue;
    std::vector<VirtualGSet> head = single_term_powers(g, set, mult, bound);
    std::vector<VirtualGSet> next;
    for (int m = 0; m <= bound; ++m) {
      VirtualGSet acc = VirtualGSet::zero(wreath_product(m, g).group);
      for (int p = 0; p <= m; ++p) {
        if (head[p].terms.empty() || tail[m - p].terms.empty()) continue;
        acc = acc + juxtaposition_transfer(g, p, m - p, head[p], tail[m - p]);
      }
      next.push_back(std::move(acc));
    }
    tail = std::move(next);
  }
  return tail;
}

}  // namespace

VirtualGSet power_virtual(const BurnsideElement& x, int m) {
  if (m < 0) throw Error("power: negative degree");
  if (x.ring() != CoeffRing::integers())
    throw RingMismatch("power operations are defined over Z; reduce afterwards");
  if (m == 0) return unit_power(x.group());
  VirtualGSet terms = realize(x);
  if (terms.terms.size() == 1 && terms.terms[0].second > 0) {
    return VirtualGSet::of(power_set(realize_scaled(terms.terms[0].first, terms.terms[0].second), m));
  }
  return all_powers(x, m)[m];
}

BurnsideElement power(const BurnsideElement& x, int m) { return decompose(power_virtual(x, m)); }

const VirtualGSet& ExpSequence::entry(int m) const {
  if (m < 0 || m > bound) throw DegreeExceeded("exp sequence entry " + std::to_string(m) +
                                               " outside bound " + std::to_string(bound));
  return entries[m];
}

ExpSequence exp_sequence(const BurnsideElement& x, int bound) {
  if (bound < 0) throw Error("exp_sequence: negative bound");
  ExpSequence s;
  s.group = x.group();
  s.bound = bound;
  s.entries = all_powers(x, bound);
  return s;
}

bool exp_sequence_is_exponential(const ExpSequence& s) {
  // zeroth term is the unit
  if (!virtual_equal(s.entries[0], unit_power(s.group))) return false;
  for (int p = 0; p <= s.bound; ++p)
    for (int q = 1; p + q <= s.bound; ++q) {
      const WreathGroup& wp = wreath_product(p, s.group);
      const WreathGroup& wq = wreath_product(q, s.group);
      const ProductGroup& prod = direct_product(wp.group, wq.group);
      VirtualGSet lhs = pullback(juxtaposition_hom(s.group, p, q), s.entries[p + q]);
      VirtualGSet rhs = external_product(prod, s.entries[p], s.entries[q]);
      if (!virtual_equal(lhs, rhs)) return false;
    }
  return true;
}

std::vector<BurnsideElement> restricted_powers(const BurnsideElement& x, int bound) {
  ExpSequence s = exp_sequence(x, bound);
  std::vector<BurnsideElement> out;
  for (int m = 0; m <= bound; ++m) {
    const WreathGroup& w = wreath_product(m, x.group());
    out.push_back(decompose(pullback(w.diag, s.entries[m])));
  }
  return out;
}

// --- pairing -----------------------------------------------------------------

VirtualGSet pair_deflate_sets(const ProductGroup& kxg, const VirtualGSet& r,
                              const VirtualGSet& x) {
  if (r.group != kxg.group || x.group != kxg.left)
    throw Error("pairing: operands over the wrong groups");
  const ProductGroup& outer = direct_product(kxg.group, kxg.left);
  GroupHom shuffle = hom_from_fn(kxg.group, outer.group, [&](int i) {
    return outer.pair_index(i, kxg.pr1.image_of[i]);
  });
  VirtualGSet pulled = pullback(shuffle, external_product(outer, r, x));
  return coinduce_deflate(kxg.pr2, pulled);
}

namespace {

std::mutex pair_mu;
std::map<const ProductGroup*, std::map<std::pair<int, int>, BurnsideElement>>& pair_cache() {
  static std::map<const ProductGroup*, std::map<std::pair<int, int>, BurnsideElement>> c;
  return c;
}

const BurnsideElement& pair_basis(const ProductGroup& kxg, int i, int j) {
  std::scoped_lock lock(pair_mu);
  auto& memo = pair_cache()[&kxg];
  auto it = memo.find({i, j});
  if (it != memo.end()) return it->second;
  const SubgroupClassTable& tr = subgroup_classes(kxg.group);
  const SubgroupClassTable& tk = subgroup_classes(kxg.left);
  VirtualGSet r = VirtualGSet::of(cosets_gset(kxg.group, tr.class_reps()[i]));
  VirtualGSet x = VirtualGSet::of(cosets_gset(kxg.left, tk.class_reps()[j]));
  BurnsideElement value = decompose(pair_deflate_sets(kxg, r, x));
  return memo.emplace(std::make_pair(i, j), std::move(value)).first->second;
}

}  // namespace

BurnsideElement pair_deflate(const ProductGroup& kxg, const BurnsideElement& r,
                             const BurnsideElement& x) {
  if (r.group() != kxg.group) throw Error("pairing: first slot not over K x G");
  if (x.group() != kxg.left) throw Error("pairing: second slot not over K");
  std::map<int, mpz_class> xi = x.integral_coeffs();  // pairing requires integral x
  BurnsideElement out(kxg.right, r.ring());
  for (const auto& [i, ri] : r.coeffs())
    for (const auto& [j, xj] : xi) {
      Scalar c = ri * Scalar(r.ring(), xj);
      for (const auto& [cls, v] : pair_basis(kxg, i, j).coeffs())
        out.set_coeff(cls, out.coeff(cls) + c * extend_scalar(v, r.ring()));
    }
  return out;
}

// --- reports -----------------------------------------------------------------

int Report::failures() const {
  int n = 0;
  for (const auto& e : entries) n += !e.pass;
  return n;
}

void Report::add(std::string check, std::string instance, bool pass, std::string lhs,
                 std::string rhs) {
  entries.push_back({std::move(check), std::move(instance), pass, std::move(lhs), std::move(rhs)});
}

void parallel_instances(int count, int threads, const std::function<void(int)>& run) {
  if (threads <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) run(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  int workers = std::min(threads, count);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) run(i);
    });
  for (auto& t : pool) t.join();
}

// --- power identity checker ----------------------------------------------------

namespace {

std::string describe(const GroupPtr& g) {
  if (!g->label().empty()) return g->label();
  return "group(order " + std::to_string(g->order()) + ")";
}

std::vector<std::pair<std::string, BurnsideElement>> power_samples(const GroupPtr& g) {
  const SubgroupClassTable& t = subgroup_classes(g);
  std::vector<std::pair<std::string, BurnsideElement>> out;
  for (int i = 0; i < t.num_classes(); ++i)
    out.emplace_back("[" + t.class_label(i) + "]", BurnsideElement::basis(g, i));
  if (t.num_classes() >= 2) {
    out.emplace_back("[H0]+[Htop]",
                     BurnsideElement::basis(g, 0) + BurnsideElement::basis(g, t.num_classes() - 1));
    out.emplace_back("[Htop]-[H0]",
                     BurnsideElement::basis(g, t.num_classes() - 1) - BurnsideElement::basis(g, 0));
  }
  return out;
}

std::string virtual_summary(const VirtualGSet& x) {
  auto classes = stabilizer_class_multiplicities(x);
  if (classes.empty()) return "0";
  std::string out;
  for (const auto& [sub, mult] : classes) {
    if (!out.empty()) out += " + ";
    out += std::to_string(mult) + "*[stab order " + std::to_string(sub.order()) + "]";
  }
  return out;
}

}  // namespace

Report check_power_identities(const std::vector<GroupPtr>& corpus, int max_degree, int threads) {
  Report rep;
  rep.title = "power operation identities";
  rep.notes.push_back("(a) juxtaposition restriction of P^(i+j) factors as P^i x P^j");
  rep.notes.push_back("(b) naturality of P^n along restrictions");
  rep.notes.push_back("(c) exponential sum formula against directly realized powers");

  struct Instance {
    std::function<ReportEntry()> run;
  };
  std::vector<Instance> instances;

  for (const GroupPtr& g : corpus) {
    auto samples = power_samples(g);
    long wreath_order = 1;  // order of S_max wr G as a feasibility guard
    for (int i = 0; i < max_degree; ++i) wreath_order *= g->order();
    for (int i = 2; i <= max_degree; ++i) wreath_order *= i;
    if (wreath_order > limits().group_order) continue;

    // (a)
    for (const auto& [name, x] : samples) {
      for (int i = 0; i + 1 <= max_degree; ++i)
        for (int j = 1; i + j <= max_degree; ++j) {
          auto xe = x;
          auto gg = g;
          instances.push_back({[=]() {
            VirtualGSet whole = power_virtual(xe, i + j);
            VirtualGSet lhs = pullback(juxtaposition_hom(gg, i, j), whole);
            const ProductGroup& prod = direct_product(wreath_product(i, gg).group,
                                                      wreath_product(j, gg).group);
            VirtualGSet rhs = external_product(prod, power_virtual(xe, i), power_virtual(xe, j));
            bool ok = virtual_equal(lhs, rhs);
            return ReportEntry{"power.phi_restriction",
                               describe(gg) + " x=" + name + " (i,j)=(" + std::to_string(i) +
                                   "," + std::to_string(j) + ")",
                               ok, virtual_summary(lhs), virtual_summary(rhs)};
          }});
        }
    }

    // (c) sum formula: split samples into two halves and recombine
    for (const auto& [name, x] : samples) {
      if (!realize(x).effective()) continue;
      for (int m = 1; m <= max_degree; ++m) {
        auto xe = x;
        auto gg = g;
        instances.push_back({[=]() {
          VirtualGSet rx = realize(xe);
          GSet whole = rx.terms[0].first;
          bool first = true;
          for (const auto& [set, mult] : rx.terms)
            for (long long c = 0; c < mult; ++c) {
              if (first) {
                first = false;
                continue;
              }
              whole = disjoint_union(whole, set);
            }
          VirtualGSet direct = VirtualGSet::of(power_set(whole, m));
          // split off the first basis summand
          BurnsideElement u = BurnsideElement::basis(gg, xe.coeffs().begin()->first);
          BurnsideElement v = xe - u;
          VirtualGSet formula = VirtualGSet::zero(wreath_product(m, gg).group);
          for (int p = 0; p <= m; ++p)
            formula = formula + juxtaposition_transfer(gg, p, m - p, power_virtual(u, p),
                                                       power_virtual(v, m - p));
          bool ok = virtual_equal(direct, formula);
          return ReportEntry{"power.sum_formula",
                             describe(gg) + " x=" + name + " m=" + std::to_string(m), ok,
                             virtual_summary(direct), virtual_summary(formula)};
        }});
      }
    }
  }

  // (b) naturality along sample homomorphisms
  {
    GroupPtr e = trivial_group();
    GroupPtr s2 = symmetric_group(2);
    GroupPtr s3 = symmetric_group(3);
    std::vector<std::pair<std::string, GroupHom>> homs;
    homs.emplace_back("id_S2", hom_identity(s2));
    homs.emplace_back("incl S2<S3", hom_by_point_bijection(s2, s3, {0, 1}));
    homs.emplace_back("e->S2", hom_trivial(e, s2));
    homs.emplace_back("sign S3->S2", sign_hom(s3));
    for (const auto& [hname, phi] : homs) {
      for (const auto& [name, c] : power_samples(phi.target)) {
        for (int n = 1; n <= max_degree; ++n) {
          auto ce = c;
          auto ph = phi;
          auto hn = hname;
          instances.push_back({[=]() {
            const WreathGroup& wk = wreath_product(n, ph.source);
            const WreathGroup& wg = wreath_product(n, ph.target);
            VirtualGSet lhs = pullback(wreath_hom(wk, wg, ph), power_virtual(ce, n));
            VirtualGSet rhs = power_virtual(restrict_along(ph, ce), n);
            bool ok = virtual_equal(lhs, rhs);
            return ReportEntry{"power.naturality",
                               hn + " c=" + name + " n=" + std::to_string(n), ok,
                               virtual_summary(lhs), virtual_summary(rhs)};
          }});
        }
      }
    }
  }

  std::vector<ReportEntry> results(instances.size());
  parallel_instances(static_cast<int>(instances.size()), threads,
                     [&](int i) { results[i] = instances[i].run(); });
  for (auto& r : results) rep.entries.push_back(std::move(r));
  return rep;
}

// --- pairing axiom checker -----------------------------------------------------

PairingInstanceGroups default_pairing_corpus() {
  PairingInstanceGroups c;
  c.groups = {trivial_group(),    symmetric_group(2),          cyclic_group(3),
              cyclic_group(4),    direct_product(symmetric_group(2), symmetric_group(2)).group,
              symmetric_group(3), symmetric_group(4)};
  c.wreath_bases = {trivial_group(), symmetric_group(2)};
  return c;
}

namespace {

std::vector<BurnsideElement> basis_elements(const GroupPtr& g) {
  const SubgroupClassTable& t = subgroup_classes(g);
  std::vector<BurnsideElement> out;
  for (int i = 0; i < t.num_classes(); ++i) out.push_back(BurnsideElement::basis(g, i));
  return out;
}

}  // namespace

Report check_pairing_axioms(const PairingInstanceGroups& corpus, int threads) {
  Report rep;
  rep.title = "A-deflation pairing axioms on the Burnside rings";
  rep.notes.push_back(
      "axiom ii 'reversed relation' (not displayed in the definition) is read as the "
      "transpose: restriction in the first slot against transfer in the second");
  rep.notes.push_back(
      "axiom v is checked in the external form <r,x>.<s,y> = <D_G^*(r x s), x X y> over "
      "K x K, the identity the duality argument uses; the contracted same-K form fails "
      "on the Burnside pairing (K=S2, G=e, free classes in every slot give 8 vs 4)");

  std::vector<std::function<ReportEntry()>> instances;

  auto add = [&](std::function<ReportEntry()> f) { instances.push_back(std::move(f)); };

  std::vector<std::pair<GroupPtr, GroupPtr>> kg;
  for (const GroupPtr& k : corpus.groups)
    for (const GroupPtr& g : corpus.groups)
      if (k->order() * g->order() <= corpus.max_product_order) kg.emplace_back(k, g);

  // sample homomorphisms alpha: G -> L between corpus groups
  std::vector<std::tuple<std::string, GroupHom>> homs;
  {
    GroupPtr e = trivial_group();
    GroupPtr s2 = symmetric_group(2);
    GroupPtr s3 = symmetric_group(3);
    const ProductGroup& v4 = direct_product(s2, s2);
    homs.emplace_back("incl S2<S3", hom_by_point_bijection(s2, s3, {0, 1}));
    homs.emplace_back("e->S2", hom_trivial(e, s2));
    homs.emplace_back("S2->e", hom_trivial(s2, e));
    homs.emplace_back("sign S3->S2", sign_hom(s3));
    homs.emplace_back("pr1 S2xS2->S2", v4.pr1);
    homs.emplace_back("diag S2->S2xS2", diagonal_hom(s2));
  }

  for (const auto& [K, G] : kg) {
    const ProductGroup& kxg = direct_product(K, G);
    auto rs = basis_elements(kxg.group);
    auto xs = basis_elements(K);

    // iv) <r, 1> = r (via K = e and the canonical identification)
    if (K->is_trivial()) {
      for (size_t ri = 0; ri < rs.size(); ++ri) {
        auto r = rs[ri];
        auto kk = K;
        auto gg = G;
        add([=, &kxg]() {
          BurnsideElement one = BurnsideElement::unit(kk);
          BurnsideElement lhs = pair_deflate(kxg, r, one);
          GroupHom into = hom_from_fn(gg, kxg.group,
                                      [&](int i) { return kxg.pair_index(kk->identity(), i); });
          BurnsideElement rhs = restrict_along(into, r);
          return ReportEntry{"pairing.iv",
                             "K=" + describe(kk) + " G=" + describe(gg) + " r#" +
                                 std::to_string(ri),
                             lhs == rhs, lhs.to_string(), rhs.to_string()};
        });
      }
    }

    // v) multiplicativity, in the external form the duality argument uses:
    // <r, x> . <s, y> = <shuffled Delta_G^*(r x s), x X y> over K x K.
    // The contracted same-K reading <r.s, x.y>_K fails on the Burnside
    // pairing itself (K = S2, G = e, all slots the free class gives 8 vs 4),
    // so it is not checked as an axiom.
    if (K->order() * K->order() * G->order() <= limits().lattice_order) {
      const ProductGroup& kxk = direct_product(K, K);
      const ProductGroup& kkxg = direct_product(kxk.group, G);
      const ProductGroup& outer = direct_product(kxg.group, kxg.group);
      GroupHom shuffle = hom_from_fn(kkxg.group, outer.group, [&](int i) {
        int kpair = kkxg.pr1.image_of[i];
        int gg = kkxg.pr2.image_of[i];
        return outer.pair_index(kxg.pair_index(kxk.pr1.image_of[kpair], gg),
                                kxg.pair_index(kxk.pr2.image_of[kpair], gg));
      });
      for (size_t ri = 0; ri < rs.size(); ++ri)
        for (size_t si = ri; si < rs.size(); ++si)
          for (size_t xi = 0; xi < xs.size(); ++xi)
            for (size_t yi = xi; yi < xs.size(); ++yi) {
              auto r = rs[ri];
              auto s = rs[si];
              auto x = xs[xi];
              auto y = xs[yi];
              auto kk = K;
              auto gg = G;
              auto sh = shuffle;
              add([=, &kxg, &kxk, &kkxg, &outer]() {
                BurnsideElement lhs =
                    mul(pair_deflate(kxg, r, x), pair_deflate(kxg, s, y));
                VirtualGSet ext = external_product(outer, realize(r), realize(s));
                BurnsideElement big = decompose(pullback(sh, ext));
                BurnsideElement rhs = pair_deflate(kkxg, big, external_product(kxk, x, y));
                return ReportEntry{"pairing.v",
                                   "K=" + describe(kk) + " G=" + describe(gg) + " r#" +
                                       std::to_string(ri) + " s#" + std::to_string(si) + " x#" +
                                       std::to_string(xi) + " y#" + std::to_string(yi),
                                   lhs == rhs, lhs.to_string(), rhs.to_string()};
              });
            }
    }

    // vi) <r pr_K^* y, x> = <r, y x>
    for (size_t ri = 0; ri < rs.size(); ++ri)
      for (size_t xi = 0; xi < xs.size(); ++xi)
        for (size_t yi = 0; yi < xs.size(); ++yi) {
          auto r = rs[ri];
          auto x = xs[xi];
          auto y = xs[yi];
          auto kk = K;
          auto gg = G;
          add([=, &kxg]() {
            BurnsideElement lhs = pair_deflate(kxg, mul(r, restrict_along(kxg.pr1, y)), x);
            BurnsideElement rhs = pair_deflate(kxg, r, mul(y, x));
            return ReportEntry{"pairing.vi",
                               "K=" + describe(kk) + " G=" + describe(gg) + " r#" +
                                   std::to_string(ri) + " x#" + std::to_string(xi) + " y#" +
                                   std::to_string(yi),
                               lhs == rhs, lhs.to_string(), rhs.to_string()};
          });
        }

    // ii) transfer in the first slot against restriction in the second, and
    // the reversed relation
    const SubgroupClassTable& tk = subgroup_classes(K);
    for (int li = 0; li < tk.num_classes(); ++li) {
      const Subgroup& lsub = tk.class_reps()[li];
      if (lsub.order() == K->order()) continue;
      auto [L, inclL] = subgroup_as_group(lsub);
      const ProductGroup& lxg = direct_product(L, G);
      GroupHom inclLg = hom_from_fn(lxg.group, kxg.group, [&, L = L, inclL = inclL](int i) {
        return kxg.pair_index(inclL.image_of[lxg.pr1.image_of[i]], lxg.pr2.image_of[i]);
      });
      auto rLs = basis_elements(lxg.group);
      for (size_t ri = 0; ri < rLs.size(); ++ri)
        for (size_t xi = 0; xi < xs.size(); ++xi) {
          auto r = rLs[ri];
          auto x = xs[xi];
          auto kk = K;
          auto gg = G;
          auto LL = L;
          auto incl = inclL;
          auto lg = inclLg;
          add([=, &kxg, &lxg]() {
            BurnsideElement lhs = pair_deflate(kxg, transfer_along(lg, r), x);
            BurnsideElement rhs = pair_deflate(lxg, r, restrict_along(incl, x));
            return ReportEntry{"pairing.ii",
                               "K=" + describe(kk) + " L=" + describe(LL) + " G=" + describe(gg) +
                                   " r#" + std::to_string(ri) + " x#" + std::to_string(xi),
                               lhs == rhs, lhs.to_string(), rhs.to_string()};
          });
        }
      auto xLs = basis_elements(L);
      for (size_t ri = 0; ri < rs.size(); ++ri)
        for (size_t xi = 0; xi < xLs.size(); ++xi) {
          auto r = rs[ri];
          auto x = xLs[xi];
          auto kk = K;
          auto gg = G;
          auto LL = L;
          auto incl = inclL;
          auto lg = inclLg;
          add([=, &kxg, &lxg]() {
            BurnsideElement lhs = pair_deflate(lxg, restrict_along(lg, r), x);
            BurnsideElement rhs = pair_deflate(kxg, r, transfer_along(incl, x));
            return ReportEntry{"pairing.ii_reversed",
                               "K=" + describe(kk) + " L=" + describe(LL) + " G=" + describe(gg) +
                                   " r#" + std::to_string(ri) + " x#" + std::to_string(xi),
                               lhs == rhs, lhs.to_string(), rhs.to_string()};
          });
        }
    }

    // i) <(K x alpha)^* r, x> = alpha^* <r, x> for alpha: G -> L
    for (const auto& [hname, alpha] : homs) {
      if (alpha.source != G) continue;
      const GroupPtr& L = alpha.target;
      if (K->order() * L->order() > corpus.max_product_order) continue;
      const ProductGroup& kxl = direct_product(K, L);
      GroupHom kxalpha = hom_from_fn(kxg.group, kxl.group, [&, alpha = alpha](int i) {
        return kxl.pair_index(kxg.pr1.image_of[i], alpha.image_of[kxg.pr2.image_of[i]]);
      });
      auto rLs = basis_elements(kxl.group);
      for (size_t ri = 0; ri < rLs.size(); ++ri)
        for (size_t xi = 0; xi < xs.size(); ++xi) {
          auto r = rLs[ri];
          auto x = xs[xi];
          auto kk = K;
          auto gg = G;
          auto a = alpha;
          auto ka = kxalpha;
          auto hn = hname;
          add([=, &kxg, &kxl]() {
            BurnsideElement lhs = pair_deflate(kxg, restrict_along(ka, r), x);
            BurnsideElement rhs = restrict_along(a, pair_deflate(kxl, r, x));
            return ReportEntry{"pairing.i",
                               "K=" + describe(kk) + " alpha=" + hn + " G=" + describe(gg) +
                                   " r#" + std::to_string(ri) + " x#" + std::to_string(xi),
                               lhs == rhs, lhs.to_string(), rhs.to_string()};
          });
        }
    }

    // iii) <(alpha x G)^* r, alpha^* x> = <r, x> for surjective alpha: L -> K
    for (const auto& [hname, alpha] : homs) {
      if (alpha.target != K) continue;
      // surjectivity
      std::vector<char> hit(K->order(), 0);
      for (int im : alpha.image_of) hit[im] = 1;
      if (std::count(hit.begin(), hit.end(), char(1)) != K->order()) continue;
      const GroupPtr& L = alpha.source;
      if (L->order() * G->order() > corpus.max_product_order) continue;
      const ProductGroup& lxg = direct_product(L, G);
      GroupHom axg = hom_from_fn(lxg.group, kxg.group, [&, alpha = alpha](int i) {
        return kxg.pair_index(alpha.image_of[lxg.pr1.image_of[i]], lxg.pr2.image_of[i]);
      });
      for (size_t ri = 0; ri < rs.size(); ++ri)
        for (size_t xi = 0; xi < xs.size(); ++xi) {
          auto r = rs[ri];
          auto x = xs[xi];
          auto kk = K;
          auto gg = G;
          auto a = alpha;
          auto ag = axg;
          auto hn = hname;
          add([=, &kxg, &lxg]() {
            BurnsideElement lhs =
                pair_deflate(lxg, restrict_along(ag, r), restrict_along(a, x));
            BurnsideElement rhs = pair_deflate(kxg, r, x);
            return ReportEntry{"pairing.iii",
                               "alpha=" + hn + " K=" + describe(kk) + " G=" + describe(gg) +
                                   " r#" + std::to_string(ri) + " x#" + std::to_string(xi),
                               lhs == rhs, lhs.to_string(), rhs.to_string()};
          });
        }
    }
  }

  // vii) compatibility of the pairing with power operations, through the
  // relative diagonal delta_n^{Sigma_k, G}
  const int n = corpus.wreath_degree;
  for (const GroupPtr& G : corpus.wreath_bases) {
    for (int k = 1; k <= 2; ++k) {
      GroupPtr Sk = symmetric_group(k);
      GroupPtr Sn = symmetric_group(n);
      const ProductGroup& skxg = direct_product(Sk, G);
      const WreathGroup& wnk = wreath_product(n, Sk);          // Sigma_n wr Sigma_k
      const WreathGroup& wnkg = wreath_product(n, skxg.group); // Sigma_n wr (Sigma_k x G)
      const WreathGroup& wng = wreath_product(n, G);           // Sigma_n wr G
      const ProductGroup& wnk_x_g = direct_product(wnk.group, G);

      // delta_n^{Sigma_k, G}: (Sigma_n wr Sigma_k) x G -> Sigma_n wr (Sigma_k x G)
      GroupHom rel_diag = hom_from_fn(wnk_x_g.group, wnkg.group, [&](int i) {
        int w = wnk_x_g.pr1.image_of[i];
        int g = wnk_x_g.pr2.image_of[i];
        auto [sigma, tuple] = wnk.decode(w);
        for (int& t : tuple) t = skxg.pair_index(t, g);
        return wnkg.encode(sigma, tuple);
      });
      GroupHom wr_pr_k = wreath_hom(wnkg, wnk, skxg.pr1);  // Sigma_n wr pr_{Sigma_k}

      auto rsamples = basis_elements(skxg.group);
      auto ysamples = basis_elements(Sk);
      auto xsamples = basis_elements(Sn);
      for (size_t ri = 0; ri < rsamples.size(); ++ri)
        for (size_t yi = 0; yi < ysamples.size(); ++yi)
          for (size_t xi = 0; xi < xsamples.size(); ++xi) {
            auto r = rsamples[ri];
            auto y = ysamples[yi];
            auto x = xsamples[xi];
            auto gg = G;
            auto kk = Sk;
            add([=, &skxg, &wng, &wnkg, &wnk, &wnk_x_g]() {
              // lhs: <(delta_n^G)^* P^n(<r, y>), x>
              BurnsideElement inner = pair_deflate(skxg, r, y);
              VirtualGSet pn = power_virtual(inner, n);
              BurnsideElement lhs_restricted = decompose(pullback(wng.diag, pn));
              BurnsideElement lhs =
                  pair_deflate(*wng.top_times_base, lhs_restricted, x);
              // rhs: <(delta_n^{Sigma_k,G})^* (P^n(r) . (Sigma_n wr pr)^* P^n(y)),
              //       (Sigma_n wr p_{Sigma_k})^* x>
              VirtualGSet pr = power_virtual(r, n);
              VirtualGSet py = pullback(wr_pr_k, power_virtual(y, n));
              VirtualGSet prod = mul_sets(pr, py);
              BurnsideElement restricted = decompose(pullback(rel_diag, prod));
              BurnsideElement xw = restrict_along(wnk.proj_top, x);
              BurnsideElement rhs = pair_deflate(wnk_x_g, restricted, xw);
              return ReportEntry{"pairing.vii",
                                 "n=" + std::to_string(n) + " k=" + std::to_string(kk->degree()) +
                                     " G=" + describe(gg) + " r#" + std::to_string(ri) + " y#" +
                                     std::to_string(yi) + " x#" + std::to_string(xi),
                                 lhs == rhs, lhs.to_string(), rhs.to_string()};
            });
          }
    }
  }

  // the single double coset behind the additivity argument, at p = q = 1, G = S2
  add([]() {
    GroupPtr s2 = symmetric_group(2);
    const WreathGroup& w2 = wreath_product(2, s2);
    std::vector<int> diag_members;
    for (int im : w2.diag.image_of) diag_members.push_back(im);
    Subgroup h(w2.group, diag_members);
    const GroupHom& jux = juxtaposition_hom(s2, 1, 1);
    std::vector<int> base_members(jux.image_of);
    Subgroup k(w2.group, base_members);
    auto reps = double_coset_reps(w2.group, h, k);
    return ReportEntry{"pairing.single_double_coset", "p=q=1 G=S2",
                       reps.size() == 1, std::to_string(reps.size()), "1"};
  });

  std::vector<ReportEntry> results(instances.size());
  parallel_instances(static_cast<int>(instances.size()), threads,
                     [&](int i) { results[i] = instances[i](); });
  for (auto& r : results) rep.entries.push_back(std::move(r));
  return rep;
}

}  // namespace burnside
