#include "burnside/beta.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "burnside/errors.hpp"
#include "burnside/limits.hpp"

namespace burnside {

// --- operator elements ---------------------------------------------------------

OperatorElement OperatorElement::unit() {
  return of(0, BurnsideElement::unit(symmetric_group(0)));
}

OperatorElement OperatorElement::identity_op() {
  return of(1, BurnsideElement::unit(symmetric_group(1)));
}

OperatorElement OperatorElement::of(int degree, BurnsideElement part) {
  OperatorElement x;
  x.set_part(degree, std::move(part));
  return x;
}

OperatorElement OperatorElement::basis(int degree, int class_index) {
  return of(degree, BurnsideElement::basis(symmetric_group(degree), class_index));
}

int OperatorElement::max_degree() const {
  return parts.empty() ? 0 : parts.rbegin()->first;
}

BurnsideElement OperatorElement::part(int degree) const {
  auto it = parts.find(degree);
  if (it != parts.end()) return it->second;
  return BurnsideElement::zero(symmetric_group(degree));
}

void OperatorElement::set_part(int degree, BurnsideElement value) {
  if (value.group() != symmetric_group(degree))
    throw Error("operator part of degree " + std::to_string(degree) +
                " must live over S" + std::to_string(degree));
  if (value.ring() != CoeffRing::integers())
    throw RingMismatch("operator elements have integer coefficients");
  if (value.is_zero())
    parts.erase(degree);
  else
    parts.insert_or_assign(degree, std::move(value));
}

OperatorElement OperatorElement::operator+(const OperatorElement& o) const {
  OperatorElement r = *this;
  for (const auto& [d, p] : o.parts) r.set_part(d, r.part(d) + p);
  return r;
}

OperatorElement OperatorElement::operator-() const {
  OperatorElement r;
  for (const auto& [d, p] : parts) r.set_part(d, -p);
  return r;
}

OperatorElement OperatorElement::scaled(long long c) const {
  OperatorElement r;
  for (const auto& [d, p] : parts)
    r.set_part(d, p.scaled(Scalar(CoeffRing::integers(), mpz_ll(c))));
  return r;
}

bool OperatorElement::operator==(const OperatorElement& o) const { return parts == o.parts; }

std::string OperatorElement::to_string() const {
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& [d, p] : parts) {
    if (!out.empty()) out += "; ";
    out += "deg " + std::to_string(d) + ": " + p.to_string();
  }
  return out;
}

OperatorElement transfer_product(const OperatorElement& x, const OperatorElement& y) {
  OperatorElement r;
  for (const auto& [k, xk] : x.parts)
    for (const auto& [l, yl] : y.parts) {
      GroupPtr target = symmetric_group(k + l);
      const ProductGroup& prod = direct_product(symmetric_group(k), symmetric_group(l));
      BurnsideElement ext = external_product(prod, xk, yl);
      BurnsideElement piece = transfer_along(embed_by_carrier(prod.group, target), ext);
      r.set_part(k + l, r.part(k + l) + piece);
    }
  return r;
}

// --- bidegrees -----------------------------------------------------------------

GroupPtr bidegree_group(int p, int q) {
  return direct_product(symmetric_group(p), symmetric_group(q)).group;
}

OperatorElement2 OperatorElement2::of(int p, int q, BurnsideElement part) {
  OperatorElement2 z;
  z.set_part(p, q, std::move(part));
  return z;
}

BurnsideElement OperatorElement2::part(int p, int q) const {
  auto it = parts.find({p, q});
  if (it != parts.end()) return it->second;
  return BurnsideElement::zero(bidegree_group(p, q));
}

void OperatorElement2::set_part(int p, int q, BurnsideElement value) {
  if (value.group() != bidegree_group(p, q))
    throw Error("bidegree part must live over S_p x S_q");
  if (value.ring() != CoeffRing::integers())
    throw RingMismatch("operator elements have integer coefficients");
  if (value.is_zero())
    parts.erase({p, q});
  else
    parts.insert_or_assign(std::make_pair(p, q), std::move(value));
}

OperatorElement2 OperatorElement2::operator+(const OperatorElement2& o) const {
  OperatorElement2 r = *this;
  for (const auto& [pq, v] : o.parts) r.set_part(pq.first, pq.second, r.part(pq.first, pq.second) + v);
  return r;
}

bool OperatorElement2::operator==(const OperatorElement2& o) const { return parts == o.parts; }

std::string OperatorElement2::to_string() const {
  if (parts.empty()) return "0";
  std::string out;
  for (const auto& [pq, v] : parts) {
    if (!out.empty()) out += "; ";
    out += "deg (" + std::to_string(pq.first) + "," + std::to_string(pq.second) +
           "): " + v.to_string();
  }
  return out;
}

OperatorElement2 transfer_product2(const OperatorElement2& x, const OperatorElement2& y) {
  OperatorElement2 out;
  for (const auto& [pq, xv] : x.parts)
    for (const auto& [rs, yv] : y.parts) {
      const auto [p, q] = pq;
      const auto [r, s] = rs;
      GroupPtr source_left = bidegree_group(p, q);
      GroupPtr source_right = bidegree_group(r, s);
      const ProductGroup& prod = direct_product(source_left, source_right);
      GroupPtr target = bidegree_group(p + r, q + s);
      // carrier order (p,q,r,s) -> (p,r,q,s)
      std::vector<int> point_map(p + q + r + s);
      for (int i = 0; i < p; ++i) point_map[i] = i;
      for (int i = 0; i < q; ++i) point_map[p + i] = p + r + i;
      for (int i = 0; i < r; ++i) point_map[p + q + i] = p + i;
      for (int i = 0; i < s; ++i) point_map[p + q + r + i] = p + r + q + i;
      GroupHom into = hom_by_point_bijection(prod.group, target, point_map);
      BurnsideElement ext = external_product(prod, xv, yv);
      out.set_part(p + r, q + s, out.part(p + r, q + s) + transfer_along(into, ext));
    }
  return out;
}

OperatorElement2 phi_map(const OperatorElement& x) {
  OperatorElement2 out;
  for (const auto& [m, xm] : x.parts)
    for (int p = 0; p <= m; ++p) {
      int q = m - p;
      GroupPtr pq = bidegree_group(p, q);
      BurnsideElement piece = restrict_along(embed_by_carrier(pq, symmetric_group(m)), xm);
      out.set_part(p, q, out.part(p, q) + piece);
    }
  return out;
}

OperatorElement2 times2(const OperatorElement& x, const OperatorElement& y) {
  OperatorElement2 out;
  for (const auto& [p, xp] : x.parts)
    for (const auto& [q, yq] : y.parts) {
      const ProductGroup& prod = direct_product(symmetric_group(p), symmetric_group(q));
      out.set_part(p, q, out.part(p, q) + external_product(prod, xp, yq));
    }
  return out;
}

// --- plethysm ------------------------------------------------------------------

namespace {

/// Iterated left-associated product with component extraction.
struct FactorChain {
  std::vector<GroupPtr> factors;
  std::vector<const ProductGroup*> steps;  // steps[i]: (prefix of i+1 factors) x factors[i+1]
  GroupPtr group;

  static FactorChain build(std::vector<GroupPtr> fs) {
    FactorChain c;
    c.factors = std::move(fs);
    c.group = c.factors[0];
    for (size_t i = 1; i < c.factors.size(); ++i) {
      const ProductGroup& p = direct_product(c.group, c.factors[i]);
      c.steps.push_back(&p);
      c.group = p.group;
    }
    return c;
  }

  std::vector<int> components(int idx) const {
    std::vector<int> out(factors.size());
    for (size_t i = factors.size(); i-- > 1;) {
      out[i] = steps[i - 1]->pr2.image_of[idx];
      idx = steps[i - 1]->pr1.image_of[idx];
    }
    out[0] = idx;
    return out;
  }
};

/// Transports an element over one trivial group to another trivial group.
BurnsideElement transport_trivial(const BurnsideElement& x, const GroupPtr& target) {
  BurnsideElement out(target, x.ring());
  for (const auto& [cls, v] : x.coeffs()) out.set_coeff(0, v);
  return out;
}

void compositions_rec(int total, int slots, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int first = 0; first <= total; ++first) {
    cur.push_back(first);
    compositions_rec(total - first, slots - 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int total, int slots) {
  std::vector<std::vector<int>> out;
  if (slots == 0) {
    if (total == 0) out.push_back({});
    return out;
  }
  std::vector<int> cur;
  compositions_rec(total, slots, cur, out);
  return out;
}

}  // namespace

OperatorElement plethysm_with_parts(const OperatorElement& x,
                                    const std::vector<std::pair<int, BurnsideElement>>& parts) {
  OperatorElement result;
  for (const auto& [k, xk] : x.parts) {
    if (k == 0) {
      result.set_part(0, result.part(0) + xk);
      continue;
    }
    for (const auto& comp : compositions(k, static_cast<int>(parts.size()))) {
      // active factors of the composition
      struct Factor {
        int k, l;
        const WreathGroup* w;
        VirtualGSet pow;
      };
      std::vector<Factor> factors;
      bool vanished = false;
      for (size_t i = 0; i < parts.size(); ++i) {
        if (comp[i] == 0) continue;
        const auto& [l, yi] = parts[i];
        if (yi.is_zero()) {
          vanished = true;
          break;
        }
        GroupPtr base = (l == 0) ? trivial_group() : symmetric_group(l);
        BurnsideElement y_base = (l == 0) ? transport_trivial(yi, base) : yi;
        const WreathGroup& w = wreath_product(comp[i], base);
        factors.push_back({comp[i], l, &w, power_virtual(y_base, comp[i])});
      }
      if (vanished) continue;

      std::vector<GroupPtr> factor_groups;
      for (const auto& f : factors) factor_groups.push_back(f.w->group);
      FactorChain chain = FactorChain::build(std::move(factor_groups));

      VirtualGSet ext = factors[0].pow;
      for (size_t i = 1; i < factors.size(); ++i)
        ext = external_product(*chain.steps[i - 1], ext, factors[i].pow);

      // x pulled back along (prod of wreath projections) followed by the
      // juxtaposition into S_k
      GroupPtr sk = symmetric_group(k);
      GroupHom to_sk = hom_from_fn(chain.group, sk, [&](int idx) {
        std::vector<int> comps = chain.components(idx);
        Perm target = perm_identity(k);
        int offset = 0;
        for (size_t i = 0; i < factors.size(); ++i) {
          int top = factors[i].w->proj_top.image_of[comps[i]];
          const Perm& tp = factors[i].w->top->element(top);
          for (int a = 0; a < factors[i].k; ++a) target[offset + a] = offset + tp[a];
          offset += factors[i].k;
        }
        return sk->index_of(target);
      });
      VirtualGSet with_x = mul_sets(ext, pullback(to_sk, realize(xk)));

      // wrong-way map into S_N, dropping the degree-zero wreath factors
      int big_n = 0;
      for (const auto& f : factors) big_n += f.k * f.l;
      GroupPtr sn = symmetric_group(big_n);
      GroupHom wrong_way = hom_from_fn(chain.group, sn, [&](int idx) {
        std::vector<int> comps = chain.components(idx);
        Perm target = perm_identity(big_n);
        int offset = 0;
        for (size_t i = 0; i < factors.size(); ++i) {
          if (factors[i].l == 0) continue;
          const Perm& wp = factors[i].w->group->element(comps[i]);
          int span = factors[i].k * factors[i].l;
          for (int a = 0; a < span; ++a) target[offset + a] = offset + wp[a];
          offset += span;
        }
        return sn->index_of(target);
      });
      BurnsideElement piece = decompose(coinduce_deflate(wrong_way, with_x));
      result.set_part(big_n, result.part(big_n) + piece);
    }
  }
  return result;
}

OperatorElement plethysm(const OperatorElement& x, const OperatorElement& y) {
  std::vector<std::pair<int, BurnsideElement>> parts(y.parts.begin(), y.parts.end());
  return plethysm_with_parts(x, parts);
}

// --- duality and theta -----------------------------------------------------------

BurnsideElement duality_eval(const ExpSequence& s, const OperatorElement& x) {
  if (x.max_degree() > s.bound)
    throw DegreeExceeded("operator degree " + std::to_string(x.max_degree()) +
                         " above the sequence bound " + std::to_string(s.bound));
  BurnsideElement out = BurnsideElement::zero(s.group);
  for (const auto& [m, xm] : x.parts) {
    const WreathGroup& w = wreath_product(m, s.group);
    BurnsideElement restricted = decompose(pullback(w.diag, s.entry(m)));
    out = out + pair_deflate(*w.top_times_base, restricted, xm);
  }
  return out;
}

namespace {

BurnsideElement theta_integral(const OperatorElement& x, const BurnsideElement& a) {
  return duality_eval(exp_sequence(a, x.max_degree()), x);
}

std::mutex candidate_mu;
std::map<std::tuple<const PermGroup*, mpz_class, int>, bool>& candidate_cache() {
  static std::map<std::tuple<const PermGroup*, mpz_class, int>, bool> c;
  return c;
}

}  // namespace

bool induced_candidate_ok(const GroupPtr& g, const mpz_class& n, int degree) {
  {
    std::scoped_lock lock(candidate_mu);
    auto it = candidate_cache().find({g.get(), n, degree});
    if (it != candidate_cache().end()) return it->second;
  }
  Report r = check_induced_candidate(g, n, degree);
  bool ok = r.failures() == 0;
  std::scoped_lock lock(candidate_mu);
  candidate_cache()[{g.get(), n, degree}] = ok;
  return ok;
}

BurnsideElement theta(const OperatorElement& x, const BurnsideElement& a) {
  switch (a.ring().kind) {
    case RingKind::Integers:
      return theta_integral(x, a);
    case RingKind::Residues: {
      const mpz_class& n = a.ring().modulus;
      for (const auto& [m, xm] : x.parts)
        if (!induced_candidate_ok(a.group(), n, m))
          throw Error("P^" + std::to_string(m) + " does not descend to Z/" + n.get_str() +
                      " coefficients (induced-candidate check fails)");
      BurnsideElement lift(a.group(), CoeffRing::integers());
      for (const auto& [cls, v] : a.coeffs())
        lift.set_coeff(cls, Scalar(CoeffRing::integers(), v.re()));
      return extend_coefficients(theta_integral(x, lift), a.ring());
    }
    default: {
      // Z[i] and Q: only elements with integral lifts have canonical
      // beta-operations; the inclusions are injective so the lift is unique
      BurnsideElement lift(a.group(), CoeffRing::integers());
      for (const auto& [cls, v] : a.integral_coeffs())
        lift.set_coeff(cls, Scalar(CoeffRing::integers(), v));
      return extend_coefficients(theta_integral(x, lift), a.ring());
    }
  }
}

BurnsideElement theta_closed_form(int n, const Subgroup& h, const BurnsideElement& a) {
  if (h.parent != symmetric_group(n)) throw Error("closed form: H must be a subgroup of S_n");
  VirtualGSet ra = realize(a);
  if (!ra.effective()) throw Error("closed form needs an effective element");
  const GroupPtr& g = a.group();
  if (n == 0) return BurnsideElement::unit(g);
  if (ra.terms.empty()) return BurnsideElement::zero(g);

  GSet whole = ra.terms[0].first;
  bool first = true;
  for (const auto& [set, mult] : ra.terms)
    for (long long c = 0; c < mult; ++c) {
      if (first) {
        first = false;
        continue;
      }
      whole = disjoint_union(whole, set);
    }

  const WreathGroup& w = wreath_product(n, g);
  GSet xn = power_set(whole, n);
  std::vector<int> members;
  for (int m : h.members) members.push_back(w.incl_top.image_of[m]);
  Subgroup h_in_w(w.group, members);
  GroupHom psi = hom_from_fn(g, w.group, [&](int e) {
    std::vector<int> tuple(n, e);
    return w.encode(w.top->identity(), tuple);
  });
  return decompose(quotient_by_subgroup(xn, h_in_w, psi));
}

namespace {

/// Pullback data for delta_{p,q}: the shuffle (S_p x S_q) x G into
/// (S_p x G) x (S_q x G), with a memo of restricted basis-class pairs so the
/// quadratic-size external products are decomposed once per class pair.
struct BidegreeContext {
  const ProductGroup* outer = nullptr;
  const ProductGroup* source = nullptr;
  GroupHom shuffle;
  std::map<std::pair<int, int>, BurnsideElement> memo;
};

std::mutex bidegree_mu;

BidegreeContext& bidegree_context(int p, int q, const GroupPtr& g) {
  static std::map<std::tuple<int, int, const PermGroup*>, BidegreeContext> cache;
  std::scoped_lock lock(bidegree_mu);
  auto key = std::make_tuple(p, q, g.get());
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const ProductGroup& left = *wreath_product(p, g).top_times_base;   // S_p x G
  const ProductGroup& right = *wreath_product(q, g).top_times_base;  // S_q x G
  const ProductGroup& outer = direct_product(left.group, right.group);
  const ProductGroup& pq = direct_product(symmetric_group(p), symmetric_group(q));
  const ProductGroup& source = direct_product(pq.group, g);
  BidegreeContext ctx;
  ctx.outer = &outer;
  ctx.source = &source;
  ctx.shuffle = hom_from_fn(source.group, outer.group, [&](int i) {
    int k = source.pr1.image_of[i];
    int gg = source.pr2.image_of[i];
    return outer.pair_index(left.pair_index(pq.pr1.image_of[k], gg),
                            right.pair_index(pq.pr2.image_of[k], gg));
  });
  return cache.emplace(key, std::move(ctx)).first->second;
}

const BurnsideElement& bidegree_basis(BidegreeContext& ctx, const GroupPtr& g, int p, int q,
                                      int ui, int vj) {
  {
    std::scoped_lock lock(bidegree_mu);
    auto it = ctx.memo.find({ui, vj});
    if (it != ctx.memo.end()) return it->second;
  }
  const ProductGroup& left = *wreath_product(p, g).top_times_base;
  const ProductGroup& right = *wreath_product(q, g).top_times_base;
  GSet us = cosets_gset(left.group, subgroup_classes(left.group).class_reps()[ui]);
  GSet vs = cosets_gset(right.group, subgroup_classes(right.group).class_reps()[vj]);
  GSet ext = external_set_product(*ctx.outer, us, vs);
  BurnsideElement value = decompose(pullback(ctx.shuffle, ext));
  std::scoped_lock lock(bidegree_mu);
  return ctx.memo.emplace(std::make_pair(ui, vj), std::move(value)).first->second;
}

/// delta_{p,q}-restriction of P^p(c) x P^q(d) over (S_p x S_q) x G, assembled
/// from the already-restricted one-variable powers.
BurnsideElement bidegree_restricted(const std::vector<BurnsideElement>& rp_c,
                                    const std::vector<BurnsideElement>& rp_d, int p, int q,
                                    const GroupPtr& g) {
  BidegreeContext& ctx = bidegree_context(p, q, g);
  BurnsideElement out(ctx.source->group, CoeffRing::integers());
  for (const auto& [ui, cu] : rp_c[p].coeffs())
    for (const auto& [vj, cv] : rp_d[q].coeffs()) {
      Scalar c = cu * cv;
      const BurnsideElement& basis = bidegree_basis(ctx, g, p, q, ui, vj);
      for (const auto& [cls, v] : basis.coeffs()) out.set_coeff(cls, out.coeff(cls) + c * v);
    }
  return out;
}

BurnsideElement theta2_from_restricted(const OperatorElement2& z,
                                       const std::vector<BurnsideElement>& rp_c,
                                       const std::vector<BurnsideElement>& rp_d,
                                       const GroupPtr& g) {
  BurnsideElement out = BurnsideElement::zero(g);
  for (const auto& [pq, zv] : z.parts) {
    const auto [p, q] = pq;
    BurnsideElement r = bidegree_restricted(rp_c, rp_d, p, q, g);
    const ProductGroup& ctx = direct_product(bidegree_group(p, q), g);
    out = out + pair_deflate(ctx, r, zv);
  }
  return out;
}

int max_bidegree(const OperatorElement2& z) {
  int m = 0;
  for (const auto& [pq, v] : z.parts) m = std::max({m, pq.first, pq.second});
  return m;
}

}  // namespace

BurnsideElement theta2(const OperatorElement2& z, const BurnsideElement& c,
                       const BurnsideElement& d) {
  if (c.group() != d.group()) throw Error("theta2: arguments over different groups");
  int bound = max_bidegree(z);
  std::vector<BurnsideElement> rp_c = restricted_powers(c, bound);
  std::vector<BurnsideElement> rp_d = restricted_powers(d, bound);
  return theta2_from_restricted(z, rp_c, rp_d, c.group());
}

// --- checker harnesses -----------------------------------------------------------

namespace {

std::string group_name(const GroupPtr& g) {
  return g->label().empty() ? ("order" + std::to_string(g->order())) : g->label();
}

struct OpSample {
  std::string name;
  OperatorElement op;
  int degree;  // maximal degree of the operator
};

std::vector<OpSample> basis_operators(int degree_bound) {
  std::vector<OpSample> out;
  out.push_back({"1", OperatorElement::unit(), 0});
  if (degree_bound >= 1) out.push_back({"e", OperatorElement::identity_op(), 1});
  for (int m = 2; m <= degree_bound; ++m) {
    const SubgroupClassTable& t = subgroup_classes(symmetric_group(m));
    for (int i = 0; i < t.num_classes(); ++i)
      out.push_back({"[S" + std::to_string(m) + "/" + t.class_label(i) + "]",
                     OperatorElement::basis(m, i), m});
  }
  return out;
}

std::vector<std::pair<std::string, BurnsideElement>> ring_samples(const GroupPtr& g) {
  const SubgroupClassTable& t = subgroup_classes(g);
  std::vector<std::pair<std::string, BurnsideElement>> out;
  for (int i = 0; i < t.num_classes(); ++i)
    out.emplace_back("[" + t.class_label(i) + "]", BurnsideElement::basis(g, i));
  int n = t.num_classes();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      out.emplace_back("[" + t.class_label(i) + "]+[" + t.class_label(j) + "]",
                       BurnsideElement::basis(g, i) + BurnsideElement::basis(g, j));
  return out;
}

BurnsideElement theta_from_restricted(const OperatorElement& x,
                                      const std::vector<BurnsideElement>& rp,
                                      const GroupPtr& g) {
  BurnsideElement out = BurnsideElement::zero(g);
  for (const auto& [m, xm] : x.parts) {
    const WreathGroup& w = wreath_product(m, g);
    out = out + pair_deflate(*w.top_times_base, rp[m], xm);
  }
  return out;
}

}  // namespace

Report check_beta_axioms(GroupPtr g, int degree_bound, int threads) {
  Report rep;
  rep.title = "beta-ring axioms on A(" + group_name(g) + ")";
  rep.notes.push_back("every operator occurring in an instance is kept within degree " +
                      std::to_string(degree_bound) +
                      "; products and plethysms are filtered accordingly");

  auto ops = basis_operators(degree_bound);
  auto samples = ring_samples(g);

  // restricted powers of every ring sample, shared by all instances
  std::vector<std::vector<BurnsideElement>> rp(samples.size());
  parallel_instances(static_cast<int>(samples.size()), threads, [&](int i) {
    rp[i] = restricted_powers(samples[i].second, degree_bound);
  });

  // theta matrix
  std::vector<std::vector<BurnsideElement>> tv(
      ops.size(), std::vector<BurnsideElement>(samples.size(), BurnsideElement::zero(g)));
  parallel_instances(static_cast<int>(ops.size() * samples.size()), threads, [&](int k) {
    size_t oi = k / samples.size(), ai = k % samples.size();
    tv[oi][ai] = theta_from_restricted(ops[oi].op, rp[ai], g);
  });

  std::vector<std::function<ReportEntry()>> instances;

  // i) additivity in the operator
  for (size_t oi = 0; oi < ops.size(); ++oi)
    for (size_t oj = oi; oj < ops.size(); ++oj)
      for (size_t ai = 0; ai < samples.size(); ++ai)
        instances.push_back([&, oi, oj, ai]() {
          BurnsideElement lhs = theta_from_restricted(ops[oi].op + ops[oj].op, rp[ai], g);
          BurnsideElement rhs = tv[oi][ai] + tv[oj][ai];
          return ReportEntry{"beta.i",
                             "x=" + ops[oi].name + " y=" + ops[oj].name + " a=" +
                                 samples[ai].first,
                             lhs == rhs, lhs.to_string(), rhs.to_string()};
        });

  // ii) multiplicativity: theta(x.y) = theta(x).theta(y)
  for (size_t oi = 0; oi < ops.size(); ++oi)
    for (size_t oj = oi; oj < ops.size(); ++oj) {
      if (ops[oi].degree + ops[oj].degree > degree_bound) continue;
      auto prod = std::make_shared<OperatorElement>(transfer_product(ops[oi].op, ops[oj].op));
      for (size_t ai = 0; ai < samples.size(); ++ai)
        instances.push_back([&, oi, oj, ai, prod]() {
          BurnsideElement lhs = theta_from_restricted(*prod, rp[ai], g);
          BurnsideElement rhs = mul(tv[oi][ai], tv[oj][ai]);
          return ReportEntry{"beta.ii",
                             "x=" + ops[oi].name + " y=" + ops[oj].name + " a=" +
                                 samples[ai].first,
                             lhs == rhs, lhs.to_string(), rhs.to_string()};
        });
    }

  // iii) plethysm: theta(x*y) = theta(x) o theta(y); composite y samples
  // exercise the multi-summand partitions of the formula
  std::vector<OpSample> composite_y;
  if (degree_bound >= 1) {
    composite_y.push_back(
        {"2e", OperatorElement::identity_op() + OperatorElement::identity_op(), 1});
    composite_y.push_back({"e+1", OperatorElement::identity_op() + OperatorElement::unit(), 1});
  }
  for (size_t oi = 0; oi < ops.size(); ++oi) {
    for (size_t oj = 0; oj < ops.size(); ++oj) {
      if (ops[oi].degree * ops[oj].degree > degree_bound) continue;
      auto pleth = std::make_shared<OperatorElement>(plethysm(ops[oi].op, ops[oj].op));
      for (size_t ai = 0; ai < samples.size(); ++ai)
        instances.push_back([&, oi, oj, ai, pleth]() {
          BurnsideElement lhs = theta_from_restricted(*pleth, rp[ai], g);
          BurnsideElement rhs = theta(ops[oi].op, tv[oj][ai]);
          return ReportEntry{"beta.iii",
                             "x=" + ops[oi].name + " y=" + ops[oj].name + " a=" +
                                 samples[ai].first,
                             lhs == rhs, lhs.to_string(), rhs.to_string()};
        });
    }
    for (const OpSample& y : composite_y) {
      if (ops[oi].degree * y.degree > degree_bound) continue;
      auto pleth = std::make_shared<OperatorElement>(plethysm(ops[oi].op, y.op));
      const SubgroupClassTable& t = subgroup_classes(g);
      for (int cls = 0; cls < t.num_classes(); ++cls)
        instances.push_back([&, oi, y, cls, pleth]() {
          BurnsideElement a = BurnsideElement::basis(g, cls);
          BurnsideElement lhs = theta(*pleth, a);
          BurnsideElement rhs = theta(ops[oi].op, theta(y.op, a));
          return ReportEntry{"beta.iii",
                             "x=" + ops[oi].name + " y=" + y.name + " a=[basis " +
                                 std::to_string(cls) + "]",
                             lhs == rhs, lhs.to_string(), rhs.to_string()};
        });
    }
  }

  // iv) theta(1)(a) = 1 and v) theta(e) = id
  for (size_t ai = 0; ai < samples.size(); ++ai) {
    instances.push_back([&, ai]() {
      BurnsideElement lhs = theta_from_restricted(OperatorElement::unit(), rp[ai], g);
      BurnsideElement rhs = BurnsideElement::unit(g);
      return ReportEntry{"beta.iv", "a=" + samples[ai].first, lhs == rhs, lhs.to_string(),
                         rhs.to_string()};
    });
    instances.push_back([&, ai]() {
      BurnsideElement lhs = theta_from_restricted(OperatorElement::identity_op(), rp[ai], g);
      const BurnsideElement& rhs = samples[ai].second;
      return ReportEntry{"beta.v", "a=" + samples[ai].first, lhs == rhs, lhs.to_string(),
                         rhs.to_string()};
    });
  }

  std::vector<ReportEntry> results(instances.size());
  parallel_instances(static_cast<int>(instances.size()), threads,
                     [&](int i) { results[i] = instances[i](); });
  for (auto& e : results) rep.entries.push_back(std::move(e));
  return rep;
}

Report check_additive_axioms(GroupPtr g, int degree_bound, int threads) {
  Report rep;
  rep.title = "additive beta-ring axioms on A(" + group_name(g) + ")";

  auto ops = basis_operators(degree_bound);
  const SubgroupClassTable& t = subgroup_classes(g);
  std::vector<std::pair<std::string, BurnsideElement>> cd_samples;
  for (int i = 0; i < t.num_classes(); ++i)
    cd_samples.emplace_back("[" + t.class_label(i) + "]", BurnsideElement::basis(g, i));
  cd_samples.emplace_back("[H0]+[Htop]", BurnsideElement::basis(g, 0) +
                                             BurnsideElement::basis(g, t.num_classes() - 1));

  std::vector<std::vector<BurnsideElement>> rp(cd_samples.size());
  parallel_instances(static_cast<int>(cd_samples.size()), threads, [&](int i) {
    rp[i] = restricted_powers(cd_samples[i].second, degree_bound);
  });

  std::vector<std::function<ReportEntry()>> instances;

  // i) theta2(x X y)(c,d) = theta(x)(c) . theta(y)(d)
  for (size_t oi = 0; oi < ops.size(); ++oi)
    for (size_t oj = 0; oj < ops.size(); ++oj) {
      auto z = std::make_shared<OperatorElement2>(times2(ops[oi].op, ops[oj].op));
      for (size_t ci = 0; ci < cd_samples.size(); ++ci)
        for (size_t di = 0; di < cd_samples.size(); ++di)
          instances.push_back([&, oi, oj, ci, di, z]() {
            BurnsideElement lhs = theta2_from_restricted(*z, rp[ci], rp[di], g);
            BurnsideElement rhs =
                mul(theta_from_restricted(ops[oi].op, rp[ci], g),
                    theta_from_restricted(ops[oj].op, rp[di], g));
            return ReportEntry{"additive.i",
                               "x=" + ops[oi].name + " y=" + ops[oj].name + " c=" +
                                   cd_samples[ci].first + " d=" + cd_samples[di].first,
                               lhs == rhs, lhs.to_string(), rhs.to_string()};
          });
    }

  // ii) theta(x)(c+d) = theta2(Phi x)(c,d)
  for (size_t oi = 0; oi < ops.size(); ++oi) {
    auto z = std::make_shared<OperatorElement2>(phi_map(ops[oi].op));
    for (size_t ci = 0; ci < cd_samples.size(); ++ci)
      for (size_t di = ci; di < cd_samples.size(); ++di)
        instances.push_back([&, oi, ci, di, z]() {
          BurnsideElement sum = cd_samples[ci].second + cd_samples[di].second;
          BurnsideElement lhs = theta(ops[oi].op, sum);
          BurnsideElement rhs = theta2_from_restricted(*z, rp[ci], rp[di], g);
          return ReportEntry{"additive.ii",
                             "x=" + ops[oi].name + " c=" + cd_samples[ci].first + " d=" +
                                 cd_samples[di].first,
                             lhs == rhs, lhs.to_string(), rhs.to_string()};
        });
  }

  std::vector<ReportEntry> results(instances.size());
  parallel_instances(static_cast<int>(instances.size()), threads,
                     [&](int i) { results[i] = instances[i](); });
  for (auto& e : results) rep.entries.push_back(std::move(e));
  return rep;
}

Report check_morphisms(const GroupHom& phi, int degree_bound, int threads) {
  Report rep;
  rep.title = "restriction along a homomorphism is a beta-ring morphism";

  auto ops = basis_operators(degree_bound);
  const SubgroupClassTable& t = subgroup_classes(phi.target);
  std::vector<std::function<ReportEntry()>> instances;
  for (size_t oi = 0; oi < ops.size(); ++oi)
    for (int cls = 0; cls < t.num_classes(); ++cls)
      instances.push_back([&, oi, cls]() {
        BurnsideElement a = BurnsideElement::basis(phi.target, cls);
        BurnsideElement lhs = restrict_along(phi, theta(ops[oi].op, a));
        BurnsideElement rhs = theta(ops[oi].op, restrict_along(phi, a));
        return ReportEntry{"morphism.restriction",
                           "x=" + ops[oi].name + " a=[" + t.class_label(cls) + "]", lhs == rhs,
                           lhs.to_string(), rhs.to_string()};
      });

  std::vector<ReportEntry> results(instances.size());
  parallel_instances(static_cast<int>(instances.size()), threads,
                     [&](int i) { results[i] = instances[i](); });
  for (auto& e : results) rep.entries.push_back(std::move(e));
  return rep;
}

Report transfer_morphism_demo() {
  Report rep;
  rep.title = "transfers are not beta-ring morphisms (counterexample search)";
  GroupPtr s2 = symmetric_group(2);
  Subgroup triv = trivial_subgroup(s2);
  auto [h, incl] = subgroup_as_group(triv);
  auto ops = basis_operators(2);
  const SubgroupClassTable& th = subgroup_classes(h);
  for (const auto& op : ops) {
    for (int cls = 0; cls < th.num_classes(); ++cls) {
      BurnsideElement a = BurnsideElement::basis(h, cls);
      BurnsideElement lhs = theta(op.op, transfer_along(incl, a));
      BurnsideElement rhs = transfer_along(incl, theta(op.op, a));
      if (lhs != rhs) {
        rep.add("transfer.not_morphism",
                "found: x=" + op.name + " a=[" + th.class_label(cls) + "] over tr_e^S2", true,
                lhs.to_string(), rhs.to_string());
        return rep;
      }
    }
  }
  rep.add("transfer.not_morphism", "no counterexample found in the searched range", false);
  return rep;
}

// --- obstructions ----------------------------------------------------------------

namespace {

std::vector<mpz_class> prime_factors(mpz_class n) {
  std::vector<mpz_class> out;
  for (mpz_class p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

mpz_class binomial(const mpz_class& n, unsigned long k) {
  mpz_class r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

GSet bag_of_points(long long n) {
  GroupPtr e = trivial_group();
  std::vector<int32_t> table(n);
  for (long long i = 0; i < n; ++i) table[i] = static_cast<int32_t>(i);
  return GSet(e, n, std::move(table));
}

}  // namespace

Report obstruction_zmodn(const mpz_class& n) {
  if (n < 2) throw Error("obstruction check needs n >= 2");
  Report rep;
  rep.title = "power operations do not descend to A (x) Z/" + n.get_str();

  std::vector<mpz_class> primes = prime_factors(n);
  if (!primes.front().fits_sint_p() ||
      primes.front().get_si() > limits().symmetric_degree)
    throw GroupTooLarge("smallest prime factor " + primes.front().get_str() +
                        " exceeds the symmetric degree bound");
  bool obstructed = false;
  for (const mpz_class& p : primes) {
    if (!p.fits_sint_p() || p.get_si() > limits().symmetric_degree) {
      rep.notes.push_back("prime factor " + p.get_str() + " skipped: S_p beyond bounds");
      continue;
    }
    int pi = static_cast<int>(p.get_si());
    long long carrier = 1;
    bool over = false;
    for (int i = 0; i < pi; ++i) {
      carrier *= n.get_si();
      if (carrier > limits().set_size) over = true;
    }
    if (over) {
      rep.notes.push_back("prime factor " + p.get_str() + " skipped: [n]^p beyond the set bound");
      continue;
    }
    GSet npts = bag_of_points(n.get_si());
    GSet power = power_set(npts, pi);
    long long free_orbits = 0;
    long group_order = power.group()->order();
    for (const Orbit& orb : orbits(power))
      if (orb.size == group_order) ++free_orbits;

    mpz_class expected = binomial(n, static_cast<unsigned long>(pi));
    rep.add("zmod.free_coefficient",
            "p=" + p.get_str() + ": free-class coefficient of P^p(n*1) equals C(n,p)",
            mpz_ll(free_orbits) == expected, std::to_string(free_orbits), expected.get_str());
    mpz_class q = n / p;
    rep.add("zmod.divisible_by_n_over_p", "p=" + p.get_str() + ": C(n,p) = 0 mod n/p",
            expected % q == 0, mpz_class(expected % q).get_str(), "0");
    bool fails_n = expected % n != 0;
    rep.add("zmod.not_divisible_by_n", "p=" + p.get_str() + ": C(n,p) != 0 mod n", fails_n,
            mpz_class(expected % n).get_str(), "nonzero");
    if (fails_n) obstructed = true;
  }

  // truncated operations below the smallest prime factor
  const mpz_class& pmin = primes.front();
  for (int k = 1; k < pmin.get_si(); ++k) {
    BurnsideElement d = decompose(power_set(bag_of_points(n.get_si()), k));
    bool all_divisible = true;
    for (const auto& [cls, v] : d.integral_coeffs())
      if (v % n != 0) all_divisible = false;
    rep.add("zmod.truncated",
            "k=" + std::to_string(k) + " < p=" + pmin.get_str() +
                ": every coefficient of P^k(n*1) is divisible by n",
            all_divisible, d.to_string(), "all coefficients = 0 mod " + n.get_str());
  }

  rep.notes.push_back(obstructed
                          ? "verdict: obstructed, no global power structure on A (x) Z/" +
                                n.get_str()
                          : "verdict: no obstruction found at the checked primes");
  return rep;
}

Report obstruction_gaussian() {
  Report rep;
  rep.title = "P^2(-1) = t-1 is not a square in A(S2) (x) Z[i]";

  GroupPtr e = trivial_group();
  GroupPtr s2 = symmetric_group(2);
  BurnsideElement minus_one = -BurnsideElement::unit(e);
  BurnsideElement p2 = power(minus_one, 2);
  BurnsideElement t_elem = BurnsideElement::basis(s2, 0);  // the free class
  BurnsideElement expected = t_elem - BurnsideElement::unit(s2);
  rep.add("gaussian.p2_of_minus_one", "P^2(-1) via the negation recursion", p2 == expected,
          p2.to_string(), expected.to_string());

  // square roots of -1 in Z[i]: |b|^2 = 1, so scan the units
  std::vector<Scalar> roots;
  for (int re = -1; re <= 1; ++re)
    for (int im = -1; im <= 1; ++im) {
      Scalar b = Scalar::gaussian(re, im);
      if (b * b == Scalar::gaussian(-1, 0)) roots.push_back(b);
    }
  bool roots_ok = roots.size() == 2;
  std::string roots_str;
  for (const Scalar& b : roots) roots_str += b.to_string() + " ";
  rep.add("gaussian.roots_of_minus_one", "solutions of b^2 = -1 in Z[i]", roots_ok, roots_str,
          "i -i");

  // (a t + b)^2 = 2a(a+b) t + b^2, so a solution needs 2a(a+b) = 1;
  // |2a(a+b)| = 1 forces |a| <= 1, scan exactly
  bool found = false;
  std::string witness;
  for (const Scalar& b : roots)
    for (int re = -1; re <= 1; ++re)
      for (int im = -1; im <= 1; ++im) {
        Scalar a = Scalar::gaussian(re, im);
        Scalar two_a_ab = Scalar::gaussian(2, 0) * a * (a + b);
        if (two_a_ab == Scalar::gaussian(1, 0)) {
          found = true;
          witness = "a=" + a.to_string() + " b=" + b.to_string();
        }
      }
  rep.add("gaussian.no_integral_square_root", "no a, b in Z[i] with (a t + b)^2 = t - 1", !found,
          found ? witness : "none", "none");

  // over Q[i] with 2 inverted: a = (1-i)/2, b = i
  mpq_class are(1, 2), aim(-1, 2);  // a = 1/2 - i/2
  mpq_class bre(0), bim(1);
  // 2a(a+b) with exact rational Gaussian arithmetic
  auto gmul = [](const mpq_class& xr, const mpq_class& xi, const mpq_class& yr,
                 const mpq_class& yi) {
    return std::make_pair(mpq_class(xr * yr - xi * yi), mpq_class(xr * yi + xi * yr));
  };
  auto [sr, si] = gmul(are, aim, are + bre, aim + bim);
  bool witness_ok = (2 * sr == 1) && (2 * si == 0);
  // and b^2 = -1
  auto [br2, bi2] = gmul(bre, bim, bre, bim);
  witness_ok = witness_ok && br2 == -1 && bi2 == 0;
  rep.add("gaussian.witness_after_inverting_2",
          "a=(1-i)/2, b=i solves (a t + b)^2 = t - 1 over Q[i]", witness_ok,
          "2a(a+b)=" + sr.get_str() + "+" + si.get_str() + "i, b^2=" + br2.get_str(), "1, -1");

  rep.notes.push_back(
      "verdict: t-1 has no square root over Z[i]; it acquires one after inverting 2");
  return rep;
}

Report check_induced_candidate(GroupPtr g, const mpz_class& n, int degree_bound) {
  Report rep;
  rep.title = "does P^m descend to A(" + group_name(g) + ") (x) Z/" + n.get_str() + "?";

  const SubgroupClassTable& t = subgroup_classes(g);
  CoeffRing zn = CoeffRing::residues(n);
  std::vector<std::pair<std::string, BurnsideElement>> xs;
  xs.emplace_back("0", BurnsideElement::zero(g));
  for (int i = 0; i < t.num_classes(); ++i)
    xs.emplace_back("[" + t.class_label(i) + "]", BurnsideElement::basis(g, i));
  std::vector<std::pair<std::string, BurnsideElement>> ys;
  for (int i = 0; i < t.num_classes(); ++i)
    ys.emplace_back("[" + t.class_label(i) + "]", BurnsideElement::basis(g, i));

  if (!n.fits_slong_p()) throw Error("modulus too large");
  Scalar nz(CoeffRing::integers(), n);

  for (int m = 1; m <= degree_bound; ++m) {
    for (const auto& [xname, x] : xs)
      for (const auto& [yname, y] : ys) {
        BurnsideElement shifted = x + y.scaled(nz);
        BurnsideElement lhs = power(shifted, m);
        BurnsideElement rhs = power(x, m);
        bool ok = extend_coefficients(lhs, zn) == extend_coefficients(rhs, zn);
        rep.add("candidate.m" + std::to_string(m),
                "P^" + std::to_string(m) + "(x + n y) = P^" + std::to_string(m) +
                    "(x) mod n at x=" + xname + " y=" + yname,
                ok, extend_coefficients(lhs, zn).to_string(),
                extend_coefficients(rhs, zn).to_string());
      }
  }
  return rep;
}

}  // namespace burnside
