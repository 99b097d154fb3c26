#include "burnside/gset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "burnside/errors.hpp"
#include "burnside/limits.hpp"

namespace burnside {

namespace {

void check_carrier_bounds(const GroupPtr& g, long long size) {
  if (size > limits().set_size)
    throw SetTooLarge("carrier size " + std::to_string(size) + " exceeds bound " +
                      std::to_string(limits().set_size));
  if (g->order() * size > limits().table_entries)
    throw SetTooLarge("action table " + std::to_string(g->order() * size) +
                      " cells exceeds bound " + std::to_string(limits().table_entries));
}

}  // namespace

GSet::GSet(GroupPtr group, long long size, std::vector<int32_t> table)
    : group_(std::move(group)), size_(size) {
  if (static_cast<long long>(table.size()) != group_->order() * size_)
    throw Error("action table has wrong size");
  table_ = std::make_shared<const std::vector<int32_t>>(std::move(table));
  const int id = group_->identity();
  for (long long x = 0; x < size_; ++x)
    if (act(id, x) != x) throw Error("identity does not act trivially");
  const auto& gens = group_->generator_indices();
  for (int a : gens) {
    for (int b : gens) {
      int ab = group_->mul(a, b);
      for (long long x = 0; x < size_; ++x)
        if (act(ab, x) != act(a, act(b, x))) throw Error("action table is not multiplicative");
    }
  }
#ifndef NDEBUG
  if (group_->order() * size_ <= 100000) check_full_associativity();
#endif
}

void GSet::check_full_associativity() const {
  const long n = group_->order();
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      int ab = group_->mul(static_cast<int>(a), static_cast<int>(b));
      for (long long x = 0; x < size_; ++x)
        if (act(ab, x) != act(static_cast<int>(a), act(static_cast<int>(b), x)))
          throw Error("action table fails full associativity check");
    }
}

std::vector<Orbit> orbits(const GSet& x) {
  const GroupPtr& g = x.group();
  std::vector<Orbit> out;
  std::vector<char> seen(x.size(), 0);
  const auto& gens = g->generator_indices();
  std::vector<long long> stack;
  for (long long p = 0; p < x.size(); ++p) {
    if (seen[p]) continue;
    long long orbit_size = 0;
    stack.assign(1, p);
    seen[p] = 1;
    while (!stack.empty()) {
      long long q = stack.back();
      stack.pop_back();
      ++orbit_size;
      for (int gen : gens) {
        long long r = x.act(gen, q);
        if (!seen[r]) {
          seen[r] = 1;
          stack.push_back(r);
        }
      }
    }
    std::vector<int> stab;
    for (long e = 0; e < g->order(); ++e)
      if (x.act(static_cast<int>(e), p) == p) stab.push_back(static_cast<int>(e));
    Orbit orb{p, orbit_size, Subgroup(g, std::move(stab))};
    if (orb.size * orb.stabilizer.order() != g->order())
      throw Error("orbit-stabilizer violated");  // would indicate a broken table
    out.push_back(std::move(orb));
  }
  return out;
}

long long fixed_points_count(const GSet& x, const Subgroup& h) {
  if (h.parent != x.group()) throw Error("fixed points: subgroup of a different group");
  std::vector<int> gens = subgroup_generators(h);
  long long count = 0;
  for (long long p = 0; p < x.size(); ++p) {
    bool fixed = true;
    for (int gen : gens)
      if (x.act(gen, p) != p) {
        fixed = false;
        break;
      }
    count += fixed;
  }
  return count;
}

GSet cosets_gset(GroupPtr g, const Subgroup& h) {
  if (h.parent != g) throw Error("cosets: subgroup of a different group");
  CosetDecomposition dec = left_cosets(g, h.members);
  const long long k = static_cast<long long>(dec.reps.size());
  check_carrier_bounds(g, k);
  std::vector<int32_t> table(g->order() * k);
  for (long e = 0; e < g->order(); ++e)
    for (long long c = 0; c < k; ++c)
      table[e * k + c] = dec.coset_of[g->mul(static_cast<int>(e), dec.reps[c])];
  return GSet(std::move(g), k, std::move(table));
}

GSet point_gset(GroupPtr g) {
  std::vector<int32_t> table(g->order(), 0);
  return GSet(std::move(g), 1, std::move(table));
}

GSet pullback(const GroupHom& alpha, const GSet& y) {
  if (alpha.target != y.group()) throw Error("pullback: hom target mismatch");
  const GroupPtr& s = alpha.source;
  check_carrier_bounds(s, y.size());
  std::vector<int32_t> table(s->order() * y.size());
  for (long e = 0; e < s->order(); ++e) {
    int img = alpha.image_of[e];
    for (long long x = 0; x < y.size(); ++x) table[e * y.size() + x] = y.act(img, x);
  }
  return GSet(s, y.size(), std::move(table));
}

GSet disjoint_union(const GSet& x, const GSet& y) {
  if (x.group() != y.group()) throw Error("disjoint union: groups differ");
  const GroupPtr& g = x.group();
  long long n = x.size() + y.size();
  check_carrier_bounds(g, n);
  std::vector<int32_t> table(g->order() * n);
  for (long e = 0; e < g->order(); ++e) {
    for (long long p = 0; p < x.size(); ++p) table[e * n + p] = x.act(static_cast<int>(e), p);
    for (long long p = 0; p < y.size(); ++p)
      table[e * n + x.size() + p] = x.size() + y.act(static_cast<int>(e), p);
  }
  return GSet(g, n, std::move(table));
}

GSet power_set(const GSet& x, int m) {
  const WreathGroup& w = wreath_product(m, x.group());
  long long n = 1;
  for (int i = 0; i < m; ++i) {
    if (x.size() != 0 && n > limits().set_size / std::max<long long>(x.size(), 1))
      throw SetTooLarge("power carrier exceeds bound");
    n *= x.size();
  }
  check_carrier_bounds(w.group, n);

  std::vector<int32_t> table(w.group->order() * n);
  std::vector<int> digits(m);
  for (long e = 0; e < w.group->order(); ++e) {
    auto [sigma, tuple] = w.decode(static_cast<int>(e));
    const Perm& sp = w.top->element(sigma);
    Perm sinv = perm_inverse(sp);
    for (long long p = 0; p < n; ++p) {
      long long t = p;
      for (int i = 0; i < m; ++i) {
        digits[i] = static_cast<int>(t % x.size());
        t /= x.size();
      }
      long long q = 0;
      for (int j = m - 1; j >= 0; --j)
        q = q * x.size() + x.act(tuple[j], digits[sinv[j]]);
      table[e * n + p] = static_cast<int32_t>(q);
    }
  }
  return GSet(w.group, n, std::move(table));
}

GSet induce_along(const GroupHom& alpha, const GSet& x) {
  if (alpha.source != x.group()) throw Error("induce: set lives over a different group");
  if (!alpha.is_injective()) throw Error("induce: homomorphism must be injective");
  const GroupPtr& g = alpha.target;

  std::vector<int> image(alpha.image_of);
  std::sort(image.begin(), image.end());
  CosetDecomposition dec = left_cosets(g, image);
  // inverse of alpha on its image
  std::map<int, int> back;
  for (long i = 0; i < alpha.source->order(); ++i) back[alpha.image_of[i]] = static_cast<int>(i);

  const long long k = static_cast<long long>(dec.reps.size());
  const long long n = k * x.size();
  check_carrier_bounds(g, n);
  std::vector<int32_t> table(g->order() * n);
  for (long e = 0; e < g->order(); ++e) {
    for (long long c = 0; c < k; ++c) {
      int t = g->mul(static_cast<int>(e), dec.reps[c]);
      int c2 = dec.coset_of[t];
      int h = back.at(g->mul(g->inv(dec.reps[c2]), t));
      for (long long p = 0; p < x.size(); ++p)
        table[e * n + (c * x.size() + p)] =
            static_cast<int32_t>(c2 * x.size() + x.act(h, p));
    }
  }
  return GSet(g, n, std::move(table));
}

GSet induce(const Subgroup& h, const GSet& x) {
  auto [hg, incl] = subgroup_as_group(h);
  if (x.group() != hg) throw Error("induce: set does not live over the subgroup");
  return induce_along(incl, x);
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(long long n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

}  // namespace

GSet coinduce_deflate(const GroupHom& f, const GSet& x) {
  if (f.source != x.group()) throw Error("deflate: set lives over a different group");
  const GroupPtr& k = f.target;
  const long long nodes = k->order() * x.size();
  if (nodes > limits().table_entries) throw SetTooLarge("deflation intermediate too large");

  // node (a, p) = a * |X| + p; relations (a f(g), p) ~ (a, g p) for generators g
  UnionFind uf(nodes);
  for (long a = 0; a < k->order(); ++a) {
    for (int gen : f.source->generator_indices()) {
      int af = k->mul(static_cast<int>(a), f.image_of[gen]);
      for (long long p = 0; p < x.size(); ++p)
        uf.unite(static_cast<int>(af * x.size() + p),
                 static_cast<int>(a * x.size() + x.act(gen, p)));
    }
  }
  std::map<int, int> cls;
  for (long long node = 0; node < nodes; ++node) {
    int root = uf.find(static_cast<int>(node));
    cls.emplace(root, static_cast<int>(cls.size()));
  }
  const long long n = static_cast<long long>(cls.size());
  check_carrier_bounds(k, n);
  // representative node for each class
  std::vector<long long> rep(n);
  for (long long node = 0; node < nodes; ++node) {
    int c = cls.at(uf.find(static_cast<int>(node)));
    rep[c] = node;
  }
  std::vector<int32_t> table(k->order() * n);
  for (long e = 0; e < k->order(); ++e)
    for (long long c = 0; c < n; ++c) {
      long long a = rep[c] / x.size(), p = rep[c] % x.size();
      long long moved = k->mul(static_cast<int>(e), static_cast<int>(a)) * x.size() + p;
      table[e * n + c] = cls.at(uf.find(static_cast<int>(moved)));
    }
  return GSet(k, n, std::move(table));
}

GSet external_set_product(const ProductGroup& prod, const GSet& x, const GSet& y) {
  if (x.group() != prod.left || y.group() != prod.right)
    throw Error("external product: factor groups mismatch");
  const long long n = x.size() * y.size();
  check_carrier_bounds(prod.group, n);
  std::vector<int32_t> table(prod.group->order() * n);
  for (long e = 0; e < prod.group->order(); ++e) {
    int a = prod.pr1.image_of[e];
    int b = prod.pr2.image_of[e];
    for (long long q = 0; q < y.size(); ++q) {
      long long yq = static_cast<long long>(y.act(b, q)) * x.size();
      for (long long p = 0; p < x.size(); ++p)
        table[e * n + (q * x.size() + p)] = static_cast<int32_t>(yq + x.act(a, p));
    }
  }
  return GSet(prod.group, n, std::move(table));
}

GSet quotient_by_subgroup(const GSet& x, const Subgroup& h, const GroupHom& psi) {
  if (h.parent != x.group() || psi.target != x.group())
    throw Error("quotient: subgroup or hom over a different group");
  for (int gen : psi.source->generator_indices()) {
    int im = psi.image_of[gen];
    std::vector<int> conj = conjugate_members(h, im);
    if (conj != h.members) throw Error("quotient: residual action does not normalize H");
  }
  // H-orbit classes
  std::vector<int> cls(x.size(), -1);
  std::vector<long long> rep;
  std::vector<int> hgens = subgroup_generators(h);
  std::vector<long long> stack;
  for (long long p = 0; p < x.size(); ++p) {
    if (cls[p] >= 0) continue;
    int c = static_cast<int>(rep.size());
    rep.push_back(p);
    stack.assign(1, p);
    cls[p] = c;
    while (!stack.empty()) {
      long long q = stack.back();
      stack.pop_back();
      for (int gen : hgens) {
        long long r = x.act(gen, q);
        if (cls[r] < 0) {
          cls[r] = c;
          stack.push_back(r);
        }
      }
    }
  }
  const long long n = static_cast<long long>(rep.size());
  const GroupPtr& g = psi.source;
  check_carrier_bounds(g, n);
  std::vector<int32_t> table(g->order() * n);
  for (long e = 0; e < g->order(); ++e) {
    int im = psi.image_of[e];
    for (long long c = 0; c < n; ++c) table[e * n + c] = cls[x.act(im, rep[c])];
  }
  return GSet(g, n, std::move(table));
}

// --- virtual G-sets ----------------------------------------------------------

VirtualGSet VirtualGSet::of(GSet x, long long mult) {
  GroupPtr g = x.group();
  return {std::move(g), {{std::move(x), mult}}};
}

VirtualGSet VirtualGSet::operator+(const VirtualGSet& o) const {
  if (group != o.group) throw Error("virtual sum: groups differ");
  VirtualGSet r = *this;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  return r;
}

VirtualGSet VirtualGSet::operator-() const { return scaled(-1); }

VirtualGSet VirtualGSet::scaled(long long c) const {
  VirtualGSet r = *this;
  if (c == 0) r.terms.clear();
  for (auto& t : r.terms) t.second *= c;
  return r;
}

bool VirtualGSet::effective() const {
  for (const auto& t : terms)
    if (t.second < 0) return false;
  return true;
}

VirtualGSet pullback(const GroupHom& alpha, const VirtualGSet& x) {
  VirtualGSet r = VirtualGSet::zero(alpha.source);
  for (const auto& [set, mult] : x.terms) r.terms.emplace_back(pullback(alpha, set), mult);
  return r;
}

VirtualGSet induce_along(const GroupHom& alpha, const VirtualGSet& x) {
  VirtualGSet r = VirtualGSet::zero(alpha.target);
  for (const auto& [set, mult] : x.terms) r.terms.emplace_back(induce_along(alpha, set), mult);
  return r;
}

VirtualGSet coinduce_deflate(const GroupHom& f, const VirtualGSet& x) {
  VirtualGSet r = VirtualGSet::zero(f.target);
  for (const auto& [set, mult] : x.terms) r.terms.emplace_back(coinduce_deflate(f, set), mult);
  return r;
}

VirtualGSet external_product(const ProductGroup& prod, const VirtualGSet& x,
                             const VirtualGSet& y) {
  VirtualGSet r = VirtualGSet::zero(prod.group);
  for (const auto& [xs, xm] : x.terms)
    for (const auto& [ys, ym] : y.terms)
      r.terms.emplace_back(external_set_product(prod, xs, ys), xm * ym);
  return r;
}

std::vector<std::pair<Subgroup, long long>> stabilizer_class_multiplicities(
    const VirtualGSet& x) {
  std::vector<std::pair<Subgroup, long long>> classes;
  std::map<std::vector<int>, int> by_members;  // stabilizer member set -> class slot
  for (const auto& [set, mult] : x.terms) {
    if (mult == 0) continue;
    for (const Orbit& orb : orbits(set)) {
      auto it = by_members.find(orb.stabilizer.members);
      int slot = -1;
      if (it != by_members.end()) {
        slot = it->second;
      } else {
        for (size_t c = 0; c < classes.size(); ++c) {
          if (is_conjugate(classes[c].first, orb.stabilizer)) {
            slot = static_cast<int>(c);
            break;
          }
        }
        if (slot < 0) {
          slot = static_cast<int>(classes.size());
          classes.emplace_back(orb.stabilizer, 0);
        }
        by_members.emplace(orb.stabilizer.members, slot);
      }
      classes[slot].second += mult;
    }
  }
  std::erase_if(classes, [](const auto& c) { return c.second == 0; });
  return classes;
}

bool virtual_equal(const VirtualGSet& a, const VirtualGSet& b) {
  if (a.group != b.group) return false;
  return stabilizer_class_multiplicities(a + (-b)).empty();
}

}  // namespace burnside
