#include "burnside/group.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <unordered_map>

#include "burnside/errors.hpp"
#include "burnside/limits.hpp"

namespace burnside {

namespace {

uint64_t fnv64(const void* data, size_t len, uint64_t seed = 14695981039346656037ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  uint64_t h = seed;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

uint64_t hash_elements(int degree, const std::vector<Perm>& elems) {
  uint64_t h = fnv64(&degree, sizeof degree);
  for (const Perm& p : elems) h = fnv64(p.data(), p.size() * sizeof(int), h);
  return h;
}

struct GroupRegistry {
  std::mutex mu;
  std::unordered_map<uint64_t, std::vector<GroupPtr>> buckets;
};

GroupRegistry& registry() {
  static GroupRegistry r;
  return r;
}

constexpr long kMulTableMaxOrder = 1500;

}  // namespace

void PermGroup::build_tables() const {
  const long n = order();
  inv_.resize(n);
  for (long i = 0; i < n; ++i) inv_[i] = index_of(perm_inverse(elements_[i]));
  if (n <= kMulTableMaxOrder) {
    mul_table_.resize(n * n);
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j)
        mul_table_[i * n + j] = index_of(perm_compose(elements_[i], elements_[j]));
  }
}

int PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

int PermGroup::mul(int i, int j) const {
  std::call_once(tables_once_, [this] { build_tables(); });
  if (!mul_table_.empty()) return mul_table_[static_cast<long>(i) * order() + j];
  return index_of(perm_compose(elements_[i], elements_[j]));
}

int PermGroup::inv(int i) const {
  std::call_once(tables_once_, [this] { build_tables(); });
  return inv_[i];
}

std::string PermGroup::fingerprint() const {
  std::string s = "d" + std::to_string(degree_) + ";";
  std::vector<Perm> gens;
  for (int g : generators_) gens.push_back(elements_[g]);
  std::sort(gens.begin(), gens.end());
  for (const Perm& p : gens) {
    for (int v : p) s += std::to_string(v) + ",";
    s += ";";
  }
  return s;
}

GroupPtr intern_group(int degree, std::vector<Perm> elements, std::vector<Perm> generators,
                      std::string label) {
  if (degree > limits().degree)
    throw GroupTooLarge("degree " + std::to_string(degree) + " exceeds bound " +
                        std::to_string(limits().degree));
  if (static_cast<long>(elements.size()) > limits().group_order)
    throw GroupTooLarge("order " + std::to_string(elements.size()) + " exceeds bound " +
                        std::to_string(limits().group_order));
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  uint64_t key = hash_elements(degree, elements);
  auto& reg = registry();
  std::scoped_lock lock(reg.mu);
  for (const GroupPtr& g : reg.buckets[key])
    if (g->degree() == degree && g->elements() == elements) return g;

  auto g = std::shared_ptr<PermGroup>(new PermGroup());
  g->degree_ = degree;
  g->elements_ = std::move(elements);
  g->label_ = std::move(label);
  g->id_index_ = g->index_of(perm_identity(degree));
  if (g->id_index_ < 0) throw Error("element list does not contain the identity");

  if (generators.empty()) {
    // greedy generating set, for the fingerprint and display only
    std::vector<char> in_closure(g->elements_.size(), 0);
    std::vector<int> closed = {g->id_index_};
    in_closure[g->id_index_] = 1;
    for (size_t next = 0; closed.size() < g->elements_.size();) {
      while (next < g->elements_.size() && in_closure[next]) ++next;
      g->generators_.push_back(static_cast<int>(next));
      // re-close
      std::vector<int> work = closed;
      work.push_back(static_cast<int>(next));
      in_closure[next] = 1;
      for (size_t w = 0; w < work.size(); ++w) {
        for (int gen : g->generators_) {
          Perm prod = perm_compose(g->elements_[work[w]], g->elements_[gen]);
          int idx = g->index_of(prod);
          if (!in_closure[idx]) {
            in_closure[idx] = 1;
            work.push_back(idx);
          }
        }
      }
      closed = std::move(work);
    }
  } else {
    for (const Perm& p : generators) {
      int idx = g->index_of(p);
      if (idx < 0) throw Error("generator not contained in element list");
      g->generators_.push_back(idx);
    }
  }
  GroupPtr out = g;
  reg.buckets[key].push_back(out);
  return out;
}

GroupPtr closure(int degree, const std::vector<Perm>& generators, std::string label) {
  for (const Perm& p : generators) {
    if (static_cast<int>(p.size()) != degree || !is_permutation(p))
      throw Error("invalid generator for degree " + std::to_string(degree));
  }
  std::vector<Perm> elems = {perm_identity(degree)};
  std::map<Perm, int> seen;
  seen[elems[0]] = 0;
  for (size_t w = 0; w < elems.size(); ++w) {
    for (const Perm& gen : generators) {
      Perm prod = perm_compose(elems[w], gen);
      if (seen.emplace(prod, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(prod));
        if (static_cast<long>(elems.size()) > limits().group_order)
          throw GroupTooLarge("closure exceeds group order bound " +
                              std::to_string(limits().group_order));
      }
    }
  }
  return intern_group(degree, std::move(elems), generators, std::move(label));
}

GroupPtr symmetric_group(int m) {
  if (m < 0) throw Error("symmetric_group: negative degree");
  if (m > limits().symmetric_degree)
    throw GroupTooLarge("S" + std::to_string(m) + " exceeds symmetric degree bound " +
                        std::to_string(limits().symmetric_degree));
  std::vector<Perm> gens;
  if (m >= 2) {
    Perm t = perm_identity(m);
    std::swap(t[0], t[1]);
    gens.push_back(t);
  }
  if (m >= 3) {
    Perm c(m);
    for (int i = 0; i < m; ++i) c[i] = (i + 1) % m;
    gens.push_back(c);
  }
  return closure(m, gens, "S" + std::to_string(m));
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw Error("cyclic_group: order must be >= 1");
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.push_back(c);
  }
  return closure(n, gens, "C" + std::to_string(n));
}

GroupPtr trivial_group() { return closure(1, {}, "e"); }

// --- subgroups ---------------------------------------------------------------

Subgroup::Subgroup(GroupPtr parent_, std::vector<int> members_)
    : parent(std::move(parent_)), members(std::move(members_)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || !std::binary_search(members.begin(), members.end(), parent->identity()))
    throw Error("subgroup must contain the identity");
  if (parent->order() % order() != 0)
    throw Error("Lagrange violated: " + std::to_string(order()) + " does not divide " +
                std::to_string(parent->order()));
#ifndef NDEBUG
  for (int a : members)
    for (int b : members)
      assert(std::binary_search(members.begin(), members.end(), parent->mul(a, b)) &&
             "subgroup not closed under multiplication");
#endif
}

bool Subgroup::contains(int elem) const {
  return std::binary_search(members.begin(), members.end(), elem);
}

Subgroup whole_group(GroupPtr g) {
  std::vector<int> all(g->order());
  for (long i = 0; i < g->order(); ++i) all[i] = static_cast<int>(i);
  return Subgroup(std::move(g), std::move(all));
}

Subgroup trivial_subgroup(GroupPtr g) {
  int id = g->identity();
  return Subgroup(std::move(g), {id});
}

static std::vector<int> close_member_set(const GroupPtr& g, std::vector<int> seed) {
  std::vector<char> in(g->order(), 0);
  std::vector<int> work;
  auto push = [&](int e) {
    if (!in[e]) {
      in[e] = 1;
      work.push_back(e);
    }
  };
  push(g->identity());
  for (int s : seed) push(s);
  for (size_t w = 0; w < work.size(); ++w)
    for (int s : seed) push(g->mul(work[w], s));
  std::sort(work.begin(), work.end());
  return work;
}

Subgroup subgroup_generated(GroupPtr g, const std::vector<int>& seed) {
  return Subgroup(g, close_member_set(g, seed));
}

std::vector<int> subgroup_generators(const Subgroup& h) {
  std::vector<int> gens;
  std::vector<int> closed = {h.parent->identity()};
  while (static_cast<long>(closed.size()) < h.order()) {
    int next = -1;
    for (int m : h.members) {
      if (!std::binary_search(closed.begin(), closed.end(), m)) {
        next = m;
        break;
      }
    }
    gens.push_back(next);
    closed = close_member_set(h.parent, gens);
  }
  return gens;
}

std::pair<GroupPtr, GroupHom> subgroup_as_group(const Subgroup& h) {
  std::vector<Perm> elems;
  elems.reserve(h.members.size());
  for (int m : h.members) elems.push_back(h.parent->element(m));
  // members are sorted by parent index and parent elements are sorted, so
  // the new element list is already sorted and indices align with members.
  GroupPtr g = intern_group(h.parent->degree(), elems, {});
  GroupHom incl(g, h.parent, h.members);
  return {g, incl};
}

// --- homomorphisms -----------------------------------------------------------

GroupHom::GroupHom(GroupPtr source_, GroupPtr target_, std::vector<int> image_of_)
    : source(std::move(source_)), target(std::move(target_)), image_of(std::move(image_of_)) {
  if (static_cast<long>(image_of.size()) != source->order())
    throw Error("hom image table has wrong size");
  if (image_of[source->identity()] != target->identity())
    throw Error("hom does not preserve the identity");
  // image_of(gh) = image_of(g) image_of(h) for every generator g and every h;
  // by induction on the word length of the left factor this is the full
  // multiplicativity check
  const long n = source->order();
  for (int g : source->generator_indices())
    for (long b = 0; b < n; ++b)
      if (image_of[source->mul(g, static_cast<int>(b))] !=
          target->mul(image_of[g], image_of[b]))
        throw Error("hom is not multiplicative");
}

bool GroupHom::is_injective() const {
  std::vector<int> sorted = image_of;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

GroupHom hom_identity(GroupPtr g) {
  std::vector<int> im(g->order());
  for (long i = 0; i < g->order(); ++i) im[i] = static_cast<int>(i);
  return GroupHom(g, g, std::move(im));
}

GroupHom hom_compose(const GroupHom& outer, const GroupHom& inner) {
  if (inner.target != outer.source) throw Error("hom composition mismatch");
  std::vector<int> im(inner.source->order());
  for (size_t i = 0; i < im.size(); ++i) im[i] = outer.image_of[inner.image_of[i]];
  return GroupHom(inner.source, outer.target, std::move(im));
}

GroupHom hom_from_fn(GroupPtr source, GroupPtr target, const std::function<int(int)>& fn) {
  std::vector<int> im(source->order());
  for (long i = 0; i < source->order(); ++i) im[i] = fn(static_cast<int>(i));
  return GroupHom(std::move(source), std::move(target), std::move(im));
}

GroupHom hom_trivial(GroupPtr source, GroupPtr target) {
  std::vector<int> im(source->order(), target->identity());
  return GroupHom(std::move(source), std::move(target), std::move(im));
}

GroupHom sign_hom(GroupPtr sym) {
  GroupPtr s2 = symmetric_group(2);
  Perm flip = {1, 0};
  int odd = s2->index_of(flip);
  int even = s2->identity();
  return hom_from_fn(sym, s2,
                     [&](int i) { return perm_is_even(sym->element(i)) ? even : odd; });
}

GroupHom embed_by_carrier(GroupPtr sub, GroupPtr big) {
  if (sub->degree() != big->degree()) throw Error("embed_by_carrier: degree mismatch");
  std::vector<int> im(sub->order());
  for (long i = 0; i < sub->order(); ++i) {
    int idx = big->index_of(sub->element(static_cast<int>(i)));
    if (idx < 0) throw Error("embed_by_carrier: element not contained in target");
    im[i] = idx;
  }
  return GroupHom(std::move(sub), std::move(big), std::move(im));
}

GroupHom hom_by_point_bijection(GroupPtr source, GroupPtr target,
                                const std::vector<int>& point_map) {
  if (static_cast<int>(point_map.size()) != source->degree())
    throw Error("point map has wrong size");
  std::vector<int> im(source->order());
  for (long i = 0; i < source->order(); ++i) {
    const Perm& s = source->element(static_cast<int>(i));
    Perm t = perm_identity(target->degree());
    for (int x = 0; x < source->degree(); ++x) t[point_map[x]] = point_map[s[x]];
    int idx = target->index_of(t);
    if (idx < 0) throw Error("relabelled element not contained in target");
    im[i] = idx;
  }
  return GroupHom(std::move(source), std::move(target), std::move(im));
}

// --- products ----------------------------------------------------------------

namespace {

struct ProductKey {
  const PermGroup* l;
  const PermGroup* r;
  bool operator<(const ProductKey& o) const { return std::tie(l, r) < std::tie(o.l, o.r); }
};

std::mutex product_mu;
std::map<ProductKey, std::unique_ptr<ProductGroup>>& product_cache() {
  static std::map<ProductKey, std::unique_ptr<ProductGroup>> c;
  return c;
}

Perm juxtapose(const Perm& a, const Perm& b) {
  Perm p(a.size() + b.size());
  for (size_t x = 0; x < a.size(); ++x) p[x] = a[x];
  for (size_t x = 0; x < b.size(); ++x) p[a.size() + x] = static_cast<int>(a.size()) + b[x];
  return p;
}

}  // namespace

int ProductGroup::pair_index(int a, int b) const {
  return group->mul(incl1.image_of[a], incl2.image_of[b]);
}

const ProductGroup& direct_product(GroupPtr left, GroupPtr right) {
  ProductKey key{left.get(), right.get()};
  {
    std::scoped_lock lock(product_mu);
    auto it = product_cache().find(key);
    if (it != product_cache().end()) return *it->second;
  }

  long order = left->order() * right->order();
  if (order > limits().group_order)
    throw GroupTooLarge("product order " + std::to_string(order) + " exceeds bound");
  const int dl = left->degree();
  std::vector<Perm> elems;
  elems.reserve(order);
  for (const Perm& a : left->elements())
    for (const Perm& b : right->elements()) elems.push_back(juxtapose(a, b));
  std::string label;
  if (!left->label().empty() && !right->label().empty())
    label = left->label() + "x" + right->label();
  GroupPtr g = intern_group(dl + right->degree(), std::move(elems), {}, label);

  auto pg = std::make_unique<ProductGroup>(ProductGroup{
      g, left, right,
      hom_from_fn(g, left,
                  [&](int i) {
                    const Perm& p = g->element(i);
                    Perm a(p.begin(), p.begin() + dl);
                    return left->index_of(a);
                  }),
      hom_from_fn(g, right,
                  [&](int i) {
                    const Perm& p = g->element(i);
                    Perm b(p.size() - dl);
                    for (size_t x = 0; x < b.size(); ++x) b[x] = p[dl + x] - dl;
                    return right->index_of(b);
                  }),
      hom_from_fn(left, g,
                  [&](int a) {
                    return g->index_of(
                        juxtapose(left->element(a), perm_identity(right->degree())));
                  }),
      hom_from_fn(right, g, [&](int b) {
        return g->index_of(juxtapose(perm_identity(dl), right->element(b)));
      })});

  std::scoped_lock lock(product_mu);
  auto [it, inserted] = product_cache().emplace(key, std::move(pg));
  return *it->second;
}

GroupHom diagonal_hom(GroupPtr g) {
  const ProductGroup& p = direct_product(g, g);
  return hom_from_fn(g, p.group, [&](int i) { return p.pair_index(i, i); });
}

// --- wreath products ---------------------------------------------------------

namespace {

std::mutex wreath_mu;
std::map<std::pair<int, const PermGroup*>, std::unique_ptr<WreathGroup>>& wreath_cache() {
  static std::map<std::pair<int, const PermGroup*>, std::unique_ptr<WreathGroup>> c;
  return c;
}

}  // namespace

int WreathGroup::encode(int sigma, const std::vector<int>& base_elems) const {
  const int d = base->degree();
  const Perm& s = top->element(sigma);
  Perm w(static_cast<size_t>(m) * d);
  for (int i = 0; i < m; ++i) {
    int j = s[i];
    const Perm& gj = base->element(base_elems[j]);
    for (int x = 0; x < d; ++x) w[static_cast<size_t>(i) * d + x] = j * d + gj[x];
  }
  return group->index_of(w);
}

std::pair<int, std::vector<int>> WreathGroup::decode(int widx) const {
  const int d = base->degree();
  const Perm& w = group->element(widx);
  Perm s(m);
  std::vector<int> base_elems(m);
  for (int i = 0; i < m; ++i) {
    int j = w[static_cast<size_t>(i) * d] / d;
    s[i] = j;
    Perm g(d);
    for (int x = 0; x < d; ++x) g[x] = w[static_cast<size_t>(i) * d + x] - j * d;
    base_elems[j] = base->index_of(g);
  }
  return {top->index_of(s), base_elems};
}

const WreathGroup& wreath_product(int m, GroupPtr base) {
  if (m < 0) throw Error("wreath_product: negative m");
  if (m > 0 && base->degree() < 1) throw Error("wreath_product: base must act on >= 1 point");
  std::pair<int, const PermGroup*> key{m, base.get()};
  {
    std::scoped_lock lock(wreath_mu);
    auto it = wreath_cache().find(key);
    if (it != wreath_cache().end()) return *it->second;
  }

  GroupPtr top = symmetric_group(m);
  const int d = base->degree();

  // order m! * |G|^m, guarded before enumeration
  long order = top->order();
  for (int i = 0; i < m; ++i) {
    if (order > limits().group_order / std::max<long>(base->order(), 1) + 1)
      order = limits().group_order + 1;
    else
      order *= base->order();
  }
  if (order > limits().group_order)
    throw GroupTooLarge("wreath product order exceeds bound " +
                        std::to_string(limits().group_order));

  auto w = std::make_unique<WreathGroup>();
  w->m = m;
  w->top = top;
  w->base = base;

  std::vector<Perm> elems;
  elems.reserve(order);
  std::vector<int> tuple(m, 0);
  for (long s = 0; s < top->order(); ++s) {
    const Perm& sp = top->element(static_cast<int>(s));
    std::fill(tuple.begin(), tuple.end(), 0);
    while (true) {
      Perm wp(static_cast<size_t>(m) * d);
      for (int i = 0; i < m; ++i) {
        int j = sp[i];
        const Perm& gj = base->element(tuple[j]);
        for (int x = 0; x < d; ++x) wp[static_cast<size_t>(i) * d + x] = j * d + gj[x];
      }
      elems.push_back(std::move(wp));
      int pos = 0;
      while (pos < m && ++tuple[pos] == base->order()) tuple[pos++] = 0;
      if (pos == m) break;
    }
  }

  std::string label;
  if (!base->label().empty()) label = "S" + std::to_string(m) + "wr" + base->label();
  w->group = intern_group(m * d, std::move(elems), {}, label);

  w->incl_top = hom_from_fn(top, w->group, [&](int s) {
    std::vector<int> idtuple(m, base->identity());
    return w->encode(s, idtuple);
  });
  w->proj_top = hom_from_fn(w->group, top, [&](int widx) { return w->decode(widx).first; });
  for (int slot = 0; slot < m; ++slot) {
    w->slot.push_back(hom_from_fn(base, w->group, [&](int g) {
      std::vector<int> t(m, base->identity());
      t[slot] = g;
      return w->encode(top->identity(), t);
    }));
  }
  w->top_times_base = &direct_product(top, base);
  const ProductGroup& txb = *w->top_times_base;
  w->diag = hom_from_fn(txb.group, w->group, [&](int i) {
    int s = txb.pr1.image_of[i];
    int g = txb.pr2.image_of[i];
    std::vector<int> t(m, g);
    return w->encode(s, t);
  });

  std::scoped_lock lock(wreath_mu);
  auto [it, inserted] = wreath_cache().emplace(key, std::move(w));
  return *it->second;
}

GroupHom wreath_hom(const WreathGroup& source, const WreathGroup& target, const GroupHom& phi) {
  if (source.m != target.m) throw Error("wreath_hom: block counts differ");
  if (phi.source != source.base || phi.target != target.base)
    throw Error("wreath_hom: base hom mismatch");
  return hom_from_fn(source.group, target.group, [&](int widx) {
    auto [s, tuple] = source.decode(widx);
    for (int& t : tuple) t = phi.image_of[t];
    return target.encode(s, tuple);
  });
}

GroupHom wreath_juxtaposition(const WreathGroup& wi, const WreathGroup& wj,
                              const WreathGroup& wij) {
  if (wi.base != wj.base || wi.base != wij.base || wi.m + wj.m != wij.m)
    throw Error("wreath_juxtaposition: shape mismatch");
  const ProductGroup& prod = direct_product(wi.group, wj.group);
  return embed_by_carrier(prod.group, wij.group);
}

// --- conjugacy and cosets ----------------------------------------------------

std::vector<int> conjugate_members(const Subgroup& h, int g) {
  const PermGroup& G = *h.parent;
  int gi = G.inv(g);
  std::vector<int> out;
  out.reserve(h.members.size());
  for (int m : h.members) out.push_back(G.mul(G.mul(g, m), gi));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> conjugating_element(const Subgroup& h, const Subgroup& k) {
  if (h.parent != k.parent) throw Error("conjugacy test requires a common parent group");
  if (h.order() != k.order()) return std::nullopt;
  if (h.members == k.members) return h.parent->identity();
  const PermGroup& G = *h.parent;
  std::vector<int> gens = subgroup_generators(h);
  for (long g = 0; g < G.order(); ++g) {
    int gi = G.inv(static_cast<int>(g));
    bool ok = true;
    for (int m : gens) {
      if (!k.contains(G.mul(G.mul(static_cast<int>(g), m), gi))) {
        ok = false;
        break;
      }
    }
    if (ok) return static_cast<int>(g);
  }
  return std::nullopt;
}

bool is_conjugate(const Subgroup& h, const Subgroup& k) {
  return conjugating_element(h, k).has_value();
}

std::vector<int> double_coset_reps(GroupPtr g, const Subgroup& h, const Subgroup& k) {
  if (h.parent != g || k.parent != g) throw Error("double cosets require subgroups of g");
  std::vector<char> seen(g->order(), 0);
  std::vector<int> reps;
  for (long e = 0; e < g->order(); ++e) {
    if (seen[e]) continue;
    reps.push_back(static_cast<int>(e));
    for (int a : h.members) {
      int ae = g->mul(a, static_cast<int>(e));
      for (int b : k.members) seen[g->mul(ae, b)] = 1;
    }
  }
  return reps;
}

CosetDecomposition left_cosets(GroupPtr g, const std::vector<int>& members) {
  CosetDecomposition out;
  out.coset_of.assign(g->order(), -1);
  for (long e = 0; e < g->order(); ++e) {
    if (out.coset_of[e] >= 0) continue;
    int c = static_cast<int>(out.reps.size());
    out.reps.push_back(static_cast<int>(e));
    for (int m : members) out.coset_of[g->mul(static_cast<int>(e), m)] = c;
  }
  return out;
}

}  // namespace burnside
