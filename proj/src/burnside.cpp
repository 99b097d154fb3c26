#include "burnside/burnside.hpp"

#include <algorithm>
#include <set>

#include "burnside/cache.hpp"
#include "burnside/errors.hpp"
#include "burnside/limits.hpp"

namespace burnside {

// --- subgroup enumeration ----------------------------------------------------

std::vector<Subgroup> all_subgroups(GroupPtr g) {
  // all cyclic subgroups, then close under join with cyclic subgroups
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> cyclic;
  for (long e = 0; e < g->order(); ++e) {
    std::vector<int> members;
    int cur = static_cast<int>(e);
    while (true) {
      members.push_back(cur);
      if (cur == g->identity()) break;
      cur = g->mul(cur, static_cast<int>(e));
    }
    std::sort(members.begin(), members.end());
    if (seen.insert(members).second) cyclic.push_back(members);
  }
  std::vector<std::vector<int>> work(cyclic);
  for (size_t w = 0; w < work.size(); ++w) {
    for (const auto& c : cyclic) {
      std::vector<int> joined = work[w];
      joined.insert(joined.end(), c.begin(), c.end());
      Subgroup j = subgroup_generated(g, joined);
      if (seen.insert(j.members).second) work.push_back(j.members);
    }
  }
  std::vector<Subgroup> out;
  out.reserve(work.size());
  for (auto& members : seen) out.emplace_back(g, members);
  return out;
}

// --- class table -------------------------------------------------------------

namespace {

std::mutex lattice_mu;
std::map<const PermGroup*, std::unique_ptr<SubgroupClassTable>>& lattice_cache() {
  static std::map<const PermGroup*, std::unique_ptr<SubgroupClassTable>> c;
  return c;
}

LatticePayload compute_lattice(const GroupPtr& g) {
  std::vector<Subgroup> subs = all_subgroups(g);
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    return std::make_pair(a.order(), a.members) < std::make_pair(b.order(), b.members);
  });

  LatticePayload payload;
  std::set<std::vector<int>> classified;
  for (const Subgroup& s : subs) {
    if (classified.count(s.members)) continue;
    // s is the lex-least member of its class in the (order, members) order
    payload.class_members.push_back(s.members);
    for (long e = 0; e < g->order(); ++e)
      classified.insert(conjugate_members(s, static_cast<int>(e)));
  }

  const int n = static_cast<int>(payload.class_members.size());
  payload.marks.assign(n, std::vector<long long>(n, 0));
  for (int j = 0; j < n; ++j) {
    GSet space = cosets_gset(g, Subgroup(g, payload.class_members[j]));
    for (int i = 0; i < n; ++i)
      payload.marks[i][j] = fixed_points_count(space, Subgroup(g, payload.class_members[i]));
  }
  return payload;
}

}  // namespace

const SubgroupClassTable& subgroup_classes(GroupPtr g) {
  {
    std::scoped_lock lock(lattice_mu);
    auto it = lattice_cache().find(g.get());
    if (it != lattice_cache().end()) return *it->second;
  }
  if (g->order() > limits().lattice_order)
    throw GroupTooLarge("subgroup lattice of order-" + std::to_string(g->order()) +
                        " group exceeds bound " + std::to_string(limits().lattice_order));

  std::string fp = g->fingerprint();
  std::optional<LatticePayload> payload = cache_load(fp);
  bool from_cache = payload.has_value();
  if (!payload) payload = compute_lattice(g);
  if (!from_cache) cache_store(fp, *payload);

  auto table = std::unique_ptr<SubgroupClassTable>(new SubgroupClassTable());
  table->group_ = g;
  for (auto& members : payload->class_members) table->class_reps_.emplace_back(g, members);
  table->marks_ = payload->marks;

  std::scoped_lock lock(lattice_mu);
  auto [it, inserted] = lattice_cache().emplace(g.get(), std::move(table));
  return *it->second;
}

int SubgroupClassTable::class_of(const Subgroup& h) const {
  if (h.parent != group_) throw Error("class_of: subgroup of a different group");
  std::scoped_lock lock(memo_mu_);
  auto it = class_memo_.find(h.members);
  if (it != class_memo_.end()) return it->second;
  for (int i = 0; i < num_classes(); ++i) {
    if (class_reps_[i].order() != h.order()) continue;
    if (is_conjugate(class_reps_[i], h)) {
      class_memo_.emplace(h.members, i);
      return i;
    }
  }
  throw Error("subgroup not matched to any conjugacy class");
}

std::string SubgroupClassTable::class_label(int i) const {
  long ord = class_reps_[i].order();
  int k = 0;
  for (int j = 0; j < i; ++j)
    if (class_reps_[j].order() == ord) ++k;
  return "H" + std::to_string(ord) + "_" + std::to_string(k);
}

int SubgroupClassTable::class_by_label(const std::string& label) const {
  for (int i = 0; i < num_classes(); ++i)
    if (class_label(i) == label) return i;
  return -1;
}

const std::vector<std::pair<int, long long>>& SubgroupClassTable::basis_product(int i,
                                                                                int j) const {
  if (i > j) std::swap(i, j);
  auto key = std::make_pair(i, j);
  {
    std::scoped_lock lock(memo_mu_);
    auto it = product_memo_.find(key);
    if (it != product_memo_.end()) return it->second;
  }
  const Subgroup& h = class_reps_[i];
  const Subgroup& k = class_reps_[j];
  std::map<int, long long> acc;
  for (int rep : double_coset_reps(group_, h, k)) {
    std::vector<int> conj = conjugate_members(k, rep);
    std::vector<int> inter;
    std::set_intersection(h.members.begin(), h.members.end(), conj.begin(), conj.end(),
                          std::back_inserter(inter));
    acc[class_of(Subgroup(group_, inter))] += 1;
  }
  std::vector<std::pair<int, long long>> result(acc.begin(), acc.end());
  std::scoped_lock lock(memo_mu_);
  return product_memo_.emplace(key, std::move(result)).first->second;
}

// --- elements ----------------------------------------------------------------

BurnsideElement::BurnsideElement(GroupPtr group, CoeffRing ring)
    : group_(std::move(group)), ring_(std::move(ring)) {}

BurnsideElement BurnsideElement::zero(GroupPtr group, CoeffRing ring) {
  return BurnsideElement(std::move(group), std::move(ring));
}

BurnsideElement BurnsideElement::basis(GroupPtr group, int class_index, CoeffRing ring) {
  BurnsideElement e(group, ring);
  e.set_coeff(class_index, Scalar(ring, 1));
  return e;
}

BurnsideElement BurnsideElement::unit(GroupPtr group, CoeffRing ring) {
  int top = subgroup_classes(group).num_classes() - 1;
  return basis(std::move(group), top, std::move(ring));
}

Scalar BurnsideElement::coeff(int class_index) const {
  auto it = coeffs_.find(class_index);
  return it == coeffs_.end() ? Scalar(ring_) : it->second;
}

void BurnsideElement::set_coeff(int class_index, Scalar value) {
  if (class_index < 0 || class_index >= subgroup_classes(group_).num_classes())
    throw Error("class index out of range");
  if (value.ring() != ring_) throw RingMismatch("coefficient from a different ring");
  if (value.is_zero())
    coeffs_.erase(class_index);
  else
    coeffs_[class_index] = std::move(value);
}

BurnsideElement BurnsideElement::operator+(const BurnsideElement& o) const {
  if (group_ != o.group_) throw Error("sum over different groups");
  if (ring_ != o.ring_) throw RingMismatch("sum over different coefficient rings");
  BurnsideElement r = *this;
  for (const auto& [c, v] : o.coeffs_) r.set_coeff(c, r.coeff(c) + v);
  return r;
}

BurnsideElement BurnsideElement::operator-(const BurnsideElement& o) const {
  return *this + (-o);
}

BurnsideElement BurnsideElement::operator-() const {
  BurnsideElement r(group_, ring_);
  for (const auto& [c, v] : coeffs_) r.coeffs_[c] = -v;
  return r;
}

BurnsideElement BurnsideElement::scaled(const Scalar& c) const {
  BurnsideElement r(group_, ring_);
  for (const auto& [cls, v] : coeffs_) r.set_coeff(cls, v * c);
  return r;
}

bool BurnsideElement::operator==(const BurnsideElement& o) const {
  return group_ == o.group_ && ring_ == o.ring_ && coeffs_ == o.coeffs_;
}

std::vector<Scalar> BurnsideElement::marks() const {
  const SubgroupClassTable& t = subgroup_classes(group_);
  std::vector<Scalar> out(t.num_classes(), Scalar(ring_));
  for (int i = 0; i < t.num_classes(); ++i)
    for (const auto& [j, v] : coeffs_)
      out[i] = out[i] + v * Scalar(ring_, mpz_ll(t.marks()[i][j]));
  return out;
}

std::map<int, mpz_class> BurnsideElement::integral_coeffs() const {
  std::map<int, mpz_class> out;
  for (const auto& [c, v] : coeffs_) out[c] = v.integer_value();
  return out;
}

std::string BurnsideElement::to_string() const {
  if (coeffs_.empty()) return "0";
  const SubgroupClassTable& t = subgroup_classes(group_);
  std::string out;
  for (const auto& [c, v] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += v.to_string() + "*[" + t.class_label(c) + "]";
  }
  return out;
}

// --- operations --------------------------------------------------------------

BurnsideElement mul(const BurnsideElement& x, const BurnsideElement& y) {
  if (x.group() != y.group()) throw Error("product over different groups");
  if (x.ring() != y.ring()) throw RingMismatch("product over different coefficient rings");
  const SubgroupClassTable& t = subgroup_classes(x.group());
  BurnsideElement r(x.group(), x.ring());
  for (const auto& [i, xi] : x.coeffs())
    for (const auto& [j, yj] : y.coeffs()) {
      Scalar c = xi * yj;
      for (const auto& [cls, mult] : t.basis_product(i, j))
        r.set_coeff(cls, r.coeff(cls) + c * Scalar(x.ring(), mpz_ll(mult)));
    }
  return r;
}

BurnsideElement mul_by_sets(const BurnsideElement& x, const BurnsideElement& y) {
  if (x.group() != y.group()) throw Error("product over different groups");
  if (x.ring() != y.ring()) throw RingMismatch("product over different coefficient rings");
  const SubgroupClassTable& t = subgroup_classes(x.group());
  const ProductGroup& sq = direct_product(x.group(), x.group());
  GroupHom diag = diagonal_hom(x.group());
  BurnsideElement r(x.group(), x.ring());
  for (const auto& [i, xi] : x.coeffs())
    for (const auto& [j, yj] : y.coeffs()) {
      GSet prod = external_set_product(sq, cosets_gset(x.group(), t.class_reps()[i]),
                                       cosets_gset(x.group(), t.class_reps()[j]));
      BurnsideElement d = decompose(pullback(diag, prod));
      Scalar c = xi * yj;
      for (const auto& [cls, v] : d.coeffs())
        r.set_coeff(cls, r.coeff(cls) + c * extend_scalar(v, x.ring()));
    }
  return r;
}

BurnsideElement decompose(const GSet& x) {
  const SubgroupClassTable& t = subgroup_classes(x.group());
  std::map<int, long long> counts;
  for (const Orbit& orb : orbits(x)) counts[t.class_of(orb.stabilizer)] += 1;
  BurnsideElement r(x.group(), CoeffRing::integers());
  for (const auto& [cls, n] : counts) r.set_coeff(cls, Scalar(CoeffRing::integers(), mpz_ll(n)));
  return r;
}

BurnsideElement decompose(const VirtualGSet& x) {
  BurnsideElement r = BurnsideElement::zero(x.group);
  for (const auto& [set, mult] : x.terms)
    r = r + decompose(set).scaled(Scalar(CoeffRing::integers(), mpz_ll(mult)));
  return r;
}

BurnsideElement from_marks(GroupPtr g, const std::vector<mpz_class>& marks) {
  const SubgroupClassTable& t = subgroup_classes(g);
  const int n = t.num_classes();
  if (static_cast<int>(marks.size()) != n) throw Error("mark vector has wrong length");
  std::vector<mpz_class> coeff(n);
  for (int i = n - 1; i >= 0; --i) {
    mpz_class rhs = marks[i];
    for (int j = i + 1; j < n; ++j) rhs -= coeff[j] * mpz_ll(t.marks()[i][j]);
    mpz_class diag = mpz_ll(t.marks()[i][i]);
    mpz_class q, rem;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), rhs.get_mpz_t(), diag.get_mpz_t());
    if (rem != 0)
      throw NotIntegral("mark vector is not in the image of the mark homomorphism");
    coeff[i] = q;
  }
  BurnsideElement r(g, CoeffRing::integers());
  for (int i = 0; i < n; ++i) r.set_coeff(i, Scalar(CoeffRing::integers(), coeff[i]));
  return r;
}

BurnsideElement extend_coefficients(const BurnsideElement& x, const CoeffRing& target) {
  BurnsideElement r(x.group(), target);
  for (const auto& [c, v] : x.coeffs()) r.set_coeff(c, extend_scalar(v, target));
  return r;
}

VirtualGSet realize(const BurnsideElement& x) {
  const SubgroupClassTable& t = subgroup_classes(x.group());
  VirtualGSet r = VirtualGSet::zero(x.group());
  for (const auto& [c, v] : x.integral_coeffs()) {
    if (!v.fits_slong_p()) throw Error("coefficient too large to realize as a set");
    r.terms.emplace_back(cosets_gset(x.group(), t.class_reps()[c]), v.get_si());
  }
  return r;
}

Scalar augmentation(const BurnsideElement& x) {
  Scalar s(x.ring());
  for (const auto& [c, v] : x.coeffs()) s = s + v;
  return s;
}

}  // namespace burnside
