#include "rootoid/algebra.hpp"

#include <algorithm>
#include <map>

#include "rootoid/error.hpp"

namespace rootoid {

Gates& gates() {
  static Gates g;
  return g;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    auto [it, fresh] = index_.emplace(labels_[i], static_cast<int>(i));
    require(fresh, "duplicate universe label: " + labels_[i]);
  }
}

int Universe::index(const std::string& label) const {
  auto it = index_.find(label);
  require(it != index_.end(), "unknown universe label: " + label);
  return it->second;
}

RingElem::RingElem(UniversePtr u, Bitset members) : u_(std::move(u)), m_(std::move(members)) {
  require(m_.size() == u_->size(), "ring element does not match its universe");
}

RingElem RingElem::of(UniversePtr u, const std::vector<std::string>& labels) {
  Bitset m(u->size());
  for (const auto& l : labels) m.set(u->index(l));
  return RingElem(std::move(u), std::move(m));
}

RingElem RingElem::operator+(const RingElem& o) const {
  require(u_ == o.u_, "ring elements over different universes");
  return RingElem(u_, m_ ^ o.m_);
}

RingElem RingElem::operator*(const RingElem& o) const {
  require(u_ == o.u_, "ring elements over different universes");
  return RingElem(u_, m_ & o.m_);
}

bool RingElem::operator<=(const RingElem& o) const { return m_.subset_of(o.m_); }

nlohmann::json to_json(const RingElem& e) {
  nlohmann::json members = nlohmann::json::array();
  for (int i : e.members().members()) members.push_back(e.universe().label(i));
  return {{"universe", e.universe().labels()}, {"members", members}};
}

RingElem ring_elem_from_json(const nlohmann::json& j) {
  auto u = std::make_shared<const Universe>(j.at("universe").get<std::vector<std::string>>());
  return RingElem::of(u, j.at("members").get<std::vector<std::string>>());
}

SignedUniverse::SignedUniverse(std::vector<int> neg, Bitset pos)
    : size(neg.size()), negation(std::move(neg)), positives(std::move(pos)) {
  require(positives.size() == size, "positives do not match the base");
  for (std::size_t i = 0; i < size; ++i) {
    int j = negation[i];
    require(j >= 0 && static_cast<std::size_t>(j) < size && j != static_cast<int>(i) &&
                negation[j] == static_cast<int>(i),
            "negation is not a fixed-point-free involution");
    require(positives.test(i) != positives.test(j), "positives do not split the negation orbits");
  }
}

int SignedUniverse::orbit_of(int i) const { return positives.test(i) ? i : negation[i]; }

bool Subring::contains(const Bitset& x) const {
  if (!x.subset_of(support)) return false;
  for (const auto& a : atoms)
    if (a.intersects(x) && !a.subset_of(x)) return false;
  return true;
}

std::vector<Bitset> Subring::elements() const {
  require(atoms.size() <= 20, "subring too large to enumerate", ErrorKind::Gate);
  std::vector<Bitset> out;
  for (std::uint32_t mask = 0; mask < (1u << atoms.size()); ++mask) {
    Bitset e(ambient);
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask >> i & 1u) e |= atoms[i];
    out.push_back(std::move(e));
  }
  return out;
}

// Positions are grouped by which generators contain them; every nonempty
// class of the union of supports is an atom of the generated ring.
Subring subring_generated(std::size_t ambient, const std::vector<Bitset>& gens) {
  Subring r;
  r.ambient = ambient;
  r.support = Bitset(ambient);
  for (const auto& g : gens) {
    require(g.size() == ambient, "generator outside the ambient ring");
    r.support |= g;
  }
  std::map<std::vector<bool>, std::size_t> cls;
  for (int p : r.support.members()) {
    std::vector<bool> sig(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) sig[i] = gens[i].test(p);
    auto [it, fresh] = cls.emplace(sig, r.atoms.size());
    if (fresh) r.atoms.emplace_back(ambient);
    r.atoms[it->second].set(p);
  }
  std::sort(r.atoms.begin(), r.atoms.end(),
            [](const Bitset& a, const Bitset& b) { return a.first() < b.first(); });
  return r;
}

Bitset PresentedRing::one() const {
  Bitset b(atoms.size());
  b.set_all();
  return b;
}

Bitset PresentedRing::generator(int i) const {
  Bitset b(atoms.size());
  for (std::size_t k = 0; k < atoms.size(); ++k)
    if (atoms[k] >> i & 1u) b.set(k);
  return b;
}

int PresentedRing::atom_index(std::uint32_t mask) const {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), mask);
  if (it == atoms.end() || *it != mask) return -1;
  return static_cast<int>(it - atoms.begin());
}

FreeRings free_boolean_ring(const std::vector<std::string>& generators) {
  require(static_cast<int>(generators.size()) <= gates().free_ring_generators,
          "free ring generator bound exceeded", ErrorKind::Gate);
  FreeRings f;
  f.nonunital.generators = generators;
  f.unital.generators = generators;
  std::uint32_t n = static_cast<std::uint32_t>(generators.size());
  for (std::uint32_t y = 0; y < (1u << n); ++y) {
    f.unital.atoms.push_back(y);
    if (y) f.nonunital.atoms.push_back(y);
  }
  return f;
}

Bitset Quotient::project(const Bitset& x) const {
  Bitset out(ring.atoms.size());
  for (int k : x.members())
    if (projection[k] >= 0) out.set(projection[k]);
  return out;
}

// In a finite Boolean ring the ideal generated by a set is principal,
// generated by the join of the set.
Quotient quotient_by_ideal(const PresentedRing& ring, const std::vector<Bitset>& ideal_gens) {
  Bitset dead(ring.atoms.size());
  for (const auto& g : ideal_gens) dead |= g;
  Quotient q;
  q.ring.generators = ring.generators;
  q.projection.assign(ring.atoms.size(), -1);
  for (std::size_t k = 0; k < ring.atoms.size(); ++k) {
    if (dead.test(k)) continue;
    q.projection[k] = static_cast<int>(q.ring.atoms.size());
    q.ring.atoms.push_back(ring.atoms[k]);
  }
  return q;
}

Bitset UnitalCompletion::one() const {
  Bitset b(atoms());
  b.set_all();
  return b;
}

Bitset UnitalCompletion::embed(const Bitset& b) const {
  Bitset u(atoms());
  for (int i : b.members()) u.set(i);
  return u;
}

Bitset UnitalCompletion::from_pair(const Bitset& b, bool eps) const {
  Bitset u = embed(b);
  return eps ? u ^ one() : u;
}

std::pair<Bitset, bool> UnitalCompletion::to_pair(const Bitset& u) const {
  bool eps = u.test(base_atoms);
  Bitset v = eps ? u ^ one() : u;
  Bitset b(base_atoms);
  for (int i : v.members()) b.set(i);
  return {b, eps};
}

std::pair<Bitset, bool> UnitalCompletion::pair_product(const std::pair<Bitset, bool>& x,
                                                       const std::pair<Bitset, bool>& y) const {
  Bitset b = x.first & y.first;
  if (x.second) b ^= y.first;
  if (y.second) b ^= x.first;
  return {b, x.second && y.second};
}

}  // namespace rootoid
