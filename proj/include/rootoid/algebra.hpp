#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rootoid/bitset.hpp"

namespace rootoid {

class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index(const std::string& label) const;
  bool contains(const std::string& label) const { return index_.count(label) != 0; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

class RingElem {
 public:
  explicit RingElem(UniversePtr u) : u_(std::move(u)), m_(u_->size()) {}
  RingElem(UniversePtr u, Bitset members);
  static RingElem of(UniversePtr u, const std::vector<std::string>& labels);

  const Universe& universe() const { return *u_; }
  const UniversePtr& universe_ptr() const { return u_; }
  const Bitset& members() const { return m_; }

  RingElem operator+(const RingElem& o) const;
  RingElem operator*(const RingElem& o) const;
  bool operator==(const RingElem& o) const { return u_ == o.u_ && m_ == o.m_; }
  bool operator<=(const RingElem& o) const;
  bool is_zero() const { return m_.none(); }

 private:
  UniversePtr u_;
  Bitset m_;
};

nlohmann::json to_json(const RingElem& e);
RingElem ring_elem_from_json(const nlohmann::json& j);

// Fixed-point-free negation on a base universe; positives and their negatives
// partition the base.
struct SignedUniverse {
  std::size_t size = 0;
  std::vector<int> negation;
  Bitset positives;

  SignedUniverse(std::vector<int> neg, Bitset pos);
  int orbit_of(int i) const;  // index of the positive representative
};

// Subring of P(ambient) generated by gens, described by its atoms.
struct Subring {
  std::size_t ambient = 0;
  std::vector<Bitset> atoms;
  Bitset support;

  std::size_t rank() const { return atoms.size(); }
  bool contains(const Bitset& x) const;
  // Every element, as unions of atoms. Only sensible for small rank.
  std::vector<Bitset> elements() const;
};

Subring subring_generated(std::size_t ambient, const std::vector<Bitset>& gens);

// Finite Boolean ring presented by generators; elements are sets of surviving
// atoms e_Y, Y a subset of the generators (bitmask).
struct PresentedRing {
  std::vector<std::string> generators;
  std::vector<std::uint32_t> atoms;

  std::size_t atom_count() const { return atoms.size(); }
  Bitset zero() const { return Bitset(atoms.size()); }
  Bitset one() const;
  Bitset generator(int i) const;
  int atom_index(std::uint32_t mask) const;  // -1 when the atom was killed
};

struct FreeRings {
  PresentedRing nonunital;  // G(X): atoms e_Y, Y nonempty
  PresentedRing unital;     // U(G(X)): atoms e_Y, all Y
};

FreeRings free_boolean_ring(const std::vector<std::string>& generators);

struct Quotient {
  PresentedRing ring;
  std::vector<int> projection;  // source atom -> quotient atom or -1

  Bitset project(const Bitset& x) const;
};

Quotient quotient_by_ideal(const PresentedRing& ring, const std::vector<Bitset>& ideal_gens);

// U(B) for B with k atoms: U(B) has k+1 atoms, the last one being 1 + 1_B.
struct UnitalCompletion {
  std::size_t base_atoms = 0;

  explicit UnitalCompletion(std::size_t k) : base_atoms(k) {}
  std::size_t atoms() const { return base_atoms + 1; }
  Bitset one() const;
  Bitset embed(const Bitset& b) const;
  Bitset from_pair(const Bitset& b, bool eps) const;
  std::pair<Bitset, bool> to_pair(const Bitset& u) const;
  // (b,e)(b',e') = (bb' + eb' + e'b, ee')
  std::pair<Bitset, bool> pair_product(const std::pair<Bitset, bool>& x,
                                       const std::pair<Bitset, bool>& y) const;
};

}  // namespace rootoid
