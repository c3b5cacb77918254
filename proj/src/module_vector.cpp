#include "flatkit/module_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatkit {

FreeModuleVector::FreeModuleVector(RingPtr ring, std::size_t rank) : ring_(std::move(ring)) {
  if (rank == 0) throw std::invalid_argument("free module rank must be positive");
  entries_.assign(rank, Polynomial(ring_));
}

FreeModuleVector::FreeModuleVector(std::vector<Polynomial> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw std::invalid_argument("free module rank must be positive");
  ring_ = entries_.front().ring();
  for (const auto& p : entries_)
    if (!same_ring(p.ring(), ring_)) throw std::invalid_argument("vector entries in different rings");
}

FreeModuleVector::FreeModuleVector(Polynomial p) : FreeModuleVector(std::vector<Polynomial>{std::move(p)}) {}

FreeModuleVector FreeModuleVector::unit(RingPtr ring, std::size_t rank, std::size_t i) {
  FreeModuleVector v(ring, rank);
  v.entries_.at(i) = Polynomial::constant(ring, 1);
  return v;
}

bool FreeModuleVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

long FreeModuleVector::total_degree() const {
  long d = -1;
  for (const auto& p : entries_) d = std::max(d, p.total_degree());
  return d;
}

bool FreeModuleVector::involves_any(const std::vector<std::size_t>& vars) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const Polynomial& p) { return p.involves_any(vars); });
}

FreeModuleVector& FreeModuleVector::operator+=(const FreeModuleVector& other) {
  if (other.rank() != rank()) throw std::invalid_argument("rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

FreeModuleVector& FreeModuleVector::operator-=(const FreeModuleVector& other) {
  if (other.rank() != rank()) throw std::invalid_argument("rank mismatch");
  for (std::size_t i = 0; i < rank(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

FreeModuleVector FreeModuleVector::operator-() const {
  FreeModuleVector r(*this);
  for (auto& p : r.entries_) p = -p;
  return r;
}

FreeModuleVector operator*(const Polynomial& s, const FreeModuleVector& v) {
  FreeModuleVector r(v);
  for (auto& p : r.entries_) p = s * p;
  return r;
}

FreeModuleVector FreeModuleVector::map_to(const RingPtr& target,
                                          const std::vector<std::size_t>& var_map) const {
  std::vector<Polynomial> out;
  out.reserve(entries_.size());
  for (const auto& p : entries_) out.push_back(p.map_to(target, var_map));
  return FreeModuleVector(std::move(out));
}

std::string FreeModuleVector::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ", ";
    s += entries_[i].to_string();
  }
  return s + "]";
}

Submodule::Submodule(RingPtr r, std::size_t rk, std::vector<FreeModuleVector> gens)
    : ring(std::move(r)), rank(rk), generators(std::move(gens)) {
  if (rank == 0) throw std::invalid_argument("free module rank must be positive");
  for (const auto& g : generators) {
    if (g.rank() != rank) throw std::invalid_argument("generator rank does not match submodule");
    if (!same_ring(g.ring(), ring)) throw std::invalid_argument("generator lives in another ring");
  }
}

bool Submodule::is_zero() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const FreeModuleVector& g) { return g.is_zero(); });
}

std::vector<Polynomial> Submodule::polynomials() const {
  if (rank != 1) throw std::logic_error("polynomials() needs a rank-1 submodule");
  std::vector<Polynomial> out;
  for (const auto& g : generators) out.push_back(g[0]);
  return out;
}

std::vector<std::string> Submodule::to_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(rank == 1 ? g[0].to_string() : g.to_string());
  return out;
}

Submodule make_ideal(RingPtr ring, const std::vector<Polynomial>& gens) {
  std::vector<FreeModuleVector> v;
  for (const auto& p : gens) v.emplace_back(p);
  return Submodule(std::move(ring), 1, std::move(v));
}

}  // namespace flatkit
