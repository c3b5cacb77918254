#include "flatkit/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace flatkit {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  m.degree_ = power;
  return m;
}

std::uint64_t Monomial::degree_in(std::span<const std::size_t> vars) const {
  std::uint64_t d = 0;
  for (std::size_t v : vars) d += exps_[v];
  return d;
}

bool Monomial::involves_any(std::span<const std::size_t> vars) const {
  return std::any_of(vars.begin(), vars.end(), [&](std::size_t v) { return exps_[v] != 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  assert(exps_.size() == other.exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps_[i] += other.exps_[i];
  degree_ += other.degree_;
  return *this;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial q(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (divisor.exps_[i] > exps_[i]) throw std::domain_error("monomial division is not exact");
    q.exps_[i] -= divisor.exps_[i];
  }
  q.degree_ -= divisor.degree_;
  return q;
}

Monomial Monomial::without(std::span<const std::size_t> vars) const {
  Monomial m(*this);
  for (std::size_t v : vars) {
    m.degree_ -= m.exps_[v];
    m.exps_[v] = 0;
  }
  return m;
}

Monomial Monomial::restricted_to(std::span<const std::size_t> vars) const {
  Monomial m(exps_.size());
  for (std::size_t v : vars) {
    m.exps_[v] = exps_[v];
    m.degree_ += exps_[v];
  }
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

namespace {

void enumerate(std::size_t nvars, std::span<const std::size_t> vars, std::size_t pos,
               unsigned remaining, std::vector<Exponent>& cur, std::vector<Monomial>& out) {
  if (pos == vars.size()) {
    out.emplace_back(cur);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur[vars[pos]] = e;
    enumerate(nvars, vars, pos + 1, remaining - e, cur, out);
  }
  cur[vars[pos]] = 0;
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::span<const std::size_t> vars,
                                      unsigned max_degree) {
  std::vector<Monomial> out;
  std::vector<Exponent> cur(nvars, 0);
  enumerate(nvars, vars, 0, max_degree, cur, out);
  std::stable_sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  return out;
}

}  // namespace flatkit
