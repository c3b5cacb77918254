#include "flatkit/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flatkit {

Polynomial::Polynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial needs a ring");
}

Polynomial::Polynomial(RingPtr ring, TermMap terms) : Polynomial(std::move(ring)) {
  for (auto& [m, c] : terms) {
    if (m.size() != ring_->size()) throw std::invalid_argument("monomial size does not match ring");
    if (c != 0) terms_.emplace(m, c);
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.emplace(Monomial(ring->size()), c);
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  Polynomial p(ring);
  p.terms_.emplace(Monomial::variable(ring->size(), index), Rational(1));
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  std::size_t i = ring->index_of(name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, const Rational& c) {
  TermMap t;
  t.emplace(std::move(m), c);
  return Polynomial(std::move(ring), std::move(t));
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

long Polynomial::total_degree() const {
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max<long>(d, static_cast<long>(m.degree()));
  return d;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(ring_->size())); }

bool Polynomial::involves(std::size_t var) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[var] != 0; });
}

bool Polynomial::involves_any(const std::vector<std::size_t>& vars) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return t.first.involves_any(vars); });
}

bool Polynomial::only_in(const std::vector<std::size_t>& vars) const {
  std::vector<char> allowed(ring_->size(), 0);
  for (std::size_t v : vars) allowed[v] = 1;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0 && !allowed[i]) return false;
  return true;
}

std::pair<Monomial, Rational> Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return *best;
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  Rational inv = 1 / leading_term(order).second;
  return *this * inv;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_))
    throw std::invalid_argument("polynomials live in different rings");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_ring(other);
  for (const auto& [m, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial r(a.ring_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Rational c = ca * cb;
      auto [it, inserted] = r.terms_.emplace(ma * mb, c);
      if (!inserted) it->second += c;
    }
  std::erase_if(r.terms_, [](const auto& t) { return t.second == 0; });
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [m, v] : terms_) v *= c;
  }
  return *this;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::map_to(const RingPtr& target,
                              const std::vector<std::size_t>& var_map) const {
  if (var_map.size() != ring_->size()) throw std::invalid_argument("variable map has wrong size");
  TermMap out;
  for (const auto& [m, c] : terms_) {
    std::vector<Exponent> e(target->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) e.at(var_map[i]) += m[i];
    out.emplace(Monomial(std::move(e)), c);
  }
  return Polynomial(target, std::move(out));
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  const auto order = MonomialOrder::grevlex(ring_->size());
  std::vector<const TermMap::value_type*> sorted;
  for (const auto& t : terms_) sorted.push_back(&t);
  std::sort(sorted.begin(), sorted.end(),
            [&](auto* a, auto* b) { return order.compare(a->first, b->first) > 0; });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : sorted) {
    const Monomial& m = t->first;
    Rational c = t->second;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Rational a = abs(c);
    bool unit = (a == 1);
    if (!unit || m.is_one()) {
      os << a.get_str();
      if (!m.is_one()) os << "*";
    }
    bool first_var = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!first_var) os << "*";
      first_var = false;
      os << ring_->name(i);
      if (m[i] > 1) os << "^" << m[i];
    }
  }
  return os.str();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial evaluate(const Polynomial& p, const std::map<std::size_t, Rational>& assignment) {
  Polynomial::TermMap out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Exponent> e(m.exponents().begin(), m.exponents().end());
    Rational coeff = c;
    for (const auto& [var, value] : assignment) {
      if (var >= e.size()) throw std::invalid_argument("assignment to unknown variable");
      for (Exponent k = 0; k < e[var]; ++k) coeff *= value;
      e[var] = 0;
    }
    if (coeff == 0) continue;
    auto [it, inserted] = out.emplace(Monomial(std::move(e)), coeff);
    if (!inserted) it->second += coeff;
  }
  return Polynomial(p.ring(), std::move(out));
}

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& images) {
  const RingPtr& ring = p.ring();
  Polynomial result(ring);
  for (const auto& [m, c] : p.terms()) {
    std::vector<Exponent> rest(m.exponents().begin(), m.exponents().end());
    Polynomial factor = Polynomial::constant(ring, c);
    for (const auto& [var, image] : images) {
      if (var >= rest.size()) throw std::invalid_argument("substitution for unknown variable");
      if (rest[var]) factor *= image.pow(rest[var]);
      rest[var] = 0;
    }
    result += factor * Polynomial::term(ring, Monomial(std::move(rest)), 1);
  }
  return result;
}

}  // namespace flatkit
