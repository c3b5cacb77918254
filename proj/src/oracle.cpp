#include "flatkit/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "sparse_elimination.hpp"

namespace flatkit {

using detail::ColumnEchelon;
using detail::SparseVec;

SearchBounds SearchBounds::recommended(const ModulePresentation& m, unsigned witness_degree) {
  long top = 0;
  for (const auto& r : m.relations()) top = std::max(top, r.total_degree());
  SearchBounds b;
  b.witness_degree = witness_degree;
  b.multiplier_degree = witness_degree + static_cast<unsigned>(top);
  return b;
}

std::vector<Polynomial> annihilator_candidates(const RingTower& tower, unsigned max_degree) {
  const auto& ring = tower.ring();
  const auto base = tower.base_indices();
  const auto order = MonomialOrder::grevlex(ring->size());
  auto monos = monomials_up_to(ring->size(), base, max_degree);
  std::stable_sort(monos.begin(), monos.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return order.compare(a, b) == std::strong_ordering::greater;
  });
  std::vector<Polynomial> out;
  for (const auto& m : monos)
    if (m.degree() > 0) out.push_back(Polynomial::term(ring, m, Rational(1)));
  if (max_degree >= 1)
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j) {
        auto yi = Polynomial::variable(ring, base[i]);
        auto yj = Polynomial::variable(ring, base[j]);
        out.push_back(yi + yj);
        out.push_back(yi - yj);
      }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

class RowIndex {
 public:
  std::size_t operator()(std::size_t comp, const Monomial& m) {
    auto [it, fresh] = rows_.try_emplace({comp, m}, rows_.size());
    return it->second;
  }

 private:
  std::map<std::pair<std::size_t, Monomial>, std::size_t> rows_;
};

SparseVec to_column(const FreeModuleVector& v, RowIndex& rows) {
  SparseVec col;
  for (std::size_t i = 0; i < v.rank(); ++i)
    for (const auto& [mono, c] : v[i].terms()) col.emplace(rows(i, mono), c);
  return col;
}

struct MultiplierColumn {
  Monomial multiplier;
  std::size_t relation;
};

struct ElementColumn {
  std::size_t comp;
  Monomial mono;
};

class OutsideTest {
 public:
  OutsideTest(const ModulePresentation& m, const SearchBounds& b) : m_(m) {
    if (!b.evaluation_point) return;
    const auto& pt = *b.evaluation_point;
    if (pt.size() != m.ring()->size())
      throw std::invalid_argument("evaluation point has the wrong number of coordinates");
    for (std::size_t i = 0; i < pt.size(); ++i) point_[i] = pt[i];
    for (const auto& r : m.relations())
      for (const auto& p : r.entries())
        if (!evaluate(p, point_).is_zero())
          throw std::invalid_argument("relations do not vanish at the evaluation point");
    use_point_ = true;
  }

  /// True only when m ∉ N is established.
  bool outside(const FreeModuleVector& v) {
    if (use_point_) {
      for (const auto& p : v.entries())
        if (!evaluate(p, point_).is_zero()) return true;
      return false;
    }
    if (!basis_) basis_.emplace(groebner(m_.submodule()));
    return !membership(v, *basis_);
  }

 private:
  const ModulePresentation& m_;
  bool use_point_ = false;
  std::map<std::size_t, Rational> point_;
  std::optional<GroebnerBasis> basis_;
};

void normalize(OracleWitness& w) {
  const auto order = MonomialOrder::grevlex(w.element.ring()->size());
  for (const auto& p : w.element.entries()) {
    if (p.is_zero()) continue;
    Rational inv = 1 / p.leading_term(order).second;
    w.element = Polynomial::constant(w.element.ring(), inv) * w.element;
    for (auto& t : w.combination) t.coefficient *= inv;
    return;
  }
}

}  // namespace

std::optional<OracleWitness> brute_torsion_search(const ModulePresentation& m,
                                                  const SearchBounds& bounds) {
  const auto start = Clock::now();
  auto tick = [&] {
    if (Clock::now() - start > bounds.budget) throw BudgetExceeded("oracle budget exhausted");
  };
  const auto& ring = m.ring();
  const std::size_t nv = ring->size();
  std::vector<std::size_t> all(nv);
  for (std::size_t i = 0; i < nv; ++i) all[i] = i;
  const unsigned E = bounds.multiplier_degree;
  OutsideTest outside(m, bounds);

  RowIndex rows;
  std::vector<MultiplierColumn> mult_cols;
  ColumnEchelon span;
  for (std::size_t j = 0; j < m.relations().size(); ++j) {
    const auto& rel = m.relations()[j];
    const long d = rel.total_degree();
    if (d < 0 || d > static_cast<long>(E)) continue;
    for (const auto& w : monomials_up_to(nv, all, E - static_cast<unsigned>(d))) {
      tick();
      auto col = to_column(Polynomial::term(ring, w, Rational(1)) * rel, rows);
      span.insert(mult_cols.size(), std::move(col));
      mult_cols.push_back({w, j});
    }
  }
  const std::size_t L = mult_cols.size();

  for (const auto& r : annihilator_candidates(m.tower(), bounds.witness_degree)) {
    const long dr = r.total_degree();
    if (dr > static_cast<long>(E)) continue;
    const unsigned dm = std::min<unsigned>(bounds.witness_degree, E - static_cast<unsigned>(dr));
    std::vector<ElementColumn> elem_cols;
    ColumnEchelon local;
    for (std::size_t i = 0; i < m.rank(); ++i) {
      for (const auto& mu : monomials_up_to(nv, all, dm)) {
        tick();
        const std::size_t id = L + elem_cols.size();
        elem_cols.push_back({i, mu});
        auto prod = r * Polynomial::term(ring, mu, Rational(1));
        auto v = FreeModuleVector(ring, m.rank());
        v[i] = prod;
        auto dep = local.insert(id, to_column(v, rows), &span);
        if (!dep) continue;
        OracleWitness w{FreeModuleVector(ring, m.rank()), r, {}};
        for (const auto& [k, c] : *dep) {
          if (k >= L) {
            const auto& ec = elem_cols[k - L];
            w.element[ec.comp] += Polynomial::term(ring, ec.mono, c);
          } else {
            w.combination.push_back({mult_cols[k].multiplier, mult_cols[k].relation, -c});
          }
        }
        if (w.element.is_zero() || !outside.outside(w.element)) continue;
        normalize(w);
        return w;
      }
    }
  }
  return std::nullopt;
}

bool check_combination(const ModulePresentation& m, const OracleWitness& w) {
  FreeModuleVector sum(m.ring(), m.rank());
  for (const auto& t : w.combination) {
    if (t.relation >= m.relations().size()) return false;
    sum += Polynomial::term(m.ring(), t.multiplier, t.coefficient) * m.relations()[t.relation];
  }
  return sum == w.annihilator * w.element;
}

namespace {

CrossValidationRecord validate_one(const CorpusEntry& e) {
  CrossValidationRecord rec;
  rec.name = e.name;
  rec.expected = e.expected;
  rec.bounds_used = e.bounds;
  std::ostringstream trace;

  auto verdict = flat_check(e.problem, std::nullopt, e.limits);
  rec.engine_status = verdict.status;
  trace << "engine: " << to_string(verdict.status);
  bool engine_ok = true;
  if (verdict.certificate) {
    rec.engine_certificate = "(" + verdict.certificate->element.to_string() + ", " +
                             verdict.certificate->annihilator.to_string() + ")";
    engine_ok = verify_certificate(*verdict.tested_module, *verdict.certificate);
    trace << " certificate " << rec.engine_certificate
          << (engine_ok ? " re-verified" : " FAILED re-verification");
  }

  const auto n = static_cast<unsigned>(e.problem.base_dimension());
  std::optional<OracleWitness> found;
  if (n > 0) {
    auto power = tensor_power(e.problem.module(), n);
    auto bounds = e.bounds;
    try {
      found = brute_torsion_search(power, bounds);
      if (!found && verdict.status == FlatnessStatus::NotFlat) {
        bounds.witness_degree += 1;
        bounds.multiplier_degree += 2;
        trace << "; oracle empty at D=" << e.bounds.witness_degree
              << ", retrying at D=" << bounds.witness_degree;
        found = brute_torsion_search(power, bounds);
      }
    } catch (const BudgetExceeded&) {
      trace << "; oracle budget exhausted";
    }
    rec.bounds_used = bounds;
    if (found) {
      TorsionCertificate as_cert{found->element, found->annihilator};
      bool ok = check_combination(power, *found) && verify_certificate(power, as_cert);
      rec.oracle_witness = "(" + found->element.to_string() + ", " + found->annihilator.to_string() + ")";
      trace << "; oracle witness " << rec.oracle_witness
            << (ok ? " (combination and certificate checked)" : " (verification FAILED)");
      engine_ok = engine_ok && ok;
    } else {
      trace << "; oracle: none within D=" << bounds.witness_degree
            << ", E=" << bounds.multiplier_degree;
    }
  } else {
    trace << "; oracle skipped (no base variables)";
  }
  rec.oracle_found = found.has_value();

  bool consistent = false;
  if (verdict.status == FlatnessStatus::NotFlat) consistent = rec.oracle_found;
  if (verdict.status == FlatnessStatus::Flat) consistent = !rec.oracle_found;
  if (!consistent) trace << "; MISMATCH engine/oracle";
  bool matches_expected = !e.expected || *e.expected == verdict.status;
  if (!matches_expected) trace << "; MISMATCH expected " << to_string(*e.expected);
  if (e.expected_first_torsion && verdict.status != FlatnessStatus::ResourceExceeded) {
    try {
      Engine engine(e.limits);
      auto k = first_torsion_power(e.problem, engine);
      trace << "; first torsion power " << (k ? std::to_string(*k) : std::string("none"));
      if (k != *e.expected_first_torsion) {
        matches_expected = false;
        trace << "; MISMATCH expected first torsion power "
              << (*e.expected_first_torsion ? std::to_string(**e.expected_first_torsion)
                                            : std::string("none"));
      }
    } catch (const ResourceExceeded& ex) {
      matches_expected = false;
      trace << "; first torsion power undecided: " << ex.what();
    }
  }
  rec.agree = engine_ok && consistent && matches_expected;
  rec.trace = trace.str();
  return rec;
}

}  // namespace

std::vector<CrossValidationRecord> cross_validate(const std::vector<CorpusEntry>& corpus,
                                                  unsigned jobs) {
  std::vector<CrossValidationRecord> out(corpus.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < corpus.size();) {
      try {
        out[i] = validate_one(corpus[i]);
      } catch (...) {
        std::lock_guard lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(corpus.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  return out;
}

}  // namespace flatkit
