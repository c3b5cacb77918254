#include "flatkit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <json.hpp>
#include <ostream>

#include "flatkit/fibred_geometry.hpp"

namespace flatkit::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::optional<unsigned> max_degree;
  std::optional<std::size_t> max_basis;
  std::optional<double> timeout;
  bool timings = false;
};

ResourceLimits limits_from(const Options& o) {
  ResourceLimits l;
  if (o.max_degree) l.max_degree = *o.max_degree;
  if (o.max_basis) l.max_basis = *o.max_basis;
  std::optional<double> secs = o.timeout;
  if (!secs) {
    if (const char* env = std::getenv("FLATKIT_TIMEOUT")) {
      try {
        secs = std::stod(env);
      } catch (const std::exception&) {
        throw std::invalid_argument(std::string("FLATKIT_TIMEOUT is not a number: ") + env);
      }
    }
  }
  if (secs) {
    if (*secs <= 0) throw std::invalid_argument("timeout must be positive");
    l.time_budget = std::chrono::milliseconds(static_cast<long long>(*secs * 1000));
  }
  return l;
}

json strings(const std::vector<std::string>& v) { return json(v); }

json vector_json(const FreeModuleVector& v) {
  json a = json::array();
  for (const auto& p : v.entries()) a.push_back(p.to_string());
  return a;
}

json stats_json(const EngineStats& s) {
  return json{{"groebner_runs", s.groebner_runs},
              {"pairs_created", s.pairs_created},
              {"pairs_reduced", s.pairs_reduced},
              {"zero_reductions", s.zero_reductions},
              {"product_criterion_skips", s.product_criterion_skips},
              {"chain_criterion_skips", s.chain_criterion_skips},
              {"largest_basis", s.largest_basis},
              {"largest_degree", s.largest_degree}};
}

std::vector<std::string> variable_names(const RingPtr& ring) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ring->size(); ++i) out.push_back(ring->variable(i).name);
  return out;
}

json certificate_json(const ModulePresentation& m, const FreeModuleVector& element,
                      const Polynomial& annihilator, bool product_in, bool outside) {
  json rels = json::array();
  for (const auto& r : m.relations()) rels.push_back(vector_json(r));
  std::vector<std::string> base;
  for (auto i : m.tower().base_indices()) base.push_back(m.ring()->variable(i).name);
  return json{{"variables", variable_names(m.ring())},
              {"base_variables", base},
              {"rank", m.rank()},
              {"relations", rels},
              {"element", vector_json(element)},
              {"annihilator", annihilator.to_string()},
              {"product_in_relations", product_in},
              {"element_outside_relations", outside}};
}

std::string element_text(const FreeModuleVector& v) {
  return v.rank() == 1 ? v[0].to_string() : v.to_string();
}

void certificate_text(std::ostream& out, const ModulePresentation& m, const FreeModuleVector& element,
                      const Polynomial& annihilator, bool full) {
  out << "certificate: m = " << element_text(element) << ", r = " << annihilator.to_string() << "\n";
  if (!full) return;
  out << "  ring: Q[";
  auto names = variable_names(m.ring());
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
  out << "], rank " << m.rank() << "\n  relations N:\n";
  for (const auto& r : m.relations()) out << "    " << element_text(r) << "\n";
  out << "  check: r*m in N and m not in N\n";
}

class Runner {
 public:
  Runner(Options opts, std::ostream& out) : o_(std::move(opts)), out_(out) {}

  bool json_mode() const { return o_.format == "json"; }

  void emit(json j, std::chrono::milliseconds elapsed) {
    if (o_.timings) j["elapsed_ms"] = elapsed.count();
    out_ << j.dump(2) << "\n";
  }

  int flatcheck(const ProblemFile& f, std::optional<unsigned> power, bool at_origin, bool show_cert) {
    const auto limits = limits_from(o_);
    auto v = at_origin ? flat_at_origin(f.problem(), limits) : flat_check(f.problem(), power, limits);
    int code = Ok;
    if (v.status == FlatnessStatus::NotFlat) code = NotFlat;
    if (v.status == FlatnessStatus::ResourceExceeded) code = ResourceLimit;
    if (json_mode()) {
      json j{{"command", "flatcheck"},
             {"status", to_string(v.status)},
             {"scope", v.scope == VerdictScope::Global ? "global" : "origin"},
             {"power", v.power_used},
             {"base_dimension", f.base.size()},
             {"authoritative", v.authoritative},
             {"notices", strings(v.notices)}};
      if (v.certificate)
        j["certificate"] = certificate_json(*v.tested_module, v.certificate->element,
                                            v.certificate->annihilator,
                                            v.certificate->product_in_relations,
                                            v.certificate->element_outside_relations);
      else
        j["certificate"] = nullptr;
      j["statistics"] = stats_json(v.stats);
      emit(std::move(j), v.elapsed);
    } else {
      out_ << to_string(v.status);
      if (v.scope == VerdictScope::AtOrigin) out_ << " (at the origin)";
      out_ << "\npower " << v.power_used << ", base dimension " << f.base.size() << "\n";
      for (const auto& n : v.notices) out_ << n << "\n";
      if (v.certificate && show_cert)
        certificate_text(out_, *v.tested_module, v.certificate->element, v.certificate->annihilator, true);
      if (o_.timings) out_ << "elapsed " << v.elapsed.count() << " ms\n";
    }
    return code;
  }

  int torsion(const ProblemFile& f, std::optional<unsigned> power) {
    Engine engine(limits_from(o_));
    const unsigned k = power.value_or(std::max<unsigned>(1, static_cast<unsigned>(f.base.size())));
    if (k == 0) throw std::invalid_argument("power must be at least 1");
    auto m = tensor_power(f.problem().module(), k);
    auto t = torsion_submodule(m, engine);
    std::optional<TorsionCertificate> cert;
    if (!t.generators.empty()) cert = make_certificate(m, t.generators.front(), engine);
    if (json_mode()) {
      json gens = json::array();
      for (const auto& g : t.generators) gens.push_back(vector_json(g));
      std::vector<std::string> factors;
      for (const auto& c : t.clearing_factors) factors.push_back(c.to_string());
      json j{{"command", "torsion"},
             {"power", k},
             {"torsion_free", t.generators.empty()},
             {"generators", gens},
             {"clearing_factors", factors},
             {"certificate", cert ? certificate_json(m, cert->element, cert->annihilator,
                                                     cert->product_in_relations,
                                                     cert->element_outside_relations)
                                  : json(nullptr)},
             {"statistics", stats_json(engine.stats())}};
      emit(std::move(j), engine.elapsed());
    } else {
      out_ << "power " << k << ": " << (t.generators.empty() ? "torsion-free" : "torsion") << "\n";
      if (!t.clearing_factors.empty()) {
        out_ << "clearing factors:";
        for (const auto& c : t.clearing_factors) out_ << " " << c.to_string();
        out_ << "\n";
      }
      for (const auto& g : t.generators) out_ << "  " << element_text(g) << "\n";
      if (cert) certificate_text(out_, m, cert->element, cert->annihilator, false);
    }
    return t.generators.empty() ? Ok : NotFlat;
  }

  int first_torsion(const ProblemFile& f) {
    Engine engine(limits_from(o_));
    auto k = first_torsion_power(f.problem(), engine);
    if (json_mode()) {
      emit(json{{"command", "first-torsion-power"},
                {"base_dimension", f.base.size()},
                {"first_torsion_power", k ? json(*k) : json(nullptr)},
                {"statistics", stats_json(engine.stats())}},
           engine.elapsed());
    } else {
      out_ << "first torsion power: " << (k ? std::to_string(*k) : std::string("none")) << " (n = "
           << f.base.size() << ")\n";
    }
    return k ? NotFlat : Ok;
  }

  int fibredim(const ProblemFile& f, const std::string& point_name) {
    Engine engine(limits_from(o_));
    const auto& pt = f.point(point_name);
    auto r = fibre_report(f.algebra, pt, engine);
    std::vector<std::string> coords;
    for (const auto& c : pt) coords.push_back(c.get_str());
    if (json_mode()) {
      emit(json{{"command", "fibredim"},
                {"point", point_name},
                {"coordinates", coords},
                {"fibre_dimension", r.fibre_dimension_at_point},
                {"generic_fibre_dimension", r.generic_fibre_dimension},
                {"source_dimension", r.source_dimension},
                {"image_closure", r.image_closure.to_strings()},
                {"dominant", r.dominant}},
           engine.elapsed());
    } else {
      out_ << "fibre dimension at " << point_name << ": " << r.fibre_dimension_at_point
           << (r.fibre_dimension_at_point < 0 ? " (empty fibre)" : "") << "\n";
      out_ << "generic fibre dimension: " << r.generic_fibre_dimension << "\n";
      out_ << "source dimension: " << r.source_dimension << "\n";
      out_ << "dominant: " << (r.dominant ? "yes" : "no") << "\n";
    }
    return Ok;
  }

  int image(const ProblemFile& f) {
    Engine engine(limits_from(o_));
    auto img = image_closure(f.algebra, engine);
    auto gens = img.to_strings();
    if (json_mode()) {
      emit(json{{"command", "image"}, {"image_closure", gens}, {"dominant", img.is_zero()}},
           engine.elapsed());
    } else {
      out_ << "image closure: (";
      if (gens.empty()) out_ << "0";
      for (std::size_t i = 0; i < gens.size(); ++i) out_ << (i ? ", " : "") << gens[i];
      out_ << ")\n";
    }
    return Ok;
  }

  int gb(const ProblemFile& f, const std::string& order_name) {
    Engine engine(limits_from(o_));
    auto m = f.problem().module();
    const auto nv = m.ring()->size();
    MonomialOrder order = order_name == "lex"       ? MonomialOrder::lex(nv)
                          : order_name == "block" ? MonomialOrder::elimination(nv, m.tower().fiber_indices())
                                                  : MonomialOrder::grevlex(nv);
    auto g = buchberger(m.submodule(), order, engine);
    json elems = json::array();
    for (const auto& e : g.elements()) elems.push_back(m.rank() == 1 ? json(e[0].to_string()) : vector_json(e));
    if (json_mode()) {
      emit(json{{"command", "gb"},
                {"order", order_name},
                {"rank", m.rank()},
                {"basis", elems},
                {"statistics", stats_json(engine.stats())}},
           engine.elapsed());
    } else {
      out_ << "reduced basis (" << order_name << ", " << g.size() << " elements):\n";
      for (const auto& e : g.elements()) out_ << "  " << element_text(e) << "\n";
    }
    return Ok;
  }

  int oracle(const ProblemFile& f, std::optional<unsigned> degree, std::optional<unsigned> mult,
             std::optional<unsigned> power) {
    const unsigned n = static_cast<unsigned>(f.base.size());
    const unsigned k = power.value_or(std::max(1u, n));
    if (k == 0) throw std::invalid_argument("power must be at least 1");
    auto m = tensor_power(f.problem().module(), k);
    const unsigned d = degree ? *degree : f.oracle ? f.oracle->degree : 1;
    auto b = SearchBounds::recommended(m, d);
    if (mult) b.multiplier_degree = *mult;
    else if (!degree && f.oracle && f.oracle->multiplier_degree) b.multiplier_degree = *f.oracle->multiplier_degree;
    b.budget = limits_from(o_).time_budget;
    const auto start = std::chrono::steady_clock::now();
    auto w = brute_torsion_search(m, b);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    if (json_mode()) {
      json j{{"command", "oracle"},
             {"power", k},
             {"witness_degree", b.witness_degree},
             {"multiplier_degree", b.multiplier_degree},
             {"found", w.has_value()}};
      if (w) {
        json comb = json::array();
        for (const auto& t : w->combination)
          comb.push_back(json{{"coefficient", t.coefficient.get_str()},
                              {"multiplier", Polynomial::term(m.ring(), t.multiplier, Rational(1)).to_string()},
                              {"relation", t.relation}});
        j["witness"] = certificate_json(m, w->element, w->annihilator, check_combination(m, *w), true);
        j["combination"] = comb;
      } else {
        j["witness"] = nullptr;
      }
      emit(std::move(j), elapsed);
    } else if (w) {
      out_ << "witness at power " << k << " (D = " << b.witness_degree << ", E = " << b.multiplier_degree
           << "):\n";
      certificate_text(out_, m, w->element, w->annihilator, false);
      out_ << "  r*m is a combination of " << w->combination.size() << " relation multiples\n";
    } else {
      out_ << "no witness <= bounds (D = " << b.witness_degree << ", E = " << b.multiplier_degree
           << ") at power " << k << "\n";
    }
    return w ? NotFlat : Ok;
  }

  int corpus(const std::filesystem::path& dir, unsigned jobs) {
    auto entries = load_corpus(dir, limits_from(o_));
    const auto start = std::chrono::steady_clock::now();
    auto report = cross_validate(entries, jobs);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    bool all = std::all_of(report.begin(), report.end(), [](const auto& r) { return r.agree; });
    if (json_mode()) {
      json rows = json::array();
      for (const auto& r : report)
        rows.push_back(json{{"name", r.name},
                            {"engine", to_string(r.engine_status)},
                            {"expected", r.expected ? json(to_string(*r.expected)) : json(nullptr)},
                            {"oracle_found", r.oracle_found},
                            {"witness_degree", r.bounds_used.witness_degree},
                            {"multiplier_degree", r.bounds_used.multiplier_degree},
                            {"agree", r.agree},
                            {"trace", r.trace}});
      emit(json{{"command", "corpus"}, {"all_agree", all}, {"entries", rows}}, elapsed);
    } else {
      for (const auto& r : report)
        out_ << (r.agree ? "agree    " : "MISMATCH ") << r.name << ": " << r.trace << "\n";
      out_ << report.size() << " instances, " << (all ? "all agree" : "mismatches found") << "\n";
    }
    return all ? Ok : NotFlat;
  }

  int vertical(const ProblemFile& f, std::optional<unsigned> power) {
    Engine engine(limits_from(o_));
    const unsigned k = power.value_or(std::max(1u, static_cast<unsigned>(f.base.size())));
    if (k == 0) throw std::invalid_argument("power must be at least 1");
    auto tower = f.algebra.power(k);
    std::vector<ComponentIdeal> comps;
    for (const auto& c : f.components)
      comps.push_back(ComponentIdeal::over(tower, c.label, parse_polynomial_list(c.source, tower.ring(), c.location)));
    json rows = json::array();
    for (const auto& c : comps) {
      auto v = is_algebraically_vertical(tower, c, engine);
      if (json_mode()) {
        rows.push_back(json{{"label", c.label},
                            {"vertical", v.vertical},
                            {"empty", v.empty_component},
                            {"image_closure", v.image.to_strings()}});
      } else {
        out_ << c.label << ": " << (v.empty_component ? "empty" : v.vertical ? "vertical" : "not vertical");
        auto gens = v.image.to_strings();
        out_ << ", image closure (";
        if (gens.empty()) out_ << "0";
        for (std::size_t i = 0; i < gens.size(); ++i) out_ << (i ? ", " : "") << gens[i];
        out_ << ")\n";
      }
    }
    if (json_mode())
      emit(json{{"command", "vertical"}, {"power", k}, {"components", rows}}, engine.elapsed());
    else if (comps.empty())
      out_ << "no component sections in the problem file\n";
    return Ok;
  }

 private:
  Options o_;
  std::ostream& out_;
};

}  // namespace

CorpusEntry corpus_entry(const std::string& name, const ProblemFile& file, const ResourceLimits& limits) {
  auto problem = file.problem();
  CorpusEntry e{name, problem, std::nullopt, std::nullopt, {}, limits};
  if (file.expect) {
    e.expected = file.expect->verdict == ExpectedVerdict::Flat ? FlatnessStatus::Flat : FlatnessStatus::NotFlat;
    e.expected_first_torsion = file.expect->first_torsion_power;
  }
  const unsigned d = file.oracle ? file.oracle->degree : 1;
  const unsigned n = static_cast<unsigned>(problem.base_dimension());
  e.bounds = SearchBounds::recommended(tensor_power(problem.module(), std::max(1u, n)), d);
  if (file.oracle && file.oracle->multiplier_degree) e.bounds.multiplier_degree = *file.oracle->multiplier_degree;
  e.bounds.budget = limits.time_budget;
  return e;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir, const ResourceLimits& limits) {
  std::vector<std::filesystem::path> files;
  for (const auto& d : std::filesystem::directory_iterator(dir))
    if (d.is_regular_file() && d.path().extension() == ".prob") files.push_back(d.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& p : files) out.push_back(corpus_entry(p.stem().string(), load_problem(p), limits));
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"flatkit: exact flatness testing over Q[y1..yn]", "flatkit"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-degree", o.max_degree, "largest degree allowed in a Groebner computation");
  app.add_option("--max-basis", o.max_basis, "largest basis allowed in a Groebner computation");
  app.add_option("--timeout", o.timeout, "time budget in seconds (fallback: FLATKIT_TIMEOUT)");
  app.add_flag("--timings", o.timings, "include wall-clock timings in the output");

  std::string file;
  std::optional<unsigned> power, degree, mult;
  bool at_origin = false, show_cert = false;
  std::string point, order = "grevlex";
  unsigned jobs = 1;

  auto* flat = app.add_subcommand("flatcheck", "decide flatness of F over the base");
  flat->add_option("file", file, "problem file")->required();
  flat->add_option("--power", power, "tensor power to test (default: base dimension)");
  flat->add_flag("--at-origin", at_origin, "flatness of the localization at the origin");
  flat->add_flag("--certificate", show_cert, "print the self-contained certificate");

  auto* tors = app.add_subcommand("torsion", "torsion of a tensor power of F");
  tors->add_option("file", file, "problem file")->required();
  tors->add_option("--power", power, "tensor power (default: base dimension)");

  auto* ftp = app.add_subcommand("first-torsion-power", "smallest k <= n with torsion in F^k");
  ftp->add_option("file", file, "problem file")->required();

  auto* fib = app.add_subcommand(
      "fibredim",
      "fibre dimension at a named point; the filtration by fibre dimension is not computed");
  fib->add_option("file", file, "problem file")->required();
  fib->add_option("--point", point, "point name from the problem file")->required();

  auto* img = app.add_subcommand("image", "closure of the image in the base");
  img->add_option("file", file, "problem file")->required();

  auto* gbc = app.add_subcommand("gb", "reduced Groebner basis of the relations");
  gbc->add_option("file", file, "problem file")->required();
  gbc->add_option("--order", order, "monomial order")->check(CLI::IsMember({"grevlex", "lex", "block"}));

  auto* orc = app.add_subcommand("oracle", "brute-force torsion search by linear algebra");
  orc->add_option("file", file, "problem file")->required();
  orc->add_option("--degree", degree, "witness degree bound D");
  orc->add_option("--multiplier-degree", mult, "relation multiple degree bound E");
  orc->add_option("--power", power, "tensor power (default: base dimension)");

  auto* cor = app.add_subcommand("corpus", "cross-validate engine and oracle on a directory");
  cor->add_option("dir", file, "corpus directory")->required();
  cor->add_option("--jobs", jobs, "instances run concurrently")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand(
      "vertical",
      "verticality of the component sections (caller-supplied components only; no decomposition)");
  ver->add_option("file", file, "problem file")->required();
  ver->add_option("--power", power, "fibred power the components live in (default: base dimension)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return InputError;
  }

  Runner runner(o, out);
  try {
    if (*cor) return runner.corpus(file, jobs);
    ProblemFile pf;
    try {
      pf = load_problem(file);
    } catch (const ParseError& e) {
      err << file << ":" << e.what() << "\n";
      return InputError;
    } catch (const SemanticError& e) {
      err << file << ":" << e.what() << "\n";
      return InputError;
    } catch (const std::runtime_error& e) {
      err << "error: " << e.what() << "\n";
      return InputError;
    }
    if (*flat) return runner.flatcheck(pf, power, at_origin, show_cert);
    if (*tors) return runner.torsion(pf, power);
    if (*ftp) return runner.first_torsion(pf);
    if (*fib) return runner.fibredim(pf, point);
    if (*img) return runner.image(pf);
    if (*gbc) return runner.gb(pf, order);
    if (*orc) return runner.oracle(pf, degree, mult, power);
    if (*ver) return runner.vertical(pf, power);
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return InputError;
  } catch (const SemanticError& e) {
    err << e.what() << "\n";
    return InputError;
  } catch (const ResourceExceeded& e) {
    err << "resource limit: " << e.what() << "\n";
    return ResourceLimit;
  } catch (const BudgetExceeded& e) {
    err << "resource limit: " << e.what() << "\n";
    return ResourceLimit;
  } catch (const CertificateFailure& e) {
    err << "certificate verification failed: " << e.what() << "\n";
    return CertificateError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return InputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return CertificateError;
  }
  return Ok;
}

}  // namespace flatkit::cli
