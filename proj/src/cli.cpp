#include "garside/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "garside/errors.hpp"
#include "garside/homology.hpp"
#include "garside/interval.hpp"
#include "garside/monoid.hpp"
#include "garside/presentation.hpp"
#include "garside/words.hpp"

namespace garside::cli {

std::size_t RunConfig::effective_group_cap() const { return group_cap ? group_cap : default_group_cap(); }

void RunConfig::validate() const {
  validate_interval_params(params(), k);
  if (rewrite_cap == 0) throw std::invalid_argument("rewrite cap must be positive");
}

std::string RegressionRecord::to_line() const {
  io::Json j{{"key", key}, {"value", value}, {"version", version}};
  return j.dump();
}

namespace {

std::size_t interval_size(int e, int n) {
  std::size_t s = 1;
  for (int i = 2; i <= n; ++i) s *= static_cast<std::size_t>(e + 2 * i - 2);
  return s;
}

std::string point_key(const std::string& what, const RunConfig& c) {
  return what + " e=" + std::to_string(c.e) + " n=" + std::to_string(c.n) + " k=" + std::to_string(c.k);
}

}  // namespace

std::vector<RunConfig> default_grid() {
  std::vector<RunConfig> out;
  for (int e = 2; e <= 6; ++e)
    for (int n = 2; n <= 4; ++n) {
      if (group_order({e, n}) > 100000) continue;
      const std::size_t d = interval_size(e, n);
      if (d * d > 10000000) continue;
      for (int k = 1; k < e; ++k) {
        RunConfig c;
        c.e = e;
        c.n = n;
        c.k = k;
        out.push_back(c);
      }
    }
  return out;
}

std::vector<RegressionRecord> regression_records(const RunConfig& c) {
  c.validate();
  const GroupParams p = c.params();
  std::vector<RegressionRecord> out;
  if (c.k == 1) {
    const auto top = maximal_length_elements(p, c.effective_group_cap());
    out.push_back({"census e=" + std::to_string(c.e) + " n=" + std::to_string(c.n),
                   io::Json{{"order", group_order(p)},
                            {"max_length", top.empty() ? 0 : length(top.front())},
                            {"max_length_count", top.size()}}});
  }
  const Interval interval = build_interval(p, c.k, c.effective_group_cap());
  out.push_back({point_key("interval", c), io::Json{{"size", interval.size()},
                                                    {"delta_length", interval.lengths.back()},
                                                    {"lattice", verify_lattice(interval).ok()}}});
  const Presentation pres = emit_presentation(p, c.k);
  out.push_back({point_key("presentation", c), io::Json{{"generators", pres.generators.size()},
                                                        {"relations", pres.relations.size()},
                                                        {"t_cycle_components", t_cycle_components(c.e, c.k)}}});
  if (c.n >= 3) {
    const GarsideStructure g(interval);
    for (int r = 1; r <= 2; ++r)
      out.push_back({point_key("homology", c) + " order=" + std::to_string(r), io::to_json(homology_group(g, r))});
  }
  return out;
}

FreezeOutcome freeze_regressions(const std::vector<RunConfig>& grid, const std::string& path) {
  std::map<std::string, std::string> existing;
  {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      existing.emplace(io::Json::parse(line).at("key").get<std::string>(), line);
    }
  }

  std::vector<std::vector<RegressionRecord>> results(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < grid.size();) {
      try {
        results[i] = regression_records(grid[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, std::max<std::size_t>(grid.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  FreezeOutcome outcome;
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + path);
  for (const auto& records : results)
    for (const auto& r : records) {
      const std::string line = r.to_line();
      auto it = existing.find(r.key);
      if (it == existing.end()) {
        out << line << '\n';
        existing.emplace(r.key, line);
        ++outcome.written;
      } else if (it->second == line) {
        ++outcome.matched;
      } else {
        outcome.drifted.push_back(r.key);
      }
    }
  return outcome;
}

// ---------------------------------------------------------------------------

namespace {

GroupElement evaluate_letters(const SignedWord& word, const GroupParams& p, int k) {
  GroupElement out = GroupElement::identity(p);
  const GroupElement top = lambda_power(p, k);
  const GroupElement top_inv = inverse(top);
  for (const auto& l : word) {
    if (l.kind == Letter::Kind::Delta)
      out = out * (l.inverse ? top_inv : top);
    else
      out = out * generator_matrix(l.atom, p);
  }
  return out;
}

struct SuiteResult {
  std::string name;
  bool ok = true;
  io::Json detail = io::Json::object();
};

SuiteResult suite_lattice(const GarsideStructure& g) {
  const auto report = verify_lattice(g.interval());
  SuiteResult r{"lattice", report.ok()};
  r.detail = {{"size", g.size()},
              {"meet_left", report.meet_left},
              {"join_left", report.join_left},
              {"meet_right", report.meet_right},
              {"join_right", report.join_right}};
  if (!report.ok()) r.detail["detail"] = report.detail;
  return r;
}

SuiteResult suite_lcm(const GarsideStructure& g) {
  const auto table = atom_lcm_table(g.interval());
  SuiteResult r{"lcm", table.failures.empty()};
  r.detail = {{"atoms", table.atoms.size()}, {"failures", table.failures}};
  return r;
}

SuiteResult suite_normal_form(const GarsideStructure& g, const RunConfig& c, int samples) {
  const GroupParams p = g.params();
  const auto gens = generators(p);
  std::mt19937_64 rng(c.seed);
  std::uniform_int_distribution<int> len(0, 24);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()));
  std::bernoulli_distribution flip(0.3);
  int failures = 0;
  for (int s = 0; s < samples; ++s) {
    SignedWord w;
    for (int i = len(rng); i > 0; --i) {
      Letter l;
      const int x = pick(rng);
      if (x == static_cast<int>(gens.size()))
        l.kind = Letter::Kind::Delta;
      else
        l.atom = gens[x];
      l.inverse = flip(rng);
      w.push_back(l);
    }
    const NormalForm nf = g.normal_form(w);
    bool ok = g.image(nf) == evaluate_letters(w, p, c.k);
    for (std::size_t i = 0; i + 1 < nf.factors.size(); ++i) ok = ok && g.is_left_greedy(nf.factors[i], nf.factors[i + 1]);
    NormalForm again;
    again.delta_power = nf.delta_power;
    for (int f : nf.factors) g.right_multiply(again, f);
    ok = ok && again == nf;
    if (!ok) ++failures;
  }
  int relation_failures = 0;
  for (const auto& rel : emit_presentation(p, c.k).relations)
    if (g.normal_form(to_signed(rel.lhs)) != g.normal_form(to_signed(rel.rhs))) ++relation_failures;
  SuiteResult r{"normal-form", failures == 0 && relation_failures == 0};
  r.detail = {{"samples", samples}, {"failures", failures}, {"relation_failures", relation_failures}};
  return r;
}

SuiteResult suite_matsumoto(const GarsideStructure& g, const RunConfig& c) {
  const Presentation pres = emit_presentation(g.params(), c.k);
  std::size_t bad = 0, words = 0;
  for (const auto& w : g.interval().members) {
    const auto m = matsumoto_check(pres, w, c.rewrite_cap);
    words += m.reduced_words;
    if (!m.ok) ++bad;
  }
  SuiteResult r{"matsumoto", bad == 0};
  r.detail = {{"members", g.size()}, {"reduced_words", words}, {"failures", bad}};
  return r;
}

SuiteResult suite_embedding(const GarsideStructure& g) {
  SuiteResult r{"embedding"};
  int pairs = 0;
  std::vector<std::string> failures;
  for (int i = 0; i < g.params().e; ++i) {
    const auto check = embedding_lcm_check(g, i);
    pairs += check.pairs_checked;
    failures.insert(failures.end(), check.failures.begin(), check.failures.end());
  }
  r.ok = failures.empty();
  r.detail = {{"pairs", pairs}, {"failures", failures}};
  return r;
}

SuiteResult suite_homology(const GarsideStructure& g) {
  SuiteResult r{"homology"};
  io::Json mismatches = io::Json::array();
  IntMatrix d2, d3;
  for (int deg = 2; deg <= 3; ++deg) {
    const auto closed = differential_closed_form(g, deg);
    const auto generic = differential_generic(g, deg);
    if (!(closed == generic)) mismatches.push_back(deg);
    (deg == 2 ? d2 : d3) = generic;
  }
  const bool chain = (d2 * d3).is_zero();
  r.ok = mismatches.empty() && chain;
  r.detail = {{"closed_vs_generic_mismatch", mismatches}, {"chain_condition", chain}};
  return r;
}

class Dispatcher {
 public:
  Dispatcher(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Garside structures on intervals of G(e,e,n)", "garside"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.add_option("--cap", config_.group_cap, "group-size cap (default: GARSIDE_CAP or 1000000)");

    auto point = [&](CLI::App* sub, bool with_k) {
      sub->add_option("--e", config_.e, "order of the roots of unity")->required();
      sub->add_option("--n", config_.n, "matrix size")->required();
      if (with_k) sub->add_option("--k", config_.k, "interval index, 1 <= k <= e-1")->required();
    };

    std::string element, word, w1, w2, export_format, export_path, dot_path, method = "closed", dump_path, suite = "all",
                                                                               points, freeze_path;
    int order = 1, samples = 1000;
    bool verify_lattice_flag = false, use_default_grid = false;

    auto* reduce = app.add_subcommand("reduce", "reduced expression of an element");
    point(reduce, false);
    reduce->add_option("--element", element, "element as JSON")->required();
    auto* len = app.add_subcommand("length", "length of an element");
    point(len, false);
    len->add_option("--element", element, "element as JSON")->required();
    auto* bfs = app.add_subcommand("bfs-length", "");
    point(bfs, false);
    bfs->add_option("--element", element)->required();
    bfs->group("");

    auto* interval = app.add_subcommand("interval", "divisor interval of lambda^k");
    point(interval, true);
    interval->add_flag("--verify-lattice", verify_lattice_flag, "check meets and joins for both orders");
    std::vector<std::string> export_args;
    interval->add_option("--export", export_args, "FORMAT PATH with FORMAT dot or json")->expected(2);

    auto* nf = app.add_subcommand("nf", "normal form of a signed word");
    point(nf, true);
    nf->add_option("--word", word, "e.g. \"t0 s3 t1^-1 D\"")->required();
    auto* equal = app.add_subcommand("equal", "word problem in the group of fractions");
    point(equal, true);
    equal->add_option("--w1", w1)->required();
    equal->add_option("--w2", w2)->required();

    auto* pres = app.add_subcommand("presentation", "presentation of the interval monoid");
    point(pres, true);
    pres->add_option("--dot", dot_path, "write the diagram as DOT");

    auto* hom = app.add_subcommand("homology", "H_1 or H_2 of the interval group");
    point(hom, true);
    hom->add_option("--order", order)->required()->check(CLI::IsMember({1, 2}));
    hom->add_option("--method", method)->check(CLI::IsMember({"closed", "generic", "both"}));
    hom->add_option("--dump-matrices", dump_path, "write d2 and d3 as JSON");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    point(verify, true);
    verify->add_option("--suite", suite)->check(
        CLI::IsMember({"lattice", "lcm", "normal-form", "matsumoto", "embedding", "homology", "all"}));
    verify->add_option("--samples", samples, "random words for the normal-form suite")->check(CLI::PositiveNumber);
    verify->add_option("--seed", config_.seed);
    verify->add_option("--rewrite-cap", config_.rewrite_cap);

    auto* freeze = app.add_subcommand("freeze", "write or compare regression records");
    freeze->add_option("--path", freeze_path)->required();
    freeze->add_flag("--default-grid", use_default_grid);
    freeze->add_option("--points", points, "\"e,n,k e,n,k ...\"");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kUsage;
    }

    if (*reduce || *len || *bfs) {
      const GroupParams p = config_.params();
      p.validate();
      const GroupElement w = io::element_from_json(element, p);
      if (*reduce) out_ << to_string(reduced_expression(w)) << '\n';
      if (*len) out_ << length(w) << '\n';
      if (*bfs) out_ << cayley_distances(p, config_.effective_group_cap())[group_rank(w)] << '\n';
      return kOk;
    }
    if (!export_args.empty()) {
      export_format = export_args[0];
      export_path = export_args[1];
      if (export_format != "dot" && export_format != "json")
        throw std::invalid_argument("--export format must be dot or json");
    }
    if (*freeze) return run_freeze(freeze_path, use_default_grid, points);

    config_.validate();
    if (*pres) return run_presentation(dot_path);

    const GarsideStructure g(build_interval(config_.params(), config_.k, config_.effective_group_cap()));
    if (*interval) return run_interval(g, verify_lattice_flag, export_format, export_path);
    if (*nf) {
      out_ << io::to_json(g, g.normal_form(word)).dump() << '\n';
      return kOk;
    }
    if (*equal) {
      const bool same = g.words_equal(w1, w2);
      out_ << (same ? "true" : "false") << '\n';
      return same ? kOk : kFalse;
    }
    if (*hom) return run_homology(g, order, method, dump_path);
    if (*verify) return run_verify(g, suite, samples);
    return kUsage;
  }

 private:
  int run_interval(const GarsideStructure& g, bool verify, const std::string& format, const std::string& path) {
    const Interval& iv = g.interval();
    io::Json j{{"e", iv.params.e}, {"n", iv.params.n}, {"k", iv.k}, {"size", iv.size()}, {"delta_length", iv.lengths.back()}};
    int code = kOk;
    if (verify) {
      const auto report = verify_lattice(iv);
      j["lattice"] = report.ok();
      if (!report.ok()) {
        err_ << "garside: lattice check failed: " << report.detail << '\n';
        code = kTheoremViolation;
      }
    }
    if (!format.empty()) {
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot open " + path);
      if (format == "dot")
        f << io::interval_dot(iv);
      else
        f << io::interval_json(iv).dump() << '\n';
      err_ << "garside: wrote " << path << '\n';
    }
    out_ << j.dump() << '\n';
    return code;
  }

  int run_presentation(const std::string& dot_path) {
    const Presentation p = emit_presentation(config_.params(), config_.k);
    io::Json rels = io::Json::array();
    for (const auto& r : p.relations) rels.push_back(to_string(r.lhs) + " = " + to_string(r.rhs));
    io::Json gens = io::Json::array();
    for (const auto& g : p.generators) gens.push_back(g.to_string());
    if (!dot_path.empty()) {
      std::ofstream f(dot_path);
      if (!f) throw std::runtime_error("cannot open " + dot_path);
      f << presentation_dot(p);
      err_ << "garside: wrote " << dot_path << '\n';
    }
    out_ << io::Json{{"generators", gens}, {"relations", rels}, {"t_cycle_components", t_cycle_components(config_.e, config_.k)}}
                .dump()
         << '\n';
    return kOk;
  }

  int run_homology(const GarsideStructure& g, int order, const std::string& method, const std::string& dump_path) {
    if (!dump_path.empty()) {
      const auto d = [&](int r) {
        return method == "generic" ? differential_generic(g, r) : differential_closed_form(g, r);
      };
      std::ofstream f(dump_path);
      if (!f) throw std::runtime_error("cannot open " + dump_path);
      f << io::Json{{"d2", io::to_json(d(2))}, {"d3", io::to_json(d(3))}}.dump() << '\n';
      err_ << "garside: wrote " << dump_path << '\n';
    }
    if (method == "both") {
      const auto closed = homology_group(g, order, DifferentialMethod::Closed);
      const auto generic = homology_group(g, order, DifferentialMethod::Generic);
      if (!(closed == generic)) {
        err_ << "garside: closed-form and generic differentials disagree: " << closed.to_string() << " vs "
             << generic.to_string() << '\n';
        out_ << io::Json{{"closed", io::to_json(closed)}, {"generic", io::to_json(generic)}}.dump() << '\n';
        return kTheoremViolation;
      }
      out_ << io::to_json(closed).dump() << '\n';
      return kOk;
    }
    const auto m = method == "generic" ? DifferentialMethod::Generic : DifferentialMethod::Closed;
    out_ << io::to_json(homology_group(g, order, m)).dump() << '\n';
    return kOk;
  }

  int run_verify(const GarsideStructure& g, const std::string& suite, int samples) {
    std::vector<SuiteResult> results;
    const bool all = suite == "all";
    if (all || suite == "lattice") results.push_back(suite_lattice(g));
    if (all || suite == "lcm") results.push_back(suite_lcm(g));
    if (all || suite == "normal-form") results.push_back(suite_normal_form(g, config_, samples));
    if (all || suite == "matsumoto") results.push_back(suite_matsumoto(g, config_));
    if (config_.n >= 3) {
      if (all || suite == "embedding") results.push_back(suite_embedding(g));
      if (all || suite == "homology") results.push_back(suite_homology(g));
    } else if (suite == "embedding" || suite == "homology") {
      throw std::invalid_argument(suite + " suite needs n >= 3");
    }
    bool ok = true;
    io::Json j = io::Json::object();
    for (const auto& r : results) {
      ok = ok && r.ok;
      io::Json d = r.detail;
      d["ok"] = r.ok;
      j[r.name] = d;
      err_ << "garside: " << r.name << (r.ok ? " ok" : " FAILED") << '\n';
    }
    out_ << io::Json{{"ok", ok}, {"suites", j}}.dump() << '\n';
    return ok ? kOk : kTheoremViolation;
  }

  int run_freeze(const std::string& path, bool use_default, const std::string& points) {
    std::vector<RunConfig> grid;
    if (use_default) grid = default_grid();
    std::istringstream in(points);
    for (std::string token; in >> token;) {
      RunConfig c = config_;
      char c1 = 0, c2 = 0;
      std::istringstream t(token);
      if (!(t >> c.e >> c1 >> c.n >> c2 >> c.k) || c1 != ',' || c2 != ',' || !t.eof())
        throw std::invalid_argument("bad grid point '" + token + "' (expected e,n,k)");
      c.validate();
      grid.push_back(c);
    }
    err_ << "garside: freezing " << grid.size() << " grid points\n";
    const auto outcome = freeze_regressions(grid, path);
    if (grid.empty()) std::ofstream(path, std::ios::app);
    for (const auto& key : outcome.drifted) err_ << "garside: drift in " << key << '\n';
    out_ << io::Json{{"written", outcome.written}, {"matched", outcome.matched}, {"drifted", outcome.drifted}}.dump()
         << '\n';
    return outcome.drifted.empty() ? kOk : kFalse;
  }

  std::ostream& out_;
  std::ostream& err_;
  RunConfig config_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return Dispatcher(out, err).run(args);
  } catch (const CapExceeded& e) {
    err << "garside: cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const TheoremViolation& e) {
    err << "garside: theorem violation: " << e.what() << '\n';
    return kTheoremViolation;
  } catch (const io::Json::exception& e) {
    err << "garside: bad JSON: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "garside: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "garside: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "garside: error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace garside::cli
