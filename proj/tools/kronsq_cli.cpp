#include "kronsq/cache.hpp"
#include "kronsq/diagram.hpp"
#include "kronsq/json_io.hpp"
#include "kronsq/kronecker.hpp"
#include "kronsq/oracle.hpp"
#include "kronsq/removable.hpp"
#include "kronsq/saxl.hpp"
#include "kronsq/tableaux.hpp"
#include "kronsq/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <stdexcept>
#include <string>

using namespace kronsq;

namespace {

constexpr int kInvalid = 2;
constexpr int kInternal = 1;
constexpr int kVerifyFailed = 3;

struct Options {
  bool json = false;
  bool no_cache = false;

  int size = 0;
  bool connected = false;
  std::string lambda, mu, nu, nubar, pibar, shape, rho, cls, via = "classes", suite = "all";
  int max_size = 4;
  bool border_strips = false;
  int eval_k = -1;
  bool table = false;
  int scan = -1;
};

std::string paren(const Partition& p) { return "(" + p.str() + ")"; }

int weight_of(const std::string& key) { return DiagramClass::parse(key).size(); }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json partition_json(const Partition& p) { return Json(p.parts()); }

std::string roots_str(const UniPoly& p) {
  std::string out;
  for (const auto& r : real_roots(p, Rational(1, 1000000000)))
    for (int i = 0; i < r.multiplicity; ++i) out += (out.empty() ? "" : ", ") + format_root(r);
  return out;
}

Json p_payload(const PolyCache& cache, const DiagramClass& d) {
  return cache.get_or_compute("pD", d.key(), [&] { return poly_to_json(p_polynomial(d)); });
}

Json k_payload(const PolyCache& cache, const Partition& nubar) {
  return cache.get_or_compute("kpoly", nubar.str(), [&] { return poly_to_json(k_polynomial(nubar)); });
}

Json s_payload(const PolyCache& cache, const Partition& nubar) {
  return cache.get_or_compute("spoly", nubar.str(), [&] { return ppf_to_json(s_polynomial(nubar)); });
}

void print_poly(const Options& o, const MultiPoly& p) {
  if (o.json)
    emit(poly_to_json(p));
  else
    std::cout << to_string(p) << '\n';
}

int run_classes(const Options& o) {
  if (o.size < 0) throw std::invalid_argument("--size must be nonnegative");
  const auto& all = enumerate_classes(o.size, o.connected);
  if (o.json) {
    Json j;
    j["size"] = o.size;
    j["connected"] = o.connected;
    j["classes"] = Json::array();
    for (const auto& c : all) j["classes"].push_back(c.key());
    emit(j);
  } else {
    for (const auto& c : all) std::cout << c.key() << '\n';
  }
  return 0;
}

int run_removable(const Options& o) {
  Partition la = Partition::parse(o.lambda);
  if (!o.cls.empty()) {
    RemovableSet set = removable_set(la, DiagramClass::parse(o.cls));
    if (o.json) {
      Json j;
      j["lambda"] = partition_json(la);
      j["class"] = set.d.key();
      j["count"] = set.members.size();
      j["inner"] = Json::array();
      for (const auto& a : set.members) j["inner"].push_back(partition_json(a));
      emit(j);
    } else {
      std::cout << set.members.size() << '\n';
      for (const auto& a : set.members) std::cout << paren(la) << "/" << paren(a) << '\n';
    }
    return 0;
  }
  const auto& census = removable_census(la, o.max_size);
  if (o.json) {
    Json j;
    j["lambda"] = partition_json(la);
    j["max_size"] = o.max_size;
    j["counts"] = Json::object();
    for (const auto& [key, count] : census) j["counts"][key] = to_string(count);
    emit(j);
  } else {
    for (const auto& [key, count] : census) std::cout << key << ' ' << count << '\n';
  }
  return 0;
}

int run_pd(const Options& o, const PolyCache& cache) {
  DiagramClass d = DiagramClass::parse(o.cls);
  MultiPoly p = poly_from_json(p_payload(cache, d), weight_of);
  print_poly(o, o.border_strips ? to_border_strips(p) : p);
  return 0;
}

int run_qpoly(const Options& o, const PolyCache& cache) {
  Composition pibar = parse_composition(o.pibar);
  Json payload = cache.get_or_compute("qpoly", composition_str(pibar),
                                      [&] { return poly_to_json(q_polynomial(pibar)); });
  print_poly(o, poly_from_json(payload, weight_of));
  return 0;
}

int run_kpoly(const Options& o, const PolyCache& cache) {
  MultiPoly p = poly_from_json(k_payload(cache, Partition::parse(o.nubar)), weight_of);
  print_poly(o, o.border_strips ? to_border_strips(p) : p);
  return 0;
}

void print_value(const Options& o, const char* what, const Json& args, const Integer& v) {
  if (o.json) {
    Json j = args;
    j[what] = to_string(v);
    emit(j);
  } else {
    std::cout << v << '\n';
  }
}

int run_gsquare(const Options& o) {
  Partition la = Partition::parse(o.lambda), nubar = Partition::parse(o.nubar);
  Json args;
  args["lambda"] = partition_json(la);
  args["nubar"] = partition_json(nubar);
  print_value(o, "g", args, g_square(la, nubar));
  return 0;
}

int run_g(const Options& o) {
  Partition la = Partition::parse(o.lambda), mu = Partition::parse(o.mu), nubar = Partition::parse(o.nubar);
  if (la.size() != mu.size()) throw std::invalid_argument("|lambda| != |mu|");
  Integer v;
  if (o.via == "classes")
    v = g_general(la, mu, nubar);
  else if (o.via == "rt")
    v = g_rt(la, mu, nubar);
  else if (o.via == "oracle")
    v = oracle::g_oracle(la, mu, extend_nubar(nubar, la.size()));
  else
    throw std::invalid_argument("--via must be rt, classes or oracle");
  Json args;
  args["lambda"] = partition_json(la);
  args["mu"] = partition_json(mu);
  args["nubar"] = partition_json(nubar);
  args["via"] = o.via;
  print_value(o, "g", args, v);
  return 0;
}

int run_sbst(const Options& o) {
  Partition nu = Partition::parse(o.shape);
  const auto& all = enumerate_sbst(nu);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& t : all) {
      Json j;
      j["strips"] = Json::array();
      for (const auto& s : t.strips) j["strips"].push_back(s.str());
      j["sign"] = t.sign;
      j["gamma"] = partition_json(t.gamma);
      j["tau"] = t.tau;
      arr.push_back(j);
    }
    emit(arr);
  } else {
    for (const auto& t : all) {
      std::cout << (t.sign > 0 ? '+' : '-') << " gamma=" << paren(t.gamma) << " tau=(" << composition_str(t.tau)
                << ") strips=";
      for (std::size_t i = 0; i < t.strips.size(); ++i) std::cout << (i ? " " : "") << t.strips[i].str();
      std::cout << '\n';
    }
  }
  return 0;
}

std::string interval_str(const PiecewisePoly& s, std::size_t i) {
  std::string hi = i + 1 < s.breaks().size() ? s.breaks()[i + 1].get_str() + "]" : "inf)";
  return "[" + s.breaks()[i].get_str() + ", " + hi;
}

Json table_row_json(const Partition& nubar, const UniPoly& main, const SaxlBounds& b) {
  Json j;
  j["nubar"] = partition_json(nubar);
  j["main"] = unipoly_to_json(main);
  j["roots"] = roots_str(main);
  j["t"] = b.t;
  j["c"] = b.c;
  return j;
}

void print_table_row(const Partition& nubar, const UniPoly& main, const SaxlBounds& b) {
  std::cout << paren(nubar) << " | " << to_string(main) << " | " << roots_str(main) << " | t=" << b.t << '\n';
}

int run_saxl(const Options& o, const PolyCache& cache) {
  Partition nubar = Partition::parse(o.nubar);
  PiecewisePoly s = ppf_from_json(s_payload(cache, nubar));
  SaxlBounds b = saxl_bounds(nubar);
  if (o.eval_k >= 0) {
    Rational v = s(o.eval_k);
    if (o.json) {
      Json j;
      j["nubar"] = partition_json(nubar);
      j["k"] = o.eval_k;
      j["value"] = to_fraction_string(v);
      emit(j);
    } else {
      std::cout << v << '\n';
    }
  } else if (o.table) {
    UniPoly main = s.piece_on(b.c);
    if (o.json)
      emit(table_row_json(nubar, main, b));
    else
      print_table_row(nubar, main, b);
  } else if (o.scan >= 0) {
    PositivityReport r = positivity_scan(nubar, o.scan);
    if (o.json) {
      Json j;
      j["nubar"] = partition_json(nubar);
      j["rows"] = Json::array();
      for (const auto& row : r.rows) j["rows"].push_back({{"k", row.k}, {"value", to_string(row.value)}, {"positive", row.positive}});
      j["non_positive"] = r.non_positive;
      j["bound_holds"] = r.bound_holds;
      emit(j);
    } else {
      for (const auto& row : r.rows) std::cout << row.k << ' ' << row.value << '\n';
      std::cout << "non-positive: " << r.non_positive << ", bound " << (r.bound_holds ? "holds" : "fails") << '\n';
    }
  } else if (o.json) {
    Json j = ppf_to_json(s);
    j["t"] = b.t;
    j["c"] = b.c;
    emit(j);
  } else {
    for (std::size_t i = 0; i < s.pieces().size(); ++i)
      std::cout << interval_str(s, i) << ": " << to_string(s.pieces()[i]) << '\n';
  }
  return 0;
}

int run_saxl_table(const Options& o, const PolyCache& cache) {
  Json rows = Json::array();
  for (int d = 1; d <= o.max_size; ++d) {
    for (const auto& nubar : partitions_of(d)) {
      PiecewisePoly s = ppf_from_json(s_payload(cache, nubar));
      SaxlBounds b = saxl_bounds(nubar);
      UniPoly main = s.piece_on(b.c);
      if (o.json)
        rows.push_back(table_row_json(nubar, main, b));
      else
        print_table_row(nubar, main, b);
    }
  }
  if (o.json) emit(rows);
  return 0;
}

int run_oracle_g(const Options& o) {
  Partition la = Partition::parse(o.lambda), mu = Partition::parse(o.mu), nu = Partition::parse(o.nu);
  Json args;
  args["lambda"] = partition_json(la);
  args["mu"] = partition_json(mu);
  args["nu"] = partition_json(nu);
  print_value(o, "g", args, oracle::g_oracle(la, mu, nu));
  return 0;
}

int run_oracle_chi(const Options& o) {
  Partition la = Partition::parse(o.lambda), rho = Partition::parse(o.rho);
  Json args;
  args["lambda"] = partition_json(la);
  args["rho"] = partition_json(rho);
  print_value(o, "chi", args, oracle::mn_value(la, rho));
  return 0;
}

int run_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = verify::suite_names();
  } else {
    const auto& known = verify::suite_names();
    if (std::find(known.begin(), known.end(), o.suite) == known.end())
      throw std::invalid_argument("unknown suite: " + o.suite);
    names = {o.suite};
  }
  bool ok = true;
  Json out = Json::array();
  for (const auto& name : names) {
    verify::Report rep = verify::run_suite(name);
    ok = ok && rep.passed();
    if (o.json) {
      Json j;
      j["suite"] = rep.suite;
      j["passed"] = rep.passed();
      j["items"] = Json::array();
      for (const auto& it : rep.items)
        j["items"].push_back({{"name", it.name}, {"pass", it.pass}, {"expected", it.expected}, {"actual", it.actual}});
      out.push_back(j);
    } else {
      for (const auto& it : rep.items) {
        std::cout << (it.pass ? "PASS " : "FAIL ") << name << ": " << it.name;
        if (!it.pass) std::cout << "\n  expected: " << it.expected << "\n  actual:   " << it.actual;
        std::cout << '\n';
      }
      std::cout << name << ": " << rep.items.size() - rep.failures() << "/" << rep.items.size() << " passed\n";
    }
  }
  if (o.json) emit(out);
  return ok ? 0 : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kronecker coefficients through removable diagrams"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_flag("--no-cache", o.no_cache, "Skip the on-disk polynomial cache");

  auto* classes = app.add_subcommand("classes", "List diagram classes of a given size");
  classes->add_option("--size", o.size, "Number of cells")->required();
  classes->add_flag("--connected", o.connected, "Connected classes only");

  auto* removable = app.add_subcommand("removable", "Removable diagram counts r_lambda(D)");
  removable->add_option("--lambda", o.lambda, "Partition, e.g. 4,3,1")->required();
  removable->add_option("--max-size", o.max_size, "Largest class size in the census");
  removable->add_option("--class", o.cls, "Single class key");

  auto* pd = app.add_subcommand("pd", "Polynomial p_D");
  pd->add_option("--class", o.cls, "Class key, e.g. 2:2;1:2")->required();
  pd->add_flag("--border-strips", o.border_strips, "Rewrite in border strip variables");

  auto* qpoly = app.add_subcommand("qpoly", "Polynomial q for lr(la, la; (n - |pibar|, pibar))");
  qpoly->add_option("--pibar", o.pibar, "Composition")->required();

  auto* kpoly = app.add_subcommand("kpoly", "Polynomial k for g(la, la, (n - d, nubar))");
  kpoly->add_option("--nubar", o.nubar, "Partition")->required();
  kpoly->add_flag("--border-strips", o.border_strips, "Rewrite in border strip variables");

  auto* gsquare = app.add_subcommand("gsquare", "g(la, la, (n - d, nubar))");
  gsquare->add_option("--lambda", o.lambda, "Partition")->required();
  gsquare->add_option("--nubar", o.nubar, "Partition")->required();

  auto* g = app.add_subcommand("g", "g(la, mu, (n - d, nubar))");
  g->add_option("--lambda", o.lambda, "Partition")->required();
  g->add_option("--mu", o.mu, "Partition")->required();
  g->add_option("--nubar", o.nubar, "Partition")->required();
  g->add_option("--via", o.via, "rt, classes or oracle")->check(CLI::IsMember({"rt", "classes", "oracle"}));

  auto* sbst = app.add_subcommand("sbst", "Special border strip tableaux");
  sbst->add_option("--shape", o.shape, "Partition")->required();

  auto* saxl = app.add_subcommand("saxl", "Staircase polynomials s_nubar");
  saxl->require_subcommand(0, 1);
  auto* saxl_nubar = saxl->add_option("--nubar", o.nubar, "Partition");
  auto* eval_opt = saxl->add_option("--eval", o.eval_k, "Evaluate at k");
  auto* table_opt = saxl->add_flag("--table", o.table, "Main piece, roots and t");
  auto* scan_opt = saxl->add_option("--scan", o.scan, "Positivity scan up to k");
  eval_opt->excludes(table_opt)->excludes(scan_opt);
  table_opt->excludes(scan_opt);
  auto* saxl_table = saxl->add_subcommand("table", "Main pieces for all nubar up to a size");
  saxl_table->add_option("--max-size", o.max_size, "Largest |nubar|")->default_val(5);

  auto* orc = app.add_subcommand("oracle", "Brute-force character theory");
  orc->require_subcommand(1);
  auto* og = orc->add_subcommand("g", "Kronecker coefficient from character tables");
  og->add_option("--lambda", o.lambda, "Partition")->required();
  og->add_option("--mu", o.mu, "Partition")->required();
  og->add_option("--nu", o.nu, "Partition")->required();
  auto* ochi = orc->add_subcommand("chi", "Character value");
  ochi->add_option("--lambda", o.lambda, "Partition")->required();
  ochi->add_option("--rho", o.rho, "Cycle type")->required();

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", o.suite, "Suite name or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  PolyCache cache(PolyCache::default_dir(), !o.no_cache);
  try {
    if (*classes) return run_classes(o);
    if (*removable) return run_removable(o);
    if (*pd) return run_pd(o, cache);
    if (*qpoly) return run_qpoly(o, cache);
    if (*kpoly) return run_kpoly(o, cache);
    if (*gsquare) return run_gsquare(o);
    if (*g) return run_g(o);
    if (*sbst) return run_sbst(o);
    if (*saxl_table) return run_saxl_table(o, cache);
    if (*saxl) {
      if (saxl_nubar->count() == 0) throw std::invalid_argument("saxl needs --nubar or the table subcommand");
      return run_saxl(o, cache);
    }
    if (*og) return run_oracle_g(o);
    if (*ochi) return run_oracle_chi(o);
    if (*ver) return run_verify(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
