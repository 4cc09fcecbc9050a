// f1m: counts, enumerations, verification reports, and exports for the
// finite combinatorics library (plasmas, Dynkin systems, partitions,
// truncated module windows, deloopings, discrete geometries).

#include <algorithm>
#include <chrono>
#include <fstream>
#include <set>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "f1m/dynkin.hpp"
#include "f1m/gammaset.hpp"
#include "f1m/geometry.hpp"
#include "f1m/kzengine.hpp"
#include "f1m/partition.hpp"
#include "f1m/plasma.hpp"
#include "f1m/report.hpp"
#include "f1m/simplicial.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
  int threads = 0;  // 0: use hardware concurrency
  double budget = 1e8;
  unsigned seed = 1;
  std::string format = "json";
  std::string out;
};

int effective_threads(const GlobalOpts& g) {
  if (g.threads > 0) return g.threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void write_output(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + g.out);
  f << text;
}

// "krasner", "free-point", "powerset:N", "wedge:K", "quotient:P"
f1m::Plasma parse_plasma(const std::string& spec) {
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  int arg = colon == std::string::npos ? -1 : std::stoi(spec.substr(colon + 1));
  if (head == "krasner") return f1m::krasner();
  if (head == "free-point") return f1m::free_point_plasma();
  if (head == "powerset") return f1m::powerset_plasma(arg);
  if (head == "wedge") return f1m::wedge_krasner(arg);
  if (head == "quotient") return f1m::quotient_plasma_prime_field(arg);
  throw CLI::ValidationError("unknown plasma spec: " + spec);
}

f1m::GammaSetWindow build_window(const std::string& source, int levels, int k,
                                 const GlobalOpts& g) {
  f1m::EnumOptions opts{g.budget, effective_threads(g)};
  if (source == "krasner") return f1m::h_hat(f1m::krasner(), levels, opts);
  if (source == "dynkin") return f1m::dynk_window(levels);
  if (source == "partitions") return f1m::part_window(levels);
  if (source == "wedge-k") return f1m::h_hat(f1m::wedge_krasner(k), levels, opts);
  throw CLI::ValidationError("unknown source: " + source);
}

int emit_report(const GlobalOpts& g, f1m::VerificationReport rep) {
  if (g.format == "text") {
    std::string line = rep.claim + ": " + (rep.pass ? "pass" : "FAIL") + " (" +
                       std::to_string(rep.elapsed_seconds) + "s)\n";
    write_output(g, line);
  } else {
    write_output(g, rep.to_json().dump(2) + "\n");
  }
  return rep.pass ? 0 : 1;
}

int emit_count(const GlobalOpts& g, const std::string& kind, std::uint64_t count,
               const std::string& engine, json scope, double secs) {
  if (g.format == "text") {
    write_output(g, std::to_string(count) + " (" + engine + ")\n");
  } else {
    json j{{"schema", f1m::kReportSchema}, {"claim", "count-" + kind},     {"scope", scope},
           {"count", count},              {"engine", engine},             {"result", "pass"},
           {"elapsed_seconds", secs},     {"tool_version", f1m::kToolVersion}};
    write_output(g, j.dump(2) + "\n");
  }
  return 0;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double secs() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

f1m::VerificationReport from_check(const std::string& claim, json scope, f1m::CheckResult c,
                                   double secs) {
  f1m::VerificationReport rep;
  rep.claim = claim;
  rep.scope = std::move(scope);
  rep.pass = c.pass;
  rep.elapsed_seconds = secs;
  if (!c.pass && c.details.contains("counterexample")) rep.counterexample = c.details["counterexample"];
  if (c.pass) rep.scope["details"] = c.details;
  return rep;
}

f1m::CheckResult verify_axioms() {
  f1m::CheckResult r;
  auto require = [&](const f1m::Plasma& p, const std::string& name) {
    if (!f1m::satisfies_plasma_axioms(p)) r.fail("plasma axioms violated", {{"plasma", name}});
  };
  require(f1m::krasner(), "krasner");
  require(f1m::free_point_plasma(), "free-point");
  for (int n = 0; n <= 4; ++n) require(f1m::powerset_plasma(n), "powerset:" + std::to_string(n));
  for (int k = 1; k <= 3; ++k) require(f1m::wedge_krasner(k), "wedge:" + std::to_string(k));
  for (int p : {2, 3, 5, 7}) require(f1m::quotient_plasma_prime_field(p), "quotient:" + std::to_string(p));
  for (int n = 1; n <= 6; ++n) require(f1m::mosaic_plasma(f1m::DiscreteGeometry{n}), "mosaic:" + std::to_string(n));
  r.details["claim"] = "axioms";
  return r;
}

f1m::CheckResult verify_bijections(int max_n, const f1m::EnumOptions& opts) {
  f1m::CheckResult r;
  for (int n = 0; n <= max_n; ++n) {
    std::vector<f1m::DynkinSystem> all = f1m::enumerate_dynkin(n);
    std::set<f1m::DynkinSystem> hit;
    for (const f1m::DynkinSystem& d : all) {
      if (!(f1m::phi(f1m::psi(d)) == d)) r.fail("phi(psi(d)) != d", {{"n", n}, {"d", d.family.to_hex()}});
      if (!(f1m::psi(f1m::phi(f1m::psi(d))) == f1m::psi(d)))
        r.fail("psi round trip failed", {{"n", n}});
    }
    for (const f1m::MorphismTable& f :
         f1m::enumerate_morphisms(f1m::powerset_plasma(n), f1m::krasner(), opts)) {
      f1m::DynkinSystem d = f1m::phi(f1m::kappa(f, n));
      if (!f1m::validate_dynkin(d.family, n)) r.fail("phi(kappa(f)) not Dynkin", {{"n", n}});
      if (!hit.insert(d).second) r.fail("phi after kappa not injective", {{"n", n}});
    }
    if (hit.size() != all.size()) r.fail("phi after kappa not surjective", {{"n", n}});
  }
  r.details["claim"] = "bijections";
  r.details["max_n"] = max_n;
  return r;
}

f1m::CheckResult verify_square(int cap) {
  // sigma_embedding is natural: embedding then pushing forward equals
  // pushing forward then embedding
  f1m::CheckResult r;
  for (int n = 0; n <= cap; ++n)
    for (int m = 0; m <= cap; ++m)
      for (const f1m::PointedMap& phi : f1m::enumerate_pointed_maps(n, m))
        f1m::for_each_partition(n, [&](const f1m::Partition& p) {
          if (!(f1m::sigma_embedding(f1m::part_map(phi, p)) == f1m::dynk_map(phi, f1m::sigma_embedding(p))))
            r.fail("square does not commute", {{"map", phi.encode()}});
        });
  r.details["claim"] = "square";
  r.details["cap"] = cap;
  return r;
}

f1m::CheckResult verify_associators(const f1m::EnumOptions& opts) {
  f1m::CheckResult r;
  std::vector<std::string> tuples = f1m::simplex_tuples(3, opts);
  if (tuples.size() != 19) r.fail("expected 19 level-3 tuples", {{"got", tuples.size()}});
  for (const std::string& t : tuples)
    if (!f1m::check_associator(t)) r.fail("associator relation failed", {{"tuple", t}});
  r.details["claim"] = "associators";
  r.details["tuples"] = tuples.size();
  return r;
}

f1m::CheckResult verify_truncation(const f1m::EnumOptions& opts) {
  f1m::CheckResult r;
  std::vector<std::pair<std::string, f1m::Plasma>> cases = {
      {"krasner", f1m::krasner()},
      {"wedge:2", f1m::wedge_krasner(2)},
      {"wedge:3", f1m::wedge_krasner(3)},
      {"powerset:2", f1m::powerset_plasma(2)},
      {"quotient:3", f1m::quotient_plasma_prime_field(3)},
  };
  for (const auto& [name, m] : cases) {
    f1m::Plasma t = f1m::truncate_to_plasma(f1m::h_hat(m, 2, opts));
    if (!f1m::satisfies_plasma_axioms(t)) r.fail("truncation violates axioms", {{"plasma", name}});
    if (!f1m::are_isomorphic(t, m)) r.fail("truncation does not recover the plasma", {{"plasma", name}});
  }
  r.details["claim"] = "truncation";
  return r;
}

int cmd_verify(const GlobalOpts& g, const std::string& claim, const std::string& source,
               const std::string& module, int n, int levels, int k) {
  Timer timer;
  f1m::EnumOptions opts{g.budget, effective_threads(g)};
  f1m::CheckResult c;
  json scope{{"claim", claim}};
  if (claim == "axioms") {
    c = verify_axioms();
  } else if (claim == "bijections") {
    scope["max_n"] = n;
    c = verify_bijections(n, opts);
  } else if (claim == "naturality") {
    scope["levels"] = levels;
    c = f1m::check_naturality(f1m::h_hat(f1m::krasner(), levels, opts), f1m::dynk_window(levels),
                              f1m::phi_natural_iso(f1m::h_hat(f1m::krasner(), levels, opts),
                                                   f1m::dynk_window(levels)),
                              3, g.seed, 200);
  } else if (claim == "square") {
    scope["cap"] = n;
    c = verify_square(n);
  } else if (claim == "projective") {
    if (k > 0) {
      scope["k"] = k;
      scope["levels"] = levels;
      c = f1m::check_theorem_projective(levels, k);
    } else {
      scope["n"] = n;
      c = f1m::verify_projective(n);
    }
  } else if (claim == "simplicial") {
    scope["source"] = source;
    scope["levels"] = levels;
    c = f1m::check_simplicial_identities(f1m::deloop(build_window(source, levels, k, g)));
  } else if (claim == "associators") {
    c = verify_associators(opts);
  } else if (claim == "truncation") {
    c = verify_truncation(opts);
  } else if (claim == "unit") {
    scope["module"] = module;
    scope["levels"] = n;
    c = f1m::check_unit(build_window(module, n, k, g), module == "dynkin");
  } else {
    throw CLI::ValidationError("unknown claim: " + claim);
  }
  return emit_report(g, from_check(claim, scope, std::move(c), timer.secs()));
}

int cmd_export_deloop(const GlobalOpts& g, const std::string& source, int levels, int k,
                      const std::string& format) {
  f1m::SimplicialWindow w = f1m::deloop(build_window(source, levels, k, g));
  if (format == "json") {
    write_output(g, f1m::export_json(w).dump(2) + "\n");
  } else if (format == "dot") {
    write_output(g, f1m::export_dot(w));
  } else if (format == "tuples") {
    if (source != "krasner")
      throw CLI::ValidationError("tuple export needs --source krasner");
    std::string text;
    f1m::EnumOptions opts{g.budget, effective_threads(g)};
    for (int n = 0; n <= levels; ++n) {
      text += "# level " + std::to_string(n) + "\n";
      for (const std::string& t : f1m::simplex_tuples(n, opts)) text += t + "\n";
    }
    write_output(g, text);
  } else {
    throw CLI::ValidationError("unknown format: " + format);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite plasma / Dynkin-system / partition verification tool"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--threads", g.threads, "worker threads (0 = all cores)");
  app.add_option("--budget", g.budget, "brute-force candidate cap");
  app.add_option("--seed", g.seed, "seed for sampled checks");
  app.add_option("--format", g.format, "json|text (reports); json|dot|tuples (exports)");
  app.add_option("--out", g.out, "write output to a file instead of stdout");

  // count
  auto* count = app.add_subcommand("count", "count structures");
  count->fallthrough();
  std::string count_kind, count_engine = "backtrack", count_src = "powerset:2", count_dst = "krasner";
  int count_n = 0;
  bool slow = false;
  count->add_option("kind", count_kind, "dynkin|partitions|morphisms")->required();
  count->add_option("--n", count_n, "ambient size");
  count->add_option("--engine", count_engine, "backtrack|oracle-a|oracle-b");
  count->add_flag("--slow", slow, "allow the slow oracle-b scan at n=5");
  count->add_option("--src", count_src, "source plasma (morphisms)");
  count->add_option("--dst", count_dst, "target plasma (morphisms)");

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "list structures");
  enumerate->fallthrough();
  std::string enum_kind;
  int enum_n = 0;
  enumerate->add_option("kind", enum_kind, "dynkin|partitions")->required();
  enumerate->add_option("--n", enum_n, "ambient size")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check a claim and emit a report");
  verify->fallthrough();
  std::string claim, v_source = "krasner", v_module = "partitions";
  int v_n = 4, v_levels = 4, v_k = 0;
  verify->add_option("claim", claim,
                     "axioms|bijections|naturality|square|projective|simplicial|associators|truncation|unit")
      ->required();
  verify->add_option("--source", v_source, "krasner|dynkin|partitions|wedge-k");
  verify->add_option("--module", v_module, "dynkin|partitions (unit claim)");
  verify->add_option("--n", v_n, "size bound");
  verify->add_option("--levels", v_levels, "window depth");
  verify->add_option("--k", v_k, "wedge summands");

  // export
  auto* exp = app.add_subcommand("export", "export computed structures");
  exp->fallthrough();
  std::string exp_what, exp_source = "krasner";
  int exp_levels = 2, exp_k = 2;
  exp->add_option("what", exp_what, "deloop")->required();
  exp->add_option("--source", exp_source, "krasner|dynkin|partitions|wedge-k");
  exp->add_option("--levels", exp_levels, "window depth");
  exp->add_option("--k", exp_k, "wedge summands");

  CLI11_PARSE(app, argc, argv);

  try {
    if (count->parsed()) {
      Timer timer;
      if (count_kind == "dynkin") {
        if (count_n < 0 || (count_n > 5 && count_engine == "backtrack") ||
            (count_engine == "oracle-a" && count_n > 3) ||
            (count_engine == "oracle-b" && count_n > (slow ? 5 : 4))) {
          std::cerr << "count dynkin: n out of range for engine " << count_engine << "\n";
          return 2;
        }
        std::uint64_t c;
        if (count_engine == "backtrack") {
          c = f1m::count_dynkin(count_n, {7, effective_threads(g)});
        } else {
          auto which = count_engine == "oracle-a" ? f1m::DynkinOracle::kAxiomScan
                                                  : f1m::DynkinOracle::kMorphismScan;
          c = f1m::enumerate_dynkin_oracle(count_n, which, slow, effective_threads(g)).size();
        }
        return emit_count(g, "dynkin", c, count_engine, {{"n", count_n}}, timer.secs());
      }
      if (count_kind == "partitions") {
        if (count_n < 0 || count_n > 12) {
          std::cerr << "count partitions: n out of range\n";
          return 2;
        }
        return emit_count(g, "partitions", f1m::count_partitions(count_n), "rgs",
                          {{"n", count_n}}, timer.secs());
      }
      if (count_kind == "morphisms") {
        f1m::EnumOptions opts{g.budget, effective_threads(g)};
        std::uint64_t c = f1m::enumerate_morphisms(parse_plasma(count_src), parse_plasma(count_dst), opts).size();
        return emit_count(g, "morphisms", c, "backtrack", {{"src", count_src}, {"dst", count_dst}},
                          timer.secs());
      }
      std::cerr << "unknown count kind: " << count_kind << "\n";
      return 2;
    }

    if (enumerate->parsed()) {
      if (enum_kind == "dynkin") {
        if (enum_n < 0 || enum_n > 5) {
          std::cerr << "enumerate dynkin: n out of range\n";
          return 2;
        }
        std::vector<f1m::DynkinSystem> all = f1m::enumerate_dynkin(enum_n, {7, effective_threads(g)});
        if (g.format == "tuples") {
          std::vector<std::string> lines;
          for (const f1m::DynkinSystem& d : all)
            lines.push_back(f1m::tuple_of_table(f1m::kappa_inverse(f1m::psi(d)), enum_n));
          std::sort(lines.begin(), lines.end());
          std::string text;
          for (const std::string& l : lines) text += l + "\n";
          write_output(g, text);
        } else {
          json j = json::array();
          for (const f1m::DynkinSystem& d : all) j.push_back(d.family.to_hex());
          write_output(g, json{{"n", enum_n}, {"count", all.size()}, {"families", j}}.dump(2) + "\n");
        }
        return 0;
      }
      if (enum_kind == "partitions") {
        if (enum_n < 0 || enum_n > 9) {
          std::cerr << "enumerate partitions: n out of range\n";
          return 2;
        }
        json j = json::array();
        f1m::for_each_partition(enum_n, [&](const f1m::Partition& p) { j.push_back(f1m::partition_to_labels(p)); });
        write_output(g, json{{"n", enum_n}, {"count", j.size()}, {"labels", j}}.dump(2) + "\n");
        return 0;
      }
      std::cerr << "unknown enumerate kind: " << enum_kind << "\n";
      return 2;
    }

    if (verify->parsed()) return cmd_verify(g, claim, v_source, v_module, v_n, v_levels, v_k);

    if (exp->parsed()) {
      if (exp_what != "deloop") {
        std::cerr << "unknown export target: " << exp_what << "\n";
        return 2;
      }
      std::string fmt = g.format == "text" ? "json" : g.format;
      return cmd_export_deloop(g, exp_source, exp_levels, exp_k, fmt);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
