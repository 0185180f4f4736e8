#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "rdc/formulas.hpp"
#include "rdc/io.hpp"
#include "rdc/product.hpp"
#include "rdc/solver.hpp"
#include "rdc/sweep.hpp"

namespace rdc {

namespace {

constexpr int kOk = 0;
constexpr int kDiscrepancy = 1;
constexpr int kUsage = 2;

// Family selection flags shared by gen, predict, construct and verify.
// Values are ranges ("2..4") for verify and single integers elsewhere.
struct FamilyFlags {
  std::string family;
  std::string l = "2";
  std::string m = "3";
  std::string n;
  std::string p;
  std::string t;

  void attach(CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--family", family,
                                "path-star | path-double-star | "
                                "path-triple-star | complete-path | cycle | "
                                "complete");
    if (required) opt->required();
    cmd->add_option("--l", l, "path order of the path families");
    cmd->add_option("--m", m, "star parameter, or clique order for complete-path");
    cmd->add_option("--n", n, "path order for complete-path");
    cmd->add_option("--p", p, "cycle order");
    cmd->add_option("--t", t, "complete graph order");
  }

  Family parsed_family() const { return parse_family(family); }

  // The range that lands in FamilyParams::n for this family.
  std::string n_text(Family f) const {
    if (f == Family::Cycle && !p.empty()) return p;
    if (f == Family::Complete && !t.empty()) return t;
    if (n.empty()) {
      if (f == Family::CompletePath) return "3";
      throw InvalidParameter("missing size flag for " +
                             std::string(family_name(f)));
    }
    return n;
  }

  FamilyParams single() const {
    const Family f = parsed_family();
    auto one = [](const std::string& text) {
      auto range = parse_range(text);
      if (range.lo != range.hi) {
        throw InvalidParameter("expected a single value, got '" + text + "'");
      }
      return range.lo;
    };
    FamilyParams params;
    const bool path_family = f == Family::PathStar ||
                             f == Family::PathDoubleStar ||
                             f == Family::PathTripleStar;
    if (path_family) {
      params.l = one(l);
      params.m = one(m);
    } else if (f == Family::CompletePath) {
      params.m = one(m);
      params.n = one(n_text(f));
    } else {
      params.n = one(n_text(f));
    }
    return params;
  }
};

std::chrono::milliseconds default_budget() {
  if (const char* env = std::getenv("RDC_BUDGET_SECS")) {
    try {
      return std::chrono::milliseconds(
          static_cast<long long>(std::stod(env) * 1000));
    } catch (const std::exception&) {
      throw InvalidParameter("RDC_BUDGET_SECS is not a number");
    }
  }
  return std::chrono::milliseconds(60'000);
}

std::chrono::milliseconds budget_from(const std::optional<double>& secs) {
  if (!secs) return default_budget();
  return std::chrono::milliseconds(static_cast<long long>(*secs * 1000));
}

void write_json(const std::string& path, const nlohmann::json& j,
                std::ostream& out) {
  if (path.empty() || path == "-") {
    out << j.dump(2) << "\n";
  } else {
    write_file_atomic(path, j.dump(2) + "\n");
  }
}

Graph load_graph(const std::string& path) {
  return graph_from_json(read_json_file(path));
}

void print_violations(const CheckResult& res, std::ostream& out) {
  for (const auto& v : res.violations) out << "  " << v.describe() << "\n";
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"r-dynamic chromatic numbers of lexicographic products"};
  app.require_subcommand(1);
  int code = kOk;

  // gen
  auto* gen = app.add_subcommand("gen", "Write a generated graph as JSON");
  std::string gen_kind;
  int gen_size = 0;
  std::uint64_t gen_seed = 0;
  double gen_density = 0.3;
  std::string gen_out;
  FamilyFlags gen_family;
  gen->add_option("--kind", gen_kind,
                  "path | cycle | complete | star | double-star | "
                  "triple-star | random");
  gen->add_option("--size", gen_size, "generator parameter (order, or m)");
  gen->add_option("--seed", gen_seed, "seed for --kind random")->capture_default_str();
  gen->add_option("--density", gen_density, "extra-edge probability for --kind random")
      ->capture_default_str();
  gen_family.attach(gen, false);
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // product
  auto* product = app.add_subcommand("product", "Lexicographic product G1[G2]");
  std::string g1_path, g2_path, product_out;
  product->add_option("--g1", g1_path)->required();
  product->add_option("--g2", g2_path)->required();
  product->add_option("--out", product_out, "output file (default stdout)");

  // check
  auto* check = app.add_subcommand("check", "Validate an r-dynamic coloring");
  std::string check_graph, check_coloring;
  int check_r = 1;
  check->add_option("--graph", check_graph)->required();
  check->add_option("--coloring", check_coloring)->required();
  check->add_option("--r", check_r)->required();

  // chi
  auto* chi = app.add_subcommand("chi", "Compute chi_r");
  std::string chi_graph, chi_method = "exact", chi_witness;
  int chi_r = 1;
  std::optional<double> chi_budget;
  chi->add_option("--graph", chi_graph)->required();
  chi->add_option("--r", chi_r)->required();
  chi->add_option("--method", chi_method)
      ->check(CLI::IsMember({"exact", "brute", "greedy"}))
      ->capture_default_str();
  chi->add_option("--witness", chi_witness, "write the witness coloring here");
  chi->add_option("--budget-secs", chi_budget);

  // profile
  auto* profile = app.add_subcommand("profile", "chi_r for r = 1..max degree");
  std::string profile_graph;
  std::optional<double> profile_budget;
  profile->add_option("--graph", profile_graph)->required();
  profile->add_option("--budget-secs", profile_budget);

  // predict
  auto* pred = app.add_subcommand("predict", "Closed-form prediction");
  FamilyFlags pred_family;
  int pred_r = 1;
  pred_family.attach(pred, true);
  pred->add_option("--r", pred_r)->required();

  // construct
  auto* cons = app.add_subcommand("construct", "Replay a constructive coloring");
  FamilyFlags cons_family;
  int cons_r = 1;
  std::string cons_out;
  bool cons_repaired = false;
  cons_family.attach(cons, true);
  cons->add_option("--r", cons_r)->required();
  cons->add_option("--out", cons_out, "output file (default stdout)");
  cons->add_flag("--repaired", cons_repaired,
                 "use the corrected palette where one exists");

  // verify
  auto* verify = app.add_subcommand("verify", "Sweep predictions against the exact solver");
  FamilyFlags verify_family;
  std::string verify_r, verify_r_max = "auto";
  std::optional<double> verify_budget;
  int verify_jobs = 1;
  std::size_t verify_cap = 30;
  std::string csv_path, json_path, md_path;
  verify_family.attach(verify, true);
  verify->add_option("--r", verify_r, "explicit r range, e.g. 1..3");
  verify->add_option("--r-max", verify_r_max, "auto (1..max degree) or an integer")
      ->capture_default_str();
  verify->add_option("--budget-secs", verify_budget, "per-instance solver budget");
  verify->add_option("--jobs", verify_jobs)->capture_default_str();
  verify->add_option("--exact-cap", verify_cap,
                     "largest order solved exactly")->capture_default_str();
  verify->add_option("--csv", csv_path);
  verify->add_option("--json", json_path);
  verify->add_option("--markdown", md_path);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      Graph g;
      if (!gen_kind.empty()) {
        if (gen_kind == "path") g = path(gen_size);
        else if (gen_kind == "cycle") g = cycle(gen_size);
        else if (gen_kind == "complete") g = complete(gen_size);
        else if (gen_kind == "star") g = star(gen_size);
        else if (gen_kind == "double-star") g = double_star(gen_size);
        else if (gen_kind == "triple-star") g = triple_star(gen_size);
        else if (gen_kind == "random") {
          g = random_connected(static_cast<std::size_t>(std::max(gen_size, 0)),
                               gen_density, gen_seed);
        } else {
          throw InvalidParameter("unknown kind '" + gen_kind + "'");
        }
      } else if (!gen_family.family.empty()) {
        g = build_family(gen_family.parsed_family(), gen_family.single());
      } else {
        throw InvalidParameter("gen needs --kind or --family");
      }
      write_json(gen_out, graph_to_json(g), out);
    } else if (product->parsed()) {
      auto g = lex_product(load_graph(g1_path), load_graph(g2_path));
      write_json(product_out, graph_to_json(g), out);
    } else if (check->parsed()) {
      const auto g = load_graph(check_graph);
      const auto c = coloring_from_json(read_json_file(check_coloring));
      if (c.order() != g.order()) {
        throw IoError("coloring has " + std::to_string(c.order()) +
                      " entries, graph has " + std::to_string(g.order()));
      }
      const auto res = is_r_dynamic(g, c, check_r);
      out << (res.ok ? "valid" : "invalid") << " (r=" << check_r
          << ", colors=" << c.palette_size() << ")\n";
      print_violations(res, out);
      code = res.ok ? kOk : kDiscrepancy;
    } else if (chi->parsed()) {
      const auto g = load_graph(chi_graph);
      SolveOptions options;
      options.budget = budget_from(chi_budget);
      SolveResult res;
      if (chi_method == "greedy") {
        auto gr = greedy_upper_bound(g, chi_r);
        res.chi_r = gr.colors;
        res.witness = gr.coloring;
      } else if (chi_method == "brute") {
        res = brute_force_chi_r(g, chi_r, options);
      } else {
        res = exact_chi_r(g, chi_r, options);
      }
      if (res.optimal()) {
        out << "chi_r=" << res.chi_r << "\n";
      } else {
        out << "chi_r=timeout lower=" << res.lower_bound
            << " upper=" << res.chi_r << "\n";
        code = kDiscrepancy;
      }
      out << "nodes=" << res.nodes_explored
          << " elapsed_ms=" << res.elapsed.count() << "\n";
      if (!chi_witness.empty()) {
        write_file_atomic(chi_witness, coloring_to_json(res.witness).dump() + "\n");
      }
    } else if (profile->parsed()) {
      const auto g = load_graph(profile_graph);
      SolveOptions options;
      options.budget = budget_from(profile_budget);
      for (const auto& entry : chi_r_profile(g, options)) {
        out << "r=" << entry.r << " chi_r=";
        if (entry.result.optimal()) {
          out << entry.result.chi_r << "\n";
        } else {
          out << "timeout\n";
          code = kDiscrepancy;
        }
      }
    } else if (pred->parsed()) {
      const Family f = pred_family.parsed_family();
      const FamilyParams p = pred_family.single();
      const auto res = predict(f, p, pred_r);
      out << "case=" << res.case_id << " kind=" << kind_name(res.kind);
      if (res.covered()) out << " value=" << res.value;
      if (res.hypothesis) {
        out << " hypothesis=" << *res.hypothesis << " ("
            << res.hypothesis_formula << ", inferred)";
      }
      if (res.lower_bound) out << " lower_bound=" << *res.lower_bound;
      out << "\n";
      if (auto claim = degree_claims(f, p)) {
        out << "claimed min_degree=" << claim->min_degree
            << " max_degree=" << claim->max_degree << "\n";
      }
      for (const auto& note : res.notes) out << "note: " << note << "\n";
    } else if (cons->parsed()) {
      const Family f = cons_family.parsed_family();
      const FamilyParams p = cons_family.single();
      const auto c = construct_coloring(
          f, p, cons_r,
          cons_repaired ? PaletteVariant::Repaired : PaletteVariant::Printed);
      if (!c.constructed()) {
        out << "case=" << c.case_id << " not-constructive\n";
        return kDiscrepancy;
      }
      const auto res = is_r_dynamic(build_family(f, p), c.coloring, cons_r);
      write_json(cons_out, coloring_to_json(c.coloring), out);
      // Keep stdout parseable when the coloring itself went there.
      std::ostream& note = cons_out.empty() || cons_out == "-" ? err : out;
      note << "case=" << c.case_id << " colors=" << c.coloring.palette_size()
           << " " << (res.ok ? "valid" : "invalid") << "\n";
      print_violations(res, note);
    } else if (verify->parsed()) {
      SweepConfig config;
      config.family = verify_family.parsed_family();
      config.l = parse_range(verify_family.l);
      config.m = parse_range(verify_family.m);
      if (config.family == Family::CompletePath ||
          config.family == Family::Cycle || config.family == Family::Complete) {
        config.n = parse_range(verify_family.n_text(config.family));
      }
      if (!verify_r.empty()) {
        config.r = parse_range(verify_r);
      } else if (verify_r_max != "auto") {
        config.r = IntRange{1, parse_range(verify_r_max).hi};
      }
      config.budget = budget_from(verify_budget);
      config.jobs = verify_jobs;
      config.exact_cap = verify_cap;
      const auto report = sweep(config);
      if (!csv_path.empty()) emit_report(report, ReportFormat::Csv, csv_path);
      if (!json_path.empty()) emit_report(report, ReportFormat::Json, json_path);
      if (!md_path.empty()) emit_report(report, ReportFormat::Markdown, md_path);
      out << "rows=" << report.rows.size();
      for (const auto& [name, count] : report.summary) {
        if (count > 0) out << " " << name << "=" << count;
      }
      out << "\n";
      for (const auto& row : report.rows) {
        if (!row.discrepancy()) continue;
        out << "discrepancy: " << family_name(row.family) << " l=" << row.params.l
            << " m=" << row.params.m << " n=" << row.params.n << " r=" << row.r
            << " case=" << row.case_id << " agreement="
            << agreement_name(row.agreement) << " construction="
            << construction_status_name(row.construction_status) << "\n";
      }
      code = report.has_discrepancy() ? kDiscrepancy : kOk;
    }
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidParameter& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return code;
}

}  // namespace rdc
