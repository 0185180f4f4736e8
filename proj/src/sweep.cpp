#include "rdc/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>
#include <thread>

#include "rdc/io.hpp"
#include "rdc/solver.hpp"

namespace rdc {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::pair<ConstructionStatus, std::string_view>, 3>
    kConstructionNames{{
        {ConstructionStatus::Valid, "valid"},
        {ConstructionStatus::Invalid, "invalid"},
        {ConstructionStatus::NotConstructive, "not-constructive"},
    }};

constexpr std::array<std::pair<Agreement, std::string_view>, 7>
    kAgreementNames{{
        {Agreement::Match, "match"},
        {Agreement::Mismatch, "mismatch"},
        {Agreement::HypothesisConfirmed, "hypothesis-confirmed"},
        {Agreement::HypothesisRefuted, "hypothesis-refuted"},
        {Agreement::Timeout, "timeout"},
        {Agreement::Uncovered, "uncovered"},
        {Agreement::ValidatedOnly, "validated-only"},
    }};

template <typename Enum, std::size_t N>
Enum lookup(const std::array<std::pair<Enum, std::string_view>, N>& table,
            std::string_view name, const char* what) {
  for (auto [value, known] : table) {
    if (known == name) return value;
  }
  throw IoError(std::string("unknown ") + what + " '" + std::string(name) +
                "'");
}

Prediction::Kind parse_kind(std::string_view name) {
  for (auto k : {Prediction::Kind::Exact, Prediction::Kind::LowerBoundOnly,
                 Prediction::Kind::Parametric, Prediction::Kind::Uncovered}) {
    if (kind_name(k) == name) return k;
  }
  throw IoError("unknown prediction kind '" + std::string(name) + "'");
}

int parse_int(std::string_view text) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw InvalidParameter("not an integer: '" + std::string(text) + "'");
  }
  return value;
}

struct Instance {
  FamilyParams params;
  Graph graph;
};

std::vector<Instance> instances(const SweepConfig& c) {
  std::vector<Instance> out;
  auto add = [&](FamilyParams p) { out.push_back({p, build_family(c.family, p)}); };
  switch (c.family) {
    case Family::PathStar:
    case Family::PathDoubleStar:
    case Family::PathTripleStar:
      for (int l = c.l.lo; l <= c.l.hi; ++l) {
        for (int m = c.m.lo; m <= c.m.hi; ++m) add({l, m, 0});
      }
      break;
    case Family::CompletePath:
      for (int m = c.m.lo; m <= c.m.hi; ++m) {
        for (int n = c.n.lo; n <= c.n.hi; ++n) add({0, m, n});
      }
      break;
    case Family::Cycle:
    case Family::Complete:
      for (int n = c.n.lo; n <= c.n.hi; ++n) add({0, 0, n});
      break;
  }
  return out;
}

struct WorkItem {
  std::size_t instance;
  int r;
};

ConstructionStatus judge(const Graph& g, const Construction& c, int r,
                         const Prediction& pred) {
  if (!c.constructed()) return ConstructionStatus::NotConstructive;
  const bool valid = is_r_dynamic(g, c.coloring, r).ok;
  const bool sized = pred.kind != Prediction::Kind::Exact ||
                     c.coloring.palette_size() == pred.value;
  return valid && sized ? ConstructionStatus::Valid
                        : ConstructionStatus::Invalid;
}

Agreement classify(const Prediction& pred, const std::optional<SolveResult>& solved) {
  if (!pred.covered()) return Agreement::Uncovered;
  if (!solved) return Agreement::ValidatedOnly;
  if (!solved->optimal()) return Agreement::Timeout;
  const int exact = solved->chi_r;
  switch (pred.kind) {
    case Prediction::Kind::Exact:
      return exact == pred.value ? Agreement::Match : Agreement::Mismatch;
    case Prediction::Kind::LowerBoundOnly:
      return exact >= pred.value ? Agreement::Match : Agreement::Mismatch;
    case Prediction::Kind::Parametric:
      return exact == pred.hypothesis ? Agreement::HypothesisConfirmed
                                      : Agreement::HypothesisRefuted;
    case Prediction::Kind::Uncovered: break;
  }
  return Agreement::Uncovered;
}

SweepRow evaluate(Family family, const Instance& inst, int r,
                  const SweepConfig& config) {
  const auto start = Clock::now();
  const Graph& g = inst.graph;
  SweepRow row;
  row.family = family;
  row.params = inst.params;
  row.r = r;

  const Prediction pred = predict(family, inst.params, r);
  row.case_id = pred.case_id;
  row.predicted_kind = pred.kind;
  if (pred.covered()) row.predicted_value = pred.value;
  row.hypothesis_value = pred.hypothesis;

  if (auto claim = degree_claims(family, inst.params)) {
    row.degree_claim_ok =
        claim->min_degree == static_cast<int>(g.min_degree()) &&
        claim->max_degree == static_cast<int>(g.max_degree());
  }

  const auto printed =
      construct_coloring(family, inst.params, r, PaletteVariant::Printed);
  row.construction_status = judge(g, printed, r, pred);
  if (printed.has_repair) {
    const auto repaired =
        construct_coloring(family, inst.params, r, PaletteVariant::Repaired);
    row.repair_status = judge(g, repaired, r, pred);
  }

  std::optional<SolveResult> solved;
  if (g.order() <= config.exact_cap) {
    SolveOptions options;
    options.budget = config.budget;
    solved = exact_chi_r(g, r, options);
    row.nodes_explored = solved->nodes_explored;
    if (solved->optimal()) row.exact_value = solved->chi_r;
  }
  row.agreement = classify(pred, solved);
  if (pred.lower_bound && row.exact_value) {
    row.lower_bound_ok = *row.exact_value >= *pred.lower_bound;
  }
  row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       Clock::now() - start)
                       .count();
  return row;
}

std::string opt_str(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

json opt_json(const auto& v) { return v ? json(*v) : json(nullptr); }

template <typename T>
std::optional<T> opt_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

}  // namespace

IntRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = parse_int(text);
    return {v, v};
  }
  IntRange out{parse_int(std::string_view(text).substr(0, dots)),
               parse_int(std::string_view(text).substr(dots + 2))};
  if (out.empty()) throw InvalidParameter("empty range '" + text + "'");
  return out;
}

std::string_view construction_status_name(ConstructionStatus s) {
  for (auto [value, name] : kConstructionNames) {
    if (value == s) return name;
  }
  return "not-constructive";
}

std::string_view agreement_name(Agreement a) {
  for (auto [value, name] : kAgreementNames) {
    if (value == a) return name;
  }
  return "uncovered";
}

bool SweepRow::discrepancy() const {
  return agreement == Agreement::Mismatch ||
         agreement == Agreement::HypothesisRefuted ||
         construction_status == ConstructionStatus::Invalid ||
         degree_claim_ok == false || lower_bound_ok == false ||
         stability_ok == false;
}

bool SweepReport::has_discrepancy() const {
  return std::any_of(rows.begin(), rows.end(),
                     [](const SweepRow& r) { return r.discrepancy(); });
}

void summarize(SweepReport& report) {
  report.summary.clear();
  for (auto [value, name] : kAgreementNames) report.summary[std::string(name)] = 0;
  for (const auto& row : report.rows) {
    ++report.summary[std::string(agreement_name(row.agreement))];
  }
}

json config_to_json(const SweepConfig& c) {
  json out;
  out["family"] = family_name(c.family);
  out["l"] = {c.l.lo, c.l.hi};
  out["m"] = {c.m.lo, c.m.hi};
  out["n"] = {c.n.lo, c.n.hi};
  out["r"] = c.r ? json{c.r->lo, c.r->hi} : json("auto");
  out["budget_ms"] = c.budget.count();
  out["exact_cap"] = c.exact_cap;
  out["jobs"] = c.jobs;
  return out;
}

SweepReport sweep(const SweepConfig& config) {
  if (config.budget < std::chrono::seconds(1)) {
    throw InvalidParameter("budget must be at least 1 s");
  }
  if (config.r && (config.r->empty() || config.r->lo < 1)) {
    throw InvalidParameter("r range must be non-empty and start at >= 1");
  }
  const auto insts = instances(config);

  std::vector<WorkItem> work;
  // Index of the stability spot-check row: first instance with Δ >= 1.
  std::optional<std::size_t> spot;
  for (std::size_t i = 0; i < insts.size(); ++i) {
    const int delta = static_cast<int>(insts[i].graph.max_degree());
    const IntRange r = config.r.value_or(IntRange{1, std::max(1, delta)});
    for (int v = r.lo; v <= r.hi; ++v) work.push_back({i, v});
    if (!config.r && !spot && delta >= 1) {
      spot = work.size();
      work.push_back({i, delta + 1});
    }
  }

  SweepReport report;
  report.config = config_to_json(config);
  report.rows.resize(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t w; (w = next.fetch_add(1)) < work.size();) {
      report.rows[w] = evaluate(config.family, insts[work[w].instance],
                                work[w].r, config);
    }
  };
  const int jobs = std::clamp<int>(config.jobs, 1, 64);
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }

  if (spot) {
    // The row just before the spot check is r = Δ on the same instance.
    SweepRow& above = report.rows[*spot];
    const SweepRow& at = report.rows[*spot - 1];
    if (above.exact_value && at.exact_value) {
      above.stability_ok = *above.exact_value == *at.exact_value;
    }
  }
  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const SweepRow& a, const SweepRow& b) {
                     return std::tie(a.params.l, a.params.m, a.params.n, a.r) <
                            std::tie(b.params.l, b.params.m, b.params.n, b.r);
                   });
  summarize(report);
  return report;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json") return ReportFormat::Json;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  throw InvalidParameter("unknown report format '" + std::string(name) + "'");
}

std::string report_to_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "family,l,m,n,r,case_id,predicted_kind,predicted_value,"
        "hypothesis_value,exact_value,construction_status,agreement,"
        "nodes_explored,elapsed_ms\n";
  for (const auto& row : report.rows) {
    os << family_name(row.family) << ',' << row.params.l << ','
       << row.params.m << ',' << row.params.n << ',' << row.r << ','
       << row.case_id << ',' << kind_name(row.predicted_kind) << ','
       << opt_str(row.predicted_value) << ',' << opt_str(row.hypothesis_value)
       << ',' << opt_str(row.exact_value) << ','
       << construction_status_name(row.construction_status) << ','
       << agreement_name(row.agreement) << ',' << row.nodes_explored << ','
       << row.elapsed_ms << '\n';
  }
  return os.str();
}

json report_to_json(const SweepReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({
        {"family", family_name(row.family)},
        {"l", row.params.l},
        {"m", row.params.m},
        {"n", row.params.n},
        {"r", row.r},
        {"case_id", row.case_id},
        {"predicted_kind", kind_name(row.predicted_kind)},
        {"predicted_value", opt_json(row.predicted_value)},
        {"hypothesis_value", opt_json(row.hypothesis_value)},
        {"exact_value", opt_json(row.exact_value)},
        {"construction_status",
         construction_status_name(row.construction_status)},
        {"repair_status", row.repair_status
                              ? json(construction_status_name(*row.repair_status))
                              : json(nullptr)},
        {"agreement", agreement_name(row.agreement)},
        {"degree_claim_ok", opt_json(row.degree_claim_ok)},
        {"lower_bound_ok", opt_json(row.lower_bound_ok)},
        {"stability_ok", opt_json(row.stability_ok)},
        {"nodes_explored", row.nodes_explored},
        {"elapsed_ms", row.elapsed_ms},
    });
  }
  return {{"tool_version", report.tool_version},
          {"config", report.config},
          {"rows", std::move(rows)},
          {"summary", report.summary},
          {"discrepancy", report.has_discrepancy()}};
}

SweepReport report_from_json(const json& j) {
  try {
    SweepReport report;
    report.tool_version = j.at("tool_version").get<std::string>();
    report.config = j.at("config");
    for (const auto& r : j.at("rows")) {
      SweepRow row;
      row.family = parse_family(r.at("family").get<std::string>());
      row.params = {r.at("l").get<int>(), r.at("m").get<int>(),
                    r.at("n").get<int>()};
      row.r = r.at("r").get<int>();
      row.case_id = r.at("case_id").get<std::string>();
      row.predicted_kind = parse_kind(r.at("predicted_kind").get<std::string>());
      row.predicted_value = opt_from<int>(r, "predicted_value");
      row.hypothesis_value = opt_from<int>(r, "hypothesis_value");
      row.exact_value = opt_from<int>(r, "exact_value");
      row.construction_status =
          lookup(kConstructionNames,
                 r.at("construction_status").get<std::string>(),
                 "construction status");
      if (auto s = opt_from<std::string>(r, "repair_status")) {
        row.repair_status = lookup(kConstructionNames, *s, "construction status");
      }
      row.agreement = lookup(kAgreementNames,
                             r.at("agreement").get<std::string>(), "agreement");
      row.degree_claim_ok = opt_from<bool>(r, "degree_claim_ok");
      row.lower_bound_ok = opt_from<bool>(r, "lower_bound_ok");
      row.stability_ok = opt_from<bool>(r, "stability_ok");
      row.nodes_explored = r.at("nodes_explored").get<std::uint64_t>();
      row.elapsed_ms = r.at("elapsed_ms").get<std::int64_t>();
      report.rows.push_back(std::move(row));
    }
    report.summary = j.at("summary").get<std::map<std::string, int>>();
    return report;
  } catch (const json::exception& e) {
    throw IoError(std::string("malformed report JSON: ") + e.what());
  } catch (const InvalidParameter& e) {
    throw IoError(std::string("malformed report JSON: ") + e.what());
  }
}

std::string report_to_markdown(const SweepReport& report) {
  std::ostringstream os;
  os << "# r-dynamic coloring sweep\n\n";
  os << "tool version " << report.tool_version << "\n";
  std::optional<Family> current;
  auto cell = [](const auto& v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  for (const auto& row : report.rows) {
    if (row.family != current) {
      current = row.family;
      os << "\n## " << family_name(row.family) << "\n\n"
         << "| l | m | n | r | case | kind | predicted | hypothesis | exact "
            "| construction | repair | agreement | notes |\n"
         << "|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
    }
    std::string notes;
    if (row.degree_claim_ok == false) notes += "degree claim differs; ";
    if (row.lower_bound_ok == false) notes += "below lower bound; ";
    if (row.stability_ok) {
      notes += *row.stability_ok ? "stable above max degree; "
                                 : "NOT stable above max degree; ";
    }
    os << "| " << row.params.l << " | " << row.params.m << " | "
       << row.params.n << " | " << row.r << " | " << row.case_id << " | "
       << kind_name(row.predicted_kind) << " | " << cell(row.predicted_value)
       << " | " << cell(row.hypothesis_value) << " | "
       << cell(row.exact_value) << " | "
       << construction_status_name(row.construction_status) << " | "
       << (row.repair_status ? construction_status_name(*row.repair_status)
                             : std::string_view("-"))
       << " | " << agreement_name(row.agreement) << " | " << notes << " |\n";
  }
  os << "\n## Summary\n\n| agreement | rows |\n|---|---|\n";
  for (const auto& [name, count] : report.summary) {
    os << "| " << name << " | " << count << " |\n";
  }
  os << "\ndiscrepancies: " << (report.has_discrepancy() ? "yes" : "none")
     << "\n";
  return os.str();
}

void emit_report(const SweepReport& report, ReportFormat format,
                 const std::filesystem::path& path) {
  switch (format) {
    case ReportFormat::Csv: write_file_atomic(path, report_to_csv(report)); break;
    case ReportFormat::Json:
      write_file_atomic(path, report_to_json(report).dump(2) + "\n");
      break;
    case ReportFormat::Markdown:
      write_file_atomic(path, report_to_markdown(report));
      break;
  }
}

}  // namespace rdc
