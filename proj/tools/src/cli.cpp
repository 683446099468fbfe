#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "factorlab/chains.hpp"
#include "factorlab/errors.hpp"
#include "factorlab/factor.hpp"
#include "factorlab/lengths.hpp"
#include "factorlab/monoid.hpp"
#include "factorlab/omega.hpp"
#include "factorlab/oracle.hpp"
#include "factorlab/report.hpp"
#include "factorlab/serialize.hpp"

namespace factorlab::cli {
namespace {

struct Budget {
  bool enabled = false;
  std::chrono::steady_clock::time_point deadline{};

  static Budget for_ms(std::int64_t ms) {
    Budget budget;
    if (ms > 0) {
      budget.enabled = true;
      budget.deadline =
          std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
    }
    return budget;
  }
  bool exhausted() const {
    return enabled && std::chrono::steady_clock::now() > deadline;
  }
};

unsigned worker_count() {
  unsigned count = std::thread::hardware_concurrency();
  if (count == 0) count = 1;
  if (const char* env = std::getenv("FACTORLAB_THREADS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1 && parsed <= 1024) {
      count = static_cast<unsigned>(parsed);
    }
  }
  return count;
}

std::string scalar_csv(const std::vector<std::pair<Element, Element>>& points) {
  std::string out = "n,value\n";
  for (const auto& [n, value] : points) {
    out += std::to_string(n);
    out += ',';
    out += std::to_string(value);
    out += '\n';
  }
  return out;
}

// Grows the shared length table in slices so a budget can interrupt the
// build between slices.
bool warm_lengths(const Monoid& monoid, Element bound, const Budget& budget) {
  Element step = 256;
  for (Element b = std::min(bound, step);; b = std::min(bound, b + step)) {
    monoid.length_row(b);
    if (budget.exhausted()) return false;
    if (b == bound) return true;
  }
}

// Per-element catenary degrees over a worker pool; each worker owns a
// residue class of elements, so slots never contend. False on budget abort.
bool sweep_catenary(const Monoid& monoid, Element bound, const Budget& budget,
                    std::vector<Element>& values) {
  values.assign(static_cast<std::size_t>(bound) + 1, -1);
  std::atomic<bool> stop{false};
  auto stride = static_cast<Element>(
      std::min<unsigned>(worker_count(),
                         static_cast<unsigned>(std::min<Element>(bound, 64))));
  auto work = [&](Element first) {
    for (Element n = first; n <= bound; n += stride) {
      if (stop.load(std::memory_order_relaxed)) return;
      if (budget.exhausted()) {
        stop.store(true, std::memory_order_relaxed);
        return;
      }
      if (monoid.contains(n)) {
        values[static_cast<std::size_t>(n)] = catenary_degree(monoid, n);
      }
    }
  };
  if (stride <= 1) {
    work(1);
  } else {
    std::vector<std::thread> pool;
    for (Element first = 1; first <= stride; ++first) {
      pool.emplace_back(work, first);
    }
    for (auto& worker : pool) worker.join();
  }
  return !stop.load();
}

int budget_abort(std::ostream& err) {
  err << "time budget exhausted; no output written\n";
  return kExitBudget;
}

int run_sweep(const Monoid& monoid, const std::string& invariant, Element bound,
              const std::string& path, std::int64_t budget_ms, std::ostream& out,
              std::ostream& err) {
  Budget budget = Budget::for_ms(budget_ms);
  std::string csv;

  if (invariant == "elasticity") {
    if (!warm_lengths(monoid, bound, budget)) return budget_abort(err);
    ElasticityProfile profile;
    profile.bound = bound;
    for (Element n = 1; n <= bound; ++n) {
      if (budget.exhausted()) return budget_abort(err);
      if (monoid.contains(n)) profile.points.emplace_back(n, elasticity(monoid, n));
    }
    csv = elasticity_csv(profile);
  } else if (invariant == "delta") {
    if (!warm_lengths(monoid, bound, budget)) return budget_abort(err);
    DeltaSeries series;
    series.bound = bound;
    for (Element n = 1; n <= bound; ++n) {
      if (budget.exhausted()) return budget_abort(err);
      if (!monoid.contains(n)) continue;
      for (Element d : delta_of_element(monoid, n).values) {
        series.rows.emplace_back(n, d);
      }
    }
    csv = delta_csv(series);
  } else if (invariant == "catenary") {
    std::vector<Element> values;
    if (!sweep_catenary(monoid, bound, budget, values)) return budget_abort(err);
    std::vector<std::pair<Element, Element>> points;
    for (Element n = 1; n <= bound; ++n) {
      if (values[static_cast<std::size_t>(n)] >= 0) {
        points.emplace_back(n, values[static_cast<std::size_t>(n)]);
      }
    }
    csv = scalar_csv(points);
  } else {  // omega: one sequential table pass, budget polled between retries
    std::vector<std::pair<Element, Element>> series;
    for (Element cap = std::min<Element>(bound, 1024);;
         cap = std::min(bound, checked_mul(cap, 2))) {
      series = omega_series(monoid, cap);
      if (budget.exhausted()) return budget_abort(err);
      if (cap == bound) break;
    }
    csv = scalar_csv(series);
  }

  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "cannot open " << path << "\n";
    return kExitFailure;
  }
  file << csv;
  file.close();
  if (!file) {
    err << "failed writing " << path << "\n";
    return kExitFailure;
  }
  out << "wrote " << path << "\n";
  return kExitOk;
}

int run_betti(const Monoid& monoid, const std::string& format,
              std::ostream& out) {
  std::vector<BettiEntry> entries;
  for (Element b : betti_elements(monoid).elements) {
    entries.push_back(
        BettiEntry{b, delta_of_element(monoid, b), catenary_degree(monoid, b)});
  }
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["generators"] = monoid.generators();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& entry : entries) {
      nlohmann::ordered_json row;
      row["element"] = entry.element;
      row["delta"] = entry.delta.values;
      row["catenary"] = entry.catenary;
      rows.push_back(std::move(row));
    }
    doc["betti"] = std::move(rows);
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  if (entries.empty()) {
    out << "no betti elements\n";
    return kExitOk;
  }
  for (const auto& entry : entries) {
    out << "betti " << entry.element << "  delta {";
    for (std::size_t i = 0; i < entry.delta.values.size(); ++i) {
      if (i > 0) out << ", ";
      out << entry.delta.values[i];
    }
    out << "}  catenary " << entry.catenary << "\n";
  }
  return kExitOk;
}

int run_oracle(const Monoid& monoid, Element bound, std::ostream& out,
               std::ostream& err) {
  Element ceiling = bound < 0 ? default_oracle_ceiling(monoid) : bound;
  std::int64_t mismatches = 0;
  auto complain = [&](Element n, const char* what) {
    err << "mismatch at " << n << ": " << what << "\n";
    ++mismatches;
  };

  for (Element n = 0; n <= ceiling; ++n) {
    if (naive_factorizations(monoid, n, ceiling) != factorizations(monoid, n)) {
      complain(n, "factorizations");
    }
    if (naive_length_set(monoid, n, ceiling).lengths !=
        length_set(monoid, n).lengths) {
      complain(n, "length set");
    }
    if (!monoid.contains(n)) continue;
    if (naive_bullets(monoid, n, ceiling).bullets != bullets(monoid, n).bullets) {
      complain(n, "bullets");
    }
    if (naive_catenary(monoid, n, ceiling) != catenary_degree(monoid, n)) {
      complain(n, "catenary degree");
    }
  }

  std::vector<Element> fast_betti;
  for (Element b : betti_elements(monoid).elements) {
    if (b <= ceiling) fast_betti.push_back(b);
  }
  if (naive_betti(monoid, ceiling).elements != fast_betti) {
    err << "mismatch: betti scan\n";
    ++mismatches;
  }

  if (mismatches > 0) {
    err << mismatches << " disagreements up to " << ceiling << "\n";
    return kExitDisagreement;
  }
  out << "fast paths agree with oracles for all elements up to " << ceiling
      << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"factorization invariants of numerical monoids", "factorlab"};
  app.require_subcommand(1);

  std::vector<Element> gens;
  Element element_value = 0;
  std::string report_format = "json";
  std::string betti_format = "text";
  std::string invariant;
  std::string out_path;
  Element up_to = -1;
  std::int64_t budget_ms = 0;

  auto add_gens = [&gens](CLI::App* cmd) {
    cmd->add_option("--gens", gens, "comma-separated generators, e.g. 6,9,20")
        ->required()
        ->delimiter(',');
  };

  auto* report_cmd =
      app.add_subcommand("report", "invariant report for a monoid");
  add_gens(report_cmd);
  auto* element_opt = report_cmd->add_option(
      "--element", element_value, "add a per-element block for this member");
  report_cmd->add_option("--format", report_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* sweep_cmd =
      app.add_subcommand("sweep", "per-element invariant series as CSV");
  add_gens(sweep_cmd);
  sweep_cmd
      ->add_option("--invariant", invariant,
                   "elasticity, delta, catenary, or omega")
      ->required()
      ->check(CLI::IsMember({"elasticity", "delta", "catenary", "omega"}));
  sweep_cmd->add_option("--up-to", up_to,
                        "last element (default frobenius + 3 lcm)");
  sweep_cmd->add_option("--out", out_path, "output CSV path")->required();
  sweep_cmd->add_option("--budget-ms", budget_ms,
                        "abort cleanly after this many milliseconds");

  auto* betti_cmd =
      app.add_subcommand("betti", "betti elements with their invariants");
  add_gens(betti_cmd);
  betti_cmd->add_option("--format", betti_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  auto* oracle_cmd = app.add_subcommand(
      "oracle", "certify fast paths against brute-force oracles");
  oracle_cmd->group("");  // certification plumbing, hidden from help
  add_gens(oracle_cmd);
  oracle_cmd->add_option("--up-to", up_to,
                         "last element (default frobenius + 3 lcm)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    Monoid monoid = Monoid::from_generators(gens);
    if (report_cmd->parsed()) {
      std::optional<Element> element;
      if (element_opt->count() > 0) element = element_value;
      auto report = build_report(monoid, element);
      out << (report_format == "text" ? report_text(report)
                                      : report_json(report));
      return kExitOk;
    }
    if (sweep_cmd->parsed()) {
      Element bound = up_to < 0 ? default_oracle_ceiling(monoid) : up_to;
      return run_sweep(monoid, invariant, bound, out_path, budget_ms, out, err);
    }
    if (betti_cmd->parsed()) {
      return run_betti(monoid, betti_format, out);
    }
    return run_oracle(monoid, up_to, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::NonCoprime ? kExitNonCoprime : kExitFailure;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace factorlab::cli
