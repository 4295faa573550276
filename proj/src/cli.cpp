#include "emc/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include "emc/algorithm.hpp"
#include "emc/binomial.hpp"
#include "emc/claim.hpp"
#include "emc/json_io.hpp"
#include "emc/oracle.hpp"
#include "emc/suites.hpp"

namespace emc::cli {

using nlohmann::json;

namespace {

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  f << content;
  return f.good();
}

json report_header(const char* command) {
  return json{{"schema_version", kSchemaVersion}, {"command", command}};
}

SetFamily load_family(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << f.rdbuf();
  const std::string text = buf.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{')
    return family_from_json(json::parse(text));
  std::istringstream in(text);
  return SetFamily::read_text(in);
}

}  // namespace

int cmd_bound(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const Params p(cfg.n, cfg.k, cfg.s);
    const std::uint64_t clique = binomial(std::uint64_t{p.s} * p.k - 1, p.k);
    const std::uint64_t star = binomial(p.n, p.k) - binomial(p.n - p.s + 1, p.k);
    const std::uint64_t bound = emc_bound(p);
    out << "n=" << p.n << " k=" << p.k << " s=" << p.s << "\n"
        << "clique term C(sk-1,k)        = " << clique << "\n"
        << "star term C(n,k)-C(n-s+1,k)  = " << star << "\n"
        << "bound                        = " << bound << "\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_lemmas(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.seed_set) {
    err << "error: --seed is required for lemmas\n";
    return kExitUsage;
  }
  const std::size_t cases = cfg.count_set ? cfg.count : 5000;
  json report = report_header("lemmas");
  report["seed"] = cfg.seed;
  if (cases == 0) {
    report["note"] = "no cases run";
    out << "no cases run\n";
    if (!cfg.out_path.empty() && !write_file(cfg.out_path, report.dump(2) + "\n", err))
      return kExitUsage;
    return kExitOk;
  }

  suites::SuiteConfig sc;
  sc.max_n = cfg.n ? cfg.n : 8;
  sc.max_k = cfg.k ? cfg.k : 3;
  sc.max_s = cfg.s ? cfg.s : 3;
  sc.cases = cases;
  sc.seed = cfg.seed;
  json shift, triv;
  try {
    shift = suites::shift_matching_suite(sc);
    triv = suites::triviality_suite(sc);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  report["shift_matching"] = shift;
  report["triviality"] = triv;

  const std::size_t bad =
      shift["violations"].size() + triv["violations"].size();
  out << "shift/matching suite: " << shift["pairs"].get<std::uint64_t>()
      << " shift cases over " << cases << " families, "
      << shift["violations"].size() << " violations\n";
  out << "triviality suite:     " << cases << " families, "
      << triv["violations"].size() << " violations\n";
  std::string evidence_path = cfg.out_path;
  if (bad != 0 && evidence_path.empty()) evidence_path = "emc_lemmas_evidence.json";
  if (!evidence_path.empty()) {
    if (!write_file(evidence_path, report.dump(2) + "\n", err)) return kExitUsage;
    if (bad != 0) out << "evidence written to " << evidence_path << "\n";
  }
  return bad == 0 ? kExitOk : kExitViolation;
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.in_path.empty()) {
    err << "error: --in FILE is required for run\n";
    return kExitUsage;
  }
  SetFamily f = SetFamily::empty(Params(1, 1, 1));
  try {
    f = load_family(cfg.in_path);
  } catch (const json::exception& e) {
    err << "error: " << cfg.in_path << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << cfg.in_path << ": " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Outcome o = run(f, AlgoOptions{cfg.paranoid});
    const json j = json_of(o);
    out << "kind        = " << to_string(o.kind) << "\n"
        << "family size = " << o.final_family.size() << "\n"
        << "bound       = " << o.bound << "\n"
        << "phi history = " << json(o.phi_history).dump() << "\n"
        << "iterations  = " << o.iterations.size() << "\n";
    if (!cfg.out_path.empty() && !write_file(cfg.out_path, j.dump(2) + "\n", err))
      return kExitUsage;
    if (o.kind == OutcomeKind::ContradictionMatching) {
      out << "contradiction: verified size-s matching found\n"
          << json_of(*o.certificate).dump() << "\n";
      return kExitViolation;
    }
    return kExitOk;
  } catch (const ClaimViolation& cv) {
    json report = report_header("run");
    report["kind"] = "ClaimViolation";
    report["violations"] = json::array({{{"claim", cv.claim()}, {"evidence", cv.evidence()}}});
    out << "claim violation: " << cv.claim() << "\n";
    if (!cfg.out_path.empty() && !write_file(cfg.out_path, report.dump(2) + "\n", err))
      return kExitUsage;
    return kExitViolation;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    if (!e.detail().is_null()) err << e.detail().dump() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_oracle(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const unsigned max_n = cfg.n ? cfg.n : 7;
  const unsigned max_k = cfg.k ? cfg.k : 2;
  const unsigned max_s = cfg.s ? cfg.s : 3;

  struct Row {
    Params p;
    OracleMethod method;
  };
  std::vector<Row> rows;
  for (unsigned k = 1; k <= max_k; ++k)
    for (unsigned s = 1; s <= max_s; ++s)
      for (unsigned n = k; n <= max_n; ++n) {
        rows.push_back({Params(n, k, s), OracleMethod::Direct});
        rows.push_back({Params(n, k, s), OracleMethod::Covering});
      }

  std::vector<json> cells = suites::parallel_map_json(
      rows.size(), 0, [&](std::size_t idx) -> json {
        const Row& row = rows[idx];
        json cell{{"n", row.p.n}, {"k", row.p.k}, {"s", row.p.s},
                  {"method", to_string(row.method)}};
        try {
          const OracleResult r = row.method == OracleMethod::Direct
                                     ? f_direct(row.p, cfg.budget)
                                     : f_covering(row.p, cfg.budget);
          cell["conclusive"] = r.conclusive;
          cell["value"] = r.value;
          cell["witness"] = json_of(r.witness);
          if (r.conclusive && r.value > frankl_upper_bound(row.p))
            cell["flag"] = "exceeds-frankl-upper-bound";
        } catch (const std::exception& e) {
          cell["error"] = e.what();
        }
        return cell;
      });

  std::ostringstream csv;
  csv << "n,k,s,f,method,bound,match,witness_file\n";
  bool violation = false;
  std::uint64_t values[2] = {0, 0};
  bool conclusive2[2] = {false, false};
  for (std::size_t idx = 0; idx < cells.size(); ++idx) {
    const json& cell = cells[idx];
    const Params p(cell["n"].get<unsigned>(), cell["k"].get<unsigned>(),
                   cell["s"].get<unsigned>());
    const std::string method = cell["method"].get<std::string>();
    std::string f_text = "inconclusive";
    std::string match = "-";
    std::string bound_text = "n<sk: out of theorem scope";
    std::string witness_file = "-";

    const bool conclusive = cell.contains("conclusive") && cell["conclusive"].get<bool>();
    if (cell.contains("error")) f_text = "error";
    if (conclusive) {
      const std::uint64_t v = cell["value"].get<std::uint64_t>();
      f_text = std::to_string(v);
      if (p.in_theorem_range()) {
        const std::uint64_t bound = emc_bound(p);
        bound_text = std::to_string(bound);
        match = v == bound ? "true" : "false";
        if (v != bound) violation = true;  // a counterexample report
      }
      if (!cfg.out_path.empty()) {
        witness_file = cfg.out_path + ".w" + std::to_string(p.n) + "_" +
                       std::to_string(p.k) + "_" + std::to_string(p.s) + "_" + method +
                       ".txt";
        std::ostringstream w;
        family_from_json(cell["witness"]).write_text(w);
        if (!write_file(witness_file, w.str(), err)) return kExitUsage;
      }
    } else if (p.in_theorem_range()) {
      bound_text = std::to_string(emc_bound(p));
    }
    csv << p.n << ',' << p.k << ',' << p.s << ',' << f_text << ',' << method << ','
        << bound_text << ',' << match << ',' << witness_file << '\n';

    // cross-method agreement per (n,k,s): cells come in direct/covering pairs
    const std::size_t lane = idx % 2;
    values[lane] = conclusive ? cell["value"].get<std::uint64_t>() : 0;
    conclusive2[lane] = conclusive;
    if (lane == 1 && conclusive2[0] && conclusive2[1] && values[0] != values[1]) {
      violation = true;
      csv << "# cross-method disagreement at n=" << p.n << " k=" << p.k
          << " s=" << p.s << "\n";
    }
  }

  out << csv.str();
  if (!cfg.out_path.empty() && !write_file(cfg.out_path, csv.str(), err))
    return kExitUsage;
  return violation ? kExitViolation : kExitOk;
}

int cmd_hunt(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.seed_set) {
    err << "error: --seed is required for hunt\n";
    return kExitUsage;
  }
  suites::HuntConfig hc;
  hc.max_n = cfg.n ? cfg.n : 10;
  hc.max_k = cfg.k ? cfg.k : 3;
  hc.max_s = cfg.s ? cfg.s : 3;
  hc.runs = cfg.count_set ? cfg.count : 10000;
  hc.seed = cfg.seed;
  hc.paranoid = true;  // a hunt is always run with every check armed

  json report = report_header("hunt");
  try {
    report["campaign"] = suites::hunt_campaign(hc);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto& c = report["campaign"];
  out << "runs       = " << c["runs"] << "\n"
      << "outcomes   = " << c["outcomes"].dump() << "\n"
      << "violations = " << c["violations"].size() << "\n";
  if (!c["assertion_failures"].empty())
    out << "failures   = " << c["assertion_failures"].dump() << "\n";
  if (!cfg.out_path.empty() && !write_file(cfg.out_path, report.dump(2) + "\n", err))
    return kExitUsage;
  return c["violations"].empty() ? kExitOk : kExitViolation;
}

}  // namespace emc::cli
