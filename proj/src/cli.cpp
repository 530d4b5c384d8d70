#include "snort/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "snort/io.hpp"
#include "snort/service.hpp"
#include "snort/strategy.hpp"

namespace snort {

bool theorem_covered(const std::string& family_tag, int n) {
  const Family family = parse_family(family_tag);
  switch (family) {
    case Family::Path:
    case Family::Custom:
      return family_tag == "path" && n == 6;
    case Family::RightMinusOnly3:
      return n % 2 == 0;
    default:
      return true;
  }
}

namespace {

std::string join_labels(const std::vector<VertexLabel>& labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ' ';
    out += l.str();
  }
  return out.empty() ? "-" : out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct SolveFlags {
  bool no_memo = false;
  std::string order = "index";
  std::uint64_t node_cap = SolverOptions{}.node_cap;
  bool split_components = false;

  SolverOptions options() const {
    SolverOptions o;
    o.memo = !no_memo;
    o.order = order == "greedy" ? MoveOrder::Greedy : MoveOrder::Index;
    o.node_cap = node_cap;
    o.split_components = split_components;
    return o;
  }

  void attach(CLI::App* cmd) {
    cmd->add_flag("--no-memo", no_memo, "Disable the transposition table (oracle mode)");
    cmd->add_option("--order", order, "Move ordering")->check(CLI::IsMember({"index", "greedy"}));
    cmd->add_option("--node-cap", node_cap, "Expanded-node budget per query");
    cmd->add_flag("--split-components", split_components,
                  "Count one-sided components as spare moves");
  }
};

void print_table_header(std::ostream& out) {
  out << std::left << std::setw(17) << "family" << std::setw(4) << "n" << std::setw(5) << "|V|"
      << std::setw(8) << "outcome" << std::setw(12) << "nodes" << std::setw(10) << "seconds"
      << "best first moves (Left)\n";
}

void print_table_row(std::ostream& out, const SolveReport& r, int vertices, bool flagged) {
  out << std::left << std::setw(17) << family_name(r.family) << std::setw(4) << r.n
      << std::setw(5) << vertices << std::setw(8) << outcome_name(r.outcome) << std::setw(12)
      << r.stats.nodes_expanded << std::setw(10) << std::fixed << std::setprecision(3)
      << r.stats.elapsed_seconds << join_labels(r.best_left);
  if (flagged) out << "   <-- NOT N: contradicts the proven first-player win";
  out << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"snortlab: exact Snort solver and strategy checker for triangular grids", "snortlab"};
  app.require_subcommand(1);

  std::string family_tag;
  int n = 0;

  // solve
  auto* solve = app.add_subcommand("solve", "Outcome class and best first moves of one graph");
  SolveFlags solve_flags;
  bool as_table = false;
  solve->add_option("--family", family_tag, "Graph family")->required();
  solve->add_option("--n", n, "Size parameter")->required();
  solve_flags.attach(solve);
  auto* json_flag = solve->add_flag("--json", "JSON output (default)");
  solve->add_flag("--table", as_table, "Tabular output")->excludes(json_flag);

  // table
  auto* table = app.add_subcommand("table", "Outcome table over families and a range of n");
  std::string families_text;
  int n_min = 1, n_max = 4;
  bool table_json = false;
  SolveFlags table_flags;
  auto* families_opt =
      table->add_option("--families", families_text, "Comma-separated families (default: all)");
  table->add_option("--n-min", n_min, "Smallest n")->check(CLI::PositiveNumber);
  table->add_option("--n-max", n_max, "Largest n")->check(CLI::PositiveNumber);
  table->add_flag("--json", table_json, "JSON output");
  table_flags.attach(table);

  // verify
  auto* verify = app.add_subcommand("verify", "Check the prescribed first move and copycat split");
  bool verify_json = false, candidates = false;
  verify->add_option("--family", family_tag, "Graph family")->required();
  verify->add_option("--n", n, "Size parameter")->required();
  verify->add_flag("--json", verify_json, "JSON output");
  verify->add_flag("--candidates", candidates, "Also check alternative split transcriptions");

  // export
  auto* exporter = app.add_subcommand("export", "Write a family graph as DOT or JSON");
  std::string format = "dot";
  exporter->add_option("--family", family_tag, "Graph family")->required();
  exporter->add_option("--n", n, "Size parameter")->required();
  exporter->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP analysis service");
  std::string host = "127.0.0.1";
  int port = 8080;
  if (const char* env = std::getenv("SNORT_PORT")) port = std::atoi(env);
  std::string journal;
  serve->add_option("--host", host, "Bind address (loopback by default)");
  serve->add_option("--port", port, "Port (default $SNORT_PORT or 8080)");
  serve->add_option("--journal", journal, "Append-only JSON-lines session journal");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();  // program name
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (solve->parsed() || verify->parsed() || exporter->parsed()) {
      const Family family = parse_family(family_tag);
      if (n < 1) throw InvalidArgument("n must be at least 1");
      (void)build_family(family, n);  // size check
    }

    if (solve->parsed()) {
      const Family family = parse_family(family_tag);
      const SolveReport report = solve_report(family, n, solve_flags.options());
      if (as_table) {
        print_table_header(out);
        print_table_row(out, report, build_family(family, n).size(), false);
      } else {
        out << solve_report_to_json(report).dump(2) << '\n';
      }
      return kExitOk;
    }

    if (table->parsed()) {
      std::vector<Family> families;
      if (families_opt->count() == 0)
        families = all_families();
      else
        for (const auto& tag : split_list(families_text)) families.push_back(parse_family(tag));
      json rows = json::array();
      bool any_flag = false;
      if (n_min > n_max) throw InvalidArgument("--n-min exceeds --n-max");
      if (!table_json && !families.empty()) print_table_header(out);
      for (Family family : families) {
        for (int k = n_min; k <= n_max; ++k) {
          const SolveReport report = solve_report(family, k, table_flags.options());
          const bool flagged = theorem_covered(std::string(family_name(family)), k) &&
                               report.outcome != Outcome::N;
          any_flag = any_flag || flagged;
          if (table_json) {
            json row = solve_report_to_json(report);
            row["theorem_covered"] = theorem_covered(std::string(family_name(family)), k);
            row["flagged"] = flagged;
            rows.push_back(std::move(row));
          } else {
            print_table_row(out, report, build_family(family, k).size(), flagged);
          }
        }
      }
      if (table_json) out << rows.dump(2) << '\n';
      if (any_flag) err << "WARNING: proven first-player-win cells produced non-N outcomes\n";
      return any_flag ? kExitVerification : kExitOk;
    }

    if (verify->parsed()) {
      const Family family = parse_family(family_tag);
      if (!has_strategy(family, n)) {
        if (family != Family::RightMinusOnly3)
          throw NoStrategy("no strategy is defined for family " + family_tag);
        const std::string notice =
            "no proven strategy for " + family_tag + " n=" + std::to_string(n) +
            "; computational evidence indicates a first player win (use `solve`)";
        if (verify_json)
          out << json{{"family", family_tag}, {"n", n}, {"verdict", "no_strategy"},
                      {"detail", notice}}.dump(2)
              << '\n';
        else
          out << notice << '\n';
        return kExitOk;
      }
      const VerificationReport report = verify_copycat(family, n);
      bool ok = report.verdict == VerificationReport::Verdict::Win;
      if (verify_json) {
        json doc = report_to_json(report);
        if (candidates && report.method == VerificationReport::Method::Copycat) {
          json alt = json::array();
          for (const auto& spec : split_spec_candidates(family, n))
            alt.push_back(report_to_json(verify_split(spec)));
          doc["candidates"] = std::move(alt);
        }
        out << doc.dump(2) << '\n';
      } else {
        out << family_tag << " n=" << n << ": "
            << (report.method == VerificationReport::Method::Copycat ? "copycat split"
                                                                     : "solver check (small n)")
            << ", first move " << report.first_move.str() << " -> "
            << (ok ? "win" : "FAIL") << " (lines " << report.lines_explored << ", depth "
            << report.max_depth << ")";
        if (!report.detail.empty()) out << " [" << report.detail << "]";
        out << '\n';
        if (report.failure_trace) out << "  trace: " << join_labels(*report.failure_trace) << '\n';
        if (candidates && report.method == VerificationReport::Method::Copycat) {
          int index = 0;
          for (const auto& spec : split_spec_candidates(family, n)) {
            const auto r = verify_split(spec);
            out << "  candidate " << index++ << ": "
                << (r.verdict == VerificationReport::Verdict::Win ? "win" : "fail");
            if (!r.detail.empty()) out << " [" << r.detail << "]";
            out << '\n';
          }
        }
      }
      return ok ? kExitOk : kExitVerification;
    }

    if (exporter->parsed()) {
      const Graph graph = build_family(parse_family(family_tag), n);
      if (format == "json")
        out << graph_to_json(graph).dump(2) << '\n';
      else
        out << export_dot(graph);
      return kExitOk;
    }

    if (serve->parsed()) {
      std::optional<std::filesystem::path> journal_path;
      if (!journal.empty()) journal_path = journal;
      GameService service(journal_path);
      HttpServer server(service);
      const int bound = server.bind(host, port);
      if (bound < 0) {
        err << "could not bind " << host << ":" << port << '\n';
        return kExitUsage;
      }
      err << "snortlab service listening on http://" << host << ":" << bound << std::endl;
      server.run();
      return kExitOk;
    }
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceExhausted& e) {
    err << "resource budget exceeded: " << e.what() << '\n';
    return kExitResource;
  } catch (const NoStrategy& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace snort
