#include "girthsearch/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "girthsearch/engine.hpp"
#include "girthsearch/io.hpp"
#include "girthsearch/oracle.hpp"
#include "girthsearch/parameters.hpp"
#include "girthsearch/searchspace.hpp"

namespace girthsearch {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& data, std::ostream& out) {
  if (path.empty()) {
    out << data;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot write '" + path + "'");
  file << data;
}

std::string format_btu(const Btu& btu, const std::string& format) {
  if (format == "alist") return to_alist(btu);
  if (format == "dot") return to_dot(btu);
  if (format == "matrix") return to_matrix_text(btu);
  return to_json(btu).dump(2) + "\n";
}

std::string join_perms(const Btu& btu) {
  std::string line;
  for (std::size_t t = 1; t <= btu.r(); ++t) {
    if (t > 1) line += " | ";
    line += to_string(btu.slot(t));
  }
  return line;
}

std::string join_partitions(const std::vector<Partition>& betas) {
  std::string line;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    if (i > 0) line += " | ";
    line += to_string(betas[i]);
  }
  return line;
}

void warn_if_dense(const Factorization& f, std::ostream& err) {
  if (f.dense()) {
    err << "warning: r=" << f.r << " >= m/2 (m=" << f.m
        << "); outside the regime the search is designed for\n";
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Search for girth-maximum regular bipartite graphs (Balanced Tanner Units)"};
  app.require_subcommand(1);

  std::uint64_t m = 0;
  std::uint64_t r = 0;

  auto* params = app.add_subcommand("params", "Compute b, k and the optimal partitions");
  params->add_option("-m", m, "Matrix dimension")->required();
  params->add_option("-r", r, "Row/column weight")->required();

  std::string mode = "best";
  std::string policy = "relaxed";
  unsigned workers = 1;
  std::optional<std::uint64_t> cap;
  std::string format = "json";
  std::string output;
  bool no_timing = false;
  auto* search_cmd = app.add_subcommand("search", "Run the staged enumeration search");
  search_cmd->add_option("-m", m, "Matrix dimension")->required();
  search_cmd->add_option("-r", r, "Row/column weight")->required();
  search_cmd->add_option("--mode", mode, "best|exhaustive")
      ->check(CLI::IsMember({"best", "exhaustive"}));
  search_cmd->add_option("--policy", policy, "strict|relaxed")
      ->check(CLI::IsMember({"strict", "relaxed"}));
  search_cmd->add_option("--workers", workers, "Parallel candidate evaluators")
      ->check(CLI::Range(1U, 1024U));
  search_cmd->add_option("--cap", cap, "Maximum configurations per stage")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--format", format, "alist|dot|matrix|json")
      ->check(CLI::IsMember({"alist", "dot", "matrix", "json"}));
  search_cmd->add_option("-o", output, "Output file");
  search_cmd->add_flag("--no-timing", no_timing, "Omit elapsed time from JSON output");

  bool fix_first = false;
  auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive maximum girth");
  oracle_cmd->add_option("-m", m, "Matrix dimension")->required();
  oracle_cmd->add_option("-r", r, "Row/column weight")->required();
  oracle_cmd->add_flag("--fix-first", fix_first, "Pin slot 1 to the identity");

  auto* verify_cmd = app.add_subcommand("verify", "Compare search against the oracle");
  verify_cmd->add_option("-m", m, "Matrix dimension")->required();
  verify_cmd->add_option("-r", r, "Row/column weight")->required();

  std::string input;
  bool witness = false;
  auto* girth_cmd = app.add_subcommand("girth", "Girth of a matrix or alist file");
  girth_cmd->add_option("-i", input, "Input file")->required();
  girth_cmd->add_flag("--witness", witness, "Print a shortest cycle");

  std::size_t n = 0;
  std::string base_text;
  std::optional<std::uint64_t> limit;
  auto* candidates_cmd = app.add_subcommand("candidates", "Stream single-cycle partners");
  candidates_cmd->add_option("-n", n, "Degree")->required();
  candidates_cmd->add_option("--base", base_text, "Base permutation, e.g. \"2 3 1\"");
  candidates_cmd->add_option("--limit", limit, "Stop after N candidates")
      ->check(CLI::NonNegativeNumber);

  std::string perm_text;
  std::size_t k = 0;
  auto* scale_cmd = app.add_subcommand("scale", "Block-scale a permutation");
  scale_cmd->add_option("-p", perm_text, "Permutation, e.g. \"3 4 1 2\"")->required();
  scale_cmd->add_option("-k", k, "Scale factor")->required()->check(CLI::PositiveNumber);

  auto* enumz_cmd = app.add_subcommand("enum-z", "Enumerate the scaled family Z(m, r)");
  enumz_cmd->add_option("-m", m, "Matrix dimension")->required();
  enumz_cmd->add_option("-r", r, "Row/column weight")->required();
  enumz_cmd->add_option("--cap", cap, "Stop after N BTUs")->check(CLI::PositiveNumber);

  std::uint64_t stage = 0;
  auto* cayley_cmd = app.add_subcommand("cayley", "Per-stage search space statistics");
  cayley_cmd->add_option("-m", m, "Matrix dimension")->required();
  cayley_cmd->add_option("-r", r, "Row/column weight")->required();
  cayley_cmd->add_option("-i", stage, "Stage index (1..r-2)")->required();

  std::string export_format;
  auto* export_cmd = app.add_subcommand("export", "Convert a matrix or alist file");
  export_cmd->add_option("-i", input, "Input file")->required();
  export_cmd->add_option("--format", export_format, "alist|dot|matrix|json")
      ->required()
      ->check(CLI::IsMember({"alist", "dot", "matrix", "json"}));
  export_cmd->add_option("-o", output, "Output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*params) {
      const Factorization f = factorize(m, r);
      out << "m=" << f.m << " r=" << f.r << " b=" << f.b << " k=" << f.k << "\n";
      warn_if_dense(f, err);
      if (f.degenerate) {
        err << "error: k=1 (b=m); enumeration search inapplicable\n";
        return 1;
      }
      out << "betas: " << join_partitions(optimal_partitions(f).betas) << "\n";
    } else if (*search_cmd) {
      SearchConfig config;
      config.mode = mode == "exhaustive" ? SearchMode::exhaustive : SearchMode::best;
      config.policy = policy == "strict" ? RotationPolicy::strict : RotationPolicy::relaxed;
      config.worker_count = workers;
      config.candidate_cap = cap;
      if (r >= 2 && m > r) warn_if_dense(factorize(m, r), err);
      const auto started = std::chrono::steady_clock::now();
      const SearchResult result = search(m, r, config);
      const auto elapsed = std::chrono::steady_clock::now() - started;
      std::string data;
      if (format == "json") {
        auto json = to_json(result);
        if (!no_timing) {
          json["elapsed_ms"] =
              std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        data = json.dump(2) + "\n";
      } else {
        data = format_btu(result.btu, format);
      }
      write_output(output, data, out);
      err << "girth " << result.girth << "\n";
    } else if (*oracle_cmd) {
      out << to_json(max_girth(m, r, fix_first)).dump(2) << "\n";
    } else if (*verify_cmd) {
      out << to_json(verify_search(m, r)).dump(2) << "\n";
    } else if (*girth_cmd) {
      const Btu btu = parse_btu_file(read_file(input));
      const GirthReport report = girth(btu, witness);
      out << "girth=" << (report.girth ? std::to_string(*report.girth) : "inf") << "\n";
      if (witness && report.girth) {
        out << "cycle:";
        for (const auto& v : report.witness_cycle) {
          out << ' ' << (v.right ? 'r' : 'l') << v.index;
        }
        out << "\n";
      }
    } else if (*candidates_cmd) {
      const Permutation base = base_text.empty() ? identity(n) : parse_permutation(base_text);
      if (base.degree() != n) throw DomainError("candidates: --base degree differs from -n");
      const std::uint64_t total = candidate_count(n);
      for_each_candidate(base, 0, limit ? std::min(*limit, total) : total,
                         [&](std::uint64_t, const Permutation& q) {
                           out << to_string(q) << "\n";
                           return true;
                         });
    } else if (*scale_cmd) {
      out << to_string(scale_permutation(parse_permutation(perm_text), k)) << "\n";
    } else if (*enumz_cmd) {
      const std::uint64_t count = for_each_z(m, r, cap, [&](const Btu& btu) {
        out << join_perms(btu) << "\n";
        return true;
      });
      err << count << " BTUs\n";
    } else if (*cayley_cmd) {
      const Factorization f = factorize(m, r);
      const CayleyStats stats = cayley_stats(f, stage);
      out << "degree_sym=" << stats.degree_sym << " order=" << stats.order
          << " node_degree=" << stats.node_degree
          << " transition_bound=" << stats.transition_bound << "\n";
    } else if (*export_cmd) {
      write_output(output, format_btu(parse_btu_file(read_file(input)), export_format), out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace girthsearch
