#include "girthsearch/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace girthsearch {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::vector<std::uint64_t> parse_numbers(std::string_view line) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc{} || ptr == line.data() + pos) {
      throw DomainError("cannot parse number in line '" + std::string(line) + "'");
    }
    out.push_back(value);
    pos = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

void write_index_list(std::ostringstream& os, std::vector<std::uint32_t> indices) {
  std::sort(indices.begin(), indices.end());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) os << ' ';
    os << indices[i];
  }
  os << '\n';
}

nlohmann::json permutations_json(const Btu& btu) {
  nlohmann::json perms = nlohmann::json::array();
  for (const auto& p : btu.perms()) {
    perms.push_back(std::vector<std::uint32_t>(p.images().begin(), p.images().end()));
  }
  return perms;
}

nlohmann::json partitions_json(const Btu& btu) {
  nlohmann::json out = nlohmann::json::array();
  if (btu.r() < 2) return out;
  for (const auto& beta : adjacent_partitions(btu)) {
    out.push_back(std::vector<std::uint64_t>(beta.parts().begin(), beta.parts().end()));
  }
  return out;
}

}  // namespace

std::string to_matrix_text(const Btu& btu) {
  const auto mat = to_biadjacency<int>(btu);
  std::ostringstream os;
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    for (Eigen::Index j = 0; j < mat.cols(); ++j) {
      if (j > 0) os << ' ';
      os << mat(i, j);
    }
    os << '\n';
  }
  return os.str();
}

CellGrid parse_matrix_text(std::string_view text) {
  const auto lines = split_lines(text);
  CellGrid grid;
  grid.rows = lines.size();
  for (const auto line : lines) {
    const auto values = parse_numbers(line);
    if (grid.cols == 0) grid.cols = values.size();
    if (values.size() != grid.cols) throw DomainError("matrix text: ragged rows");
    for (auto v : values) {
      if (v > 1) throw DomainError("matrix text: entries must be 0 or 1");
      grid.cells.push_back(static_cast<std::uint8_t>(v));
    }
  }
  if (grid.rows == 0) throw DomainError("matrix text: empty input");
  return grid;
}

std::string to_alist(const Btu& btu) {
  const std::size_t m = btu.m();
  const std::size_t r = btu.r();
  std::ostringstream os;
  os << m << ' ' << m << '\n';
  os << r << ' ' << r << '\n';
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t i = 0; i < m; ++i) os << (i > 0 ? " " : "") << r;
    os << '\n';
  }
  std::vector<std::vector<std::uint32_t>> column_rows(m);
  std::vector<std::vector<std::uint32_t>> row_columns(m);
  for (const auto& p : btu.perms()) {
    for (std::size_t i = 1; i <= m; ++i) {
      column_rows[p(i) - 1].push_back(static_cast<std::uint32_t>(i));
      row_columns[i - 1].push_back(p(i));
    }
  }
  for (auto& rows : column_rows) write_index_list(os, rows);
  for (auto& cols : row_columns) write_index_list(os, cols);
  return os.str();
}

CellGrid parse_alist(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.size() < 4) throw DomainError("alist: truncated header");
  const auto dims = parse_numbers(lines[0]);
  if (dims.size() != 2) throw DomainError("alist: first line must be 'N M'");
  const std::size_t n_cols = dims[0];
  const std::size_t n_rows = dims[1];
  if (n_cols == 0 || n_rows == 0) throw DomainError("alist: zero dimension");
  if (lines.size() != 4 + n_cols + n_rows) {
    throw DomainError("alist: expected " + std::to_string(4 + n_cols + n_rows) +
                      " non-empty lines, found " + std::to_string(lines.size()));
  }
  const auto col_degrees = parse_numbers(lines[2]);
  const auto row_degrees = parse_numbers(lines[3]);
  if (col_degrees.size() != n_cols || row_degrees.size() != n_rows) {
    throw DomainError("alist: degree lines do not match 'N M'");
  }

  CellGrid grid;
  grid.rows = n_rows;
  grid.cols = n_cols;
  grid.cells.assign(n_rows * n_cols, 0);
  for (std::size_t c = 0; c < n_cols; ++c) {
    std::size_t count = 0;
    for (auto row : parse_numbers(lines[4 + c])) {
      if (row == 0) continue;  // zero padding
      if (row > n_rows) throw DomainError("alist: row index out of range");
      grid.cells[(row - 1) * n_cols + c] = 1;
      ++count;
    }
    if (count != col_degrees[c]) throw DomainError("alist: column degree mismatch");
  }
  for (std::size_t r = 0; r < n_rows; ++r) {
    std::size_t count = 0;
    for (auto col : parse_numbers(lines[4 + n_cols + r])) {
      if (col == 0) continue;
      if (col > n_cols || !grid.at(r, col - 1)) {
        throw DomainError("alist: row list disagrees with column list");
      }
      ++count;
    }
    if (count != row_degrees[r]) throw DomainError("alist: row degree mismatch");
  }
  return grid;
}

std::string to_dot(const Btu& btu) {
  const auto mat = to_biadjacency<int>(btu);
  std::ostringstream os;
  os << "graph btu {\n";
  for (Eigen::Index i = 0; i < mat.rows(); ++i) {
    for (Eigen::Index j = 0; j < mat.cols(); ++j) {
      if (mat(i, j) != 0) os << "  l" << (i + 1) << " -- r" << (j + 1) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

Btu parse_btu_file(std::string_view text) {
  const auto lines = split_lines(text);
  bool looks_like_matrix = !lines.empty();
  for (const auto line : lines) {
    std::vector<std::uint64_t> values;
    try {
      values = parse_numbers(line);
    } catch (const DomainError&) {
      looks_like_matrix = false;
      break;
    }
    if (values.size() != lines.size() ||
        std::any_of(values.begin(), values.end(), [](auto v) { return v > 1; })) {
      looks_like_matrix = false;
      break;
    }
  }
  return decompose_cells(looks_like_matrix ? parse_matrix_text(text) : parse_alist(text));
}

nlohmann::json to_json(const Btu& btu) {
  return nlohmann::json{{"m", btu.m()}, {"r", btu.r()}, {"permutations", permutations_json(btu)}};
}

nlohmann::json to_json(const SearchResult& result) {
  nlohmann::json traces = nlohmann::json::array();
  for (const auto& t : result.traces) {
    nlohmann::json trace{
        {"stage", t.stage},
        {"n", t.n},
        {"rotation_j", t.rotation_j ? nlohmann::json(*t.rotation_j) : nlohmann::json()},
        {"candidates_evaluated", t.candidates_evaluated},
        {"best_girth", t.best_girth},
        {"fallback", to_string(t.fallback)},
        {"candidates_feasible", t.candidates_feasible},
    };
    if (t.best_candidate_word) trace["best_candidate_word"] = to_string(t.best_candidate_word->word);
    if (t.final_slot_word) trace["final_slot_word"] = to_string(t.final_slot_word->word);
    if (result.config.mode == SearchMode::exhaustive) trace["comaximal"] = t.comaximal;
    traces.push_back(std::move(trace));
  }
  return nlohmann::json{
      {"m", result.factorization.m},
      {"r", result.factorization.r},
      {"b", result.factorization.b},
      {"k", result.factorization.k},
      {"girth", result.girth},
      {"permutations", permutations_json(result.btu)},
      {"partitions", partitions_json(result.btu)},
      {"traces", std::move(traces)},
      {"mode", to_string(result.config.mode)},
      {"policy", to_string(result.config.policy)},
  };
}

nlohmann::json to_json(const OracleReport& report) {
  return nlohmann::json{
      {"m", report.m},
      {"r", report.r},
      {"max_girth", report.max_girth},
      {"maximizer_count", report.maximizer_count},
      {"enumerated", report.enumerated},
      {"first_slot_fixed", report.first_slot_fixed},
      {"witness", report.witness ? permutations_json(*report.witness) : nlohmann::json()},
      {"witness_partitions",
       report.witness ? partitions_json(*report.witness) : nlohmann::json()},
  };
}

nlohmann::json to_json(const VerifyReport& report) {
  return nlohmann::json{
      {"m", report.m},
      {"r", report.r},
      {"engine_girth", report.engine_girth ? nlohmann::json(*report.engine_girth) : nlohmann::json()},
      {"engine_status", report.engine_status.empty() ? "ok" : report.engine_status},
      {"engine_witness",
       report.engine_witness ? permutations_json(*report.engine_witness) : nlohmann::json()},
      {"oracle_girth", report.oracle.max_girth},
      {"oracle_maximizer_count", report.oracle.maximizer_count},
      {"oracle_enumerated", report.oracle.enumerated},
      {"oracle_witness",
       report.oracle.witness ? permutations_json(*report.oracle.witness) : nlohmann::json()},
      {"equal", report.equal},
  };
}

}  // namespace girthsearch
