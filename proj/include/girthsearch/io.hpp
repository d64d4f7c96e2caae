#pragma once

// Text serializations of a BTU: dense 0/1 matrix, alist (LDPC interchange),
// Graphviz DOT, and JSON reports.

#include <string>
#include <string_view>

#include "girthsearch/btu.hpp"
#include "girthsearch/engine.hpp"
#include "girthsearch/oracle.hpp"
#include "json.hpp"

namespace girthsearch {

/// m lines of m space-separated 0/1 digits.
std::string to_matrix_text(const Btu& btu);
CellGrid parse_matrix_text(std::string_view text);

/// Columns are the N=m variable nodes, rows the M=m checks. Index lists are
/// 1-based and ascending.
std::string to_alist(const Btu& btu);
CellGrid parse_alist(std::string_view text);

/// Undirected bipartite graph, nodes l1..lm and r1..rm, edges row-major.
std::string to_dot(const Btu& btu);

/// Matrix text if every line has as many 0/1 tokens as there are lines,
/// alist otherwise.
Btu parse_btu_file(std::string_view text);

nlohmann::json to_json(const Btu& btu);
nlohmann::json to_json(const SearchResult& result);
nlohmann::json to_json(const OracleReport& report);
nlohmann::json to_json(const VerifyReport& report);

}  // namespace girthsearch
