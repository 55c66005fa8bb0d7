#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fock/operators.hpp"

namespace fock {

// Stable names used in serialized artifacts.
std::string provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

// Shortest decimal string that parses back to exactly the same double; the
// formatting every CSV artifact uses.
std::string format_double(double v);

// CSV with header "row,col,re,im", one line per entry in row-major order.
// Doubles are printed with shortest round-trip formatting, so write followed
// by read reproduces every entry bit for bit.
void write_matrix_csv(const TruncatedOperator& op, std::ostream& os);

// Reads entries written by write_matrix_csv (any row order is accepted; the
// matrix size is the smallest square holding every index).  Only the entry
// grid comes back — CSV does not carry the section metadata.
Eigen::MatrixXcd read_matrix_csv(std::istream& is);

// Full JSON envelope: section parameters, provenance, and the entry grid.
// Doubles survive the round trip bit for bit.
nlohmann::json operator_to_json(const TruncatedOperator& op);
TruncatedOperator operator_from_json(const nlohmann::json& j);

// Convenience file wrappers.
void save_matrix_csv(const TruncatedOperator& op, const std::string& path);
void save_operator_json(const TruncatedOperator& op, const std::string& path);
TruncatedOperator load_operator_json(const std::string& path);

}  // namespace fock
