#ifndef BIDIAG_IO_HPP
#define BIDIAG_IO_HPP

// File formats. A factor file is a JSON object
//   {"n": 4, "factors": [ ... ]}
// whose entries are either bidiagonal factors
//   {"type": "bidiagonal", "orientation": "upper", "diag": [...], "off": [...],
//    "inverted": false}
// or (at most once) a positive diagonal scale {"type": "diagonal", "diag": [...]}.
// Dense matrices are arrays of row arrays. Exact values travel as "p/q"
// strings; plain JSON numbers are read exactly (every double is rational).

#include <string>
#include <vector>

#include <json.hpp>

#include "bidiag/chain.hpp"
#include "bidiag/condnum.hpp"
#include "bidiag/matrix.hpp"
#include "bidiag/rational.hpp"

namespace bidiag {

nlohmann::json chain_to_json(const FactorChain<double>& c);
nlohmann::json chain_to_json(const FactorChain<ExactScalar>& c);
FactorChain<double> chain_from_json(const nlohmann::json& j);
FactorChain<ExactScalar> exact_chain_from_json(const nlohmann::json& j);

nlohmann::json tn_to_json(const TNFactorization<double>& f);
TNFactorization<double> tn_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const Matrix<double>& a);
nlohmann::json matrix_to_json(const ExactMatrix& a);
Matrix<double> matrix_from_json(const nlohmann::json& j);
ExactMatrix exact_matrix_from_json(const nlohmann::json& j);

nlohmann::json vector_to_json(const std::vector<double>& v);
std::vector<double> vector_from_json(const nlohmann::json& j);

// Comma-separated rows, one line per row, shortest round-trip numbers.
std::string matrix_to_csv(const Matrix<double>& a);

// One JSON value from a scalar cell: accepts numbers (read exactly) and
// "p/q" strings.
ExactScalar exact_from_json_value(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Right-hand sides: a JSON array file or plain text, one value per line.
std::vector<double> load_rhs_file(const std::string& path);

} // namespace bidiag

#endif
