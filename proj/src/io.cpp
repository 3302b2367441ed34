#include "bidiag/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bidiag {

namespace {

using nlohmann::json;

json scalar_to_json(double x) { return json(x); }
json scalar_to_json(const ExactScalar& x) { return json(to_fraction_string(x)); }

double scalar_from_json_double(const json& j) {
    if (j.is_string()) return to_double(ExactScalar(j.get<std::string>()));
    return j.get<double>();
}

Orientation orientation_from_string(const std::string& s) {
    if (s == "upper") return Orientation::Upper;
    if (s == "lower") return Orientation::Lower;
    throw std::invalid_argument("factor file: orientation must be \"upper\" or \"lower\"");
}

template <typename T, typename Reader>
std::vector<T> array_from_json(const json& j, Reader read) {
    if (!j.is_array()) throw std::invalid_argument("factor file: expected an array of values");
    std::vector<T> v;
    v.reserve(j.size());
    for (const auto& e : j) v.push_back(read(e));
    return v;
}

template <typename T>
json chain_to_json_impl(const FactorChain<T>& c) {
    validate(c);
    json factors = json::array();
    for (const auto& f : c.factors) {
        json diag = json::array(), off = json::array();
        for (const T& x : f.matrix.diag) diag.push_back(scalar_to_json(x));
        for (const T& x : f.matrix.off) off.push_back(scalar_to_json(x));
        factors.push_back(json{
            {"orientation", f.matrix.orientation == Orientation::Upper ? "upper" : "lower"},
            {"diag", std::move(diag)},
            {"off", std::move(off)},
            {"inverted", f.inverted}});
    }
    json out{{"n", c.n}, {"factors", std::move(factors)}};
    if (c.scale) {
        json d = json::array();
        for (const T& x : c.scale->diag) d.push_back(scalar_to_json(x));
        out["scale"] = json{{"position", c.scale->position}, {"diag", std::move(d)}};
    }
    return out;
}

template <typename T, typename Reader>
FactorChain<T> chain_from_json_impl(const json& j, Reader read) {
    if (!j.is_object() || !j.contains("n") || !j.contains("factors"))
        throw std::invalid_argument("factor file: need an object with \"n\" and \"factors\"");
    FactorChain<T> c;
    c.n = j.at("n").get<std::size_t>();
    for (const auto& entry : j.at("factors")) {
        Bidiagonal<T> b(orientation_from_string(entry.at("orientation").get<std::string>()),
                        array_from_json<T>(entry.at("diag"), read),
                        array_from_json<T>(entry.at("off"), read));
        bool inverted = entry.value("inverted", false);
        c.factors.push_back(ChainFactor<T>{std::move(b), inverted});
    }
    if (j.contains("scale")) {
        const auto& s = j.at("scale");
        c.scale = DiagonalScale<T>{s.at("position").get<std::size_t>(),
                                   array_from_json<T>(s.at("diag"), read)};
    }
    validate(c);
    return c;
}

template <typename T, typename Reader>
Matrix<T> matrix_from_json_impl(const json& j, Reader read) {
    if (!j.is_array() || j.empty() || !j.front().is_array())
        throw std::invalid_argument("matrix file: expected an array of row arrays");
    const std::size_t rows = j.size(), cols = j.front().size();
    Matrix<T> a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const auto& row = j.at(i);
        if (!row.is_array() || row.size() != cols)
            throw std::invalid_argument("matrix file: ragged rows");
        for (std::size_t k = 0; k < cols; ++k) a(i, k) = read(row.at(k));
    }
    return a;
}

} // namespace

json chain_to_json(const FactorChain<double>& c) { return chain_to_json_impl(c); }
json chain_to_json(const FactorChain<ExactScalar>& c) { return chain_to_json_impl(c); }

FactorChain<double> chain_from_json(const json& j) {
    return chain_from_json_impl<double>(j, scalar_from_json_double);
}

FactorChain<ExactScalar> exact_chain_from_json(const json& j) {
    return chain_from_json_impl<ExactScalar>(j, exact_from_json_value);
}

json tn_to_json(const TNFactorization<double>& f) {
    json rows = json::array();
    for (std::size_t i = 0; i < f.n(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < f.n(); ++k) row.push_back(f.params(i, k));
        rows.push_back(std::move(row));
    }
    return json{{"n", f.n()}, {"params", std::move(rows)}};
}

TNFactorization<double> tn_from_json(const json& j) {
    if (!j.is_object() || !j.contains("params"))
        throw std::invalid_argument("tn file: need an object with \"params\"");
    Matrix<double> p = matrix_from_json_impl<double>(j.at("params"), scalar_from_json_double);
    if (j.contains("n") && j.at("n").get<std::size_t>() != p.rows())
        throw std::invalid_argument("tn file: \"n\" disagrees with params shape");
    return TNFactorization<double>(std::move(p));
}

json matrix_to_json(const Matrix<double>& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(a(i, k));
        rows.push_back(std::move(row));
    }
    return rows;
}

json matrix_to_json(const ExactMatrix& a) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < a.cols(); ++k) row.push_back(to_fraction_string(a(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix<double> matrix_from_json(const json& j) {
    return matrix_from_json_impl<double>(j, scalar_from_json_double);
}

ExactMatrix exact_matrix_from_json(const json& j) {
    return matrix_from_json_impl<ExactScalar>(j, exact_from_json_value);
}

json vector_to_json(const std::vector<double>& v) {
    json a = json::array();
    for (double x : v) a.push_back(x);
    return a;
}

std::vector<double> vector_from_json(const json& j) {
    return array_from_json<double>(j, scalar_from_json_double);
}

std::string matrix_to_csv(const Matrix<double>& a) {
    std::string out;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (k) out += ',';
            out += json(a(i, k)).dump();
        }
        out += '\n';
    }
    return out;
}

ExactScalar exact_from_json_value(const json& j) {
    if (j.is_string()) return ExactScalar(j.get<std::string>());
    // unsigned first: is_number_integer() is true for unsigned values too,
    // and get<long long> would wrap anything above 2^63 - 1
    if (j.is_number_unsigned()) return ExactScalar(j.get<unsigned long long>());
    if (j.is_number_integer()) return ExactScalar(j.get<long long>());
    if (j.is_number_float()) return to_exact(j.get<double>());
    throw std::invalid_argument("exact value: expected a number or a \"p/q\" string");
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return json::parse(in); // throws with byte position on malformed input
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open file for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::vector<double> load_rhs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '[')
        return vector_from_json(json::parse(text));
    std::vector<double> v;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::size_t at = line.find_first_not_of(" \t\r");
        if (at == std::string::npos) continue;
        v.push_back(std::stod(line));
    }
    if (v.empty()) throw std::invalid_argument("rhs file is empty: " + path);
    return v;
}

} // namespace bidiag
