#pragma once

// Structure-constant JSON:
//   {"dim": n, "basis": ["1","j",...], "unit": 0, "table": [[["p/q",...],...],...]}
// table[i][j][k] = c_ijk as a reduced fraction string; plain integers are
// accepted too. Emission always uses reduced fraction strings.

#include <string>
#include <vector>

#include <json.hpp>

#include "algkit/algebra.hpp"
#include "algkit/error.hpp"
#include "algkit/linalg.hpp"
#include "algkit/rational.hpp"

namespace algkit {

inline Rat rational_from_json(const nlohmann::json& v) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    throw Error("expected a rational as a fraction string or integer");
}

inline nlohmann::json algebra_to_json(const Algebra& a) {
    nlohmann::json j;
    j["dim"] = a.dim();
    j["basis"] = a.labels();
    j["unit"] = a.unit_index();
    nlohmann::json table = nlohmann::json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t jj = 0; jj < a.dim(); ++jj) {
            nlohmann::json cell = nlohmann::json::array();
            for (std::size_t k = 0; k < a.dim(); ++k) cell.push_back(to_string(a.c(i, jj, k)));
            row.push_back(std::move(cell));
        }
        table.push_back(std::move(row));
    }
    j["table"] = std::move(table);
    return j;
}

inline AlgebraPtr algebra_from_json(const nlohmann::json& j) {
    if (!j.contains("dim") || !j.contains("basis") || !j.contains("unit") || !j.contains("table"))
        throw Error("algebra JSON needs keys dim, basis, unit, table");
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> labels = j.at("basis").get<std::vector<std::string>>();
    std::size_t unit = j.at("unit").get<std::size_t>();
    const nlohmann::json& table = j.at("table");
    if (table.size() != dim) throw DimensionMismatch("table has wrong outer size");
    std::vector<Rat> flat;
    flat.reserve(dim * dim * dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (table[i].size() != dim) throw DimensionMismatch("table row has wrong size");
        for (std::size_t jj = 0; jj < dim; ++jj) {
            if (table[i][jj].size() != dim) throw DimensionMismatch("table cell has wrong size");
            for (std::size_t k = 0; k < dim; ++k) flat.push_back(rational_from_json(table[i][jj][k]));
        }
    }
    return make_algebra(dim, std::move(labels), unit, std::move(flat));
}

inline nlohmann::json matrix_to_json(const QMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline QMatrix matrix_from_json(const nlohmann::json& j) {
    std::vector<QVec> rows;
    for (const auto& jr : j) {
        QVec row;
        for (const auto& v : jr) row.push_back(rational_from_json(v));
        rows.push_back(std::move(row));
    }
    return QMatrix::from_rows(rows);
}

}  // namespace algkit
