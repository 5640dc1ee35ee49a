#pragma once

#include <json.hpp>

#include <istream>
#include <string>
#include <utility>
#include <variant>

#include "rb/classify.hpp"
#include "rb/enumerate.hpp"
#include "rb/rb_check.hpp"

namespace rb::io {

using nlohmann::json;

/// Parses a stream, turning syntax errors into ParseError with the source
/// name and nlohmann's line/column diagnostic.
inline json load_json(std::istream& in, const std::string& source) {
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(source + ": " + e.what());
    }
}

// ---- scalars -------------------------------------------------------------

inline json scalar_to_json(const RationalField&, const Rat& x) {
    if (x.is_integer() && x.num().fits_slong_p())
        return json(x.num().get_si());
    return json(x.to_string());
}

inline json scalar_to_json(const PrimeField& f, const Fp& x) {
    return json(f.canon(x).residue());
}

template <typename Field>
typename Field::Scalar scalar_from_json(const Field& f, const json& j, const std::string& where) {
    try {
        if (j.is_number_integer())
            return f.from_int(static_cast<long>(j.get<std::int64_t>()));
        if (j.is_number_unsigned()) {
            const auto v = j.get<std::uint64_t>();
            if (v > static_cast<std::uint64_t>(INT64_MAX))
                return f.parse(std::to_string(v));
            return f.from_int(static_cast<long>(v));
        }
        if (j.is_string())
            return f.parse(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    } catch (const DivisionByZeroError& e) {
        throw ParseError(where + ": " + e.what());
    }
    if (j.is_number_float())
        throw ParseError(where + ": floating-point numbers are not exact scalars; use \"a/b\"");
    throw ParseError(where + ": expected an integer or a scalar string");
}

// ---- fields ----------------------------------------------------------------

inline json field_to_json(const FieldSpec& f) {
    if (std::holds_alternative<RationalField>(f))
        return json("rational");
    return json{{"prime", std::get<PrimeField>(f).modulus()}};
}

inline FieldSpec field_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "rational")
            return RationalField{};
        throw ParseError("field: unknown field \"" + j.get<std::string>() + "\" (expected \"rational\" or {\"prime\": p})");
    }
    if (j.is_object() && j.contains("prime")) {
        const json& p = j.at("prime");
        if (!p.is_number_integer() && !p.is_number_unsigned())
            throw ParseError("field.prime: expected an integer");
        const auto v = p.get<std::int64_t>();
        if (v < 2)
            throw ParseError("field.prime: expected a prime >= 3, got " + std::to_string(v));
        try {
            return PrimeField(static_cast<std::uint64_t>(v));
        } catch (const InvalidDataError& e) {
            throw ParseError(std::string("field.prime: ") + e.what());
        }
    }
    throw ParseError("field: expected \"rational\" or {\"prime\": p}");
}

// ---- matrices and vectors --------------------------------------------------

template <typename Field>
json matrix_to_json(const Field& f, const Matrix<typename Field::Scalar>& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(scalar_to_json(f, m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <typename Field>
json vector_to_json(const Field& f, const Vector<typename Field::Scalar>& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        out.push_back(scalar_to_json(f, v(i)));
    return out;
}

template <typename Field>
Matrix<typename Field::Scalar> matrix_from_json(const Field& f, const json& j, Eigen::Index rows,
                                                Eigen::Index cols, const std::string& where) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != rows)
        throw ParseError(where + ": expected " + std::to_string(rows) + " rows, got " +
                         (j.is_array() ? std::to_string(j.size()) : "non-array"));
    Matrix<typename Field::Scalar> m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw ParseError(where + "[" + std::to_string(i) + "]: expected " + std::to_string(cols) +
                             " entries, got " + (row.is_array() ? std::to_string(row.size()) : "non-array"));
        for (Eigen::Index c = 0; c < cols; ++c)
            m(i, c) = scalar_from_json(f, row[static_cast<std::size_t>(c)],
                                       where + "[" + std::to_string(i) + "][" + std::to_string(c) + "]");
    }
    return m;
}

template <typename Field>
Vector<typename Field::Scalar> vector_from_json(const Field& f, const json& j, Eigen::Index size,
                                                const std::string& where) {
    if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != size)
        throw ParseError(where + ": expected " + std::to_string(size) + " entries");
    Vector<typename Field::Scalar> v(size);
    for (Eigen::Index i = 0; i < size; ++i)
        v(i) = scalar_from_json(f, j[static_cast<std::size_t>(i)], where + "[" + std::to_string(i) + "]");
    return v;
}

// ---- operators ---------------------------------------------------------------

template <typename Field>
json operator_to_json(const LinearOperator<Field>& P) {
    return json{{"field", field_to_json(FieldSpec(P.spec.field))},
                {"n", P.spec.n},
                {"matrix", matrix_to_json(P.spec.field, P.matrix)}};
}

using AnyOperator = std::variant<LinearOperator<RationalField>, LinearOperator<PrimeField>>;

/// Parses { "field": ..., "n": ..., "matrix": [[...], ...] }. Unknown keys
/// are ignored so generator output (which carries "data") round-trips.
inline AnyOperator operator_from_json(const json& j) {
    if (!j.is_object())
        throw ParseError("operator: expected a JSON object");
    for (const char* key : {"field", "n", "matrix"})
        if (!j.contains(key))
            throw ParseError(std::string("operator: missing required key \"") + key + "\"");

    const FieldSpec field = field_from_json(j.at("field"));
    const json& jn = j.at("n");
    if (!jn.is_number_integer() && !jn.is_number_unsigned())
        throw ParseError("n: expected a positive integer");
    const auto n = jn.get<std::int64_t>();
    if (n < 1)
        throw ParseError("n: must be >= 1, got " + std::to_string(n));
    if (n > 4096)
        throw ParseError("n: unreasonably large (" + std::to_string(n) + ")");

    return std::visit(
        [&](const auto& f) -> AnyOperator {
            using F = std::decay_t<decltype(f)>;
            const AlgebraSpec<F> spec(f, static_cast<Eigen::Index>(n));
            auto m = matrix_from_json(f, j.at("matrix"), spec.dim(), spec.dim(), "matrix");
            return LinearOperator<F>(spec, std::move(m));
        },
        field);
}

// ---- elements, witnesses, reports ---------------------------------------------

template <typename Field>
json element_to_json(const Field& f, const TruncElement<typename Field::Scalar>& x) {
    return json{{"scalar", scalar_to_json(f, x.scalar)}, {"vec", vector_to_json(f, x.vec)}};
}

template <typename Field>
json witness_to_json(const Field& f, const RBWitness<typename Field::Scalar>& w) {
    return json{{"pair", json::array({w.i, w.j})},
                {"lhs", element_to_json(f, w.lhs)},
                {"rhs", element_to_json(f, w.rhs)}};
}

template <typename Field>
json data_to_json(const Field& f, const Weight0Data<typename Field::Scalar>& d) {
    return json{{"kind", "weight0"}, {"v0", vector_to_json(f, d.v0)}, {"L", matrix_to_json(f, d.L)}};
}

template <typename Field>
json data_to_json(const Field& f, const Weight1Data<typename Field::Scalar>& d) {
    return json{{"kind", "weight1"}, {"alpha", scalar_to_json(f, d.alpha)}, {"Q", matrix_to_json(f, d.Q)}};
}

template <typename Field, typename Data>
json classification_report_json(const Field& f, const typename Field::Scalar& weight,
                                const ClassifyResult<Data>& r) {
    json out{{"weight", scalar_to_json(f, weight)},
             {"verdict", r.is_rb() ? "rb" : "not-rb"},
             {"reason", nullptr},
             {"data", nullptr}};
    if (r.is_rb())
        out["data"] = data_to_json(f, *r.data);
    else
        out["reason"] = reason_code(*r.reason);
    return out;
}

template <typename Field>
json check_report_json(const Field& f, const typename Field::Scalar& weight,
                       const RBCheckResult<typename Field::Scalar>& r) {
    json out{{"weight", scalar_to_json(f, weight)},
             {"verdict", r.holds() ? "rb" : "not-rb"},
             {"witness", nullptr}};
    if (!r.holds())
        out["witness"] = witness_to_json(f, *r.witness);
    return out;
}

inline json enumeration_report_json(const EnumerationReport& r, bool include_mismatches = true) {
    json out{{"prime", r.field.modulus()},
             {"n", r.n},
             {"weight", scalar_to_json(r.field, r.weight)},
             {"total", r.total},
             {"rb_count", r.rb_count},
             {"classified_count", r.classified_count},
             {"mismatches", json::array()}};
    if (include_mismatches)
        for (const auto& mm : r.mismatches)
            out["mismatches"].push_back(json{{"index", mm.index},
                                             {"matrix", matrix_to_json(r.field, mm.matrix)},
                                             {"rb_check", mm.identity_holds},
                                             {"classified", mm.classified_rb}});
    else
        out["mismatch_count"] = r.mismatch_count;
    return out;
}

} // namespace rb::io
