#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bcx/choi.hpp"
#include "bcx/matrix.hpp"
#include "bcx/scalar.hpp"

// JSON interchange formats.
//
//   scalar:  {"repr": "idempotent"|"cartesian", "value": [a,b,c,d]}
//   matrix:  {"rows": n, "cols": m, "repr": ..., "entries": [[entry,...],...]}
//            entry = [re l1, im l1, re l2, im l2]   (idempotent)
//                  = [x1, x2, x3, x4]               (cartesian)
//   vector:  a matrix with cols = 1
//   kraus:   {"n": n, "m": m, "operators": [matrix, ...]}
//   map:     {"n": n, "m": m, "unit_images_1": [cimg x n^2],
//                             "unit_images_2": [cimg x n^2]}
//            cimg = m rows of m [re, im] pairs, units row-major in (j,k)
//
// Canonical output repr is idempotent. Doubles are emitted in the shortest
// decimal form that parses back to the same bits, so load -> save -> load
// round trips are bit-identical.

namespace bcx::io {

using json = nlohmann::json;

enum class Repr { Idempotent, Cartesian };

inline const char* repr_name(Repr repr) {
    return repr == Repr::Idempotent ? "idempotent" : "cartesian";
}

inline Repr parse_repr(const json& j) {
    if (!j.is_object() || !j.contains("repr") || !j["repr"].is_string()) {
        throw ParseError("missing or non-string \"repr\" field");
    }
    const std::string name = j["repr"].get<std::string>();
    if (name == "idempotent") return Repr::Idempotent;
    if (name == "cartesian") return Repr::Cartesian;
    throw ParseError("unknown repr \"" + name + "\"");
}

namespace detail {

inline double number_at(const json& arr, std::size_t i, const char* what) {
    if (!arr[i].is_number()) {
        throw ParseError(std::string(what) + " must contain numbers");
    }
    return arr[i].get<double>();
}

inline Bicomplex entry_from_json(const json& el, Repr repr) {
    if (!el.is_array() || el.size() != 4) {
        throw ParseError("each entry must be a length-4 real array");
    }
    const double a = number_at(el, 0, "entry");
    const double b = number_at(el, 1, "entry");
    const double c = number_at(el, 2, "entry");
    const double d = number_at(el, 3, "entry");
    return repr == Repr::Idempotent ? Bicomplex::from_idempotent(cplx(a, b), cplx(c, d))
                                    : Bicomplex::from_cartesian(a, b, c, d);
}

inline json entry_to_json(Bicomplex z, Repr repr) {
    if (repr == Repr::Idempotent) {
        return json::array(
            {z.comp1().real(), z.comp1().imag(), z.comp2().real(), z.comp2().imag()});
    }
    return json::array({z.x1(), z.x2(), z.x3(), z.x4()});
}

inline Eigen::Index index_field(const json& j, const char* name) {
    if (!j.contains(name) || !j[name].is_number_integer()) {
        throw ParseError(std::string("missing or non-integer \"") + name + "\" field");
    }
    const auto v = j[name].get<long long>();
    if (v < 1) throw ParseError(std::string("\"") + name + "\" must be positive");
    return static_cast<Eigen::Index>(v);
}

inline json cmat_to_json(const CMat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline CMat cmat_from_json(const json& j, Eigen::Index rows, Eigen::Index cols,
                           const char* what) {
    if (!j.is_array() || j.size() != static_cast<std::size_t>(rows)) {
        throw ParseError(std::string(what) + ": expected " + std::to_string(rows) + " rows");
    }
    CMat out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
            throw ParseError(std::string(what) + ": row " + std::to_string(i) + " must have " +
                             std::to_string(cols) + " entries");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            const json& el = row[static_cast<std::size_t>(k)];
            if (!el.is_array() || el.size() != 2) {
                throw ParseError(std::string(what) + ": entries must be [re, im] pairs");
            }
            out(i, k) = cplx(number_at(el, 0, what), number_at(el, 1, what));
        }
    }
    return out;
}

} // namespace detail

inline json scalar_to_json(Bicomplex z, Repr repr = Repr::Idempotent) {
    return json{{"repr", repr_name(repr)}, {"value", detail::entry_to_json(z, repr)}};
}

inline Bicomplex scalar_from_json(const json& j) {
    const Repr repr = parse_repr(j);
    if (!j.contains("value")) throw ParseError("missing \"value\" field");
    return detail::entry_from_json(j["value"], repr);
}

inline json matrix_to_json(const Matrix& a, Repr repr = Repr::Idempotent) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            row.push_back(detail::entry_to_json(a(i, j), repr));
        }
        entries.push_back(std::move(row));
    }
    return json{{"rows", a.rows()}, {"cols", a.cols()}, {"repr", repr_name(repr)},
                {"entries", std::move(entries)}};
}

inline Matrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("matrix must be a JSON object");
    const Eigen::Index rows = detail::index_field(j, "rows");
    const Eigen::Index cols = detail::index_field(j, "cols");
    const Repr repr = parse_repr(j);
    if (!j.contains("entries") || !j["entries"].is_array() ||
        j["entries"].size() != static_cast<std::size_t>(rows)) {
        throw ParseError("\"entries\" must be an array of " + std::to_string(rows) + " rows");
    }
    Matrix out = Matrix::zero(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = j["entries"][static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(cols)) {
            throw ParseError("row " + std::to_string(i) + " must have " + std::to_string(cols) +
                             " entries");
        }
        for (Eigen::Index k = 0; k < cols; ++k) {
            out.set(i, k, detail::entry_from_json(row[static_cast<std::size_t>(k)], repr));
        }
    }
    return out;
}

inline json vector_to_json(const Vector& x, Repr repr = Repr::Idempotent) {
    return matrix_to_json(x.as_column(), repr);
}

inline Vector vector_from_json(const json& j) {
    return Vector::from_column(matrix_from_json(j));
}

inline json kraus_to_json(const KrausSet& k) {
    json ops = json::array();
    for (const Matrix& v : k.operators) ops.push_back(matrix_to_json(v));
    return json{{"n", k.n}, {"m", k.m}, {"operators", std::move(ops)}};
}

inline KrausSet kraus_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("Kraus set must be a JSON object");
    const Eigen::Index n = detail::index_field(j, "n");
    const Eigen::Index m = detail::index_field(j, "m");
    if (!j.contains("operators") || !j["operators"].is_array() || j["operators"].empty()) {
        throw ParseError("\"operators\" must be a nonempty array");
    }
    std::vector<Matrix> ops;
    ops.reserve(j["operators"].size());
    for (const json& op : j["operators"]) ops.push_back(matrix_from_json(op));
    try {
        return KrausSet(n, m, std::move(ops));
    } catch (const ShapeMismatch& e) {
        throw ParseError(e.what());
    }
}

inline json map_to_json(const MatrixMap& phi) {
    json images1 = json::array();
    json images2 = json::array();
    for (const CMat& img : phi.images1()) images1.push_back(detail::cmat_to_json(img));
    for (const CMat& img : phi.images2()) images2.push_back(detail::cmat_to_json(img));
    return json{{"n", phi.n()}, {"m", phi.m()}, {"unit_images_1", std::move(images1)},
                {"unit_images_2", std::move(images2)}};
}

inline MatrixMap map_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("matrix map must be a JSON object");
    const Eigen::Index n = detail::index_field(j, "n");
    const Eigen::Index m = detail::index_field(j, "m");
    const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    std::vector<CMat> images[2];
    const char* keys[2] = {"unit_images_1", "unit_images_2"};
    for (int l = 0; l < 2; ++l) {
        if (!j.contains(keys[l]) || !j[keys[l]].is_array() || j[keys[l]].size() != count) {
            throw ParseError(std::string("\"") + keys[l] + "\" must be an array of " +
                             std::to_string(count) + " unit images");
        }
        images[l].reserve(count);
        for (const json& img : j[keys[l]]) {
            images[l].push_back(detail::cmat_from_json(img, m, m, keys[l]));
        }
    }
    return MatrixMap(n, m, std::move(images[0]), std::move(images[1]));
}

// True when the file holds a Kraus set rather than a unit-image map.
inline bool looks_like_kraus(const json& j) {
    return j.is_object() && j.contains("operators");
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IOError("failed writing " + path);
}

inline Matrix load_matrix(const std::string& path) {
    return matrix_from_json(read_json_file(path));
}

} // namespace bcx::io
