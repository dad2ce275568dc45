#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lgtk/matrix_factorization.hpp"
#include "lgtk/poly_io.hpp"
#include "lgtk/residues.hpp"

namespace lgtk {

// A .problem file: one potential, optional volume form and normalization
// overrides, named matrix factorizations (explicit blocks or Koszul data) and
// optional named morphisms for spot checks.
struct ProblemFile {
    std::vector<std::string> variables;
    Polynomial potential;
    VolumeForm vol;
    Normalization norm;
    std::vector<std::pair<std::string, MatrixFactorization>> objects;

    struct NamedMorphism {
        std::string name;
        std::string source;
        std::string target;
        Morphism morphism;
    };
    std::vector<NamedMorphism> morphisms;

    std::size_t object_index(const std::string& name) const {
        for (std::size_t k = 0; k < objects.size(); ++k)
            if (objects[k].first == name) return k;
        throw Error(errc::parse_error, "no object named '" + name + "'");
    }
    const NamedMorphism& morphism(const std::string& name) const {
        for (const auto& m : morphisms)
            if (m.name == name) return m;
        throw Error(errc::parse_error, "no morphism named '" + name + "'");
    }
};

namespace detail {

using problem_json = nlohmann::ordered_json;

inline const problem_json& require_key(const problem_json& j, const char* key,
                                       const std::string& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw Error(errc::parse_error, where + ": missing key '" + key + "'");
    return *it;
}

inline std::string require_string(const problem_json& j, const char* key,
                                  const std::string& where) {
    const auto& v = require_key(j, key, where);
    if (!v.is_string())
        throw Error(errc::parse_error, where + ": '" + key + "' must be a string");
    return v.get<std::string>();
}

inline PolyMatrix parse_poly_matrix(const problem_json& j, const std::vector<std::string>& vars,
                                    const std::string& where) {
    if (!j.is_array())
        throw Error(errc::parse_error, where + ": expected an array of rows");
    std::vector<std::vector<Polynomial>> rows;
    std::size_t width = 0;
    for (const auto& row : j) {
        if (!row.is_array())
            throw Error(errc::parse_error, where + ": each row must be an array of strings");
        std::vector<Polynomial> entries;
        for (const auto& cell : row) {
            if (!cell.is_string())
                throw Error(errc::parse_error, where + ": matrix entries must be strings");
            entries.push_back(parse_polynomial(cell.get<std::string>(), vars));
        }
        if (rows.empty())
            width = entries.size();
        else if (entries.size() != width)
            throw Error(errc::parse_error, where + ": ragged matrix");
        rows.push_back(std::move(entries));
    }
    if (rows.empty() || width == 0)
        throw Error(errc::parse_error, where + ": empty matrix");
    PolyMatrix m(rows.size(), width, static_cast<int>(vars.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < width; ++c) m.at(r, c) = rows[r][c];
    return m;
}

}  // namespace detail

inline ProblemFile parse_problem(const std::string& text) {
    detail::problem_json root;
    try {
        root = detail::problem_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!root.is_object()) throw Error(errc::parse_error, "problem file must be a JSON object");

    ProblemFile pf;
    const auto& jvars = detail::require_key(root, "variables", "problem");
    if (!jvars.is_array() || jvars.empty())
        throw Error(errc::parse_error, "problem: 'variables' must be a non-empty array");
    for (const auto& v : jvars) {
        if (!v.is_string())
            throw Error(errc::parse_error, "problem: variable names must be strings");
        pf.variables.push_back(v.get<std::string>());
    }
    validate_variable_names(pf.variables);

    pf.potential = parse_polynomial(detail::require_string(root, "potential", "problem"),
                                    pf.variables);
    int nv = static_cast<int>(pf.variables.size());
    pf.vol = VolumeForm::unit(nv);
    if (root.contains("volume_phi"))
        pf.vol.phi = parse_polynomial(detail::require_string(root, "volume_phi", "problem"),
                                      pf.variables);

    if (root.contains("normalization")) {
        const auto& jn = root["normalization"];
        if (!jn.is_object())
            throw Error(errc::parse_error, "problem: 'normalization' must be an object");
        if (jn.contains("A"))
            pf.norm.bulk_constant = parse_coefficient(detail::require_string(jn, "A", "normalization"));
        if (jn.contains("c_e"))
            pf.norm.c_e = parse_coefficient(detail::require_string(jn, "c_e", "normalization"));
        if (jn.contains("c_f"))
            pf.norm.c_f = parse_coefficient(detail::require_string(jn, "c_f", "normalization"));
    }

    const auto& jobjs = detail::require_key(root, "objects", "problem");
    if (!jobjs.is_array())
        throw Error(errc::parse_error, "problem: 'objects' must be an array");
    for (const auto& jo : jobjs) {
        if (!jo.is_object())
            throw Error(errc::parse_error, "problem: each object must be a JSON object");
        std::string name = detail::require_string(jo, "name", "object");
        for (const auto& [existing, mf] : pf.objects)
            if (existing == name)
                throw Error(errc::parse_error, "duplicate object name '" + name + "'");
        std::string where = "object '" + name + "'";
        MatrixFactorization mf;
        if (jo.contains("koszul")) {
            const auto& jk = jo["koszul"];
            const auto& ju = detail::require_key(jk, "u", where);
            const auto& jv = detail::require_key(jk, "v", where);
            if (!ju.is_array() || !jv.is_array() || ju.size() != jv.size() || ju.empty())
                throw Error(errc::parse_error,
                            where + ": koszul u and v must be non-empty arrays of equal length");
            std::vector<Polynomial> us, vs;
            for (const auto& s : ju) {
                if (!s.is_string())
                    throw Error(errc::parse_error, where + ": koszul entries must be strings");
                us.push_back(parse_polynomial(s.get<std::string>(), pf.variables));
            }
            for (const auto& s : jv) {
                if (!s.is_string())
                    throw Error(errc::parse_error, where + ": koszul entries must be strings");
                vs.push_back(parse_polynomial(s.get<std::string>(), pf.variables));
            }
            mf = koszul_factorization(us, vs);
            if (mf.potential != pf.potential)
                throw Error(errc::not_a_factorization,
                            where + ": koszul data factors sum(u_k v_k) != potential");
        } else {
            PolyMatrix u = detail::parse_poly_matrix(detail::require_key(jo, "u", where),
                                                     pf.variables, where + " u");
            PolyMatrix v = detail::parse_poly_matrix(detail::require_key(jo, "v", where),
                                                     pf.variables, where + " v");
            if (u.rows() != v.cols() || u.cols() != v.rows())
                throw Error(errc::shape_mismatch,
                            where + ": u is " + std::to_string(u.rows()) + "x" +
                                std::to_string(u.cols()) + " but v is " +
                                std::to_string(v.rows()) + "x" + std::to_string(v.cols()));
            mf = make_factorization(pf.potential, u, v);
        }
        pf.objects.emplace_back(name, std::move(mf));
    }

    if (root.contains("morphisms")) {
        const auto& jms = root["morphisms"];
        if (!jms.is_array())
            throw Error(errc::parse_error, "problem: 'morphisms' must be an array");
        for (const auto& jm : jms) {
            if (!jm.is_object())
                throw Error(errc::parse_error, "problem: each morphism must be a JSON object");
            std::string name = detail::require_string(jm, "name", "morphism");
            std::string where = "morphism '" + name + "'";
            std::string src = detail::require_string(jm, "source", where);
            std::string dst = detail::require_string(jm, "target", where);
            std::string parity = detail::require_string(jm, "parity", where);
            const MatrixFactorization& a = pf.objects[pf.object_index(src)].second;
            const MatrixFactorization& b = pf.objects[pf.object_index(dst)].second;
            SuperMatrix mat = SuperMatrix::zero(b.rank, a.rank, nv);
            if (parity == "even") {
                mat = SuperMatrix::even_map(
                    b.rank, a.rank,
                    detail::parse_poly_matrix(detail::require_key(jm, "ee", where), pf.variables,
                                              where + " ee"),
                    detail::parse_poly_matrix(detail::require_key(jm, "oo", where), pf.variables,
                                              where + " oo"));
            } else if (parity == "odd") {
                mat = SuperMatrix::odd_map(
                    b.rank, a.rank,
                    detail::parse_poly_matrix(detail::require_key(jm, "eo", where), pf.variables,
                                              where + " eo"),
                    detail::parse_poly_matrix(detail::require_key(jm, "oe", where), pf.variables,
                                              where + " oe"));
            } else {
                throw Error(errc::parse_error, where + ": parity must be \"even\" or \"odd\"");
            }
            pf.morphisms.push_back({name, src, dst, make_morphism(a, b, mat)});
        }
    }
    return pf;
}

inline ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

}  // namespace lgtk
