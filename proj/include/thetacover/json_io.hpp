#pragma once

#include <json.hpp>

#include <limits>
#include <string>

#include "thetacover/certificate.hpp"
#include "thetacover/ideal.hpp"
#include "thetacover/moment.hpp"
#include "thetacover/polynomial.hpp"
#include "thetacover/solve.hpp"

namespace thetacover {

using nlohmann::json;

namespace detail {

inline json bigint_to_json(const BigInt& v) {
    static const BigInt lo(std::numeric_limits<long long>::min());
    static const BigInt hi(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return v.convert_to<long long>();
    return v.str();
}

inline BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw std::invalid_argument("expected integer or integer string");
}

}

/// Term encoding: [support, num, den] with support an ascending index array.
inline json polynomial_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [support, c] : p.terms()) {
        json term = json::array();
        term.push_back(json(support));
        term.push_back(detail::bigint_to_json(numerator(c)));
        term.push_back(detail::bigint_to_json(denominator(c)));
        terms.push_back(std::move(term));
    }
    return terms;
}

inline Polynomial polynomial_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial: expected an array of terms");
    Polynomial p;
    for (const json& term : j) {
        if (!term.is_array() || term.size() != 3)
            throw std::invalid_argument("polynomial term: expected [support, num, den]");
        VarSubset support = term[0].get<VarSubset>();
        if (!is_canonical(support))
            throw std::invalid_argument("polynomial term: support not strictly increasing");
        BigInt num = detail::bigint_from_json(term[1]);
        BigInt den = detail::bigint_from_json(term[2]);
        if (den == 0) throw std::invalid_argument("polynomial term: zero denominator");
        p.add_term(support, Rational(num, den));
    }
    return p;
}

inline json certificate_to_json(const Certificate& c) {
    json out;
    out["degree_bound"] = c.degree_bound;
    out["target"] = polynomial_to_json(c.target);
    json squares = json::array();
    for (const Polynomial& g : c.squares) squares.push_back(polynomial_to_json(g));
    out["squares"] = std::move(squares);
    return out;
}

inline Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.degree_bound = j.at("degree_bound").get<int>();
    c.target = polynomial_from_json(j.at("target"));
    for (const json& g : j.at("squares")) c.squares.push_back(polynomial_from_json(g));
    return c;
}

inline json verdict_to_json(const Verdict& v) {
    json out;
    out["accepted"] = v.accepted;
    out["failure"] = to_string(v.failure);
    out["target_affine"] = v.target_affine;
    if (v.failure == VerifyFailure::degree_bound_exceeded) out["offending_square"] = v.offending_square;
    if (v.failure == VerifyFailure::nonzero_remainder) {
        out["remainder"] = polynomial_to_json(v.remainder);
        out["remainder_pretty"] = v.remainder.str();
    }
    return out;
}

inline json sdp_result_to_json(const SdpResult& r) {
    json out;
    out["status"] = to_string(r.status);
    out["value"] = r.value;
    out["projected_x"] = r.projected_x;
    out["min_eigenvalue"] = r.min_eigenvalue;
    out["gap"] = r.duality_gap_estimate;
    out["iterations"] = r.iterations;
    out["y"] = r.y;
    return out;
}

inline json lp_result_to_json(const LpResult& r) {
    json out;
    out["status"] = to_string(r.status);
    out["value"] = r.value;
    out["x"] = r.x;
    out["gap"] = r.gap_estimate;
    out["iterations"] = r.iterations;
    return out;
}

inline json variety_to_json(const VarietyTable& table, int i, int num_vars) {
    json out;
    out["i"] = i;
    out["bound"] = table.bound();
    out["num_vars"] = num_vars;
    out["count"] = table.size();
    out["elements"] = json(table.elements());
    return out;
}

/// Entry table with structural zeros as null; elements list the V_{2k} sets.
inline json moment_to_json(const MomentMatrixSpec& spec) {
    json out;
    out["dim"] = spec.dim;
    out["k"] = spec.k;
    out["elements"] = json(spec.vars.elements());
    json entries = json::array();
    for (const auto& row : spec.entries) {
        json r = json::array();
        for (int e : row) {
            if (e == MomentMatrixSpec::structural_zero)
                r.push_back(nullptr);
            else
                r.push_back(e);
        }
        entries.push_back(std::move(r));
    }
    out["entries"] = std::move(entries);
    return out;
}

/// Paper-style symbolic rendering: y_i tokens and 0 literals.
inline std::string moment_symbolic_dump(const MomentMatrixSpec& spec) {
    std::string out;
    for (const auto& row : spec.entries) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) out += ' ';
            if (row[c] == MomentMatrixSpec::structural_zero)
                out += '0';
            else
                out += "y" + std::to_string(row[c]);
        }
        out += '\n';
    }
    return out;
}

}
