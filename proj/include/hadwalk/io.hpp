#pragma once

#include <json.hpp>

#include <sstream>
#include <string>

#include "hadwalk/moments.hpp"
#include "hadwalk/pascal.hpp"
#include "hadwalk/symmetry.hpp"

namespace hadwalk {

using nlohmann::json;

inline std::string rat_str(const BigRational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

// Probabilities: exact rationals as lossless "num/den" strings, floats as
// plain JSON numbers (serialized with round-trip precision).
inline json prob_json(const BigRational& p) { return rat_str(p); }
inline json prob_json(double p) { return p; }

template <class S>
json to_json(const Distribution<S>& d) {
    json sites = json::array();
    for (const auto& row : d.sites) {
        sites.push_back({{"k", row.k},
                         {"pL", prob_json(row.pL)},
                         {"pR", prob_json(row.pR)},
                         {"p", prob_json(row.p)}});
    }
    return {{"n", d.time},
            {"backend", ScalarTraits<S>::name},
            {"sites", std::move(sites)}};
}

template <class S>
std::string to_csv(const Distribution<S>& d) {
    std::ostringstream os;
    os << "k,p\n";
    for (const auto& row : d.sites) {
        os << row.k << ',';
        if constexpr (ScalarTraits<S>::exact)
            os << rat_str(row.p);
        else
            os << row.p;
        os << '\n';
    }
    return os.str();
}

template <class S>
json to_json(const XiDecomposition<S>& d, const Mat2<S>& matrix) {
    auto scalar_str = [](const S& z) {
        if constexpr (ScalarTraits<S>::exact) {
            return z.to_string();
        } else {
            std::ostringstream os;
            os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
            return os.str();
        }
    };
    return {{"l", d.l},
            {"m", d.m},
            {"p", scalar_str(d.p)},
            {"q", scalar_str(d.q)},
            {"r", scalar_str(d.r)},
            {"s", scalar_str(d.s)},
            {"matrix",
             json::array({json::array({scalar_str(matrix.a), scalar_str(matrix.b)}),
                          json::array({scalar_str(matrix.c), scalar_str(matrix.d)})})}};
}

inline json to_json(const std::string& phi_text, const ClassLabel& label) {
    return {{"phi", phi_text},
            {"in_perp", label.in_perp},
            {"symmetric", label.symmetric_to_horizon},
            {"zero_mean", label.zero_mean_to_horizon},
            {"horizon", label.horizon},
            {"first_violation_n", label.first_violation_n}};
}

inline json to_json(const LinearForm& f) {
    return {{"n", f.n}, {"a", rat_str(f.a)}, {"b", rat_str(f.b)}};
}

inline json to_json(const LimitMoment& m, double quadrature) {
    return {{"m", m.order},
            {"exact", {{"r0", rat_str(m.value.r0)}, {"r1", rat_str(m.value.r1)}}},
            {"float", m.to_double()},
            {"quadrature", quadrature}};
}

inline json to_json(const ConjectureRow& row) {
    return {{"n", row.n},
            {"a_n", rat_str(row.a_n)},
            {"b_next", rat_str(row.b_next)},
            {"holds", row.holds}};
}

} // namespace hadwalk
