#pragma once

// JSON views of ring tables, enumerators and search results, for golden tests
// and downstream tooling.

#include <json.hpp>

#include "qsdna/dna.hpp"
#include "qsdna/enumerators.hpp"
#include "qsdna/ring.hpp"

namespace qsdna {

inline nlohmann::json ring_to_json(const Ring4& r) {
    nlohmann::json j;
    j["name"] = std::string(1, r.name);
    j["characteristic"] = r.characteristic;
    auto table = [&](const std::array<std::array<Elem, 4>, 4>& t) {
        nlohmann::json rows = nlohmann::json::array();
        for (int x = 0; x < 4; ++x) {
            nlohmann::json row = nlohmann::json::array();
            for (int y = 0; y < 4; ++y) row.push_back(r.elem_name(t[x][y]));
            rows.push_back(row);
        }
        return rows;
    };
    j["add"] = table(r.add);
    j["mul"] = table(r.mul);
    j["alpha"] = r.elem_name(r.complement_alpha);
    if (r.gc_beta) {
        j["beta"] = r.elem_name(*r.gc_beta);
        j["beta_side"] = r.gc_beta_right ? "right" : "left";
    } else {
        j["beta"] = nullptr;
    }
    return j;
}

inline nlohmann::json enumerator_to_json(const WeightEnumerator& we) {
    nlohmann::json j;
    j["arity"] = we.arity;
    j["n"] = we.n;
    nlohmann::json coeff = nlohmann::json::object();
    for (const auto& [e, c] : we.coeff) coeff[exponents_key(we, e)] = c;
    j["coefficients"] = coeff;
    return j;
}

inline nlohmann::json rc_profile_to_json(const RcProfile& p) {
    nlohmann::json j;
    j["m"] = p.m;
    j["d_rc"] = p.d_rc;
    j["witness_pairing"] = p.witness.to_string();
    return j;
}

}  // namespace qsdna
