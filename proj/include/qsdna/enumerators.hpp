#pragma once

// Complete, joint and GC weight enumerators with exact integer coefficients.
//
// Variable order is pinned to the symbol order (0,a,b,c) <-> (w,x,y,z); under
// the DNA alphabet map this reads (A,G,C,T). The GC specialization groups
// {a,b} against {0,c}.

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qsdna/binary_code.hpp"
#include "qsdna/qsd.hpp"

namespace qsdna {

struct WeightEnumerator {
    int arity = 4;  // 4: (w,x,y,z); 2: (x,y)
    int n = 0;
    std::map<std::array<int, 4>, uint64_t> coeff;  // exponents sum to n; arity-2 uses slots 0,1

    uint64_t coefficient_sum() const {
        uint64_t s = 0;
        for (const auto& [e, c] : coeff) s += c;
        return s;
    }

    uint64_t at(const std::array<int, 4>& e) const {
        auto it = coeff.find(e);
        return it == coeff.end() ? 0 : it->second;
    }

    bool operator==(const WeightEnumerator& o) const = default;
};

inline WeightEnumerator cwe(const std::vector<RingWord>& words) {
    if (words.empty()) throw Error("cwe: empty word set");
    WeightEnumerator w{4, words[0].n, {}};
    for (const RingWord& word : words) {
        std::array<int, 4> counts{0, 0, 0, 0};
        for (int j = 0; j < word.n; ++j) ++counts[symbol_at(word, j)];
        ++w.coeff[counts];
    }
    return w;
}

inline WeightEnumerator cwe(const QsdCode& c) { return cwe(expand(c)); }

// J(A,B): exponents count coordinate pairs (0,0),(0,1),(1,0),(1,1) over all
// (u,v) in A x B.
inline WeightEnumerator joint_weight_enumerator(const BinaryCode& a, const BinaryCode& b) {
    if (a.length() != b.length()) throw Error("joint_weight_enumerator: length mismatch");
    const int n = a.length();
    WeightEnumerator w{4, n, {}};
    for (Row u : a.codewords())
        for (Row v : b.codewords()) {
            int n11 = popcount(u & v);
            int n10 = popcount(u & ~v & ((Row{1} << n) - 1));
            int n01 = popcount(~u & v & ((Row{1} << n) - 1));
            int n00 = n - n11 - n10 - n01;
            ++w.coeff[{n00, n01, n10, n11}];
        }
    return w;
}

// Reads J(res,tor) as a complete weight enumerator: the pair (u_j, t_j)
// determines the symbol a*u_j + c*t_j, so (0,0),(0,1),(1,0),(1,1) are the
// counts of 0, c, a, b respectively.
inline WeightEnumerator cwe_from_joint(const WeightEnumerator& j) {
    WeightEnumerator w{4, j.n, {}};
    for (const auto& [e, c] : j.coeff) w.coeff[{e[0], e[2], e[3], e[1]}] += c;
    return w;
}

inline WeightEnumerator gcw_from_cwe(const WeightEnumerator& c) {
    WeightEnumerator w{2, c.n, {}};
    for (const auto& [e, cf] : c.coeff) w.coeff[{e[1] + e[2], e[0] + e[3], 0, 0}] += cf;
    return w;
}

inline WeightEnumerator gcw_direct(const std::vector<RingWord>& words) { return gcw_from_cwe(cwe(words)); }
inline WeightEnumerator gcw_direct(const QsdCode& c) { return gcw_from_cwe(cwe(c)); }

// Closed form: GCW(x,y) = sum_i 2^(n-k1) A_i(res) x^i y^(n-i).
inline WeightEnumerator gcw_closed_form(const BinaryCode& res, int n) {
    if (res.length() != n) throw Error("gcw_closed_form: length mismatch");
    if (!res.is_self_orthogonal()) throw Error("gcw_closed_form: residue code is not self-orthogonal");
    WeightEnumerator w{2, n, {}};
    uint64_t scale = uint64_t{1} << (n - res.dim());
    std::vector<uint64_t> dist = res.weight_distribution();
    for (int i = 0; i <= n; ++i)
        if (dist[i]) w.coeff[{i, n - i, 0, 0}] = scale * dist[i];
    return w;
}

// Size of the subcode with GC-content exactly m: the x^m y^(n-m) coefficient.
inline uint64_t fixed_gc_subcode_size(const WeightEnumerator& gcw, int m) {
    if (gcw.arity != 2) throw Error("fixed_gc_subcode_size: want a 2-variable enumerator");
    return gcw.at({m, gcw.n - m, 0, 0});
}

inline uint64_t fixed_gc_subcode_size(const QsdCode& c, int m) {
    if (m < 0 || m > c.n) throw Error("fixed_gc_subcode_size: m out of range");
    return fixed_gc_subcode_size(gcw_closed_form(c.res, c.n), m);
}

// ---- printing ----

namespace detail {

inline void append_power(std::string& out, const char* var, int e) {
    if (e == 0) return;
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
}

}  // namespace detail

inline std::string to_string(const WeightEnumerator& we) {
    static constexpr std::array<const char*, 4> vars4 = {"w", "x", "y", "z"};
    static constexpr std::array<const char*, 4> vars2 = {"x", "y", "", ""};
    const auto& vars = we.arity == 4 ? vars4 : vars2;
    // Descending in the leading variables so the highest GC terms print first.
    std::string out;
    for (auto it = we.coeff.rbegin(); it != we.coeff.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int v = 0; v < we.arity; ++v) detail::append_power(mono, vars[v], e[v]);
        if (mono.empty()) mono = "1";
        out += (c == 1 ? "" : std::to_string(c)) + mono;
    }
    return out.empty() ? "0" : out;
}

inline std::string exponents_key(const WeightEnumerator& we, const std::array<int, 4>& e) {
    std::string key;
    for (int v = 0; v < we.arity; ++v) {
        if (v) key += ',';
        key += std::to_string(e[v]);
    }
    return key;
}

}  // namespace qsdna
