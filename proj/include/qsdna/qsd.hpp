#pragma once

// Quasi-self-dual codes over the noncommutative rings E and F, stored as the
// (residue, torsion) pair of binary codes: every codeword is a*u + c*t with
// u in res and t in tor = res-dual, so the code has size 2^n exactly.

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "qsdna/binary_code.hpp"
#include "qsdna/ring.hpp"

namespace qsdna {

// Element encoding over E and F matches ring.hpp: 0,a,b,c = 0,1,2,3.
// A word is the unique pair (s,t) of bit-rows with symbol_j = a*s_j + c*t_j,
// i.e. (s,t) = (0,0) -> 0, (1,0) -> a, (1,1) -> b, (0,1) -> c.
struct RingWord {
    RingId ring = RingId::E;
    int n = 0;
    Row s = 0;
    Row t = 0;

    bool operator==(const RingWord& o) const = default;
};

inline Elem symbol_at(const RingWord& w, int j) {
    int s = get_col(w.s, w.n, j), t = get_col(w.t, w.n, j);
    return static_cast<Elem>(s ? (t ? 2 : 1) : (t ? 3 : 0));
}

inline RingWord word_from_symbols(RingId ring, const std::vector<Elem>& symbols) {
    RingWord w{ring, static_cast<int>(symbols.size()), 0, 0};
    for (int j = 0; j < w.n; ++j) {
        Elem x = symbols[j];
        if (x > 3) throw Error("word_from_symbols: bad element");
        if (x == 1 || x == 2) w.s |= col_bit(w.n, j);
        if (x == 2 || x == 3) w.t |= col_bit(w.n, j);
    }
    return w;
}

inline std::vector<Elem> symbols_of(const RingWord& w) {
    std::vector<Elem> out(w.n);
    for (int j = 0; j < w.n; ++j) out[j] = symbol_at(w, j);
    return out;
}

// Left-to-right sum of coordinatewise ring products; factor order matters.
inline Elem inner_product(const Ring4& r, const RingWord& x, const RingWord& y) {
    if (x.n != y.n || x.ring != y.ring) throw Error("inner_product: length or ring mismatch");
    if (x.ring != r.id) throw Error("inner_product: word ring does not match ring argument");
    Elem acc = 0;
    for (int j = 0; j < x.n; ++j) acc = r.add[acc][r.mul[symbol_at(x, j)][symbol_at(y, j)]];
    return acc;
}

struct QsdCode {
    RingId ring = RingId::E;
    int n = 0;
    BinaryCode res;  // self-orthogonal [n, k1]
    BinaryCode tor;  // equal to res.dual()

    int k1() const { return res.dim(); }
};

inline QsdCode build_qsd(RingId ring_id, const BinaryCode& b) {
    if (ring_id != RingId::E && ring_id != RingId::F)
        throw UnsupportedRingError("build_qsd: only rings E and F carry QSD codes here");
    if (!b.is_self_orthogonal()) throw Error("build_qsd: residue code is not self-orthogonal");
    return QsdCode{ring_id, b.length(), b, b.dual()};
}

// All 2^n codewords a*u + c*t, ordered by (u, t) generator subsets.
inline std::vector<RingWord> expand(const QsdCode& c) {
    std::vector<Row> us = c.res.codewords();
    std::vector<Row> ts = c.tor.codewords();
    std::vector<RingWord> words;
    words.reserve(us.size() * ts.size());
    for (Row u : us)
        for (Row t : ts) words.push_back(RingWord{c.ring, c.n, u, t});
    return words;
}

// Exhaustive definition check: size 2^n and (x,y) = 0 for all ordered pairs.
inline bool is_qsd(const Ring4& r, const std::vector<RingWord>& words) {
    if (words.empty()) return false;
    const int n = words[0].n;
    if (n > 16 || words.size() != (size_t{1} << n)) return false;
    std::unordered_set<uint64_t> distinct;
    for (const RingWord& w : words) {
        if (w.n != n || w.ring != r.id) return false;
        distinct.insert((static_cast<uint64_t>(w.s) << 16) | w.t);
    }
    if (distinct.size() != words.size()) return false;
    for (const RingWord& x : words)
        for (const RingWord& y : words)
            if (inner_product(r, x, y) != 0) return false;
    return true;
}

inline bool is_qsd(const Ring4& r, const QsdCode& c) { return is_qsd(r, expand(c)); }

// Residue of a raw word set: span of the mod-{0,c} reductions (the s-parts).
inline BinaryCode residue(const std::vector<RingWord>& words) {
    if (words.empty()) throw Error("residue: empty word set");
    std::vector<Row> images;
    images.reserve(words.size());
    for (const RingWord& w : words) images.push_back(w.s);
    return BinaryCode::from_words(words[0].n, images);
}

// Torsion of a raw word set: the x with c*x in the set, i.e. the t-parts of
// the pure-torsion words.
inline BinaryCode torsion(const std::vector<RingWord>& words) {
    if (words.empty()) throw Error("torsion: empty word set");
    std::vector<Row> pure;
    for (const RingWord& w : words)
        if (w.s == 0) pure.push_back(w.t);
    return BinaryCode::from_words(words[0].n, pure);
}

// The symbol bijection a->a, b->b, c->c between E and F; self-orthogonality
// transfers because every codeword has even a-support and even b-support.
inline QsdCode transfer_e_to_f(const QsdCode& c) {
    if (c.ring != RingId::E) throw Error("transfer_e_to_f: input is not an E-code");
    if (!is_qsd(ring(RingId::E), c)) throw Error("transfer_e_to_f: input is not QSD");
    QsdCode out{RingId::F, c.n, c.res, c.tor};
    if (!is_qsd(ring(RingId::F), out)) throw Error("transfer_e_to_f: image failed the QSD check");
    return out;
}

// ---- generator matrix over the ring ----
//
// Module generator rows: a*g for each residue generator g (the scalar action
// already yields c*g), plus c*h for generators h of a complement of res
// inside tor.

inline std::vector<RingWord> generator_matrix(const QsdCode& c) {
    std::vector<RingWord> rows;
    for (Row g : c.res.rows()) rows.push_back(RingWord{c.ring, c.n, g, 0});
    std::vector<Row> basis(c.res.rows());
    for (Row h : c.tor.rows()) {
        std::vector<Row> trial(basis);
        trial.push_back(h);
        if (detail::rref(c.n, trial) > static_cast<int>(basis.size())) {
            basis.push_back(h);
            rows.push_back(RingWord{c.ring, c.n, 0, h});
        }
    }
    return rows;
}

inline std::string symbol_row_to_string(const Ring4& r, const RingWord& w) {
    std::string out;
    for (int j = 0; j < w.n; ++j) {
        if (j) out += ' ';
        out += r.elem_name(symbol_at(w, j));
    }
    return out;
}

inline std::string generator_matrix_to_string(const QsdCode& c) {
    const Ring4& r = ring(c.ring);
    std::string out;
    for (const RingWord& row : generator_matrix(c)) {
        out += symbol_row_to_string(r, row);
        out += '\n';
    }
    return out;
}

inline RingWord symbol_row_from_string(const Ring4& r, const std::string& line) {
    std::istringstream in(line);
    std::vector<Elem> symbols;
    std::string tok;
    while (in >> tok) symbols.push_back(r.elem_from_name(tok));
    return word_from_symbols(r.id, symbols);
}

}  // namespace qsdna
