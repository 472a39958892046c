#pragma once

// DNA-facing layer: alphabet map, reverse / complement / reverse-complement,
// fixed-GC subcodes, and the reverse-complement distance
//
//   d_RC^m = max over coordinate permutations sigma of
//            min over ordered pairs x,y in sigma(C_m) of d_H(x^RC, y).
//
// The distance of a permuted layout depends on sigma only through the
// involution tau(j) = sigma^-1(n+1-sigma(j)) pairing each position with its
// mirror, so the max runs over coordinate-pairing involutions instead of all
// n! permutations: (n-1)!! cases at even n, with one fixed point at odd n.
// Closed forms for one- and two-generator residues are provided next to the
// search; where a closed form and the search disagree the search is
// authoritative and the caller is handed a discrepancy record.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "qsdna/enumerators.hpp"
#include "qsdna/parallel.hpp"
#include "qsdna/qsd.hpp"

namespace qsdna {

// ---- alphabet map and word operators ----

inline char dna_letter(Elem x) { return std::array<char, 4>{'A', 'G', 'C', 'T'}[x]; }

inline Elem elem_from_dna(char ch) {
    switch (ch) {
        case 'A': return 0;
        case 'G': return 1;
        case 'C': return 2;
        case 'T': return 3;
        default: throw Error(std::string("bad nucleotide '") + ch + "'");
    }
}

struct DnaCode {
    int n = 0;
    std::vector<std::string> words;  // set semantics, kept sorted
};

inline std::string dna_word(const RingWord& w) {
    std::string out(w.n, '?');
    for (int j = 0; j < w.n; ++j) out[j] = dna_letter(symbol_at(w, j));
    return out;
}

inline DnaCode to_dna(const QsdCode& c) {
    const Ring4& r = ring(c.ring);
    if (!r.gc_beta) throw UnsupportedRingError("to_dna: ring has no GC-content map");
    DnaCode out{c.n, {}};
    for (const RingWord& w : expand(c)) out.words.push_back(dna_word(w));
    std::sort(out.words.begin(), out.words.end());
    return out;
}

inline std::string reverse(const std::string& x) { return std::string(x.rbegin(), x.rend()); }

inline std::string complement(const std::string& x) {
    std::string out(x);
    for (char& ch : out) ch = dna_letter(complement(ring(RingId::E), elem_from_dna(ch)));
    return out;
}

inline std::string reverse_complement(const std::string& x) { return reverse(complement(x)); }

inline int gc_content(const std::string& x) {
    int m = 0;
    for (char ch : x) m += ch == 'G' || ch == 'C';
    return m;
}

inline int hamming_distance(const std::string& u, const std::string& v) {
    if (u.size() != v.size()) throw Error("hamming_distance: length mismatch");
    int d = 0;
    for (size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
    return d;
}

inline DnaCode fixed_gc_subcode(const DnaCode& c, int m) {
    if (m < 0 || m > c.n) throw Error("fixed_gc_subcode: m out of range");
    DnaCode out{c.n, {}};
    for (const std::string& w : c.words)
        if (gc_content(w) == m) out.words.push_back(w);
    return out;
}

// Minimum over ordered pairs for the code as laid out; no permutation search.
inline int min_rc_distance(const DnaCode& c) {
    int best = c.n;
    for (const std::string& x : c.words) {
        std::string xrc = reverse_complement(x);
        for (const std::string& y : c.words) best = std::min(best, hamming_distance(xrc, y));
    }
    return best;
}

inline int min_r_distance(const DnaCode& c) {
    int best = c.n;
    for (const std::string& x : c.words) {
        std::string xr = reverse(x);
        for (const std::string& y : c.words) best = std::min(best, hamming_distance(xr, y));
    }
    return best;
}

// ---- coordinate-pairing involutions ----

struct Involution {
    std::vector<std::pair<int, int>> pairs;  // 0-based, first < second
    std::optional<int> fixed;                // present iff n is odd

    int apply(int j) const {
        for (auto [p, q] : pairs) {
            if (j == p) return q;
            if (j == q) return p;
        }
        return j;
    }

    std::string to_string() const {  // 1-based cycle notation
        std::string out;
        for (auto [p, q] : pairs)
            out += "(" + std::to_string(p + 1) + " " + std::to_string(q + 1) + ")";
        if (fixed) out += "(" + std::to_string(*fixed + 1) + ")";
        return out;
    }
};

// All pairings of {0..n-1} with exactly n mod 2 fixed points, in a fixed
// deterministic order (lowest unpaired index first).
inline std::vector<Involution> involutions(int n) {
    std::vector<Involution> out;
    std::vector<int> partner(n, -1);
    bool fixed_used = false;
    auto rec = [&](auto&& self) -> void {
        int i = 0;
        while (i < n && partner[i] >= 0) ++i;
        if (i == n) {
            Involution inv;
            std::vector<bool> seen(n, false);
            for (int j = 0; j < n; ++j) {
                if (seen[j]) continue;
                seen[j] = true;
                if (partner[j] == j) {
                    inv.fixed = j;
                } else {
                    seen[partner[j]] = true;
                    inv.pairs.emplace_back(j, partner[j]);
                }
            }
            out.push_back(std::move(inv));
            return;
        }
        if ((n % 2) == 1 && !fixed_used) {
            partner[i] = i;
            fixed_used = true;
            self(self);
            fixed_used = false;
            partner[i] = -1;
        }
        for (int j = i + 1; j < n; ++j) {
            if (partner[j] >= 0) continue;
            partner[i] = j;
            partner[j] = i;
            self(self);
            partner[i] = partner[j] = -1;
        }
    };
    rec(rec);
    return out;
}

// ---- exact d_RC search ----

struct RcProfile {
    int m = 0;
    int d_rc = 0;
    Involution witness;
};

namespace detail {

inline Row permute_bits(Row v, int n, const std::vector<int>& tau) {
    Row out = 0;
    for (int j = 0; j < n; ++j)
        if (get_col(v, n, tau[j])) out |= col_bit(n, j);
    return out;
}

inline std::vector<int> tau_table(const Involution& inv, int n) {
    std::vector<int> tau(n);
    std::iota(tau.begin(), tau.end(), 0);
    for (auto [p, q] : inv.pairs) {
        tau[p] = q;
        tau[q] = p;
    }
    return tau;
}

}  // namespace detail

// Subcode of GC-content m: the codewords a*u + c*t with wt(u) = m.
inline std::vector<RingWord> fixed_gc_words(const QsdCode& c, int m) {
    std::vector<RingWord> out;
    for (const RingWord& w : expand(c))
        if (popcount(w.s) == m) out.push_back(w);
    return out;
}

// d_H(x^RC, y) under pairing tau: position j mismatches unless the residue
// parts agree across the pair and the torsion parts differ by the complement,
// i.e. s_x(tau(j)) = s_y(j) and t_x(tau(j)) + 1 = t_y(j).
inline std::optional<RcProfile> d_rc_exact(const QsdCode& c, int m, int jobs = 1) {
    if (m < 0 || m > c.n) throw Error("d_rc_exact: m out of range");
    std::vector<RingWord> sub = fixed_gc_words(c, m);
    if (sub.empty()) return std::nullopt;  // undefined, distinct from 0

    const int n = c.n;
    const Row mask = (Row{1} << n) - 1;
    std::vector<Involution> taus = involutions(n);
    struct Best {
        int d = -1;
        size_t idx = 0;
    };
    std::vector<Best> chunk_best(std::max<size_t>(1, taus.size()));
    parallel_for(jobs, taus.size(), [&](size_t lo, size_t hi) {
        std::vector<Row> ps(sub.size()), pt(sub.size());
        for (size_t ti = lo; ti < hi; ++ti) {
            std::vector<int> tau = detail::tau_table(taus[ti], n);
            for (size_t i = 0; i < sub.size(); ++i) {
                ps[i] = detail::permute_bits(sub[i].s, n, tau);
                pt[i] = detail::permute_bits(sub[i].t, n, tau) ^ mask;
            }
            int dmin = n + 1;
            for (size_t i = 0; i < sub.size() && dmin > 0; ++i)
                for (size_t j = 0; j < sub.size(); ++j) {
                    int d = popcount((ps[i] ^ sub[j].s) | (pt[i] ^ sub[j].t));
                    if (d < dmin) {
                        dmin = d;
                        if (dmin == 0) break;
                    }
                }
            Best& b = chunk_best[ti];
            b.d = dmin;
            b.idx = ti;
        }
    });
    RcProfile out{m, -1, {}};
    size_t best_idx = 0;
    for (const Best& b : chunk_best)
        if (b.d > out.d_rc) {  // first involution wins ties
            out.d_rc = b.d;
            best_idx = b.idx;
        }
    out.witness = taus[best_idx];
    return out;
}

// Full profile over the GC weights that actually occur (even m with A_m > 0).
inline std::map<int, RcProfile> d_rc_profile(const QsdCode& c, int jobs = 1) {
    std::map<int, RcProfile> out;
    std::vector<uint64_t> dist = c.res.weight_distribution();
    for (int m = 0; m <= c.n; ++m) {
        if (!dist[m]) continue;
        auto p = d_rc_exact(c, m, jobs);
        if (p) out[m] = *p;
    }
    return out;
}

// Literal definition: max over all n! permutations, with the distance taken
// symbolwise on DNA words. Independent of the involution path; n <= 8.
inline std::optional<int> d_rc_exact_literal(const QsdCode& c, int m) {
    if (c.n > 8) throw Error("d_rc_exact_literal: factorial search capped at n = 8");
    std::vector<RingWord> sub = fixed_gc_words(c, m);
    if (sub.empty()) return std::nullopt;
    std::vector<std::string> words;
    for (const RingWord& w : sub) words.push_back(dna_word(w));

    std::vector<int> perm(c.n);
    std::iota(perm.begin(), perm.end(), 0);
    int best = -1;
    std::vector<std::string> laid(words.size(), std::string(c.n, '?'));
    do {
        for (size_t i = 0; i < words.size(); ++i)
            for (int j = 0; j < c.n; ++j) laid[i][j] = words[i][perm[j]];
        int dmin = c.n + 1;
        for (const std::string& x : laid) {
            std::string xrc = reverse_complement(x);
            for (const std::string& y : laid) dmin = std::min(dmin, hamming_distance(xrc, y));
            if (dmin <= best) break;
        }
        best = std::max(best, dmin);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// ---- closed forms ----

inline int d_rc_formula_1gen(int n, int m) {
    if (m < 0 || m > n || (m % 2)) throw Error("d_rc_formula_1gen: m must be even and within length");
    return 2 * std::min(m, n - m);
}

// Residue spanned by two disjoint-support generators of weights m1, m2.
inline std::map<int, int> d_rc_formula_2gen(int n, int m1, int m2) {
    if (m1 <= 0 || m2 <= 0 || (m1 % 2) || (m2 % 2) || m1 + m2 > n)
        throw Error("d_rc_formula_2gen: weights must be positive, even, and fit the length");
    const int m = m1 + m2;
    std::map<int, int> out;
    if (m1 == m2) {
        out[m1] = std::min(m, 2 * (n - n / 2) - m);
        out[m] = 2 * std::min(m, n - m);
    } else {
        out[m1] = 2 * std::min(m1, n - m1);
        out[m2] = 2 * std::min(m2, n - m2);
        out[m] = 2 * std::min(m, n - m);
    }
    return out;
}

inline int delta_n(int n) {
    if (n % 2 == 1) return 1;
    return n % 4 == 0 ? 0 : 2;
}

// Residue spanned by generators with supports of sizes m1+m3 and m2+m3
// overlapping in m3 positions; all parts positive and even.
inline std::map<int, int> d_rc_formula_overlap(int n, int m1, int m2, int m3) {
    for (int m : {m1, m2, m3})
        if (m <= 0 || (m % 2)) throw Error("d_rc_formula_overlap: parts must be positive and even");
    if (m1 + m2 + m3 > n) throw Error("d_rc_formula_overlap: parts exceed the length");
    std::map<int, int> out;
    if (m1 != m2 && m1 != m3 && m2 != m3) {
        for (auto [x, y] : {std::pair{m1, m2}, {m1, m3}, {m2, m3}})
            out[x + y] = 2 * std::min(x + y, n - (x + y));
        return out;
    }
    if (m1 == m2 && m2 == m3) {
        int d;
        if (6 * m1 < n)
            d = 4 * m1;
        else if (4 * m1 < n)
            d = n - 2 * m1 - delta_n(n);
        else
            d = 2 * (n / 2 - m1);
        out[2 * m1] = d;
        return out;
    }
    // Exactly two parts equal; rebasing the generators moves the equal pair
    // into the first two slots: (m1,m2,m3) with m2 == m3 plays as (m3,m2,m1).
    int e, o;
    if (m1 == m2) {
        e = m1;
        o = m3;
    } else if (m2 == m3) {
        e = m2;
        o = m1;
    } else {  // m1 == m3
        e = m1;
        o = m2;
    }
    out[2 * e] = 2 * std::min(2 * e, n - 2 * e);
    int d;
    if (2 * (2 * e + o) < n)
        d = 2 * (e + o);
    else if (4 * e < n)
        d = n - 2 * e - delta_n(n);
    else
        d = 2 * (n / 2 - e);
    out[e + o] = d;
    return out;
}

// ---- shape detection for the closed forms ----

struct ResidueShape {
    enum class Kind { zero, one_gen, two_gen_disjoint, two_gen_overlap, other };
    Kind kind = Kind::other;
    int m1 = 0, m2 = 0, m3 = 0;  // overlap decomposition for 2-dim residues
};

inline ResidueShape classify_shape(const BinaryCode& res) {
    ResidueShape s;
    if (res.dim() == 0) {
        s.kind = ResidueShape::Kind::zero;
    } else if (res.dim() == 1) {
        s.kind = ResidueShape::Kind::one_gen;
        s.m1 = popcount(res.rows()[0]);
    } else if (res.dim() == 2) {
        Row g1 = res.rows()[0], g2 = res.rows()[1];
        s.m3 = popcount(g1 & g2);
        s.m1 = popcount(g1) - s.m3;
        s.m2 = popcount(g2) - s.m3;
        // A zero part means some basis has disjoint supports.
        if (s.m3 == 0) {
            s.kind = ResidueShape::Kind::two_gen_disjoint;
        } else if (s.m1 == 0 || s.m2 == 0) {
            Row h1 = s.m1 == 0 ? g1 : g2;  // the contained support
            Row h2 = g1 ^ g2;
            s.kind = ResidueShape::Kind::two_gen_disjoint;
            s.m1 = popcount(h1);
            s.m2 = popcount(h2);
            s.m3 = 0;
        } else {
            s.kind = ResidueShape::Kind::two_gen_overlap;
        }
    }
    return s;
}

// Closed-form d_RC profile when one of the residue shapes applies.
inline std::optional<std::map<int, int>> d_rc_formula_for(const BinaryCode& res) {
    const int n = res.length();
    ResidueShape s = classify_shape(res);
    switch (s.kind) {
        case ResidueShape::Kind::zero:
            return std::map<int, int>{{0, 0}};
        case ResidueShape::Kind::one_gen:
            return std::map<int, int>{{s.m1, d_rc_formula_1gen(n, s.m1)}};
        case ResidueShape::Kind::two_gen_disjoint:
            return d_rc_formula_2gen(n, s.m1, s.m2);
        case ResidueShape::Kind::two_gen_overlap:
            return d_rc_formula_overlap(n, s.m1, s.m2, s.m3);
        default:
            return std::nullopt;
    }
}

}  // namespace qsdna
