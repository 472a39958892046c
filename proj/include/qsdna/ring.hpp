#pragma once

// Exact arithmetic for the eleven finite rings of order 4, together with the
// complement map x -> x + alpha and (where it exists) the GC-content map
// psi(x) = beta*x (or x*beta for ring F, which only admits a right multiplier).
//
// Elements are indices 0..3:
//   characteristic 2: {0, a, b, c} with c = a + b (Klein four-group, add = XOR)
//   characteristic 4: {0, a, 2a, 3a}              (cyclic, add = + mod 4)

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qsdna {

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class UnsupportedRingError : public Error {
  public:
    explicit UnsupportedRingError(const std::string& what) : Error(what) {}
};

enum class RingId : uint8_t { A, B, C, D, E, F, G, H, I, J, K };

using Elem = uint8_t;  // index into the element order above

struct Ring4 {
    RingId id;
    char name;
    int characteristic;  // 2 or 4
    std::array<std::array<Elem, 4>, 4> add;
    std::array<std::array<Elem, 4>, 4> mul;
    Elem complement_alpha;           // x^C = x + alpha, fixed-point-free involution
    std::optional<Elem> gc_beta;     // absent exactly for C, J, K
    bool gc_beta_right = false;      // true for F: psi(x) = x * beta

    std::string elem_name(Elem x) const {
        static constexpr std::array<const char*, 4> char2 = {"0", "a", "b", "c"};
        static constexpr std::array<const char*, 4> char4 = {"0", "a", "2a", "3a"};
        return (characteristic == 2 ? char2 : char4)[x];
    }

    Elem elem_from_name(std::string_view s) const {
        for (Elem x = 0; x < 4; ++x)
            if (elem_name(x) == s) return x;
        throw Error("unknown element '" + std::string(s) + "' in ring " + name);
    }
};

inline Elem ring_add(const Ring4& r, Elem x, Elem y) { return r.add[x][y]; }
inline Elem ring_mul(const Ring4& r, Elem x, Elem y) { return r.mul[x][y]; }

inline Elem complement(const Ring4& r, Elem x) { return r.add[x][r.complement_alpha]; }

// 1 iff x lies in the GC fiber ({G,C} side of the partition).
inline int gc_content(const Ring4& r, Elem x) {
    if (!r.gc_beta)
        throw UnsupportedRingError(std::string("ring ") + r.name + " has no GC-content map");
    Elem beta = *r.gc_beta;
    Elem img = r.gc_beta_right ? r.mul[x][beta] : r.mul[beta][x];
    return img != 0 ? 1 : 0;
}

namespace detail {

inline std::array<std::array<Elem, 4>, 4> add_table(int characteristic) {
    std::array<std::array<Elem, 4>, 4> t{};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            t[x][y] = static_cast<Elem>(characteristic == 2 ? (x ^ y) : (x + y) % 4);
    return t;
}

// Characteristic-2 rings are determined by the four generator products; every
// element is a GF(2)-sum of {a, b} and multiplication extends bilinearly.
inline Ring4 char2_ring(RingId id, char name, Elem a2, Elem ab, Elem ba, Elem b2, Elem alpha,
                        std::optional<Elem> beta, bool beta_right = false) {
    Ring4 r;
    r.id = id;
    r.name = name;
    r.characteristic = 2;
    r.add = add_table(2);
    const std::array<std::array<Elem, 2>, 4> parts = {{{0, 0}, {1, 0}, {0, 1}, {1, 1}}};
    const std::array<std::array<Elem, 2>, 2> gen = {{{a2, ab}, {ba, b2}}};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            Elem acc = 0;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    if (parts[x][i] && parts[y][j]) acc = static_cast<Elem>(acc ^ gen[i][j]);
            r.mul[x][y] = acc;
        }
    r.complement_alpha = alpha;
    r.gc_beta = beta;
    r.gc_beta_right = beta_right;
    return r;
}

// Characteristic-4 rings: a^2 = s*a, so (ia)(ja) = (i*j*s mod 4) a.
inline Ring4 char4_ring(RingId id, char name, int s, std::optional<Elem> beta) {
    Ring4 r;
    r.id = id;
    r.name = name;
    r.characteristic = 4;
    r.add = add_table(4);
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) r.mul[x][y] = static_cast<Elem>((x * y * s) % 4);
    r.complement_alpha = 2;  // x^C = x + 2a
    r.gc_beta = beta;
    return r;
}

inline std::vector<Ring4> build_all_rings() {
    // Generator products and complement/beta choices follow the order-4
    // classification; when several beta work the first valid one is pinned.
    std::vector<Ring4> rings;
    rings.push_back(char4_ring(RingId::A, 'A', 1, Elem{2}));       // a^2 = a,  beta = 2a
    rings.push_back(char4_ring(RingId::B, 'B', 2, Elem{1}));       // a^2 = 2a, beta = a
    rings.push_back(char4_ring(RingId::C, 'C', 0, std::nullopt));  // a^2 = 0,  no GC map
    //                              id        a*a ab ba b*b alpha  beta
    rings.push_back(char2_ring(RingId::D, 'D', 1, 0, 0, 2, /*b*/ 2, Elem{1}));
    rings.push_back(char2_ring(RingId::E, 'E', 1, 1, 2, 2, /*c*/ 3, Elem{1}));
    rings.push_back(char2_ring(RingId::F, 'F', 1, 2, 1, 2, /*c*/ 3, Elem{1}, true));
    rings.push_back(char2_ring(RingId::G, 'G', 0, 1, 1, 2, /*a*/ 1, Elem{1}));
    rings.push_back(char2_ring(RingId::H, 'H', 0, 0, 0, 2, /*a*/ 1, Elem{2}));
    rings.push_back(char2_ring(RingId::I, 'I', 2, 0, 0, 0, /*b*/ 2, Elem{1}));
    rings.push_back(char2_ring(RingId::J, 'J', 0, 0, 0, 0, /*c*/ 3, std::nullopt));
    rings.push_back(char2_ring(RingId::K, 'K', 1, 2, 2, 3, /*c*/ 3, std::nullopt));
    return rings;
}

}  // namespace detail

inline const std::vector<Ring4>& all_rings() {
    static const std::vector<Ring4> rings = detail::build_all_rings();
    return rings;
}

inline const Ring4& ring(RingId id) { return all_rings()[static_cast<size_t>(id)]; }

inline const Ring4& ring_by_name(char name) {
    for (const Ring4& r : all_rings())
        if (r.name == name) return r;
    throw Error(std::string("unknown ring '") + name + "'");
}

// Exhaustive structural validation: abelian group addition, associativity and
// distributivity over all 64 triples, complement involution, GC fiber shape.
struct RingCheck {
    bool ok = true;
    std::vector<std::string> failures;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

inline RingCheck validate(const Ring4& r) {
    RingCheck chk;
    const std::string tag = std::string("ring ") + r.name + ": ";
    for (int x = 0; x < 4; ++x) {
        chk.require(r.add[x][0] == x && r.add[0][x] == x, tag + "0 is additive identity");
        bool has_inverse = false;
        for (int y = 0; y < 4; ++y) has_inverse |= r.add[x][y] == 0;
        chk.require(has_inverse, tag + "additive inverses exist");
        for (int y = 0; y < 4; ++y) chk.require(r.add[x][y] == r.add[y][x], tag + "addition commutes");
    }
    if (r.characteristic == 2)
        for (int x = 0; x < 4; ++x) chk.require(r.add[x][x] == 0, tag + "x + x = 0");
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            for (int z = 0; z < 4; ++z) {
                chk.require(r.add[r.add[x][y]][z] == r.add[x][r.add[y][z]], tag + "addition associates");
                chk.require(r.mul[r.mul[x][y]][z] == r.mul[x][r.mul[y][z]], tag + "multiplication associates");
                chk.require(r.mul[x][r.add[y][z]] == r.add[r.mul[x][y]][r.mul[x][z]],
                            tag + "left distributivity");
                chk.require(r.mul[r.add[x][y]][z] == r.add[r.mul[x][z]][r.mul[y][z]],
                            tag + "right distributivity");
            }
    for (int x = 0; x < 4; ++x) {
        Elem cx = complement(r, static_cast<Elem>(x));
        chk.require(cx != x, tag + "complement is fixed-point-free");
        chk.require(complement(r, cx) == x, tag + "complement is an involution");
    }
    if (r.gc_beta) {
        int zeros = 0, ones = 0;
        for (int x = 0; x < 4; ++x) (gc_content(r, static_cast<Elem>(x)) ? ones : zeros)++;
        chk.require(zeros == 2 && ones == 2, tag + "GC map has two fibers of size 2");
        chk.require(gc_content(r, 0) == 0, tag + "0 maps to the AT fiber");
        chk.require(gc_content(r, complement(r, 0)) == 0, tag + "0^C maps to the AT fiber");
    }
    return chk;
}

// ---- Isomorphism verification (exhaustive, 16 sums + 16 products each) ----

namespace detail {

struct SmallRing {
    std::array<std::array<int, 4>, 4> add, mul;
};

inline SmallRing z4() {
    SmallRing s;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            s.add[x][y] = (x + y) % 4;
            s.mul[x][y] = (x * y) % 4;
        }
    return s;
}

inline SmallRing z2xz2() {  // pairs encoded as 2*hi + lo
    SmallRing s;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            s.add[x][y] = x ^ y;
            s.mul[x][y] = ((x >> 1) & (y >> 1)) << 1 | ((x & 1) & (y & 1));
        }
    return s;
}

inline SmallRing z2u_u2m1() {  // Z2[u]/(u^2-1), elements p + q*u encoded 2*q + p
    SmallRing s;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            int p1 = x & 1, q1 = x >> 1, p2 = y & 1, q2 = y >> 1;
            s.add[x][y] = x ^ y;
            int p = (p1 * p2 + q1 * q2) & 1;  // u^2 = 1
            int q = (p1 * q2 + q1 * p2) & 1;
            s.mul[x][y] = 2 * q + p;
        }
    return s;
}

inline SmallRing gf4() {  // elements p + q*w encoded 2*q + p, w^2 = w + 1
    SmallRing s;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            int p1 = x & 1, q1 = x >> 1, p2 = y & 1, q2 = y >> 1;
            s.add[x][y] = x ^ y;
            int p = (p1 * p2 + q1 * q2) & 1;
            int q = (p1 * q2 + q1 * p2 + q1 * q2) & 1;
            s.mul[x][y] = 2 * q + p;
        }
    return s;
}

inline bool is_isomorphism(const Ring4& r, const SmallRing& target, const std::array<int, 4>& phi) {
    std::array<bool, 4> hit{};
    for (int x = 0; x < 4; ++x) {
        if (hit[phi[x]]) return false;  // must be a bijection
        hit[phi[x]] = true;
    }
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            if (phi[r.add[x][y]] != target.add[phi[x]][phi[y]]) return false;
            if (phi[r.mul[x][y]] != target.mul[phi[x]][phi[y]]) return false;
        }
    return true;
}

}  // namespace detail

struct IsomorphismReport {
    bool phi_a_ok = false;  // A -> Z4,            a -> 1
    bool phi_d_ok = false;  // D -> Z2 x Z2,       a -> (1,0), b -> (0,1)
    bool phi_g_ok = false;  // G -> Z2[u]/(u^2-1), a -> 1+u,   b -> 1
    bool phi_k_ok = false;  // K -> GF(4),         a -> 1,     b -> w
    bool e_f_not_isomorphic = false;
    bool all_ok() const { return phi_a_ok && phi_d_ok && phi_g_ok && phi_k_ok && e_f_not_isomorphic; }
};

inline IsomorphismReport verify_isomorphisms() {
    using detail::is_isomorphism;
    IsomorphismReport rep;
    rep.phi_a_ok = is_isomorphism(ring(RingId::A), detail::z4(), {0, 1, 2, 3});
    rep.phi_d_ok = is_isomorphism(ring(RingId::D), detail::z2xz2(), {0, 1, 2, 3});
    // phi_G(a) = 1+u (code 3), phi_G(b) = 1 (code 1), phi_G(c) = u (code 2)
    rep.phi_g_ok = is_isomorphism(ring(RingId::G), detail::z2u_u2m1(), {0, 3, 1, 2});
    // phi_K(a) = 1, phi_K(b) = w (code 2), phi_K(c) = 1+w (code 3)
    rep.phi_k_ok = is_isomorphism(ring(RingId::K), detail::gf4(), {0, 1, 2, 3});

    // E and F are not isomorphic: try all additive automorphisms of the Klein
    // group (bijections fixing 0 and preserving XOR).
    const Ring4& e = ring(RingId::E);
    const Ring4& f = ring(RingId::F);
    detail::SmallRing ftab;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            ftab.add[x][y] = f.add[x][y];
            ftab.mul[x][y] = f.mul[x][y];
        }
    bool found = false;
    constexpr std::array<std::array<int, 3>, 6> images = {
        {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
    for (const auto& im : images) {
        std::array<int, 4> phi = {0, im[0], im[1], im[2]};
        if (phi[3] != (phi[1] ^ phi[2])) continue;  // must respect c = a + b
        found |= is_isomorphism(e, ftab, phi);
    }
    rep.e_f_not_isomorphic = !found;
    return rep;
}

}  // namespace qsdna
