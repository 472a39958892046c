#include <catch2/catch_amalgamated.hpp>

#include "qsdna/census.hpp"
#include "qsdna/enumerators.hpp"
#include "qsdna/qsd.hpp"

using namespace qsdna;

namespace {

BinaryCode code_of(int n, std::initializer_list<const char*> rows) {
    std::vector<Row> packed;
    for (const char* r : rows) packed.push_back(row_from_string(r));
    return BinaryCode::from_rows(n, packed);
}

std::vector<QsdCode> census_qsd(int max_n, RingId ring_id = RingId::E) {
    SoCensus census;
    std::vector<QsdCode> out;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; 2 * k <= n; ++k)
            for (const BinaryCode& rep : census.entry(n, k).representatives)
                out.push_back(build_qsd(ring_id, rep));
    return out;
}

}  // namespace

TEST_CASE("inner products over E and F", "[qsd]") {
    const Ring4& e = ring(RingId::E);
    const Ring4& f = ring(RingId::F);
    RingWord a1 = word_from_symbols(RingId::E, {1});
    RingWord b1 = word_from_symbols(RingId::E, {2});
    CHECK(inner_product(e, a1, b1) == 1);  // ab = a
    CHECK(inner_product(e, b1, a1) == 2);  // ba = b

    RingWord af = word_from_symbols(RingId::F, {1});
    RingWord bf = word_from_symbols(RingId::F, {2});
    CHECK(inner_product(f, af, bf) == 2);  // ab = b over F
    CHECK(inner_product(f, bf, af) == 1);

    // column c of the E table vanishes: (x, c...c) = 0 for every x
    RingWord allc = word_from_symbols(RingId::E, {3, 3, 3});
    for (Elem x : {Elem{0}, Elem{1}, Elem{2}, Elem{3}}) {
        RingWord w = word_from_symbols(RingId::E, {x, x, x});
        CHECK(inner_product(e, w, allc) == 0);
    }

    CHECK_THROWS_AS(inner_product(e, af, bf), Error);                           // ring mismatch
    CHECK_THROWS_AS(inner_product(e, a1, word_from_symbols(RingId::E, {1, 1})), Error);  // length
}

TEST_CASE("building QSD codes", "[qsd]") {
    // worked length-5 example: residue <11000, 00110>
    QsdCode c = build_qsd(RingId::E, code_of(5, {"11000", "00110"}));
    CHECK(c.tor == code_of(5, {"11000", "00110", "00001"}));
    std::string gen = generator_matrix_to_string(c);
    CHECK(gen == "a a 0 0 0\n0 0 a a 0\n0 0 0 0 c\n");

    // the all-torsion code of length 1 is {0, c}
    QsdCode t1 = build_qsd(RingId::E, BinaryCode::zero(1));
    std::vector<RingWord> words = expand(t1);
    REQUIRE(words.size() == 2);
    CHECK(symbol_at(words[0], 0) == 0);
    CHECK(symbol_at(words[1], 0) == 3);

    // <1111>: 16 words, every ordered pair orthogonal
    QsdCode c4 = build_qsd(RingId::E, code_of(4, {"1111"}));
    std::vector<RingWord> w4 = expand(c4);
    CHECK(w4.size() == 16);
    const Ring4& e = ring(RingId::E);
    for (const RingWord& x : w4)
        for (const RingWord& y : w4) CHECK(inner_product(e, x, y) == 0);

    CHECK_THROWS_AS(build_qsd(RingId::E, code_of(2, {"10"})), Error);
    CHECK_THROWS_AS(build_qsd(RingId::A, code_of(2, {"11"})), UnsupportedRingError);
}

TEST_CASE("symbol matrix parsing", "[qsd][formats]") {
    const Ring4& e = ring(RingId::E);
    QsdCode c = build_qsd(RingId::E, code_of(5, {"11000", "00110"}));
    for (const RingWord& row : generator_matrix(c)) {
        RingWord parsed = symbol_row_from_string(e, symbol_row_to_string(e, row));
        CHECK(parsed == row);
    }
    RingWord w = symbol_row_from_string(e, "a b 0 c");
    CHECK(symbols_of(w) == std::vector<Elem>{1, 2, 0, 3});
    CHECK_THROWS_AS(symbol_row_from_string(e, "a q"), Error);
}

TEST_CASE("is_qsd on raw word sets", "[qsd]") {
    const Ring4& e = ring(RingId::E);

    for (const QsdCode& c : census_qsd(6)) CHECK(is_qsd(e, expand(c)));

    // full torsion code {0,c}^n
    QsdCode full_t = build_qsd(RingId::E, BinaryCode::zero(3));
    CHECK(is_qsd(e, expand(full_t)));

    // adjoining a*(odd-weight word) breaks self-orthogonality: (y,y) = a
    std::vector<RingWord> words = expand(full_t);
    words.push_back(RingWord{RingId::E, 3, row_from_string("100"), 0});
    CHECK_FALSE(is_qsd(e, words));

    // doubling a word breaks the size requirement
    words.pop_back();
    words.push_back(words.front());
    CHECK_FALSE(is_qsd(e, words));
}

TEST_CASE("residue and torsion extraction round-trips", "[qsd]") {
    SoCensus census;
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; 2 * k <= n; ++k)
            for (const BinaryCode& rep : census.entry(n, k).representatives) {
                QsdCode c = build_qsd(RingId::E, rep);
                std::vector<RingWord> words = expand(c);
                CHECK(residue(words) == rep);
                CHECK(torsion(words) == rep.dual());
                // res contained in tor, and |C| = 2^n
                for (Row r : c.res.rows()) CHECK(c.tor.contains(r));
                CHECK(words.size() == size_t{1} << n);
            }

    QsdCode full_t = build_qsd(RingId::E, BinaryCode::zero(4));
    std::vector<RingWord> words = expand(full_t);
    CHECK(residue(words) == BinaryCode::zero(4));
    CHECK(torsion(words).dim() == 4);
}

TEST_CASE("every expanded codeword has even a- and b-support", "[qsd]") {
    for (const QsdCode& c : census_qsd(6))
        for (const RingWord& w : expand(c)) {
            int na = 0, nb = 0;
            for (int j = 0; j < w.n; ++j) {
                na += symbol_at(w, j) == 1;
                nb += symbol_at(w, j) == 2;
            }
            CHECK((na & 1) == 0);
            CHECK((nb & 1) == 0);
        }
}

TEST_CASE("transfer from E to F", "[qsd]") {
    const Ring4& f = ring(RingId::F);

    // the symbol map fixes every word; only the ambient ring changes
    QsdCode t = build_qsd(RingId::E, BinaryCode::zero(3));
    QsdCode tf = transfer_e_to_f(t);
    CHECK(tf.ring == RingId::F);
    std::vector<RingWord> before = expand(t), after = expand(tf);
    REQUIRE(before.size() == after.size());
    for (size_t i = 0; i < before.size(); ++i) {
        CHECK(after[i].s == before[i].s);
        CHECK(after[i].t == before[i].t);
    }

    // every classified QSD E-code transfers to a verified QSD F-code with
    // the same GC weight enumerator (acceptance extends this to n <= 8)
    for (const QsdCode& c : census_qsd(6)) {
        QsdCode cf = transfer_e_to_f(c);
        CHECK(is_qsd(f, expand(cf)));
        CHECK(gcw_direct(cf) == gcw_direct(c));
    }
}
