#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "qsdna/binary_code.hpp"

using namespace qsdna;

namespace {

BinaryCode code_of(int n, std::initializer_list<const char*> rows) {
    std::vector<Row> packed;
    for (const char* r : rows) packed.push_back(row_from_string(r));
    return BinaryCode::from_rows(n, packed);
}

BinaryCode random_code(std::mt19937& rng, int n, int target_k) {
    std::uniform_int_distribution<Row> dist(0, (Row{1} << n) - 1);
    std::vector<Row> rows;
    for (int i = 0; i < target_k; ++i) rows.push_back(dist(rng));
    return BinaryCode::from_rows(n, rows);
}

}  // namespace

TEST_CASE("dual codes", "[gf2]") {
    BinaryCode b = code_of(5, {"11000", "00110"});
    BinaryCode expected = code_of(5, {"11000", "00110", "00001"});
    CHECK(b.dual() == expected);

    BinaryCode full = code_of(3, {"100", "010", "001"});
    CHECK(full.dual() == BinaryCode::zero(3));
    CHECK(BinaryCode::zero(3).dual() == full);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BinaryCode c = random_code(rng, 8, 3);
        BinaryCode d = c.dual();
        CHECK(c.dim() + d.dim() == 8);
        CHECK(d.dual() == c);
        for (Row u : c.rows())
            for (Row v : d.rows()) CHECK((popcount(u & v) & 1) == 0);
    }
}

TEST_CASE("self-orthogonality", "[gf2]") {
    CHECK(code_of(5, {"11000", "00110"}).is_self_orthogonal());
    CHECK_FALSE(code_of(2, {"10"}).is_self_orthogonal());
    CHECK(code_of(4, {"1111"}).is_self_orthogonal());
    CHECK_FALSE(code_of(4, {"1110"}).is_self_orthogonal());

    // self-orthogonal iff contained in own dual
    std::mt19937 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        BinaryCode c = random_code(rng, 7, 3);
        BinaryCode d = c.dual();
        bool contained = true;
        for (Row r : c.rows()) contained &= d.contains(r);
        CHECK(c.is_self_orthogonal() == contained);
    }
}

TEST_CASE("weight distribution", "[gf2]") {
    BinaryCode one = code_of(6, {"111100"});
    auto dist = one.weight_distribution();
    CHECK(dist[0] == 1);
    CHECK(dist[4] == 1);
    CHECK(std::accumulate(dist.begin(), dist.end(), uint64_t{0}) == 2);

    auto zero_dist = BinaryCode::zero(4).weight_distribution();
    CHECK(zero_dist[0] == 1);
    CHECK(std::accumulate(zero_dist.begin(), zero_dist.end(), uint64_t{0}) == 1);

    BinaryCode even = code_of(6, {"110000", "001100", "000011"});
    auto ed = even.weight_distribution();
    CHECK(std::accumulate(ed.begin(), ed.end(), uint64_t{0}) == 8);
    for (int i = 1; i <= 6; i += 2) CHECK(ed[i] == 0);
}

TEST_CASE("column permutations", "[gf2]") {
    BinaryCode c = code_of(5, {"11000"});
    std::vector<int> identity = {0, 1, 2, 3, 4};
    CHECK(c.permuted(identity) == c);

    std::vector<int> swap13 = {2, 1, 0, 3, 4};
    CHECK(c.permuted(swap13) == code_of(5, {"01100"}));

    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        BinaryCode r = random_code(rng, 8, 4);
        std::vector<int> perm(8);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(r.permuted(perm).weight_distribution() == r.weight_distribution());
    }
}

TEST_CASE("hamming distance and intersection weight", "[gf2]") {
    BitRow u{4, row_from_string("1100")};
    BitRow v{4, row_from_string("0110")};
    CHECK(hamming_distance(u, v) == 2);
    CHECK(hamming_distance(u, u) == 0);
    CHECK(intersection_weight(u, v) == 1);

    // two overlapping generators: the intersection weight recovers the
    // overlap part of the support decomposition
    BitRow a1{8, row_from_string("11110000")};
    BitRow a2{8, row_from_string("00111100")};
    CHECK(intersection_weight(a1, a2) == 2);

    CHECK_THROWS_AS(hamming_distance(u, BitRow{5, 0}), Error);
    CHECK_THROWS_AS(intersection_weight(u, BitRow{5, 0}), Error);
}

TEST_CASE("RREF canonical storage", "[gf2]") {
    // idempotent: constructing from the stored rows reproduces the code
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        BinaryCode c = random_code(rng, 9, 4);
        CHECK(BinaryCode::from_rows(9, c.rows()) == c);
    }

    // dependent generators collapse
    BinaryCode c = code_of(4, {"1100", "0011", "1111"});
    CHECK(c.dim() == 2);

    // membership
    CHECK(c.contains(row_from_string("1111")));
    CHECK_FALSE(c.contains(row_from_string("1000")));
}

TEST_CASE("ascii and hex round trips", "[gf2][formats]") {
    BinaryCode c = code_of(5, {"11000", "00110"});
    CHECK(from_ascii(to_ascii(c)) == c);
    CHECK(from_hex(to_hex(c)) == c);
    CHECK(to_ascii(c) == "11000\n00110\n");

    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        BinaryCode r = random_code(rng, 10, 5);
        CHECK(from_ascii(to_ascii(r), 10) == r);
        CHECK(from_hex(to_hex(r)) == r);
    }

    CHECK_THROWS_AS(from_ascii("110\n01\n"), Error);
    CHECK_THROWS_AS(row_from_string("10x"), Error);
}
