#pragma once

// Bit-packed binary linear codes: generator matrices in reduced row-echelon
// form, duals, self-orthogonality, weight distributions, column permutations.
//
// A row of length n packs column j (0-based, leftmost first) at bit n-1-j, so
// integer comparison of rows is the left-to-right lexicographic comparison.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "qsdna/ring.hpp"

namespace qsdna {

using Row = uint64_t;

inline int popcount(Row x) { return std::popcount(x); }

inline Row col_bit(int n, int j) { return Row{1} << (n - 1 - j); }

inline int get_col(Row r, int n, int j) { return static_cast<int>((r >> (n - 1 - j)) & 1); }

struct BitRow {
    int n = 0;
    Row bits = 0;
};

inline int hamming_distance(const BitRow& u, const BitRow& v) {
    if (u.n != v.n) throw Error("hamming_distance: length mismatch");
    return popcount(u.bits ^ v.bits);
}

inline int intersection_weight(const BitRow& u, const BitRow& v) {
    if (u.n != v.n) throw Error("intersection_weight: length mismatch");
    return popcount(u.bits & v.bits);
}

namespace detail {

// In-place reduced row echelon form; returns the rank. Pivots are the
// leftmost columns, rows end up ordered by pivot column.
inline int rref(int n, std::vector<Row>& rows) {
    size_t r = 0;
    for (int col = 0; col < n && r < rows.size(); ++col) {
        Row bit = col_bit(n, col);
        size_t piv = r;
        while (piv < rows.size() && !(rows[piv] & bit)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        ++r;
    }
    rows.resize(r);
    return static_cast<int>(r);
}

}  // namespace detail

class BinaryCode {
  public:
    BinaryCode() = default;

    static BinaryCode zero(int n) { return BinaryCode(n, {}); }

    static BinaryCode from_rows(int n, std::vector<Row> rows) {
        detail::rref(n, rows);
        return BinaryCode(n, std::move(rows));
    }

    // Span of an arbitrary word set (e.g. an expanded codeword list).
    static BinaryCode from_words(int n, const std::vector<Row>& words) {
        std::vector<Row> rows(words);
        detail::rref(n, rows);
        return BinaryCode(n, std::move(rows));
    }

    int length() const { return n_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    const std::vector<Row>& rows() const { return rows_; }

    bool contains(Row w) const {
        for (Row r : rows_) {
            if (!w) break;
            Row pivot = Row{1} << (63 - std::countl_zero(r));
            if (w & pivot) w ^= r;
        }
        return w == 0;
    }

    std::vector<Row> codewords() const {
        std::vector<Row> words(size_t{1} << rows_.size(), 0);
        for (size_t i = 0; i < rows_.size(); ++i) {
            size_t half = size_t{1} << i;
            for (size_t m = 0; m < half; ++m) words[half + m] = words[m] ^ rows_[i];
        }
        return words;
    }

    BinaryCode dual() const {
        std::vector<int> pivots;
        std::vector<bool> is_pivot(n_, false);
        for (Row r : rows_) {
            int col = n_ - 1 - (63 - std::countl_zero(r));
            pivots.push_back(col);
            is_pivot[col] = true;
        }
        std::vector<Row> out;
        for (int f = 0; f < n_; ++f) {
            if (is_pivot[f]) continue;
            Row v = col_bit(n_, f);
            for (size_t i = 0; i < rows_.size(); ++i)
                if (get_col(rows_[i], n_, f)) v |= col_bit(n_, pivots[i]);
            out.push_back(v);
        }
        detail::rref(n_, out);
        return BinaryCode(n_, std::move(out));
    }

    bool is_self_orthogonal() const {
        for (size_t i = 0; i < rows_.size(); ++i)
            for (size_t j = i; j < rows_.size(); ++j)
                if (popcount(rows_[i] & rows_[j]) & 1) return false;
        return true;
    }

    // A[i] = number of codewords of weight i, exact, by full enumeration.
    std::vector<uint64_t> weight_distribution() const {
        std::vector<uint64_t> dist(n_ + 1, 0);
        for (Row w : codewords()) ++dist[popcount(w)];
        return dist;
    }

    int min_weight() const {  // 0 for the zero code
        int best = dim() == 0 ? 0 : n_ + 1;
        for (Row w : codewords())
            if (w) best = std::min(best, popcount(w));
        return dim() == 0 ? 0 : best;
    }

    bool has_weight2_word() const {
        for (Row w : codewords())
            if (popcount(w) == 2) return true;
        return false;
    }

    // perm[j] = source column for target column j.
    BinaryCode permuted(const std::vector<int>& perm) const {
        std::vector<Row> out;
        out.reserve(rows_.size());
        for (Row r : rows_) {
            Row v = 0;
            for (int j = 0; j < n_; ++j)
                if (get_col(r, n_, perm[j])) v |= col_bit(n_, j);
            out.push_back(v);
        }
        detail::rref(n_, out);
        return BinaryCode(n_, std::move(out));
    }

    bool operator==(const BinaryCode& o) const { return n_ == o.n_ && rows_ == o.rows_; }
    bool operator<(const BinaryCode& o) const {
        if (n_ != o.n_) return n_ < o.n_;
        if (rows_.size() != o.rows_.size()) return rows_.size() < o.rows_.size();
        return rows_ < o.rows_;
    }

  private:
    BinaryCode(int n, std::vector<Row> rows) : n_(n), rows_(std::move(rows)) {
        if (n < 1 || n > 62) throw Error("BinaryCode: length out of range");
    }

    int n_ = 0;
    std::vector<Row> rows_;
};

// ---- ASCII / hex row formats ----

inline std::string row_to_string(Row r, int n) {
    std::string s(n, '0');
    for (int j = 0; j < n; ++j)
        if (get_col(r, n, j)) s[j] = '1';
    return s;
}

inline Row row_from_string(std::string_view s) {
    Row r = 0;
    for (char ch : s) {
        if (ch != '0' && ch != '1') throw Error("bad generator row character");
        r = (r << 1) | static_cast<Row>(ch == '1');
    }
    return r;
}

inline std::string to_ascii(const BinaryCode& c) {
    std::string out;
    for (Row r : c.rows()) {
        out += row_to_string(r, c.length());
        out += '\n';
    }
    return out;
}

// Parses one 0/1 row per line; blank lines and spaces inside rows are ignored.
inline BinaryCode from_ascii(const std::string& text, int n = 0) {
    std::vector<Row> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string bits;
        for (char ch : line)
            if (ch == '0' || ch == '1') bits += ch;
        if (bits.empty()) continue;
        if (n == 0) n = static_cast<int>(bits.size());
        if (static_cast<int>(bits.size()) != n) throw Error("generator rows have unequal length");
        rows.push_back(row_from_string(bits));
    }
    if (n == 0) throw Error("no generator rows found");
    return BinaryCode::from_rows(n, rows);
}

// Compact single-line form "n:k:hex,hex,..." used by golden files.
inline std::string to_hex(const BinaryCode& c) {
    std::ostringstream out;
    out << c.length() << ':' << c.dim() << ':';
    for (size_t i = 0; i < c.rows().size(); ++i) {
        if (i) out << ',';
        out << std::hex << c.rows()[i];
    }
    return out.str();
}

inline BinaryCode from_hex(const std::string& text) {
    std::istringstream in(text);
    int n = 0, k = 0;
    char sep = 0;
    if (!(in >> n >> sep >> k) || sep != ':') throw Error("bad hex code header");
    in >> sep;
    std::vector<Row> rows;
    for (int i = 0; i < k; ++i) {
        Row r = 0;
        if (!(in >> std::hex >> r)) throw Error("bad hex code row");
        rows.push_back(r);
        if (i + 1 < k) in >> sep;
    }
    BinaryCode c = BinaryCode::from_rows(n, rows);
    if (c.dim() != k) throw Error("hex code rows are linearly dependent");
    return c;
}

}  // namespace qsdna
