#pragma once

// Permutation-equivalence canonical form for binary codes.
//
// The canonical layout is the column ordering that maximizes the ascending
// list of codeword values, found by placing columns left to right and keeping
// every ordering that ties for the running optimum. Two codes are equivalent
// iff their canonical codeword sets agree; comparisons at each level only
// depend on the sorted prefix multiset, which all surviving branches share.
// Columns with identical content across all codewords are interchangeable, so
// only the lowest-index member of such a class is ever branched on.

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "qsdna/binary_code.hpp"

namespace qsdna {

// Raised when the tie set outgrows the node cap; codes this symmetric are
// handled by the pairwise backtracking test below instead.
class CanonicalExplosion : public Error {
  public:
    explicit CanonicalExplosion(const std::string& what) : Error(what) {}
};

struct CanonicalForm {
    BinaryCode code;        // RREF of the canonical codeword set
    std::vector<int> perm;  // perm[j] = original column at canonical position j
};

namespace detail {

struct CanonNode {
    uint64_t used = 0;
    std::vector<uint8_t> used_classes;  // per column class, how many placed
    std::vector<uint32_t> prefix;       // per codeword, bits of the placed columns
    std::vector<uint8_t> order;
};

}  // namespace detail

inline CanonicalForm canonical_form(const BinaryCode& c) {
    const int n = c.length();
    if (n > 24) throw Error("canonical_form: length out of supported range");
    std::vector<Row> words = c.codewords();
    std::sort(words.begin(), words.end());
    const size_t m = words.size();

    // Column content classes: identical columns are interchangeable.
    std::vector<std::vector<uint8_t>> colvec(n, std::vector<uint8_t>(m));
    for (int j = 0; j < n; ++j)
        for (size_t i = 0; i < m; ++i) colvec[j][i] = static_cast<uint8_t>(get_col(words[i], n, j));
    std::vector<int> col_class(n);
    int num_classes = 0;
    {
        std::vector<int> reps;
        for (int j = 0; j < n; ++j) {
            int cls = -1;
            for (size_t r = 0; r < reps.size(); ++r)
                if (colvec[reps[r]] == colvec[j]) {
                    cls = static_cast<int>(r);
                    break;
                }
            if (cls < 0) {
                cls = static_cast<int>(reps.size());
                reps.push_back(j);
            }
            col_class[j] = cls;
        }
        num_classes = static_cast<int>(reps.size());
    }

    std::vector<detail::CanonNode> nodes(1);
    nodes[0].prefix.assign(m, 0);
    nodes[0].used_classes.assign(num_classes, 0);

    std::vector<uint16_t> rank(m);
    for (int level = 0; level < n; ++level) {
        std::vector<int> best_key;
        std::vector<std::pair<size_t, int>> winners;  // (node index, column)
        for (size_t ni = 0; ni < nodes.size(); ++ni) {
            const detail::CanonNode& node = nodes[ni];
            // Dense group ids by prefix value; identical across nodes since
            // all nodes at a level share the same sorted prefix multiset.
            std::vector<uint32_t> distinct(node.prefix);
            std::sort(distinct.begin(), distinct.end());
            distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
            for (size_t i = 0; i < m; ++i)
                rank[i] = static_cast<uint16_t>(
                    std::lower_bound(distinct.begin(), distinct.end(), node.prefix[i]) - distinct.begin());
            const size_t groups = distinct.size();

            uint64_t seen_class = 0;
            for (int col = 0; col < n; ++col) {
                if (node.used & (uint64_t{1} << col)) continue;
                uint64_t cls_bit = uint64_t{1} << col_class[col];
                if (seen_class & cls_bit) continue;
                seen_class |= cls_bit;
                std::vector<int> key(groups, 0);
                for (size_t i = 0; i < m; ++i) key[rank[i]] += colvec[col][i];
                if (winners.empty() || key > best_key) {
                    best_key = std::move(key);
                    winners.clear();
                    winners.emplace_back(ni, col);
                } else if (key == best_key) {
                    winners.emplace_back(ni, col);
                }
            }
        }

        std::vector<detail::CanonNode> next;
        next.reserve(winners.size());
        for (auto [ni, col] : winners) {
            detail::CanonNode node = nodes[ni];
            node.used |= uint64_t{1} << col;
            node.used_classes[col_class[col]]++;
            node.order.push_back(static_cast<uint8_t>(col));
            for (size_t i = 0; i < m; ++i)
                node.prefix[i] = (node.prefix[i] << 1) | colvec[col][i];
            next.push_back(std::move(node));
        }
        // Futures depend only on the per-codeword prefixes and on which
        // column *classes* remain; interchangeable members collapse here.
        std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) {
            return std::tie(a.used_classes, a.prefix) < std::tie(b.used_classes, b.prefix);
        });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const auto& a, const auto& b) {
                                   return a.used_classes == b.used_classes && a.prefix == b.prefix;
                               }),
                   next.end());
        if (next.size() > 100000)
            throw CanonicalExplosion("canonical_form: tie set exceeds the node cap");
        nodes = std::move(next);
    }

    const detail::CanonNode& final_node = nodes.front();
    std::vector<Row> canon_words(final_node.prefix.begin(), final_node.prefix.end());
    CanonicalForm out{BinaryCode::from_words(n, canon_words), {}};
    out.perm.assign(final_node.order.begin(), final_node.order.end());
    return out;
}

inline bool equivalent(const BinaryCode& a, const BinaryCode& b) {
    if (a.length() != b.length() || a.dim() != b.dim()) return false;
    return canonical_form(a).code == canonical_form(b).code;
}

}  // namespace qsdna
