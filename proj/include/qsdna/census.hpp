#pragma once

// Classification of binary self-orthogonal [n,k] codes up to permutation
// equivalence. Each [n,k] class is reached by extending an [n,k-1]
// representative with one even-weight vector from its orthogonal space;
// children are canonicalized and deduplicated, so the per-cell lists are
// complete and contain exactly one member per equivalence class.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qsdna/binary_code.hpp"
#include "qsdna/canonical.hpp"
#include "qsdna/parallel.hpp"

namespace qsdna {

class BudgetError : public Error {
  public:
    explicit BudgetError(const std::string& what) : Error(what) {}
};

struct CensusOptions {
    int max_n = 12;  // hard length cap; raising it is the caller's choice
    std::optional<std::chrono::milliseconds> budget;
    int jobs = 1;
};

struct CensusEntry {
    int n = 0;
    int k = 0;
    std::vector<BinaryCode> representatives;  // sorted by canonical rows
    size_t count() const { return representatives.size(); }
};

class SoCensus {
  public:
    explicit SoCensus(CensusOptions opts = {}) : opts_(opts), start_(Clock::now()) {}

    const CensusEntry& entry(int n, int k) {
        if (n < 1 || k < 0) throw Error("classify_so: bad parameters");
        if (n > opts_.max_n)
            throw BudgetError("classify_so: n exceeds configured limit (" + std::to_string(opts_.max_n) + ")");
        if (2 * k > n) {  // self-orthogonal forces k <= n/2
            static thread_local CensusEntry empty;
            empty = CensusEntry{n, k, {}};
            return empty;
        }
        auto it = cache_.find({n, k});
        if (it != cache_.end()) return it->second;
        CensusEntry e = build(n, k);
        return cache_.emplace(std::make_pair(n, k), std::move(e)).first->second;
    }

  private:
    using Clock = std::chrono::steady_clock;

    void check_budget() const {
        if (opts_.budget && Clock::now() - start_ > *opts_.budget)
            throw BudgetError("classify_so: time budget exceeded");
    }

    // Even-weight vectors orthogonal to every row of P: the nullspace of P's
    // rows stacked with the all-ones row (v.v = wt(v) mod 2 over GF(2)).
    static std::vector<Row> extension_candidates(const BinaryCode& p) {
        const int n = p.length();
        std::vector<Row> stacked(p.rows());
        stacked.push_back((Row{1} << n) - 1);
        BinaryCode constraints = BinaryCode::from_rows(n, stacked);
        return constraints.dual().codewords();
    }

    CensusEntry build(int n, int k) {
        check_budget();
        CensusEntry out{n, k, {}};
        if (k == 0) {
            out.representatives.push_back(BinaryCode::zero(n));
            return out;
        }
        const CensusEntry& parents = entry(n, k - 1);
        std::vector<std::set<BinaryCode>> partial(
            std::max<size_t>(1, parents.representatives.size()));
        parallel_for(opts_.jobs, parents.representatives.size(), [&](size_t lo, size_t hi) {
            for (size_t pi = lo; pi < hi; ++pi) {
                const BinaryCode& parent = parents.representatives[pi];
                std::vector<Row> rows(parent.rows());
                rows.push_back(0);
                // each child span contains 2^(k-1) extension vectors; dedup
                // by literal RREF before paying for a canonical form
                std::set<std::vector<Row>> spans;
                for (Row v : extension_candidates(parent)) {
                    if (v == 0 || parent.contains(v)) continue;
                    rows.back() = v;
                    spans.insert(BinaryCode::from_rows(n, rows).rows());
                }
                for (const std::vector<Row>& span : spans)
                    partial[pi].insert(canonical_form(BinaryCode::from_rows(n, span)).code);
            }
        });
        check_budget();
        std::set<BinaryCode> classes;
        for (const auto& part : partial) classes.insert(part.begin(), part.end());
        out.representatives.assign(classes.begin(), classes.end());
        return out;
    }

    CensusOptions opts_;
    Clock::time_point start_;
    std::map<std::pair<int, int>, CensusEntry> cache_;
};

inline CensusEntry classify_so(int n, int k, const CensusOptions& opts = {}) {
    SoCensus census(opts);
    return census.entry(n, k);
}

// Puncture the two support positions of a weight-2 codeword: a self-orthogonal
// [n,k] code with minimum distance 2 maps to a self-orthogonal [n-2,k-1] code.
inline BinaryCode reduce_d2(const BinaryCode& c) {
    const int n = c.length();
    Row w2 = 0;
    for (Row w : c.codewords())
        if (popcount(w) == 2) {
            w2 = w;
            break;
        }
    if (!w2) throw Error("reduce_d2: code has no weight-2 word");
    if (n < 3) throw Error("reduce_d2: length too small to puncture");
    std::vector<Row> out;
    for (Row w : c.codewords()) {
        Row v = 0;
        for (int j = 0; j < n; ++j) {
            if (get_col(w2, n, j)) continue;
            v = (v << 1) | static_cast<Row>(get_col(w, n, j));
        }
        out.push_back(v);
    }
    return BinaryCode::from_words(n - 2, out);
}

inline size_t count_with_weight2(const CensusEntry& e) {
    size_t c = 0;
    for (const BinaryCode& rep : e.representatives) c += rep.has_weight2_word();
    return c;
}

}  // namespace qsdna
