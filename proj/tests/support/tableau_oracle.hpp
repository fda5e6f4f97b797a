#pragma once

// Skew Schur functions by brute-force enumeration of semistandard tableaux.
// Independent of the Jacobi-Trudi path in the library: no h_k, no
// determinants, only fillings of the skew diagram.

#include "tvlink/qseries.hpp"
#include "tvlink/specialize.hpp"

#include <string>
#include <vector>

namespace oracle {

using tvlink::LP;
using tvlink::Monomial;
using tvlink::Partition;

/// Sum of x^T over SSYT of shape lambda/eta with entries in `letters`
/// (ordered), keeping only terms whose doubled q exponent is <= bound.
/// The truncation is exact provided every letter not listed has q exponent
/// above what any tableau within the bound could use.
class TableauSum {
public:
    TableauSum(const Partition& lambda, const Partition& eta, std::vector<Monomial> letters, int bound)
        : letters_(std::move(letters)), bound_(bound) {
        for (std::size_t i = 1; i <= lambda.length(); ++i)
            for (int j = eta.row(i) + 1; j <= lambda.row(i); ++j) cells_.push_back({static_cast<int>(i), j});
        min_ex_ = 0;
        for (std::size_t k = 0; k < letters_.size(); ++k)
            if (k == 0 || letters_[k].ex < min_ex_) min_ex_ = letters_[k].ex;
        rows_ = lambda.length();
        cols_ = lambda.empty() ? 0 : lambda.row(1);
        fill_.assign((rows_ + 2) * (static_cast<std::size_t>(cols_) + 2), -1);
    }

    LP sum() {
        terms_.clear();
        recurse(0, Monomial{});
        return LP::from_terms(std::move(terms_));
    }

private:
    struct Cell {
        int i, j;
    };
    std::vector<Monomial> letters_;
    int bound_;
    int min_ex_ = 0;
    std::vector<Cell> cells_;
    std::size_t rows_ = 0;
    int cols_ = 0;
    std::vector<int> fill_;  // letter index per cell, -1 outside the skew shape
    std::vector<LP::Term> terms_;

    int& at(int i, int j) { return fill_[static_cast<std::size_t>(i) * (static_cast<std::size_t>(cols_) + 2) + static_cast<std::size_t>(j)]; }

    void recurse(std::size_t k, Monomial weight) {
        if (k == cells_.size()) {
            terms_.push_back({weight, 1});
            return;
        }
        const auto [i, j] = cells_[k];
        // rows weakly increase left to right, columns strictly increase downward
        int lo = 0;
        if (j > 1 && at(i, j - 1) >= 0) lo = std::max(lo, at(i, j - 1));
        if (i > 1 && at(i - 1, j) >= 0) lo = std::max(lo, at(i - 1, j) + 1);
        const int remaining = static_cast<int>(cells_.size() - k - 1);
        for (int x = lo; x < static_cast<int>(letters_.size()); ++x) {
            const Monomial w = weight * letters_[static_cast<std::size_t>(x)];
            if (w.ex + remaining * min_ex_ > bound_) continue;
            at(i, j) = x;
            recurse(k + 1, w);
        }
        at(i, j) = -1;
    }
};

/// Leading letters of an alphabet whose q exponents can still contribute to a
/// tableau of `cells` boxes with doubled q weight <= bound. Requires the
/// alphabet's q exponents to grow without bound along the tail.
inline std::vector<Monomial> letters_within(const tvlink::Alphabet& a, int cells, int bound) {
    int lowest = 0;
    for (std::size_t k = 0; k < a.prefix.size() + 1; ++k) {
        const int e = a.letter(k).ex;
        if (k == 0 || e < lowest) lowest = e;
    }
    const int cap = bound - (cells > 0 ? cells - 1 : 0) * lowest;
    // prefix letters above the cap stay so that letter order is preserved;
    // the walk prunes them anyway
    std::vector<Monomial> out(a.prefix);
    if (a.finite()) return out;
    for (std::size_t k = a.prefix.size();; ++k) {
        const Monomial m = a.letter(k);
        if (m.ex > cap) break;
        out.push_back(m);
    }
    return out;
}

inline LP skew_schur_truncated(const Partition& lambda, const Partition& eta, const tvlink::Alphabet& a, int bound) {
    const int cells = lambda.size() - eta.size();
    TableauSum ts(lambda, eta, letters_within(a, cells, bound), bound);
    return ts.sum();
}

}  // namespace oracle
