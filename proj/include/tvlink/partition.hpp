#pragma once

// Young diagrams in row convention: parts[i] is the length of row i+1.

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tvlink {

class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are weakly decreasing; zeros are dropped.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("negative part in partition");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Row length, zero past the last row (1-based row index).
    int row(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }

    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
};

inline Partition conjugate(const Partition& nu) {
    std::vector<int> out;
    if (nu.empty()) return Partition{};
    int cols = nu.parts().front();
    out.reserve(cols);
    for (int j = 1; j <= cols; ++j) {
        int h = 0;
        for (int p : nu.parts())
            if (p >= j) ++h;
        out.push_back(h);
    }
    return Partition(std::move(out));
}

struct Statistics {
    int size = 0;
    int norm_sq = 0;
    int kappa = 0;
    friend bool operator==(const Statistics&, const Statistics&) = default;
};

/// kappa = sum_i nu_i (nu_i - 2i + 1), i 1-based.
inline Statistics statistics(const Partition& nu) {
    Statistics s;
    int i = 1;
    for (int p : nu.parts()) {
        s.size += p;
        s.norm_sq += p * p;
        s.kappa += p * (p - 2 * i + 1);
        ++i;
    }
    return s;
}

inline int norm_sq(const Partition& nu) { return statistics(nu).norm_sq; }
inline int kappa(const Partition& nu) { return statistics(nu).kappa; }

struct CellStats {
    int arm = 0;
    int leg = 0;
    int hook = 1;
    friend bool operator==(const CellStats&, const CellStats&) = default;
};

/// Keyed by (row, column), both 1-based. Arm runs along the row, leg down the column.
inline std::map<std::pair<int, int>, CellStats> cell_stats(const Partition& nu) {
    std::map<std::pair<int, int>, CellStats> out;
    Partition t = conjugate(nu);
    for (std::size_t i = 1; i <= nu.length(); ++i) {
        for (int j = 1; j <= nu.row(i); ++j) {
            CellStats c;
            c.arm = nu.row(i) - j;
            c.leg = t.row(static_cast<std::size_t>(j)) - static_cast<int>(i);
            c.hook = c.arm + c.leg + 1;
            out.emplace(std::make_pair(static_cast<int>(i), j), c);
        }
    }
    return out;
}

/// eta contained in lambda, cell by cell.
inline bool contains(const Partition& lambda, const Partition& eta) {
    if (eta.length() > lambda.length()) return false;
    for (std::size_t i = 1; i <= eta.length(); ++i)
        if (eta.row(i) > lambda.row(i)) return false;
    return true;
}

namespace detail {
inline void fill_partitions(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        fill_partitions(n - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// Partitions of exactly n, reverse-lexicographic ((n) first, (1^n) last).
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    std::vector<int> cur;
    detail::fill_partitions(n, n, cur, out);
    return out;
}

/// All partitions of size 0..n, grouped by size.
inline std::vector<Partition> enumerate_up_to(int n) {
    std::vector<Partition> out;
    for (int k = 0; k <= n; ++k) {
        auto ps = partitions_of(k);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

/// Partitions contained in both a and b.
inline std::vector<Partition> common_subpartitions(const Partition& a, const Partition& b) {
    std::vector<Partition> out;
    int bound = std::min(a.size(), b.size());
    for (const auto& eta : enumerate_up_to(bound))
        if (contains(a, eta) && contains(b, eta)) out.push_back(eta);
    return out;
}

inline std::string to_string(const Partition& nu) {
    std::string s = "[";
    for (std::size_t i = 0; i < nu.length(); ++i) {
        if (i) s += ",";
        s += std::to_string(nu.parts()[i]);
    }
    return s + "]";
}

/// Parses "[2,1]", "[]", tolerating whitespace.
inline Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t') s += c;
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw std::invalid_argument("partition must look like [2,1] or []: '" + text + "'");
    std::string body = s.substr(1, s.size() - 2);
    std::vector<int> parts;
    if (!body.empty()) {
        std::size_t pos = 0;
        while (true) {
            std::size_t comma = body.find(',', pos);
            std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("bad part '" + tok + "' in partition '" + text + "'");
            int v = std::stoi(tok);
            if (v == 0) throw std::invalid_argument("zero part in partition '" + text + "'");
            parts.push_back(v);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string(e.what()) + ": '" + text + "'");
    }
}

}  // namespace tvlink
