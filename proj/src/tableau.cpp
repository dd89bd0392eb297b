#include "klcells/tableau.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klcells {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::n() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
    if (parts_.empty()) return Partition();
    std::vector<int> t(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << ")";
    return os.str();
}

bool dominanceLeq(const Partition& a, const Partition& b) {
    if (a.n() != b.n()) throw std::invalid_argument("dominanceLeq: partitions of different sizes");
    int m = std::max(a.numParts(), b.numParts());
    int sa = 0, sb = 0;
    for (int i = 0; i < m; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

bool dominanceLt(const Partition& a, const Partition& b) { return a != b && dominanceLeq(a, b); }

PartitionStats partitionStatistics(const Partition& lambda) {
    int r = 0;
    for (int i = 0; i < lambda.numParts(); ++i) r += i * lambda.part(i);
    Partition t = lambda.transpose();
    int c = 0;
    for (int i = 0; i < t.numParts(); ++i) c += i * t.part(i);
    return PartitionStats{r, c, c - r};
}

std::vector<Partition> partitionsOf(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxPart) {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxPart); p >= 1; --p) {
            cur.push_back(p);
            rec(rem - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;  // reverse-lex: (n) first, (1^n) last
}

std::vector<Partition> partitionsAbove(const Partition& lambda) {
    std::vector<Partition> out;
    int rows = lambda.numParts();
    for (int i = 0; i <= rows; ++i) {
        std::vector<int> p = lambda.parts();
        if (i < rows) {
            if (i > 0 && p[i] == p[i - 1]) continue;  // box would stick out
            p[i] += 1;
        } else {
            p.push_back(1);
        }
        out.emplace_back(std::move(p));
    }
    return out;
}

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    int total = 0;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) throw std::invalid_argument("Tableau: empty row");
        if (i > 0 && rows_[i].size() > rows_[i - 1].size())
            throw std::invalid_argument("Tableau: row lengths must weakly decrease");
        total += static_cast<int>(rows_[i].size());
    }
    std::vector<char> seen(total + 1, 0);
    for (size_t i = 0; i < rows_.size(); ++i) {
        for (size_t j = 0; j < rows_[i].size(); ++j) {
            int e = rows_[i][j];
            if (e < 1 || e > total || seen[e]) throw std::invalid_argument("Tableau: entries must be a permutation of 1..n");
            seen[e] = 1;
            if (j > 0 && rows_[i][j] <= rows_[i][j - 1]) throw std::invalid_argument("Tableau: rows must increase");
            if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) throw std::invalid_argument("Tableau: columns must increase");
        }
    }
}

int Tableau::n() const {
    int total = 0;
    for (const auto& r : rows_) total += static_cast<int>(r.size());
    return total;
}

Partition Tableau::shape() const {
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    return Partition(std::move(p));
}

Tableau Tableau::transpose() const {
    if (rows_.empty()) return Tableau();
    std::vector<std::vector<int>> cols(rows_[0].size());
    for (const auto& r : rows_)
        for (size_t j = 0; j < r.size(); ++j) cols[j].push_back(r[j]);
    return Tableau(std::move(cols));
}

Tableau Tableau::prefix(int k) const {
    std::vector<std::vector<int>> out;
    for (const auto& r : rows_) {
        std::vector<int> keep;
        for (int e : r)
            if (e <= k) keep.push_back(e);
        if (!keep.empty()) out.push_back(std::move(keep));
    }
    return Tableau(std::move(out));
}

std::pair<int, int> Tableau::position(int entry) const {
    for (size_t i = 0; i < rows_.size(); ++i)
        for (size_t j = 0; j < rows_[i].size(); ++j)
            if (rows_[i][j] == entry) return {static_cast<int>(i), static_cast<int>(j)};
    throw std::invalid_argument("Tableau::position: entry not present");
}

std::string Tableau::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_.size(); ++i) {
        if (i) os << "|";
        for (size_t j = 0; j < rows_[i].size(); ++j) os << (j ? "," : "") << rows_[i][j];
    }
    return os.str();
}

std::pair<Tableau, Tableau> rsk(const Permutation& w) {
    std::vector<std::vector<int>> P, Q;
    for (int step = 1; step <= w.rank(); ++step) {
        int x = w(step);
        size_t row = 0;
        while (true) {
            if (row == P.size()) {
                P.push_back({x});
                Q.push_back({step});
                break;
            }
            auto it = std::upper_bound(P[row].begin(), P[row].end(), x);
            if (it == P[row].end()) {
                P[row].push_back(x);
                Q[row].push_back(step);
                break;
            }
            std::swap(*it, x);
            ++row;
        }
    }
    return {Tableau(std::move(P)), Tableau(std::move(Q))};
}

Permutation rskInverse(const Tableau& P, const Tableau& Q) {
    if (P.shape() != Q.shape()) throw std::invalid_argument("rskInverse: shape mismatch");
    int n = P.n();
    std::vector<std::vector<int>> rows = P.rows();
    std::vector<int> img(n);
    for (int step = n; step >= 1; --step) {
        auto [ri, ci] = Q.position(step);
        int x = rows[ri][ci];
        rows[ri].erase(rows[ri].begin() + ci);
        for (int row = ri - 1; row >= 0; --row) {
            // entry that bumped x: the largest one smaller than x
            auto it = std::lower_bound(rows[row].begin(), rows[row].end(), x);
            --it;
            std::swap(*it, x);
        }
        img[step - 1] = x;
    }
    return Permutation(std::move(img));
}

std::vector<Tableau> standardTableaux(const Partition& shape) {
    std::vector<Tableau> out;
    int n = shape.n();
    std::vector<std::vector<int>> rows(shape.numParts());
    std::vector<int> fill(shape.numParts(), 0);
    std::function<void(int)> rec = [&](int entry) {
        if (entry > n) {
            std::vector<std::vector<int>> built(shape.numParts());
            for (int i = 0; i < shape.numParts(); ++i)
                built[i] = std::vector<int>(rows[i].begin(), rows[i].begin() + fill[i]);
            out.emplace_back(std::move(built));
            return;
        }
        for (int i = 0; i < shape.numParts(); ++i) {
            if (fill[i] >= shape.part(i)) continue;
            if (i > 0 && fill[i] >= fill[i - 1]) continue;
            if (static_cast<int>(rows[i].size()) == fill[i]) rows[i].push_back(entry);
            else rows[i][fill[i]] = entry;
            ++fill[i];
            rec(entry + 1);
            --fill[i];
        }
    };
    rec(1);
    return out;
}

long countStandardTableaux(const Partition& shape) {
    int n = shape.n();
    long num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    long hooks = 1;
    Partition t = shape.transpose();
    for (int i = 0; i < shape.numParts(); ++i)
        for (int j = 0; j < shape.part(i); ++j)
            hooks *= (shape.part(i) - j) + (t.part(j) - i) - 1;
    return num / hooks;
}

Tableau columnReadingTableau(const Partition& shape) {
    std::vector<int> cols = shape.columnSizes();
    std::vector<std::vector<int>> rows(shape.numParts());
    int next = 1;
    for (size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < cols[j]; ++i) rows[i].push_back(next++);
    return Tableau(std::move(rows));
}

Tableau rowReadingTableau(const Partition& shape) {
    std::vector<std::vector<int>> rows(shape.numParts());
    int next = 1;
    for (int i = 0; i < shape.numParts(); ++i)
        for (int j = 0; j < shape.part(i); ++j) rows[i].push_back(next++);
    return Tableau(std::move(rows));
}

}  // namespace klcells
