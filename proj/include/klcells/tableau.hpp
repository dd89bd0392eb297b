#pragma once

#include "klcells/permutation.hpp"

#include <string>
#include <vector>

namespace klcells {

// Partition of n, parts weakly decreasing and positive.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    int n() const;
    int numParts() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < numParts() ? parts_[i] : 0; }  // 0-based
    const std::vector<int>& parts() const { return parts_; }

    Partition transpose() const;
    std::vector<int> columnSizes() const { return transpose().parts_; }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }  // container order

    std::string str() const;

private:
    std::vector<int> parts_;
};

// Dominance order; only defined between partitions of the same n.
bool dominanceLeq(const Partition& a, const Partition& b);
bool dominanceLt(const Partition& a, const Partition& b);

// Row, column and content statistics: r = sum of (row index), c = r of the
// transpose, x = c - r, rows/columns counted from zero.
struct PartitionStats {
    int r, c, x;
};
PartitionStats partitionStatistics(const Partition& lambda);

std::vector<Partition> partitionsOf(int n);
// Partitions of n+1 whose diagram contains lambda.
std::vector<Partition> partitionsAbove(const Partition& lambda);

// Standard Young tableau; rows increase left to right, columns top to bottom,
// entries are exactly 1..n.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);  // validated

    int n() const;
    Partition shape() const;
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Tableau transpose() const;
    // The first k boxes (entries 1..k), again standard.
    Tableau prefix(int k) const;
    // Row/column coordinates (0-based) of the given entry.
    std::pair<int, int> position(int entry) const;

    bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
    bool operator!=(const Tableau& o) const { return rows_ != o.rows_; }
    bool operator<(const Tableau& o) const { return rows_ < o.rows_; }

    std::string str() const;

private:
    std::vector<std::vector<int>> rows_;
};

// Robinson-Schensted: w -> (P, Q) with P the insertion and Q the recording
// tableau of the sequence w(1), ..., w(n).
std::pair<Tableau, Tableau> rsk(const Permutation& w);
Permutation rskInverse(const Tableau& P, const Tableau& Q);

std::vector<Tableau> standardTableaux(const Partition& shape);
long countStandardTableaux(const Partition& shape);  // hook length formula

// Columns filled top to bottom, left to right: 1..k_1 down the first column,
// and so on.
Tableau columnReadingTableau(const Partition& shape);
Tableau rowReadingTableau(const Partition& shape);

}  // namespace klcells
