#pragma once

#include "klcells/hecke.hpp"
#include "klcells/tableau.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace klcells {

struct MathasDecomposition {
    int signExponent;       // c(lambda)
    int vPower;             // x(lambda)
    Permutation head;       // the surviving cell-level term
    HeckeElement remainder;  // KL basis, supported strictly below lambda
};

struct PPropertyReport {
    bool ok = true;
    long checksRun = 0;
    std::vector<std::string> failures;
    void fail(const std::string& witness) {
        ok = false;
        if (failures.size() < 32) failures.push_back(witness);
    }
};

// Cell-theoretic layer over a HeckeContext: RSK symbols for every element,
// r/Delta statistics, distinguished involutions, the asymptotic J-ring,
// the cellular form, and the Schutzenberger/Mathas machinery.
class CellContext {
public:
    static std::shared_ptr<CellContext> get(int n);
    explicit CellContext(std::shared_ptr<HeckeContext> hecke);

    HeckeContext& hecke() { return *hecke_; }
    int rank() const { return hecke_->rank(); }

    const Tableau& pSymbol(std::uint32_t w) const { return pSymbols_[w]; }
    const Tableau& qSymbol(std::uint32_t w) const { return qSymbols_[w]; }
    const Partition& shapeOf(std::uint32_t w) const { return shapes_[shapeId_[w]]; }
    int shapeIdOf(std::uint32_t w) const { return shapeId_[w]; }
    Permutation elementOf(const Tableau& P, const Tableau& Q) const { return rskInverse(P, Q); }

    const std::vector<Partition>& shapes() const { return shapes_; }
    int shapeIndex(const Partition& lambda) const;
    std::vector<std::uint32_t> cellMembers(const Partition& lambda) const;
    std::vector<std::uint32_t> leftCellMembers(const Tableau& Q) const;

    int rOfShape(const Partition& lambda) const { return partitionStatistics(lambda).r; }
    // Dual-route r: row statistic of the RSK shape against the minimal
    // v-power in c^d_{d,d}; throws on disagreement.
    int rFunction(const Permutation& w);
    int delta(const Permutation& w);
    int deltaPair(const Tableau& P, const Tableau& Q);
    int dStat(const Tableau& P, const Tableau& Q);

    // Dual-route: involutions w(P,P) of the shape against {Delta = r}.
    std::vector<Permutation> distinguishedInvolutions(const Partition& lambda);

    long jConstant(const Permutation& x, const Permutation& y, const Permutation& z);
    std::map<Permutation, long> jMultiply(const Permutation& x, const Permutation& y);

    // Cellular form phi(Q, U); computed for one (P, V) pick and verified
    // against a second when the shape admits one.
    Laurent cellularForm(const Tableau& Q, const Tableau& U);
    int aStat(const Tableau& P, const Tableau& Q);

    Tableau schutzenbergerDual(const Tableau& P) const;
    // Dual-route Schutzenberger: combinatorial image against the Mathas head.
    Permutation schutzenbergerL(const Permutation& w);
    Permutation schutzenbergerR(const Permutation& w);
    MathasDecomposition mathasDecompose(const Permutation& y);

    PPropertyReport verifyPProperties();

    // mu-graph cell order (transitive closures; built on first use)
    bool leftCellLeq(std::uint32_t x, std::uint32_t y);    // x <=_L y
    bool rightCellLeq(std::uint32_t x, std::uint32_t y);   // x <=_R y
    bool twoSidedCellLeq(std::uint32_t x, std::uint32_t y);
    // Cell partitions recovered from the closure alone (no RSK), as vectors
    // of sorted member lists; expensive, gated by the caller.
    std::vector<std::vector<std::uint32_t>> closureTwoSidedCells();
    std::vector<std::vector<std::uint32_t>> closureLeftCells();

private:
    void ensureReachability();
    std::vector<std::vector<std::uint32_t>> sccPartition(const std::vector<std::uint64_t>& reach);
    bool reachBit(const std::vector<std::uint64_t>& reach, std::uint32_t x, std::uint32_t y) const;

    std::shared_ptr<HeckeContext> hecke_;
    std::vector<Tableau> pSymbols_, qSymbols_;
    std::vector<int> shapeId_;
    std::vector<Partition> shapes_;

    bool reachReady_ = false;
    std::size_t maskWords_ = 0;
    std::vector<std::uint64_t> reachL_, reachR_, reachLR_;  // row-major bitsets
};

}  // namespace klcells
