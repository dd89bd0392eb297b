#pragma once

#include "klcells/laurent.hpp"
#include "klcells/permutation.hpp"

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace klcells {

enum class Basis { Standard, KL };

// Sparse Hecke algebra element over Z[v,v^-1] in a tagged basis.  Terms are
// trimmed; keys all share the element's rank.
struct HeckeElement {
    int n = 1;
    Basis basis = Basis::Standard;
    std::map<Permutation, Laurent> terms;

    static HeckeElement zero(int n, Basis b) { return HeckeElement{n, b, {}}; }
    static HeckeElement unit(int n, Basis b);
    static HeckeElement basisElement(int n, Basis b, const Permutation& w);

    bool isZero() const { return terms.empty(); }
    Laurent coeff(const Permutation& w) const;
    void addTerm(const Permutation& w, const Laurent& c);

    HeckeElement& operator+=(const HeckeElement& o);
    HeckeElement& operator-=(const HeckeElement& o);
    HeckeElement operator+(const HeckeElement& o) const { HeckeElement r = *this; r += o; return r; }
    HeckeElement operator-(const HeckeElement& o) const { HeckeElement r = *this; r -= o; return r; }
    HeckeElement scaled(const Laurent& c) const;
    bool operator==(const HeckeElement& o) const;
    bool operator!=(const HeckeElement& o) const { return !(*this == o); }

    std::string str() const;
};

// Compact polynomial for the KL table: int64 coefficients with overflow
// checks (KL polynomials at desk scale have tiny coefficients; an overflow
// raises rather than truncating).
struct KLTerm {
    std::int16_t exp;
    std::int64_t coeff;
    bool operator==(const KLTerm& o) const { return exp == o.exp && coeff == o.coeff; }
};
using KLPoly = std::vector<KLTerm>;  // ascending exponents, no zeros
Laurent klPolyToLaurent(const KLPoly& p);

using KLRow = std::vector<std::pair<std::uint32_t, KLPoly>>;  // sorted by element index

// Per-rank engine: element indexing, generator multiplication tables, and the
// memoized Kazhdan-Lusztig table.  Table construction is the only stateful
// part; it is serialized by a mutex and rows are immutable once built, so all
// algebra operations afterwards are pure and safe in parallel.
class HeckeContext {
public:
    static std::shared_ptr<HeckeContext> get(int n);
    explicit HeckeContext(int n);

    int rank() const { return n_; }
    std::uint32_t order() const { return order_; }
    std::uint32_t index(const Permutation& w) const;
    const Permutation& element(std::uint32_t i) const { return elements_[i]; }
    int length(std::uint32_t i) const { return lengths_[i]; }
    int maxLength() const { return n_ * (n_ - 1) / 2; }
    std::uint32_t identityIndex() const { return idIndex_; }
    std::uint32_t longestIndex() const { return w0Index_; }
    std::uint32_t leftMulGen(int s, std::uint32_t w) const;
    std::uint32_t rightMulGen(std::uint32_t w, int s) const;
    std::uint32_t inverseIndex(std::uint32_t w) const { return inverse_[w]; }
    bool leftDescent(std::uint32_t w, int s) const { return lengths_[leftMulGen(s, w)] < lengths_[w]; }
    bool rightDescent(std::uint32_t w, int s) const { return lengths_[rightMulGen(w, s)] < lengths_[w]; }

    // KL table
    void ensureKLTable() { ensureKLUpTo(maxLength()); }
    void ensureKLUpTo(int length);
    bool klTableReady() const { return builtUpTo_ >= maxLength(); }
    const KLRow& klRow(std::uint32_t w);
    Laurent klPolynomial(const Permutation& y, const Permutation& w);
    HeckeElement klBasisInStandard(const Permutation& w);
    // mu(x, s; y): coefficient of v in h_{y,x} when sy < y and y < x, else 0.
    // Requires sx > x.
    long mu(const Permutation& x, int s, const Permutation& y);

    // conversions and products
    HeckeElement toStandard(const HeckeElement& a);
    HeckeElement toKL(const HeckeElement& a);
    HeckeElement stdMul(const HeckeElement& a, const HeckeElement& b);
    // KL-basis product by repeated generator multiplication.
    HeckeElement klMul(const HeckeElement& a, const HeckeElement& b);
    HeckeElement klProductBasis(const Permutation& x, const Permutation& y);
    // b_x * b_y for every x at once, indexed by element; shares one memo.
    std::vector<HeckeElement> klColumn(std::uint32_t y);
    Laurent structureConstant(const Permutation& x, const Permutation& y, const Permutation& z);
    HeckeElement barElement(const HeckeElement& a);
    // Product H_{s_{i_1}} ... H_{s_{i_d}} of standard generators.
    HeckeElement standardWordProduct(const Word& word);

    bool isSmooth(const Permutation& w);
    bool isPatternSmooth(const Permutation& w) const;  // 3412- and 4231-avoidance
    HeckeElement halfTwistKL();

    // cache support: all rows up to the built length, and bulk installation
    const std::vector<KLRow>& rows() const { return rows_; }
    int builtUpTo() const { return builtUpTo_; }
    bool installKLRows(std::vector<KLRow> rows, int builtUpTo);

private:
    void buildRow(std::uint32_t w);
    HeckeElement klLeftMulGenElt(int s, const HeckeElement& a);
    void klProductHelper(std::uint32_t x, const HeckeElement& b,
                         std::map<std::uint32_t, HeckeElement>& memo);

    int n_;
    std::uint32_t order_, idIndex_, w0Index_;
    std::vector<Permutation> elements_;
    std::vector<std::uint8_t> lengths_;
    std::vector<std::uint32_t> inverse_;
    std::vector<std::vector<std::uint32_t>> leftGen_, rightGen_;  // [s-1][w]

    std::mutex klMutex_;
    std::vector<KLRow> rows_;
    std::atomic<int> builtUpTo_{-1};
};

}  // namespace klcells
