#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace klcells {

// Integer Laurent polynomial in the formal variable v.  Terms are kept in a
// trimmed sparse map exponent -> coefficient; zero coefficients are never
// stored, so structural equality is semantic equality.
class Laurent {
public:
    Laurent() = default;
    Laurent(long c) { if (c != 0) terms_[0] = c; }
    Laurent(const mpz_class& c) { if (c != 0) terms_[0] = c; }

    // The monomial coeff * v^exp.
    static Laurent monomial(int exp, mpz_class coeff = 1);

    bool isZero() const { return terms_.empty(); }
    bool isOne() const;
    const std::map<int, mpz_class>& terms() const { return terms_; }
    mpz_class coeff(int exp) const;

    // Lowest/highest exponent with nonzero coefficient; throws on zero.
    int minExp() const;
    int maxExp() const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const { Laurent r = *this; r += o; return r; }
    Laurent operator-(const Laurent& o) const { Laurent r = *this; r -= o; return r; }
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator*=(const Laurent& o) { *this = *this * o; return *this; }
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    // The bar involution v -> v^{-1}.
    Laurent bar() const;
    // Multiplication by v^k.
    Laurent shifted(int k) const;
    Laurent pow(unsigned e) const;

    // All coefficients nonnegative / all exponents strictly positive.
    bool nonnegative() const;
    bool inVZ() const;
    bool barSymmetric() const { return *this == bar(); }

    // Canonical printing, e.g. "v^-2 + 2 + v^2".
    std::string str() const;

    void addTerm(int exp, const mpz_class& coeff);

private:
    std::map<int, mpz_class> terms_;
};

// Balanced quantum integer [k] = v^{k-1} + v^{k-3} + ... + v^{1-k}.
Laurent quantumInt(int k);
// Balanced quantum factorial [k]! = [1][2]...[k].
Laurent quantumFactorial(int k);
// Balanced Poincare polynomial of S_{k_1} x ... x S_{k_r}: the product of the
// quantum factorials of the block sizes.
Laurent quantumFactorialProduct(const std::vector<int>& blockSizes);

}  // namespace klcells
