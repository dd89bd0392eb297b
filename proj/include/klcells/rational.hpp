#pragma once

#include "klcells/laurent.hpp"

namespace klcells {

// Exact fraction of integer Laurent polynomials.  The pair is kept in a
// canonical reduced form: the denominator is an honest polynomial in v with
// nonzero constant term, positive leading coefficient, and no common factor
// with the numerator polynomial part (any unit v^k is carried by the
// numerator).  Structural equality is therefore semantic equality.
class RationalLaurent {
public:
    RationalLaurent() : num_(0), den_(1) {}
    RationalLaurent(long c) : num_(c), den_(1) {}
    RationalLaurent(const Laurent& p) : num_(p), den_(1) {}
    RationalLaurent(const Laurent& num, const Laurent& den);

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }

    RationalLaurent operator+(const RationalLaurent& o) const;
    RationalLaurent operator-(const RationalLaurent& o) const;
    RationalLaurent operator*(const RationalLaurent& o) const;
    RationalLaurent operator/(const RationalLaurent& o) const;
    RationalLaurent operator-() const;
    RationalLaurent& operator+=(const RationalLaurent& o) { *this = *this + o; return *this; }
    RationalLaurent& operator-=(const RationalLaurent& o) { *this = *this - o; return *this; }
    RationalLaurent& operator*=(const RationalLaurent& o) { *this = *this * o; return *this; }
    RationalLaurent inverse() const;
    bool operator==(const RationalLaurent& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalLaurent& o) const { return !(*this == o); }

    // Substitute v = 1; throws if the denominator vanishes there.
    mpq_class atOne() const;

    std::string str() const;

private:
    void normalize();

    Laurent num_, den_;
};

// Gcd in Z[v] of the polynomial parts (units v^k stripped first); result has
// positive leading coefficient.  Exposed for tests.
Laurent laurentGcd(const Laurent& a, const Laurent& b);

// Exact division; throws if the division leaves a remainder.
Laurent laurentExactDiv(const Laurent& a, const Laurent& b);

}  // namespace klcells
