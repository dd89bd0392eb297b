#pragma once

#include "klcells/permutation.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace klcells {

// Integer polynomial in x_1..x_n, sparse exponent-vector form.  The monomial
// order used for printing and pivoting is graded lexicographic.
class MultiPoly {
public:
    explicit MultiPoly(int nvars) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, const mpz_class& c);
    static MultiPoly variable(int nvars, int i);  // x_i, 1-based

    int nvars() const { return nvars_; }
    bool isZero() const { return terms_.empty(); }
    const std::map<std::vector<int>, mpz_class>& terms() const { return terms_; }
    void addTerm(const std::vector<int>& exps, const mpz_class& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // x_i -> x_{w(i)}
    MultiPoly applyPermutation(const Permutation& w) const;

    bool isHomogeneous() const;
    int totalDegree() const;  // throws on zero

    // monomials in graded-lex order (highest first)
    std::vector<std::vector<int>> monomialsGradedLex() const;
    std::string str() const;

private:
    int nvars_;
    std::map<std::vector<int>, mpz_class> terms_;
};

}  // namespace klcells
