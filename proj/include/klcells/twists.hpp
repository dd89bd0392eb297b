#pragma once

#include "klcells/cells.hpp"
#include "klcells/hecke.hpp"
#include "klcells/rational.hpp"
#include "klcells/tableau.hpp"

#include <map>
#include <string>
#include <vector>

namespace klcells {

// Hecke element with coefficients in the fraction field; used for the Young
// idempotents, which do not live over Z[v,v^-1].
struct RationalHeckeElement {
    int n = 1;
    Basis basis = Basis::Standard;
    std::map<Permutation, RationalLaurent> terms;

    static RationalHeckeElement zero(int n, Basis b) { return RationalHeckeElement{n, b, {}}; }
    static RationalHeckeElement unit(int n, Basis b);
    static RationalHeckeElement fromIntegral(const HeckeElement& a);

    bool isZero() const { return terms.empty(); }
    RationalLaurent coeff(const Permutation& w) const;
    void addTerm(const Permutation& w, const RationalLaurent& c);
    RationalHeckeElement& operator+=(const RationalHeckeElement& o);
    RationalHeckeElement& operator-=(const RationalHeckeElement& o);
    RationalHeckeElement operator+(const RationalHeckeElement& o) const { auto r = *this; r += o; return r; }
    RationalHeckeElement operator-(const RationalHeckeElement& o) const { auto r = *this; r -= o; return r; }
    RationalHeckeElement scaled(const RationalLaurent& c) const;
    bool operator==(const RationalHeckeElement& o) const;
    bool operator!=(const RationalHeckeElement& o) const { return !(*this == o); }
    std::string str() const;
};

// Product in the standard basis (coefficients in the fraction field).
RationalHeckeElement rationalStdMul(HeckeContext& ctx, const RationalHeckeElement& a,
                                    const RationalHeckeElement& b);

// External product H_i x H_j -> H_{i+j}; inputs in any bases, output standard.
HeckeElement heckeExternalProduct(const HeckeElement& a, const HeckeElement& b);

// Multiplicative Jucys-Murphy element y_k in H_n, standard basis, with the
// tower convention y_1 = 1 and y_{k} = H_{s_{k-1}} y_{k-1} H_{s_{k-1}}.
HeckeElement jmElement(int k, int n);
// Image of the squared positive half-twist lift of S_k, embedded in H_n.
HeckeElement fullTwist(int k, int n);
HeckeElement halfTwistStd(int n);

// Full-twist eigenvalue on the lambda cell layer: v^{2 x(lambda)}.
Laurent fullTwistEigenvalue(const Partition& lambda);

// A tower of partitions growing one box at a time; equivalent to a standard
// tableau (entry k sits in the box added at step k).
class TableauPath {
public:
    explicit TableauPath(std::vector<Partition> shapes);  // validated
    static TableauPath fromTableau(const Tableau& t);
    Tableau toTableau() const;

    int n() const { return static_cast<int>(shapes_.size()); }
    const Partition& shapeAt(int k) const { return shapes_[k - 1]; }  // partition of k
    const Partition& finalShape() const { return shapes_.back(); }
    const std::vector<Partition>& shapes() const { return shapes_; }

    bool operator==(const TableauPath& o) const { return shapes_ == o.shapes_; }
    std::string str() const;

private:
    std::vector<Partition> shapes_;
};

std::vector<TableauPath> allTableauPaths(int n);

// gamma_T: product over the tower steps of (v^{2x(lambda^k)} - v^{2x(nu)}),
// nu running over the rejected one-box extensions.
Laurent gammaScalar(const TableauPath& T);
// k_T: same product with ft_k in place of its eigenvalue.
HeckeElement quasiIdempotent(const TableauPath& T);
// p_T = k_T / gamma_T.
RationalHeckeElement youngIdempotent(const TableauPath& T);
// p_lambda = sum of p_T over standard tableaux of shape lambda.
RationalHeckeElement centralIdempotent(int n, const Partition& lambda);

// Shape of the k-prefix of the insertion symbol.
Partition shLk(const Permutation& w, int k);

struct CheckReport {
    bool ok = true;
    std::string witness;
};

// eq-style relative action check: v^{r(mu)} (b_{V,V} [] 1) b_w has head
// delta_{V,P^k} b_w and tail in H^+_{L,mu} + H_{L,<mu}.
CheckReport relativeActionCheck(const Tableau& V, const Permutation& w);

// H_{s_1...s_k} b_{w_k [] 1} = b_{w_{k+1}} - v b_{w(T^vee,T)} in H_{k+1}.
CheckReport thickCrossingIdentity(int k);

// Componentwise dominance of prefix shapes.
bool dominanceLeqTableau(const TableauPath& S, const TableauPath& T);
bool dominanceLeqTableau(const Tableau& S, const Tableau& T);

// b_{P,Q} p_T = 0 unless Q >= T, and p_T b_{P,Q} = 0 unless P >= T.
CheckReport annihilationCheck(const TableauPath& T);

}  // namespace klcells
