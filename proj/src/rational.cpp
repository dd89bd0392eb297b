#include "klcells/rational.hpp"

#include <stdexcept>
#include <utility>

namespace klcells {

namespace {

// Write p = v^shift * q with q(0) != 0; returns shift and sets q.
int stripUnit(const Laurent& p, Laurent& q) {
    if (p.isZero()) { q = Laurent(0); return 0; }
    int m = p.minExp();
    q = p.shifted(-m);
    return m;
}

mpz_class content(const Laurent& p) {
    mpz_class g = 0;
    for (const auto& [e, c] : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

Laurent divByInt(const Laurent& p, const mpz_class& d) {
    Laurent r;
    for (const auto& [e, c] : p.terms()) {
        mpz_class q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        if (rem != 0) throw std::logic_error("divByInt: not divisible");
        r.addTerm(e, q);
    }
    return r;
}

Laurent primitivePart(const Laurent& p) {
    if (p.isZero()) return p;
    mpz_class c = content(p);
    Laurent r = divByInt(p, c);
    if (r.coeff(r.maxExp()) < 0) r = -r;
    return r;
}

int degree(const Laurent& p) { return p.maxExp(); }

// Pseudo-remainder of a by b; both must have minExp 0 and b nonzero.
Laurent pseudoRem(Laurent a, const Laurent& b) {
    int db = degree(b);
    mpz_class lb = b.coeff(db);
    while (!a.isZero() && degree(a) >= db) {
        mpz_class la = a.coeff(degree(a));
        int shift = degree(a) - db;
        Laurent next;
        for (const auto& [e, c] : a.terms()) next.addTerm(e, c * lb);
        for (const auto& [e, c] : b.terms()) next.addTerm(e + shift, -c * la);
        a = std::move(next);
    }
    return a;
}

}  // namespace

Laurent laurentGcd(const Laurent& a, const Laurent& b) {
    Laurent pa, pb;
    stripUnit(a, pa);
    stripUnit(b, pb);
    if (pa.isZero()) return primitivePart(pb);
    if (pb.isZero()) return primitivePart(pa);
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), content(pa).get_mpz_t(), content(pb).get_mpz_t());
    Laurent u = primitivePart(pa), w = primitivePart(pb);
    if (degree(u) < degree(w)) std::swap(u, w);
    // Primitive PRS; inputs stay small enough that fancier schemes are not needed.
    while (!w.isZero()) {
        Laurent r = pseudoRem(u, w);
        u = std::move(w);
        if (r.isZero()) { w = Laurent(0); }
        else { w = primitivePart(r); }
    }
    Laurent g;
    for (const auto& [e, c] : u.terms()) g.addTerm(e, c * cg);
    return g;
}

Laurent laurentExactDiv(const Laurent& a, const Laurent& b) {
    if (b.isZero()) throw std::domain_error("laurentExactDiv: division by zero");
    if (a.isZero()) return Laurent(0);
    Laurent pa, pb;
    int sa = stripUnit(a, pa);
    int sb = stripUnit(b, pb);
    int db = degree(pb);
    mpz_class lb = pb.coeff(db);
    Laurent rem = pa, quot;
    while (!rem.isZero() && degree(rem) >= db) {
        mpz_class lr = rem.coeff(degree(rem));
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), lr.get_mpz_t(), lb.get_mpz_t());
        if (r != 0) throw std::domain_error("laurentExactDiv: not divisible");
        int shift = degree(rem) - db;
        quot.addTerm(shift, q);
        for (const auto& [e, c] : pb.terms()) rem.addTerm(e + shift, -c * q);
    }
    if (!rem.isZero()) throw std::domain_error("laurentExactDiv: nonzero remainder");
    return quot.shifted(sa - sb);
}

RationalLaurent::RationalLaurent(const Laurent& num, const Laurent& den) : num_(num), den_(den) {
    if (den_.isZero()) throw std::domain_error("RationalLaurent: zero denominator");
    normalize();
}

void RationalLaurent::normalize() {
    if (num_.isZero()) { den_ = Laurent(1); return; }
    Laurent pn, pd;
    int sn = stripUnit(num_, pn);
    int sd = stripUnit(den_, pd);
    Laurent g = laurentGcd(pn, pd);
    pn = laurentExactDiv(pn, g);
    pd = laurentExactDiv(pd, g);
    if (pd.coeff(pd.maxExp()) < 0) { pn = -pn; pd = -pd; }
    num_ = pn.shifted(sn - sd);
    den_ = pd;
}

RationalLaurent RationalLaurent::operator+(const RationalLaurent& o) const {
    return RationalLaurent(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalLaurent RationalLaurent::operator-(const RationalLaurent& o) const {
    return RationalLaurent(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalLaurent RationalLaurent::operator*(const RationalLaurent& o) const {
    return RationalLaurent(num_ * o.num_, den_ * o.den_);
}

RationalLaurent RationalLaurent::operator/(const RationalLaurent& o) const {
    if (o.isZero()) throw std::domain_error("RationalLaurent: division by zero");
    return RationalLaurent(num_ * o.den_, den_ * o.num_);
}

RationalLaurent RationalLaurent::operator-() const {
    RationalLaurent r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalLaurent RationalLaurent::inverse() const {
    if (isZero()) throw std::domain_error("RationalLaurent: inverse of zero");
    return RationalLaurent(den_, num_);
}

mpq_class RationalLaurent::atOne() const {
    mpz_class n = 0, d = 0;
    for (const auto& [e, c] : num_.terms()) n += c;
    for (const auto& [e, c] : den_.terms()) d += c;
    if (d == 0) throw std::domain_error("RationalLaurent: denominator vanishes at v=1");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

std::string RationalLaurent::str() const {
    if (den_.isOne()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace klcells
