#include "klcells/twists.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace klcells {

RationalHeckeElement RationalHeckeElement::unit(int n, Basis b) {
    RationalHeckeElement r{n, b, {}};
    r.terms.emplace(Permutation(n), RationalLaurent(1));
    return r;
}

RationalHeckeElement RationalHeckeElement::fromIntegral(const HeckeElement& a) {
    RationalHeckeElement r{a.n, a.basis, {}};
    for (const auto& [w, c] : a.terms) r.terms.emplace(w, RationalLaurent(c));
    return r;
}

RationalLaurent RationalHeckeElement::coeff(const Permutation& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? RationalLaurent() : it->second;
}

void RationalHeckeElement::addTerm(const Permutation& w, const RationalLaurent& c) {
    if (c.isZero()) return;
    if (w.rank() != n) throw std::invalid_argument("RationalHeckeElement::addTerm: rank mismatch");
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms.erase(it);
    }
}

RationalHeckeElement& RationalHeckeElement::operator+=(const RationalHeckeElement& o) {
    if (n != o.n || basis != o.basis) throw std::invalid_argument("RationalHeckeElement: mismatch");
    for (const auto& [w, c] : o.terms) addTerm(w, c);
    return *this;
}

RationalHeckeElement& RationalHeckeElement::operator-=(const RationalHeckeElement& o) {
    if (n != o.n || basis != o.basis) throw std::invalid_argument("RationalHeckeElement: mismatch");
    for (const auto& [w, c] : o.terms) addTerm(w, -c);
    return *this;
}

RationalHeckeElement RationalHeckeElement::scaled(const RationalLaurent& c) const {
    RationalHeckeElement r{n, basis, {}};
    if (c.isZero()) return r;
    for (const auto& [w, coeff] : terms) {
        RationalLaurent p = coeff * c;
        if (!p.isZero()) r.terms.emplace(w, std::move(p));
    }
    return r;
}

bool RationalHeckeElement::operator==(const RationalHeckeElement& o) const {
    return n == o.n && basis == o.basis && terms == o.terms;
}

std::string RationalHeckeElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    const char* tag = basis == Basis::Standard ? "H" : "b";
    bool first = true;
    for (const auto& [w, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*" << tag << w.str();
    }
    return os.str();
}

RationalHeckeElement rationalStdMul(HeckeContext& ctx, const RationalHeckeElement& a,
                                    const RationalHeckeElement& b) {
    if (a.n != ctx.rank() || b.n != ctx.rank()) throw std::invalid_argument("rationalStdMul: rank mismatch");
    if (a.basis != Basis::Standard || b.basis != Basis::Standard)
        throw std::invalid_argument("rationalStdMul: standard basis expected");
    RationalLaurent vminus{Laurent::monomial(-1) - Laurent::monomial(1)};
    RationalHeckeElement out = RationalHeckeElement::zero(ctx.rank(), Basis::Standard);
    for (const auto& [x, cx] : a.terms) {
        Word rex = positiveLiftWord(x);
        RationalHeckeElement cur = b;
        for (auto it = rex.letters.rbegin(); it != rex.letters.rend(); ++it) {
            int s = *it;
            RationalHeckeElement next = RationalHeckeElement::zero(ctx.rank(), Basis::Standard);
            for (const auto& [y, c] : cur.terms) {
                std::uint32_t yi = ctx.index(y);
                std::uint32_t syi = ctx.leftMulGen(s, yi);
                next.addTerm(ctx.element(syi), c);
                if (ctx.length(syi) < ctx.length(yi)) next.addTerm(y, c * vminus);
            }
            cur = std::move(next);
        }
        out += cur.scaled(cx);
    }
    return out;
}

HeckeElement heckeExternalProduct(const HeckeElement& a, const HeckeElement& b) {
    auto ctxA = HeckeContext::get(a.n);
    auto ctxB = HeckeContext::get(b.n);
    HeckeElement sa = ctxA->toStandard(a);
    HeckeElement sb = ctxB->toStandard(b);
    HeckeElement out = HeckeElement::zero(a.n + b.n, Basis::Standard);
    for (const auto& [w, cw] : sa.terms)
        for (const auto& [x, cx] : sb.terms) out.addTerm(externalProduct(w, x), cw * cx);
    return out;
}

HeckeElement jmElement(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("jmElement: k out of range");
    auto ctx = HeckeContext::get(n);
    HeckeElement y = HeckeElement::unit(n, Basis::Standard);
    for (int i = 2; i <= k; ++i) {
        HeckeElement h = HeckeElement::basisElement(n, Basis::Standard, simpleReflection(n, i - 1));
        y = ctx->stdMul(ctx->stdMul(h, y), h);
    }
    return y;
}

HeckeElement halfTwistStd(int n) {
    return HeckeElement::basisElement(n, Basis::Standard, longestElement(n));
}

HeckeElement fullTwist(int k, int n) {
    if (k < 1 || k > n) throw std::invalid_argument("fullTwist: k out of range");
    auto ctx = HeckeContext::get(n);
    std::vector<int> blocks{k};
    for (int i = k; i < n; ++i) blocks.push_back(1);
    HeckeElement ht = HeckeElement::basisElement(n, Basis::Standard, parabolicLongest(n, blocks));
    return ctx->stdMul(ht, ht);
}

Laurent fullTwistEigenvalue(const Partition& lambda) {
    return Laurent::monomial(2 * partitionStatistics(lambda).x);
}

TableauPath::TableauPath(std::vector<Partition> shapes) : shapes_(std::move(shapes)) {
    if (shapes_.empty()) throw std::invalid_argument("TableauPath: empty");
    for (size_t k = 0; k < shapes_.size(); ++k) {
        if (shapes_[k].n() != static_cast<int>(k) + 1)
            throw std::invalid_argument("TableauPath: shape " + std::to_string(k) + " has wrong size");
        if (k > 0) {
            const auto above = partitionsAbove(shapes_[k - 1]);
            if (std::find(above.begin(), above.end(), shapes_[k]) == above.end())
                throw std::invalid_argument("TableauPath: step does not add one box");
        }
    }
}

TableauPath TableauPath::fromTableau(const Tableau& t) {
    std::vector<Partition> shapes;
    for (int k = 1; k <= t.n(); ++k) shapes.push_back(t.prefix(k).shape());
    return TableauPath(std::move(shapes));
}

Tableau TableauPath::toTableau() const {
    std::vector<std::vector<int>> rows;
    for (int k = 1; k <= n(); ++k) {
        const Partition& cur = shapes_[k - 1];
        int row = -1;
        if (k == 1) row = 0;
        else {
            const Partition& prev = shapes_[k - 2];
            for (int i = 0; i < cur.numParts(); ++i)
                if (cur.part(i) != prev.part(i)) { row = i; break; }
        }
        if (row == static_cast<int>(rows.size())) rows.emplace_back();
        rows[row].push_back(k);
    }
    return Tableau(std::move(rows));
}

std::string TableauPath::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < shapes_.size(); ++i) os << (i ? ";" : "") << shapes_[i].str();
    return os.str();
}

std::vector<TableauPath> allTableauPaths(int n) {
    std::vector<TableauPath> out;
    for (const Partition& lambda : partitionsOf(n))
        for (const Tableau& t : standardTableaux(lambda)) out.push_back(TableauPath::fromTableau(t));
    return out;
}

Laurent gammaScalar(const TableauPath& T) {
    Laurent g(1);
    for (int k = 2; k <= T.n(); ++k) {
        const Partition& target = T.shapeAt(k);
        Laurent ev = fullTwistEigenvalue(target);
        for (const Partition& nu : partitionsAbove(T.shapeAt(k - 1))) {
            if (nu == target) continue;
            g *= ev - fullTwistEigenvalue(nu);
        }
    }
    return g;
}

HeckeElement quasiIdempotent(const TableauPath& T) {
    int n = T.n();
    auto ctx = HeckeContext::get(n);
    HeckeElement k = HeckeElement::unit(n, Basis::Standard);
    for (int step = 2; step <= n; ++step) {
        HeckeElement ft = fullTwist(step, n);
        for (const Partition& nu : partitionsAbove(T.shapeAt(step - 1))) {
            if (nu == T.shapeAt(step)) continue;
            HeckeElement factor = ft;
            factor -= HeckeElement::unit(n, Basis::Standard).scaled(fullTwistEigenvalue(nu));
            k = ctx->stdMul(k, factor);
        }
    }
    return k;
}

RationalHeckeElement youngIdempotent(const TableauPath& T) {
    Laurent gamma = gammaScalar(T);
    RationalLaurent inv = RationalLaurent(Laurent(1), gamma);
    return RationalHeckeElement::fromIntegral(quasiIdempotent(T)).scaled(inv);
}

RationalHeckeElement centralIdempotent(int n, const Partition& lambda) {
    if (lambda.n() != n) throw std::invalid_argument("centralIdempotent: shape size mismatch");
    RationalHeckeElement out = RationalHeckeElement::zero(n, Basis::Standard);
    for (const Tableau& t : standardTableaux(lambda)) out += youngIdempotent(TableauPath::fromTableau(t));
    return out;
}

Partition shLk(const Permutation& w, int k) {
    if (k < 1 || k > w.rank()) throw std::invalid_argument("shLk: k out of range");
    return rsk(w).first.prefix(k).shape();
}

CheckReport relativeActionCheck(const Tableau& V, const Permutation& w) {
    int k = V.n();
    int n = w.rank();
    if (k > n) return {false, "tableau larger than ambient rank"};
    auto ctx = HeckeContext::get(n);
    Partition mu = V.shape();
    int r = partitionStatistics(mu).r;
    Tableau Pk = rsk(w).first.prefix(k);

    HeckeElement bVV = HeckeElement::basisElement(k, Basis::KL, rskInverse(V, V));
    HeckeElement embedded = k == n ? HeckeContext::get(k)->toStandard(bVV)
                                   : heckeExternalProduct(bVV, HeckeElement::unit(n - k, Basis::Standard));
    HeckeElement lhsStd = ctx->stdMul(embedded, ctx->toStandard(HeckeElement::basisElement(n, Basis::KL, w)));
    HeckeElement lhs = ctx->toKL(lhsStd).scaled(Laurent::monomial(r));
    if (Pk == V) lhs.addTerm(w, Laurent(-1));
    for (const auto& [z, c] : lhs.terms) {
        Partition sigma = rsk(z).first.prefix(k).shape();
        if (sigma == mu) {
            if (!c.inVZ())
                return {false, "coefficient of " + z.str() + " not in vZ[v]: " + c.str()};
        } else if (!(sigma.n() == mu.n() && dominanceLt(sigma, mu))) {
            return {false, "prefix shape " + sigma.str() + " of " + z.str() + " not strictly below " + mu.str()};
        }
    }
    return {true, ""};
}

CheckReport thickCrossingIdentity(int k) {
    if (k < 1) return {false, "k must be positive"};
    int n = k + 1;
    auto ctx = HeckeContext::get(n);
    // T has 1..k down the first column and k+1 beside 1; T^vee has 2 beside 1.
    std::vector<std::vector<int>> rowsT{{1, k + 1}}, rowsTv{{1, 2}};
    for (int i = 2; i <= k; ++i) rowsT.push_back({i});
    for (int i = 3; i <= k + 1; ++i) rowsTv.push_back({i});
    Tableau T(rowsT), Tv(rowsTv);

    Permutation wkEmbedded = parabolicLongest(n, std::vector<int>{k, 1});
    auto [P, Q] = rsk(wkEmbedded);
    if (P != T || Q != T) return {false, "w_k [] 1 is not w(T,T)"};
    auto [Pv, Qv] = rsk(parabolicLongest(n, {1, k}));
    if (Pv != Tv || Qv != Tv) return {false, "1 [] w_k is not w(T^vee,T^vee)"};

    Word crossing;
    for (int i = 1; i <= k; ++i) crossing.letters.push_back(i);
    HeckeElement lhs = ctx->toKL(ctx->stdMul(ctx->standardWordProduct(crossing),
                                             ctx->toStandard(HeckeElement::basisElement(n, Basis::KL, wkEmbedded))));
    HeckeElement expected = HeckeElement::basisElement(n, Basis::KL, longestElement(n));
    expected.addTerm(rskInverse(Tv, T), -Laurent::monomial(1));
    if (lhs != expected)
        return {false, "product is " + lhs.str() + ", expected " + expected.str()};
    return {true, ""};
}

bool dominanceLeqTableau(const TableauPath& S, const TableauPath& T) {
    if (S.n() != T.n()) throw std::invalid_argument("dominanceLeqTableau: size mismatch");
    for (int k = 1; k <= S.n(); ++k)
        if (!dominanceLeq(S.shapeAt(k), T.shapeAt(k))) return false;
    return true;
}

bool dominanceLeqTableau(const Tableau& S, const Tableau& T) {
    return dominanceLeqTableau(TableauPath::fromTableau(S), TableauPath::fromTableau(T));
}

CheckReport annihilationCheck(const TableauPath& T) {
    int n = T.n();
    auto ctx = HeckeContext::get(n);
    RationalHeckeElement pT = youngIdempotent(T);
    for (const Partition& lambda : partitionsOf(n)) {
        for (const Tableau& P : standardTableaux(lambda)) {
            for (const Tableau& Q : standardTableaux(lambda)) {
                HeckeElement b = ctx->toStandard(HeckeElement::basisElement(n, Basis::KL, rskInverse(P, Q)));
                RationalHeckeElement bR = RationalHeckeElement::fromIntegral(b);
                if (!dominanceLeqTableau(T, TableauPath::fromTableau(Q))) {
                    if (!rationalStdMul(*ctx, bR, pT).isZero())
                        return {false, "b_{" + P.str() + "," + Q.str() + "} p_T != 0 though Q !>= T"};
                }
                if (!dominanceLeqTableau(T, TableauPath::fromTableau(P))) {
                    if (!rationalStdMul(*ctx, pT, bR).isZero())
                        return {false, "p_T b_{" + P.str() + "," + Q.str() + "} != 0 though P !>= T"};
                }
            }
        }
    }
    return {true, ""};
}

}  // namespace klcells
