#include "klcells/shapes.hpp"

#include <stdexcept>

namespace klcells {

// Transcribed minimal-complex shapes for the rank-2/3 twists acting on KL
// basis elements, and for the four rank-3 quasi-idempotent complexes.  Each
// expected Euler characteristic is recomputed from the algebra rather than
// transcribed, so these checks pin the shape data against an independent
// route.
//
// Two entries deviate from their printed source, which has typos there: the
// tail of the full twist on b_{st} must be B_{st}(0) (the full twist is
// central, so the head of its action on a cell layer keeps the same index),
// and the one-column rank-3 quasi-idempotent is built from B_{sts} alone, so
// its middle chain group is B_{sts}(-3)^2 rather than B_{sts}(-3) + B_{st}(-3).
// Both corrected entries match the exact product computation.
const int kTwistFixtureVersion = 2;

namespace {

Permutation pw(int n, std::initializer_list<int> letters) {
    Word w;
    w.letters = letters;
    return evalWord(n, w);
}

HeckeElement klProduct(int n, const HeckeElement& stdFactor, const Permutation& y) {
    auto ctx = HeckeContext::get(n);
    return ctx->toKL(ctx->stdMul(stdFactor, ctx->toStandard(HeckeElement::basisElement(n, Basis::KL, y))));
}

}  // namespace

std::vector<TwistFixture> twistFixtures() {
    std::vector<TwistFixture> out;
    auto ctx3 = HeckeContext::get(3);
    auto ctx2 = HeckeContext::get(2);

    const Permutation e3 = pw(3, {});
    const Permutation s = pw(3, {1});
    const Permutation t = pw(3, {2});
    const Permutation st = pw(3, {1, 2});
    const Permutation ts = pw(3, {2, 1});
    const Permutation sts = pw(3, {1, 2, 1});

    HeckeElement ht3 = halfTwistStd(3);
    HeckeElement ft3 = ctx3->stdMul(ht3, ht3);

    auto addHT = [&](const std::string& name, const Permutation& y, ComplexShape shape) {
        out.push_back(TwistFixture{name, std::move(shape), klProduct(3, ht3, y)});
    };
    auto addFT = [&](const std::string& name, const Permutation& y, ComplexShape shape) {
        out.push_back(TwistFixture{name, std::move(shape), klProduct(3, ft3, y)});
    };

    {  // half twist on the identity: the minimal complex of the rank-3 half twist
        ComplexShape sh(3);
        sh.add(0, sts, 0);
        sh.add(1, st, 1);
        sh.add(1, ts, 1);
        sh.add(2, s, 2);
        sh.add(2, t, 2);
        sh.add(3, e3, 3);
        addHT("rank3 half twist", e3, std::move(sh));
    }
    {
        ComplexShape sh(3);
        sh.add(0, sts, -1);
        sh.add(1, ts, 0);
        addHT("rank3 half twist on b[s]", s, std::move(sh));
    }
    {
        ComplexShape sh(3);
        sh.add(0, sts, -1);
        sh.add(1, st, 0);
        addHT("rank3 half twist on b[t]", t, std::move(sh));
    }
    {
        ComplexShape sh(3);
        sh.add(0, sts, -2);
        sh.add(1, t, 0);
        addHT("rank3 half twist on b[st]", st, std::move(sh));
    }
    {
        ComplexShape sh(3);
        sh.add(0, sts, -2);
        sh.add(1, s, 0);
        addHT("rank3 half twist on b[ts]", ts, std::move(sh));
    }
    {
        ComplexShape sh(3);
        sh.add(0, sts, -3);
        addHT("rank3 half twist on b[sts]", sts, std::move(sh));
    }

    {  // full twist on the identity
        ComplexShape sh(3);
        sh.add(0, sts, -3);
        sh.add(1, sts, -1, 2);
        sh.add(2, sts, 1, 2);
        sh.add(2, s, 1);
        sh.add(2, t, 1);
        sh.add(3, sts, 3);
        sh.add(3, st, 2);
        sh.add(3, ts, 2);
        sh.add(4, st, 4);
        sh.add(4, ts, 4);
        sh.add(5, s, 5);
        sh.add(5, t, 5);
        sh.add(6, e3, 6);
        addFT("rank3 full twist", e3, std::move(sh));
    }
    {
        ComplexShape sh(3);
        sh.add(0, sts, -4);
        sh.add(1, sts, -2);
        sh.add(2, s, 0);
        addFT("rank3 full twist on b[s]", s, std::move(sh));
    }
    {
        ComplexShape sh(3);
        sh.add(0, sts, -4);
        sh.add(1, sts, -2);
        sh.add(2, t, 0);
        addFT("rank3 full twist on b[t]", t, std::move(sh));
    }
    {
        ComplexShape sh(3);
        sh.add(0, sts, -5);
        sh.add(1, sts, -1);
        sh.add(2, st, 0);  // corrected tail: same cell index as the input
        addFT("rank3 full twist on b[st]", st, std::move(sh));
    }
    {
        ComplexShape sh(3);
        sh.add(0, sts, -5);
        sh.add(1, sts, -1);
        sh.add(2, ts, 0);
        addFT("rank3 full twist on b[ts]", ts, std::move(sh));
    }
    {
        ComplexShape sh(3);
        sh.add(0, sts, -6);
        addFT("rank3 full twist on b[sts]", sts, std::move(sh));
    }

    {  // rank-2 full twist
        ComplexShape sh(2);
        Permutation s2 = pw(2, {1});
        sh.add(0, s2, -1);
        sh.add(1, s2, 1);
        sh.add(2, pw(2, {}), 2);
        HeckeElement hs = HeckeElement::basisElement(2, Basis::Standard, s2);
        out.push_back(TwistFixture{"rank2 full twist", std::move(sh), ctx2->toKL(ctx2->stdMul(hs, hs))});
    }

    auto addK = [&](const std::string& name, const TableauPath& path, ComplexShape shape) {
        HeckeElement kT = ctx3->toKL(quasiIdempotent(path));
        out.push_back(TwistFixture{name, std::move(shape), std::move(kT)});
    };

    {  // quasi-idempotent for the one-row path (1)(2)(3)
        ComplexShape sh(3);
        sh.add(0, e3, -2);
        sh.add(1, s, -1);
        sh.add(1, t, -1);
        sh.add(2, ts, 0);
        sh.add(2, st, 0);
        sh.add(3, sts, 1);
        sh.add(3, st, 2);
        sh.add(3, ts, 2);
        sh.add(3, e3, 2);
        sh.add(4, sts, 3, 2);
        sh.add(4, s, 3, 2);
        sh.add(4, t, 3, 2);
        sh.add(5, sts, 5);
        sh.add(5, st, 4);
        sh.add(5, ts, 4);
        sh.add(5, e3, 4);
        sh.add(6, ts, 6);
        sh.add(6, st, 6);
        sh.add(7, s, 7);
        sh.add(7, t, 7);
        sh.add(8, e3, 8);
        addK("rank3 quasi-idempotent, path (1)(2)(3)",
             TableauPath({Partition({1}), Partition({2}), Partition({3})}), std::move(sh));
    }
    {  // path (1)(2)(2,1): tableau with rows 12|3
        ComplexShape sh(3);
        sh.add(1, t, -1);
        sh.add(2, ts, 0);
        sh.add(2, st, 0);
        sh.add(3, sts, 1);
        sh.add(3, st, 2);
        sh.add(3, ts, 2);
        sh.add(3, s, 1);
        sh.add(4, sts, 3, 2);
        sh.add(4, s, 3, 2);
        sh.add(4, t, 3, 2);
        sh.add(5, sts, 5);
        sh.add(5, st, 4);
        sh.add(5, ts, 4);
        sh.add(5, s, 5);
        sh.add(6, ts, 6);
        sh.add(6, st, 6);
        sh.add(7, t, 7);
        addK("rank3 quasi-idempotent, path (1)(2)(2,1)",
             TableauPath({Partition({1}), Partition({2}), Partition({2, 1})}), std::move(sh));
    }
    {  // path (1)(1,1)(2,1): tableau with rows 13|2
        ComplexShape sh(3);
        sh.add(-1, s, -7);
        sh.add(0, sts, -5);
        sh.add(0, s, -5);
        sh.add(1, sts, -3, 2);
        sh.add(2, sts, -1);
        sh.add(2, s, -1);
        sh.add(3, s, 1);
        addK("rank3 quasi-idempotent, path (1)(1,1)(2,1)",
             TableauPath({Partition({1}), Partition({1, 1}), Partition({2, 1})}), std::move(sh));
    }
    {  // one-column path (1)(1,1)(1,1,1); built from the longest element alone
        ComplexShape sh(3);
        sh.add(0, sts, -5);
        sh.add(1, sts, -3, 2);  // corrected multiplicity, see header note
        sh.add(2, sts, -1);
        addK("rank3 quasi-idempotent, path (1)(1,1)(1,1,1)",
             TableauPath({Partition({1}), Partition({1, 1}), Partition({1, 1, 1})}), std::move(sh));
    }

    return out;
}

}  // namespace klcells
