#include "klcells/hecke.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace klcells {

namespace {

std::int64_t addChecked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("KL table coefficient overflow");
    return r;
}

std::int64_t mulChecked(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("KL table coefficient overflow");
    return r;
}

// Working accumulator for one row: element index -> (exp -> coeff).
using RowAccum = std::map<std::uint32_t, std::map<int, std::int64_t>>;

void accumAdd(RowAccum& acc, std::uint32_t z, const KLPoly& p, int expShift, std::int64_t factor) {
    auto& slot = acc[z];
    for (const KLTerm& t : p) {
        auto [it, inserted] = slot.emplace(t.exp + expShift, 0);
        it->second = addChecked(it->second, mulChecked(t.coeff, factor));
        if (it->second == 0) slot.erase(it);
    }
}

std::int64_t coeffOfExp(const KLPoly& p, int exp) {
    for (const KLTerm& t : p)
        if (t.exp == exp) return t.coeff;
    return 0;
}

}  // namespace

Laurent klPolyToLaurent(const KLPoly& p) {
    Laurent r;
    for (const KLTerm& t : p) r.addTerm(t.exp, mpz_class(static_cast<long>(t.coeff)));
    return r;
}

HeckeElement HeckeElement::unit(int n, Basis b) {
    HeckeElement r{n, b, {}};
    r.terms.emplace(Permutation(n), Laurent(1));
    return r;
}

HeckeElement HeckeElement::basisElement(int n, Basis b, const Permutation& w) {
    if (w.rank() != n) throw std::invalid_argument("HeckeElement: rank mismatch");
    HeckeElement r{n, b, {}};
    r.terms.emplace(w, Laurent(1));
    return r;
}

Laurent HeckeElement::coeff(const Permutation& w) const {
    auto it = terms.find(w);
    return it == terms.end() ? Laurent(0) : it->second;
}

void HeckeElement::addTerm(const Permutation& w, const Laurent& c) {
    if (c.isZero()) return;
    if (w.rank() != n) throw std::invalid_argument("HeckeElement::addTerm: rank mismatch");
    auto [it, inserted] = terms.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.isZero()) terms.erase(it);
    }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
    if (n != o.n || basis != o.basis) throw std::invalid_argument("HeckeElement: basis or rank mismatch");
    for (const auto& [w, c] : o.terms) addTerm(w, c);
    return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
    if (n != o.n || basis != o.basis) throw std::invalid_argument("HeckeElement: basis or rank mismatch");
    for (const auto& [w, c] : o.terms) addTerm(w, -c);
    return *this;
}

HeckeElement HeckeElement::scaled(const Laurent& c) const {
    HeckeElement r{n, basis, {}};
    if (c.isZero()) return r;
    for (const auto& [w, coeff] : terms) {
        Laurent p = coeff * c;
        if (!p.isZero()) r.terms.emplace(w, std::move(p));
    }
    return r;
}

bool HeckeElement::operator==(const HeckeElement& o) const {
    return n == o.n && basis == o.basis && terms == o.terms;
}

std::string HeckeElement::str() const {
    if (terms.empty()) return "0";
    // print by length then lex for readability
    std::vector<const std::pair<const Permutation, Laurent>*> ordered;
    for (const auto& t : terms) ordered.push_back(&t);
    std::stable_sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) {
        int la = a->first.length(), lb = b->first.length();
        if (la != lb) return la < lb;
        return a->first < b->first;
    });
    std::ostringstream os;
    const char* tag = basis == Basis::Standard ? "H" : "b";
    bool first = true;
    for (auto* t : ordered) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t->second.str() << ")*" << tag << t->first.str();
    }
    return os.str();
}

std::shared_ptr<HeckeContext> HeckeContext::get(int n) {
    static std::mutex m;
    static std::map<int, std::shared_ptr<HeckeContext>> registry;
    std::lock_guard<std::mutex> lock(m);
    auto it = registry.find(n);
    if (it != registry.end()) return it->second;
    auto ctx = std::make_shared<HeckeContext>(n);
    registry.emplace(n, ctx);
    return ctx;
}

HeckeContext::HeckeContext(int n) : n_(n) {
    if (n < 1 || n > 12) throw std::invalid_argument("HeckeContext: rank out of supported range");
    std::uint64_t ord = 1;
    for (int i = 2; i <= n; ++i) ord *= static_cast<std::uint64_t>(i);
    if (ord > (1u << 31)) throw std::invalid_argument("HeckeContext: group too large");
    order_ = static_cast<std::uint32_t>(ord);
    elements_ = allPermutations(n);
    lengths_.resize(order_);
    inverse_.resize(order_);
    leftGen_.assign(std::max(0, n - 1), std::vector<std::uint32_t>(order_));
    rightGen_.assign(std::max(0, n - 1), std::vector<std::uint32_t>(order_));
    for (std::uint32_t i = 0; i < order_; ++i) {
        const Permutation& w = elements_[i];
        lengths_[i] = static_cast<std::uint8_t>(w.length());
        inverse_[i] = permutationIndex(w.inverse());
        for (int s = 1; s < n; ++s) {
            leftGen_[s - 1][i] = permutationIndex(simpleReflection(n, s) * w);
            rightGen_[s - 1][i] = permutationIndex(w * simpleReflection(n, s));
        }
    }
    idIndex_ = permutationIndex(Permutation(n));
    w0Index_ = permutationIndex(longestElement(n));
    rows_.resize(order_);
}

std::uint32_t HeckeContext::index(const Permutation& w) const {
    if (w.rank() != n_) throw std::invalid_argument("HeckeContext::index: rank mismatch");
    return permutationIndex(w);
}

std::uint32_t HeckeContext::leftMulGen(int s, std::uint32_t w) const {
    if (s < 1 || s >= n_) throw std::invalid_argument("leftMulGen: bad generator");
    return leftGen_[s - 1][w];
}

std::uint32_t HeckeContext::rightMulGen(std::uint32_t w, int s) const {
    if (s < 1 || s >= n_) throw std::invalid_argument("rightMulGen: bad generator");
    return rightGen_[s - 1][w];
}

void HeckeContext::buildRow(std::uint32_t w) {
    if (lengths_[w] == 0) {
        rows_[w] = KLRow{{w, KLPoly{{0, 1}}}};
        return;
    }
    int s = 1;
    while (!leftDescent(w, s)) ++s;
    std::uint32_t x = leftMulGen(s, w);
    const KLRow& rowX = rows_[x];
    RowAccum acc;
    // b_s * b_x in the standard basis
    for (const auto& [y, p] : rowX) {
        std::uint32_t sy = leftMulGen(s, y);
        accumAdd(acc, sy, p, 0, 1);
        bool syUp = lengths_[sy] > lengths_[y];
        accumAdd(acc, y, p, syUp ? 1 : -1, 1);
    }
    // subtract mu(x, s; y) b_y over y with sy < y
    for (const auto& [y, p] : rowX) {
        if (y == x) continue;
        if (lengths_[leftMulGen(s, y)] >= lengths_[y]) continue;
        std::int64_t m = coeffOfExp(p, 1);
        if (m == 0) continue;
        for (const auto& [z, q] : rows_[y]) accumAdd(acc, z, q, 0, -m);
    }
    KLRow out;
    out.reserve(acc.size());
    for (auto& [z, poly] : acc) {
        if (poly.empty()) continue;
        KLPoly kp;
        kp.reserve(poly.size());
        for (auto& [e, c] : poly) {
            if (e < INT16_MIN || e > INT16_MAX) throw std::overflow_error("KL exponent overflow");
            kp.push_back(KLTerm{static_cast<std::int16_t>(e), c});
        }
        out.emplace_back(z, std::move(kp));
    }
    // sanity of the recursion: h_{w,w} = 1 and h_{y,w} in vZ[v] for y < w
    for (const auto& [z, p] : out) {
        if (z == w) {
            if (!(p.size() == 1 && p[0].exp == 0 && p[0].coeff == 1))
                throw std::logic_error("KL recursion: diagonal entry is not 1");
        } else if (p.front().exp < 1) {
            throw std::logic_error("KL recursion: off-diagonal entry not in vZ[v]");
        }
    }
    rows_[w] = std::move(out);
}

void HeckeContext::ensureKLUpTo(int length) {
    length = std::min(length, maxLength());
    if (builtUpTo_ >= length) return;
    std::lock_guard<std::mutex> lock(klMutex_);
    if (builtUpTo_ >= length) return;
    // group elements by length once
    std::vector<std::vector<std::uint32_t>> byLength(maxLength() + 1);
    for (std::uint32_t i = 0; i < order_; ++i) byLength[lengths_[i]].push_back(i);
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    for (int l = builtUpTo_ + 1; l <= length; ++l) {
        const auto& layer = byLength[l];
        if (layer.size() < 64 || workers == 1) {
            for (std::uint32_t w : layer) buildRow(w);
        } else {
            std::vector<std::thread> threads;
            std::size_t chunk = (layer.size() + workers - 1) / workers;
            for (unsigned t = 0; t < workers; ++t) {
                std::size_t lo = t * chunk, hi = std::min(layer.size(), lo + chunk);
                if (lo >= hi) break;
                threads.emplace_back([this, &layer, lo, hi] {
                    for (std::size_t i = lo; i < hi; ++i) buildRow(layer[i]);
                });
            }
            for (auto& th : threads) th.join();
        }
        builtUpTo_ = l;
    }
}

const KLRow& HeckeContext::klRow(std::uint32_t w) {
    if (builtUpTo_ < lengths_[w]) ensureKLUpTo(lengths_[w]);
    return rows_[w];
}

Laurent HeckeContext::klPolynomial(const Permutation& y, const Permutation& w) {
    if (y.rank() != n_ || w.rank() != n_) throw std::invalid_argument("klPolynomial: rank mismatch");
    std::uint32_t yi = index(y);
    const KLRow& row = klRow(index(w));
    auto it = std::lower_bound(row.begin(), row.end(), yi,
                               [](const auto& a, std::uint32_t b) { return a.first < b; });
    if (it == row.end() || it->first != yi) return Laurent(0);
    return klPolyToLaurent(it->second);
}

HeckeElement HeckeContext::klBasisInStandard(const Permutation& w) {
    HeckeElement r = HeckeElement::zero(n_, Basis::Standard);
    for (const auto& [y, p] : klRow(index(w))) r.terms.emplace(elements_[y], klPolyToLaurent(p));
    return r;
}

long HeckeContext::mu(const Permutation& x, int s, const Permutation& y) {
    std::uint32_t xi = index(x), yi = index(y);
    if (lengths_[leftMulGen(s, xi)] < lengths_[xi]) throw std::invalid_argument("mu: requires sx > x");
    if (xi == yi) return 0;
    if (lengths_[leftMulGen(s, yi)] >= lengths_[yi]) return 0;  // needs sy < y
    const KLRow& row = klRow(xi);
    auto it = std::lower_bound(row.begin(), row.end(), yi,
                               [](const auto& a, std::uint32_t b) { return a.first < b; });
    if (it == row.end() || it->first != yi) return 0;
    return static_cast<long>(coeffOfExp(it->second, 1));
}

HeckeElement HeckeContext::toStandard(const HeckeElement& a) {
    if (a.n != n_) throw std::invalid_argument("toStandard: rank mismatch");
    if (a.basis == Basis::Standard) return a;
    HeckeElement r = HeckeElement::zero(n_, Basis::Standard);
    for (const auto& [w, c] : a.terms) {
        for (const auto& [y, p] : klRow(index(w))) r.addTerm(elements_[y], klPolyToLaurent(p) * c);
    }
    return r;
}

HeckeElement HeckeContext::toKL(const HeckeElement& a) {
    if (a.n != n_) throw std::invalid_argument("toKL: rank mismatch");
    if (a.basis == Basis::KL) return a;
    HeckeElement rem = a;
    HeckeElement out = HeckeElement::zero(n_, Basis::KL);
    while (!rem.terms.empty()) {
        // peel the longest remaining standard term; b_w = H_w + lower
        auto best = rem.terms.begin();
        for (auto it = rem.terms.begin(); it != rem.terms.end(); ++it)
            if (it->first.length() > best->first.length()) best = it;
        Permutation w = best->first;
        Laurent c = best->second;
        out.addTerm(w, c);
        for (const auto& [y, p] : klRow(index(w))) rem.addTerm(elements_[y], -(klPolyToLaurent(p) * c));
    }
    return out;
}

HeckeElement HeckeContext::stdMul(const HeckeElement& a, const HeckeElement& b) {
    if (a.n != n_ || b.n != n_) throw std::invalid_argument("stdMul: rank mismatch");
    if (a.basis != Basis::Standard || b.basis != Basis::Standard)
        throw std::invalid_argument("stdMul: both factors must be in the standard basis");
    Laurent vminus = Laurent::monomial(-1) - Laurent::monomial(1);  // v^-1 - v
    HeckeElement out = HeckeElement::zero(n_, Basis::Standard);
    for (const auto& [x, cx] : a.terms) {
        // H_x * b by applying the letters of a rex of x right-to-left
        Word rex = positiveLiftWord(x);
        HeckeElement cur = b;
        for (auto it = rex.letters.rbegin(); it != rex.letters.rend(); ++it) {
            int s = *it;
            HeckeElement next = HeckeElement::zero(n_, Basis::Standard);
            for (const auto& [y, c] : cur.terms) {
                std::uint32_t yi = index(y);
                std::uint32_t syi = leftMulGen(s, yi);
                next.addTerm(elements_[syi], c);
                if (lengths_[syi] < lengths_[yi]) next.addTerm(y, c * vminus);
            }
            cur = std::move(next);
        }
        out += cur.scaled(cx);
    }
    return out;
}

HeckeElement HeckeContext::klLeftMulGenElt(int s, const HeckeElement& a) {
    HeckeElement out = HeckeElement::zero(n_, Basis::KL);
    Laurent quantum2 = quantumInt(2);
    for (const auto& [w, c] : a.terms) {
        std::uint32_t wi = index(w);
        std::uint32_t swi = leftMulGen(s, wi);
        if (lengths_[swi] < lengths_[wi]) {
            out.addTerm(w, c * quantum2);
            continue;
        }
        out.addTerm(elements_[swi], c);
        for (const auto& [z, p] : klRow(wi)) {
            if (z == wi) continue;
            if (lengths_[leftMulGen(s, z)] >= lengths_[z]) continue;
            std::int64_t m = coeffOfExp(p, 1);
            if (m != 0) out.addTerm(elements_[z], c * Laurent(static_cast<long>(m)));
        }
    }
    return out;
}

void HeckeContext::klProductHelper(std::uint32_t x, const HeckeElement& b,
                                   std::map<std::uint32_t, HeckeElement>& memo) {
    if (memo.count(x)) return;
    if (lengths_[x] == 0) {
        memo.emplace(x, b);
        return;
    }
    int s = 1;
    while (!leftDescent(x, s)) ++s;
    std::uint32_t xp = leftMulGen(s, x);
    klProductHelper(xp, b, memo);
    HeckeElement t = klLeftMulGenElt(s, memo.at(xp));
    for (const auto& [z, p] : klRow(xp)) {
        if (z == xp) continue;
        if (lengths_[leftMulGen(s, z)] >= lengths_[z]) continue;
        std::int64_t m = coeffOfExp(p, 1);
        if (m == 0) continue;
        klProductHelper(z, b, memo);
        t -= memo.at(z).scaled(Laurent(static_cast<long>(m)));
    }
    memo.emplace(x, std::move(t));
}

HeckeElement HeckeContext::klMul(const HeckeElement& a, const HeckeElement& b) {
    if (a.n != n_ || b.n != n_) throw std::invalid_argument("klMul: rank mismatch");
    if (a.basis != Basis::KL || b.basis != Basis::KL)
        throw std::invalid_argument("klMul: both factors must be in the KL basis");
    std::map<std::uint32_t, HeckeElement> memo;
    HeckeElement out = HeckeElement::zero(n_, Basis::KL);
    for (const auto& [x, c] : a.terms) {
        std::uint32_t xi = index(x);
        klProductHelper(xi, b, memo);
        out += memo.at(xi).scaled(c);
    }
    return out;
}

HeckeElement HeckeContext::klProductBasis(const Permutation& x, const Permutation& y) {
    return klMul(HeckeElement::basisElement(n_, Basis::KL, x), HeckeElement::basisElement(n_, Basis::KL, y));
}

std::vector<HeckeElement> HeckeContext::klColumn(std::uint32_t y) {
    ensureKLTable();
    HeckeElement by = HeckeElement::basisElement(n_, Basis::KL, elements_[y]);
    std::map<std::uint32_t, HeckeElement> memo;
    std::vector<std::uint32_t> byLen(order_);
    for (std::uint32_t i = 0; i < order_; ++i) byLen[i] = i;
    std::stable_sort(byLen.begin(), byLen.end(),
                     [this](std::uint32_t a, std::uint32_t b) { return lengths_[a] < lengths_[b]; });
    for (std::uint32_t x : byLen) klProductHelper(x, by, memo);
    std::vector<HeckeElement> out;
    out.reserve(order_);
    for (std::uint32_t x = 0; x < order_; ++x) out.push_back(std::move(memo.at(x)));
    return out;
}

Laurent HeckeContext::structureConstant(const Permutation& x, const Permutation& y, const Permutation& z) {
    return klProductBasis(x, y).coeff(z);
}

HeckeElement HeckeContext::barElement(const HeckeElement& a) {
    if (a.n != n_) throw std::invalid_argument("barElement: rank mismatch");
    if (a.basis != Basis::Standard) throw std::invalid_argument("barElement: standard basis input expected");
    Laurent vdiff = Laurent::monomial(1) - Laurent::monomial(-1);  // v - v^-1
    HeckeElement out = HeckeElement::zero(n_, Basis::Standard);
    for (const auto& [y, c] : a.terms) {
        // bar(H_y) = H_{s_{i_1}}^{-1} ... H_{s_{i_d}}^{-1} with H_s^{-1} = H_s + (v - v^-1)
        HeckeElement cur = HeckeElement::unit(n_, Basis::Standard);
        for (int s : positiveLiftWord(y).letters) {
            HeckeElement next = HeckeElement::zero(n_, Basis::Standard);
            for (const auto& [z, cz] : cur.terms) {
                std::uint32_t zi = index(z);
                std::uint32_t zsi = rightMulGen(zi, s);
                next.addTerm(elements_[zsi], cz);
                if (lengths_[zsi] < lengths_[zi]) next.addTerm(z, cz * (Laurent::monomial(-1) - Laurent::monomial(1)));
                next.addTerm(z, cz * vdiff);
            }
            cur = std::move(next);
        }
        out += cur.scaled(c.bar());
    }
    return out;
}

HeckeElement HeckeContext::standardWordProduct(const Word& word) {
    HeckeElement cur = HeckeElement::unit(n_, Basis::Standard);
    for (int s : word.letters) {
        HeckeElement next = HeckeElement::zero(n_, Basis::Standard);
        for (const auto& [z, cz] : cur.terms) {
            std::uint32_t zi = index(z);
            std::uint32_t zsi = rightMulGen(zi, s);
            next.addTerm(elements_[zsi], cz);
            if (lengths_[zsi] < lengths_[zi])
                next.addTerm(z, cz * (Laurent::monomial(-1) - Laurent::monomial(1)));
        }
        cur = std::move(next);
    }
    return cur;
}

bool HeckeContext::isPatternSmooth(const Permutation& w) const {
    int n = w.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    // 3412: w(k) < w(l) < w(i) < w(j)
                    if (w(k) < w(l) && w(l) < w(i) && w(i) < w(j)) return false;
                    // 4231: w(l) < w(j) < w(k) < w(i)
                    if (w(l) < w(j) && w(j) < w(k) && w(k) < w(i)) return false;
                }
    return true;
}

bool HeckeContext::isSmooth(const Permutation& w) {
    bool byPattern = isPatternSmooth(w);
    bool byKL = true;
    int lw = w.length();
    for (const auto& [y, p] : klRow(index(w))) {
        int expect = lw - lengths_[y];
        if (!(p.size() == 1 && p[0].exp == expect && p[0].coeff == 1)) {
            byKL = false;
            break;
        }
    }
    if (byPattern != byKL)
        throw std::logic_error("isSmooth: pattern-avoidance and KL verdicts disagree on " + w.str());
    return byKL;
}

HeckeElement HeckeContext::halfTwistKL() {
    HeckeElement out = HeckeElement::zero(n_, Basis::KL);
    Permutation w0 = longestElement(n_);
    int lw0 = w0.length();
    for (std::uint32_t xi = 0; xi < order_; ++xi) {
        const Permutation& x = elements_[xi];
        Permutation w0x = w0 * x;
        Laurent h = klPolynomial(Permutation(n_), w0x);
        if (h.isZero()) continue;
        if ((lw0 - lengths_[xi]) % 2 == 1) h = -h;
        out.addTerm(x, h);
    }
    return out;
}

bool HeckeContext::installKLRows(std::vector<KLRow> rows, int builtUpTo) {
    if (rows.size() != order_) return false;
    std::lock_guard<std::mutex> lock(klMutex_);
    if (builtUpTo_ >= builtUpTo) return true;  // nothing to gain
    // light validation: diagonal entries must be 1, entries sorted
    for (std::uint32_t w = 0; w < order_; ++w) {
        if (lengths_[w] > builtUpTo) continue;
        const KLRow& row = rows[w];
        if (row.empty()) return false;
        bool sawDiag = false;
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0 && row[i].first <= row[i - 1].first) return false;
            if (row[i].first == w)
                sawDiag = row[i].second.size() == 1 && row[i].second[0].exp == 0 && row[i].second[0].coeff == 1;
        }
        if (!sawDiag) return false;
    }
    rows_ = std::move(rows);
    builtUpTo_ = builtUpTo;
    return true;
}

}  // namespace klcells
