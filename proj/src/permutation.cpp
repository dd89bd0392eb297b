#include "klcells/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klcells {

Permutation::Permutation(int n) : img_(n) {
    if (n < 1) throw std::invalid_argument("Permutation: rank must be >= 1");
    std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    int n = static_cast<int>(img_.size());
    if (n < 1) throw std::invalid_argument("Permutation: rank must be >= 1");
    std::vector<char> seen(n + 1, 0);
    for (int v : img_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("Permutation: not a bijection of 1..n");
        seen[v] = 1;
    }
}

bool Permutation::isIdentity() const {
    for (int i = 1; i <= rank(); ++i)
        if (img_[i - 1] != i) return false;
    return true;
}

int Permutation::length() const {
    int n = rank(), inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

Permutation Permutation::inverse() const {
    std::vector<int> out(rank());
    for (int i = 1; i <= rank(); ++i) out[img_[i - 1] - 1] = i;
    return Permutation(std::move(out));
}

Permutation Permutation::operator*(const Permutation& y) const {
    if (rank() != y.rank()) throw std::invalid_argument("Permutation product: rank mismatch");
    std::vector<int> out(rank());
    for (int i = 1; i <= rank(); ++i) out[i - 1] = img_[y.img_[i - 1] - 1];
    return Permutation(std::move(out));
}

bool Permutation::operator<(const Permutation& o) const {
    if (rank() != o.rank()) return rank() < o.rank();
    return img_ < o.img_;
}

std::string Permutation::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rank(); ++i) os << (i ? "," : "") << img_[i];
    os << "]";
    return os.str();
}

Permutation simpleReflection(int n, int i) {
    if (i < 1 || i >= n) throw std::invalid_argument("simpleReflection: index out of range");
    Permutation w(n);
    std::vector<int> img = w.images();
    std::swap(img[i - 1], img[i]);
    return Permutation(std::move(img));
}

Permutation evalWord(int n, const Word& w) {
    Permutation r(n);
    for (int i : w.letters) r = r * simpleReflection(n, i);
    return r;
}

Permutation longestElement(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = n - i;
    return Permutation(std::move(img));
}

Permutation parabolicLongest(int n, const std::vector<int>& blockSizes) {
    int total = 0;
    for (int k : blockSizes) {
        if (k <= 0) throw std::invalid_argument("parabolicLongest: nonpositive block");
        total += k;
    }
    if (total != n) throw std::invalid_argument("parabolicLongest: blocks must sum to rank");
    std::vector<int> img;
    img.reserve(n);
    int base = 0;
    for (int k : blockSizes) {
        for (int i = 0; i < k; ++i) img.push_back(base + k - i);
        base += k;
    }
    return Permutation(std::move(img));
}

bool bruhatLeq(const Permutation& x, const Permutation& w) {
    int n = x.rank();
    if (n != w.rank()) throw std::invalid_argument("bruhatLeq: rank mismatch");
    // Dot criterion: for every i, the decreasing rearrangement of the first i
    // values of x is entrywise <= that of w.
    std::vector<int> xv, wv;
    xv.reserve(n);
    wv.reserve(n);
    for (int i = 1; i <= n; ++i) {
        int a = x(i), b = w(i);
        xv.insert(std::upper_bound(xv.begin(), xv.end(), a, std::greater<>()), a);
        wv.insert(std::upper_bound(wv.begin(), wv.end(), b, std::greater<>()), b);
        for (size_t r = 0; r < xv.size(); ++r)
            if (xv[r] > wv[r]) return false;
    }
    return true;
}

bool bruhatLeqSubwordOracle(const Permutation& x, const Permutation& w) {
    if (x.rank() != w.rank()) throw std::invalid_argument("bruhatLeqSubwordOracle: rank mismatch");
    Word rex = positiveLiftWord(w);
    int d = static_cast<int>(rex.letters.size());
    int lx = x.length();
    if (lx > d) return false;
    for (std::uint64_t mask = 0; mask < (1ull << d); ++mask) {
        if (__builtin_popcountll(mask) != lx) continue;
        Permutation p(x.rank());
        for (int j = 0; j < d; ++j)
            if (mask & (1ull << j)) p = p * simpleReflection(x.rank(), rex.letters[j]);
        if (p == x) return true;
    }
    return false;
}

bool hasDescent(const Permutation& w, Side side, int i) {
    if (i < 1 || i >= w.rank()) return false;
    if (side == Side::Right) return w(i) > w(i + 1);
    // left descent: l(s_i w) < l(w), i.e. i+1 appears before i in one-line form
    return w.inverse()(i) > w.inverse()(i + 1);
}

std::set<int> descents(const Permutation& w, Side side) {
    std::set<int> out;
    for (int i = 1; i < w.rank(); ++i)
        if (hasDescent(w, side, i)) out.insert(i);
    return out;
}

Permutation tauTwist(const Permutation& w) {
    Permutation w0 = longestElement(w.rank());
    return w0 * w * w0;
}

CosetDecomposition cosetDecomposeLeft(const Permutation& w, int k) {
    int n = w.rank();
    if (k < 1 || k > n) throw std::invalid_argument("cosetDecomposeLeft: k out of range");
    // t puts 1..k in the same relative order as w(1)..w(k).
    std::vector<int> firstVals(w.images().begin(), w.images().begin() + k);
    std::vector<int> sorted = firstVals;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> timg(k);
    for (int i = 0; i < k; ++i)
        timg[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), firstVals[i]) - sorted.begin()) + 1;
    Permutation t(std::move(timg));
    std::vector<int> tfull = t.images();
    for (int i = k + 1; i <= n; ++i) tfull.push_back(i);
    Permutation x = w * Permutation(tfull).inverse();
    return CosetDecomposition{t, x};
}

Permutation cabledCrossing(int k, int l) {
    if (k < 1 || l < 1) throw std::invalid_argument("cabledCrossing: blocks must be positive");
    std::vector<int> img(k + l);
    for (int i = 1; i <= k; ++i) img[i - 1] = i + l;
    for (int j = 1; j <= l; ++j) img[k + j - 1] = j;
    return Permutation(std::move(img));
}

Permutation cabledHalfTwist(const std::vector<int>& columnSizes) {
    int n = 0;
    for (int k : columnSizes) {
        if (k <= 0) throw std::invalid_argument("cabledHalfTwist: nonpositive block");
        n += k;
    }
    return longestElement(n) * parabolicLongest(n, columnSizes);
}

Word positiveLiftWord(const Permutation& w) {
    // Greedy: the possible first letters of a rex are the left descents, so
    // repeatedly peeling off the smallest one yields the lex-min reduced word.
    Word out;
    Permutation cur = w;
    int n = w.rank();
    while (!cur.isIdentity()) {
        Permutation inv = cur.inverse();
        int i = 1;
        while (i < n && inv(i) < inv(i + 1)) ++i;
        out.letters.push_back(i);
        cur = simpleReflection(n, i) * cur;
    }
    return out;
}

Permutation externalProduct(const Permutation& a, const Permutation& b) {
    std::vector<int> img = a.images();
    for (int v : b.images()) img.push_back(v + a.rank());
    return Permutation(std::move(img));
}

std::vector<Permutation> allPermutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::uint32_t permutationIndex(const Permutation& w) {
    int n = w.rank();
    std::uint32_t idx = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (w.images()[j] < w.images()[i]) ++smaller;
        idx = idx * static_cast<std::uint32_t>(n - i) + static_cast<std::uint32_t>(smaller);
    }
    return idx;
}

Permutation permutationFromIndex(int n, std::uint32_t idx) {
    std::vector<std::uint32_t> code(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        code[i] = idx % static_cast<std::uint32_t>(n - i);
        idx /= static_cast<std::uint32_t>(n - i);
    }
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) {
        img[i] = pool[code[i]];
        pool.erase(pool.begin() + code[i]);
    }
    return Permutation(std::move(img));
}

}  // namespace klcells
