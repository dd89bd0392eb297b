#include "klcells/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace klcells {

MultiPoly MultiPoly::constant(int nvars, const mpz_class& c) {
    MultiPoly p(nvars);
    p.addTerm(std::vector<int>(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly p(nvars);
    std::vector<int> e(nvars, 0);
    e[i - 1] = 1;
    p.addTerm(e, 1);
    return p;
}

void MultiPoly::addTerm(const std::vector<int>& exps, const mpz_class& c) {
    if (static_cast<int>(exps.size()) != nvars_) throw std::invalid_argument("MultiPoly::addTerm: arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.addTerm(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.addTerm(e, -c);
    return r;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly r(nvars_);
    std::vector<int> e(nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.addTerm(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::applyPermutation(const Permutation& w) const {
    if (w.rank() != nvars_) throw std::invalid_argument("MultiPoly::applyPermutation: rank mismatch");
    MultiPoly r(nvars_);
    std::vector<int> e(nvars_);
    for (const auto& [exps, c] : terms_) {
        for (int i = 1; i <= nvars_; ++i) e[w(i) - 1] = exps[i - 1];
        r.addTerm(e, c);
    }
    return r;
}

bool MultiPoly::isHomogeneous() const {
    if (terms_.empty()) return true;
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int deg = std::accumulate(e.begin(), e.end(), 0);
        if (d == -1) d = deg;
        else if (deg != d) return false;
    }
    return true;
}

int MultiPoly::totalDegree() const {
    if (terms_.empty()) throw std::domain_error("totalDegree of zero polynomial");
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

std::vector<std::vector<int>> MultiPoly::monomialsGradedLex() const {
    std::vector<std::vector<int>> out;
    for (const auto& [e, c] : terms_) out.push_back(e);
    std::sort(out.begin(), out.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
        int da = std::accumulate(a.begin(), a.end(), 0);
        int db = std::accumulate(b.begin(), b.end(), 0);
        if (da != db) return da > db;
        return a > b;
    });
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& e : monomialsGradedLex()) {
        mpz_class c = terms_.at(e);
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool isConst = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        if (c != 1 || isConst) os << c.get_str();
        bool needStar = c != 1;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (needStar) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            needStar = true;
        }
    }
    return os.str();
}

}  // namespace klcells
