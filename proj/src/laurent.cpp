#include "klcells/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace klcells {

Laurent Laurent::monomial(int exp, mpz_class coeff) {
    Laurent r;
    if (coeff != 0) r.terms_[exp] = std::move(coeff);
    return r;
}

bool Laurent::isOne() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

mpz_class Laurent::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

int Laurent::minExp() const {
    if (terms_.empty()) throw std::domain_error("minExp of zero polynomial");
    return terms_.begin()->first;
}

int Laurent::maxExp() const {
    if (terms_.empty()) throw std::domain_error("maxExp of zero polynomial");
    return terms_.rbegin()->first;
}

void Laurent::addTerm(int exp, const mpz_class& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) addTerm(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) addTerm(e, -c);
    return *this;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.addTerm(e1 + e2, c1 * c2);
    return r;
}

Laurent Laurent::bar() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

Laurent Laurent::shifted(int k) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

Laurent Laurent::pow(unsigned e) const {
    Laurent r(1);
    Laurent base = *this;
    while (e > 0) {
        if (e & 1u) r *= base;
        base = base * base;
        e >>= 1u;
    }
    return r;
}

bool Laurent::nonnegative() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

bool Laurent::inVZ() const {
    return terms_.empty() || terms_.begin()->first >= 1;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "v";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

Laurent quantumInt(int k) {
    if (k < 0) throw std::domain_error("quantumInt of negative k");
    Laurent r;
    for (int e = 1 - k; e <= k - 1; e += 2) r.addTerm(e, 1);
    return r;
}

Laurent quantumFactorial(int k) {
    Laurent r(1);
    for (int i = 2; i <= k; ++i) r *= quantumInt(i);
    return r;
}

Laurent quantumFactorialProduct(const std::vector<int>& blockSizes) {
    Laurent r(1);
    for (int k : blockSizes) {
        if (k <= 0) throw std::domain_error("nonpositive block size");
        r *= quantumFactorial(k);
    }
    return r;
}

}  // namespace klcells
