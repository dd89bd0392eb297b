#include "klcells/shapes.hpp"

#include "klcells/cells.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klcells {

void ComplexShape::add(int degree, const Permutation& x, int shift, long mult) {
    if (x.rank() != n_) throw std::invalid_argument("ComplexShape::add: rank mismatch");
    if (mult <= 0) throw std::invalid_argument("ComplexShape::add: multiplicity must be positive");
    auto& vec = degrees_[degree];
    for (auto& e : vec) {
        if (e.x == x && e.shift == shift) {
            e.mult += mult;
            return;
        }
    }
    vec.push_back(ShapeEntry{x, shift, mult});
    std::sort(vec.begin(), vec.end(), [](const ShapeEntry& a, const ShapeEntry& b) {
        if (a.shift != b.shift) return a.shift < b.shift;
        return a.x < b.x;
    });
}

long ComplexShape::summandCount() const {
    long c = 0;
    for (const auto& [d, vec] : degrees_)
        for (const auto& e : vec) c += e.mult;
    return c;
}

int ComplexShape::minDegree() const {
    if (degrees_.empty()) throw std::domain_error("minDegree of empty shape");
    return degrees_.begin()->first;
}

int ComplexShape::maxDegree() const {
    if (degrees_.empty()) throw std::domain_error("maxDegree of empty shape");
    return degrees_.rbegin()->first;
}

bool ComplexShape::isPerverse() const {
    for (const auto& [d, vec] : degrees_)
        for (const auto& e : vec)
            if (e.shift != d) return false;
    return true;
}

std::string ComplexShape::str() const {
    std::ostringstream os;
    bool firstDeg = true;
    for (const auto& [d, vec] : degrees_) {
        if (!firstDeg) os << "; ";
        firstDeg = false;
        os << d << ": ";
        for (size_t i = 0; i < vec.size(); ++i) {
            if (i) os << ", ";
            os << "B" << vec[i].x.str() << "(" << vec[i].shift << ")";
            if (vec[i].mult != 1) os << "x" << vec[i].mult;
        }
    }
    return os.str();
}

ComplexShape rouquierShape(const Permutation& w) {
    int n = w.rank();
    auto ctx = HeckeContext::get(n);
    Permutation w0 = longestElement(n);
    Permutation w0w = w0 * w;
    ComplexShape shape(n);
    int lw = w.length();
    for (std::uint32_t xi = 0; xi < ctx->order(); ++xi) {
        const Permutation& x = ctx->element(xi);
        Laurent h = ctx->klPolynomial(w0w, w0 * x);
        if (h.isZero()) continue;
        int parity = (lw - ctx->length(xi)) & 1;
        for (const auto& [exp, coeff] : h.terms()) {
            if ((exp & 1) != parity)
                throw std::logic_error("rouquierShape: exponent parity breaks the sign convention at " + x.str());
            if (coeff < 0) throw std::logic_error("rouquierShape: negative multiplicity at " + x.str());
            if (!coeff.fits_slong_p()) throw std::overflow_error("rouquierShape: multiplicity overflow");
            shape.add(exp, x, exp, coeff.get_si());
        }
    }
    return shape;
}

HeckeElement eulerCharacteristic(const ComplexShape& shape) {
    HeckeElement out = HeckeElement::zero(shape.rank(), Basis::KL);
    for (const auto& [d, vec] : shape.degrees()) {
        int sign = (d % 2 == 0) ? 1 : -1;
        for (const auto& e : vec) out.addTerm(e.x, Laurent::monomial(e.shift, sign * e.mult));
    }
    return out;
}

std::map<int, HtCellSupport> htSupportStats(int n) {
    auto cells = CellContext::get(n);
    ComplexShape ht = rouquierShape(longestElement(n));
    std::map<int, std::map<int, std::vector<ShapeEntry>>> byCell;  // shape id -> degree -> entries
    for (const auto& [d, vec] : ht.degrees())
        for (const auto& e : vec) byCell[cells->shapeIdOf(cells->hecke().index(e.x))][d].push_back(e);
    std::map<int, HtCellSupport> out;
    Permutation w0 = longestElement(n);
    for (const auto& [shapeId, degreeMap] : byCell) {
        const Partition& lambda = cells->shapes()[shapeId];
        int c = partitionStatistics(lambda).c;
        HtCellSupport sup;
        sup.minDegree = degreeMap.begin()->first;
        if (sup.minDegree != c)
            throw std::logic_error("htSupportStats: minimal degree of cell " + lambda.str() + " is " +
                                   std::to_string(sup.minDegree) + ", expected " + std::to_string(c));
        for (const auto& e : degreeMap.begin()->second) {
            if (e.mult != 1)
                throw std::logic_error("htSupportStats: degree-c summand with multiplicity > 1 in " + lambda.str());
            sup.atMin.push_back(e.x);
        }
        std::sort(sup.atMin.begin(), sup.atMin.end());
        // expected: w0 d for d distinguished in the transposed cell
        std::vector<Permutation> expected;
        for (const Permutation& d : cells->distinguishedInvolutions(lambda.transpose())) expected.push_back(w0 * d);
        std::sort(expected.begin(), expected.end());
        if (sup.atMin != expected)
            throw std::logic_error("htSupportStats: degree-c summands of " + lambda.str() +
                                   " are not the twisted distinguished involutions");
        out.emplace(shapeId, std::move(sup));
    }
    return out;
}

std::vector<FixtureCheck> fixtureEulerChecks() {
    std::vector<FixtureCheck> out;
    for (const TwistFixture& f : twistFixtures()) {
        HeckeElement euler = eulerCharacteristic(f.shape);
        bool ok = euler == f.expectedEuler;
        std::string detail = ok ? "" : "euler " + euler.str() + " != " + f.expectedEuler.str();
        out.push_back(FixtureCheck{f.name, ok, detail});
    }
    return out;
}

}  // namespace klcells
