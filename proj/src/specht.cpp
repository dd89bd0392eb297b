#include "klcells/specht.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace klcells {

namespace {

using QRow = std::vector<mpq_class>;
using QMat = std::vector<QRow>;

long gaussRank(QMat m) {
    long rank = 0;
    size_t cols = m.empty() ? 0 : m[0].size();
    size_t row = 0;
    for (size_t col = 0; col < cols && row < m.size(); ++col) {
        size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        for (size_t r = row + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            mpq_class f = m[r][col] / m[row][col];
            for (size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Coefficient matrix of the polynomials over the union of their monomials.
QMat coefficientMatrix(const std::vector<MultiPoly>& polys) {
    std::map<std::vector<int>, size_t> columns;
    for (const MultiPoly& p : polys)
        for (const auto& [e, c] : p.terms()) columns.emplace(e, 0);
    size_t idx = 0;
    for (auto& [e, col] : columns) col = idx++;
    QMat m(polys.size(), QRow(columns.size(), 0));
    for (size_t r = 0; r < polys.size(); ++r)
        for (const auto& [e, c] : polys[r].terms()) m[r][columns.at(e)] = mpq_class(c);
    return m;
}

// Solve sum_i coords[i] * basis[i] = target exactly; returns false when the
// target is outside the span.
bool expressInBasis(const std::vector<MultiPoly>& basis, const MultiPoly& target, QRow* coords) {
    std::vector<MultiPoly> all = basis;
    all.push_back(target);
    QMat m = coefficientMatrix(all);
    size_t cols = m.empty() ? 0 : m[0].size();
    size_t k = basis.size();
    // transpose system: columns are basis vectors, rhs is target row
    QMat sys(cols, QRow(k + 1, 0));
    for (size_t c = 0; c < cols; ++c) {
        for (size_t r = 0; r < k; ++r) sys[c][r] = m[r][c];
        sys[c][k] = m[k][c];
    }
    std::vector<long> pivotCol(k, -1);
    size_t row = 0;
    for (size_t col = 0; col < k && row < sys.size(); ++col) {
        size_t pivot = row;
        while (pivot < sys.size() && sys[pivot][col] == 0) ++pivot;
        if (pivot == sys.size()) continue;
        std::swap(sys[row], sys[pivot]);
        for (size_t r = 0; r < sys.size(); ++r) {
            if (r == row || sys[r][col] == 0) continue;
            mpq_class f = sys[r][col] / sys[row][col];
            for (size_t c = col; c <= k; ++c) sys[r][c] -= f * sys[row][c];
        }
        pivotCol[col] = static_cast<long>(row);
        ++row;
    }
    // consistency: no row with all-zero coefficients but nonzero rhs
    for (const QRow& r : sys) {
        bool zeroLhs = std::all_of(r.begin(), r.end() - 1, [](const mpq_class& q) { return q == 0; });
        if (zeroLhs && r.back() != 0) return false;
    }
    if (coords) {
        coords->assign(k, 0);
        for (size_t col = 0; col < k; ++col)
            if (pivotCol[col] >= 0) (*coords)[col] = sys[pivotCol[col]][k] / sys[pivotCol[col]][col];
    }
    return true;
}

}  // namespace

Filling::Filling(std::vector<std::vector<int>> r) : rows(std::move(r)) {
    int total = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty()) throw std::invalid_argument("Filling: empty row");
        if (i > 0 && rows[i].size() > rows[i - 1].size())
            throw std::invalid_argument("Filling: invalid shape");
        total += static_cast<int>(rows[i].size());
    }
    std::vector<char> seen(total + 1, 0);
    for (const auto& row : rows)
        for (int e : row) {
            if (e < 1 || e > total || seen[e]) throw std::invalid_argument("Filling: entries must be 1..n");
            seen[e] = 1;
        }
}

int Filling::n() const {
    int total = 0;
    for (const auto& r : rows) total += static_cast<int>(r.size());
    return total;
}

Partition Filling::shape() const {
    std::vector<int> p;
    for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
    return Partition(std::move(p));
}

Filling Filling::applyPermutation(const Permutation& w) const {
    if (w.rank() != n()) throw std::invalid_argument("Filling::applyPermutation: rank mismatch");
    std::vector<std::vector<int>> out = rows;
    for (auto& row : out)
        for (int& e : row) e = w(e);
    return Filling(std::move(out));
}

MultiPoly gPolynomial(const Filling& T) {
    int n = T.n();
    MultiPoly g = MultiPoly::constant(n, 1);
    size_t maxCols = T.rows.empty() ? 0 : T.rows[0].size();
    for (size_t col = 0; col < maxCols; ++col) {
        std::vector<int> column;
        for (const auto& row : T.rows)
            if (col < row.size()) column.push_back(row[col]);
        for (size_t a = 0; a < column.size(); ++a)
            for (size_t b = a + 1; b < column.size(); ++b)
                g = g * (MultiPoly::variable(n, column[a]) - MultiPoly::variable(n, column[b]));
    }
    return g;
}

std::vector<MultiPoly> spechtBasis(const Partition& lambda) {
    std::vector<MultiPoly> basis;
    for (const Tableau& t : standardTableaux(lambda)) basis.push_back(gPolynomial(Filling(t)));
    if (polySpanRank(basis) != static_cast<long>(basis.size()))
        throw std::logic_error("spechtBasis: standard generators are dependent for " + lambda.str());
    return basis;
}

long spechtDimension(const Partition& lambda) { return static_cast<long>(spechtBasis(lambda).size()); }

bool membershipInSpan(const MultiPoly& p, const Partition& lambda) {
    if (p.isZero()) return true;
    int r = partitionStatistics(lambda).r;
    if (!p.isHomogeneous() || p.totalDegree() != r)
        throw std::invalid_argument("membershipInSpan: polynomial is not homogeneous of degree r(lambda)");
    std::vector<MultiPoly> basis = spechtBasis(lambda);
    return expressInBasis(basis, p, nullptr);
}

MultiPoly positiveRootsProduct(const std::vector<int>& blockSizes) {
    int n = 0;
    for (int k : blockSizes) {
        if (k <= 0) throw std::invalid_argument("positiveRootsProduct: nonpositive block");
        n += k;
    }
    MultiPoly g = MultiPoly::constant(n, 1);
    int base = 0;
    for (int k : blockSizes) {
        for (int i = 1; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j)
                g = g * (MultiPoly::variable(n, base + i) - MultiPoly::variable(n, base + j));
        base += k;
    }
    return g;
}

long polySpanRank(const std::vector<MultiPoly>& polys) {
    if (polys.empty()) return 0;
    return gaussRank(coefficientMatrix(polys));
}

long spechtCommutantDimension(const Partition& lambda) {
    int n = lambda.n();
    std::vector<MultiPoly> basis = spechtBasis(lambda);
    long d = static_cast<long>(basis.size());
    std::vector<Tableau> tabs = standardTableaux(lambda);
    // action matrices of the simple reflections, columns = images of basis vectors
    std::vector<QMat> action;
    for (int s = 1; s < n; ++s) {
        Permutation ref = simpleReflection(n, s);
        QMat M(d, QRow(d, 0));
        for (long j = 0; j < d; ++j) {
            MultiPoly image = gPolynomial(Filling(tabs[j]).applyPermutation(ref));
            QRow coords;
            if (!expressInBasis(basis, image, &coords))
                throw std::logic_error("spechtCommutantDimension: action leaves the span");
            for (long i = 0; i < d; ++i) M[i][j] = coords[i];
        }
        action.push_back(std::move(M));
    }
    if (action.empty()) return 1;
    // null space dimension of X -> (X M_s - M_s X)_s
    QMat sys;
    for (const QMat& M : action) {
        for (long a = 0; a < d; ++a)
            for (long b = 0; b < d; ++b) {
                QRow row(d * d, 0);
                // (X M - M X)[a][b] = sum_k X[a][k] M[k][b] - M[a][k] X[k][b]
                for (long k = 0; k < d; ++k) {
                    row[a * d + k] += M[k][b];
                    row[k * d + b] -= M[a][k];
                }
                sys.push_back(std::move(row));
            }
    }
    return d * d - gaussRank(std::move(sys));
}

}  // namespace klcells
