#pragma once

#include "klcells/hecke.hpp"
#include "klcells/tableau.hpp"
#include "klcells/twists.hpp"

#include <map>
#include <string>
#include <vector>

namespace klcells {

struct ShapeEntry {
    Permutation x;
    int shift;
    long mult;
    bool operator==(const ShapeEntry& o) const { return x == o.x && shift == o.shift && mult == o.mult; }
};

// Graded multiplicity data of a minimal complex: homological degree ->
// summands (element, internal shift, multiplicity).
class ComplexShape {
public:
    ComplexShape(int n) : n_(n) {}

    int rank() const { return n_; }
    void add(int degree, const Permutation& x, int shift, long mult = 1);
    const std::map<int, std::vector<ShapeEntry>>& degrees() const { return degrees_; }
    bool empty() const { return degrees_.empty(); }
    long summandCount() const;
    int minDegree() const;
    int maxDegree() const;
    // Internal shift equals homological degree everywhere.
    bool isPerverse() const;

    bool operator==(const ComplexShape& o) const { return n_ == o.n_ && degrees_ == o.degrees_; }
    std::string str() const;

private:
    int n_;
    std::map<int, std::vector<ShapeEntry>> degrees_;  // entries sorted canonically
};

// Minimal-complex shape of the Rouquier complex of w: degree-i summands
// (x, i) with multiplicity the v^i coefficient of h_{w0 w, w0 x}.  The sign
// pattern of the inversion formula is checked to be absorbed exactly by the
// homological degree; any parity mismatch raises.
ComplexShape rouquierShape(const Permutation& w);

// Sum over the shape of (-1)^degree v^shift mult b_x.
HeckeElement eulerCharacteristic(const ComplexShape& shape);

struct HtCellSupport {
    int minDegree;                    // equals c(lambda)
    std::vector<Permutation> atMin;   // degree-c summands, each multiplicity 1
};

// Per-cell support statistics of the half-twist shape: for each lambda the
// minimal degree of a cell-lambda summand equals c(lambda), and the summands
// there are exactly the w0-twisted distinguished involutions of lambda^t.
std::map<int, HtCellSupport> htSupportStats(int n);  // keyed by shape index in CellContext

struct FixtureCheck {
    std::string name;
    bool ok;
    std::string detail;
};

// Transcribed minimal-complex shapes for rank <= 3 twists and the four
// S_3 quasi-idempotent complexes, checked against the algebra by Euler
// characteristic.
std::vector<FixtureCheck> fixtureEulerChecks();

// The transcription set itself, exposed for the CLI and tests.
struct TwistFixture {
    std::string name;
    ComplexShape shape;
    HeckeElement expectedEuler;  // KL basis
};
std::vector<TwistFixture> twistFixtures();
extern const int kTwistFixtureVersion;

}  // namespace klcells
