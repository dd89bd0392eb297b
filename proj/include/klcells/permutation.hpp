#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace klcells {

// Element of the symmetric group S_n in one-line notation.  images[i-1] is
// the image of i; every element carries its rank n, and cross-rank operations
// are rejected rather than silently embedded.
class Permutation {
public:
    explicit Permutation(int n);                    // identity
    explicit Permutation(std::vector<int> images);  // validated

    int rank() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& images() const { return img_; }

    bool isIdentity() const;
    int length() const;  // inversion count
    Permutation inverse() const;
    // Composition (x*y)(i) = x(y(i)).
    Permutation operator*(const Permutation& y) const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return img_ != o.img_; }
    bool operator<(const Permutation& o) const;  // lex on one-line notation

    std::string str() const;  // e.g. [3,1,2]

private:
    std::vector<int> img_;
};

enum class Side { Left, Right };

// A word in the simple reflections s_1..s_{n-1}, stored as letter indices.
struct Word {
    std::vector<int> letters;
    bool operator==(const Word& o) const { return letters == o.letters; }
};

Permutation simpleReflection(int n, int i);
// Evaluates letters left to right: s_{i_1} * s_{i_2} * ... * s_{i_d}.
Permutation evalWord(int n, const Word& w);

Permutation longestElement(int n);
// Longest element of S_{k_1} x ... x S_{k_r} embedded block-consecutively.
Permutation parabolicLongest(int n, const std::vector<int>& blockSizes);

// Bruhat order via the dot criterion on one-line notation.
bool bruhatLeq(const Permutation& x, const Permutation& w);
// The subword characterization, exponential; kept as a test oracle.
bool bruhatLeqSubwordOracle(const Permutation& x, const Permutation& w);

std::set<int> descents(const Permutation& w, Side side);
bool hasDescent(const Permutation& w, Side side, int i);

// Conjugation by the longest element, the diagram automorphism s_i -> s_{n-i}.
Permutation tauTwist(const Permutation& w);

// Unique decomposition w = x * t with t in S_k x S_1^{n-k} and x of minimal
// length in the coset w(S_k x S_1^{n-k}); lengths add.  Returns (t, x) with
// t carried in S_k.
struct CosetDecomposition {
    Permutation t;  // in S_k
    Permutation x;  // minimal coset representative, in S_n
};
CosetDecomposition cosetDecomposeLeft(const Permutation& w, int k);

// Shortest element of the coset w_{k+l}(S_k x S_l): crosses the first k
// strands over the last l.
Permutation cabledCrossing(int k, int l);
// Shortest element of the coset w_n(S_{k_1} x ... x S_{k_r}).
Permutation cabledHalfTwist(const std::vector<int>& columnSizes);

// The lexicographically smallest reduced word of w under letter-index order;
// deterministic, also serves as the positive braid lift.
Word positiveLiftWord(const Permutation& w);

// External product S_i x S_j -> S_{i+j}, blocks side by side.
Permutation externalProduct(const Permutation& a, const Permutation& b);

// All n! elements in lexicographic one-line order.
std::vector<Permutation> allPermutations(int n);

// Lexicographic rank (Lehmer code) and its inverse.
std::uint32_t permutationIndex(const Permutation& w);
Permutation permutationFromIndex(int n, std::uint32_t idx);

}  // namespace klcells
