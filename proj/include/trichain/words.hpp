#pragma once

// Words in the generators c_1,...,c_n of the punctured-sphere group and the
// standard pants-decomposition curves b_i = c_{i+1}^{-1} c_i^{-1} ... c_1^{-1}.

#include <string>
#include <vector>

#include "trichain/halfplane.hpp"

namespace trichain {

struct Letter {
    int index = 0;      // generator index, 0-based: letter i stands for c_{i+1}
    int exponent = 1;   // +1 or -1
};

struct Word {
    std::vector<Letter> letters;  // empty word = identity

    Word inverse() const;
    Word operator*(const Word& rhs) const;  // concatenation with adjacent-inverse cancellation
};

// Parse the CLI text syntax, e.g. "c3^-1*c2^-1*c1^-1". Throws DomainError on
// malformed input, out-of-range indices or exponents other than +-1.
Word parse_word(const std::string& text, int n);
std::string format_word(const Word& w);

struct PantsCurves {
    int n = 0;
    std::vector<Word> b;  // b[i] is the curve b_{i+1}, i = 0..n-4
};

// The n-3 standard interior curves; empty for n = 3. The boundary markers are
// b_0 = c_1^{-1} and b_{n-2} = c_n by convention and are not stored.
PantsCurves make_pants_curves(int n);

// Left-to-right product of rep[i]^{+-1} over the letters of w.
// Throws DomainError if a letter index is out of range.
Isometry evaluate(const Word& w, const std::vector<Isometry>& rep);

}  // namespace trichain
