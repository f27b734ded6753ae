#pragma once

#include <cstdint>
#include <vector>

#include "traintrack/colour.hpp"
#include "traintrack/errors.hpp"

namespace traintrack::braids {

// One Artin letter: generator index i (1-based, crossing strands i and i+1)
// and handedness sign.
struct BraidLetter {
    int index = 1;
    int sign = +1;

    bool operator==(const BraidLetter& other) const {
        return index == other.index && sign == other.sign;
    }
};

// A coloured braid: a source word plus an unreduced Artin word. Equality is
// semantic (braids_equal), never literal.
struct ColouredBraid {
    ColourWord source;
    std::vector<BraidLetter> word;
};

ColouredBraid identity_braid(const ColourWord& source);

// Permutation mapping source positions to target positions (0-based vector:
// result[i] = where strand starting at position i ends up).
std::vector<int> permutation_of(const ColouredBraid& b);

// Target colour word = permutation applied to the source.
ColourWord target_of(const ColouredBraid& b);

// Path concatenation; throws BoundaryMismatch when target(b1) != source(b2).
ColouredBraid compose_braids(const ColouredBraid& b1, const ColouredBraid& b2);

// Juxtaposition on the axis; b2's letters shift by |source(b1)|.
ColouredBraid tensor_braids(const ColouredBraid& b1, const ColouredBraid& b2);

// Reversed word with flipped signs; source becomes target(b).
ColouredBraid invert(const ColouredBraid& b);

// The block transposition moving the w-block past the v-block with all
// crossings of the given handedness: runs sigma_{n+j-1}..sigma_j for each
// letter j = 1..|w| of w taken left to right (n = |v|).
ColouredBraid block_braiding(const ColourWord& v, const ColourWord& w, int handedness);

// Exact decision procedure: sources and targets agree colour-wise, and
// b1 * b2^{-1} acts as the identity on the free group (the faithful Artin
// action sigma_i: x_i -> x_i x_{i+1} x_i^{-1}, x_{i+1} -> x_i).
bool braids_equal(const ColouredBraid& b1, const ColouredBraid& b2);

bool is_identity(const ColouredBraid& b);

// --- Equality oracle internals (exposed for direct testing) ----------------

// A freely reduced word in generators x_1..x_n: signed 1-based indices.
using FreeGroupWord = std::vector<int>;

// Appends a letter with free cancellation.
void free_append(FreeGroupWord& w, int letter);

// Image of `w` under the automorphism of one braid letter.
FreeGroupWord apply_letter(const BraidLetter& letter, const FreeGroupWord& w, int strands);

// Image of `w` under the whole braid word, letters applied left to right.
FreeGroupWord apply_braid(const ColouredBraid& b, const FreeGroupWord& w);

} // namespace traintrack::braids
