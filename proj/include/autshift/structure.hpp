#ifndef AUTSHIFT_STRUCTURE_HPP
#define AUTSHIFT_STRUCTURE_HPP

#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "autshift/substitution.hpp"

namespace autshift {

// Seeds of the bi-infinite periodic points: a right seed a satisfies
// (theta^p)_0(a) = a, a left seed b satisfies (theta^p)_{r^p-1}(b) = b, and a
// pair b.a is admissible when the two-letter word ba occurs in the language.
struct PeriodicPointSeeds {
    int period = 1;                                // minimal common period p
    std::vector<Letter> right_seeds;
    std::vector<Letter> left_seeds;
    std::vector<std::pair<Letter, Letter>> admissible_pairs;  // (left, right)
};

PeriodicPointSeeds periodic_point_seeds(const Substitution& theta);

// First N letters of the one-sided fixed point of theta^period at a right seed.
Word fixed_point_prefix(const Substitution& theta, Letter seed, int N);
// Last N letters of the left-infinite fixed point at a left seed.
Word left_fixed_point_suffix(const Substitution& theta, Letter seed, int N);

// A finite window of a point, with `origin` the index of coordinate 0.
struct Window {
    Word word;
    int origin = 0;
};

// The two-sided window of the periodic point b.a covering [-left_len, right_len).
Window periodic_point_window(const Substitution& theta, Letter left_seed,
                             Letter right_seed, int left_len, int right_len);

int height(const Substitution& theta);

// For height h >= 2, the class of each letter: positions of a letter in the
// fixed point are constant mod h.
std::vector<int> height_phases(const Substitution& theta, int h);

// Block presentation over the length-k blocks at positions 0 mod k of the
// canonical fixed point; used by the pure base and by compression.
struct BlockSubstitution {
    Substitution blocks;             // substitution on the block alphabet
    std::vector<Word> block_words;   // block letter -> underlying word over theta
};

BlockSubstitution block_substitution(const Substitution& theta, int k);

// The pure base of a substitution of height h >= 2.
BlockSubstitution pure_base(const Substitution& theta);

// Merges letters with identical images (iterated) and returns the injective
// quotient together with the merging coding.
std::pair<Substitution, LetterCoding> injectivize(const Substitution& theta);

struct StrongInjectivityReport {
    bool strongly_injective = true;
    // side: 0 = right violation, 1 = left violation, with the violating seeds
    std::optional<std::tuple<int, Letter, Letter>> violation;
};

StrongInjectivityReport strong_injectivity(const Substitution& theta);
bool is_strongly_injective(const Substitution& theta);

// The k-shifted ell-sliding block representation: a substitution on the
// alphabet of length-ell language words.
struct SlidingBlockRepresentation {
    Substitution blocks;
    std::vector<Word> block_words;   // block letter -> underlying ell-word
    int ell = 1;
    int shift = 0;
    // Block letter for a given ell-window of the original shift.
    Letter encode(const Word& window) const;
};

SlidingBlockRepresentation sliding_block_representation(const Substitution& theta,
                                                        int ell, int k);

// Smallest R such that every language word of length 2R de-substitutes with a
// unique cut position mod r; throws if none is found up to the cap.
int recognizability_radius(const Substitution& theta, int cap = 16);

// Digits x_0..x_{n-1} (least significant first) locating the window's point
// over the odometer: the point lies in sigma^Lambda theta^n(X) with
// Lambda = sum x_i r^i. De-substitution must be unambiguous at every level;
// a window too short to decide raises an error rather than guessing.
std::vector<int> odometer_digits(const Substitution& theta, const Window& window, int n);

struct AmbiguousDesubstitution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace autshift

#endif
