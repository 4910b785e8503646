#ifndef AUTSHIFT_LANGUAGE_HPP
#define AUTSHIFT_LANGUAGE_HPP

#include <set>
#include <vector>

#include "autshift/substitution.hpp"

namespace autshift {

// The exact set of length-L subwords of the shift generated by a primitive
// substitution, in sorted order. Computed by closing the subword set under
// one more substitution round until it is unchanged for two consecutive
// rounds and every letter has been used as a seed.
std::vector<Word> language(const Substitution& theta, int L);

bool in_language(const Substitution& theta, const Word& w);

// Number of length-L subwords.
long long complexity(const Substitution& theta, int L);

// A substitution shift is infinite iff its complexity exceeds L at every
// length; checked for L up to r*|A|^2 (a finite shift's complexity is
// eventually constant, so it drops to <= L within that range).
bool shift_is_infinite(const Substitution& theta);

} // namespace autshift

#endif
