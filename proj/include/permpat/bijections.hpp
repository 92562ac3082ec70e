#pragma once

#include "permpat/permutation.hpp"

#include <utility>

namespace permpat {

// The constructive maps used in the counting arguments. The two insertion maps
// both carry the name f_h in the source material; they are distinct maps.

/// Prepends h and shifts every entry >= h up by one. Length n -> n+1, 1 <= h <= n+1.
Permutation prepend_insert(const Permutation& beta, int h);

/// Increments every entry and inserts the value 1 at position h. 1 <= h <= n+1.
Permutation insert_bottom(const Permutation& beta, int h);

/// Removes the entry 1 and decrements the rest; returns the result and the
/// position the 1 occupied. Requires length >= 2.
std::pair<Permutation, int> remove_bottom(const Permutation& alpha);

}  // namespace permpat
