#pragma once

#include <cstddef>

#include "graev/freegroup.hpp"
#include "graev/matching.hpp"

namespace graev {

// Longest reduced word the brute-force norm will enumerate matches for.
// M_14 = 113634 matches.
inline constexpr std::size_t kDefaultMatchCap = 14;

struct NormResult {
  Rat value;
  Match witness;  // a minimizing match on the reduced input
};

// Trivial-scale norm as min over all matches theta of rho(w, w^theta), with
// w reduced first. Ties go to the first match in enumeration order.
// Throws ResourceLimitError when the reduced length exceeds match_cap.
NormResult graev_norm_bruteforce(const Word& w, std::size_t match_cap = kDefaultMatchCap);

// Same minimum by a cubic interval DP: either the left end of an interval is
// fixed (cost d(x_i, e)) or it is paired with some k, which splits the rest
// into the inside and the outside of the arc.
Rat graev_norm_dp(const Word& w);

// DP value plus a traced-back minimizing match on reduce(w).
NormResult graev_norm_dp_witness(const Word& w);

inline Rat graev_norm(const Word& w) { return graev_norm_dp(w); }

// Left-invariant Graev metric: norm of u^{-1} v.
Rat graev_distance(const ReducedWord& u, const ReducedWord& v);

// delta(u, v) + delta(u^{-1}, v^{-1}).
Rat graev_bidistance(const ReducedWord& u, const ReducedWord& v);

}  // namespace graev
