// The DVV (Virasoro-constraint) recursion. Pivoting on an index k+1, a
// correlator expands into same-genus terms with one point fewer, a
// genus-drop term, and split-boundary products; every surviving term is
// strictly smaller in (genus, point count). This evaluator is the
// independent reference the other strategies are checked against.
#pragma once

#include "psi/cache.hpp"
#include "psi/correlator.hpp"

namespace psi {

struct DvvExpansion {
    unsigned pivot_index = 0; // the chosen k+1
    LinearCombination combination;
};

// One recursion step pivoting on the largest index. Split products are
// flattened by resolving their second factor through `resolve`. Requires a
// non-trivially-zero key with at least one positive index.
DvvExpansion dvv_step(const CorrelatorKey& key, const Resolver& resolve);

// Same, pivoting on the index at `pivot_pos` (which must be positive).
DvvExpansion dvv_step_at(const CorrelatorKey& key, std::size_t pivot_pos,
                         const Resolver& resolve);

// Full memoized evaluation: 0 on trivially zero keys, the closed form at
// genus 0, otherwise recursive expansion.
Rational eval_dvv(const CorrelatorKey& key, CacheStore& cache);

} // namespace psi
