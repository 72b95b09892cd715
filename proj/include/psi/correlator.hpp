// Canonical correlator keys <tau_{d1}...tau_{dn}>_g, the stability and
// dimension rules, the genus-0 closed form, and the string/dilaton
// rewriting rules shared by every evaluation strategy.
#pragma once

#include "psi/numeric.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace psi {

// Identifies <tau_{d1}...tau_{dn}>_g. Indices are kept sorted
// non-increasing, so keys built from permuted inputs compare equal.
class CorrelatorKey {
  public:
    CorrelatorKey(unsigned genus, std::vector<unsigned> indices);

    unsigned genus() const { return genus_; }
    const std::vector<unsigned>& indices() const { return indices_; }
    std::size_t points() const { return indices_.size(); }
    unsigned long total_degree() const;

    auto operator<=>(const CorrelatorKey&) const = default;

  private:
    unsigned genus_;
    std::vector<unsigned> indices_; // sorted non-increasing, never empty
};

CorrelatorKey canonicalize(unsigned genus, const std::vector<unsigned>& raw);

// Moduli dimension constraint: sum d_j = 3g - 3 + n.
bool dimension_matches(const CorrelatorKey& key);

// Stable pointed curves exist iff 2g - 2 + n > 0.
bool is_stable(unsigned genus, std::size_t n);

// Vanishing convention: unstable or dimension-mismatched correlators are 0
// everywhere in the library.
bool trivially_zero(const CorrelatorKey& key);

// Finite weighted sum of correlator keys; like terms are merged and zero
// coefficients dropped as terms are added.
class LinearCombination {
  public:
    using Terms = std::map<CorrelatorKey, Rational>;

    void add(const Rational& coefficient, const CorrelatorKey& key);
    LinearCombination& operator+=(const LinearCombination& other);
    void scale(const Rational& factor);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    Rational evaluate(const std::function<Rational(const CorrelatorKey&)>& value_of) const;

  private:
    Terms terms_;
};

// Evaluator callback used by the one-step recursion expansions to resolve
// the second factor of split products.
using Resolver = std::function<Rational(const CorrelatorKey&)>;

// Genus-0 closed form (n-3)! / prod d_j!, obtained by iterated string
// reduction down to <tau_0^3>_0 = 1. Returns 0 on trivially zero keys.
Rational genus0_eval(const CorrelatorKey& key);

// String equation: removes one zero index and lowers each remaining
// positive index in turn. Requires a zero index and n >= 2.
LinearCombination string_step(const CorrelatorKey& key);

// Reversed string equation on the index at `pivot_pos`:
//   <tau_d ...> = <tau_0 tau_{d+1} ...> - sum_i <tau_{d+1} tau_{d_i - 1} ...>.
// Subtracted terms whose index would drop below zero are omitted.
LinearCombination string_lift(const CorrelatorKey& key, std::size_t pivot_pos);

// Dilaton equation: removes one index equal to 1 and multiplies by
// (2g - 2 + n - 1), n being the input point count. The reduced key must be
// stable.
LinearCombination dilaton_step(const CorrelatorKey& key);

// All non-increasing sequences of the given length with the given sum and
// entries >= min_part.
std::vector<std::vector<unsigned>> partitions_fixed_length(unsigned long total,
                                                           std::size_t length,
                                                           unsigned min_part);

// All stable, dimension-valid keys with the given genus and point count.
std::vector<CorrelatorKey> stable_keys(unsigned genus, std::size_t n);

} // namespace psi
