#include "psi/correlator.hpp"

#include "psi/errors.hpp"

#include <algorithm>
#include <numeric>

namespace psi {

CorrelatorKey::CorrelatorKey(unsigned genus, std::vector<unsigned> indices)
    : genus_(genus), indices_(std::move(indices)) {
    if (indices_.empty())
        throw InvalidInput("correlator key needs at least one index");
    std::sort(indices_.begin(), indices_.end(), std::greater<unsigned>());
}

unsigned long CorrelatorKey::total_degree() const {
    return std::accumulate(indices_.begin(), indices_.end(), 0ul);
}

CorrelatorKey canonicalize(unsigned genus, const std::vector<unsigned>& raw) {
    return CorrelatorKey(genus, raw);
}

bool dimension_matches(const CorrelatorKey& key) {
    return key.total_degree() + 3 == 3ul * key.genus() + key.points();
}

bool is_stable(unsigned genus, std::size_t n) {
    return 2ul * genus + n > 2;
}

bool trivially_zero(const CorrelatorKey& key) {
    return !is_stable(key.genus(), key.points()) || !dimension_matches(key);
}

void LinearCombination::add(const Rational& coefficient, const CorrelatorKey& key) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(key, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

LinearCombination& LinearCombination::operator+=(const LinearCombination& other) {
    for (const auto& [key, coeff] : other.terms_) add(coeff, key);
    return *this;
}

void LinearCombination::scale(const Rational& factor) {
    if (factor == 0) {
        terms_.clear();
        return;
    }
    for (auto& [key, coeff] : terms_) coeff *= factor;
}

Rational LinearCombination::evaluate(
    const std::function<Rational(const CorrelatorKey&)>& value_of) const {
    Rational total = 0;
    for (const auto& [key, coeff] : terms_) total += coeff * value_of(key);
    return total;
}

Rational genus0_eval(const CorrelatorKey& key) {
    if (key.genus() != 0)
        throw PreconditionError("genus0_eval: key has positive genus");
    if (trivially_zero(key)) return 0;
    // sum d_j = n - 3 here, so (n-3)! / prod d_j!.
    BigInt den = 1;
    for (unsigned d : key.indices()) den *= factorial(d);
    return rational_of(factorial(key.points() - 3), den);
}

LinearCombination string_step(const CorrelatorKey& key) {
    const auto& d = key.indices();
    if (d.size() < 2 || d.back() != 0)
        throw PreconditionError("string_step: needs a zero index and n >= 2");
    // Drop the last (smallest) index, a zero, and lower each remaining
    // positive index in turn.
    std::vector<unsigned> rest(d.begin(), d.end() - 1);
    LinearCombination out;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == 0) continue;
        std::vector<unsigned> lowered = rest;
        --lowered[i];
        out.add(1, CorrelatorKey(key.genus(), std::move(lowered)));
    }
    return out;
}

LinearCombination string_lift(const CorrelatorKey& key, std::size_t pivot_pos) {
    const auto& d = key.indices();
    if (pivot_pos >= d.size())
        throw PreconditionError("string_lift: pivot position out of range");
    const unsigned d1 = d[pivot_pos];
    std::vector<unsigned> rest;
    rest.reserve(d.size() - 1);
    for (std::size_t i = 0; i < d.size(); ++i)
        if (i != pivot_pos) rest.push_back(d[i]);

    LinearCombination out;
    std::vector<unsigned> lifted = rest;
    lifted.push_back(d1 + 1);
    lifted.push_back(0);
    out.add(1, CorrelatorKey(key.genus(), std::move(lifted)));
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == 0) continue; // would contain tau_{-1}
        std::vector<unsigned> sub = rest;
        --sub[i];
        sub.push_back(d1 + 1);
        out.add(-1, CorrelatorKey(key.genus(), std::move(sub)));
    }
    return out;
}

LinearCombination dilaton_step(const CorrelatorKey& key) {
    const auto& d = key.indices();
    if (d.size() < 2 || std::find(d.begin(), d.end(), 1u) == d.end())
        throw PreconditionError("dilaton_step: needs an index equal to 1 and n >= 2");
    if (!is_stable(key.genus(), d.size() - 1))
        throw PreconditionError("dilaton_step: reduced key is unstable");
    std::vector<unsigned> rest;
    rest.reserve(d.size() - 1);
    bool removed = false;
    for (unsigned v : d) {
        if (!removed && v == 1) {
            removed = true;
            continue;
        }
        rest.push_back(v);
    }
    LinearCombination out;
    const long factor = 2l * key.genus() - 2 + static_cast<long>(d.size()) - 1;
    out.add(Rational(factor), CorrelatorKey(key.genus(), std::move(rest)));
    return out;
}

namespace {

void partitions_rec(unsigned long total, std::size_t length, unsigned max_part,
                    unsigned min_part, std::vector<unsigned>& prefix,
                    std::vector<std::vector<unsigned>>& out) {
    if (length == 0) {
        if (total == 0) out.push_back(prefix);
        return;
    }
    unsigned hi = static_cast<unsigned>(std::min<unsigned long>(max_part, total));
    for (unsigned v = hi; v + 1 > min_part; --v) {
        // entries are emitted non-increasing; remaining total must fit
        if (static_cast<unsigned long>(v) * length < total) break;
        prefix.push_back(v);
        partitions_rec(total - v, length - 1, v, min_part, prefix, out);
        prefix.pop_back();
        if (v == 0) break;
    }
}

} // namespace

std::vector<std::vector<unsigned>> partitions_fixed_length(unsigned long total,
                                                           std::size_t length,
                                                           unsigned min_part) {
    std::vector<std::vector<unsigned>> out;
    if (length == 0) return out;
    std::vector<unsigned> prefix;
    unsigned max_part = static_cast<unsigned>(total);
    partitions_rec(total, length, max_part, min_part, prefix, out);
    return out;
}

std::vector<CorrelatorKey> stable_keys(unsigned genus, std::size_t n) {
    std::vector<CorrelatorKey> out;
    if (n == 0 || !is_stable(genus, n)) return out;
    long needed = 3l * genus - 3 + static_cast<long>(n);
    if (needed < 0) return out;
    for (auto& d : partitions_fixed_length(static_cast<unsigned long>(needed), n, 0))
        out.emplace_back(genus, std::move(d));
    return out;
}

} // namespace psi
