#include "psi/dvv.hpp"

#include "psi/errors.hpp"

#include <algorithm>

namespace psi {

namespace {

// (genus, point count) must strictly decrease on every surviving term.
void check_smaller(const CorrelatorKey& term, const CorrelatorKey& input) {
    if (term.genus() < input.genus()) return;
    if (term.genus() == input.genus() && term.points() < input.points()) return;
    throw InternalInconsistency("dvv_step: term does not decrease (g, n)");
}

} // namespace

DvvExpansion dvv_step_at(const CorrelatorKey& key, std::size_t pivot_pos,
                         const Resolver& resolve) {
    if (trivially_zero(key))
        throw PreconditionError("dvv_step: key is trivially zero");
    const auto& d = key.indices();
    if (pivot_pos >= d.size() || d[pivot_pos] == 0)
        throw PreconditionError("dvv_step: pivot must designate a positive index");

    const unsigned g = key.genus();
    const long k = static_cast<long>(d[pivot_pos]) - 1;
    std::vector<unsigned> rest;
    rest.reserve(d.size() - 1);
    for (std::size_t i = 0; i < d.size(); ++i)
        if (i != pivot_pos) rest.push_back(d[i]);
    const std::size_t m = rest.size();

    const Rational prefactor = rational_of(1, double_factorial(2 * k + 3));
    DvvExpansion out;
    out.pivot_index = d[pivot_pos];

    // (i) absorb the pivot into each remaining index.
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<unsigned> moved = rest;
        moved[j] += static_cast<unsigned>(k);
        CorrelatorKey term(g, std::move(moved));
        if (trivially_zero(term)) continue;
        check_smaller(term, key);
        Rational w = rational_of(double_factorial(2 * k + 2 * rest[j] + 1),
                                 double_factorial(2 * static_cast<long>(rest[j]) - 1));
        out.combination.add(w * prefactor, term);
    }

    // (ii) genus drop: tau_r tau_s join the remaining insertions.
    if (g >= 1) {
        for (long r = 0; r <= k - 1; ++r) {
            long s = k - 1 - r;
            std::vector<unsigned> grown = rest;
            grown.push_back(static_cast<unsigned>(r));
            grown.push_back(static_cast<unsigned>(s));
            CorrelatorKey term(g - 1, std::move(grown));
            if (trivially_zero(term)) continue;
            check_smaller(term, key);
            Rational w(double_factorial(2 * r + 1) * double_factorial(2 * s + 1));
            out.combination.add(w / 2 * prefactor, term);
        }
    }

    // (iii) boundary splits: ordered pairs (I, J) over the remaining
    // positions, empty sides allowed, genus split g' + (g - g').
    for (long r = 0; r <= k - 1; ++r) {
        long s = k - 1 - r;
        Rational w(double_factorial(2 * r + 1) * double_factorial(2 * s + 1));
        w /= 2;
        for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
            std::vector<unsigned> left{static_cast<unsigned>(r)};
            std::vector<unsigned> right{static_cast<unsigned>(s)};
            for (std::size_t j = 0; j < m; ++j)
                ((mask >> j) & 1 ? left : right).push_back(rest[j]);
            for (unsigned gp = 0; gp <= g; ++gp) {
                CorrelatorKey first(gp, left);
                if (trivially_zero(first)) continue;
                CorrelatorKey second(g - gp, right);
                if (trivially_zero(second)) continue;
                check_smaller(first, key);
                check_smaller(second, key);
                out.combination.add(w * prefactor * resolve(second), first);
            }
        }
    }
    return out;
}

DvvExpansion dvv_step(const CorrelatorKey& key, const Resolver& resolve) {
    const auto& d = key.indices();
    if (d.front() == 0)
        throw PreconditionError("dvv_step: all indices are zero, no pivot");
    return dvv_step_at(key, 0, resolve); // indices sorted, front is the max
}

Rational eval_dvv(const CorrelatorKey& key, CacheStore& cache) {
    if (trivially_zero(key)) return 0;
    return cache.get_or_compute(key, [&cache](const CorrelatorKey& k) -> Rational {
        if (k.genus() == 0) return genus0_eval(k);
        Resolver self = [&cache](const CorrelatorKey& t) { return eval_dvv(t, cache); };
        return dvv_step(k, self).combination.evaluate(self);
    });
}

} // namespace psi
