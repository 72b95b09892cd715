// Shared write-once memo map from correlator keys to exact values, with
// line-oriented persistence. All strategies funnel through one store, so a
// disagreement between strategies surfaces as a conflicting insert.
#pragma once

#include "psi/correlator.hpp"
#include "psi/numeric.hpp"

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>

namespace psi {

class CacheStore {
  public:
    CacheStore() = default;

    // Returns the cached value if present; otherwise runs `evaluator`,
    // stores the result and returns it. Insert-if-absent: when a concurrent
    // (or reentrant) computation already stored a value, an equal result is
    // accepted and a different one raises InternalInconsistency.
    Rational get_or_compute(const CorrelatorKey& key,
                            const std::function<Rational(const CorrelatorKey&)>& evaluator);

    // Write-once insert. Equal re-inserts are no-ops, conflicting values
    // raise InternalInconsistency.
    void insert(const CorrelatorKey& key, const Rational& value);

    std::optional<Rational> lookup(const CorrelatorKey& key) const;
    bool contains(const CorrelatorKey& key) const;
    std::size_t size() const;
    bool dirty() const { return dirty_; }
    const std::optional<std::filesystem::path>& source_path() const { return source_path_; }

    // Entries sorted by key (the in-memory map order), for deterministic
    // serialization and iteration.
    std::map<CorrelatorKey, Rational> snapshot() const;

    // JSON Lines, LF endings. Header {"format":"psi-cache","version":1},
    // then one {"g":...,"d":[...],"v":"p/q"} per entry, sorted by key.
    void save(const std::filesystem::path& path) const;

    // Loads a file written by save(). Non-canonical index order in an entry
    // is normalized with a warning on `warnings`. Malformed lines raise
    // ParseError with the line number; a bad header raises FormatError;
    // entries conflicting with each other raise InternalInconsistency.
    static CacheStore load(const std::filesystem::path& path, std::ostream* warnings = nullptr);

    // Inserts every entry of `other`; conflicts raise InternalInconsistency.
    void merge(const CacheStore& other);

  private:
    mutable std::mutex mutex_;
    std::map<CorrelatorKey, Rational> entries_;
    mutable bool dirty_ = false;
    std::optional<std::filesystem::path> source_path_;
};

} // namespace psi
