#include "psi/cache.hpp"

#include "psi/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace psi {

namespace {

std::string describe(const CorrelatorKey& key) {
    std::string s = "g=" + std::to_string(key.genus()) + " d=[";
    for (std::size_t i = 0; i < key.indices().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(key.indices()[i]);
    }
    return s + "]";
}

std::string entry_line(const CorrelatorKey& key, const Rational& value) {
    std::string s = "{\"g\":" + std::to_string(key.genus()) + ",\"d\":[";
    for (std::size_t i = 0; i < key.indices().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(key.indices()[i]);
    }
    s += "],\"v\":\"" + to_string(value) + "\"}";
    return s;
}

} // namespace

Rational CacheStore::get_or_compute(
    const CorrelatorKey& key,
    const std::function<Rational(const CorrelatorKey&)>& evaluator) {
    {
        std::lock_guard lock(mutex_);
        auto it = entries_.find(key);
        if (it != entries_.end()) return it->second;
    }
    // Compute outside the lock; recursion re-enters this store.
    Rational value = evaluator(key);
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, value);
    if (!inserted && it->second != value)
        throw InternalInconsistency("cache conflict for " + describe(key) + ": have " +
                                    to_string(it->second) + ", evaluator produced " +
                                    to_string(value));
    if (inserted) dirty_ = true;
    return it->second;
}

void CacheStore::insert(const CorrelatorKey& key, const Rational& value) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = entries_.emplace(key, value);
    if (!inserted && it->second != value)
        throw InternalInconsistency("cache conflict for " + describe(key) + ": have " +
                                    to_string(it->second) + ", insert of " + to_string(value));
    if (inserted) dirty_ = true;
}

std::optional<Rational> CacheStore::lookup(const CorrelatorKey& key) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

bool CacheStore::contains(const CorrelatorKey& key) const {
    std::lock_guard lock(mutex_);
    return entries_.count(key) > 0;
}

std::size_t CacheStore::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

std::map<CorrelatorKey, Rational> CacheStore::snapshot() const {
    std::lock_guard lock(mutex_);
    return entries_;
}

void CacheStore::save(const std::filesystem::path& path) const {
    std::lock_guard lock(mutex_);
    std::ofstream out(path, std::ios::binary); // LF endings everywhere
    if (!out) throw std::runtime_error("cannot open cache file for writing: " + path.string());
    out << "{\"format\":\"psi-cache\",\"version\":1}\n";
    for (const auto& [key, value] : entries_) out << entry_line(key, value) << "\n";
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path.string());
    dirty_ = false;
}

CacheStore CacheStore::load(const std::filesystem::path& path, std::ostream* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open cache file: " + path.string());

    std::string line;
    if (!std::getline(in, line))
        throw FormatError("cache file is empty (missing header): " + path.string());
    nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
    if (header.is_discarded() || !header.is_object() ||
        header.value("format", std::string{}) != "psi-cache")
        throw FormatError("unsupported cache format (bad header line): " + path.string());
    if (!header.contains("version") || !header["version"].is_number_integer() ||
        header["version"].get<int>() != 1)
        throw FormatError("unsupported cache version in " + path.string());

    CacheStore store;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json entry = nlohmann::json::parse(line, nullptr, false);
        if (entry.is_discarded() || !entry.is_object())
            throw ParseError("cache line " + std::to_string(line_no) + ": not a JSON object",
                             line_no);
        try {
            unsigned g = entry.at("g").get<unsigned>();
            std::vector<unsigned> d = entry.at("d").get<std::vector<unsigned>>();
            Rational v = rational_from_string(entry.at("v").get<std::string>());
            bool canonical = std::is_sorted(d.rbegin(), d.rend());
            CorrelatorKey key(g, std::move(d));
            if (!canonical && warnings)
                *warnings << "warning: cache line " << line_no
                          << ": indices not sorted non-increasing, normalized\n";
            store.insert(key, v);
        } catch (const InternalInconsistency&) {
            throw;
        } catch (const std::exception& e) {
            throw ParseError("cache line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
    }
    store.dirty_ = false;
    store.source_path_ = path;
    return store;
}

void CacheStore::merge(const CacheStore& other) {
    for (const auto& [key, value] : other.snapshot()) insert(key, value);
}

} // namespace psi
