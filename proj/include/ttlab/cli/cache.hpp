#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace ttlab::cli {

/// One stored result. `key` is the canonical serialization the entry was
/// stored under; `value` is the JSON result record, kept verbatim.
struct CacheEntry
{
    std::string key;
    std::string value;
    std::string created_at;
};

/// Hex SHA-256 of the canonical key; names the entry file.
std::string content_hash(const std::string & key);

/// Append-only directory of result records, one file per key hash. Entries
/// are published by hard-linking a fully written temporary file into place,
/// so readers never observe partial files and the first writer of a key wins.
class ResultCache
{
public:
    explicit ResultCache(std::filesystem::path directory);

    const std::filesystem::path & directory() const { return directory_; }

    std::optional<CacheEntry> lookup(const std::string & key) const;

    /// Returns false (and leaves the cache unchanged) if the directory cannot
    /// be written. Storing an existing key is a no-op.
    bool store(const CacheEntry & entry) const;

private:
    std::filesystem::path entry_path(const std::string & key) const;

    std::filesystem::path directory_;
};

/// Current UTC time as ISO-8601.
std::string utc_timestamp();

} // namespace ttlab::cli
