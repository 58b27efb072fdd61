#include "ttlab/cli/cache.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <unistd.h>

#include <openssl/evp.h>

#include "json.hpp"

namespace ttlab::cli {

namespace fs = std::filesystem;

std::string content_hash(const std::string & key)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int length = 0;
    EVP_Digest(key.data(), key.size(), digest.data(), &length, EVP_sha256(), nullptr);
    std::ostringstream hex;
    for (unsigned int i = 0; i < length; ++i)
        hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    return hex.str();
}

std::string utc_timestamp()
{
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

ResultCache::ResultCache(fs::path directory) : directory_(std::move(directory)) {}

fs::path ResultCache::entry_path(const std::string & key) const
{
    return directory_ / (content_hash(key) + ".json");
}

std::optional<CacheEntry> ResultCache::lookup(const std::string & key) const
{
    std::ifstream in(entry_path(key), std::ios::binary);
    if (! in)
        return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    auto parsed = nlohmann::json::parse(buffer.str(), nullptr, false);
    if (parsed.is_discarded() || ! parsed.is_object())
        return std::nullopt;
    // a hash collision or a foreign file must not be served as a hit
    if (! parsed.contains("key") || parsed["key"] != key || ! parsed["value"].is_string())
        return std::nullopt;
    return CacheEntry{key, parsed["value"].get<std::string>(), parsed.value("created_at", std::string{})};
}

bool ResultCache::store(const CacheEntry & entry) const
{
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    fs::create_directories(directory_, ec);
    if (ec)
        return false;

    fs::path final_path = entry_path(entry.key);
    if (fs::exists(final_path, ec))
        return true;

    fs::path temp = directory_ / (final_path.filename().string() + ".tmp." + std::to_string(::getpid()) + "."
                                  + std::to_string(counter++));
    {
        nlohmann::ordered_json record;
        record["key"] = entry.key;
        record["created_at"] = entry.created_at;
        record["value"] = entry.value;
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (! out)
            return false;
        out << record.dump() << '\n';
        out.flush();
        if (! out) {
            fs::remove(temp, ec);
            return false;
        }
    }
    fs::create_hard_link(temp, final_path, ec);
    bool published = ! ec || fs::exists(final_path);
    std::error_code ignored;
    fs::remove(temp, ignored);
    return published;
}

} // namespace ttlab::cli
