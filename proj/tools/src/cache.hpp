#pragma once

#include "serialize.hpp"

#include "tqc/catalan.hpp"

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tqc::cli {

namespace fs = std::filesystem;

constexpr int kCacheVersion = 1;
constexpr const char* kCacheEnvVar = "TQC_CACHE_DIR";

enum class LoadStatus { loaded, missing, version_mismatch, corrupt };

struct LoadResult {
    LoadStatus status = LoadStatus::missing;
    std::string message;
    std::size_t entries = 0;
};

std::string checksum(const std::string& bytes);

// Envelope: {"format", "table", "version", "checksum", "entries"}.
void write_cache_file(const fs::path& file, const std::string& table, const json& entries);
LoadResult read_cache_file(const fs::path& file, const std::string& table, json& entries);

// A memo table the cache knows how to persist.
struct TableBinding {
    std::string name;
    std::function<std::size_t()> size;
    std::function<json()> dump;
    // Parses everything before touching the table; throws on malformed input.
    std::function<std::size_t(const json&)> restore;
};

TableBinding catalan_binding(CatalanTable& table);
std::vector<TableBinding> default_bindings();

bool save_table(const TableBinding& b, const fs::path& dir);
LoadResult load_table(const TableBinding& b, const fs::path& dir);

// Flag value, else the environment variable, else none.
std::optional<fs::path> resolve_cache_dir(const std::string& flag);

// Loads every default table up front and writes back the ones that grew.
class CacheSession {
public:
    CacheSession(fs::path dir, std::ostream& warn);
    void save();

private:
    fs::path dir_;
    std::ostream& warn_;
    std::vector<TableBinding> bindings_;
    std::vector<std::size_t> loaded_sizes_;
};

} // namespace tqc::cli
