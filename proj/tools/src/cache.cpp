#include "cache.hpp"

#include "tqc/freeenergy.hpp"
#include "tqc/hurwitz.hpp"
#include "tqc/lattice.hpp"
#include "tqc/trres.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace tqc::cli {

std::string checksum(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

void write_cache_file(const fs::path& file, const std::string& table, const json& entries)
{
    json doc = {{"format", "tqc-memo"},
                {"table", table},
                {"version", kCacheVersion},
                {"checksum", checksum(entries.dump())},
                {"entries", entries}};
    fs::create_directories(file.parent_path());
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw std::runtime_error("cannot write " + tmp.string());
        out << doc.dump() << "\n";
        if (!out)
            throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, file);
}

LoadResult read_cache_file(const fs::path& file, const std::string& table, json& entries)
{
    LoadResult r;
    if (!fs::exists(file)) {
        r.message = "no cache file";
        return r;
    }
    std::ifstream in(file, std::ios::binary);
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) {
        r.status = LoadStatus::corrupt;
        r.message = "not valid JSON";
        return r;
    }
    if (doc.value("format", "") != "tqc-memo" || doc.value("table", "") != table) {
        r.status = LoadStatus::corrupt;
        r.message = "unexpected format or table name";
        return r;
    }
    if (!doc.contains("version") || !doc["version"].is_number_integer() || doc["version"].get<int>() != kCacheVersion) {
        r.status = LoadStatus::version_mismatch;
        r.message = "version " + (doc.contains("version") ? doc["version"].dump() : std::string("missing")) +
                    ", expected " + std::to_string(kCacheVersion);
        return r;
    }
    if (!doc.contains("entries") || !doc["entries"].is_array() ||
        doc.value("checksum", "") != checksum(doc["entries"].dump())) {
        r.status = LoadStatus::corrupt;
        r.message = "checksum mismatch";
        return r;
    }
    entries = std::move(doc["entries"]);
    r.status = LoadStatus::loaded;
    r.entries = entries.size();
    return r;
}

namespace {

using GnPolyMap = std::map<std::pair<int, int>, LaurentPoly>;

json dump_gn_polys(const GnPolyMap& m)
{
    json out = json::array();
    for (const auto& [k, p] : m)
        out.push_back({{"g", k.first}, {"n", k.second}, {"poly", laurent_json(p)}});
    return out;
}

std::vector<std::tuple<int, int, LaurentPoly>> parse_gn_polys(const json& entries)
{
    std::vector<std::tuple<int, int, LaurentPoly>> rows;
    for (const auto& e : entries) {
        int g = e.at("g").get<int>(), n = e.at("n").get<int>();
        LaurentPoly p = laurent_from_json(e.at("poly"));
        if (p.arity() != n)
            throw std::invalid_argument("arity does not match n");
        rows.emplace_back(g, n, std::move(p));
    }
    return rows;
}

TableBinding tr_binding(const std::string& name, TrEngine& eng)
{
    return {name,
            [&eng] { return eng.entries().size(); },
            [&eng] { return dump_gn_polys(eng.entries()); },
            [&eng](const json& entries) {
                auto rows = parse_gn_polys(entries);
                for (auto& [g, n, p] : rows)
                    eng.insert(g, n, std::move(p));
                return rows.size();
            }};
}

} // namespace

TableBinding catalan_binding(CatalanTable& table)
{
    return {"catalan",
            [&table] { return table.entries().size(); },
            [&table] {
                json out = json::array();
                for (const auto& [k, v] : table.entries())
                    out.push_back({{"g", k.g}, {"mu", k.mu}, {"value", to_string(v)}});
                return out;
            },
            [&table](const json& entries) {
                std::vector<std::pair<GnmKey, BigRational>> rows;
                for (const auto& e : entries)
                    rows.emplace_back(GnmKey{e.at("g").get<int>(), e.at("mu").get<std::vector<int>>()},
                                      rational_from_json(e.at("value")));
                for (const auto& [k, v] : rows)
                    table.insert(k, v);
                return rows.size();
            }};
}

std::vector<TableBinding> default_bindings()
{
    std::vector<TableBinding> out;
    out.push_back(catalan_binding(default_catalan_table()));

    FreeEnergyTable& fe = default_free_energies();
    out.push_back({"freeenergy",
                   [&fe] { return fe.entries().size(); },
                   [&fe] { return dump_gn_polys(fe.entries()); },
                   [&fe](const json& entries) {
                       auto rows = parse_gn_polys(entries);
                       for (auto& [g, n, p] : rows)
                           fe.insert(g, n, std::move(p));
                       return rows.size();
                   }});

    out.push_back(tr_binding("tr-airy", airy_engine()));
    out.push_back(tr_binding("tr-catalan", catalan_engine()));

    LatticeTable& lt = default_lattice_table();
    out.push_back({"lattice",
                   [&lt] { return lt.entries().size(); },
                   [&lt] {
                       json out = json::array();
                       for (const auto& [k, v] : lt.entries())
                           out.push_back({{"g", k.first}, {"p", k.second}, {"value", to_string(v)}});
                       return out;
                   },
                   [&lt](const json& entries) {
                       std::vector<std::tuple<int, std::vector<int>, BigRational>> rows;
                       for (const auto& e : entries)
                           rows.emplace_back(e.at("g").get<int>(), e.at("p").get<std::vector<int>>(),
                                             rational_from_json(e.at("value")));
                       for (const auto& [g, p, v] : rows)
                           lt.insert(g, p, v);
                       return rows.size();
                   }});

    HurwitzTable& ht = default_hurwitz_table();
    out.push_back({"hurwitz",
                   [&ht] { return ht.entries().size(); },
                   [&ht] {
                       json out = json::array();
                       for (const auto& [k, v] : ht.entries())
                           out.push_back({{"r", std::get<0>(k)},
                                          {"g", std::get<1>(k)},
                                          {"mu", std::get<2>(k)},
                                          {"value", to_string(v)}});
                       return out;
                   },
                   [&ht](const json& entries) {
                       std::vector<std::tuple<int, int, std::vector<int>, BigRational>> rows;
                       for (const auto& e : entries)
                           rows.emplace_back(e.at("r").get<int>(), e.at("g").get<int>(),
                                             e.at("mu").get<std::vector<int>>(), rational_from_json(e.at("value")));
                       for (const auto& [r, g, mu, v] : rows)
                           ht.insert(r, g, mu, v);
                       return rows.size();
                   }});
    return out;
}

static fs::path table_file(const fs::path& dir, const std::string& name) { return dir / (name + ".json"); }

bool save_table(const TableBinding& b, const fs::path& dir)
{
    write_cache_file(table_file(dir, b.name), b.name, b.dump());
    return true;
}

LoadResult load_table(const TableBinding& b, const fs::path& dir)
{
    json entries;
    LoadResult r = read_cache_file(table_file(dir, b.name), b.name, entries);
    if (r.status != LoadStatus::loaded)
        return r;
    try {
        r.entries = b.restore(entries);
    } catch (const std::exception& e) {
        r.status = LoadStatus::corrupt;
        r.message = std::string("malformed entry: ") + e.what();
        r.entries = 0;
    }
    return r;
}

std::optional<fs::path> resolve_cache_dir(const std::string& flag)
{
    if (!flag.empty())
        return fs::path(flag);
    if (const char* env = std::getenv(kCacheEnvVar); env && *env)
        return fs::path(env);
    return std::nullopt;
}

CacheSession::CacheSession(fs::path dir, std::ostream& warn)
    : dir_(std::move(dir)), warn_(warn), bindings_(default_bindings())
{
    for (const auto& b : bindings_) {
        LoadResult r = load_table(b, dir_);
        if (r.status == LoadStatus::version_mismatch || r.status == LoadStatus::corrupt)
            warn_ << "warning: cache " << table_file(dir_, b.name).string() << ": " << r.message
                  << "; recomputing\n";
        const bool stale = r.status == LoadStatus::version_mismatch || r.status == LoadStatus::corrupt;
        loaded_sizes_.push_back(stale ? static_cast<std::size_t>(-1) : b.size());
    }
}

void CacheSession::save()
{
    for (std::size_t i = 0; i < bindings_.size(); ++i) {
        if (bindings_[i].size() == loaded_sizes_[i])
            continue;
        try {
            save_table(bindings_[i], dir_);
            loaded_sizes_[i] = bindings_[i].size();
        } catch (const std::exception& e) {
            warn_ << "warning: cache not saved: " << e.what() << "\n";
        }
    }
}

} // namespace tqc::cli
