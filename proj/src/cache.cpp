#include "qdvol/cache.hpp"

#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

namespace fs = std::filesystem;
using nlohmann::json;

namespace qdvol {

namespace {

constexpr const char* kSchemaTag = "v1";

fs::path entry_dir() {
    return fs::path(cache_dir()) / kSchemaTag;
}

// Keys contain '|', '#' and commas; hex-escape anything not filename-safe.
std::string key_to_filename(const std::string& key) {
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned char c : key) {
        if (std::isalnum(c) || c == '-' || c == '_') {
            out.push_back((char)c);
        } else {
            out.push_back('%');
            out.push_back(hex[c >> 4]);
            out.push_back(hex[c & 15]);
        }
    }
    return out + ".json";
}

}  // namespace

std::string cache_dir() {
    if (const char* d = std::getenv("QDVOL_CACHE_DIR"))
        return d;
    if (const char* h = std::getenv("HOME"))
        return std::string(h) + "/.cache/qdvol";
    return ".qdvol-cache";
}

std::string series_cache_key(const ProfilePair& p, int n, WeightVariant v) {
    return "zconn|" + profile_key(p) + "|N" + std::to_string(n) +
           (v == WeightVariant::Frobenius ? "|frobenius" : "|printed");
}

std::optional<QSeries> cache_get_series(const std::string& key) {
    std::error_code ec;
    fs::path file = entry_dir() / key_to_filename(key);
    std::ifstream in(file);
    if (!in) return std::nullopt;
    try {
        json j = json::parse(in);
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        int order = j.at("order").get<int>();
        const auto& coeffs = j.at("coeffs");
        if (order < 0 || (int)coeffs.size() != order + 1) return std::nullopt;
        QSeries s(order);
        for (int i = 0; i <= order; ++i) {
            auto r = parse_rational(coeffs[i].get<std::string>());
            if (!r) return std::nullopt;
            s.set(i, *r);
        }
        return s;
    } catch (const std::exception&) {
        // Corrupt entry: drop it and recompute.
        fs::remove(file, ec);
        return std::nullopt;
    }
}

void cache_put_series(const std::string& key, const QSeries& s) {
    try {
        fs::create_directories(entry_dir());
        json j;
        j["key"] = key;
        j["order"] = s.order;
        json coeffs = json::array();
        for (int i = 0; i <= s.order; ++i)
            coeffs.push_back(rat_str(s.coeff(i)));
        j["coeffs"] = std::move(coeffs);
        fs::path file = entry_dir() / key_to_filename(key);
        fs::path tmp = file;
        tmp += ".tmp";
        std::ofstream out(tmp);
        if (!out) return;
        out << j.dump();
        out.close();
        fs::rename(tmp, file);
    } catch (const std::exception&) {
        // Cache writes are best-effort.
    }
}

QSeries zconnected_series_cached(const ProfilePair& p, int n, WeightVariant v) {
    std::string key = series_cache_key(p, n, v);
    if (auto hit = cache_get_series(key))
        return *hit;
    QSeries s = zconnected_series(p, n, v);
    cache_put_series(key, s);
    return s;
}

CacheStats cache_stats() {
    CacheStats st;
    st.dir = entry_dir().string();
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(entry_dir(), ec)) {
        if (!e.is_regular_file()) continue;
        ++st.entries;
        st.bytes += (long)e.file_size(ec);
    }
    return st;
}

int cache_clear() {
    int removed = 0;
    std::error_code ec;
    for (const auto& e : fs::directory_iterator(entry_dir(), ec)) {
        if (!e.is_regular_file()) continue;
        if (fs::remove(e.path(), ec)) ++removed;
    }
    return removed;
}

}  // namespace qdvol
