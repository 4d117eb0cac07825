#pragma once

#include <optional>
#include <string>

#include "qdvol/genfun.hpp"
#include "qdvol/qseries.hpp"
#include "qdvol/strata.hpp"

namespace qdvol {

// On-disk cache for computed q-series. Entries live as JSON files under
// <dir>/<schema-tag>/, one per key; a schema bump invalidates everything.
// Corrupt or unreadable entries are treated as absent.
std::string cache_dir();  // $QDVOL_CACHE_DIR, else ~/.cache/qdvol

std::string series_cache_key(const ProfilePair& p, int n, WeightVariant v);

std::optional<QSeries> cache_get_series(const std::string& key);
// Best-effort: failures to write are silently ignored.
void cache_put_series(const std::string& key, const QSeries& s);

// zconnected_series with disk persistence on top of the in-memory memo.
QSeries zconnected_series_cached(const ProfilePair& p, int n,
                                 WeightVariant v = WeightVariant::Frobenius);

struct CacheStats {
    std::string dir;
    int entries = 0;
    long bytes = 0;
};

CacheStats cache_stats();
int cache_clear();  // removes all entries, returns how many

}  // namespace qdvol
