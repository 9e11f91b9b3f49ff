#pragma once
// Serialization helpers: round-trippable float formatting, CSV and flat JSON
// writers for scan records, and an append-only disk cache with a checksum
// sidecar so stale or truncated files are detected instead of trusted.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "weyllab/hunt.hpp"

namespace weyllab {

// 17 significant digits: enough for binary64 round trips.
std::string format_double(double v);

void write_scan_csv(std::ostream& os, const std::vector<ScanRecord>& recs);
void write_scan_json(std::ostream& os, const std::vector<ScanRecord>& recs);

void write_checkpoints_csv(std::ostream& os,
                           const std::vector<std::pair<double, double>>& cps);
void write_checkpoints_json(std::ostream& os,
                            const std::vector<std::pair<double, double>>& cps);

// FNV-1a 64-bit over a byte string; cheap integrity check for cache files.
std::string fnv1a_hex(const std::string& bytes);

// Append-only cache of scan records under a directory (typically from the
// WEYLLAB_CACHE_DIR environment variable).  Each key owns a data file plus a
// ".sum" sidecar holding the FNV-1a digest of the data bytes; load refuses
// mismatches so a torn write degrades to a cache miss, not bad data.
class ScanCache {
   public:
    explicit ScanCache(std::string dir);

    bool enabled() const { return !dir_.empty(); }

    std::optional<std::vector<ScanRecord>> load(const std::string& key) const;
    void store(const std::string& key, const std::vector<ScanRecord>& recs) const;

   private:
    std::string dir_;
    std::string data_path(const std::string& key) const;
    std::string sum_path(const std::string& key) const;
};

// Reads WEYLLAB_CACHE_DIR; empty (disabled) cache when unset.
ScanCache scan_cache_from_env();

}  // namespace weyllab
