#include "weyllab/io.hpp"

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "weyllab/base.hpp"

namespace weyllab {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_scan_csv(std::ostream& os, const std::vector<ScanRecord>& recs) {
    os << "u,t,E,norm1,norm2\n";
    for (const auto& r : recs) {
        os << format_double(r.u) << ',' << format_double(r.t) << ','
           << format_double(r.E) << ',' << format_double(r.norm1) << ','
           << format_double(r.norm2) << '\n';
    }
}

void write_scan_json(std::ostream& os, const std::vector<ScanRecord>& recs) {
    os << "[\n";
    for (std::size_t i = 0; i < recs.size(); ++i) {
        const auto& r = recs[i];
        os << "  {\"u\": " << format_double(r.u)
           << ", \"t\": " << format_double(r.t)
           << ", \"E\": " << format_double(r.E)
           << ", \"norm1\": " << format_double(r.norm1)
           << ", \"norm2\": " << format_double(r.norm2) << '}'
           << (i + 1 < recs.size() ? "," : "") << '\n';
    }
    os << "]\n";
}

void write_checkpoints_csv(std::ostream& os,
                           const std::vector<std::pair<double, double>>& cps) {
    os << "T,integral\n";
    for (const auto& [T, I] : cps)
        os << format_double(T) << ',' << format_double(I) << '\n';
}

void write_checkpoints_json(std::ostream& os,
                            const std::vector<std::pair<double, double>>& cps) {
    os << "[\n";
    for (std::size_t i = 0; i < cps.size(); ++i) {
        os << "  {\"T\": " << format_double(cps[i].first)
           << ", \"integral\": " << format_double(cps[i].second) << '}'
           << (i + 1 < cps.size() ? "," : "") << '\n';
    }
    os << "]\n";
}

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

ScanCache::ScanCache(std::string dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string ScanCache::data_path(const std::string& key) const {
    return dir_ + "/" + key + ".csv";
}

std::string ScanCache::sum_path(const std::string& key) const {
    return dir_ + "/" + key + ".sum";
}

std::optional<std::vector<ScanRecord>> ScanCache::load(
    const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream data(data_path(key), std::ios::binary);
    std::ifstream sum(sum_path(key));
    if (!data || !sum) return std::nullopt;

    std::ostringstream raw;
    raw << data.rdbuf();
    std::string expect;
    sum >> expect;
    if (fnv1a_hex(raw.str()) != expect) return std::nullopt;  // corrupt: miss

    std::istringstream in(raw.str());
    std::string line;
    if (!std::getline(in, line) || line != "u,t,E,norm1,norm2")
        return std::nullopt;
    std::vector<ScanRecord> recs;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ScanRecord r;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf", &r.u, &r.t, &r.E,
                        &r.norm1, &r.norm2) != 5)
            return std::nullopt;
        recs.push_back(r);
    }
    return recs;
}

void ScanCache::store(const std::string& key,
                      const std::vector<ScanRecord>& recs) const {
    if (!enabled()) return;
    std::ostringstream body;
    write_scan_csv(body, recs);
    {
        std::ofstream data(data_path(key), std::ios::binary | std::ios::trunc);
        data << body.str();
    }
    std::ofstream sum(sum_path(key), std::ios::trunc);
    sum << fnv1a_hex(body.str()) << '\n';
}

ScanCache scan_cache_from_env() {
    const char* dir = std::getenv("WEYLLAB_CACHE_DIR");
    return ScanCache(dir ? dir : "");
}

}  // namespace weyllab
