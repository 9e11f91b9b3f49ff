// ============================================================================
// Serialization and cache round trips.
//
// FNV-1a 64 reference digests (offset 14695981039346656037, prime
// 1099511628211, folded by hand / standard vectors):
//   ""       -> cbf29ce484222325
//   "a"      -> af63dc4c8601ec8c
//   "foobar" -> 85944171f73967e8
// ============================================================================

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "weyllab/hunt.hpp"
#include "weyllab/io.hpp"

using namespace weyllab;

namespace {

std::vector<ScanRecord> sample_records() {
    std::vector<ScanRecord> recs;
    ScanRecord a;
    a.u = 2.5;
    a.t = 39.269908169872416;
    a.E = -1.0 / 3.0;
    a.norm1 = 0.0625;
    a.norm2 = 5e-324;  // subnormal endpoint must survive the trip
    ScanRecord b;
    b.u = 1e3;
    b.t = 6.283185307179586e6;
    b.E = 1.7976931348623157e308;
    b.norm1 = -0.0;
    b.norm2 = 42.0;
    recs.push_back(a);
    recs.push_back(b);
    return recs;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << bytes;
}

}  // namespace

TEST_CASE("format_double round trips through strtod") {
    const double vals[] = {0.0,     -0.0,   1.0 / 3.0, 3.141592653589793,
                           1e308,   5e-324, -2.5,      6.02214076e23,
                           -1e-300, 42.0};
    for (double v : vals) {
        std::string s = format_double(v);
        double back = std::strtod(s.c_str(), nullptr);
        CHECK(back == v);
    }
    CHECK(format_double(1.0) == "1");
}

TEST_CASE("fnv1a reference digests") {
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
    CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}

TEST_CASE("scan csv and json carry the same fields") {
    auto recs = sample_records();
    std::ostringstream csv;
    write_scan_csv(csv, recs);
    std::string text = csv.str();
    CHECK(text.rfind("u,t,E,norm1,norm2\n", 0) == 0);
    // one header + one line per record
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == 1 + recs.size());

    std::ostringstream json;
    write_scan_json(json, recs);
    std::string jtext = json.str();
    for (const char* field : {"\"u\"", "\"t\"", "\"E\"", "\"norm1\"", "\"norm2\""})
        CHECK(jtext.find(field) != std::string::npos);
    CHECK(jtext.find(format_double(recs[0].E)) != std::string::npos);
}

TEST_CASE("checkpoint writers") {
    std::vector<std::pair<double, double>> cps = {{100.0, 1.5}, {200.0, 2.25}};
    std::ostringstream csv;
    write_checkpoints_csv(csv, cps);
    CHECK(csv.str().rfind("T,integral\n", 0) == 0);
    CHECK(csv.str().find("100,1.5\n") != std::string::npos);

    std::ostringstream json;
    write_checkpoints_json(json, cps);
    CHECK(json.str().find("\"T\"") != std::string::npos);
    CHECK(json.str().find("\"integral\"") != std::string::npos);
}

TEST_CASE("scan cache round trip and corruption handling") {
    std::string dir = "weyllab_cache_test_dir";
    std::filesystem::remove_all(dir);
    ScanCache cache(dir);
    REQUIRE(cache.enabled());
    CHECK(!cache.load("missing").has_value());

    auto recs = sample_records();
    cache.store("k1", recs);
    auto back = cache.load("k1");
    REQUIRE(back.has_value());
    REQUIRE(back->size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK((*back)[i].u == recs[i].u);
        CHECK((*back)[i].t == recs[i].t);
        CHECK((*back)[i].E == recs[i].E);
        CHECK((*back)[i].norm1 == recs[i].norm1);
        CHECK((*back)[i].norm2 == recs[i].norm2);
    }

    // Flip one byte in the data file: checksum must reject it.
    std::string data = slurp(dir + "/k1.csv");
    REQUIRE(!data.empty());
    std::string mangled = data;
    mangled[mangled.size() / 2] ^= 0x01;
    spit(dir + "/k1.csv", mangled);
    CHECK(!cache.load("k1").has_value());

    // Restore data, corrupt the sidecar instead.
    spit(dir + "/k1.csv", data);
    REQUIRE(cache.load("k1").has_value());
    spit(dir + "/k1.sum", "0000000000000000");
    CHECK(!cache.load("k1").has_value());

    std::filesystem::remove_all(dir);
}

TEST_CASE("disabled cache is inert") {
    ScanCache off("");
    CHECK(!off.enabled());
    CHECK(!off.load("anything").has_value());
    off.store("anything", sample_records());  // must not create files
    CHECK(!off.load("anything").has_value());
}

TEST_CASE("cache from environment") {
    unsetenv("WEYLLAB_CACHE_DIR");
    CHECK(!scan_cache_from_env().enabled());
    setenv("WEYLLAB_CACHE_DIR", "weyllab_cache_env_dir", 1);
    ScanCache c = scan_cache_from_env();
    CHECK(c.enabled());
    unsetenv("WEYLLAB_CACHE_DIR");
    std::filesystem::remove_all("weyllab_cache_env_dir");
}
