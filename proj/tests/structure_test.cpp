// The census side of every identity check must be computed without the series
// headers. This translation unit includes only the enumeration headers and
// also walks the include graph on disk.

#include "seaweed/meander.hpp"
#include "seaweed/partitions.hpp"
#include "seaweed/stats.hpp"

#if defined(SEAWEED_SERIES_HEADER) || defined(SEAWEED_PRODUCT_HEADER) || defined(SEAWEED_BIVARIATE_HEADER)
#error "enumeration headers pull in the series module"
#endif

#include <filesystem>
#include <fstream>
#include <regex>
#include <set>
#include <string>

#include <gtest/gtest.h>

namespace {

const std::filesystem::path kInclude = std::filesystem::path(SEAWEED_SOURCE_DIR) / "include";

std::set<std::string> local_includes(const std::string& header) {
    std::ifstream in(kInclude / header);
    EXPECT_TRUE(in.good()) << header;
    std::set<std::string> out;
    std::regex re(R"re(^\s*#\s*include\s*"([^"]+)")re");
    std::string line;
    std::smatch m;
    while (std::getline(in, line))
        if (std::regex_search(line, m, re))
            out.insert(m[1]);
    return out;
}

std::set<std::string> closure(const std::string& root) {
    std::set<std::string> seen;
    std::vector<std::string> todo{root};
    while (!todo.empty()) {
        std::string h = todo.back();
        todo.pop_back();
        if (!seen.insert(h).second)
            continue;
        for (const auto& dep : local_includes(h))
            todo.push_back(dep);
    }
    return seen;
}

const std::set<std::string> kSeriesModule{"seaweed/series.hpp", "seaweed/product.hpp", "seaweed/bivariate.hpp"};

}  // namespace

TEST(OracleIndependence, EnumerationHeadersNeverReachSeries) {
    for (const char* root : {"seaweed/stats.hpp", "seaweed/meander.hpp", "seaweed/partitions.hpp"}) {
        auto deps = closure(root);
        for (const auto& s : kSeriesModule)
            EXPECT_EQ(deps.count(s), 0u) << root << " reaches " << s;
    }
}

TEST(OracleIndependence, SeriesCoreDoesNotReachStats) {
    for (const char* root : {"seaweed/series.hpp", "seaweed/product.hpp"}) {
        auto deps = closure(root);
        EXPECT_EQ(deps.count("seaweed/stats.hpp"), 0u) << root;
        EXPECT_EQ(deps.count("seaweed/meander.hpp"), 0u) << root;
        EXPECT_EQ(deps.count("seaweed/partitions.hpp"), 0u) << root;
    }
}

TEST(OracleIndependence, CensusRunsWithoutSeriesSymbols) {
    // compiled without any series header in this TU
    seaweed::StatRecord r = seaweed::census(seaweed::PartitionClass::odd_parts(), 9);
    EXPECT_EQ(r.total(), 8u);
}
