// One line per acceptance criterion; exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <set>
#include <string>

#include "oracles.hpp"
#include "seaweed/seaweed.hpp"

using namespace seaweed;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_ms, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (limit_ms > 0)
        out.require(ms < limit_ms, "runtime over limit");
    if (!out.ok)
        ++failures;
    std::printf("%-4s criterion %2d  %-58s %10.1f ms", out.ok ? "PASS" : "FAIL", id, title.c_str(), ms);
    if (limit_ms > 0)
        std::printf(" (limit %.0f ms)", limit_ms);
    if (!out.ok)
        std::printf("  %s", out.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
}

void require_report(Outcome& out, const CheckReport& r) {
    std::string why = r.name + " " + to_string(r.status);
    if (r.witness)
        why += " at " + r.witness->where + ": " + r.witness->left + " vs " + r.witness->right;
    out.require(r.passed(), why);
}

Composition as_composition(const oracle::Parts& p) { return Composition(std::vector<Part>(p.begin(), p.end())); }

std::set<std::string> include_closure(const std::string& root) {
    const std::filesystem::path base = std::filesystem::path(SEAWEED_SOURCE_DIR) / "include";
    const std::regex re(R"re(^\s*#\s*include\s*"([^"]+)")re");
    std::set<std::string> seen;
    std::vector<std::string> todo{root};
    while (!todo.empty()) {
        std::string h = todo.back();
        todo.pop_back();
        if (!seen.insert(h).second)
            continue;
        std::ifstream in(base / h);
        if (!in)
            throw std::runtime_error("cannot open " + (base / h).string());
        std::string line;
        std::smatch m;
        while (std::getline(in, line))
            if (std::regex_search(line, m, re))
                todo.push_back(m[1]);
    }
    return seen;
}

}  // namespace

int main() {
    criterion(1, "meander (3,2,1,1)|(4,3) has C=0, P=2, index 1", 1.0, [](Outcome& out) {
        Composition top{3, 2, 1, 1}, bottom{4, 3};
        ComponentCount cc = count_components(build_meander(top, bottom));
        out.require(cc.cycles == 0 && cc.paths == 2, "components differ from C=0, P=2");
        out.require(seaweed_index(top, bottom) == 1, "index differs from 1");
    });

    criterion(2, "path count and parity formulas, 10^4 random pairs", 5000.0, [](Outcome& out) {
        std::mt19937_64 rng(20261017);
        std::uniform_int_distribution<std::uint32_t> size(1, 50);
        for (int t = 0; t < 10000 && out.ok; ++t) {
            std::uint32_t n = size(rng);
            auto a = oracle::random_composition(n, rng);
            auto b = oracle::random_composition(n, rng);
            Composition top = as_composition(a), bottom = as_composition(b);
            ComponentCount cc = count_components(build_meander(top, bottom));
            std::string where = "pair " + format_parts(a, ',') + " | " + format_parts(b, ',');
            out.require(static_cast<std::int64_t>(cc.paths) == path_count_formula(top, bottom), "path count at " + where);
            std::int64_t idx = 2 * static_cast<std::int64_t>(cc.cycles) + static_cast<std::int64_t>(cc.paths) - 1;
            out.require(((idx % 2) + 2) % 2 == index_parity(top, bottom), "parity at " + where);
            auto uf = oracle::union_find_components(a, b);
            out.require(uf.cycles == cc.cycles && uf.paths == cc.paths, "union-find oracle at " + where);
        }
    });

    criterion(3, "alternating odd product vs signed eInd, n <= 60", 60000.0,
              [](Outcome& out) { require_report(out, check_thm1(60, 1)); });

    criterion(4, "parity substitution for P, D, O1, O2, O3, n <= 40", 120000.0, [](Outcome& out) {
        require_report(out, check_corollaries(CorollaryClass::P, 40));
        require_report(out, check_corollaries(CorollaryClass::D, 40));
        for (std::uint32_t d = 1; d <= 3; ++d)
            require_report(out, check_corollaries(CorollaryClass::Od, 40, d));
    });

    criterion(5, "F_P, F_D, F_Od enumerations vs products, order 40", 0.0, [](Outcome& out) {
        std::vector<CorollarySpec> specs{corollary_spec(CorollaryClass::P), corollary_spec(CorollaryClass::D)};
        for (std::uint32_t d = 1; d <= 3; ++d)
            specs.push_back(corollary_spec(CorollaryClass::Od, d));
        for (const auto& s : specs) {
            BivariateSeries enumerated = enumerate_bivariate(s.cls, 40);
            BivariateSeries product = expand_bivariate_product(s.bivariate_product, 40);
            out.require(enumerated == product, "F_" + s.cls.name() + " differs from " + s.bivariate_product.to_string());
        }
    });

    criterion(6, "cind closed form and acyclic (n)|1^n meanders, n <= 40", 0.0, [](Outcome& out) {
        for (std::uint64_t n = 0; n <= 40 && out.ok; ++n) {
            PartitionStream s(n, PartitionClass::all());
            while (s.next() && out.ok) {
                const Partition& lambda = s.current();
                Composition top = lambda.as_composition();
                Composition bottom = Composition::ones(n);
                ComponentCount cc = count_components(build_meander(top, bottom));
                std::int64_t graph = 2 * static_cast<std::int64_t>(cc.cycles) + static_cast<std::int64_t>(cc.paths) - 1;
                std::int64_t closed = (static_cast<std::int64_t>(lambda.op_count()) + static_cast<std::int64_t>(n)) / 2 - 1;
                out.require(graph == closed, "cind mismatch at " + format_parts(lambda.parts(), ','));
                out.require(cc.cycles == 0, "cycle found at " + format_parts(lambda.parts(), ','));
            }
        }
    });

    criterion(7, "c_n(k) and c~_n(k) generating functions to q^25", 0.0,
              [](Outcome& out) { require_report(out, check_thm_cnk(25)); });

    criterion(8, "c(k) = [x^k] 1/(x;x)^2 for k <= 15 with stabilization", 0.0, [](Outcome& out) {
        require_report(out, check_thm3(15, 10));
        auto oracle_c = oracle::two_coloured(15);
        const std::vector<std::int64_t> first{1, 2, 5, 10, 20, 36, 65};
        for (std::size_t k = 0; k < first.size(); ++k)
            out.require(oracle_c[k] == first[k], "oracle value at k=" + std::to_string(k));
        CnkTable t = cnk_table(15, 10);
        for (std::size_t k = 0; k <= 15; ++k) {
            out.require(static_cast<std::int64_t>(t.limit(k)) == oracle_c[k], "c(" + std::to_string(k) + ") vs oracle");
            for (std::size_t n = 3 * k; n <= 3 * k + 10; ++n)
                out.require(t.c[n][k] == t.limit(k), "c_n(k) not constant at n=" + std::to_string(n) + ", k=" + std::to_string(k));
        }
    });

    criterion(9, "nonnegativity and monotone scans, m = 4..12, n <= 500", 30000.0, [](Outcome& out) {
        for (std::size_t m = 4; m <= 12; ++m) {
            CheckReport r = scan_nonneg(m, 500);
            require_report(out, r);
            MonotoneScan mono = monotone_violations(m, 500);
            out.require(mono.threshold <= 500, "no violation-free tail for m=" + std::to_string(m));
            std::printf("     m=%-2zu nonneg %s, monotone violations %zu, candidate N(m) = %zu\n", m, to_string(r.status),
                        mono.violations.size(), mono.threshold);
        }
    });

    criterion(10, "census headers never include the series module", 0.0, [](Outcome& out) {
        const std::set<std::string> series{"seaweed/series.hpp", "seaweed/product.hpp", "seaweed/bivariate.hpp"};
        for (const char* root : {"seaweed/stats.hpp", "seaweed/meander.hpp", "seaweed/partitions.hpp"}) {
            auto deps = include_closure(root);
            for (const auto& s : series)
                out.require(!deps.count(s), std::string(root) + " reaches " + s);
        }
        for (const char* root : {"seaweed/series.hpp", "seaweed/product.hpp"}) {
            auto deps = include_closure(root);
            for (const char* s : {"seaweed/stats.hpp", "seaweed/meander.hpp", "seaweed/partitions.hpp"})
                out.require(!deps.count(s), std::string(root) + " reaches " + s);
        }
    });

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
