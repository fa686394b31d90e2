#pragma once

// Index statistics by exhaustive enumeration. This header is the brute-force
// side of every identity check and must not depend on the series headers.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "seaweed/meander.hpp"
#include "seaweed/partitions.hpp"

namespace seaweed {

// ind(lambda) = ind_n(lambda): seaweed of type lambda/(n).
inline std::int64_t ind(const Partition& lambda) {
    return seaweed_index(lambda.as_composition(), Composition::single(lambda.weight()));
}

inline std::int64_t cind_closed_form(const Partition& lambda) {
    if (lambda.empty())
        return -1;
    return static_cast<std::int64_t>(lambda.op_count() + lambda.weight()) / 2 - 1;
}

// cind(lambda) = ind_{1^n}(lambda), from the meander; checked against
// (op(lambda) + n)/2 - 1, which holds because such meanders have no cycles.
inline std::int64_t cind(const Partition& lambda) {
    std::int64_t graph = seaweed_index(lambda.as_composition(), Composition::ones(lambda.weight()));
    if (graph != cind_closed_form(lambda))
        throw std::logic_error("cind mismatch for (" + format_parts(lambda.parts()) + "): graph " +
                               std::to_string(graph) + " vs closed form " + std::to_string(cind_closed_form(lambda)));
    return graph;
}

namespace detail {
// parity of ind_mu(lambda) from odd-part counts; the empty case is -1 (odd)
inline bool odd_index_from_op(std::size_t op_lambda, std::size_t op_mu, std::uint64_t n) {
    if (n == 0)
        return true;
    std::int64_t p = static_cast<std::int64_t>(op_lambda + op_mu) / 2;
    return ((p - 1) % 2 + 2) % 2 == 1;
}
}  // namespace detail

struct StatRecord {
    std::uint64_t n = 0;
    std::uint64_t e = 0;
    std::uint64_t o = 0;
    std::uint64_t ebar = 0;
    std::uint64_t obar = 0;
    std::array<std::uint64_t, 4> op_residue{};

    std::uint64_t total() const { return e + o; }
    std::int64_t diff() const { return static_cast<std::int64_t>(o) - static_cast<std::int64_t>(e); }
    std::int64_t diff_bar() const { return static_cast<std::int64_t>(obar) - static_cast<std::int64_t>(ebar); }
    // op residue difference appearing on both sides of the parity lemmas
    std::int64_t residue_diff() const {
        auto r = [this](int i) { return static_cast<std::int64_t>(op_residue[static_cast<std::size_t>(i)]); };
        return n % 2 == 0 ? r(0) - r(2) : r(3) - r(1);
    }

    friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

struct CensusOptions {
    // fraction of partitions whose parities are recomputed from full meanders
    double graph_sample_rate = 0.01;
    std::uint64_t seed = 0x5eaeed;
};

// Classifies every lambda in S_n by the parity of ind and cind and by op mod 4.
// Parities come from odd-part counts; a random sample is recomputed from the
// meander graphs and any disagreement throws std::logic_error.
inline StatRecord census(const PartitionClass& cls, std::uint64_t n, const CensusOptions& opt = {}) {
    StatRecord rec;
    rec.n = n;
    std::mt19937_64 rng(opt.seed ^ (n * 0x9e3779b97f4a7c15ull));
    std::bernoulli_distribution sample(std::clamp(opt.graph_sample_rate, 0.0, 1.0));
    const std::size_t op_row = n % 2;  // op((n))
    PartitionStream s(n, cls);
    while (s.next()) {
        const Partition& lambda = s.current();
        const std::size_t op = lambda.op_count();
        bool ind_odd = detail::odd_index_from_op(op, op_row, n);
        bool cind_odd = detail::odd_index_from_op(op, n, n);
        if (n > 0 && sample(rng)) {
            bool g_ind = (ind(lambda) % 2 + 2) % 2 == 1;
            bool g_cind = (cind(lambda) % 2 + 2) % 2 == 1;
            if (g_ind != ind_odd || g_cind != cind_odd)
                throw std::logic_error("index parity shortcut disagrees with the meander for (" +
                                       format_parts(lambda.parts()) + ")");
        }
        ++(ind_odd ? rec.o : rec.e);
        ++(cind_odd ? rec.obar : rec.ebar);
        ++rec.op_residue[op % 4];
    }
    return rec;
}

// Census rows for n = 0..max_n; rows are split across `jobs` worker threads
// but the result does not depend on the split.
inline std::vector<StatRecord> census_range(const PartitionClass& cls, std::uint64_t max_n, unsigned jobs = 1,
                                            const CensusOptions& opt = {}) {
    std::vector<StatRecord> rows(max_n + 1);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(max_n + 1)));
    if (jobs == 1) {
        for (std::uint64_t n = 0; n <= max_n; ++n)
            rows[n] = census(cls, n, opt);
        return rows;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned w = 0; w < jobs; ++w)
        pool.emplace_back([&, w] {
            try {
                // largest n first, round robin
                for (std::uint64_t i = w; i <= max_n; i += jobs)
                    rows[max_n - i] = census(cls, max_n - i, opt);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return rows;
}

// E_ind(n) = o_O(n) - e_O(n) over partitions into odd parts.
inline std::int64_t e_ind(std::uint64_t n) { return census(PartitionClass::odd_parts(), n).diff(); }

inline int sign_ceil_half(std::uint64_t n) { return ((n + 1) / 2) % 2 == 0 ? 1 : -1; }
inline int sign_floor_half(std::uint64_t n) { return (n / 2) % 2 == 0 ? 1 : -1; }

// (-1)^ceil(n/2) E_ind(n)
inline std::int64_t signed_e_ind(std::uint64_t n) { return sign_ceil_half(n) * e_ind(n); }

// c_n(k) = #{lambda |- n : cind(lambda) = n-k-1} and the no-ones refinement
// c~_n(k) = #{lambda |- n : f_1 = 0, sum_i i (f_2i + f_2i+1) = k}.
struct CnkTable {
    std::size_t max_k = 0;
    std::size_t max_n = 0;
    std::vector<std::vector<std::uint64_t>> c;        // c[n][k]
    std::vector<std::vector<std::uint64_t>> c_tilde;  // c_tilde[n][k]

    // c(k), read off at n = 3k where c_n(k) has stabilized
    std::uint64_t limit(std::size_t k) const { return c.at(3 * k).at(k); }

    std::uint64_t tilde_sum(std::size_t k) const {
        std::uint64_t s = 0;
        for (std::size_t n = 0; n <= max_n; ++n)
            s += c_tilde[n].at(k);
        return s;
    }

    // c_n(k) is constant for n in [3k, max_n]
    bool stable(std::size_t k) const {
        for (std::size_t n = 3 * k; n <= max_n; ++n)
            if (c[n].at(k) != limit(k))
                return false;
        return true;
    }
};

// Fills rows n <= 3*max_k + slack. The slack rows exist to observe stabilization.
inline CnkTable cnk_table(std::size_t max_k, std::size_t slack = 10) {
    CnkTable t;
    t.max_k = max_k;
    t.max_n = 3 * max_k + slack;
    t.c.assign(t.max_n + 1, std::vector<std::uint64_t>(max_k + 1, 0));
    t.c_tilde.assign(t.max_n + 1, std::vector<std::uint64_t>(max_k + 1, 0));
    for (std::size_t n = 0; n <= t.max_n; ++n) {
        PartitionStream all(n, PartitionClass::all());
        while (all.next()) {
            std::int64_t k = static_cast<std::int64_t>(n) - 1 - cind_closed_form(all.current());
            if (k >= 0 && static_cast<std::size_t>(k) <= max_k)
                ++t.c[n][static_cast<std::size_t>(k)];
        }
        PartitionStream no_ones(n, PartitionClass::no_ones());
        while (no_ones.next()) {
            std::size_t k = 0;
            for (Part p : no_ones.current().parts())
                k += p / 2;  // parts 2i and 2i+1 both contribute i
            if (k <= max_k)
                ++t.c_tilde[n][k];
        }
    }
    return t;
}

enum class RemarkCase { TwosAndOne, FoursAndOnes };

// Checks, from meander graphs on both sides, that for every lambda |- n
//   case 1: ind_mu(lambda) = ind_n(lambda)   (mod 2), mu = 2^floor(n/2) 1^(n mod 2)
//   case 2: ind_mu(lambda) = ind_1^n(lambda) (mod 2), mu = 4^floor(n/4) 1^(n mod 4)
inline bool remark_equivalence(std::uint64_t n, RemarkCase which) {
    if (n == 0)
        throw std::invalid_argument("remark check needs n >= 1");
    std::vector<Part> mu_parts;
    const Part block = which == RemarkCase::TwosAndOne ? 2 : 4;
    mu_parts.assign(n / block, block);
    mu_parts.insert(mu_parts.end(), n % block, 1);
    const Composition mu(mu_parts);
    const Composition reference = which == RemarkCase::TwosAndOne ? Composition::single(n) : Composition::ones(n);
    PartitionStream s(n, PartitionClass::all());
    while (s.next()) {
        Composition lambda = s.current().as_composition();
        if ((seaweed_index(lambda, mu) - seaweed_index(lambda, reference)) % 2 != 0)
            return false;
    }
    return true;
}

}  // namespace seaweed
