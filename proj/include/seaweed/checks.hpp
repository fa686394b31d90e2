#pragma once

// Identity checkers. Each one computes its left side from the enumeration
// headers (partitions, meander, stats) and its right side from the series
// headers (series, product, bivariate), then compares coefficientwise.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seaweed/bivariate.hpp"
#include "seaweed/partitions.hpp"
#include "seaweed/product.hpp"
#include "seaweed/series.hpp"
#include "seaweed/stats.hpp"

namespace seaweed {

enum class CheckStatus { Pass, Fail, Error };

inline const char* to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Error: return "ERROR";
    }
    return "?";
}

struct Witness {
    std::string where;  // e.g. "n=17"
    std::string left;
    std::string right;
    std::string formulation;
};

struct CheckReport {
    std::string name;
    std::vector<std::pair<std::string, std::int64_t>> range;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Witness> witness;
    bool non_falsification = false;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> notes;
    double elapsed_ms = 0.0;

    bool passed() const { return status == CheckStatus::Pass; }

    // rows are visited in increasing order, so the first witness is the smallest
    void fail(std::string where, std::string left, std::string right, std::string formulation = {}) {
        if (status == CheckStatus::Pass)
            status = CheckStatus::Fail;
        if (!witness)
            witness = Witness{std::move(where), std::move(left), std::move(right), std::move(formulation)};
    }
};

namespace detail {

template <typename T>
std::string dec(const T& v) {
    if constexpr (std::is_same_v<T, Integer> || std::is_same_v<T, GaussInt>)
        return to_decimal(v);
    else
        return std::to_string(v);
}

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// prod 1/(1 + c_j q^e_j) for parts = 1 or m-1 (mod m), expanded by summing
// (-1)^(number of parts = m-1 mod m) over explicit partitions.
inline std::vector<Integer> brute_nonneg_coefficients(std::size_t m, std::size_t order) {
    auto cls = PartitionClass::predicate("1,-1 mod " + std::to_string(m), [m](Part p) {
        return p % m == 1 || p % m == m - 1;
    });
    std::vector<Integer> out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        PartitionStream s(n, cls);
        while (s.next()) {
            std::size_t neg = 0;
            for (Part p : s.current().parts())
                neg += p % m == m - 1 ? 1 : 0;
            out[n] += neg % 2 ? -1 : 1;
        }
    }
    return out;
}

}  // namespace detail

// Sum (-1)^ceil(n/2) E_ind(n) q^n against prod 1/(1 + (-1)^n q^(2n-1)).
// Also confirms that the product agrees with 1/((q;q^4)(-q^3;q^4)) and 1/(q;-q^2).
inline CheckReport check_thm1(std::size_t max_n, unsigned jobs = 1) {
    detail::Stopwatch sw;
    CheckReport r;
    r.name = "thm1";
    r.range = {{"max_n", static_cast<std::int64_t>(max_n)}};
    r.columns = {"n", "signed_eind", "product"};

    auto census_rows = census_range(PartitionClass::odd_parts(), max_n, jobs);
    IntSeries product = expand_product(alternating_odd_product(), max_n);
    IntSeries split = expand_product(parse_product("1/((q;q4)(-q3;q4))"), max_n);
    IntSeries compressed = expand_product(parse_product("1/(q;-q2)"), max_n);

    for (std::size_t n = 0; n <= max_n; ++n) {
        std::int64_t lhs = sign_ceil_half(n) * census_rows[n].diff();
        const Integer& rhs = product.coefficient(n);
        r.rows.push_back({detail::dec(n), detail::dec(lhs), detail::dec(rhs)});
        if (Integer(lhs) != rhs)
            r.fail("n=" + std::to_string(n), detail::dec(lhs), detail::dec(rhs));
        if (split.coefficient(n) != rhs || compressed.coefficient(n) != rhs)
            r.fail("n=" + std::to_string(n), detail::dec(rhs), detail::dec(split.coefficient(n)),
                   "product rewriting 1/((q;q4)(-q3;q4))");
    }
    r.elapsed_ms = sw.ms();
    return r;
}

// |E_ind(n)| against the same product, plus the sign formulation
// (-1)^ceil(n/2) E_ind(n) >= 0. The n >= 1 range is reported separately.
inline CheckReport check_conj1(std::size_t max_n, unsigned jobs = 1) {
    detail::Stopwatch sw;
    CheckReport r;
    r.name = "conj1";
    r.non_falsification = true;
    r.range = {{"max_n", static_cast<std::int64_t>(max_n)}};
    r.columns = {"n", "eind", "abs_eind", "signed_eind", "product"};

    auto census_rows = census_range(PartitionClass::odd_parts(), max_n, jobs);
    IntSeries product = expand_product(alternating_odd_product(), max_n);
    bool tail_ok = true;
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::int64_t e = census_rows[n].diff();
        std::int64_t a = e < 0 ? -e : e;
        std::int64_t s = sign_ceil_half(n) * e;
        const Integer& c = product.coefficient(n);
        r.rows.push_back({detail::dec(n), detail::dec(e), detail::dec(a), detail::dec(s), detail::dec(c)});
        if (Integer(a) != c) {
            r.fail("n=" + std::to_string(n), detail::dec(a), detail::dec(c), "sum |E_ind(n)| q^n = product");
            tail_ok = tail_ok && n == 0;
        }
        if (s < 0) {
            r.fail("n=" + std::to_string(n), detail::dec(s), "0", "(-1)^ceil(n/2) E_ind(n) >= 0");
            tail_ok = tail_ok && n == 0;
        }
    }
    r.notes.push_back("n=0: E_ind(0)=" + (census_rows.empty() ? std::string("?") : detail::dec(census_rows[0].diff())) +
                      " (empty partition, index -1)");
    r.notes.push_back(std::string("n>=1 range: ") + (tail_ok ? "consistent" : "counterexample found"));
    r.elapsed_ms = sw.ms();
    return r;
}

enum class CorollaryClass { P, D, Od };

struct CorollarySpec {
    PartitionClass cls;
    ProductSpec parity_product;  // F(i,-iq)
    ProductSpec bivariate_product;  // F(t,q)
};

inline CorollarySpec corollary_spec(CorollaryClass which, std::uint32_t d = 1) {
    switch (which) {
    case CorollaryClass::P:
        return {PartitionClass::all(), parse_product("1/(q,-q2;-q2)"), parse_product("1/(tq,q2;q2)")};
    case CorollaryClass::D:
        return {PartitionClass::distinct(), parse_product("(-q,q2;-q2)"), parse_product("(-tq,-q2;q2)")};
    case CorollaryClass::Od: {
        std::string m = std::to_string(4 * d);
        std::string m1 = std::to_string(4 * d - 1);
        return {PartitionClass::odd_mod_four_d(d), parse_product("1/(q,-q" + m1 + ";q" + m + ")"),
                parse_product("1/(tq,tq" + m1 + ";q" + m + ")")};
    }
    }
    throw std::invalid_argument("unknown corollary class");
}

// For one class S, compares per n:
//   (-1)^ceil(n/2) (o-e) from the census          vs [q^n] of the stated product
//   F_S(i,-iq) from the enumerated bivariate F_S   vs the same, imaginary part 0
//   (-1)^n (obar-ebar) from the census             vs the same
// and checks F_S(t,q) against its Pochhammer product, both parity lemmas, and
// |o-e| = |obar-ebar|.
inline CheckReport check_corollaries(CorollaryClass which, std::size_t max_n, std::uint32_t d = 1, unsigned jobs = 1) {
    detail::Stopwatch sw;
    CorollarySpec spec = corollary_spec(which, d);
    CheckReport r;
    r.name = "cor-" + spec.cls.name();
    r.range = {{"max_n", static_cast<std::int64_t>(max_n)}};
    if (which == CorollaryClass::Od)
        r.range.emplace_back("d", d);
    r.columns = {"n", "signed_diff", "parity_subst", "product", "signed_diff_bar", "lemma_rhs"};

    auto rows = census_range(spec.cls, max_n, jobs);
    BivariateSeries F = enumerate_bivariate(spec.cls, max_n);
    GaussSeries at_i = substitute_parity(F);
    IntSeries product = expand_product(spec.parity_product, max_n);
    BivariateSeries F_product = expand_bivariate_product(spec.bivariate_product, max_n);

    for (std::size_t n = 0; n <= max_n; ++n) {
        const StatRecord& s = rows[n];
        const std::string where = "n=" + std::to_string(n);
        std::int64_t lhs = sign_ceil_half(n) * s.diff();
        std::int64_t lhs_bar = (n % 2 ? -1 : 1) * s.diff_bar();
        const GaussInt& z = at_i.coefficient(n);
        const Integer& c = product.coefficient(n);
        r.rows.push_back({detail::dec(n), detail::dec(lhs), detail::dec(z), detail::dec(c), detail::dec(lhs_bar),
                          detail::dec(s.residue_diff())});
        if (Integer(lhs) != c)
            r.fail(where, detail::dec(lhs), detail::dec(c), "(-1)^ceil(n/2)(o-e) = product");
        if (!z.is_real())
            r.fail(where, detail::dec(z), "real", "F(i,-iq) has real coefficients");
        if (z != GaussInt(c))
            r.fail(where, detail::dec(z), detail::dec(c), "F(i,-iq) = product");
        if (Integer(lhs_bar) != c)
            r.fail(where, detail::dec(lhs_bar), detail::dec(c), "(-1)^n(obar-ebar) = product");
        if (s.diff() != s.residue_diff())
            r.fail(where, detail::dec(s.diff()), detail::dec(s.residue_diff()), "o-e = op residue difference");
        if (sign_floor_half(n) * s.diff_bar() != s.residue_diff())
            r.fail(where, detail::dec(sign_floor_half(n) * s.diff_bar()), detail::dec(s.residue_diff()),
                   "(-1)^floor(n/2)(obar-ebar) = op residue difference");
        if (std::abs(s.diff()) != std::abs(s.diff_bar()))
            r.fail(where, detail::dec(std::abs(s.diff())), detail::dec(std::abs(s.diff_bar())), "|o-e| = |obar-ebar|");
        for (std::size_t k = 0; k <= n; ++k)
            if (F.coefficient(k, n) != F_product.coefficient(k, n)) {
                r.fail("k=" + std::to_string(k) + ",n=" + std::to_string(n), detail::dec(F.coefficient(k, n)),
                       detail::dec(F_product.coefficient(k, n)), "F_S(t,q) = " + spec.bivariate_product.to_string());
                break;
            }
    }
    r.notes.push_back("parity product " + spec.parity_product.to_string() + ", bivariate product " +
                      spec.bivariate_product.to_string());
    r.elapsed_ms = sw.ms();
    return r;
}

// sum c_n(k) t^k q^n = 1/(q,tq^2;tq^2) and sum c~_n(k) t^k q^n = 1/(tq^2,tq^3;tq^2),
// with the left sides taken both from the exponent-remapped F_P and (1-tq)F_P and
// from the direct census table.
inline CheckReport check_thm_cnk(std::size_t max_q) {
    detail::Stopwatch sw;
    CheckReport r;
    r.name = "thm-cnk";
    r.range = {{"max_q", static_cast<std::int64_t>(max_q)}};
    r.columns = {"n", "k", "c_enum", "c_table", "c_product", "ctilde_enum", "ctilde_table", "ctilde_product"};

    BivariateSeries F = enumerate_bivariate(PartitionClass::all(), max_q);
    BivariateSeries C = substitute_cnk(F);
    BivariateSeries F_tilde = F;
    F_tilde.multiply_binomial(-1, 1, 1);
    BivariateSeries C_tilde = substitute_cnk(F_tilde);
    BivariateSeries P1 = expand_bivariate_product(parse_product("1/(q,tq2;tq2)"), max_q);
    BivariateSeries P2 = expand_bivariate_product(parse_product("1/(tq2,tq3;tq2)"), max_q);
    CnkTable table = cnk_table(max_q / 2, max_q >= 3 * (max_q / 2) ? max_q - 3 * (max_q / 2) : 0);

    for (std::size_t n = 0; n <= max_q; ++n)
        for (std::size_t k = 0; 2 * k <= n; ++k) {
            const std::string where = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
            const Integer& c_enum = C.coefficient(k, n);
            const Integer& c_prod = P1.coefficient(k, n);
            const Integer& ct_enum = C_tilde.coefficient(k, n);
            const Integer& ct_prod = P2.coefficient(k, n);
            std::uint64_t c_tab = table.c[n][k];
            std::uint64_t ct_tab = table.c_tilde[n][k];
            r.rows.push_back({detail::dec(n), detail::dec(k), detail::dec(c_enum), detail::dec(c_tab),
                              detail::dec(c_prod), detail::dec(ct_enum), detail::dec(ct_tab), detail::dec(ct_prod)});
            if (c_enum != c_prod || Integer(c_tab) != c_prod)
                r.fail(where, detail::dec(c_enum) + "/" + detail::dec(c_tab), detail::dec(c_prod),
                       "c_n(k) = [t^k q^n] 1/(q,tq^2;tq^2)");
            if (ct_enum != ct_prod || Integer(ct_tab) != ct_prod)
                r.fail(where, detail::dec(ct_enum) + "/" + detail::dec(ct_tab), detail::dec(ct_prod),
                       "c~_n(k) = [t^k q^n] 1/(tq^2,tq^3;tq^2)");
        }
    // nothing may live above the half-degree line after the remap
    for (std::size_t n = 0; n <= max_q; ++n)
        for (std::size_t k = n / 2 + 1; k <= n; ++k)
            if (P1.coefficient(k, n) != 0 || P2.coefficient(k, n) != 0 || C.coefficient(k, n) != 0)
                r.fail("n=" + std::to_string(n) + ",k=" + std::to_string(k), "nonzero", "0", "c_n(k) = 0 for n < 2k");
    r.elapsed_ms = sw.ms();
    return r;
}

// c(k) = [x^k] 1/(x;x)^2, with c(k) read from the stabilized census table;
// also checks stabilization on [3k, 3k+slack], sum_n c~_n(k) = c(k), and the
// q = 1 specialization of 1/(tq^2,tq^3;tq^2).
inline CheckReport check_thm3(std::size_t max_k, std::size_t slack = 10) {
    detail::Stopwatch sw;
    CheckReport r;
    r.name = "thm3";
    r.range = {{"max_k", static_cast<std::int64_t>(max_k)}};
    r.columns = {"k", "c", "product", "ctilde_sum", "q1_specialization", "stable"};

    CnkTable table = cnk_table(max_k, slack);
    IntSeries product = expand_product(parse_product("1/(x;x)^2"), max_k);
    BivariateSeries tilde_gf = expand_bivariate_product(parse_product("1/(tq2,tq3;tq2)"), 3 * max_k);

    for (std::size_t k = 0; k <= max_k; ++k) {
        const std::string where = "k=" + std::to_string(k);
        std::uint64_t c = table.limit(k);
        Integer q1 = 0;
        for (std::size_t n = 0; n <= tilde_gf.order(); ++n)
            q1 += tilde_gf.coefficient(k, n);
        bool stable = table.stable(k);
        r.rows.push_back({detail::dec(k), detail::dec(c), detail::dec(product.coefficient(k)),
                          detail::dec(table.tilde_sum(k)), detail::dec(q1), stable ? "yes" : "no"});
        if (Integer(c) != product.coefficient(k))
            r.fail(where, detail::dec(c), detail::dec(product.coefficient(k)), "c(k) = [x^k] 1/(x;x)^2");
        if (!stable)
            r.fail(where, "varies", detail::dec(c), "c_n(k) constant on [3k, 3k+" + std::to_string(slack) + "]");
        if (table.tilde_sum(k) != c)
            r.fail(where, detail::dec(table.tilde_sum(k)), detail::dec(c), "sum_n c~_n(k) = c(k)");
        if (q1 != Integer(c))
            r.fail(where, detail::dec(q1), detail::dec(c), "q=1 specialization");
    }
    r.elapsed_ms = sw.ms();
    return r;
}

// Every coefficient of 1/(q,-q^(m-1);q^m) up to max_n is >= 0. The expansion is
// cross-checked against an explicit signed partition count at low order.
inline CheckReport scan_nonneg(std::size_t m, std::size_t max_n, std::size_t cross_order = 40) {
    if (m < 4)
        throw std::invalid_argument("nonnegativity scan needs modulus m >= 4, got " + std::to_string(m));
    detail::Stopwatch sw;
    CheckReport r;
    r.name = "scan-nonneg";
    r.non_falsification = true;
    r.range = {{"m", static_cast<std::int64_t>(m)}, {"max_n", static_cast<std::int64_t>(max_n)}};
    r.columns = {"n", "coefficient"};

    IntSeries s = expand_product(nonneg_conjecture_product(m), max_n);
    std::size_t negatives = 0;
    for (std::size_t n = 0; n <= max_n; ++n)
        if (s.coefficient(n) < 0) {
            ++negatives;
            r.rows.push_back({detail::dec(n), detail::dec(s.coefficient(n))});
            r.fail("n=" + std::to_string(n), detail::dec(s.coefficient(n)), ">= 0", "nonnegative coefficients");
        }

    std::size_t cross = std::min(cross_order, max_n);
    if (r.witness) {
        std::size_t at = static_cast<std::size_t>(std::stoull(r.witness->where.substr(2)));
        if (at <= 80)
            cross = std::max(cross, at);
    }
    auto brute = detail::brute_nonneg_coefficients(m, cross);
    for (std::size_t n = 0; n <= cross; ++n)
        if (brute[n] != s.coefficient(n)) {
            r.status = CheckStatus::Error;
            r.notes.push_back("expansion disagrees with brute-force count at n=" + std::to_string(n) + ": " +
                              detail::dec(s.coefficient(n)) + " vs " + detail::dec(brute[n]));
            break;
        }
    r.notes.push_back("cross-checked against brute-force expansion up to n=" + std::to_string(cross));
    r.notes.push_back(std::to_string(negatives) + " negative coefficients");
    r.elapsed_ms = sw.ms();
    return r;
}

struct MonotoneScan {
    std::vector<std::size_t> violations;
    std::size_t threshold = 0;  // candidate N(m)
};

// All n in [m, max_n] with [q^n] < [q^(n-m)], and the start of the clean tail.
inline MonotoneScan monotone_violations(std::size_t m, std::size_t max_n) {
    if (m < 4)
        throw std::invalid_argument("monotonicity scan needs modulus m >= 4, got " + std::to_string(m));
    if (max_n < m)
        throw std::invalid_argument("monotonicity scan needs max_n >= m");
    IntSeries s = expand_product(nonneg_conjecture_product(m), max_n);
    MonotoneScan out;
    for (std::size_t n = m; n <= max_n; ++n)
        if (s.coefficient(n) < s.coefficient(n - m))
            out.violations.push_back(n);
    out.threshold = out.violations.empty() ? m : out.violations.back() + 1;
    return out;
}

// Reports every violation and the candidate N(m). The tail [N(m), max_n] is
// considered clean evidence when it is at least half of the scanned range.
inline CheckReport scan_monotone(std::size_t m, std::size_t max_n) {
    detail::Stopwatch sw;
    CheckReport r;
    r.name = "scan-monotone";
    r.non_falsification = true;
    r.range = {{"m", static_cast<std::int64_t>(m)}, {"max_n", static_cast<std::int64_t>(max_n)}};
    r.columns = {"n", "coefficient", "coefficient_n_minus_m"};

    MonotoneScan scan = monotone_violations(m, max_n);
    IntSeries s = expand_product(nonneg_conjecture_product(m), max_n);
    for (std::size_t n : scan.violations)
        r.rows.push_back({detail::dec(n), detail::dec(s.coefficient(n)), detail::dec(s.coefficient(n - m))});
    std::size_t tail = max_n + 1 - scan.threshold;
    r.notes.push_back("candidate N(" + std::to_string(m) + ") = " + std::to_string(scan.threshold));
    r.notes.push_back("violation-free tail length " + std::to_string(tail) + " of " + std::to_string(max_n + 1 - m));
    if (2 * tail < max_n + 1 - m && !scan.violations.empty()) {
        std::size_t last = scan.violations.back();
        r.fail("n=" + std::to_string(last), detail::dec(s.coefficient(last)), detail::dec(s.coefficient(last - m)),
               "violation-free tail covers at least half of [m, max_n]");
    }
    r.elapsed_ms = sw.ms();
    return r;
}

}  // namespace seaweed
