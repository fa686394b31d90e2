#pragma once

#define SEAWEED_BIVARIATE_HEADER 1

#include <cstdint>
#include <stdexcept>
#include <string>

#include "seaweed/partitions.hpp"
#include "seaweed/series.hpp"

namespace seaweed {

class parity_violation : public std::domain_error {
public:
    parity_violation(std::size_t k, std::size_t n)
        : std::domain_error("nonzero coefficient at t^" + std::to_string(k) + " q^" + std::to_string(n) +
                            " has k and n of different parity"),
          k_(k), n_(n) {}
    std::size_t k() const { return k_; }
    std::size_t n() const { return n_; }

private:
    std::size_t k_, n_;
};

// F_S(t,q) = sum f_S(k,n) t^k q^n with f_S(k,n) = #{lambda in S_n : op(lambda) = k},
// tabulated by running the partition stream for every n <= order.
inline BivariateSeries enumerate_bivariate(const PartitionClass& cls, std::size_t order) {
    BivariateSeries F(order);
    for (std::size_t n = 0; n <= order; ++n) {
        PartitionStream s(n, cls);
        while (s.next())
            F.at(s.current().op_count(), n) += 1;
    }
    return F;
}

namespace detail {
inline void require_parity_structure(const BivariateSeries& F) {
    for (std::size_t n = 0; n <= F.order(); ++n) {
        const auto& r = F.row(n);
        for (std::size_t k = 0; k < r.size(); ++k)
            if (r[k] != 0 && (k + n) % 2 != 0)
                throw parity_violation(k, n);
    }
}
}  // namespace detail

// Evaluates F(i, -iq) exactly: coefficient of q^n is sum_k f(k,n) i^k (-i)^n.
inline GaussSeries substitute_parity(const BivariateSeries& F) {
    detail::require_parity_structure(F);
    std::vector<GaussInt> out(F.order() + 1);
    for (std::size_t n = 0; n <= F.order(); ++n) {
        const auto& r = F.row(n);
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (r[k] == 0)
                continue;
            // i^k (-i)^n = (-1)^n i^(k+n)
            std::size_t e = (k + n) % 4;
            Integer v = (n % 2 == 0) ? r[k] : Integer(-r[k]);
            switch (e) {
            case 0: out[n].re += v; break;
            case 1: out[n].im += v; break;
            case 2: out[n].re -= v; break;
            case 3: out[n].im -= v; break;
            }
        }
    }
    return GaussSeries(F.order(), std::move(out));
}

// Realizes t -> t^(-1/2), q -> t^(1/2) q as an exponent remap:
// the coefficient of t^k q^n in the result is the coefficient of t^(n-2k) q^n in F.
inline BivariateSeries substitute_cnk(const BivariateSeries& F) {
    detail::require_parity_structure(F);
    BivariateSeries out(F.order());
    for (std::size_t n = 0; n <= F.order(); ++n) {
        const auto& r = F.row(n);
        for (std::size_t a = 0; a < r.size(); ++a)
            if (r[a] != 0)
                out.at((n - a) / 2, n) = r[a];
    }
    return out;
}

}  // namespace seaweed
