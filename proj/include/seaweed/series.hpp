#pragma once

#define SEAWEED_SERIES_HEADER 1

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "seaweed/integer.hpp"

namespace seaweed {

class truncation_error : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class non_unit_error : public std::domain_error {
public:
    explicit non_unit_error(std::string constant)
        : std::domain_error("series is not invertible: constant term " + constant + " is not a unit"),
          constant_(std::move(constant)) {}
    const std::string& constant() const { return constant_; }

private:
    std::string constant_;
};

// Power series in q known exactly up to q^order. Coefficients past the order
// are not tracked; binary operations truncate to the smaller order. The ring
// is a template parameter, so mixing Integer and GaussInt series does not compile.
template <typename R>
class TruncatedSeries {
public:
    using ring_type = R;

    explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1) {}
    TruncatedSeries(std::size_t order, std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(order + 1);
    }

    static TruncatedSeries one(std::size_t order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = R(1);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }
    const std::vector<R>& coeffs() const { return coeffs_; }

    const R& coefficient(std::size_t n) const {
        if (n > order())
            throw truncation_error("coefficient of q^" + std::to_string(n) + " requested from a series truncated at order " +
                                   std::to_string(order()));
        return coeffs_[n];
    }
    const R& operator[](std::size_t n) const { return coefficient(n); }
    R& mutable_coefficient(std::size_t n) {
        if (n > order())
            throw truncation_error("coefficient index " + std::to_string(n) + " beyond order " + std::to_string(order()));
        return coeffs_[n];
    }

    TruncatedSeries truncated(std::size_t order) const {
        return TruncatedSeries(std::min(order, this->order()),
                               std::vector<R>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(std::min(order, this->order()) + 1)));
    }

    // *this *= (1 + c q^e)
    void multiply_binomial(const R& c, std::size_t e) {
        if (e == 0)
            throw std::invalid_argument("binomial factor needs a positive exponent");
        for (std::size_t n = order(); n >= e; --n) {
            coeffs_[n] += c * coeffs_[n - e];
            if (n == e)
                break;
        }
    }

    // *this /= (1 + c q^e); the factor is invertible because its constant term is 1.
    void divide_binomial(const R& c, std::size_t e) {
        if (e == 0)
            throw std::invalid_argument("binomial factor needs a positive exponent");
        for (std::size_t n = e; n <= order(); ++n)
            coeffs_[n] -= c * coeffs_[n - e];
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            coeffs_[n] += o.coeffs_[n];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& o) {
        coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t n = 0; n < coeffs_.size(); ++n)
            coeffs_[n] -= o.coeffs_[n];
        return *this;
    }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t n = 0; n < coeffs_.size(); ++n) {
            if (ring_traits<R>::is_zero(coeffs_[n]))
                continue;
            if (!first)
                os << " + ";
            first = false;
            os << "(" << coeffs_[n] << ")";
            if (n)
                os << "q^" << n;
        }
        if (first)
            os << "0";
        os << " + O(q^" << order() + 1 << ")";
        return os.str();
    }

private:
    std::vector<R> coeffs_;
};

using IntSeries = TruncatedSeries<Integer>;
using GaussSeries = TruncatedSeries<GaussInt>;

// Cauchy product truncated at the smaller order.
template <typename R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    const std::size_t order = std::min(a.order(), b.order());
    std::vector<R> out(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
        if (ring_traits<R>::is_zero(a.coeffs()[i]))
            continue;
        for (std::size_t j = 0; i + j <= order; ++j)
            out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return TruncatedSeries<R>(order, std::move(out));
}

template <typename R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
    return series_mul(a, b);
}

// Multiplicative inverse; the constant term must be a unit of the ring.
template <typename R>
TruncatedSeries<R> series_inverse(const TruncatedSeries<R>& a) {
    const R& c0 = a.coeffs()[0];
    if (!ring_traits<R>::is_unit(c0))
        throw non_unit_error(to_decimal(c0));
    const R inv0 = ring_traits<R>::unit_inverse(c0);
    const std::size_t order = a.order();
    std::vector<R> b(order + 1);
    b[0] = inv0;
    for (std::size_t n = 1; n <= order; ++n) {
        R acc{};
        for (std::size_t k = 1; k <= n; ++k)
            if (!ring_traits<R>::is_zero(a.coeffs()[k]))
                acc += a.coeffs()[k] * b[n - k];
        b[n] = -(inv0 * acc);
    }
    return TruncatedSeries<R>(order, std::move(b));
}

// Power series in q whose q^n coefficient is a polynomial in t of degree <= n.
class BivariateSeries {
public:
    explicit BivariateSeries(std::size_t order = 0) : rows_(order + 1) {
        for (std::size_t n = 0; n <= order; ++n)
            rows_[n].resize(n + 1);
    }

    static BivariateSeries one(std::size_t order) {
        BivariateSeries s(order);
        s.rows_[0][0] = 1;
        return s;
    }

    std::size_t order() const { return rows_.size() - 1; }

    // polynomial in t attached to q^n, index = t-degree
    const std::vector<Integer>& row(std::size_t n) const {
        if (n > order())
            throw truncation_error("row q^" + std::to_string(n) + " beyond order " + std::to_string(order()));
        return rows_[n];
    }

    const Integer& coefficient(std::size_t k, std::size_t n) const {
        const auto& r = row(n);
        if (k >= r.size()) {
            static const Integer zero = 0;
            return zero;
        }
        return r[k];
    }

    Integer& at(std::size_t k, std::size_t n) {
        if (n > order() || k > n)
            throw truncation_error("t^" + std::to_string(k) + " q^" + std::to_string(n) + " outside the degree bound");
        return rows_[n][k];
    }

    // *this *= (1 + c t^a q^e), a <= e
    void multiply_binomial(const Integer& c, std::size_t a, std::size_t e) {
        check_factor(a, e);
        for (std::size_t n = order(); n >= e; --n) {
            const auto& src = rows_[n - e];
            auto& dst = rows_[n];
            for (std::size_t k = 0; k < src.size(); ++k)
                if (src[k] != 0)
                    dst[k + a] += c * src[k];
            if (n == e)
                break;
        }
    }

    // *this /= (1 + c t^a q^e), a <= e
    void divide_binomial(const Integer& c, std::size_t a, std::size_t e) {
        check_factor(a, e);
        for (std::size_t n = e; n <= order(); ++n) {
            const auto& src = rows_[n - e];
            auto& dst = rows_[n];
            for (std::size_t k = 0; k < src.size(); ++k)
                if (src[k] != 0)
                    dst[k + a] -= c * src[k];
        }
    }

    BivariateSeries truncated(std::size_t order) const {
        BivariateSeries s(std::min(order, this->order()));
        for (std::size_t n = 0; n <= s.order(); ++n)
            s.rows_[n] = rows_[n];
        return s;
    }

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) { return a.rows_ == b.rows_; }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (std::size_t n = 0; n < rows_.size(); ++n)
            for (std::size_t k = 0; k < rows_[n].size(); ++k) {
                if (rows_[n][k] == 0)
                    continue;
                if (!first)
                    os << " + ";
                first = false;
                os << rows_[n][k] << "*t^" << k << "*q^" << n;
            }
        if (first)
            os << "0";
        os << " + O(q^" << order() + 1 << ")";
        return os.str();
    }

private:
    void check_factor(std::size_t a, std::size_t e) const {
        if (e == 0)
            throw std::invalid_argument("binomial factor needs a positive q-exponent");
        if (a > e)
            throw std::invalid_argument("factor t^" + std::to_string(a) + " q^" + std::to_string(e) +
                                        " breaks the degree bound deg_t <= n");
    }

    std::vector<std::vector<Integer>> rows_;
};

inline BivariateSeries series_mul(const BivariateSeries& a, const BivariateSeries& b) {
    const std::size_t order = std::min(a.order(), b.order());
    BivariateSeries out(order);
    for (std::size_t i = 0; i <= order; ++i)
        for (std::size_t j = 0; i + j <= order; ++j) {
            const auto& ra = a.row(i);
            const auto& rb = b.row(j);
            for (std::size_t x = 0; x < ra.size(); ++x) {
                if (ra[x] == 0)
                    continue;
                for (std::size_t y = 0; y < rb.size(); ++y)
                    if (rb[y] != 0)
                        out.at(x + y, i + j) += ra[x] * rb[y];
            }
        }
    return out;
}

}  // namespace seaweed
