#pragma once

#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace seaweed {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_decimal(const Integer& x) { return x.str(); }

inline Integer parse_integer(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty integer literal");
    std::size_t i = (text.front() == '-' || text.front() == '+') ? 1 : 0;
    if (i == text.size())
        throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
    for (std::size_t j = i; j < text.size(); ++j)
        if (text[j] < '0' || text[j] > '9')
            throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
    Integer v(std::string(text.substr(i)));
    return text.front() == '-' ? Integer(-v) : v;
}

// Gaussian integer re + im*i with exact components.
struct GaussInt {
    Integer re;
    Integer im;

    GaussInt() = default;
    GaussInt(Integer r) : re(std::move(r)) {}  // NOLINT: implicit embedding of Z
    GaussInt(long long r) : re(r) {}           // NOLINT
    GaussInt(Integer r, Integer i) : re(std::move(r)), im(std::move(i)) {}

    static GaussInt i_unit() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussInt conj() const { return {re, -im}; }

    GaussInt& operator+=(const GaussInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussInt& operator-=(const GaussInt& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussInt& operator*=(const GaussInt& o) {
        Integer r = re * o.re - im * o.im;
        Integer i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    friend GaussInt operator+(GaussInt a, const GaussInt& b) { return a += b; }
    friend GaussInt operator-(GaussInt a, const GaussInt& b) { return a -= b; }
    friend GaussInt operator*(GaussInt a, const GaussInt& b) { return a *= b; }
    friend GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussInt& a, const GaussInt& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const GaussInt& z) {
        if (z.im == 0)
            return os << z.re;
        if (z.re == 0)
            return os << z.im << "i";
        return os << z.re << (z.im < 0 ? "-" : "+") << abs(z.im) << "i";
    }
};

inline std::string to_decimal(const GaussInt& z) {
    std::ostringstream os;
    os << z;
    return os.str();
}

// Ring-specific unit handling, used by series inversion.
template <typename R>
struct ring_traits;

template <>
struct ring_traits<Integer> {
    static constexpr const char* name = "integer";
    static bool is_unit(const Integer& x) { return x == 1 || x == -1; }
    // inverse of a unit: +-1 are self-inverse
    static Integer unit_inverse(const Integer& x) { return x; }
    static bool is_zero(const Integer& x) { return x == 0; }
};

template <>
struct ring_traits<GaussInt> {
    static constexpr const char* name = "gaussian";
    static bool is_unit(const GaussInt& z) {
        return (z.im == 0 && (z.re == 1 || z.re == -1)) || (z.re == 0 && (z.im == 1 || z.im == -1));
    }
    static GaussInt unit_inverse(const GaussInt& z) { return z.conj(); }
    static bool is_zero(const GaussInt& z) { return z.is_zero(); }
};

}  // namespace seaweed
