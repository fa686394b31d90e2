#pragma once

#define SEAWEED_PRODUCT_HEADER 1

#include <cctype>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seaweed/integer.hpp"
#include "seaweed/series.hpp"

namespace seaweed {

// One infinite family of binomial factors
//   prod_{j>=0} (1 + c_j t^(t_offset + t_step j) q^(q_offset + q_step j))^power
// with power = +1 or -1. Only the factors with q-exponent <= N matter at order N.
struct FactorFamily {
    std::function<Integer(std::size_t)> coefficient;
    std::size_t q_offset = 1;
    std::int64_t q_step = 1;
    std::size_t t_offset = 0;
    std::size_t t_step = 0;
    int power = 1;
    std::string label;
};

// Signed monomial s * t^t_exp * q^q_exp.
struct Monomial {
    int sign = 1;
    std::size_t t_exp = 0;
    std::size_t q_exp = 0;
};

// (a; base)_inf = prod_{j>=0} (1 - a base^j), as a factor family raised to `power`.
inline FactorFamily pochhammer(Monomial a, Monomial base, int power = 1) {
    FactorFamily f;
    const int sa = a.sign;
    const int sb = base.sign;
    f.coefficient = [sa, sb](std::size_t j) { return Integer((sb < 0 && j % 2 == 1) ? sa : -sa); };
    f.q_offset = a.q_exp;
    f.q_step = static_cast<std::int64_t>(base.q_exp);
    f.t_offset = a.t_exp;
    f.t_step = base.t_exp;
    f.power = power;
    auto mono = [](const Monomial& m) {
        std::string s = m.sign < 0 ? "-" : "";
        if (m.t_exp)
            s += m.t_exp == 1 ? "t" : "t^" + std::to_string(m.t_exp);
        if (m.q_exp)
            s += m.q_exp == 1 ? "q" : "q^" + std::to_string(m.q_exp);
        return s.empty() || s == "-" ? s + "1" : s;
    };
    f.label = "(" + mono(a) + ";" + mono(base) + ")";
    if (power < 0)
        f.label = "1/" + f.label;
    return f;
}

class ProductSpec {
public:
    ProductSpec() = default;
    explicit ProductSpec(std::vector<FactorFamily> families, std::string text = {})
        : families_(std::move(families)), text_(std::move(text)) {
        for (const auto& f : families_)
            validate(f);
    }

    ProductSpec& add(FactorFamily f) {
        validate(f);
        families_.push_back(std::move(f));
        return *this;
    }

    const std::vector<FactorFamily>& families() const { return families_; }

    bool is_univariate() const {
        for (const auto& f : families_)
            if (f.t_offset != 0 || f.t_step != 0)
                return false;
        return true;
    }

    std::string to_string() const {
        if (!text_.empty())
            return text_;
        std::string s;
        for (const auto& f : families_)
            s += f.label.empty() ? "[family]" : f.label;
        return s.empty() ? "1" : s;
    }

private:
    static void validate(const FactorFamily& f) {
        if (f.q_step <= 0)
            throw std::invalid_argument("factor family exponent step must be >= 1, got " + std::to_string(f.q_step));
        if (f.q_offset == 0)
            throw std::invalid_argument("factor family needs a positive q-exponent offset");
        if (f.power != 1 && f.power != -1)
            throw std::invalid_argument("factor family power must be +1 or -1");
        if (!f.coefficient)
            throw std::invalid_argument("factor family without coefficient pattern");
    }

    std::vector<FactorFamily> families_;
    std::string text_;
};

// Exact expansion to order N of a product in q alone.
inline IntSeries expand_product(const ProductSpec& spec, std::size_t order) {
    if (!spec.is_univariate())
        throw std::invalid_argument("product " + spec.to_string() + " involves t; expand it as a bivariate series");
    IntSeries s = IntSeries::one(order);
    for (const auto& f : spec.families()) {
        const auto step = static_cast<std::size_t>(f.q_step);
        for (std::size_t j = 0, e = f.q_offset; e <= order; ++j, e += step) {
            Integer c = f.coefficient(j);
            if (c == 0)
                continue;
            if (f.power > 0)
                s.multiply_binomial(c, e);
            else
                s.divide_binomial(c, e);
        }
    }
    return s;
}

// Exact expansion to q-order N of a product in t and q; every factor must
// satisfy t-exponent <= q-exponent.
inline BivariateSeries expand_bivariate_product(const ProductSpec& spec, std::size_t order) {
    BivariateSeries s = BivariateSeries::one(order);
    for (const auto& f : spec.families()) {
        const auto step = static_cast<std::size_t>(f.q_step);
        for (std::size_t j = 0, e = f.q_offset, a = f.t_offset; e <= order; ++j, e += step, a += f.t_step) {
            Integer c = f.coefficient(j);
            if (c == 0)
                continue;
            if (f.power > 0)
                s.multiply_binomial(c, a, e);
            else
                s.divide_binomial(c, a, e);
        }
    }
    return s;
}

inline constexpr const char* kProductGrammar = R"(Product syntax
  spec     := [numer '/'] denom | numer
  numer    := '1' | group
  denom    := group
  group    := '(' factor+ ')' | factor+
  factor   := '(' mono {',' mono} ';' mono ')' ['^' INT]
  mono     := ['-'] ['t' [['^'] INT]] ('q'|'x') [['^'] INT]
A factor (a1,...,am;b) is the compressed Pochhammer product
(a1;b)_inf ... (am;b)_inf with (a;b)_inf = prod_{j>=0} (1 - a b^j).
Examples
  1/((q;q4)(-q3;q4))     1/(q,-q^3;q^4)     (-q,q2;-q2)
  1/(tq,q2;q2)           1/(q,tq2;tq2)      1/(x;x)^2)";

namespace detail {

class ProductParser {
public:
    explicit ProductParser(std::string_view text) : src_(text) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c)))
                s_.push_back(c);
    }

    ProductSpec parse() {
        std::vector<FactorFamily> fams;
        if (s_.empty())
            fail("empty product");
        if (peek() == '1') {
            ++pos_;
            if (at_end())
                return ProductSpec({}, std::string(src_));
            expect('/');
            group(fams, -1);
        } else {
            group(fams, 1);
            if (!at_end()) {
                expect('/');
                group(fams, -1);
            }
        }
        if (!at_end())
            fail("trailing input");
        return ProductSpec(std::move(fams), std::string(src_));
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse product '" + std::string(src_) + "': " + what + " at offset " +
                                    std::to_string(pos_));
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    // true if the parenthesised block starting at pos_ has a ';' at its own depth
    bool block_is_factor() const {
        int depth = 0;
        for (std::size_t i = pos_; i < s_.size(); ++i) {
            if (s_[i] == '(')
                ++depth;
            else if (s_[i] == ')') {
                if (--depth == 0)
                    return false;
            } else if (s_[i] == ';' && depth == 1)
                return true;
        }
        return false;
    }

    void group(std::vector<FactorFamily>& out, int power) {
        if (peek() != '(')
            fail("expected '('");
        if (block_is_factor()) {
            while (peek() == '(')
                factor(out, power);
            return;
        }
        expect('(');
        if (peek() != '(')
            fail("expected a factor");
        while (peek() == '(')
            factor(out, power);
        expect(')');
    }

    std::size_t number() {
        std::size_t start = pos_;
        std::size_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::size_t>(peek() - '0');
            if (v > 1'000'000'000)
                fail("exponent too large");
            ++pos_;
        }
        if (start == pos_)
            fail("expected a number");
        return v;
    }

    std::size_t exponent() {
        if (peek() == '^') {
            ++pos_;
            return number();
        }
        if (std::isdigit(static_cast<unsigned char>(peek())))
            return number();
        return 1;
    }

    Monomial mono() {
        Monomial m;
        if (peek() == '-') {
            m.sign = -1;
            ++pos_;
        }
        if (peek() == 't') {
            ++pos_;
            m.t_exp = exponent();
        }
        if (peek() != 'q' && peek() != 'x')
            fail("expected 'q'");
        ++pos_;
        m.q_exp = exponent();
        if (m.q_exp == 0)
            fail("q-exponent must be positive");
        return m;
    }

    void factor(std::vector<FactorFamily>& out, int power) {
        expect('(');
        std::vector<Monomial> as{mono()};
        while (peek() == ',') {
            ++pos_;
            as.push_back(mono());
        }
        expect(';');
        Monomial base = mono();
        expect(')');
        std::size_t rep = 1;
        if (peek() == '^') {
            ++pos_;
            rep = number();
        }
        for (std::size_t r = 0; r < rep; ++r)
            for (const auto& a : as)
                out.push_back(pochhammer(a, base, power));
    }

    std::string_view src_;
    std::string s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline ProductSpec parse_product(std::string_view text) { return detail::ProductParser(text).parse(); }

// prod_{n>=1} 1/(1 + (-1)^n q^(2n-1)), written with an explicit alternating coefficient.
inline ProductSpec alternating_odd_product() {
    FactorFamily f;
    f.coefficient = [](std::size_t j) { return Integer(j % 2 == 0 ? -1 : 1); };  // n = j+1
    f.q_offset = 1;
    f.q_step = 2;
    f.power = -1;
    f.label = "prod 1/(1+(-1)^n q^(2n-1))";
    return ProductSpec({f}, f.label);
}

// 1/(q, -q^(m-1); q^m)_inf
inline ProductSpec nonneg_conjecture_product(std::size_t m) {
    if (m < 2)
        throw std::invalid_argument("modulus must be at least 2");
    return ProductSpec({pochhammer({1, 0, 1}, {1, 0, m}, -1), pochhammer({-1, 0, m - 1}, {1, 0, m}, -1)},
                       "1/(q,-q^" + std::to_string(m - 1) + ";q^" + std::to_string(m) + ")");
}

}  // namespace seaweed
