#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace chordal {

// Exponents are stored in quarter units, so t^(5/2) has key 10.
// The same type carries polynomials in A with A^k stored under key k
// (see from_bracket for the substitution A = t^(-1/4)).
class laurent_poly {
public:
    using exponent = std::int64_t;
    using coeff = std::int64_t;

    laurent_poly() = default;
    explicit laurent_poly(coeff c) { add_term(0, c); }

    static laurent_poly monomial(exponent quarter_exp, coeff c = 1);
    static laurent_poly t_power(exponent n, coeff c = 1) { return monomial(4 * n, c); }

    void add_term(exponent quarter_exp, coeff c);
    coeff coefficient(exponent quarter_exp) const;
    const std::map<exponent, coeff>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    laurent_poly& operator+=(const laurent_poly& o);
    laurent_poly& operator-=(const laurent_poly& o);
    laurent_poly operator-() const;
    friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
    friend laurent_poly operator-(laurent_poly a, const laurent_poly& b) { return a -= b; }
    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b);
    friend bool operator==(const laurent_poly& a, const laurent_poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const laurent_poly& a, const laurent_poly& b) { return !(a == b); }

    laurent_poly pow(int n) const;  // n >= 0
    laurent_poly invert_variable() const;  // t -> t^-1
    coeff eval_at_one() const;
    // Reinterpret an A-polynomial as a t-polynomial through A = t^(-1/4).
    laurent_poly from_bracket() const;

    // Span in t-units as the reduced fraction (num, den). Throws on zero.
    std::pair<std::int64_t, std::int64_t> span() const;

    // "t + t^-1", "-t^4 + t^3 + t^(5/2)", "0".
    std::string to_string(const std::string& var = "t") const;
    // [[num, den, coeff], ...] in descending exponent order.
    std::vector<std::vector<std::int64_t>> to_triples() const;

private:
    std::map<exponent, coeff> terms_;
};

// Reduced fraction of a quarter-unit exponent.
std::pair<std::int64_t, std::int64_t> quarter_fraction(std::int64_t quarter_exp);

} // namespace chordal
