#include "chordal/laurent.hpp"

#include <numeric>
#include <sstream>

#include "chordal/error.hpp"

namespace chordal {

laurent_poly laurent_poly::monomial(exponent quarter_exp, coeff c)
{
    laurent_poly p;
    p.add_term(quarter_exp, c);
    return p;
}

void laurent_poly::add_term(exponent quarter_exp, coeff c)
{
    if (c == 0) return;
    auto it = terms_.find(quarter_exp);
    if (it == terms_.end()) {
        terms_.emplace(quarter_exp, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

laurent_poly::coeff laurent_poly::coefficient(exponent quarter_exp) const
{
    auto it = terms_.find(quarter_exp);
    return it == terms_.end() ? 0 : it->second;
}

laurent_poly& laurent_poly::operator+=(const laurent_poly& o)
{
    for (auto [e, c] : o.terms_) add_term(e, c);
    return *this;
}

laurent_poly& laurent_poly::operator-=(const laurent_poly& o)
{
    for (auto [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

laurent_poly laurent_poly::operator-() const
{
    laurent_poly r;
    for (auto [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

laurent_poly operator*(const laurent_poly& a, const laurent_poly& b)
{
    laurent_poly r;
    for (auto [ea, ca] : a.terms_)
        for (auto [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

laurent_poly laurent_poly::pow(int n) const
{
    laurent_poly r(1), base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

laurent_poly laurent_poly::invert_variable() const
{
    laurent_poly r;
    for (auto [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

laurent_poly::coeff laurent_poly::eval_at_one() const
{
    coeff s = 0;
    for (auto [e, c] : terms_) s += c;
    return s;
}

laurent_poly laurent_poly::from_bracket() const
{
    // A^k = t^(-k/4), i.e. quarter exponent -k.
    return invert_variable();
}

std::pair<std::int64_t, std::int64_t> laurent_poly::span() const
{
    if (terms_.empty()) throw diagram_error("span of the zero polynomial is undefined");
    return quarter_fraction(terms_.rbegin()->first - terms_.begin()->first);
}

std::pair<std::int64_t, std::int64_t> quarter_fraction(std::int64_t q)
{
    std::int64_t g = std::gcd(q < 0 ? -q : q, std::int64_t{4});
    return {q / g, 4 / g};
}

std::string laurent_poly::to_string(const std::string& var) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        coeff mag = c < 0 ? -c : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << var;
        auto [num, den] = quarter_fraction(e);
        if (den == 1) {
            if (num != 1) os << '^' << num;
        } else {
            os << "^(" << num << '/' << den << ')';
        }
    }
    return os.str();
}

std::vector<std::vector<std::int64_t>> laurent_poly::to_triples() const
{
    std::vector<std::vector<std::int64_t>> out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [num, den] = quarter_fraction(it->first);
        out.push_back({num, den, it->second});
    }
    return out;
}

} // namespace chordal
