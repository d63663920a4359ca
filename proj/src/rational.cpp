#include "qabtors/rational.hpp"

#include <cctype>

namespace qabtors {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

bool is_square(const Integer& n) {
    if (n < 0) return false;
    return mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_square(const Rational& q) {
    return is_square(Integer(q.get_num())) && is_square(Integer(q.get_den()));
}

std::optional<Rational> sqrt_exact(const Rational& q) {
    if (!is_square(q)) return std::nullopt;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den().get_mpz_t());
    return make_rational(n, d);
}

static std::optional<Integer> int_nth_root(const Integer& n, unsigned k) {
    if (n < 0 && k % 2 == 0) return std::nullopt;
    Integer r;
    int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
    if (!exact) return std::nullopt;
    return r;
}

std::optional<Rational> nth_root_exact(const Rational& q, unsigned k) {
    if (k == 0) throw std::invalid_argument("zeroth root");
    auto n = int_nth_root(Integer(q.get_num()), k);
    auto d = int_nth_root(Integer(q.get_den()), k);
    if (!n || !d) return std::nullopt;
    return make_rational(*n, *d);
}

bool is_nth_power(const Rational& q, unsigned k) {
    return nth_root_exact(q, k).has_value();
}

namespace {

// One side of the '/' in a factored literal: INT [^EXP] ('*' INT [^EXP])*
Integer parse_product(const std::string& s, size_t& i) {
    Integer acc = 1;
    bool first = true;
    while (true) {
        if (!first) {
            if (i < s.size() && s[i] == '*') ++i;
            else break;
        }
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("bad rational literal: " + s);
        Integer base(s.substr(start, i - start));
        unsigned long exp = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            size_t es = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == es) throw std::invalid_argument("bad exponent in: " + s);
            exp = std::stoul(s.substr(es, i - es));
        }
        Integer powed;
        mpz_pow_ui(powed.get_mpz_t(), base.get_mpz_t(), exp);
        acc *= powed;
        first = false;
    }
    return acc;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    bool neg = false;
    size_t i = 0;
    if (s[i] == '+' || s[i] == '-') { neg = (s[i] == '-'); ++i; }
    Integer num = parse_product(s, i);
    Integer den = 1;
    if (i < s.size() && s[i] == '/') {
        ++i;
        den = parse_product(s, i);
    }
    if (i != s.size()) throw std::invalid_argument("trailing junk in rational literal: " + text);
    if (neg) num = -num;
    return make_rational(num, den);
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace qabtors
