#include "hypersect/rational.hpp"

#include <stdexcept>

namespace hypersect {

namespace {

bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

Integer parse_integer(std::string_view s) {
    if (!is_integer_literal(s)) throw std::invalid_argument("not an integer: " + std::string(s));
    if (s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text));
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Integer& n) { return n.get_str(10); }

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rational rpow(const Rational& base, unsigned long e) {
    return Rational(ipow(base.get_num(), e), ipow(base.get_den(), e));
}

std::int64_t to_int64(const Integer& v) {
    if (!mpz_fits_slong_p(v.get_mpz_t())) throw std::overflow_error("integer does not fit in 64 bits");
    return mpz_get_si(v.get_mpz_t());
}

}  // namespace hypersect
