#include "qdp/rational.hpp"

#include <stdexcept>

namespace qdp {

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

bool as_power_of(const Rational& r, std::int64_t d, std::int64_t& k) {
    if (r <= 0) return false;
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    auto log_exact = [d](BigInt v, std::int64_t& out) {
        std::int64_t e = 0;
        while (v > 1) {
            if (v % d != 0) return false;
            v /= d;
            ++e;
        }
        out = e;
        return true;
    };
    std::int64_t en = 0, ed = 0;
    if (!log_exact(num, en) || !log_exact(den, ed)) return false;
    if (en != 0 && ed != 0) return false;  // reduced fraction: one side is 1
    k = en - ed;
    return true;
}

std::string format_exact(const Rational& r, std::int64_t d) {
    std::int64_t k = 0;
    if (as_power_of(r, d, k)) {
        if (k == 0) return "1";
        return std::to_string(d) + "^" + std::to_string(k);
    }
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_exact(const std::string& text, std::int64_t d) {
    if (text.empty()) throw std::invalid_argument("parse_exact: empty value");
    auto caret = text.find('^');
    if (caret != std::string::npos) {
        std::int64_t base = std::stoll(text.substr(0, caret));
        std::int64_t exp = std::stoll(text.substr(caret + 1));
        if (base != d) throw std::invalid_argument("parse_exact: base mismatch in " + text);
        return rational_power(base, exp);
    }
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    return Rational(BigInt(text));
}

}  // namespace qdp
