#include "npoint/rational.hpp"

#include <stdexcept>

namespace npoint {

std::string rational_to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Int(s));
        }
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational literal: " + s);
    }
}

double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

Int factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative integer");
    Int r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

Int odd_double_factorial(long m) {
    if (m < -1 || m % 2 == 0) {
        throw std::invalid_argument("odd_double_factorial expects odd m >= -1");
    }
    Int r = 1;
    for (long k = m; k > 1; k -= 2) r *= k;
    return r;
}

}  // namespace npoint
