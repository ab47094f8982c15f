#include "qgs/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace qgs {

BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) after each step
    }
    return result;
}

namespace {

BigInt parse_integer(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty number");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("sign with no digits");
    for (std::size_t i = start; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("bad digit in number: " + std::string(s));
    return BigInt(std::string(s));
}

}  // namespace

Rat parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
        return Rat(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view ip = text.substr(0, dot);
        std::string_view fp = text.substr(dot + 1);
        if (fp.empty()) throw std::invalid_argument("trailing dot: " + std::string(text));
        bool neg = !ip.empty() && ip[0] == '-';
        BigInt whole = ip.empty() || ip == "-" || ip == "+" ? BigInt(0) : parse_integer(ip);
        BigInt frac = parse_integer(fp);
        BigInt scale = 1;
        for (std::size_t i = 0; i < fp.size(); ++i) scale *= 10;
        BigInt num = abs(whole) * scale + frac;
        if (neg) num = -num;
        return Rat(num, scale);
    }
    return Rat(parse_integer(text));
}

std::string to_fraction_string(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

std::string to_decimal_string(const Rat& r, int digits) {
    BigInt num = numerator(r);
    BigInt den = denominator(r);
    std::string out;
    if (num < 0) {
        out += '-';
        num = -num;
    }
    out += BigInt(num / den).str();
    if (digits > 0) {
        out += '.';
        BigInt rem = num % den;
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            out += static_cast<char>('0' + static_cast<int>(rem / den));
            rem %= den;
        }
    }
    return out;
}

double to_double(const Rat& r) { return r.convert_to<double>(); }

}  // namespace qgs
