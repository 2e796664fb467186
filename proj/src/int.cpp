#include "acg/int.hpp"

#include <cctype>
#include <ostream>

namespace acg {

std::ostream& operator<<(std::ostream& os, CheckedI64 a) { return os << a.value(); }

std::string to_decimal(const BigInt& v) { return v.str(); }

std::string to_decimal(CheckedI64 v) { return std::to_string(v.value()); }

BigInt parse_bigint(const std::string& token) {
    if (token.empty()) throw std::invalid_argument("empty integer token");
    std::size_t i = 0;
    if (token[0] == '+' || token[0] == '-') i = 1;
    if (i == token.size()) throw std::invalid_argument("sign without digits: '" + token + "'");
    for (std::size_t j = i; j < token.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(token[j])))
            throw std::invalid_argument("not an integer token: '" + token + "'");
    }
    return BigInt(token);
}

bool fits_int64(const BigInt& v) {
    static const BigInt lo = BigInt(INT64_MIN);
    static const BigInt hi = BigInt(INT64_MAX);
    return v >= lo && v <= hi;
}

long long to_int64(const BigInt& v) {
    if (!fits_int64(v)) throw OverflowError("value does not fit in int64: " + v.str());
    return static_cast<long long>(v);
}

}  // namespace acg
