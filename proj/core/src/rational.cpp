#include "bihom/rational.hpp"

namespace bihom {

std::string to_fraction_string(const Rational& value) {
    std::string s = numerator(value).str();
    if (denominator(value) != 1) {
        s += "/";
        s += denominator(value).str();
    }
    return s;
}

std::optional<Rational> parse_fraction(std::string_view text) {
    std::size_t pos = 0;
    const std::size_t n = text.size();
    if (pos < n && text[pos] == '-') ++pos;
    const std::size_t num_begin = pos;
    while (pos < n && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == num_begin) return std::nullopt;
    const std::size_t num_end = pos;

    Integer den = 1;
    if (pos < n) {
        if (text[pos] != '/') return std::nullopt;
        ++pos;
        const std::size_t den_begin = pos;
        if (pos >= n || text[pos] < '1' || text[pos] > '9') return std::nullopt;
        while (pos < n && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos != n) return std::nullopt;
        den = Integer(std::string(text.substr(den_begin, pos - den_begin)));
    }

    Integer num(std::string(text.substr(0, num_end)));
    return Rational(num, den);
}

}  // namespace bihom
