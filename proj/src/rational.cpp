#include "degenpoly/rational.hpp"

#include <cctype>

namespace degenpoly {

Rational Rational::parse(std::string_view s) {
    // strict shape: -?digits(/digits)?
    std::size_t pos = 0;
    if (pos < s.size() && s[pos] == '-') ++pos;
    std::size_t num_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == num_start) throw std::invalid_argument("Rational: bad literal '" + std::string(s) + "'");
    std::string num(s.substr(0, pos));
    std::string den = "1";
    if (pos < s.size()) {
        if (s[pos] != '/') throw std::invalid_argument("Rational: bad literal '" + std::string(s) + "'");
        ++pos;
        std::size_t den_start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_start || pos != s.size())
            throw std::invalid_argument("Rational: bad literal '" + std::string(s) + "'");
        den.assign(s.substr(den_start));
    }
    return Rational(Integer(num), Integer(den));
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string out = re_.is_zero() ? std::string() : re_.str();
    if (!out.empty() && im_.sign() > 0) out += "+";
    out += im_.str();
    out += "i";
    return out;
}

}  // namespace degenpoly
