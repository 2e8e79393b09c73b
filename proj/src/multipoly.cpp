#include "degenpoly/multipoly.hpp"

#include <sstream>
#include <vector>

namespace degenpoly {

std::string_view symbol_name(Symbol s) {
    switch (s) {
        case Symbol::x: return "x";
        case Symbol::y: return "y";
        case Symbol::lambda: return "lambda";
        case Symbol::alpha: return "alpha";
    }
    throw std::invalid_argument("symbol_name: bad symbol");
}

std::optional<Symbol> symbol_from_name(std::string_view name) {
    for (Symbol s : kSymbols)
        if (symbol_name(s) == name) return s;
    return std::nullopt;
}

void MultiPoly::add_term(const Monomial& m, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    // iterate the smaller factor on the outside
    const MultiPoly& outer = a.term_count() <= b.term_count() ? a : b;
    const MultiPoly& inner = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [ma, ca] : outer.terms_)
        for (const auto& [mb, cb] : inner.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly: negative power");
    MultiPoly r(1);
    MultiPoly base(*this);
    while (e > 0) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return r;
}

MultiPoly MultiPoly::substituted(Symbol s, const MultiPoly& value) const {
    int maxe = degree(s);
    if (maxe == 0) return *this;
    // precompute value^0 .. value^maxe
    std::vector<MultiPoly> powers;
    powers.reserve(maxe + 1);
    powers.emplace_back(1);
    for (int e = 1; e <= maxe; ++e) powers.push_back(powers.back() * value);

    const int si = static_cast<int>(s);
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        int e = m.exp[si];
        Monomial rest = m;
        rest.exp[si] = 0;
        MultiPoly stripped;
        stripped.terms_.emplace(rest, c);
        r += stripped * powers[e];
    }
    return r;
}

GaussianRational MultiPoly::eval(const std::map<Symbol, GaussianRational>& point) const {
    GaussianRational total;
    for (const auto& [m, c] : terms_) {
        GaussianRational v = c;
        for (Symbol s : kSymbols) {
            int e = m[s];
            if (e == 0) continue;
            auto it = point.find(s);
            if (it == point.end())
                throw std::invalid_argument("MultiPoly::eval: no value for symbol '" +
                                            std::string(symbol_name(s)) + "'");
            GaussianRational p = it->second;
            for (int j = 0; j < e; ++j) v *= p;
        }
        total += v;
    }
    return total;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (Symbol s : kSymbols) {
            if (int e = m[s]; e > 0) {
                os << "*" << symbol_name(s);
                if (e > 1) os << "^" << e;
            }
        }
    }
    return os.str();
}

}  // namespace degenpoly
