#pragma once

#include "degenpoly/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <string_view>

namespace degenpoly {

/// The fixed symbol universe. Every polynomial lives in Q(i)[x, y, lambda, alpha].
enum class Symbol : int { x = 0, y = 1, lambda = 2, alpha = 3 };

inline constexpr std::array<Symbol, 4> kSymbols{Symbol::x, Symbol::y, Symbol::lambda, Symbol::alpha};

std::string_view symbol_name(Symbol s);
std::optional<Symbol> symbol_from_name(std::string_view name);

/// Exponent tuple, ordered (x, y, lambda, alpha).
struct Monomial {
    std::array<int, 4> exp{0, 0, 0, 0};

    static Monomial unit(Symbol s, int e = 1) {
        Monomial m;
        m.exp[static_cast<int>(s)] = e;
        return m;
    }

    int operator[](Symbol s) const { return exp[static_cast<int>(s)]; }

    bool is_constant() const { return exp == std::array<int, 4>{0, 0, 0, 0}; }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (int i = 0; i < 4; ++i) m.exp[i] = a.exp[i] + b.exp[i];
        return m;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Canonical term order: descending lexicographic on (x, y, lambda, alpha),
/// i.e. the leading monomial comes first. Used for serialization and display.
struct TermOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return b < a; }
};

/// Sparse multivariate polynomial over GaussianRational. Invariant: no stored
/// coefficient is zero; the zero polynomial is the empty map.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, GaussianRational, TermOrder>;

    MultiPoly() = default;
    MultiPoly(int c) : MultiPoly(GaussianRational(c)) {}
    MultiPoly(Rational c) : MultiPoly(GaussianRational(std::move(c))) {}
    MultiPoly(GaussianRational c) {
        if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
    }

    static MultiPoly var(Symbol s, int e = 1) {
        if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
        if (e == 0) return MultiPoly(1);
        MultiPoly p;
        p.terms_.emplace(Monomial::unit(s, e), GaussianRational(1));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
    }
    /// Coefficient of the constant monomial (zero if absent).
    GaussianRational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    int degree(Symbol s) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m[s]);
        return d;
    }

    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    GaussianRational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? GaussianRational() : it->second;
    }

    /// Accumulates c into the coefficient of m, dropping the term if it cancels.
    void add_term(const Monomial& m, const GaussianRational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    MultiPoly& operator*=(const GaussianRational& c);

    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const GaussianRational& c, MultiPoly p) { return p *= c; }
    friend MultiPoly operator*(MultiPoly p, const GaussianRational& c) { return p *= c; }

    MultiPoly pow(int e) const;

    /// Simultaneous single-pass substitution of `value` for every occurrence
    /// of `s`, re-expanded; `value` may itself mention `s` (e.g. x -> x + iy).
    MultiPoly substituted(Symbol s, const MultiPoly& value) const;

    /// Exact evaluation; every symbol present in the polynomial must be assigned.
    GaussianRational eval(const std::map<Symbol, GaussianRational>& point) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    std::string str() const;

private:
    TermMap terms_;
};

}  // namespace degenpoly
