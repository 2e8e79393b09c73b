#include "degenpoly/combinat.hpp"

#include <mutex>
#include <vector>

namespace degenpoly {

Integer factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

MultiPoly falling_factorial(const MultiPoly& w, int n) {
    if (n < 0) throw std::invalid_argument("falling_factorial: negative index");
    MultiPoly r(1);
    const MultiPoly lam = MultiPoly::var(Symbol::lambda);
    for (int j = 0; j < n; ++j) r = r * (w - GaussianRational(Rational(j)) * lam);
    return r;
}

MultiPoly central_factorial_monomial(int n) {
    if (n < 0) throw std::invalid_argument("central_factorial_monomial: negative index");
    if (n == 0) return MultiPoly(1);
    const MultiPoly x = MultiPoly::var(Symbol::x);
    MultiPoly r = x;
    for (int j = 1; j < n; ++j) r = r * (x + MultiPoly(Rational(n - 2 * j, 2)));
    return r;
}

namespace {

std::mutex g_tables_mutex;

// triangles grown row by row; rows never change once written
struct Triangle {
    std::vector<std::vector<Rational>> rows;
};

Triangle g_s1, g_s2, g_central;
std::vector<Rational> g_bernoulli2;

struct PolyTriangle {
    std::vector<std::vector<MultiPoly>> rows;
};

PolyTriangle g_tlambda[2];  // [0] without x, [1] with x

void extend_stirling1(int n) {
    auto& rows = g_s1.rows;
    if (rows.empty()) rows.push_back({Rational(1)});
    while (static_cast<int>(rows.size()) <= n) {
        int m = static_cast<int>(rows.size());  // building row m from row m-1
        const auto& prev = rows.back();
        std::vector<Rational> row(m + 1);
        for (int k = 0; k <= m; ++k) {
            Rational above = k <= m - 1 ? prev[k] : Rational(0);
            Rational left = k >= 1 ? prev[k - 1] : Rational(0);
            row[k] = left - Rational(m - 1) * above;
        }
        rows.push_back(std::move(row));
    }
}

void extend_stirling2(int n) {
    auto& rows = g_s2.rows;
    if (rows.empty()) rows.push_back({Rational(1)});
    while (static_cast<int>(rows.size()) <= n) {
        int m = static_cast<int>(rows.size());
        const auto& prev = rows.back();
        std::vector<Rational> row(m + 1);
        for (int k = 0; k <= m; ++k) {
            Rational above = k <= m - 1 ? prev[k] : Rational(0);
            Rational left = k >= 1 ? prev[k - 1] : Rational(0);
            row[k] = left + Rational(k) * above;
        }
        rows.push_back(std::move(row));
    }
}

// e^{ct} truncated: coefficient of t^j is c^j / j!
Series const_exp_series(const Rational& c, int order) {
    Series s(order);
    Rational p(1), jfact(1);
    s.set_coeff(0, MultiPoly(1));
    for (int j = 1; j <= order; ++j) {
        p *= c;
        jfact *= Rational(j);
        s.set_coeff(j, MultiPoly(p / jfact));
    }
    return s;
}

// e_lambda^w(t) truncated: coefficient of t^j is (w)_{j,lambda} / j!
Series degenerate_exp_series(const MultiPoly& w, int order) {
    Series s(order);
    s.set_coeff(0, MultiPoly(1));
    MultiPoly running(1);
    Rational jfact(1);
    const MultiPoly lam = MultiPoly::var(Symbol::lambda);
    for (int j = 1; j <= order; ++j) {
        running = running * (w - GaussianRational(Rational(j - 1)) * lam);
        jfact *= Rational(j);
        s.set_coeff(j, GaussianRational(jfact.inverse()) * running);
    }
    return s;
}

void extend_central(int n) {
    auto& rows = g_central.rows;
    int have = static_cast<int>(rows.size()) - 1;
    if (have >= n) return;
    Series diff = const_exp_series(Rational(1, 2), n) - const_exp_series(Rational(-1, 2), n);
    std::vector<Series> powers;
    powers.push_back(Series::one(n));
    for (int k = 1; k <= n; ++k) powers.push_back(mul_serial(powers.back(), diff));
    for (int m = have + 1; m <= n; ++m) {
        std::vector<Rational> row(m + 1);
        for (int k = 0; k <= m; ++k) {
            GaussianRational c = powers[k].coeff(m).constant_term();
            row[k] = Rational(factorial(m)) / Rational(factorial(k)) * c.real();
        }
        rows.push_back(std::move(row));
    }
}

void extend_tlambda(int n, bool with_x) {
    auto& rows = g_tlambda[with_x ? 1 : 0].rows;
    int have = static_cast<int>(rows.size()) - 1;
    if (have >= n) return;
    const MultiPoly half(Rational(1, 2));
    Series diff = degenerate_exp_series(half, n) - degenerate_exp_series(-half, n);
    Series expx = with_x ? degenerate_exp_series(MultiPoly::var(Symbol::x), n) : Series::one(n);
    std::vector<Series> powers;
    powers.push_back(expx);
    for (int k = 1; k <= n; ++k) powers.push_back(mul_serial(powers.back(), diff));
    for (int m = have + 1; m <= n; ++m) {
        std::vector<MultiPoly> row(m + 1);
        for (int k = 0; k <= m; ++k) {
            Rational scale = Rational(factorial(m)) / Rational(factorial(k));
            row[k] = GaussianRational(scale) * powers[k].coeff(m);
        }
        rows.push_back(std::move(row));
    }
}

void extend_bernoulli2(int n) {
    int have = static_cast<int>(g_bernoulli2.size()) - 1;
    if (have >= n) return;
    // t / log(1+t): shift the log series down one power, then invert
    Series log1p(n + 1);
    for (int j = 1; j <= n + 1; ++j)
        log1p.set_coeff(j, MultiPoly(Rational(j % 2 == 1 ? 1 : -1, j)));
    Series ratio = invert(divide_by_t(log1p));
    g_bernoulli2.clear();
    for (int m = 0; m <= n; ++m)
        g_bernoulli2.push_back(Rational(factorial(m)) * ratio.coeff(m).constant_term().real());
}

}  // namespace

Rational stirling1(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling1: negative index");
    if (k > n) return Rational(0);
    std::lock_guard lock(g_tables_mutex);
    extend_stirling1(n);
    return g_s1.rows[n][k];
}

Rational stirling2(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("stirling2: negative index");
    if (k > n) return Rational(0);
    std::lock_guard lock(g_tables_mutex);
    extend_stirling2(n);
    return g_s2.rows[n][k];
}

Rational central_T(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("central_T: negative index");
    if (k > n) return Rational(0);
    std::lock_guard lock(g_tables_mutex);
    extend_central(n);
    return g_central.rows[n][k];
}

MultiPoly degen_central_T(int n, int k, bool with_x) {
    if (n < 0 || k < 0) throw std::invalid_argument("degen_central_T: negative index");
    if (k > n) return MultiPoly();
    std::lock_guard lock(g_tables_mutex);
    extend_tlambda(n, with_x);
    return g_tlambda[with_x ? 1 : 0].rows[n][k];
}

Rational bernoulli2nd(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli2nd: negative index");
    std::lock_guard lock(g_tables_mutex);
    extend_bernoulli2(n);
    return g_bernoulli2[n];
}

void corrupt_stirling1(int n, int k, const Rational& delta) {
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("corrupt_stirling1: bad entry");
    std::lock_guard lock(g_tables_mutex);
    extend_stirling1(n);
    g_s1.rows[n][k] += delta;
}

void reset_number_tables() {
    std::lock_guard lock(g_tables_mutex);
    g_s1.rows.clear();
    g_s2.rows.clear();
    g_central.rows.clear();
    g_bernoulli2.clear();
    g_tlambda[0].rows.clear();
    g_tlambda[1].rows.clear();
}

}  // namespace degenpoly
