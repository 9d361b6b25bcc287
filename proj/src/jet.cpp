#include "tansurf/jet.hpp"

#include <algorithm>
#include <cmath>

namespace tansurf {

namespace {

void check_compatible(const Jet& a, const Jet& b) {
    if (a.order() != b.order())
        throw OrderExhausted("jet order mismatch: " + std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()));
}

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace

Jet::Jet(double base, std::vector<double> coeffs) : base_(base), c_(std::move(coeffs)) {
    if (c_.empty()) c_.assign(1, 0.0);
}

Jet Jet::constant(int order, double base, double value) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = value;
    return Jet(base, std::move(c));
}

Jet Jet::variable(int order, double base) {
    std::vector<double> c(static_cast<std::size_t>(order) + 1, 0.0);
    c[0] = base;
    if (order >= 1) c[1] = 1.0;
    return Jet(base, std::move(c));
}

double Jet::derivative(int j) const {
    return factorial(j) * coeff(j);
}

Jet Jet::operator-() const {
    Jet r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Jet operator+(const Jet& a, const Jet& b) {
    check_compatible(a, b);
    Jet r = a;
    for (int j = 0; j <= a.order(); ++j) r.coeff(j) += b.coeff(j);
    return r;
}

Jet operator-(const Jet& a, const Jet& b) {
    check_compatible(a, b);
    Jet r = a;
    for (int j = 0; j <= a.order(); ++j) r.coeff(j) -= b.coeff(j);
    return r;
}

Jet operator*(const Jet& a, const Jet& b) {
    check_compatible(a, b);
    const int K = a.order();
    std::vector<double> c(static_cast<std::size_t>(K) + 1, 0.0);
    for (int j = 0; j <= K; ++j) {
        double s = 0.0;
        for (int i = 0; i <= j; ++i) s += a.coeff(i) * b.coeff(j - i);
        c[static_cast<std::size_t>(j)] = s;
    }
    return Jet(a.base(), std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) {
    check_compatible(a, b);
    if (b.value() == 0.0)
        throw DomainError("division by jet with zero constant term");
    const int K = a.order();
    std::vector<double> c(static_cast<std::size_t>(K) + 1, 0.0);
    for (int j = 0; j <= K; ++j) {
        double s = a.coeff(j);
        for (int i = 0; i < j; ++i) s -= c[static_cast<std::size_t>(i)] * b.coeff(j - i);
        c[static_cast<std::size_t>(j)] = s / b.value();
    }
    return Jet(a.base(), std::move(c));
}

Jet operator+(const Jet& a, double b) { Jet r = a; r.coeff(0) += b; return r; }
Jet operator+(double a, const Jet& b) { return b + a; }
Jet operator-(const Jet& a, double b) { Jet r = a; r.coeff(0) -= b; return r; }
Jet operator-(double a, const Jet& b) { Jet r = -b; r.coeff(0) += a; return r; }

Jet operator*(const Jet& a, double b) {
    Jet r = a;
    for (int j = 0; j <= r.order(); ++j) r.coeff(j) *= b;
    return r;
}
Jet operator*(double a, const Jet& b) { return b * a; }

Jet operator/(const Jet& a, double b) {
    if (b == 0.0) throw DomainError("division by zero");
    return a * (1.0 / b);
}
Jet operator/(double a, const Jet& b) {
    return Jet::constant(b.order(), b.base(), a) / b;
}

namespace {

// sin and cos computed jointly from s' = a'c, c' = -a's.
void sincos_jet(const Jet& a, Jet& s, Jet& c) {
    const int K = a.order();
    s = Jet::constant(K, a.base(), std::sin(a.value()));
    c = Jet::constant(K, a.base(), std::cos(a.value()));
    for (int j = 0; j < K; ++j) {
        double ds = 0.0, dc = 0.0;
        for (int i = 0; i <= j; ++i) {
            const double da = (i + 1) * a.coeff(i + 1);
            ds += da * c.coeff(j - i);
            dc -= da * s.coeff(j - i);
        }
        s.coeff(j + 1) = ds / (j + 1);
        c.coeff(j + 1) = dc / (j + 1);
    }
}

} // namespace

Jet sin(const Jet& a) {
    Jet s, c;
    sincos_jet(a, s, c);
    return s;
}

Jet cos(const Jet& a) {
    Jet s, c;
    sincos_jet(a, s, c);
    return c;
}

Jet tan(const Jet& a) {
    Jet s, c;
    sincos_jet(a, s, c);
    if (c.value() == 0.0) throw DomainError("tan at odd multiple of pi/2");
    return s / c;
}

Jet exp(const Jet& a) {
    const int K = a.order();
    Jet e = Jet::constant(K, a.base(), std::exp(a.value()));
    for (int j = 0; j < K; ++j) {
        double de = 0.0;
        for (int i = 0; i <= j; ++i)
            de += (i + 1) * a.coeff(i + 1) * e.coeff(j - i);
        e.coeff(j + 1) = de / (j + 1);
    }
    return e;
}

Jet log(const Jet& a) {
    if (!(a.value() > 0.0)) throw DomainError("log of non-positive value");
    const int K = a.order();
    Jet l = Jet::constant(K, a.base(), std::log(a.value()));
    // a' = a l'
    for (int j = 0; j < K; ++j) {
        double s = (j + 1) * a.coeff(j + 1);
        for (int i = 0; i < j; ++i)
            s -= (i + 1) * l.coeff(i + 1) * a.coeff(j - i);
        l.coeff(j + 1) = s / ((j + 1) * a.value());
    }
    return l;
}

Jet sqrt(const Jet& a) {
    if (a.value() < 0.0) throw DomainError("sqrt of negative value");
    const int K = a.order();
    if (a.value() == 0.0) {
        for (int j = 1; j <= K; ++j)
            if (a.coeff(j) != 0.0)
                throw DomainError("sqrt of jet vanishing at the base point");
        return Jet::constant(K, a.base(), 0.0);
    }
    Jet s = Jet::constant(K, a.base(), std::sqrt(a.value()));
    // a = s*s
    for (int j = 1; j <= K; ++j) {
        double r = a.coeff(j);
        for (int i = 1; i < j; ++i) r -= s.coeff(i) * s.coeff(j - i);
        s.coeff(j) = r / (2.0 * s.value());
    }
    return s;
}

Jet tanh(const Jet& a) {
    // th' = a' (1 - th^2)
    const int K = a.order();
    Jet th = Jet::constant(K, a.base(), std::tanh(a.value()));
    Jet sq = Jet::constant(K, a.base(), th.value() * th.value());
    for (int j = 0; j < K; ++j) {
        double d = 0.0;
        for (int i = 0; i <= j; ++i)
            d += (i + 1) * a.coeff(i + 1) * ((j - i == 0 ? 1.0 : 0.0) - sq.coeff(j - i));
        th.coeff(j + 1) = d / (j + 1);
        double q = 0.0;
        for (int i = 0; i <= j + 1; ++i) q += th.coeff(i) * th.coeff(j + 1 - i);
        sq.coeff(j + 1) = q;
    }
    return th;
}

Jet abs(const Jet& a) {
    if (a.value() == 0.0)
        throw DomainError("abs of jet vanishing at the base point");
    return a.value() > 0.0 ? a : -a;
}

Jet powi(const Jet& a, long long n) {
    if (n < 0) return Jet::constant(a.order(), a.base(), 1.0) / powi(a, -n);
    Jet r = Jet::constant(a.order(), a.base(), 1.0);
    Jet b = a;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

Jet pow(const Jet& a, const Jet& b) {
    check_compatible(a, b);
    bool b_const = true;
    for (int j = 1; j <= b.order(); ++j)
        if (b.coeff(j) != 0.0) { b_const = false; break; }
    if (b_const) {
        const double e = b.value();
        const long long n = static_cast<long long>(std::llround(e));
        if (static_cast<double>(n) == e) {
            if (n < 0 && a.value() == 0.0)
                throw DomainError("zero raised to a negative power");
            return powi(a, n);
        }
    }
    if (!(a.value() > 0.0))
        throw DomainError("non-integer power of non-positive base");
    return exp(b * log(a));
}

Jet derivative_jet(const Jet& a) {
    if (a.order() == 0)
        throw OrderExhausted("cannot differentiate an order-0 jet");
    std::vector<double> c(static_cast<std::size_t>(a.order()), 0.0);
    for (int j = 0; j < a.order(); ++j) c[static_cast<std::size_t>(j)] = (j + 1) * a.coeff(j + 1);
    return Jet(a.base(), std::move(c));
}

Jet truncated(const Jet& a, int order) {
    if (order > a.order())
        throw OrderExhausted("cannot extend a jet by truncation");
    std::vector<double> c(a.coeffs().begin(), a.coeffs().begin() + order + 1);
    return Jet(a.base(), std::move(c));
}

double jet_norm(const Jet& a) {
    double m = 0.0;
    for (double x : a.coeffs()) m = std::max(m, std::abs(x));
    return m;
}

JetVec derivative_jet(const JetVec& v) {
    JetVec r;
    r.reserve(v.size());
    for (const Jet& j : v) r.push_back(derivative_jet(j));
    return r;
}

JetVec truncated(const JetVec& v, int order) {
    JetVec r;
    r.reserve(v.size());
    for (const Jet& j : v) r.push_back(truncated(j, order));
    return r;
}

std::vector<double> values(const JetVec& v) {
    std::vector<double> r;
    r.reserve(v.size());
    for (const Jet& j : v) r.push_back(j.value());
    return r;
}

} // namespace tansurf
