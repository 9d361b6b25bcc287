#include "tansurf/connection.hpp"

namespace tansurf {

namespace {

std::vector<std::string> chart_variables(int dim) {
    std::vector<std::string> v;
    v.reserve(static_cast<std::size_t>(dim));
    for (int i = 1; i <= dim; ++i) v.push_back("x" + std::to_string(i));
    return v;
}

} // namespace

ChristoffelField::ChristoffelField(int dim)
    : dim_(dim),
      vars_(chart_variables(dim)),
      gamma_(static_cast<std::size_t>(dim) * dim * dim),
      torsion_free_(true) {
    if (dim < 2) throw ValidationError("connection dimension must be at least 2");
    for (auto& e : gamma_) e = zero_expr(vars_);
}

const Expr& ChristoffelField::entry(int l, int mu, int nu) const {
    return gamma_[static_cast<std::size_t>((l * dim_ + mu) * dim_ + nu)];
}

void ChristoffelField::set(int l, int mu, int nu, Expr e) {
    if (l < 0 || l >= dim_ || mu < 0 || mu >= dim_ || nu < 0 || nu >= dim_)
        throw ValidationError("Christoffel index out of range");
    gamma_[static_cast<std::size_t>((l * dim_ + mu) * dim_ + nu)] = std::move(e);
    torsion_free_ = false;
}

std::vector<double> ChristoffelField::values_at(const std::vector<double>& x) const {
    std::vector<double> out(gamma_.size(), 0.0);
    for (std::size_t i = 0; i < gamma_.size(); ++i)
        if (!is_literal_zero(gamma_[i])) out[i] = eval_scalar(gamma_[i], x);
    return out;
}

std::vector<Jet> ChristoffelField::jets_at(const JetVec& x, int order, double base) const {
    std::vector<Jet> out(gamma_.size(), Jet::constant(order, base, 0.0));
    for (std::size_t i = 0; i < gamma_.size(); ++i)
        if (!is_literal_zero(gamma_[i])) out[i] = eval_jet(gamma_[i], x, order, base);
    return out;
}

bool ChristoffelField::all_zero() const {
    for (const auto& e : gamma_)
        if (!is_literal_zero(e)) return false;
    return true;
}

ChristoffelField symmetrize(const ChristoffelField& conn) {
    const int m = conn.dim();
    ChristoffelField out(m);
    for (int l = 0; l < m; ++l)
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu) {
                const Expr& a = conn.entry(l, mu, nu);
                const Expr& b = conn.entry(l, nu, mu);
                if (is_literal_zero(a) && is_literal_zero(b)) continue;
                out.set(l, mu, nu, half_sum_expr(a, b));
            }
    out.mark_torsion_free(true);
    return out;
}

JetVec covariant_derivative(const JetVec& w, const JetVec& gamma_jets,
                            const ChristoffelField& conn) {
    const int m = conn.dim();
    if (static_cast<int>(w.size()) != m || static_cast<int>(gamma_jets.size()) != m)
        throw ValidationError("dimension mismatch in covariant derivative");
    const int n = w[0].order();
    if (n == 0) throw OrderExhausted("covariant derivative of an order-0 jet");
    const int out_order = n - 1;
    const double base = w[0].base();

    JetVec result = derivative_jet(w); // (w^l)'
    if (conn.all_zero()) return result;

    const JetVec gamma_n = truncated(gamma_jets, std::min(gamma_jets[0].order(), n));
    const JetVec gamma_prime = truncated(derivative_jet(gamma_n), out_order);
    const JetVec w_t = truncated(w, out_order);
    const JetVec pos = truncated(gamma_jets, out_order);
    const std::vector<Jet> G = conn.jets_at(pos, out_order, base);

    for (int l = 0; l < m; ++l) {
        Jet acc = result[static_cast<std::size_t>(l)];
        for (int mu = 0; mu < m; ++mu)
            for (int nu = 0; nu < m; ++nu) {
                const Jet& g = G[static_cast<std::size_t>((l * m + mu) * m + nu)];
                if (jet_norm(g) == 0.0) continue;
                acc = acc + g * gamma_prime[static_cast<std::size_t>(mu)] *
                                w_t[static_cast<std::size_t>(nu)];
            }
        result[static_cast<std::size_t>(l)] = acc;
    }
    return result;
}

std::vector<Eigen::VectorXd> covariant_value_chain(JetVec w, const JetVec& gamma_jets,
                                                   const ChristoffelField& conn, int count) {
    const int m = conn.dim();
    std::vector<Eigen::VectorXd> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) {
        Eigen::VectorXd v(m);
        for (int i = 0; i < m; ++i) v[i] = w[static_cast<std::size_t>(i)].value();
        out.push_back(std::move(v));
        if (k + 1 < count) w = covariant_derivative(w, gamma_jets, conn);
    }
    return out;
}

JetVec curve_jets(const std::vector<Expr>& gamma, double t0, int order) {
    const Jet t = Jet::variable(order, t0);
    JetVec out;
    out.reserve(gamma.size());
    for (const Expr& e : gamma) out.push_back(eval_jet(e, {t}, order, t0));
    return out;
}

CovariantChain covariant_chain(const ChristoffelField& conn, const JetVec& gamma_jets,
                               int count) {
    if (count > gamma_jets[0].order() - 1)
        throw OrderExhausted("chain length exceeds available jet order");
    CovariantChain chain;
    chain.t0 = gamma_jets[0].base();
    JetVec w = derivative_jet(gamma_jets); // nabla^1 gamma = velocity
    auto vals = covariant_value_chain(std::move(w), gamma_jets, conn, count);
    chain.D = std::move(vals);
    return chain;
}

CovariantChain covariant_chain(const ChristoffelField& conn, const std::vector<Expr>& gamma,
                               double t0, int count, int jet_order) {
    return covariant_chain(conn, curve_jets(gamma, t0, jet_order), count);
}

} // namespace tansurf
