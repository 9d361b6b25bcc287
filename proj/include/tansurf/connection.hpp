#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

#include "tansurf/expr.hpp"
#include "tansurf/jet.hpp"

namespace tansurf {

/// Affine connection on one coordinate chart, given by m^3 Christoffel
/// symbols Gamma^l_{mu,nu} as expressions in x1..xm. Unset entries are the
/// zero expression.
class ChristoffelField {
public:
    explicit ChristoffelField(int dim);

    int dim() const { return dim_; }
    const std::vector<std::string>& variables() const { return vars_; }

    /// Indices are 0-based; entry(l, mu, nu) is Gamma^{l+1}_{mu+1,nu+1}.
    const Expr& entry(int l, int mu, int nu) const;
    void set(int l, int mu, int nu, Expr e);

    bool torsion_free() const { return torsion_free_; }
    void mark_torsion_free(bool v) { torsion_free_ = v; }

    /// All m^3 symbol values at a point, laid out as (l*m + mu)*m + nu.
    std::vector<double> values_at(const std::vector<double>& x) const;
    std::vector<Jet> jets_at(const JetVec& x, int order, double base) const;

    bool all_zero() const;

private:
    int dim_;
    std::vector<std::string> vars_;
    std::vector<Expr> gamma_;
    bool torsion_free_;
};

/// Torsion-free part: entries 1/2 (Gamma^l_{mu,nu} + Gamma^l_{nu,mu}) built
/// as expression sums. Geodesics and tangent surfaces are unchanged by this
/// replacement since the geodesic equation is symmetric in mu, nu.
ChristoffelField symmetrize(const ChristoffelField& conn);

/// Covariant derivative of a vector field w along a curve, in jets:
/// (nabla w)^l = (w^l)' + Gamma^l_{mu,nu}(gamma) (gamma')^mu w^nu.
/// Output order is input order minus one.
JetVec covariant_derivative(const JetVec& w, const JetVec& gamma_jets,
                            const ChristoffelField& conn);

/// Values w(t0), (nabla w)(t0), ..., (nabla^{count-1} w)(t0).
std::vector<Eigen::VectorXd> covariant_value_chain(JetVec w, const JetVec& gamma_jets,
                                                   const ChristoffelField& conn, int count);

/// Covariant derivatives of the curve itself at the base parameter.
struct CovariantChain {
    double t0 = 0.0;
    std::vector<Eigen::VectorXd> D; // D[k-1] = (nabla^k gamma)(t0), k = 1..K
};

/// Jets of the curve coordinates at t0 with the given order.
JetVec curve_jets(const std::vector<Expr>& gamma, double t0, int order);

CovariantChain covariant_chain(const ChristoffelField& conn, const std::vector<Expr>& gamma,
                               double t0, int count, int jet_order);
CovariantChain covariant_chain(const ChristoffelField& conn, const JetVec& gamma_jets, int count);

} // namespace tansurf
