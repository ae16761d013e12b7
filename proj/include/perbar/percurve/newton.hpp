#pragma once

#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "../exactnum.hpp"

namespace perbar {

struct NewtonResult {
    std::vector<Cx> x;
    double residual = 0;   // max |f_i(x)|
    double cond = 0;       // condition number estimate of the Jacobian (inf when singular)
    bool converged = false;
};

namespace detail {

template <class K>
Cx eval_cx(const MPoly<K>& p, const std::vector<Cx>& x) {
    return p.eval_with(x, [](const K& c) { return to_cx(c); });
}

}  // namespace detail

template <class K>
Eigen::MatrixXcd jacobian(const std::vector<MPoly<K>>& f, const std::vector<MPoly<K>>& df_flat, const std::vector<Cx>& x) {
    const int n = static_cast<int>(x.size()), m = static_cast<int>(f.size());
    Eigen::MatrixXcd J(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) J(i, j) = detail::eval_cx(df_flat[i * n + j], x);
    return J;
}

// Square Newton iteration on polynomial equations in variables 0..n-1.
template <class K>
NewtonResult newton_polish(const std::vector<MPoly<K>>& f, std::vector<Cx> x, double tol = 1e-13, int max_iter = 60) {
    const int n = static_cast<int>(x.size());
    std::vector<MPoly<K>> df;
    for (const auto& p : f)
        for (int j = 0; j < n; ++j) df.push_back(p.derivative(j));
    auto resid = [&](const std::vector<Cx>& z) {
        Eigen::VectorXcd r(f.size());
        for (size_t i = 0; i < f.size(); ++i) r(i) = detail::eval_cx(f[i], z);
        return r;
    };
    NewtonResult out;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::VectorXcd r = resid(x);
        Eigen::MatrixXcd J = jacobian(f, df, x);
        Eigen::VectorXcd step = J.colPivHouseholderQr().solve(r);
        double scale = 0;
        for (int j = 0; j < n; ++j) {
            x[j] -= step(j);
            scale = std::max(scale, std::abs(x[j]));
        }
        if (!std::isfinite(step.norm())) break;
        if (step.norm() <= tol * (1.0 + scale)) {
            out.converged = true;
            break;
        }
    }
    Eigen::VectorXcd r = resid(x);
    out.residual = r.cwiseAbs().maxCoeff();
    Eigen::MatrixXcd J = jacobian(f, df, x);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(J);
    auto sv = svd.singularValues();
    out.cond = sv(sv.size() - 1) > 0 ? sv(0) / sv(sv.size() - 1) : INFINITY;
    out.x = std::move(x);
    return out;
}

}  // namespace perbar
