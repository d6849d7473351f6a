#include "egf/oracles.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace egf::oracle {

namespace {

/* multiply by (1 - q^m) */
std::vector<long long> mul_cyclotomic(const std::vector<long long>& p, int m) {
    std::vector<long long> out(p.size() + m, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
        out[j] += p[j];
        out[j + m] -= p[j];
    }
    return out;
}

/* exact division by (1 - q^m); the remainder must vanish */
std::vector<long long> div_cyclotomic(const std::vector<long long>& p, int m) {
    std::vector<long long> r(p.size(), 0);
    for (std::size_t j = 0; j < p.size(); ++j)
        r[j] = p[j] + (j >= static_cast<std::size_t>(m) ? r[j - m] : 0);
    for (std::size_t j = r.size() - m; j < r.size(); ++j)
        if (r[j] != 0) throw std::logic_error("inexact cyclotomic division");
    r.resize(r.size() - m);
    return r;
}

void trim(std::vector<long long>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

std::vector<long long> gaussian_binomial(int n, int k) {
    std::vector<long long> p = {1};
    for (int i = 1; i <= k; ++i) p = mul_cyclotomic(p, n - k + i);
    for (int i = 1; i <= k; ++i) p = div_cyclotomic(p, i);
    trim(p);
    return p;
}

std::vector<long long> convolve(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::vector<int> numeric_backward_cell(const std::vector<Rational>& spectrum,
                                       const QMatrix& plane, double t_end) {
    const int n = static_cast<int>(plane.rows());
    const int k = static_cast<int>(plane.cols());
    Eigen::MatrixXd v(n, k);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < k; ++c) v(r, c) = plane(r, c).to_double();
    Eigen::VectorXd a(n);
    for (int r = 0; r < n; ++r) a(r) = spectrum[r].to_double();

    /* RK4 on V' = -A V down to t_end, re-orthonormalizing as we go */
    const int steps = 4000;
    const double h = t_end / steps;
    auto deriv = [&](const Eigen::MatrixXd& m) { return (-a.array()).matrix().asDiagonal() * m; };
    for (int s = 0; s < steps; ++s) {
        Eigen::MatrixXd k1 = deriv(v);
        Eigen::MatrixXd k2 = deriv(v + 0.5 * h * k1);
        Eigen::MatrixXd k3 = deriv(v + 0.5 * h * k2);
        Eigen::MatrixXd k4 = deriv(v + h * k3);
        v += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        if (s % 10 == 9) {
            Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
            v = qr.householderQ() * Eigen::MatrixXd::Identity(n, k);
        }
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(v);
    v = qr.householderQ() * Eigen::MatrixXd::Identity(n, k);

    /* bottom-up pivot scan with a coarse threshold */
    const double tol = 1e-6;
    std::vector<int> cell;
    std::vector<bool> used(k, false);
    for (int r = n - 1; r >= 0 && static_cast<int>(cell.size()) < k; --r) {
        int pivot = -1;
        double best = tol;
        for (int c = 0; c < k; ++c)
            if (!used[c] && std::abs(v(r, c)) > best) {
                pivot = c;
                best = std::abs(v(r, c));
            }
        if (pivot < 0) continue;
        used[pivot] = true;
        cell.push_back(r + 1);
        for (int c = 0; c < k; ++c) {
            if (c == pivot) continue;
            v.col(c) -= (v(r, c) / v(r, pivot)) * v.col(pivot);
        }
    }
    std::sort(cell.begin(), cell.end());
    return cell;
}

}  // namespace egf::oracle
