#include "abc/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "abc/errors.hpp"
#include "abc/weights.hpp"

namespace abc {

namespace {

constexpr double kOffdiagFactor = 1e-12;
constexpr int kMaxSweeps = 64;

double offdiag_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double x = a[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(j)];
            s += 2.0 * x * x;
        }
    return std::sqrt(s);
}

}  // namespace

EigenSystem eigen_system(const SymMatrix& m) {
    const int n = m.order();
    if (m.max_asymmetry() > 1e-12 * std::max(1.0, m.frobenius_norm()))
        throw contract_error("eigen_system: matrix is not symmetric");

    std::vector<double> a(m.data().begin(), m.data().end());
    std::vector<double> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                  static_cast<std::size_t>(i)] = 1.0;
    auto at = [&](std::vector<double>& mat, int i, int j) -> double& {
        return mat[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                   static_cast<std::size_t>(j)];
    };

    const double norm = m.frobenius_norm();
    int sweeps = 0;
    if (norm > 0.0 && n > 1) {
        while (true) {
            double off = offdiag_norm(a, n);
            if (off <= kOffdiagFactor * norm) break;
            if (sweeps >= kMaxSweeps)
                throw numeric_error("eigen_system: Jacobi failed to converge", off);
            ++sweeps;
            for (int p = 0; p < n - 1; ++p) {
                for (int q = p + 1; q < n; ++q) {
                    double apq = at(a, p, q);
                    if (apq == 0.0) continue;
                    double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
                    double t = (theta >= 0.0 ? 1.0 : -1.0) /
                               (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                    double c = 1.0 / std::sqrt(t * t + 1.0);
                    double s = t * c;
                    double tau = s / (1.0 + c);

                    double app = at(a, p, p), aqq = at(a, q, q);
                    at(a, p, p) = app - t * apq;
                    at(a, q, q) = aqq + t * apq;
                    at(a, p, q) = 0.0;
                    at(a, q, p) = 0.0;
                    for (int k = 0; k < n; ++k) {
                        if (k != p && k != q) {
                            double akp = at(a, k, p), akq = at(a, k, q);
                            at(a, k, p) = akp - s * (akq + tau * akp);
                            at(a, p, k) = at(a, k, p);
                            at(a, k, q) = akq + s * (akp - tau * akq);
                            at(a, q, k) = at(a, k, q);
                        }
                        double vkp = at(v, k, p), vkq = at(v, k, q);
                        at(v, k, p) = vkp - s * (vkq + tau * vkp);
                        at(v, k, q) = vkq + s * (vkp - tau * vkq);
                    }
                }
            }
        }
    }

    std::vector<int> idx(static_cast<std::size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&](int x, int y) { return at(a, x, x) > at(a, y, y); });

    EigenSystem out;
    out.sweeps = sweeps;
    out.values.reserve(static_cast<std::size_t>(n));
    out.vectors.reserve(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) {
        int col = idx[static_cast<std::size_t>(r)];
        out.values.push_back(at(a, col, col));
        std::vector<double> vec(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) vec[static_cast<std::size_t>(k)] = at(v, k, col);
        out.vectors.push_back(std::move(vec));
    }
    return out;
}

std::vector<double> eigen_spectrum(const SymMatrix& m) { return eigen_system(m).values; }

double spectral_radius(const SymMatrix& m) {
    if (m.order() == 0) return 0.0;
    return eigen_system(m).values.front();
}

SpectralResult perron_result(const SymMatrix& m) {
    SpectralResult r;
    const int n = m.order();
    if (n == 0) {
        r.degenerate = true;
        return r;
    }
    r.degenerate = m.is_zero() || !m.support_connected();

    auto sys = eigen_system(m);
    r.sweeps = sys.sweeps;
    r.rho = sys.values.front();
    r.perron = std::move(sys.vectors.front());

    // orient so the largest-magnitude component is positive
    double big = 0.0;
    for (double x : r.perron)
        if (std::abs(x) > std::abs(big)) big = x;
    if (big < 0.0)
        for (double& x : r.perron) x = -x;
    if (!r.degenerate) {
        for (double& x : r.perron)
            if (x < 0.0 && x > -1e-12) x = 0.0;  // -0 noise
    }

    double rr = 0.0;
    for (int i = 0; i < n; ++i) {
        double mx = 0.0;
        for (int j = 0; j < n; ++j) mx += m(i, j) * r.perron[static_cast<std::size_t>(j)];
        double d = mx - r.rho * r.perron[static_cast<std::size_t>(i)];
        rr += d * d;
    }
    r.residual = std::sqrt(rr);
    return r;
}

double spectral_radius(const Graph& g) { return spectral_radius(abc_matrix(g)); }

SpectralResult perron_result(const Graph& g) { return perron_result(abc_matrix(g)); }

}  // namespace abc
