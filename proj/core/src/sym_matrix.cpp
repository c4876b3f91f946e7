#include "abc/sym_matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "abc/errors.hpp"

namespace abc {

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : a_) s += x * x;
    return std::sqrt(s);
}

double SymMatrix::max_asymmetry() const {
    double m = 0.0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
    return m;
}

double SymMatrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += (*this)(i, i);
    return s;
}

std::vector<double> SymMatrix::row_sums() const {
    std::vector<double> out(static_cast<std::size_t>(n_), 0.0);
    for (int i = 0; i < n_; ++i) {
        double s = 0.0;
        for (int j = 0; j < n_; ++j) s += (*this)(i, j);
        out[static_cast<std::size_t>(i)] = s;
    }
    return out;
}

bool SymMatrix::is_zero() const {
    for (double x : a_)
        if (x != 0.0) return false;
    return true;
}

SymMatrix SymMatrix::submatrix(std::span<const int> keep) const {
    SymMatrix out(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
        int vi = keep[i];
        if (vi < 0 || vi >= n_)
            throw contract_error("submatrix: index " + std::to_string(vi) + " out of range");
        for (std::size_t j = 0; j < keep.size(); ++j)
            out.a_[i * keep.size() + j] = (*this)(vi, keep[j]);
    }
    return out;
}

bool SymMatrix::support_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n_; ++v) {
            if (!seen[static_cast<std::size_t>(v)] && (*this)(u, v) != 0.0) {
                seen[static_cast<std::size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n_;
}

}  // namespace abc
