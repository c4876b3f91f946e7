#pragma once

#include <span>
#include <vector>

namespace abc {

/// Dense real symmetric matrix (row-major, full storage).
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int order)
        : n_(order), a_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0) {}

    int order() const noexcept { return n_; }

    double operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
    }

    /// Sets both (i,j) and (j,i).
    void set(int i, int j, double value) {
        a_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)] = value;
        a_[static_cast<std::size_t>(j) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(i)] = value;
    }

    double frobenius_norm() const;
    double max_asymmetry() const;
    double trace() const;
    std::vector<double> row_sums() const;
    bool is_zero() const;

    /// Rows and columns restricted to `keep` (in the given order).
    /// Entries keep their values; this is M_H, not M(H).
    SymMatrix submatrix(std::span<const int> keep) const;

    /// True when the nonzero-entry support is connected (order 0/1 count
    /// as connected).
    bool support_connected() const;

    std::span<const double> data() const noexcept { return a_; }

private:
    int n_ = 0;
    std::vector<double> a_;
};

}  // namespace abc
