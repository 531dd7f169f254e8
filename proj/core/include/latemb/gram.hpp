#pragma once

#include <vector>

#include "latemb/int_matrix.hpp"

namespace latemb {

/// Symmetric integer matrix representing a bilinear form on a free
/// abelian group. Symmetry and squareness are checked on construction;
/// values are immutable afterwards, so concurrent reads need no locks.
class GramMatrix {
public:
    GramMatrix() = default; // rank 0

    /// Throws Errc::domain if m is not square or not symmetric.
    explicit GramMatrix(IntMatrix m);

    static GramMatrix diagonal(const std::vector<Int>& diag);

    int rank() const noexcept { return mat_.rows(); }
    const Int& at(int i, int j) const { return mat_.at(i, j); }
    const IntMatrix& matrix() const noexcept { return mat_; }

    bool operator==(const GramMatrix& other) const = default;

private:
    IntMatrix mat_;
};

enum class Parity { even, odd };

/// Inertia indices of a real-diagonalized symmetric form.
struct Inertia {
    int n_plus = 0;
    int n_zero = 0;
    int n_minus = 0;

    bool operator==(const Inertia&) const = default;
};

/// Classifying data of a unimodular form: (b2+, b2-, parity).
struct FormInvariants {
    int b2_plus = 0;
    int b2_minus = 0;
    Parity parity = Parity::odd;

    int rank() const noexcept { return b2_plus + b2_minus; }
    int sig() const noexcept { return b2_plus - b2_minus; }

    bool operator==(const FormInvariants&) const = default;
};

/// Exact determinant via fraction-free Bareiss elimination. No floating
/// point or rationals; every intermediate division is exact.
Int determinant(const GramMatrix& g);

/// Inertia via symmetric congruence diagonalization over exact
/// rationals. Pivot rule: lowest-index nonzero diagonal entry; when the
/// remaining diagonal is all zero but some off-diagonal a_ij != 0, row
/// and column j are added to row and column i (making the diagonal
/// entry 2*a_ij) and elimination continues. Handles zero-diagonal even
/// forms without any eigenvalue computation.
Inertia signature(const GramMatrix& g);

/// even iff every diagonal entry is even (for integral symmetric forms
/// x.x == sum a_ii x_i^2 mod 2, so the diagonal decides).
Parity parity(const GramMatrix& g);

/// Classifying invariants of a nondegenerate unimodular form.
/// Throws Errc::degenerate or Errc::not_unimodular.
FormInvariants invariants(const GramMatrix& g);

/// Block-diagonal sum.
GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b);

/// Entrywise multiplication by k != 0. Throws Errc::zero_scale.
GramMatrix scale(const GramMatrix& g, const Int& k);

} // namespace latemb
