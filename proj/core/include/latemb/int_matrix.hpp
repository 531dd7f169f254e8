#pragma once

#include <vector>

#include "latemb/int_types.hpp"

namespace latemb {

/// Dense matrix of arbitrary-precision integers, row-major. Plain value
/// type with no invariants beyond its shape; GramMatrix adds symmetry.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols);

    static IntMatrix identity(int n);
    /// Throws Errc::domain on ragged input.
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    Int& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const Int& at(int i, int j) const {
        return data_[static_cast<size_t>(i) * cols_ + j];
    }

    IntMatrix transposed() const;
    IntMatrix scaled(const Int& k) const;
    IntMatrix negated() const { return scaled(Int(-1)); }

    /// Copies block into rows row_map[r], columns col_map[c]. Used to
    /// assemble large embedding matrices from small certified pieces.
    void place(const IntMatrix& block, const std::vector<int>& row_map,
               const std::vector<int>& col_map);

    bool operator==(const IntMatrix& other) const = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

} // namespace latemb
