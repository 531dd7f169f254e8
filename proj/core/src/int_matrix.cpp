#include "latemb/int_matrix.hpp"

#include "latemb/error.hpp"

namespace latemb {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0)
        throw Error(Errc::domain, "matrix dimensions must be nonnegative");
    data_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    const int r = static_cast<int>(rows.size());
    const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw Error(Errc::domain, "ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::scaled(const Int& k) const {
    IntMatrix s(rows_, cols_);
    for (size_t idx = 0; idx < data_.size(); ++idx) s.data_[idx] = data_[idx] * k;
    return s;
}

void IntMatrix::place(const IntMatrix& block, const std::vector<int>& row_map,
                      const std::vector<int>& col_map) {
    if (static_cast<int>(row_map.size()) != block.rows() ||
        static_cast<int>(col_map.size()) != block.cols())
        throw Error(Errc::dimension_mismatch, "place(): index maps do not match block");
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j)
            at(row_map[i], col_map[j]) = block.at(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw Error(Errc::dimension_mismatch, "matrix product shape mismatch");
    IntMatrix p(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) p.at(i, j) += aik * b.at(k, j);
        }
    return p;
}

} // namespace latemb
