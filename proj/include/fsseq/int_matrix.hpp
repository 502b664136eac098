#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace fsseq {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

/// Sparse integer matrix with arbitrary-precision entries.
/// Stored entries are always nonzero; absent entries are zero.
class IntMatrix {
public:
    using Key = std::pair<std::size_t, std::size_t>;
    using EntryMap = std::map<Key, Int>;

    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows);
    static IntMatrix from_columns(std::size_t rows, const std::vector<IntVec>& cols);
    static IntMatrix diagonal(const IntVec& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Int& at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Int& v);
    void add_to(std::size_t r, std::size_t c, const Int& v);

    bool is_zero() const { return entries_.empty(); }
    std::size_t nnz() const { return entries_.size(); }
    const EntryMap& entries() const { return entries_; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntMatrix operator+(const IntMatrix& rhs) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    IntMatrix operator-() const;
    bool operator==(const IntMatrix& rhs) const;

    IntVec apply(const IntVec& v) const;
    IntVec column(std::size_t c) const;
    void set_column(std::size_t c, const IntVec& v);

    /// Horizontal concatenation; both matrices must have the same row count.
    IntMatrix hstack(const IntMatrix& rhs) const;
    IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const;
    IntMatrix columns_subset(const std::vector<std::size_t>& col_idx) const;

    std::vector<IntVec> to_dense() const;
    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    EntryMap entries_;
};

}  // namespace fsseq
