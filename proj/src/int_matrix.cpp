#include "fsseq/int_matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace fsseq {

namespace {
const Int kZero = 0;
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
    std::size_t nc = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), nc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != nc) throw std::invalid_argument("ragged row lengths");
        for (std::size_t j = 0; j < nc; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVec>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != rows) throw std::invalid_argument("bad column length");
        for (std::size_t i = 0; i < rows; ++i) m.set(i, j, cols[j][i]);
    }
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVec& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
    return m;
}

const Int& IntMatrix::at(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? kZero : it->second;
}

void IntMatrix::set(std::size_t r, std::size_t c, const Int& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::set index");
    if (v == 0)
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void IntMatrix::add_to(std::size_t r, std::size_t c, const Int& v) {
    if (v == 0) return;
    if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::add_to index");
    auto [it, inserted] = entries_.try_emplace({r, c}, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) entries_.erase(it);
    }
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (const auto& [key, v] : entries_) m.set(key.second, key.first, v);
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix::operator* shape");
    IntMatrix out(rows_, rhs.cols_);
    // group rhs entries by row for the sparse product
    std::vector<std::vector<std::pair<std::size_t, const Int*>>> rhs_rows(rhs.rows_);
    for (const auto& [key, v] : rhs.entries_) rhs_rows[key.first].emplace_back(key.second, &v);
    for (const auto& [key, v] : entries_) {
        for (const auto& [j, w] : rhs_rows[key.second]) out.add_to(key.first, j, v * (*w));
    }
    return out;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix::operator+ shape");
    IntMatrix out = *this;
    for (const auto& [key, v] : rhs.entries_) out.add_to(key.first, key.second, v);
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const { return *this + (-rhs); }

IntMatrix IntMatrix::operator-() const {
    IntMatrix out(rows_, cols_);
    for (const auto& [key, v] : entries_) out.set(key.first, key.second, -v);
    return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
    return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

IntVec IntMatrix::apply(const IntVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply length");
    IntVec out(rows_, 0);
    for (const auto& [key, w] : entries_) out[key.first] += w * v[key.second];
    return out;
}

IntVec IntMatrix::column(std::size_t c) const {
    IntVec out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
    return out;
}

void IntMatrix::set_column(std::size_t c, const IntVec& v) {
    if (v.size() != rows_) throw std::invalid_argument("IntMatrix::set_column length");
    for (std::size_t r = 0; r < rows_; ++r) set(r, c, v[r]);
}

IntMatrix IntMatrix::hstack(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_) throw std::invalid_argument("IntMatrix::hstack rows");
    IntMatrix out(rows_, cols_ + rhs.cols_);
    for (const auto& [key, v] : entries_) out.set(key.first, key.second, v);
    for (const auto& [key, v] : rhs.entries_) out.set(key.first, cols_ + key.second, v);
    return out;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
    IntMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out.set(i, j, at(row_idx[i], col_idx[j]));
    return out;
}

IntMatrix IntMatrix::columns_subset(const std::vector<std::size_t>& col_idx) const {
    std::vector<std::size_t> all_rows(rows_);
    for (std::size_t i = 0; i < rows_; ++i) all_rows[i] = i;
    return submatrix(all_rows, col_idx);
}

std::vector<IntVec> IntMatrix::to_dense() const {
    std::vector<IntVec> out(rows_, IntVec(cols_, 0));
    for (const auto& [key, v] : entries_) out[key.first][key.second] = v;
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

}  // namespace fsseq
