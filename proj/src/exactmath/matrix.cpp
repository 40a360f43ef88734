#include "adams/matrix.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "adams/error.hpp"

namespace adams {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        require(r.size() == cols_, "ragged matrix literal");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows, std::size_t cols_if_empty) {
    std::size_t c = rows.empty() ? cols_if_empty : rows.front().size();
    IntMatrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require(rows[i].size() == c, "ragged matrix");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<BigInt> IntMatrix::column(std::size_t c) const {
    std::vector<BigInt> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
    IntMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ == 0) return b;
    if (b.rows_ == 0) return a;
    require(a.cols_ == b.cols_, "vstack: column mismatch");
    IntMatrix m(a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), m.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), m.data_.begin() + a.data_.size());
    return m;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
    require(a.rows_ == b.rows_, "hstack: row mismatch");
    IntMatrix m(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const BigInt& x) { return x == 0; });
}

bool IntMatrix::is_diagonal() const {
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

std::vector<BigInt> IntMatrix::apply(std::span<const BigInt> v) const {
    require(v.size() == cols_, "matrix-vector size mismatch");
    std::vector<BigInt> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    require(a.cols_ == b.rows_, "matrix product size mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const BigInt& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) c(i, j) += aik * b(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix sum size mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "matrix difference size mismatch");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

BigInt determinant(const IntMatrix& input) {
    require(input.rows() == input.cols(), "determinant of a non-square matrix");
    std::size_t n = input.rows();
    if (n == 0) return 1;
    IntMatrix m = input;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return 0;
            m.swap_rows(p, k);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------- sparse

SparseMatrix SparseMatrix::identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.columns_[i].emplace_back(i, BigInt(1));
    return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j)
        for (std::size_t i = 0; i < d.rows(); ++i)
            if (d(i, j) != 0) m.columns_[j].emplace_back(i, d(i, j));
    return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         std::vector<std::tuple<std::size_t, std::size_t, BigInt>> t) {
    std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) {
        return std::tie(std::get<1>(a), std::get<0>(a)) < std::tie(std::get<1>(b), std::get<0>(b));
    });
    SparseMatrix m(rows, cols);
    for (auto& [r, c, v] : t) {
        require(r < rows && c < cols, "triplet out of range");
        auto& col = m.columns_[c];
        if (!col.empty() && col.back().first == r) {
            col.back().second += v;
            if (col.back().second == 0) col.pop_back();
        } else if (v != 0) {
            col.emplace_back(r, std::move(v));
        }
    }
    return m;
}

void SparseMatrix::set_column(std::size_t c, Column col) { columns_.at(c) = std::move(col); }

BigInt SparseMatrix::at(std::size_t r, std::size_t c) const {
    const auto& col = columns_.at(c);
    auto it = std::lower_bound(col.begin(), col.end(), r, [](const Entry& e, std::size_t row) { return e.first < row; });
    if (it != col.end() && it->first == r) return it->second;
    return 0;
}

std::size_t SparseMatrix::nonzeros() const {
    std::size_t n = 0;
    for (const auto& c : columns_) n += c.size();
    return n;
}

IntMatrix SparseMatrix::to_dense() const {
    IntMatrix d(rows_, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& [i, v] : columns_[j]) d(i, j) = v;
    return d;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& [i, v] : columns_[j]) t.columns_[i].emplace_back(j, v);
    return t;
}

BigInt SparseMatrix::trace() const {
    require(rows_ == cols_, "trace of a non-square matrix");
    BigInt t = 0;
    for (std::size_t j = 0; j < cols_; ++j) t += at(j, j);
    return t;
}

std::vector<BigInt> SparseMatrix::apply(std::span<const BigInt> v) const {
    require(v.size() == cols_, "sparse matrix-vector size mismatch");
    std::vector<BigInt> out(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j] == 0) continue;
        for (const auto& [i, a] : columns_[j]) out[i] += a * v[j];
    }
    return out;
}

namespace {

// Accumulates a sparse column in a dense scratch buffer.
class ColumnAccumulator {
public:
    explicit ColumnAccumulator(std::size_t n) : values_(n), touched_flag_(n, false) {}
    void add(std::size_t i, const BigInt& v) {
        if (!touched_flag_[i]) {
            touched_flag_[i] = true;
            touched_.push_back(i);
            values_[i] = v;
        } else {
            values_[i] += v;
        }
    }
    SparseMatrix::Column take() {
        std::sort(touched_.begin(), touched_.end());
        SparseMatrix::Column col;
        col.reserve(touched_.size());
        for (auto i : touched_) {
            if (values_[i] != 0) col.emplace_back(i, values_[i]);
            touched_flag_[i] = false;
        }
        touched_.clear();
        return col;
    }

private:
    std::vector<BigInt> values_;
    std::vector<bool> touched_flag_;
    std::vector<std::size_t> touched_;
};

}  // namespace

SparseMatrix::Column SparseMatrix::apply(const Column& v) const {
    ColumnAccumulator acc(rows_);
    for (const auto& [j, x] : v) {
        for (const auto& [i, a] : columns_.at(j)) acc.add(i, a * x);
    }
    return acc.take();
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    require(a.cols_ == b.rows_, "sparse product size mismatch");
    SparseMatrix c(a.rows_, b.cols_);
    ColumnAccumulator acc(a.rows_);
    for (std::size_t j = 0; j < b.cols_; ++j) {
        for (const auto& [k, bv] : b.columns_[j])
            for (const auto& [i, av] : a.columns_[k]) acc.add(i, av * bv);
        c.columns_[j] = acc.take();
    }
    return c;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "sparse sum size mismatch");
    SparseMatrix c(a.rows_, a.cols_);
    for (std::size_t j = 0; j < a.cols_; ++j) {
        const auto& x = a.columns_[j];
        const auto& y = b.columns_[j];
        auto& out = c.columns_[j];
        std::size_t p = 0, q = 0;
        while (p < x.size() || q < y.size()) {
            if (q == y.size() || (p < x.size() && x[p].first < y[q].first)) {
                out.push_back(x[p++]);
            } else if (p == x.size() || y[q].first < x[p].first) {
                out.push_back(y[q++]);
            } else {
                BigInt s = x[p].second + y[q].second;
                if (s != 0) out.emplace_back(x[p].first, s);
                ++p;
                ++q;
            }
        }
    }
    return c;
}

SparseMatrix SparseMatrix::scaled(const BigInt& s) const {
    SparseMatrix c(rows_, cols_);
    if (s == 0) return c;
    for (std::size_t j = 0; j < cols_; ++j)
        for (const auto& [i, v] : columns_[j]) c.columns_[j].emplace_back(i, v * s);
    return c;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return a + b.scaled(-1); }

bool SparseMatrix::is_zero() const {
    return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

BigInt trace_of_product(const SparseMatrix& a, const SparseMatrix& b) {
    require(a.cols() == b.rows() && a.rows() == b.cols(), "trace_of_product size mismatch");
    BigInt t = 0;
    // trace(ab) = sum_i sum_k a(i,k) b(k,i)
    for (std::size_t i = 0; i < b.cols(); ++i)
        for (const auto& [k, bv] : b.column(i)) {
            BigInt av = a.at(i, k);
            if (av != 0) t += av * bv;
        }
    return t;
}

SparseMatrix kronecker(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ja = 0; ja < a.cols(); ++ja)
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
            SparseMatrix::Column col;
            col.reserve(a.column(ja).size() * b.column(jb).size());
            for (const auto& [ia, av] : a.column(ja))
                for (const auto& [ib, bv] : b.column(jb)) col.emplace_back(ia * b.rows() + ib, av * bv);
            c.set_column(ja * b.cols() + jb, std::move(col));
        }
    return c;
}

}  // namespace adams
