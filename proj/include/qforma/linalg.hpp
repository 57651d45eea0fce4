#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qforma {

/// Dense matrix over an exact field F.  F must be default-constructible to
/// its zero, constructible from int, and support +, -, *, /, ==.
template <class F>
class Mat {
public:
    Mat() : d_rows(0), d_cols(0) {}
    Mat(std::size_t rows, std::size_t cols)
        : d_rows(rows), d_cols(cols), d_a(rows * cols, F()) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return d_rows; }
    std::size_t cols() const { return d_cols; }

    F& operator()(std::size_t i, std::size_t j) { return d_a[i * d_cols + j]; }
    const F& operator()(std::size_t i, std::size_t j) const { return d_a[i * d_cols + j]; }

    bool operator==(const Mat& o) const {
        return d_rows == o.d_rows && d_cols == o.d_cols && d_a == o.d_a;
    }

    Mat operator+(const Mat& o) const {
        require_same_shape(o);
        Mat r(d_rows, d_cols);
        for (std::size_t k = 0; k < d_a.size(); ++k) r.d_a[k] = d_a[k] + o.d_a[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        require_same_shape(o);
        Mat r(d_rows, d_cols);
        for (std::size_t k = 0; k < d_a.size(); ++k) r.d_a[k] = d_a[k] - o.d_a[k];
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (d_cols != o.d_rows) throw std::invalid_argument("matrix shape mismatch in product");
        Mat r(d_rows, o.d_cols);
        for (std::size_t i = 0; i < d_rows; ++i)
            for (std::size_t k = 0; k < d_cols; ++k) {
                const F& a = (*this)(i, k);
                if (a == F()) continue;
                for (std::size_t j = 0; j < o.d_cols; ++j) {
                    const F& b = o(k, j);
                    if (b == F()) continue;
                    r(i, j) = r(i, j) + a * b;
                }
            }
        return r;
    }
    Mat operator*(const F& c) const {
        Mat r(d_rows, d_cols);
        for (std::size_t k = 0; k < d_a.size(); ++k) r.d_a[k] = d_a[k] * c;
        return r;
    }

    std::vector<F> operator*(const std::vector<F>& v) const {
        if (d_cols != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
        std::vector<F> r(d_rows, F());
        for (std::size_t i = 0; i < d_rows; ++i)
            for (std::size_t j = 0; j < d_cols; ++j)
                if (!(d_a[i * d_cols + j] == F())) r[i] = r[i] + d_a[i * d_cols + j] * v[j];
        return r;
    }

    Mat transposed() const {
        Mat r(d_cols, d_rows);
        for (std::size_t i = 0; i < d_rows; ++i)
            for (std::size_t j = 0; j < d_cols; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : d_a)
            if (!(x == F())) return false;
        return true;
    }

    F trace() const {
        F t{};
        for (std::size_t i = 0; i < d_rows && i < d_cols; ++i) t = t + (*this)(i, i);
        return t;
    }

private:
    void require_same_shape(const Mat& o) const {
        if (d_rows != o.d_rows || d_cols != o.d_cols)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t d_rows, d_cols;
    std::vector<F> d_a;
};

template <class F>
Mat<F> operator*(const F& c, const Mat<F>& m) {
    return m * c;
}

template <class F>
Mat<F> commutator(const Mat<F>& a, const Mat<F>& b) {
    return a * b - b * a;
}

namespace detail {
/// Row-reduce in place; returns pivot columns.  Rows are swapped and scaled.
template <class F>
std::vector<std::size_t> row_reduce(Mat<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pr = row;
        while (pr < m.rows() && m(pr, col) == F()) ++pr;
        if (pr == m.rows()) continue;
        if (pr != row)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
        F inv = F(1) / m(row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == F()) continue;
            F f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}
} // namespace detail

template <class F>
std::size_t rank(Mat<F> m) {
    return detail::row_reduce(m).size();
}

/// Solve A x = b where A has full column rank; throws if inconsistent.
template <class F>
std::vector<F> solve_full_col_rank(const Mat<F>& a, const std::vector<F>& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve: shape mismatch");
    Mat<F> aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto pivots = detail::row_reduce(aug);
    std::vector<F> x(a.cols(), F());
    std::size_t r = 0;
    for (std::size_t col : pivots) {
        if (col == a.cols()) throw std::domain_error("solve: inconsistent system");
        x[col] = aug(r, a.cols());
        ++r;
    }
    if (pivots.size() != a.cols()) throw std::domain_error("solve: matrix does not have full column rank");
    return x;
}

template <class F>
Mat<F> inverse(const Mat<F>& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    std::size_t n = a.rows();
    Mat<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = F(1);
    }
    auto pivots = detail::row_reduce(aug);
    if (pivots.size() != n || pivots.back() != n - 1)
        throw std::domain_error("inverse: singular matrix");
    Mat<F> r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

/// Basis of the right null space of a (as rows of the returned matrix).
template <class F>
Mat<F> kernel_basis(Mat<F> a) {
    std::size_t n = a.cols();
    auto pivots = detail::row_reduce(a);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat<F> k(free_cols.size(), n);
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t fc = free_cols[fi];
        k(fi, fc) = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            k(fi, pivots[r]) = F() - a(r, fc);
    }
    return k;
}

/// Incrementally maintained reduced row span, used for exact closure loops.
template <class F>
class SpanBuilder {
public:
    explicit SpanBuilder(std::size_t width) : d_width(width) {}

    /// Returns true if v enlarged the span.
    bool add(std::vector<F> v) {
        reduce(v);
        std::size_t lead = leading_index(v);
        if (lead == d_width) return false;
        F inv = F(1) / v[lead];
        for (auto& x : v) x = x * inv;
        for (std::size_t r = 0; r < d_rows.size(); ++r) {
            F& c = d_rows[r][lead];
            if (!(c == F())) {
                F f = c;
                for (std::size_t j = 0; j < d_width; ++j)
                    d_rows[r][j] = d_rows[r][j] - f * v[j];
            }
        }
        d_rows.push_back(std::move(v));
        d_leads.push_back(lead);
        return true;
    }

    bool contains(std::vector<F> v) const {
        reduce(v);
        return leading_index(v) == d_width;
    }

    std::size_t rank() const { return d_rows.size(); }
    const std::vector<std::vector<F>>& rows() const { return d_rows; }

private:
    void reduce(std::vector<F>& v) const {
        if (v.size() != d_width) throw std::invalid_argument("span: width mismatch");
        for (std::size_t r = 0; r < d_rows.size(); ++r) {
            F& c = v[d_leads[r]];
            if (c == F()) continue;
            F f = c;
            for (std::size_t j = 0; j < d_width; ++j) v[j] = v[j] - f * d_rows[r][j];
        }
    }
    std::size_t leading_index(const std::vector<F>& v) const {
        for (std::size_t j = 0; j < d_width; ++j)
            if (!(v[j] == F())) return j;
        return d_width;
    }

    std::size_t d_width;
    std::vector<std::vector<F>> d_rows;
    std::vector<std::size_t> d_leads;
};

} // namespace qforma
