#ifndef MIXRES_MATRIX_HPP
#define MIXRES_MATRIX_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "mixres/rational.hpp"

namespace mixres {

/* Sparse matrix over Q, row-major. Absent entries are zero; stored entries
   are kept nonzero and in lowest terms (mpq invariant). */
class RatMatrix {
public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    }

    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, Rat(1));
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void set(int r, int c, const Rat& v) {
        check(r, c);
        if (v == 0)
            data_[r].erase(c);
        else
            data_[r][c] = v;
    }

    void add_to(int r, int c, const Rat& v) {
        check(r, c);
        auto it = data_[r].find(c);
        if (it == data_[r].end()) {
            if (v != 0) data_[r][c] = v;
        } else {
            it->second += v;
            if (it->second == 0) data_[r].erase(it);
        }
    }

    Rat at(int r, int c) const {
        check(r, c);
        auto it = data_[r].find(c);
        return it == data_[r].end() ? Rat(0) : it->second;
    }

    const std::map<int, Rat>& row(int r) const { return data_.at(r); }

    bool is_zero() const {
        for (const auto& row : data_)
            if (!row.empty()) return false;
        return true;
    }

    int nonzero_count() const {
        int n = 0;
        for (const auto& row : data_) n += static_cast<int>(row.size());
        return n;
    }

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    RatMatrix operator+(const RatMatrix& o) const {
        require_shape(o, "add");
        RatMatrix out = *this;
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : o.data_[r]) out.add_to(r, c, v);
        return out;
    }

    RatMatrix operator-(const RatMatrix& o) const {
        require_shape(o, "subtract");
        RatMatrix out = *this;
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : o.data_[r]) out.add_to(r, c, -v);
        return out;
    }

    RatMatrix operator*(const RatMatrix& o) const {
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix product shape mismatch: " + shape_str() +
                                        " * " + o.shape_str());
        RatMatrix out(rows_, o.cols_);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [k, v] : data_[r])
                for (const auto& [c, w] : o.data_[k]) out.add_to(r, c, v * w);
        return out;
    }

    RatMatrix scaled(const Rat& s) const {
        RatMatrix out(rows_, cols_);
        if (s == 0) return out;
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) out.set(r, c, v * s);
        return out;
    }

    RatMatrix transposed() const {
        RatMatrix out(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) out.set(c, r, v);
        return out;
    }

    std::vector<Rat> apply(const std::vector<Rat>& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw std::invalid_argument("matrix apply: vector length mismatch");
        std::vector<Rat> y(rows_, Rat(0));
        for (int r = 0; r < rows_; ++r)
            for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
        return y;
    }

    std::vector<Rat> column(int c) const {
        std::vector<Rat> v(rows_, Rat(0));
        for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

    void set_column(int c, const std::vector<Rat>& v) {
        if (static_cast<int>(v.size()) != rows_)
            throw std::invalid_argument("set_column: vector length mismatch");
        for (int r = 0; r < rows_; ++r) set(r, c, v[r]);
    }

    /* Columns of `cols` in the given order. */
    RatMatrix select_columns(const std::vector<int>& cols) const {
        RatMatrix out(rows_, static_cast<int>(cols.size()));
        for (int j = 0; j < out.cols(); ++j) out.set_column(j, column(cols[j]));
        return out;
    }

    /* Tensor product with row-major slot order: entry ((r1,r2),(c1,c2))
       lands at (r1*b.rows()+r2, c1*b.cols()+c2). */
    static RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
        RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
        for (int r1 = 0; r1 < a.rows(); ++r1)
            for (const auto& [c1, v] : a.data_[r1])
                for (int r2 = 0; r2 < b.rows(); ++r2)
                    for (const auto& [c2, w] : b.data_[r2])
                        out.set(r1 * b.rows() + r2, c1 * b.cols() + c2, v * w);
        return out;
    }

    /* [A | B] side by side. */
    static RatMatrix hstack(const RatMatrix& a, const RatMatrix& b) {
        if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
        RatMatrix out(a.rows(), a.cols() + b.cols());
        for (int r = 0; r < a.rows(); ++r) {
            for (const auto& [c, v] : a.data_[r]) out.set(r, c, v);
            for (const auto& [c, v] : b.data_[r]) out.set(r, a.cols() + c, v);
        }
        return out;
    }

    static RatMatrix vstack(const RatMatrix& a, const RatMatrix& b) {
        if (a.cols() != b.cols()) throw std::invalid_argument("vstack col mismatch");
        RatMatrix out(a.rows() + b.rows(), a.cols());
        for (int r = 0; r < a.rows(); ++r)
            for (const auto& [c, v] : a.data_[r]) out.set(r, c, v);
        for (int r = 0; r < b.rows(); ++r)
            for (const auto& [c, v] : b.data_[r]) out.set(a.rows() + r, c, v);
        return out;
    }

    std::string shape_str() const {
        return std::to_string(rows_) + "x" + std::to_string(cols_);
    }

private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("matrix index (" + std::to_string(r) + "," +
                                    std::to_string(c) + ") outside " + shape_str());
    }
    void require_shape(const RatMatrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("matrix ") + what + " shape mismatch: " +
                                        shape_str() + " vs " + o.shape_str());
    }

    int rows_, cols_;
    std::vector<std::map<int, Rat>> data_;
};

}  // namespace mixres

#endif
