#pragma once

#include "crossact/scalars.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace crossact {

// Sparse row-major matrix over cyclotomic scalars. Rows hold (column, value)
// pairs sorted by column with no stored zeros.
class Matrix {
public:
    using Row = std::vector<std::pair<int, Cyclotomic>>;

    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}
    static Matrix identity(int n);
    static Matrix scalar(int n, const Cyclotomic& c);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Row& row(int i) const { return data_[i]; }
    Cyclotomic get(int i, int j) const;
    void set(int i, int j, const Cyclotomic& v);
    void add(int i, int j, const Cyclotomic& v);
    std::size_t nnz() const;
    bool is_zero() const;

    Matrix transpose() const;
    Matrix scaled(const Cyclotomic& c) const;
    Matrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    std::vector<Cyclotomic> apply(const std::vector<Cyclotomic>& v) const;
    // Inverse by exact Gauss-Jordan; nullopt if singular or not square.
    std::optional<Matrix> inverse() const;
    int rank() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<std::vector<Cyclotomic>> dense() const;
    static Matrix from_dense(const std::vector<std::vector<Cyclotomic>>& d);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Row> data_;
};

// Kronecker product: (a (x) b)[(i,k),(j,l)] = a[i,j] b[k,l], index i*b.rows()+k.
Matrix kron(const Matrix& a, const Matrix& b);
// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

// Sparse linear system: rows of (variable, coefficient) with right-hand sides.
struct LinearSystem {
    int nvars = 0;
    std::vector<std::map<int, Cyclotomic>> rows;
    std::vector<Cyclotomic> rhs;
    void add_row(std::map<int, Cyclotomic> row, Cyclotomic b);
};

struct SolveResult {
    enum Status { unique, inconsistent, underdetermined } status = unique;
    std::vector<Cyclotomic> solution;  // valid when unique
};

SolveResult solve(const LinearSystem& sys);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, int rows, int cols);

}  // namespace crossact
