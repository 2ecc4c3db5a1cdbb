#include "crossact/linalg.hpp"

#include "crossact/errors.hpp"

#include <algorithm>

namespace crossact {

Matrix Matrix::identity(int n) { return scalar(n, Cyclotomic(1)); }

Matrix Matrix::scalar(int n, const Cyclotomic& c) {
    Matrix m(n, n);
    if (!c.is_zero())
        for (int i = 0; i < n; ++i) m.data_[i].push_back({i, c});
    return m;
}

Cyclotomic Matrix::get(int i, int j) const {
    const Row& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& p, int c) { return p.first < c; });
    return (it != r.end() && it->first == j) ? it->second : Cyclotomic(0);
}

void Matrix::set(int i, int j, const Cyclotomic& v) {
    Row& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& p, int c) { return p.first < c; });
    if (it != r.end() && it->first == j) {
        if (v.is_zero()) r.erase(it);
        else it->second = v;
    } else if (!v.is_zero()) {
        r.insert(it, {j, v});
    }
}

void Matrix::add(int i, int j, const Cyclotomic& v) {
    if (v.is_zero()) return;
    Row& r = data_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const auto& p, int c) { return p.first < c; });
    if (it != r.end() && it->first == j) {
        it->second += v;
        if (it->second.is_zero()) r.erase(it);
    } else {
        r.insert(it, {j, v});
    }
}

std::size_t Matrix::nnz() const {
    std::size_t n = 0;
    for (const auto& r : data_) n += r.size();
    return n;
}

bool Matrix::is_zero() const { return nnz() == 0; }

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) t.data_[j].push_back({i, v});
    return t;
}

Matrix Matrix::scaled(const Cyclotomic& c) const {
    if (c.is_zero()) return Matrix(rows_, cols_);
    Matrix m = *this;
    for (auto& r : m.data_)
        for (auto& [j, v] : r) v *= c;
    return m;
}

Matrix Matrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
    std::map<int, int> colpos;
    for (std::size_t k = 0; k < cols.size(); ++k) colpos[cols[k]] = static_cast<int>(k);
    Matrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (const auto& [j, v] : data_[rows[a]]) {
            auto it = colpos.find(j);
            if (it != colpos.end()) m.data_[a].push_back({it->second, v});
        }
    for (auto& r : m.data_) std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return m;
}

std::vector<Cyclotomic> Matrix::apply(const std::vector<Cyclotomic>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw ShapeMismatch("matrix-vector size mismatch");
    std::vector<Cyclotomic> out(rows_, Cyclotomic(0));
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, a] : data_[i])
            if (!v[j].is_zero()) out[i] += a * v[j];
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                                " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
    Matrix m(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        std::map<int, Cyclotomic> acc;
        for (const auto& [k, x] : a.data_[i])
            for (const auto& [j, y] : b.data_[k]) {
                auto it = acc.find(j);
                if (it == acc.end()) acc.emplace(j, x * y);
                else it->second += x * y;
            }
        for (auto& [j, v] : acc)
            if (!v.is_zero()) m.data_[i].push_back({j, std::move(v)});
    }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("sum of different shapes");
    Matrix m = a;
    for (int i = 0; i < b.rows_; ++i)
        for (const auto& [j, v] : b.data_[i]) m.add(i, j, v);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(Cyclotomic(-1)); }

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (int i = 0; i < a.rows_; ++i) {
        const auto& x = a.data_[i];
        const auto& y = b.data_[i];
        if (x.size() != y.size()) return false;
        for (std::size_t k = 0; k < x.size(); ++k)
            if (x[k].first != y[k].first || x[k].second != y[k].second) return false;
    }
    return true;
}

std::vector<std::vector<Cyclotomic>> Matrix::dense() const {
    std::vector<std::vector<Cyclotomic>> d(rows_, std::vector<Cyclotomic>(cols_, Cyclotomic(0)));
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) d[i][j] = v;
    return d;
}

Matrix Matrix::from_dense(const std::vector<std::vector<Cyclotomic>>& d) {
    const int r = static_cast<int>(d.size());
    const int c = r ? static_cast<int>(d[0].size()) : 0;
    Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(d[i].size()) != c) throw ShapeMismatch("ragged matrix");
        for (int j = 0; j < c; ++j)
            if (!d[i][j].is_zero()) m.data_[i].push_back({j, d[i][j]});
    }
    return m;
}

namespace {

using SRow = std::map<int, Cyclotomic>;

void axpy(SRow& target, const Cyclotomic& f, const SRow& src) {
    for (const auto& [j, v] : src) {
        auto it = target.find(j);
        if (it == target.end()) {
            target.emplace(j, f * v);
        } else {
            it->second += f * v;
            if (it->second.is_zero()) target.erase(it);
        }
    }
}

// Gauss-Jordan over the first `pivot_cols` columns; returns pivot row per column or -1.
std::vector<int> eliminate(std::vector<SRow>& rows, int pivot_cols) {
    std::vector<int> pivot_of(pivot_cols, -1);
    std::vector<char> used(rows.size(), 0);
    for (int c = 0; c < pivot_cols; ++c) {
        int best = -1;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (used[r] || !rows[r].count(c)) continue;
            if (best < 0 || rows[r].size() < rows[best].size()) best = static_cast<int>(r);
        }
        if (best < 0) continue;
        used[best] = 1;
        pivot_of[c] = best;
        Cyclotomic inv = rows[best].at(c).inverse();
        for (auto& [j, v] : rows[best]) v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == best) continue;
            auto it = rows[r].find(c);
            if (it == rows[r].end()) continue;
            Cyclotomic f = -it->second;
            axpy(rows[r], f, rows[best]);
        }
    }
    return pivot_of;
}

}  // namespace

std::optional<Matrix> Matrix::inverse() const {
    if (rows_ != cols_) return std::nullopt;
    const int n = rows_;
    std::vector<SRow> rows(n);
    for (int i = 0; i < n; ++i) {
        for (const auto& [j, v] : data_[i]) rows[i].emplace(j, v);
        rows[i].emplace(n + i, Cyclotomic(1));
    }
    std::vector<int> piv = eliminate(rows, n);
    Matrix inv(n, n);
    for (int c = 0; c < n; ++c) {
        if (piv[c] < 0) return std::nullopt;
        for (const auto& [j, v] : rows[piv[c]])
            if (j >= n) inv.data_[c].push_back({j - n, v});
    }
    return inv;
}

int Matrix::rank() const {
    std::vector<SRow> rows(rows_);
    for (int i = 0; i < rows_; ++i)
        for (const auto& [j, v] : data_[i]) rows[i].emplace(j, v);
    std::vector<int> piv = eliminate(rows, cols_);
    return static_cast<int>(std::count_if(piv.begin(), piv.end(), [](int p) { return p >= 0; }));
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < b.rows(); ++k) {
            Matrix::Row r;
            for (const auto& [j, x] : a.row(i))
                for (const auto& [l, y] : b.row(k)) r.push_back({j * b.cols() + l, x * y});
            for (auto& [c, v] : r) m.set(i * b.rows() + k, c, v);
        }
    return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (const auto& [j, v] : a.row(i)) m.set(i, j, v);
    for (int i = 0; i < b.rows(); ++i)
        for (const auto& [j, v] : b.row(i)) m.set(a.rows() + i, a.cols() + j, v);
    return m;
}

void LinearSystem::add_row(std::map<int, Cyclotomic> row, Cyclotomic b) {
    for (auto it = row.begin(); it != row.end();) {
        if (it->second.is_zero()) it = row.erase(it);
        else ++it;
    }
    if (row.empty() && b.is_zero()) return;
    rows.push_back(std::move(row));
    rhs.push_back(std::move(b));
}

SolveResult solve(const LinearSystem& sys) {
    std::vector<SRow> rows(sys.rows.size());
    for (std::size_t r = 0; r < sys.rows.size(); ++r) {
        rows[r] = sys.rows[r];
        if (!sys.rhs[r].is_zero()) rows[r].emplace(sys.nvars, sys.rhs[r]);
    }
    std::vector<int> piv = eliminate(rows, sys.nvars);
    SolveResult res;
    for (const auto& r : rows)
        if (!r.empty() && r.begin()->first == sys.nvars) {
            res.status = SolveResult::inconsistent;
            return res;
        }
    for (int p : piv)
        if (p < 0) {
            res.status = SolveResult::underdetermined;
            return res;
        }
    res.solution.assign(sys.nvars, Cyclotomic(0));
    for (int v = 0; v < sys.nvars; ++v) {
        auto it = rows[piv[v]].find(sys.nvars);
        if (it != rows[piv[v]].end()) res.solution[v] = it->second;
    }
    return res;
}

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : m.dense()) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& v : r) row.push_back(to_json(v));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, int rows, int cols) {
    if (!j.is_array() || static_cast<int>(j.size()) != rows) throw ParseError("matrix has wrong number of rows");
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols) throw ParseError("matrix row has wrong length");
        for (int k = 0; k < cols; ++k) m.set(i, k, cyclotomic_from_json(j[i][k]));
    }
    return m;
}

}  // namespace crossact
