#include "flagdiv/structured_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace flagdiv {

StructuredMatrix::StructuredMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    entries_.resize(static_cast<size_t>(rows) * cols);
}

StructuredMatrix::Entry& StructuredMatrix::at(int r, int c) {
    if (r < 1 || r > rows_ || c < 1 || c > cols_)
        throw std::out_of_range("matrix index out of range");
    return entries_[static_cast<size_t>(r - 1) * cols_ + (c - 1)];
}

const StructuredMatrix::Entry& StructuredMatrix::at(int r, int c) const {
    if (r < 1 || r > rows_ || c < 1 || c > cols_)
        throw std::out_of_range("matrix index out of range");
    return entries_[static_cast<size_t>(r - 1) * cols_ + (c - 1)];
}

Polynomial StructuredMatrix::entry_poly(int r, int c) const {
    const Entry& e = at(r, c);
    switch (e.kind) {
        case EntryKind::Zero: return Polynomial();
        case EntryKind::One: return Polynomial::constant(1);
        case EntryKind::Var: return Polynomial::variable(e.var);
    }
    throw std::logic_error("unreachable");
}

StructuredMatrix StructuredMatrix::submatrix(const std::vector<int>& rows,
                                             const std::vector<int>& cols) const {
    StructuredMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            out.at(static_cast<int>(i) + 1, static_cast<int>(j) + 1) = at(rows[i], cols[j]);
    return out;
}

std::vector<VarId> StructuredMatrix::variables() const {
    std::vector<VarId> out;
    for (const Entry& e : entries_)
        if (e.kind == EntryKind::Var) out.push_back(e.var);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string StructuredMatrix::str() const {
    std::string out;
    for (int r = 1; r <= rows_; ++r) {
        for (int c = 1; c <= cols_; ++c) {
            if (c > 1) out += ' ';
            const Entry& e = at(r, c);
            out += e.kind == EntryKind::Zero ? "0"
                 : e.kind == EntryKind::One  ? "1"
                                             : e.var.name();
        }
        out += '\n';
    }
    return out;
}

namespace {

class LaplaceDet {
public:
    explicit LaplaceDet(const StructuredMatrix& m) : m_(m) {}

    Polynomial run() {
        const int n = m_.rows();
        const std::uint32_t full = n == 32 ? ~0u : ((1u << n) - 1);
        return rec(full, full);
    }

private:
    const StructuredMatrix& m_;
    std::unordered_map<std::uint64_t, Polynomial> memo_;

    Polynomial rec(std::uint32_t rmask, std::uint32_t cmask) {
        if (rmask == 0) return Polynomial::constant(1);
        const std::uint64_t key = (static_cast<std::uint64_t>(rmask) << 32) | cmask;
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int n = m_.rows();
        // pick the row or column with the most structural entries
        int best_row = -1, best_row_count = -1;
        int best_col = -1, best_col_count = -1;
        for (int r = 1; r <= n; ++r) {
            if (!(rmask >> (r - 1) & 1)) continue;
            int count = 0;
            for (int c = 1; c <= n; ++c)
                if ((cmask >> (c - 1) & 1) &&
                    m_.at(r, c).kind != StructuredMatrix::EntryKind::Var)
                    ++count;
            if (count > best_row_count) {
                best_row_count = count;
                best_row = r;
            }
        }
        for (int c = 1; c <= n; ++c) {
            if (!(cmask >> (c - 1) & 1)) continue;
            int count = 0;
            for (int r = 1; r <= n; ++r)
                if ((rmask >> (r - 1) & 1) &&
                    m_.at(r, c).kind != StructuredMatrix::EntryKind::Var)
                    ++count;
            if (count > best_col_count) {
                best_col_count = count;
                best_col = c;
            }
        }

        Polynomial det;
        if (best_row_count >= best_col_count) {
            const int r = best_row;
            const int ri = std::popcount(rmask & ((1u << (r - 1)) - 1));
            int ci = 0;
            for (int c = 1; c <= n; ++c) {
                if (!(cmask >> (c - 1) & 1)) continue;
                const auto& e = m_.at(r, c);
                if (e.kind != StructuredMatrix::EntryKind::Zero) {
                    Polynomial minor = rec(rmask & ~(1u << (r - 1)), cmask & ~(1u << (c - 1)));
                    if (e.kind == StructuredMatrix::EntryKind::Var)
                        minor = Polynomial::variable(e.var) * minor;
                    if ((ri + ci) % 2)
                        det -= minor;
                    else
                        det += minor;
                }
                ++ci;
            }
        } else {
            const int c = best_col;
            const int ci = std::popcount(cmask & ((1u << (c - 1)) - 1));
            int ri = 0;
            for (int r = 1; r <= n; ++r) {
                if (!(rmask >> (r - 1) & 1)) continue;
                const auto& e = m_.at(r, c);
                if (e.kind != StructuredMatrix::EntryKind::Zero) {
                    Polynomial minor = rec(rmask & ~(1u << (r - 1)), cmask & ~(1u << (c - 1)));
                    if (e.kind == StructuredMatrix::EntryKind::Var)
                        minor = Polynomial::variable(e.var) * minor;
                    if ((ri + ci) % 2)
                        det -= minor;
                    else
                        det += minor;
                }
                ++ri;
            }
        }
        memo_.emplace(key, det);
        return det;
    }
};

}  // namespace

Polynomial determinant(const StructuredMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (m.rows() > 32) throw std::invalid_argument("matrix too large for determinant");
    if (m.rows() == 0) return Polynomial::constant(1);
    return LaplaceDet(m).run();
}

Polynomial determinant_elimination(const StructuredMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return Polynomial::constant(1);
    std::vector<std::vector<Polynomial>> grid(n, std::vector<Polynomial>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) grid[r][c] = m.entry_poly(r + 1, c + 1);

    int sign = 1;
    Polynomial prev = Polynomial::constant(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (grid[k][k].is_zero()) {
            int swap_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (!grid[i][k].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Polynomial();
            std::swap(grid[k], grid[swap_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                grid[i][j] =
                    divide_exact(grid[k][k] * grid[i][j] - grid[i][k] * grid[k][j], prev);
            grid[i][k] = Polynomial();
        }
        prev = grid[k][k];
    }
    Polynomial det = grid[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace flagdiv
