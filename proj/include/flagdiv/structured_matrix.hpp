#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagdiv/polynomial.hpp"

namespace flagdiv {

// Grid of entries that are 0, 1, or a named indeterminate.
class StructuredMatrix {
public:
    enum class EntryKind : std::uint8_t { Zero, One, Var };

    struct Entry {
        EntryKind kind = EntryKind::Zero;
        VarId var;

        static Entry zero() { return Entry{}; }
        static Entry one() { return Entry{EntryKind::One, VarId()}; }
        static Entry variable(VarId v) { return Entry{EntryKind::Var, std::move(v)}; }
    };

    StructuredMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Entry& at(int r, int c);              // 1-based
    const Entry& at(int r, int c) const;

    Polynomial entry_poly(int r, int c) const;

    // Selection of rows/columns (1-based, in the given order); entries keep
    // their VarIds.
    StructuredMatrix submatrix(const std::vector<int>& rows,
                               const std::vector<int>& cols) const;

    std::vector<VarId> variables() const;

    std::string str() const;  // one row per line: 0, 1, or the variable name

private:
    int rows_, cols_;
    std::vector<Entry> entries_;
};

// Laplace expansion along the row or column with the most structural
// zeros/ones, memoizing minors by (row-set, column-set).
Polynomial determinant(const StructuredMatrix& m);

// Fraction-free (Bareiss) elimination with exact polynomial division;
// independent cross-check for determinant().
Polynomial determinant_elimination(const StructuredMatrix& m);

}  // namespace flagdiv
