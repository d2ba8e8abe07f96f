#pragma once

#include <string>
#include <vector>

#include "flagdiv/flag_type.hpp"
#include "flagdiv/polynomial.hpp"
#include "flagdiv/structured_matrix.hpp"

namespace flagdiv {

struct PluckerIndex {
    std::vector<int> J;  // strictly increasing, positive

    explicit PluckerIndex(std::vector<int> indices);

    static PluckerIndex closed_open(int a, int b);  // [a, b) = {a..b-1}
    static PluckerIndex open_closed(int a, int b);  // (a, b] = {a+1..b}

    int size() const { return static_cast<int>(J.size()); }
    bool operator==(const PluckerIndex&) const = default;
    std::string str() const;
};

struct DivisorComponent {
    int case_tag = 0;          // 1..5
    int i = 0;                 // simple-root index (cases 2-5) or step (case 1)
    Polynomial equation;       // in Plucker variables, sign-normalized
    bool unit_on_cell = false; // case 1: the equation vanishes nowhere on the cell
};

// n_r x n matrix parameterizing the big Schubert cell: identity blocks
// I_{a_1},...,I_{a_r} descending from the upper right, fresh variables to
// their left, zeros below and to the right of each identity block.
StructuredMatrix cell_matrix(const FlagType& flag);

// cell_matrix extended to n x n by appending rows (I_{a_{r+1}} 0); shares
// the cell matrix's variables.  Unimodular.
StructuredMatrix augmented_matrix(const FlagType& flag);

// Determinant of the leading a x a submatrix of augmented_matrix, 1 <= a <= n-1.
Polynomial principal_minor(const FlagType& flag, int a);

// Minor of cell_matrix on the first |J| rows and the columns J; |J| must be
// a step size.
Polynomial plucker_minor(const FlagType& flag, const PluckerIndex& J);

// The anti-canonical component crossing the wall at simple root i (cases
// 2-5: i a step, i < n_1, i > n_r, or strictly between consecutive steps).
DivisorComponent component_equation(const FlagType& flag, int i);

// The component x_{(n-step, n]} for a step in n• (case 1); a unit on the cell.
DivisorComponent case1_equation(const FlagType& flag, int step);

// All (n-1) + r components, ordered by (case, i).  Equations are distinct
// after sign normalization.
std::vector<DivisorComponent> anticanonical_divisor(const FlagType& flag);

// Substitutes plucker_minor values into the case-(2..5) equation at i and
// compares with principal_minor(flag, i) up to one global sign.
bool verify_component(const FlagType& flag, int i);

// f_d + z f_{d-1} + ... + z^d f_0 for f = f_d + ... + f_0 with deg f = d;
// throws if f already contains the homogenizer z.
Polynomial homogenize(const Polynomial& f);

// Leading a x a submatrix of augmented_matrix with the first
// p = max(0, a+n_1-n) rows and last p columns removed, and the last
// q = max(0, a-n_r) rows and first q columns removed; its determinant equals
// principal_minor(flag, a) up to sign and its shape is a valid BlockSpec.
StructuredMatrix trimmed_principal_submatrix(const FlagType& flag, int a);

}  // namespace flagdiv
