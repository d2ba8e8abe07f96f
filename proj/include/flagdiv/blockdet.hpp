#pragma once

#include <string>
#include <vector>

#include "flagdiv/structured_matrix.hpp"

namespace flagdiv {

// Block shape of a square matrix: r block-row sizes i and r block-column
// sizes j with equal sums N.
struct BlockSpec {
    std::vector<int> i, j;

    BlockSpec(std::vector<int> i_sizes, std::vector<int> j_sizes);

    int r() const { return static_cast<int>(i.size()); }
    int N() const;

    bool operator==(const BlockSpec&) const = default;
    std::string str() const;  // "(1,2);(2,1)"
};

struct UpsilonSet {
    // s in [r-1] with i_1+..+i_s == j_1+..+j_s, ascending
    std::vector<int> indices;
};

// N x N matrix with variable blocks A^s of size i_s x j_s on the
// anti-diagonal band, identity blocks I_{i_s, j_{s-1}} below it, variables
// above, zeros below; every variable entry is fresh and distinct.
StructuredMatrix build_generic(const BlockSpec& spec);

UpsilonSet upsilon(const BlockSpec& spec);

// Square slice of a matrix with this block shape running between
// consecutive Upsilon indices (t ranges over 0..|Upsilon|); shares the
// parent matrix's entries.
StructuredMatrix block_slice(const StructuredMatrix& m, const BlockSpec& spec, int t);

// block_slice of build_generic(spec).
StructuredMatrix anti_diagonal_submatrix(const BlockSpec& spec, int t);

// Top homogeneous components of the determinants of the slices; their
// product equals the top component of det(build_generic(spec)) up to sign.
std::vector<Polynomial> factor_top(const BlockSpec& spec);

// Recover the BlockSpec of a matrix in the block form above; throws if the
// matrix does not have that shape.
BlockSpec extract_block_spec(const StructuredMatrix& m);

// True when the matrix contains an l x (N-l) all-zero submatrix for some l
// (arbitrary row and column subsets).  Matrices with such a block are
// excluded from the block-structure checks, whose conclusions can fail there.
bool zero_submatrix_screen(const StructuredMatrix& m);

struct BlockReport {
    BlockSpec spec;
    UpsilonSet ups;
    bool vars_in_top = false;      // every anti-diagonal-block variable occurs in top(g)
    bool top_structure = false;    // r = 1: g homogeneous; r > 1: snd(g) != 0
    bool coprime_pass = false;     // top(g) and snd(g) coprime (vacuous when homogeneous)
    int coprime_trials = 0;
    long long seed = 0;
    std::vector<VarId> missing_vars;  // evidence when vars_in_top fails

    std::string json_str() const;
};

BlockReport check_block_matrix(const BlockSpec& spec, int trials, long long seed);

}  // namespace flagdiv
