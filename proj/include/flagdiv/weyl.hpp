#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "flagdiv/flag_type.hpp"
#include "flagdiv/permutation.hpp"

namespace flagdiv {

// {w0, wP}: the order-reversing permutation of [n] and the permutation
// reversing each position block of the flag independently.
std::pair<Permutation, Permutation> longest_elements(const FlagType& flag);

// Bruhat order via the prefix-dominance criterion: u <= v iff for every k
// the sorted set {u(1..k)} is entrywise <= the sorted set {v(1..k)}.
bool bruhat_leq(const Permutation& u, const Permutation& v);

// Minimal-length representative pr_P(w) of the coset w*W_P: the window of w
// sorted increasingly within each position block.
Permutation coset_rep(const Permutation& w, const FlagType& flag);

// True when the window of w is increasing within each position block.
bool is_min_rep(const Permutation& w, const FlagType& flag);

// u <=_P v: v reachable from u by covers u' <. u'' whose coset
// representatives satisfy pr_P(u') < pr_P(u'').  Breadth-first search over
// such covers inside the Bruhat interval [u, v].
bool p_bruhat_leq(const Permutation& u, const Permutation& v, const FlagType& flag);

// {i in [n-1] : s_i <= v}, decided by the criterion v([i]) != [i] as sets.
std::set<int> gamma(const Permutation& v);

// Bruhat covers: u <. u*t for transpositions t of positions (a, b) with
// u(a) < u(b) and no intermediate value between them, and dually.
std::vector<Permutation> bruhat_covers_up(const Permutation& u);
std::vector<Permutation> bruhat_covers_down(const Permutation& u);

struct BoundaryElements {
    std::set<Permutation> atoms;     // {u : id <. u and u <=_P w0*wP}
    std::set<Permutation> coatoms;   // {v : v <. w0*wP and id <=_P v}
};
BoundaryElements boundary_p_elements(const FlagType& flag);

// All reduced words of w (letters are simple-transposition indices), capped.
std::vector<std::vector<int>> reduced_words(const Permutation& w, std::size_t cap);
std::vector<int> any_reduced_word(const Permutation& w);

// True when every suffix of every reduced word of w (up to word_cap words)
// is again a minimal coset representative.  Throws if w itself is not one.
bool check_suffixes_minimal(const Permutation& w, const FlagType& flag,
                            std::size_t word_cap = 10000);

}  // namespace flagdiv
