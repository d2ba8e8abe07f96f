#pragma once

#include <string>
#include <utility>
#include <vector>

namespace flagdiv {

// Shape of a partial flag variety Fl(n1 < ... < nr; n).  Positions 1..n are
// partitioned into r+1 blocks (0,n1], (n1,n2], ..., (nr,n] with sizes
// a_1 = n1, a_t = n_t - n_{t-1}, a_{r+1} = n - nr.
class FlagType {
public:
    FlagType(int n, std::vector<int> steps);

    static FlagType parse(const std::string& text);  // "n=7;steps=3,6"

    int n() const { return n_; }
    const std::vector<int>& steps() const { return steps_; }
    int r() const { return static_cast<int>(steps_.size()); }

    std::vector<int> block_sizes() const;               // a_1..a_{r+1}
    std::vector<std::pair<int, int>> blocks() const;    // (lo, hi] position ranges
    int block_of(int pos) const;                        // 1-based block index
    bool is_step(int i) const;
    std::vector<int> delta_p() const;                   // {i in [n-1] : i not a step}

    bool operator==(const FlagType&) const = default;

    std::string str() const;  // "n=7;steps=3,6"

private:
    int n_ = 0;
    std::vector<int> steps_;
};

}  // namespace flagdiv
