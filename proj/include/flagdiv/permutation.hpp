#pragma once

#include <string>
#include <vector>

namespace flagdiv {

// Element of the symmetric group S_n in one-line notation:
// window()[i-1] = w(i), values are 1..n.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> window);

    static Permutation identity(int n);
    static Permutation parse(const std::string& text);  // "3,1,4,2"

    int n() const { return static_cast<int>(window_.size()); }
    int operator()(int i) const { return window_[i - 1]; }
    const std::vector<int>& window() const { return window_; }

    Permutation inverse() const;
    // Composition convention: (u*v)(i) = u(v(i)).
    Permutation operator*(const Permutation& v) const;

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    std::string str() const;

private:
    std::vector<int> window_;
};

// Inversion count; equals the minimal word length in simple transpositions.
int length(const Permutation& w);

// Transposition of values at positions a and b (1-based), a != b.
Permutation transposition(int n, int a, int b);

// s_i = transposition of positions i, i+1.
Permutation simple_transposition(int n, int i);

}  // namespace flagdiv
