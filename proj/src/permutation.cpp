#include "flagdiv/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace flagdiv {

Permutation::Permutation(std::vector<int> window) : window_(std::move(window)) {
    const int n = static_cast<int>(window_.size());
    if (n == 0) throw std::invalid_argument("empty permutation window");
    std::vector<char> seen(n + 1, 0);
    for (int v : window_) {
        if (v < 1 || v > n || seen[v]) {
            throw std::invalid_argument("window is not a bijection of {1..n}");
        }
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> w;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("bad permutation token: " + tok);
        w.push_back(v);
    }
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(window_.size());
    for (int i = 1; i <= n(); ++i) w[window_[i - 1] - 1] = i;
    return Permutation(std::move(w));
}

Permutation Permutation::operator*(const Permutation& v) const {
    if (n() != v.n()) throw std::invalid_argument("size mismatch in permutation product");
    std::vector<int> w(window_.size());
    for (int i = 1; i <= n(); ++i) w[i - 1] = window_[v(i) - 1];
    return Permutation(std::move(w));
}

std::string Permutation::str() const {
    std::string out;
    for (size_t i = 0; i < window_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(window_[i]);
    }
    return out;
}

int length(const Permutation& w) {
    int inv = 0;
    for (int i = 1; i <= w.n(); ++i)
        for (int j = i + 1; j <= w.n(); ++j)
            if (w(i) > w(j)) ++inv;
    return inv;
}

Permutation transposition(int n, int a, int b) {
    if (a < 1 || b < 1 || a > n || b > n || a == b)
        throw std::invalid_argument("bad transposition indices");
    auto w = Permutation::identity(n).window();
    std::swap(w[a - 1], w[b - 1]);
    return Permutation(std::move(w));
}

Permutation simple_transposition(int n, int i) { return transposition(n, i, i + 1); }

}  // namespace flagdiv
