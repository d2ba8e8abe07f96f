#include "flagdiv/weyl.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace flagdiv {

std::pair<Permutation, Permutation> longest_elements(const FlagType& flag) {
    const int n = flag.n();
    std::vector<int> w0(n), wp(n);
    for (int i = 1; i <= n; ++i) w0[i - 1] = n + 1 - i;
    for (auto [lo, hi] : flag.blocks())
        for (int p = lo + 1; p <= hi; ++p) wp[p - 1] = lo + hi + 1 - p;
    return {Permutation(std::move(w0)), Permutation(std::move(wp))};
}

bool bruhat_leq(const Permutation& u, const Permutation& v) {
    if (u.n() != v.n()) throw std::invalid_argument("Bruhat comparison needs equal n");
    const int n = u.n();
    std::vector<int> pu, pv;
    pu.reserve(n);
    pv.reserve(n);
    for (int k = 1; k <= n; ++k) {
        pu.insert(std::upper_bound(pu.begin(), pu.end(), u(k)), u(k));
        pv.insert(std::upper_bound(pv.begin(), pv.end(), v(k)), v(k));
        for (int t = 0; t < k; ++t)
            if (pu[t] > pv[t]) return false;
    }
    return true;
}

Permutation coset_rep(const Permutation& w, const FlagType& flag) {
    if (w.n() != flag.n()) throw std::invalid_argument("size mismatch");
    std::vector<int> win = w.window();
    for (auto [lo, hi] : flag.blocks())
        std::sort(win.begin() + lo, win.begin() + hi);
    return Permutation(std::move(win));
}

bool is_min_rep(const Permutation& w, const FlagType& flag) {
    if (w.n() != flag.n()) throw std::invalid_argument("size mismatch");
    for (auto [lo, hi] : flag.blocks())
        for (int p = lo + 1; p < hi; ++p)
            if (w(p) > w(p + 1)) return false;
    return true;
}

std::vector<Permutation> bruhat_covers_up(const Permutation& u) {
    const int n = u.n();
    std::vector<Permutation> out;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            if (u(a) >= u(b)) continue;
            bool blocked = false;
            for (int m = a + 1; m < b && !blocked; ++m)
                if (u(a) < u(m) && u(m) < u(b)) blocked = true;
            if (blocked) continue;
            auto win = u.window();
            std::swap(win[a - 1], win[b - 1]);
            out.emplace_back(std::move(win));
        }
    }
    return out;
}

std::vector<Permutation> bruhat_covers_down(const Permutation& u) {
    const int n = u.n();
    std::vector<Permutation> out;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            if (u(a) <= u(b)) continue;
            bool blocked = false;
            for (int m = a + 1; m < b && !blocked; ++m)
                if (u(b) < u(m) && u(m) < u(a)) blocked = true;
            if (blocked) continue;
            auto win = u.window();
            std::swap(win[a - 1], win[b - 1]);
            out.emplace_back(std::move(win));
        }
    }
    return out;
}

bool p_bruhat_leq(const Permutation& u, const Permutation& v, const FlagType& flag) {
    if (u.n() != v.n() || u.n() != flag.n())
        throw std::invalid_argument("size mismatch");
    if (u == v) return true;
    if (!bruhat_leq(u, v)) return false;
    std::set<Permutation> seen{u};
    std::deque<Permutation> queue{u};
    while (!queue.empty()) {
        Permutation w = queue.front();
        queue.pop_front();
        Permutation pw = coset_rep(w, flag);
        for (const Permutation& c : bruhat_covers_up(w)) {
            if (coset_rep(c, flag) == pw) continue;
            if (c == v) return true;
            if (!bruhat_leq(c, v) || seen.count(c)) continue;
            seen.insert(c);
            queue.push_back(c);
        }
    }
    return false;
}

std::set<int> gamma(const Permutation& v) {
    std::set<int> out;
    int mx = 0;
    for (int i = 1; i < v.n(); ++i) {
        mx = std::max(mx, v(i));
        if (mx > i) out.insert(i);
    }
    return out;
}

BoundaryElements boundary_p_elements(const FlagType& flag) {
    const int n = flag.n();
    auto [w0, wp] = longest_elements(flag);
    Permutation w0wp = w0 * wp;
    Permutation id = Permutation::identity(n);
    BoundaryElements out;
    for (const Permutation& u : bruhat_covers_up(id))
        if (p_bruhat_leq(u, w0wp, flag)) out.atoms.insert(u);
    for (const Permutation& v : bruhat_covers_down(w0wp))
        if (p_bruhat_leq(id, v, flag)) out.coatoms.insert(v);
    return out;
}

namespace {

void reduced_words_rec(const Permutation& w, std::vector<int>& tail,
                       std::vector<std::vector<int>>& out, std::size_t cap) {
    if (out.size() >= cap) return;
    bool descent = false;
    for (int i = 1; i < w.n(); ++i) {
        if (w(i) <= w(i + 1)) continue;
        descent = true;
        auto win = w.window();
        std::swap(win[i - 1], win[i]);
        tail.push_back(i);
        reduced_words_rec(Permutation(std::move(win)), tail, out, cap);
        tail.pop_back();
        if (out.size() >= cap) return;
    }
    if (!descent) {
        // tail holds the letters last-first
        std::vector<int> word(tail.rbegin(), tail.rend());
        out.push_back(std::move(word));
    }
}

}  // namespace

std::vector<std::vector<int>> reduced_words(const Permutation& w, std::size_t cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> tail;
    reduced_words_rec(w, tail, out, cap);
    return out;
}

std::vector<int> any_reduced_word(const Permutation& w) {
    std::vector<int> tail;
    Permutation cur = w;
    for (;;) {
        int descent = 0;
        for (int i = 1; i < cur.n(); ++i)
            if (cur(i) > cur(i + 1)) { descent = i; break; }
        if (!descent) break;
        auto win = cur.window();
        std::swap(win[descent - 1], win[descent]);
        cur = Permutation(std::move(win));
        tail.push_back(descent);
    }
    return {tail.rbegin(), tail.rend()};
}

bool check_suffixes_minimal(const Permutation& w, const FlagType& flag, std::size_t word_cap) {
    if (!is_min_rep(w, flag))
        throw std::invalid_argument("not a minimal coset representative");
    const int n = w.n();
    for (const auto& word : reduced_words(w, word_cap)) {
        Permutation suffix = Permutation::identity(n);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            suffix = simple_transposition(n, *it) * suffix;
            if (!is_min_rep(suffix, flag)) return false;
        }
    }
    return true;
}

}  // namespace flagdiv
