#include "flagdiv/divisor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace flagdiv {

PluckerIndex::PluckerIndex(std::vector<int> indices) : J(std::move(indices)) {
    if (J.empty()) throw std::invalid_argument("empty Plucker index");
    for (size_t k = 0; k < J.size(); ++k) {
        if (J[k] < 1 || (k > 0 && J[k] <= J[k - 1]))
            throw std::invalid_argument("Plucker index must be strictly increasing and positive");
    }
}

PluckerIndex PluckerIndex::closed_open(int a, int b) {
    std::vector<int> v;
    for (int x = a; x < b; ++x) v.push_back(x);
    return PluckerIndex(std::move(v));
}

PluckerIndex PluckerIndex::open_closed(int a, int b) {
    std::vector<int> v;
    for (int x = a + 1; x <= b; ++x) v.push_back(x);
    return PluckerIndex(std::move(v));
}

std::string PluckerIndex::str() const {
    std::string out = "{";
    for (size_t k = 0; k < J.size(); ++k) {
        if (k) out += ',';
        out += std::to_string(J[k]);
    }
    return out + "}";
}

StructuredMatrix cell_matrix(const FlagType& flag) {
    const int n = flag.n(), r = flag.r();
    const std::vector<int>& steps = flag.steps();
    StructuredMatrix m(steps[r - 1], n);
    std::vector<int> pts{0};
    pts.insert(pts.end(), steps.begin(), steps.end());
    for (int s = 1; s <= r; ++s) {
        for (int row = pts[s - 1] + 1; row <= pts[s]; ++row) {
            for (int c = 1; c <= n; ++c) {
                if (c > n - pts[s - 1]) continue;  // zero
                if (c > n - pts[s]) {
                    if (c - (n - pts[s]) == row - pts[s - 1])
                        m.at(row, c) = StructuredMatrix::Entry::one();
                } else {
                    m.at(row, c) = StructuredMatrix::Entry::variable(VarId::matrix(row, c));
                }
            }
        }
    }
    return m;
}

StructuredMatrix augmented_matrix(const FlagType& flag) {
    const int n = flag.n();
    const StructuredMatrix cell = cell_matrix(flag);
    StructuredMatrix m(n, n);
    for (int row = 1; row <= cell.rows(); ++row)
        for (int c = 1; c <= n; ++c) m.at(row, c) = cell.at(row, c);
    for (int k = 1; k <= n - cell.rows(); ++k)
        m.at(cell.rows() + k, k) = StructuredMatrix::Entry::one();
    return m;
}

Polynomial principal_minor(const FlagType& flag, int a) {
    if (a < 1 || a >= flag.n()) throw std::invalid_argument("principal minor index out of range");
    std::vector<int> sel(a);
    std::iota(sel.begin(), sel.end(), 1);
    return determinant(augmented_matrix(flag).submatrix(sel, sel));
}

Polynomial plucker_minor(const FlagType& flag, const PluckerIndex& J) {
    const std::vector<int>& steps = flag.steps();
    if (!std::binary_search(steps.begin(), steps.end(), J.size()))
        throw std::invalid_argument("Plucker index size is not a step");
    if (J.J.back() > flag.n()) throw std::invalid_argument("Plucker index exceeds n");
    std::vector<int> rows(J.size());
    std::iota(rows.begin(), rows.end(), 1);
    return determinant(cell_matrix(flag).submatrix(rows, J.J));
}

namespace {

Polynomial plucker_var(const FlagType& flag, std::vector<int> J) {
    return Polynomial::variable(VarId::plucker(std::move(J), flag.n()));
}

}  // namespace

DivisorComponent component_equation(const FlagType& flag, int i) {
    const int n = flag.n();
    if (i < 1 || i >= n) throw std::invalid_argument("simple-root index out of range");
    const std::vector<int>& steps = flag.steps();
    DivisorComponent comp;
    comp.i = i;
    if (flag.is_step(i)) {
        comp.case_tag = 2;
        comp.equation = plucker_var(flag, PluckerIndex::closed_open(1, i + 1).J);
    } else if (i < steps.front()) {
        comp.case_tag = 3;
        std::vector<int> J = PluckerIndex::closed_open(1, i + 1).J;
        for (int x = n - steps.front() + i + 1; x <= n; ++x) J.push_back(x);
        comp.equation = plucker_var(flag, std::move(J));
    } else if (i > steps.back()) {
        comp.case_tag = 4;
        comp.equation = plucker_var(flag, PluckerIndex::open_closed(i - steps.back(), i).J);
    } else {
        comp.case_tag = 5;
        const int nj = *std::prev(std::upper_bound(steps.begin(), steps.end(), i));
        const int nj1 = *std::upper_bound(steps.begin(), steps.end(), i);
        const int k = i - nj;
        const int l = std::min(i, n - nj1 + k);
        Polynomial sum;
        std::vector<int> J(k);
        std::iota(J.begin(), J.end(), 1);  // first k-subset of [l]
        while (true) {
            std::vector<int> left;
            for (int x = 1; x <= i; ++x)
                if (!std::binary_search(J.begin(), J.end(), x)) left.push_back(x);
            std::vector<int> right = J;
            for (int x = n - nj1 + k + 1; x <= n; ++x) right.push_back(x);
            const int sign = std::accumulate(J.begin(), J.end(), 0) % 2 ? -1 : 1;
            sum += Polynomial::constant(sign) * plucker_var(flag, std::move(left)) *
                   plucker_var(flag, std::move(right));
            int p = k - 1;
            while (p >= 0 && J[p] == l - (k - 1 - p)) --p;
            if (p < 0) break;
            ++J[p];
            for (int q = p + 1; q < k; ++q) J[q] = J[q - 1] + 1;
        }
        comp.equation = sum;
    }
    comp.equation = comp.equation.sign_normalized();
    return comp;
}

DivisorComponent case1_equation(const FlagType& flag, int step) {
    if (!flag.is_step(step)) throw std::invalid_argument("not a step of the flag type");
    DivisorComponent comp;
    comp.case_tag = 1;
    comp.i = step;
    comp.unit_on_cell = true;
    comp.equation = plucker_var(flag, PluckerIndex::open_closed(flag.n() - step, flag.n()).J);
    return comp;
}

std::vector<DivisorComponent> anticanonical_divisor(const FlagType& flag) {
    std::vector<DivisorComponent> out;
    for (int step : flag.steps()) out.push_back(case1_equation(flag, step));
    for (int i = 1; i < flag.n(); ++i) out.push_back(component_equation(flag, i));
    std::stable_sort(out.begin(), out.end(), [](const DivisorComponent& a, const DivisorComponent& b) {
        return std::pair(a.case_tag, a.i) < std::pair(b.case_tag, b.i);
    });
    return out;
}

bool verify_component(const FlagType& flag, int i) {
    const DivisorComponent comp = component_equation(flag, i);
    std::map<VarId, Polynomial> assignment;
    for (const VarId& v : comp.equation.variables())
        assignment[v] = plucker_minor(flag, PluckerIndex(v.index_set));
    const Polynomial substituted = substitute(comp.equation, assignment);
    return unit_equal(substituted, principal_minor(flag, i));
}

Polynomial homogenize(const Polynomial& f) {
    const VarId z = VarId::homogenizer();
    for (const VarId& v : f.variables())
        if (v == z) throw std::invalid_argument("polynomial already contains the homogenizer");
    const int d = f.degree();
    Polynomial out;
    for (int k = 0; k <= d; ++k) {
        const Polynomial comp = homogeneous_component(f, k);
        if (comp.is_zero()) continue;
        if (k == d)
            out += comp;
        else
            out += comp * Polynomial::term(Monomial::variable(z, d - k), 1);
    }
    return out;
}

StructuredMatrix trimmed_principal_submatrix(const FlagType& flag, int a) {
    if (a < 1 || a >= flag.n()) throw std::invalid_argument("principal minor index out of range");
    const int n = flag.n();
    const int p = std::max(0, a + flag.steps().front() - n);
    const int q = std::max(0, a - flag.steps().back());
    std::vector<int> rows, cols;
    for (int x = p + 1; x <= a - q; ++x) rows.push_back(x);
    for (int x = q + 1; x <= a - p; ++x) cols.push_back(x);
    return augmented_matrix(flag).submatrix(rows, cols);
}

}  // namespace flagdiv
