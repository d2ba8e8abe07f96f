#include "flagdiv/blockdet.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "flagdiv/verify.hpp"

namespace flagdiv {

using njson = nlohmann::ordered_json;

BlockSpec::BlockSpec(std::vector<int> i_sizes, std::vector<int> j_sizes)
    : i(std::move(i_sizes)), j(std::move(j_sizes)) {
    if (i.empty() || i.size() != j.size())
        throw std::invalid_argument("block spec needs equal nonzero lengths");
    for (int x : i)
        if (x < 1) throw std::invalid_argument("block sizes must be positive");
    for (int x : j)
        if (x < 1) throw std::invalid_argument("block sizes must be positive");
    if (std::accumulate(i.begin(), i.end(), 0) != std::accumulate(j.begin(), j.end(), 0))
        throw std::invalid_argument("block row and column sizes must have equal sums");
}

int BlockSpec::N() const { return std::accumulate(i.begin(), i.end(), 0); }

std::string BlockSpec::str() const {
    auto list = [](const std::vector<int>& v) {
        std::string out = "(";
        for (size_t k = 0; k < v.size(); ++k) {
            if (k) out += ',';
            out += std::to_string(v[k]);
        }
        return out + ")";
    };
    return list(i) + ";" + list(j);
}

namespace {

std::vector<int> partial_sums(const std::vector<int>& v) {
    std::vector<int> out(v.size() + 1, 0);
    for (size_t k = 0; k < v.size(); ++k) out[k + 1] = out[k] + v[k];
    return out;
}

}  // namespace

StructuredMatrix build_generic(const BlockSpec& spec) {
    const int N = spec.N(), r = spec.r();
    const std::vector<int> Ri = partial_sums(spec.i), Cj = partial_sums(spec.j);
    StructuredMatrix m(N, N);
    for (int s = 1; s <= r; ++s) {
        for (int row = Ri[s - 1] + 1; row <= Ri[s]; ++row) {
            for (int c = 1; c <= N; ++c) {
                if (c <= N - Cj[s - 1]) {
                    m.at(row, c) = StructuredMatrix::Entry::variable(VarId::matrix(row, c));
                } else if (s >= 2 && c <= N - Cj[s - 2]) {
                    const int ro = row - Ri[s - 1];
                    const int co = c - (N - Cj[s - 1]);
                    if (ro == co) m.at(row, c) = StructuredMatrix::Entry::one();
                }
            }
        }
    }
    return m;
}

UpsilonSet upsilon(const BlockSpec& spec) {
    const std::vector<int> Ri = partial_sums(spec.i), Cj = partial_sums(spec.j);
    UpsilonSet out;
    for (int s = 1; s < spec.r(); ++s)
        if (Ri[s] == Cj[s]) out.indices.push_back(s);
    return out;
}

StructuredMatrix block_slice(const StructuredMatrix& m, const BlockSpec& spec, int t) {
    const std::vector<int> Ri = partial_sums(spec.i), Cj = partial_sums(spec.j);
    std::vector<int> ss{0};
    for (int s : upsilon(spec).indices) ss.push_back(s);
    ss.push_back(spec.r());
    if (t < 0 || t + 2 > static_cast<int>(ss.size()))
        throw std::invalid_argument("slice index out of range");
    const int N = spec.N();
    std::vector<int> rows, cols;
    for (int row = Ri[ss[t]] + 1; row <= Ri[ss[t + 1]]; ++row) rows.push_back(row);
    for (int c = N - Cj[ss[t + 1]] + 1; c <= N - Cj[ss[t]]; ++c) cols.push_back(c);
    return m.submatrix(rows, cols);
}

StructuredMatrix anti_diagonal_submatrix(const BlockSpec& spec, int t) {
    if (upsilon(spec).indices.empty())
        throw std::invalid_argument("spec has an empty Upsilon set");
    return block_slice(build_generic(spec), spec, t);
}

std::vector<Polynomial> factor_top(const BlockSpec& spec) {
    const StructuredMatrix m = build_generic(spec);
    const Polynomial g = determinant(m);
    if (g.is_zero()) throw std::invalid_argument("zero determinant");
    const UpsilonSet ups = upsilon(spec);
    if (ups.indices.empty()) return {top(g)};
    std::vector<Polynomial> out;
    for (int t = 0; t <= static_cast<int>(ups.indices.size()); ++t)
        out.push_back(top(determinant(block_slice(m, spec, t))));
    return out;
}

BlockSpec extract_block_spec(const StructuredMatrix& m) {
    const int N = m.rows();
    if (N != m.cols() || N == 0) throw std::invalid_argument("matrix is not square");
    std::vector<int> runs(N);
    for (int row = 1; row <= N; ++row) {
        int L = 0;
        while (L < N && m.at(row, L + 1).kind == StructuredMatrix::EntryKind::Var) ++L;
        runs[row - 1] = L;
    }
    std::vector<int> i_sizes, group_runs;
    for (int row = 0; row < N;) {
        int end = row;
        while (end < N && runs[end] == runs[row]) ++end;
        i_sizes.push_back(end - row);
        group_runs.push_back(runs[row]);
        row = end;
    }
    if (group_runs.front() != N)
        throw std::invalid_argument("matrix does not have the block form");
    for (size_t t = 0; t + 1 < group_runs.size(); ++t)
        if (group_runs[t] <= group_runs[t + 1])
            throw std::invalid_argument("matrix does not have the block form");
    std::vector<int> j_sizes;
    for (size_t t = 0; t + 1 < group_runs.size(); ++t)
        j_sizes.push_back(group_runs[t] - group_runs[t + 1]);
    j_sizes.push_back(group_runs.back());
    BlockSpec spec(std::move(i_sizes), std::move(j_sizes));

    // confirm the full Var/One/Zero pattern
    const StructuredMatrix pattern = build_generic(spec);
    for (int row = 1; row <= N; ++row)
        for (int c = 1; c <= N; ++c)
            if (pattern.at(row, c).kind != m.at(row, c).kind)
                throw std::invalid_argument("matrix does not have the block form");
    return spec;
}

bool zero_submatrix_screen(const StructuredMatrix& m) {
    const int N = m.rows();
    if (N != m.cols() || N > 25) throw std::invalid_argument("screen needs a square matrix, N <= 25");
    std::vector<std::uint32_t> zmask(N, 0);
    for (int row = 1; row <= N; ++row)
        for (int c = 1; c <= N; ++c)
            if (m.at(row, c).kind == StructuredMatrix::EntryKind::Zero)
                zmask[row - 1] |= 1u << (c - 1);
    for (std::uint32_t sub = 1; sub < (1u << N); ++sub) {
        std::uint32_t common = ~0u;
        for (int row = 0; row < N; ++row)
            if (sub >> row & 1) common &= zmask[row];
        const int l = std::popcount(sub);
        if (l <= N - 1 && std::popcount(common) >= N - l) return true;
    }
    return false;
}

BlockReport check_block_matrix(const BlockSpec& spec, int trials, long long seed) {
    const StructuredMatrix m = build_generic(spec);
    const Polynomial g = determinant(m);
    if (g.is_zero()) throw std::invalid_argument("zero determinant");
    BlockReport rep{spec, upsilon(spec), false, false, false, 0, seed, {}};

    const Polynomial tg = top(g);
    const std::vector<VarId> top_vars = tg.variables();
    const std::vector<int> Ri = partial_sums(spec.i), Cj = partial_sums(spec.j);
    const int N = spec.N();
    for (int s = 1; s <= spec.r(); ++s)
        for (int row = Ri[s - 1] + 1; row <= Ri[s]; ++row)
            for (int c = N - Cj[s] + 1; c <= N - Cj[s - 1]; ++c) {
                const VarId v = m.at(row, c).var;
                if (!std::binary_search(top_vars.begin(), top_vars.end(), v))
                    rep.missing_vars.push_back(v);
            }
    rep.vars_in_top = rep.missing_vars.empty();

    const bool homogeneous = g == tg;
    rep.top_structure = spec.r() == 1 ? homogeneous : !snd(g).is_zero();

    if (homogeneous) {
        rep.coprime_pass = true;
        rep.coprime_trials = 0;
    } else {
        McConfig cfg{trials, seed, 1000000};
        VerdictInfo v = coprime_mc(tg, snd(g), cfg, "blockdet/" + spec.str());
        rep.coprime_pass = v.passed();
        rep.coprime_trials = v.trials_run;
    }
    return rep;
}

std::string BlockReport::json_str() const {
    njson doc;
    doc["spec"] = {{"i", spec.i}, {"j", spec.j}};
    doc["upsilon"] = ups.indices;
    doc["verdicts"] = {
        {"corvars", vars_in_top},
        {"cortop", top_structure},
        {"lemma3", {{"pass", coprime_pass}, {"trials", coprime_trials}, {"seed", seed}}},
    };
    return doc.dump();
}

}  // namespace flagdiv
