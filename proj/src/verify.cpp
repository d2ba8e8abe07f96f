#include "flagdiv/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "flagdiv/blockdet.hpp"
#include "flagdiv/divisor.hpp"
#include "flagdiv/weyl.hpp"

namespace flagdiv {

using njson = nlohmann::ordered_json;

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "PASS";
        case Outcome::Fail: return "FAIL";
        case Outcome::Suspect: return "SUSPECT";
        case Outcome::NotApplicable: return "NA";
    }
    return "NA";
}

std::string VerdictInfo::error_bound() const {
    if (bound_num == 0) return "0";
    return std::to_string(bound_num) + "/" + std::to_string(bound_den);
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

void check_config(const McConfig& cfg, int max_degree) {
    if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (cfg.sample_bound < 1) throw std::invalid_argument("sample_bound must be >= 1");
    if (cfg.sample_bound < 2ll * max_degree)
        throw std::invalid_argument("sample_bound must be >= twice the total degree");
}

std::mt19937_64 verdict_rng(long long seed, const std::string& verdict_id) {
    return std::mt19937_64(fnv1a64(std::to_string(seed) + "|" + verdict_id));
}

long long draw(std::mt19937_64& rng, long long bound) {
    const auto span = static_cast<unsigned long long>(2 * bound + 1);
    return static_cast<long long>(rng() % span) - bound;
}

struct Line {
    std::map<VarId, Int> base, direction;
};

Line draw_line(std::mt19937_64& rng, const std::vector<VarId>& vars, long long bound) {
    Line line;
    for (const VarId& v : vars) line.base[v] = Int(static_cast<long>(draw(rng, bound)));
    for (const VarId& v : vars) line.direction[v] = Int(static_cast<long>(draw(rng, bound)));
    return line;
}

// Redraws until the restriction keeps full degree; a degree drop has
// probability <= deg/(2*bound+1) per draw.
UniPoly full_degree_restriction(const Polynomial& f, const std::vector<VarId>& vars,
                                std::mt19937_64& rng, long long bound) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        const Line line = draw_line(rng, vars, bound);
        UniPoly r = restrict_to_line(f, line.base, line.direction);
        if (r.degree() == f.degree()) return r;
    }
    throw std::runtime_error("could not sample a full-degree line restriction");
}

// Some variable v with v^2 dividing f, if one exists.
std::optional<VarId> square_variable_divisor(const Polynomial& f) {
    for (const VarId& v : f.variables()) {
        bool all = true;
        for (const auto& [mono, coeff] : f.terms())
            if (mono.exponent_of(v) < 2) {
                all = false;
                break;
            }
        if (all) return v;
    }
    return std::nullopt;
}

bool divides_exactly(const Polynomial& d, const Polynomial& f) {
    if (d.degree() > f.degree()) return false;
    try {
        divide_exact(f, d);
        return true;
    } catch (const std::invalid_argument&) {
        return false;
    }
}

njson verdict_json(const VerdictInfo& v) {
    return njson{{"outcome", outcome_name(v.outcome)},
                 {"trials", v.trials_run},
                 {"seed", v.seed},
                 {"error_bound", v.error_bound()},
                 {"witness", v.witness}};
}

}  // namespace

VerdictInfo squarefree_mc(const Polynomial& f, const McConfig& cfg, const std::string& verdict_id) {
    if (f.is_zero()) throw std::invalid_argument("squarefree_mc needs a nonzero polynomial");
    check_config(cfg, f.degree());
    VerdictInfo verdict;
    verdict.seed = cfg.seed;
    const int d = f.degree();
    if (d <= 1) {  // no repeated factor is possible
        verdict.outcome = Outcome::Pass;
        return verdict;
    }
    verdict.bound_num = d;
    verdict.bound_den = 2 * cfg.sample_bound + 1;
    std::mt19937_64 rng = verdict_rng(cfg.seed, verdict_id);
    const std::vector<VarId> vars = f.variables();
    for (int t = 0; t < cfg.trials; ++t) {
        const UniPoly r = full_degree_restriction(f, vars, rng, cfg.sample_bound);
        ++verdict.trials_run;
        if (univariate_squarefree(r)) continue;
        // candidate repeated factor: certify on fresh lines before judging
        int confirmed = 0;
        for (int k = 0; k < 3; ++k)
            if (!univariate_squarefree(full_degree_restriction(f, vars, rng, cfg.sample_bound)))
                ++confirmed;
        if (confirmed < 3) continue;  // isolated degenerate line
        if (const auto root = poly_sqrt(f)) {
            verdict.outcome = Outcome::Fail;
            verdict.witness = "perfect square of " + root->text();
            return verdict;
        }
        if (const auto v = square_variable_divisor(f)) {
            verdict.outcome = Outcome::Fail;
            verdict.witness = "divisible by " + v->name() + "^2";
            return verdict;
        }
        verdict.outcome = Outcome::Suspect;
        verdict.witness = "repeated factor on 4 independent line restrictions";
        return verdict;
    }
    verdict.outcome = Outcome::Pass;
    return verdict;
}

VerdictInfo coprime_mc(const Polynomial& f, const Polynomial& g, const McConfig& cfg,
                       const std::string& verdict_id) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("coprime_mc needs nonzero polynomials");
    check_config(cfg, std::max(f.degree(), g.degree()));
    VerdictInfo verdict;
    verdict.seed = cfg.seed;
    if (f.degree() == 0 || g.degree() == 0) {  // units are coprime to everything
        verdict.outcome = Outcome::Pass;
        return verdict;
    }
    const std::vector<VarId> fv = f.variables(), gv = g.variables();
    std::vector<VarId> shared;
    std::set_intersection(fv.begin(), fv.end(), gv.begin(), gv.end(), std::back_inserter(shared));
    if (shared.empty()) {  // disjoint supports: no nonconstant common factor
        verdict.outcome = Outcome::Pass;
        return verdict;
    }
    verdict.bound_num = f.degree() + g.degree();
    verdict.bound_den = 2 * cfg.sample_bound + 1;
    std::mt19937_64 rng = verdict_rng(cfg.seed, verdict_id);
    std::vector<VarId> all;
    std::set_union(fv.begin(), fv.end(), gv.begin(), gv.end(), std::back_inserter(all));
    for (int t = 0; t < cfg.trials; ++t) {
        UniPoly rf, rg;
        bool drawn = false;
        for (int attempt = 0; attempt < 100 && !drawn; ++attempt) {
            const Line line = draw_line(rng, all, cfg.sample_bound);
            rf = restrict_to_line(f, line.base, line.direction);
            rg = restrict_to_line(g, line.base, line.direction);
            drawn = rf.degree() == f.degree() && rg.degree() == g.degree();
        }
        if (!drawn) throw std::runtime_error("could not sample a full-degree line restriction");
        ++verdict.trials_run;
        if (UniPoly::gcd(rf, rg).degree() == 0) {
            verdict.outcome = Outcome::Pass;
            return verdict;
        }
    }
    // every trial shared a nonconstant factor: look for a structural witness
    if (unit_equal(f, g)) {
        verdict.outcome = Outcome::Fail;
        verdict.witness = "f = +-g";
        return verdict;
    }
    for (const VarId& v : shared) {
        const Polynomial var = Polynomial::variable(v);
        if (divides_exactly(var, f) && divides_exactly(var, g)) {
            verdict.outcome = Outcome::Fail;
            verdict.witness = "common factor " + v.name();
            return verdict;
        }
    }
    if (divides_exactly(f, g)) {
        verdict.outcome = Outcome::Fail;
        verdict.witness = "f divides g";
        return verdict;
    }
    if (divides_exactly(g, f)) {
        verdict.outcome = Outcome::Fail;
        verdict.witness = "g divides f";
        return verdict;
    }
    verdict.outcome = Outcome::Suspect;
    verdict.witness = "nonconstant gcd on " + std::to_string(verdict.trials_run) +
                      " independent line restrictions";
    return verdict;
}

namespace {

VerdictInfo exact_verdict(Outcome o, long long seed, std::string witness = "") {
    VerdictInfo v;
    v.outcome = o;
    v.seed = seed;
    v.witness = std::move(witness);
    return v;
}

bool factor_structure_matches(const FlagType& flag, int a, const Polynomial& f,
                              const Polynomial& top_f) {
    const StructuredMatrix trimmed = trimmed_principal_submatrix(flag, a);
    const BlockSpec spec = extract_block_spec(trimmed);
    if (!unit_equal(determinant(trimmed), f)) return false;
    Polynomial product = Polynomial::constant(1);
    const UpsilonSet ups = upsilon(spec);
    const int slices = static_cast<int>(ups.indices.size()) + 1;
    for (int t = 0; t < slices; ++t)
        product = product * top(determinant(block_slice(trimmed, spec, t)));
    return unit_equal(product, top_f);
}

}  // namespace

IrrReport check_components(const FlagType& flag, const McConfig& cfg) {
    IrrReport rep(flag, cfg);
    const int n = flag.n();
    std::vector<Polynomial> tops(n);
    for (int a = 1; a <= n - 1; ++a) {
        IrrIndexReport idx;
        idx.a = a;
        const Polynomial f = principal_minor(flag, a);
        tops[a] = top(f);
        idx.homogeneous = f == tops[a];
        const std::string prefix = flag.str() + "/a" + std::to_string(a);
        idx.squarefree_top = squarefree_mc(tops[a], cfg, prefix + "/squarefree");
        if (!idx.homogeneous) {
            const Polynomial s = snd(f);
            if (s.is_zero()) {
                idx.snd_nonzero = exact_verdict(Outcome::Fail, cfg.seed, "snd = 0");
            } else {
                idx.snd_nonzero = exact_verdict(Outcome::Pass, cfg.seed);
                idx.top_snd_coprime = coprime_mc(tops[a], s, cfg, prefix + "/top_snd");
            }
        }
        idx.factor_match = factor_structure_matches(flag, a, f, tops[a]);
        rep.per_index.push_back(idx);
    }
    for (int a = 1; a <= n - 1; ++a)
        for (int b = a + 1; b <= n - 1; ++b)
            rep.pairwise[{a, b}] = coprime_mc(
                tops[a], tops[b], cfg,
                flag.str() + "/pair" + std::to_string(a) + "," + std::to_string(b));
    return rep;
}

bool IrrReport::all_pass() const {
    const auto ok = [](const VerdictInfo& v) {
        return v.outcome == Outcome::Pass || v.outcome == Outcome::NotApplicable;
    };
    for (const IrrIndexReport& idx : per_index) {
        if (!idx.squarefree_top.passed()) return false;
        if (!ok(idx.snd_nonzero) || !ok(idx.top_snd_coprime)) return false;
        if (!idx.factor_match) return false;
    }
    for (const auto& [key, v] : pairwise)
        if (!v.passed()) return false;
    return true;
}

std::string IrrReport::json_str() const {
    njson doc;
    doc["flag"] = {{"n", flag.n()}, {"steps", flag.steps()}};
    doc["config"] = {{"trials", cfg.trials}, {"seed", cfg.seed}, {"sample_bound", cfg.sample_bound}};
    doc["per_index"] = njson::array();
    for (const IrrIndexReport& idx : per_index) {
        doc["per_index"].push_back({{"a", idx.a},
                                    {"homogeneous", idx.homogeneous},
                                    {"squarefree_top", verdict_json(idx.squarefree_top)},
                                    {"snd_nonzero", verdict_json(idx.snd_nonzero)},
                                    {"top_snd_coprime", verdict_json(idx.top_snd_coprime)},
                                    {"factor_match", idx.factor_match}});
    }
    doc["pairwise"] = njson::array();
    for (const auto& [key, v] : pairwise)
        doc["pairwise"].push_back({{"a", key.first}, {"b", key.second}, {"coprime_tops", verdict_json(v)}});
    doc["all_pass"] = all_pass();
    return doc.dump();
}

std::string IrrReport::table() const {
    std::ostringstream out;
    out << "check_components flag=" << flag.str() << " trials=" << cfg.trials << " seed=" << cfg.seed
        << " sample_bound=" << cfg.sample_bound << "\n";
    for (const IrrIndexReport& idx : per_index) {
        out << "  a=" << idx.a << " homogeneous=" << (idx.homogeneous ? "yes" : "no")
            << " squarefree_top=" << outcome_name(idx.squarefree_top.outcome)
            << " snd_nonzero=" << outcome_name(idx.snd_nonzero.outcome)
            << " top_snd_coprime=" << outcome_name(idx.top_snd_coprime.outcome)
            << " factor_match=" << (idx.factor_match ? "PASS" : "FAIL") << "\n";
    }
    for (const auto& [key, v] : pairwise)
        out << "  tops(" << key.first << "," << key.second
            << ") coprime=" << outcome_name(v.outcome) << "\n";
    out << "  all_pass=" << (all_pass() ? "yes" : "no") << "\n";
    return out.str();
}

int pi1_prediction(const FlagType& flag) {
    const auto [w0, wp] = longest_elements(flag);
    return static_cast<int>(gamma(w0 * wp).size());
}

std::vector<Pi1Row> pi1_table(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<int> window(n);
    for (int i = 0; i < n; ++i) window[i] = i + 1;
    std::vector<Pi1Row> rows;
    do {
        Pi1Row row;
        row.v = Permutation(window);
        row.gamma_set = gamma(row.v);
        row.rank = static_cast<int>(row.gamma_set.size());
        rows.push_back(std::move(row));
    } while (std::next_permutation(window.begin(), window.end()));
    std::stable_sort(rows.begin(), rows.end(), [](const Pi1Row& a, const Pi1Row& b) {
        const int la = length(a.v), lb = length(b.v);
        if (la != lb) return la < lb;
        return a.v.window() < b.v.window();
    });
    return rows;
}

}  // namespace flagdiv
