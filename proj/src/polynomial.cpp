#include "flagdiv/polynomial.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace flagdiv {

using njson = nlohmann::ordered_json;

// ---------------------------------------------------------------- VarId

VarId VarId::matrix(int row, int col) {
    if (row < 1 || col < 1) throw std::invalid_argument("matrix entry indices are 1-based");
    VarId v;
    v.kind = Kind::Matrix;
    v.row = row;
    v.col = col;
    return v;
}

VarId VarId::homogenizer() {
    VarId v;
    v.kind = Kind::Homogenizer;
    return v;
}

VarId VarId::plucker(std::vector<int> J, int ambient_n) {
    if (J.empty()) throw std::invalid_argument("empty Plucker index set");
    int prev = 0;
    for (int x : J) {
        if (x <= prev) throw std::invalid_argument("Plucker index set must be strictly increasing");
        prev = x;
    }
    if (ambient_n < prev) throw std::invalid_argument("Plucker index exceeds ambient n");
    VarId v;
    v.kind = Kind::Plucker;
    v.index_set = std::move(J);
    v.ambient = ambient_n;
    return v;
}

std::string VarId::name() const {
    switch (kind) {
        case Kind::Matrix:
            return "a{" + std::to_string(row) + "," + std::to_string(col) + "}";
        case Kind::Homogenizer:
            return "z";
        case Kind::Plucker: {
            std::string s = "x_{";
            for (size_t i = 0; i < index_set.size(); ++i) {
                if (i && ambient > 9) s += ',';
                s += std::to_string(index_set[i]);
            }
            return s + "}";
        }
    }
    throw std::logic_error("unreachable");
}

VarId VarId::parse(const std::string& text) {
    if (text == "z") return homogenizer();
    if (text.rfind("a{", 0) == 0 && text.back() == '}') {
        auto comma = text.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad variable: " + text);
        int row = std::stoi(text.substr(2, comma - 2));
        int col = std::stoi(text.substr(comma + 1, text.size() - comma - 2));
        return matrix(row, col);
    }
    if (text.rfind("x_{", 0) == 0 && text.back() == '}') {
        std::string body = text.substr(3, text.size() - 4);
        std::vector<int> J;
        int ambient = 9;
        if (body.find(',') != std::string::npos) {
            size_t pos = 0;
            while (pos < body.size()) {
                size_t next = body.find(',', pos);
                if (next == std::string::npos) next = body.size();
                J.push_back(std::stoi(body.substr(pos, next - pos)));
                pos = next + 1;
            }
            ambient = std::max(10, J.empty() ? 10 : *std::max_element(J.begin(), J.end()));
        } else {
            for (char c : body) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw std::invalid_argument("bad variable: " + text);
                J.push_back(c - '0');
            }
        }
        return plucker(std::move(J), ambient);
    }
    throw std::invalid_argument("bad variable: " + text);
}

bool VarId::operator==(const VarId& o) const {
    if (kind != o.kind) return false;
    switch (kind) {
        case Kind::Matrix: return row == o.row && col == o.col;
        case Kind::Homogenizer: return true;
        case Kind::Plucker: return index_set == o.index_set;
    }
    return false;
}

bool VarId::operator<(const VarId& o) const {
    if (kind != o.kind) return kind < o.kind;
    switch (kind) {
        case Kind::Matrix: return row != o.row ? row < o.row : col < o.col;
        case Kind::Homogenizer: return false;
        case Kind::Plucker:
            return std::lexicographical_compare(index_set.begin(), index_set.end(),
                                                o.index_set.begin(), o.index_set.end());
    }
    return false;
}

namespace {

// Printing order differs from the comparison order only for Plucker
// variables, which are displayed shorter-index-set first.
bool display_less(const VarId& a, const VarId& b) {
    if (a.kind != b.kind || a.kind != VarId::Kind::Plucker) return a < b;
    if (a.index_set.size() != b.index_set.size())
        return a.index_set.size() < b.index_set.size();
    return a.index_set < b.index_set;
}

}  // namespace

// ------------------------------------------------------------- Monomial

Monomial Monomial::one() { return Monomial{}; }

Monomial Monomial::variable(const VarId& v, int exp) {
    if (exp <= 0) throw std::invalid_argument("exponent must be positive");
    Monomial m;
    m.factors.emplace_back(v, exp);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (const auto& [v, e] : factors) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial out;
    out.factors.reserve(factors.size() + o.factors.size());
    size_t i = 0, j = 0;
    while (i < factors.size() || j < o.factors.size()) {
        if (j == o.factors.size() ||
            (i < factors.size() && factors[i].first < o.factors[j].first)) {
            out.factors.push_back(factors[i++]);
        } else if (i == factors.size() || o.factors[j].first < factors[i].first) {
            out.factors.push_back(o.factors[j++]);
        } else {
            out.factors.emplace_back(factors[i].first, factors[i].second + o.factors[j].second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
    Monomial out;
    size_t i = 0;
    for (const auto& [v, e] : o.factors) {
        while (i < factors.size() && factors[i].first < v) out.factors.push_back(factors[i++]);
        if (i == factors.size() || !(factors[i].first == v) || factors[i].second < e)
            return std::nullopt;
        if (factors[i].second > e) out.factors.emplace_back(v, factors[i].second - e);
        ++i;
    }
    while (i < factors.size()) out.factors.push_back(factors[i++]);
    return out;
}

int Monomial::exponent_of(const VarId& v) const {
    for (const auto& [u, e] : factors)
        if (u == v) return e;
    return 0;
}

bool Monomial::operator==(const Monomial& o) const { return factors == o.factors; }

std::strong_ordering monomial_order(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        const auto& [va, ea] = a.factors[i];
        const auto& [vb, eb] = b.factors[j];
        if (va == vb) {
            if (ea != eb) return ea <=> eb;
            ++i;
            ++j;
        } else if (va < vb) {
            // a has a positive exponent where b has zero
            return std::strong_ordering::greater;
        } else {
            return std::strong_ordering::less;
        }
    }
    if (i < a.factors.size()) return std::strong_ordering::greater;
    if (j < b.factors.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

// ----------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(Int c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(Monomial::one(), std::move(c));
    return p;
}

Polynomial Polynomial::variable(const VarId& v) {
    Polynomial p;
    p.terms_.emplace(Monomial::variable(v), Int(1));
    return p;
}

Polynomial Polynomial::term(Monomial m, Int c) {
    Polynomial p;
    if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Int Polynomial::leading_coefficient() const {
    return terms_.empty() ? Int(0) : terms_.begin()->second;
}

Polynomial Polynomial::sign_normalized() const {
    if (terms_.empty() || leading_coefficient() > 0) return *this;
    return -*this;
}

std::vector<VarId> Polynomial::variables() const {
    std::vector<VarId> out;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.factors) out.push_back(v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial out = *this;
    out += o;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial out = *this;
    out -= o;
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) out.add_term(ma.times(mb), ca * cb);
    return out;
}

Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial homogeneous_component(const Polynomial& f, int d) {
    Polynomial out;
    for (const auto& [m, c] : f.terms())
        if (m.degree() == d) out.add_term(m, c);
    return out;
}

Polynomial top(const Polynomial& f) {
    return f.is_zero() ? Polynomial() : homogeneous_component(f, f.degree());
}

Polynomial snd(const Polynomial& f) {
    if (f.is_zero() || f.degree() == 0) return Polynomial();
    return homogeneous_component(f, f.degree() - 1);
}

bool unit_equal(const Polynomial& f, const Polynomial& g) { return f == g || f == -g; }

Polynomial substitute(const Polynomial& f, const std::map<VarId, Polynomial>& assignment) {
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        Polynomial prod = Polynomial::constant(c);
        Monomial untouched;
        for (const auto& [v, e] : m.factors) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                untouched = untouched.times(Monomial::variable(v, e));
            } else {
                for (int k = 0; k < e; ++k) prod = prod * it->second;
            }
        }
        out += prod * Polynomial::term(untouched, 1);
    }
    return out;
}

Polynomial substitute(const Polynomial& f, const std::map<VarId, Int>& assignment) {
    std::map<VarId, Polynomial> lifted;
    for (const auto& [v, c] : assignment) lifted.emplace(v, Polynomial::constant(c));
    return substitute(f, lifted);
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Polynomial q, r = f;
    const auto& lead = *d.terms().begin();
    while (!r.is_zero()) {
        const auto& rl = *r.terms().begin();
        auto qm = rl.first.divided_by(lead.first);
        if (!qm) throw std::invalid_argument("division is not exact");
        Int qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), rl.second.get_mpz_t(),
                    lead.second.get_mpz_t());
        if (rem != 0) throw std::invalid_argument("division is not exact");
        Polynomial t = Polynomial::term(*qm, qc);
        q += t;
        r -= t * d;
    }
    return q;
}

std::optional<Polynomial> poly_sqrt(const Polynomial& f) {
    if (f.is_zero()) return Polynomial();
    const auto& [lm, lc] = *f.terms().begin();
    if (lc < 0 || f.degree() % 2 != 0) return std::nullopt;
    Int root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), lc.get_mpz_t());
    if (rem != 0) return std::nullopt;
    Monomial half;
    for (const auto& [v, e] : lm.factors) {
        if (e % 2 != 0) return std::nullopt;
        half.factors.emplace_back(v, e / 2);
    }
    Polynomial g = Polynomial::term(half, root);
    const Int two_root = 2 * root;
    std::size_t limit = 4 * f.term_count() + 16;
    Polynomial r = f - g * g;
    while (!r.is_zero()) {
        if (limit-- == 0) return std::nullopt;
        const auto& [rm, rc] = *r.terms().begin();
        auto qm = rm.divided_by(half);
        if (!qm) return std::nullopt;
        Int qc, qrem;
        mpz_tdiv_qr(qc.get_mpz_t(), qrem.get_mpz_t(), rc.get_mpz_t(), two_root.get_mpz_t());
        if (qrem != 0) return std::nullopt;
        g += Polynomial::term(*qm, qc);
        r = f - g * g;
    }
    return g;
}

// ------------------------------------------------------------- printing

namespace {

std::string monomial_text(const Monomial& m, const Int& coeff) {
    Int a = coeff < 0 ? Int(-coeff) : coeff;
    std::vector<std::pair<VarId, int>> fs = m.factors;
    std::sort(fs.begin(), fs.end(),
              [](const auto& x, const auto& y) { return display_less(x.first, y.first); });
    std::string out;
    if (fs.empty()) return a.get_str();
    if (a != 1) out = a.get_str() + "*";
    for (size_t i = 0; i < fs.size(); ++i) {
        if (i) out += '*';
        out += fs[i].first.name();
        if (fs[i].second > 1) out += "^" + std::to_string(fs[i].second);
    }
    return out;
}

}  // namespace

std::string Polynomial::text() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            if (c < 0) out += '-';
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += monomial_text(m, c);
    }
    return out;
}

// -------------------------------------------------------------- parsing

namespace {

struct Lexer {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected integer in polynomial text");
        return s.substr(start, pos - start);
    }
    std::string variable() {
        skip_ws();
        size_t start = pos;
        if (s[pos] == 'z') {
            ++pos;
            return "z";
        }
        // a{..} or x_{..}
        while (pos < s.size() && s[pos] != '}') ++pos;
        if (pos == s.size()) throw std::invalid_argument("unterminated variable name");
        ++pos;
        return s.substr(start, pos - start);
    }
};

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
    Lexer lx{text};
    Polynomial out;
    if (lx.done()) throw std::invalid_argument("empty polynomial text");
    {
        Lexer probe = lx;
        if (probe.accept('0') && probe.done()) return out;
    }
    bool negative = lx.accept('-');
    for (;;) {
        Int coeff = 1;
        Monomial mono;
        bool have_factor = false;
        for (;;) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= Int(lx.integer());
                have_factor = true;
            } else if (c == 'z' || c == 'a' || c == 'x') {
                VarId v = VarId::parse(lx.variable());
                int exp = 1;
                if (lx.accept('^')) exp = std::stoi(lx.integer());
                mono = mono.times(Monomial::variable(v, exp));
                have_factor = true;
            } else {
                throw std::invalid_argument("unexpected character in polynomial text");
            }
            if (!lx.accept('*')) break;
        }
        if (!have_factor) throw std::invalid_argument("empty term in polynomial text");
        out.add_term(mono, negative ? Int(-coeff) : coeff);
        if (lx.done()) break;
        if (lx.accept('+')) {
            negative = false;
        } else if (lx.accept('-')) {
            negative = true;
        } else {
            throw std::invalid_argument("expected + or - in polynomial text");
        }
    }
    return out;
}

// ------------------------------------------------------------------ JSON

std::string Polynomial::json_str() const {
    njson terms = njson::array();
    for (const auto& [m, c] : terms_) {
        njson mono = njson::object();
        std::vector<std::pair<VarId, int>> fs = m.factors;
        std::sort(fs.begin(), fs.end(),
                  [](const auto& x, const auto& y) { return display_less(x.first, y.first); });
        for (const auto& [v, e] : fs) mono[v.name()] = e;
        terms.push_back({{"coeff", c.get_str()}, {"monomial", mono}});
    }
    return njson{{"terms", terms}}.dump();
}

Polynomial Polynomial::from_json_str(const std::string& text) {
    njson doc = njson::parse(text);
    Polynomial out;
    for (const auto& t : doc.at("terms")) {
        Int coeff(t.at("coeff").get<std::string>());
        Monomial mono;
        for (const auto& [name, exp] : t.at("monomial").items())
            mono = mono.times(Monomial::variable(VarId::parse(name), exp.get<int>()));
        out.add_term(mono, coeff);
    }
    return out;
}

// --------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(Int c) { return UniPoly(std::vector<Int>{std::move(c)}); }

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) out[i] -= o.coeffs_[i];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    return UniPoly(std::move(out));
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Int> out(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Int(static_cast<long>(i));
    return UniPoly(std::move(out));
}

Int UniPoly::content() const {
    Int g = 0;
    for (const Int& c : coeffs_) g = ::gcd(g, c);
    return g < 0 ? Int(-g) : g;
}

UniPoly UniPoly::primitive_part() const {
    if (is_zero()) return UniPoly();
    Int cont = content();
    std::vector<Int> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] / cont;
    return UniPoly(std::move(out));
}

namespace {

UniPoly shifted(const UniPoly& p, int k) {
    if (p.is_zero()) return UniPoly();
    std::vector<Int> out(p.coeffs().size() + k, Int(0));
    for (size_t i = 0; i < p.coeffs().size(); ++i) out[i + k] = p.coeffs()[i];
    return UniPoly(std::move(out));
}

UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    const Int lc = b.coeffs().back();
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        const int shift = r.degree() - db;
        const Int rl = r.coeffs().back();
        r = r * UniPoly::constant(lc) - shifted(b, shift) * UniPoly::constant(rl);
    }
    return r;
}

}  // namespace

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a.primitive_part(), y = b.primitive_part();
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        UniPoly r = pseudo_rem(x, y).primitive_part();
        x = y;
        y = r;
    }
    if (!x.is_zero() && x.coeffs().back() < 0) x = UniPoly() - x;
    return x;
}

UniPoly restrict_to_line(const Polynomial& f, const std::map<VarId, Int>& base,
                         const std::map<VarId, Int>& direction) {
    UniPoly acc;
    for (const auto& [m, c] : f.terms()) {
        UniPoly prod = UniPoly::constant(c);
        for (const auto& [v, e] : m.factors) {
            auto bit = base.find(v);
            auto dit = direction.find(v);
            if (bit == base.end() || dit == direction.end())
                throw std::invalid_argument("line restriction missing a variable: " + v.name());
            UniPoly lin({bit->second, dit->second});
            for (int k = 0; k < e; ++k) prod = prod * lin;
        }
        acc = acc + prod;
    }
    return acc;
}

bool univariate_squarefree(const UniPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("square-free test on the zero polynomial");
    if (p.degree() <= 1) return true;
    return UniPoly::gcd(p, p.derivative()).degree() == 0;
}

}  // namespace flagdiv
