#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace flagdiv {

using Int = mpz_class;

// Variable identifier.  The global order is: matrix entries by (row, col),
// then the homogenizer z, then Plucker variables by their index sequence in
// lexicographic order.
struct VarId {
    enum class Kind : std::uint8_t { Matrix = 0, Homogenizer = 1, Plucker = 2 };

    Kind kind = Kind::Homogenizer;
    int row = 0, col = 0;        // Matrix only, 1-based
    std::vector<int> index_set;  // Plucker only, strictly increasing
    int ambient = 0;             // Plucker only; selects digit vs comma printing

    static VarId matrix(int row, int col);
    static VarId homogenizer();
    static VarId plucker(std::vector<int> J, int ambient_n);

    // "a{r,c}", "z", "x_{134}" (ambient <= 9) or "x_{1,3,10}".
    std::string name() const;
    static VarId parse(const std::string& text);

    bool operator==(const VarId& o) const;
    bool operator<(const VarId& o) const;  // ambient is ignored
};

// Product of variables with positive exponents, sorted by VarId.
struct Monomial {
    std::vector<std::pair<VarId, int>> factors;

    static Monomial one();
    static Monomial variable(const VarId& v, int exp = 1);

    int degree() const;
    Monomial times(const Monomial& o) const;
    std::optional<Monomial> divided_by(const Monomial& o) const;
    int exponent_of(const VarId& v) const;

    bool operator==(const Monomial& o) const;
};

// Graded lexicographic order: compare total degree first, then walk the
// variables in ascending VarId order and give the tie to the monomial with
// the larger exponent at the first difference.
std::strong_ordering monomial_order(const Monomial& a, const Monomial& b);

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return monomial_order(a, b) == std::strong_ordering::greater;
    }
};

// Sparse multivariate polynomial over arbitrary-precision integers.  Terms
// are kept in descending monomial order, so begin() is the leading term.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Int, MonomialGreater>;

    Polynomial() = default;
    static Polynomial constant(Int c);
    static Polynomial variable(const VarId& v);
    static Polynomial term(Monomial m, Int c);

    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for the zero polynomial
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Int leading_coefficient() const;  // 0 for the zero polynomial
    // Representative with positive leading coefficient.
    Polynomial sign_normalized() const;

    std::vector<VarId> variables() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    void add_term(const Monomial& m, const Int& c);

    std::string text() const;
    static Polynomial parse(const std::string& text);

    std::string json_str() const;  // {"terms":[{"coeff":"..","monomial":{..}}]}
    static Polynomial from_json_str(const std::string& text);

private:
    TermMap terms_;
};

Polynomial multiply(const Polynomial& f, const Polynomial& g);
Polynomial homogeneous_component(const Polynomial& f, int d);
Polynomial top(const Polynomial& f);  // component in degree deg f
Polynomial snd(const Polynomial& f);  // component in degree deg f - 1
bool unit_equal(const Polynomial& f, const Polynomial& g);  // f == g or f == -g

Polynomial substitute(const Polynomial& f, const std::map<VarId, Polynomial>& assignment);
Polynomial substitute(const Polynomial& f, const std::map<VarId, Int>& assignment);

// Quotient f/d when the division is exact; throws otherwise.
Polynomial divide_exact(const Polynomial& f, const Polynomial& d);

// g with g*g == f, if one exists.
std::optional<Polynomial> poly_sqrt(const Polynomial& f);

// Dense univariate polynomial over Int; coeffs()[k] multiplies t^k.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Int> coeffs);  // trailing zeros trimmed

    static UniPoly constant(Int c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }

    UniPoly derivative() const;
    Int content() const;          // gcd of coefficients, nonnegative
    UniPoly primitive_part() const;

    // Primitive gcd via the primitive pseudo-remainder sequence.
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

private:
    std::vector<Int> coeffs_;
};

// f(base + t*direction), expanded exactly in t.  Both maps must assign a
// value to every variable of f.
UniPoly restrict_to_line(const Polynomial& f, const std::map<VarId, Int>& base,
                         const std::map<VarId, Int>& direction);

// True iff gcd(p, p') is constant; throws on the zero polynomial.
bool univariate_squarefree(const UniPoly& p);

}  // namespace flagdiv
