#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pp {

using Int = boost::multiprecision::cpp_int;

// Product of complex projective spaces CP^{n1} x ... x CP^{nr}.
struct AmbientProduct {
    std::vector<int> factor_dims;

    explicit AmbientProduct(std::vector<int> dims);

    int factor_count() const { return static_cast<int>(factor_dims.size()); }
    int total_dim() const;

    bool operator==(const AmbientProduct&) const = default;
};

// Element of Z[w1..wr] / (wi^{ni+1}), kept as a sparse map from exponent
// vectors to coefficients. Exponent vectors always have one entry per factor;
// monomials past the truncation never appear and zero coefficients are
// dropped, so equality is plain map equality.
class CohomologyClass {
public:
    using Terms = std::map<std::vector<int>, Int>;

    CohomologyClass(AmbientProduct ambient, Terms terms);

    static CohomologyClass zero(const AmbientProduct& a);
    static CohomologyClass constant(const AmbientProduct& a, Int c);
    // w_i, indexed from 1.
    static CohomologyClass generator(const AmbientProduct& a, int i);

    const AmbientProduct& ambient() const { return ambient_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    Int coefficient(const std::vector<int>& exponents) const;
    Int constant_term() const;
    CohomologyClass graded_part(int degree) const;

    CohomologyClass operator-() const;
    CohomologyClass pow(unsigned long long e) const;

    bool operator==(const CohomologyClass&) const = default;

    std::string str() const;

private:
    AmbientProduct ambient_;
    Terms terms_;
};

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b);
CohomologyClass operator*(const Int& c, const CohomologyClass& a);

// Coefficient of w1^{n1} ... wr^{nr}.
Int integrate(const CohomologyClass& c);

// Multiplicative inverse of a class with constant term +-1.
CohomologyClass invert_unit(const CohomologyClass& c);

// prod_i (1 + w_i)^{n_i + 1}.
CohomologyClass total_chern_ambient(const AmbientProduct& a);

struct ParseError : std::invalid_argument {
    ParseError(const std::string& what, std::size_t position);
    std::size_t position;
};

// Grammar:
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' posint)?
//   base   := integer | 'w' posint | '(' expr ')'
// Whitespace is insignificant. No unary minus.
CohomologyClass parse_class(const std::string& expr, const AmbientProduct& ambient);

}  // namespace pp
