#include "pencilpairs/chern_ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

namespace pp {

AmbientProduct::AmbientProduct(std::vector<int> dims) : factor_dims(std::move(dims)) {
    if (factor_dims.empty())
        throw std::invalid_argument("ambient product needs at least one factor");
    for (int n : factor_dims)
        if (n < 1)
            throw std::invalid_argument("ambient factor dimension must be >= 1");
}

int AmbientProduct::total_dim() const {
    return std::accumulate(factor_dims.begin(), factor_dims.end(), 0);
}

namespace {

void check_same_ambient(const CohomologyClass& a, const CohomologyClass& b) {
    if (!(a.ambient() == b.ambient()))
        throw std::invalid_argument("cohomology classes live in different ambient rings");
}

bool within_truncation(const AmbientProduct& a, const std::vector<int>& exponents) {
    for (std::size_t i = 0; i < exponents.size(); ++i)
        if (exponents[i] > a.factor_dims[i]) return false;
    return true;
}

}  // namespace

CohomologyClass::CohomologyClass(AmbientProduct ambient, Terms terms)
    : ambient_(std::move(ambient)) {
    for (auto& [exponents, coeff] : terms) {
        if (exponents.size() != static_cast<std::size_t>(ambient_.factor_count()))
            throw std::invalid_argument("exponent vector length does not match factor count");
        for (int e : exponents)
            if (e < 0) throw std::invalid_argument("negative exponent");
        if (coeff == 0) continue;
        if (!within_truncation(ambient_, exponents)) continue;
        terms_.emplace(exponents, coeff);
    }
}

CohomologyClass CohomologyClass::zero(const AmbientProduct& a) {
    return CohomologyClass(a, {});
}

CohomologyClass CohomologyClass::constant(const AmbientProduct& a, Int c) {
    Terms t;
    t.emplace(std::vector<int>(a.factor_dims.size(), 0), std::move(c));
    return CohomologyClass(a, std::move(t));
}

CohomologyClass CohomologyClass::generator(const AmbientProduct& a, int i) {
    if (i < 1 || i > a.factor_count())
        throw std::invalid_argument("generator index out of range");
    std::vector<int> e(a.factor_dims.size(), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    Terms t;
    t.emplace(std::move(e), 1);
    return CohomologyClass(a, std::move(t));
}

Int CohomologyClass::coefficient(const std::vector<int>& exponents) const {
    if (exponents.size() != static_cast<std::size_t>(ambient_.factor_count()))
        throw std::invalid_argument("exponent vector length does not match factor count");
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Int(0) : it->second;
}

Int CohomologyClass::constant_term() const {
    return coefficient(std::vector<int>(ambient_.factor_dims.size(), 0));
}

CohomologyClass CohomologyClass::graded_part(int degree) const {
    Terms t;
    for (const auto& [exponents, coeff] : terms_)
        if (std::accumulate(exponents.begin(), exponents.end(), 0) == degree)
            t.emplace(exponents, coeff);
    return CohomologyClass(ambient_, std::move(t));
}

CohomologyClass CohomologyClass::operator-() const {
    Terms t;
    for (const auto& [exponents, coeff] : terms_) t.emplace(exponents, -coeff);
    return CohomologyClass(ambient_, std::move(t));
}

CohomologyClass operator+(const CohomologyClass& a, const CohomologyClass& b) {
    check_same_ambient(a, b);
    CohomologyClass::Terms t = a.terms();
    for (const auto& [exponents, coeff] : b.terms()) t[exponents] += coeff;
    return CohomologyClass(a.ambient(), std::move(t));
}

CohomologyClass operator-(const CohomologyClass& a, const CohomologyClass& b) {
    return a + (-b);
}

CohomologyClass operator*(const CohomologyClass& a, const CohomologyClass& b) {
    check_same_ambient(a, b);
    const auto& dims = a.ambient().factor_dims;
    CohomologyClass::Terms t;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            std::vector<int> e(dims.size());
            bool truncated = false;
            for (std::size_t i = 0; i < dims.size(); ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > dims[i]) {
                    truncated = true;
                    break;
                }
            }
            if (truncated) continue;
            t[std::move(e)] += ca * cb;
        }
    }
    return CohomologyClass(a.ambient(), std::move(t));
}

CohomologyClass operator*(const Int& c, const CohomologyClass& a) {
    CohomologyClass::Terms t;
    for (const auto& [exponents, coeff] : a.terms()) t.emplace(exponents, c * coeff);
    return CohomologyClass(a.ambient(), std::move(t));
}

CohomologyClass CohomologyClass::pow(unsigned long long e) const {
    CohomologyClass result = constant(ambient_, 1);
    CohomologyClass base = *this;
    while (e > 0) {
        if (e & 1ULL) result = result * base;
        e >>= 1ULL;
        if (e > 0) base = base * base;
    }
    return result;
}

Int integrate(const CohomologyClass& c) {
    return c.coefficient(c.ambient().factor_dims);
}

CohomologyClass invert_unit(const CohomologyClass& c) {
    Int u = c.constant_term();
    if (u != 1 && u != -1)
        throw std::invalid_argument("invert_unit requires constant term 1 or -1");
    // c = u(1 + x) with x nilpotent; 1/(1+x) = sum_{j<=D} (-x)^j via Horner.
    CohomologyClass one = CohomologyClass::constant(c.ambient(), 1);
    CohomologyClass x = (u * c) - one;
    CohomologyClass inv = one;
    for (int j = 0; j < c.ambient().total_dim(); ++j) inv = one - x * inv;
    return u * inv;
}

CohomologyClass total_chern_ambient(const AmbientProduct& a) {
    CohomologyClass result = CohomologyClass::constant(a, 1);
    for (int i = 1; i <= a.factor_count(); ++i) {
        CohomologyClass factor =
            CohomologyClass::constant(a, 1) + CohomologyClass::generator(a, i);
        result = result * factor.pow(
            static_cast<unsigned long long>(a.factor_dims[static_cast<std::size_t>(i - 1)]) + 1);
    }
    return result;
}

std::string CohomologyClass::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [exponents, coeff] : terms_) {
        std::string mono;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "w" + std::to_string(i + 1);
            if (exponents[i] > 1) mono += "^" + std::to_string(exponents[i]);
        }
        Int c = coeff;
        bool negative = c < 0;
        if (negative) c = -c;
        std::string token;
        if (mono.empty())
            token = c.str();
        else if (c == 1)
            token = mono;
        else
            token = c.str() + "*" + mono;
        if (out.empty())
            out = (negative ? "-" : "") + token;
        else
            out += (negative ? " - " : " + ") + token;
    }
    return out;
}

ParseError::ParseError(const std::string& what, std::size_t pos)
    : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what),
      position(pos) {}

namespace {

class Parser {
public:
    Parser(const std::string& text, const AmbientProduct& ambient)
        : text_(text), ambient_(ambient) {}

    CohomologyClass run() {
        CohomologyClass result = expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
        return result;
    }

private:
    const std::string& text_;
    const AmbientProduct& ambient_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError(std::string("expected '") + c + "'", pos_);
        if (text_[pos_] != c)
            throw ParseError(std::string("expected '") + c + "', found '" + text_[pos_] + "'",
                             pos_);
        ++pos_;
    }

    std::string digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start) throw ParseError("expected a number", pos_);
        return text_.substr(start, pos_ - start);
    }

    unsigned long long posint(const char* what) {
        std::size_t at = pos_;
        std::string d = digits();
        unsigned long long value = 0;
        for (char ch : d) {
            unsigned digit = static_cast<unsigned>(ch - '0');
            if (value > (std::numeric_limits<unsigned long long>::max() - digit) / 10ULL)
                throw ParseError(std::string(what) + " too large", at);
            value = value * 10ULL + digit;
        }
        if (value == 0) throw ParseError(std::string(what) + " must be positive", at);
        return value;
    }

    CohomologyClass expr() {
        CohomologyClass result = term();
        while (true) {
            if (peek_is('+')) {
                ++pos_;
                result = result + term();
            } else if (peek_is('-')) {
                ++pos_;
                result = result - term();
            } else {
                return result;
            }
        }
    }

    CohomologyClass term() {
        CohomologyClass result = factor();
        while (peek_is('*')) {
            ++pos_;
            result = result * factor();
        }
        return result;
    }

    CohomologyClass factor() {
        CohomologyClass b = base();
        if (peek_is('^')) {
            ++pos_;
            return b.pow(posint("exponent"));
        }
        return b;
    }

    CohomologyClass base() {
        skip_ws();
        if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            CohomologyClass inner = expr();
            expect(')');
            return inner;
        }
        if (c == 'w') {
            std::size_t at = pos_;
            ++pos_;
            unsigned long long i = posint("generator index");
            if (i > static_cast<unsigned long long>(ambient_.factor_count()))
                throw ParseError("generator index out of range", at);
            return CohomologyClass::generator(ambient_, static_cast<int>(i));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return CohomologyClass::constant(ambient_, Int(digits()));
        throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    }
};

}  // namespace

CohomologyClass parse_class(const std::string& expr, const AmbientProduct& ambient) {
    return Parser(expr, ambient).run();
}

}  // namespace pp
