#ifndef IGUSA_POLYNOMIAL_HPP
#define IGUSA_POLYNOMIAL_HPP

#include <cctype>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "igusa/rational.hpp"

namespace igusa {

// Exponent vector of a monomial x^w, w in Z_{>=0}^n.
struct Monomial {
    std::vector<int> e;

    bool operator<(const Monomial& o) const { return e < o.e; }
    bool operator==(const Monomial& o) const { return e == o.e; }

    int degree() const {
        int d = 0;
        for (int x : e) d += x;
        return d;
    }
    bool is_constant() const {
        for (int x : e)
            if (x != 0) return false;
        return true;
    }
};

constexpr const char kVariableNames[] = {'x', 'y', 'z', 'w', 'u', 'v'};
constexpr int kMaxDimension = 6;

inline int variable_index(char c) {
    for (int i = 0; i < kMaxDimension; ++i)
        if (kVariableNames[i] == c) return i;
    return -1;
}

// Multivariate polynomial with arbitrary-precision integer coefficients,
// stored as a map from exponent vectors to nonzero coefficients.
class IntPolynomial {
  public:
    IntPolynomial() : n_(0) {}
    explicit IntPolynomial(int n) : n_(n) {
        if (n < 1 || n > kMaxDimension) throw std::invalid_argument("dimension must be in 1..6");
    }

    int dimension() const { return n_; }
    const std::map<Monomial, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Monomial& m, const Int& c) {
        if ((int)m.e.size() != n_) throw std::invalid_argument("monomial dimension mismatch");
        for (int x : m.e)
            if (x < 0) throw std::invalid_argument("negative exponent");
        if (c == 0) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Int coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Int(0) : it->second;
    }

    bool has_constant_term() const {
        for (const auto& [m, c] : terms_)
            if (m.is_constant()) return true;
        return false;
    }

    std::vector<Monomial> support() const {
        std::vector<Monomial> s;
        s.reserve(terms_.size());
        for (const auto& [m, c] : terms_) s.push_back(m);
        return s;
    }

    bool operator==(const IntPolynomial& o) const { return n_ == o.n_ && terms_ == o.terms_; }

  private:
    int n_;
    std::map<Monomial, Int> terms_;
};

inline IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r = a;
    for (const auto& [m, c] : b.terms()) r.add_term(m, c);
    return r;
}

inline IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial r(a.dimension());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m;
            m.e.resize(ma.e.size());
            for (std::size_t i = 0; i < ma.e.size(); ++i) m.e[i] = ma.e[i] + mb.e[i];
            r.add_term(m, ca * cb);
        }
    return r;
}

inline IntPolynomial partial_derivative(const IntPolynomial& f, int var) {
    if (var < 0 || var >= f.dimension()) throw std::invalid_argument("variable index out of range");
    IntPolynomial r(f.dimension());
    for (const auto& [m, c] : f.terms()) {
        if (m.e[var] == 0) continue;
        Monomial d = m;
        d.e[var] -= 1;
        r.add_term(d, c * m.e[var]);
    }
    return r;
}

namespace detail {

class PolyParser {
  public:
    PolyParser(const std::string& text, int n) : n_(n) {
        for (char c : text)
            if (!std::isspace((unsigned char)c)) s_.push_back(c);
    }

    IntPolynomial parse() {
        IntPolynomial f(n_);
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (peek() == '+') { ++pos_; }
            else if (peek() == '-') { sign = -1; ++pos_; }
            else if (!first) { fail("expected '+' or '-'"); }
            parse_term(f, sign);
            first = false;
        }
        if (first) fail("empty input");
        return f;
    }

  private:
    void parse_term(IntPolynomial& f, int sign) {
        Int coeff = 1;
        Monomial m;
        m.e.assign(n_, 0);
        bool saw_factor = false;
        if (pos_ < s_.size() && std::isdigit((unsigned char)peek())) {
            coeff = parse_integer();
            saw_factor = true;
            if (pos_ < s_.size() && peek() == '*') {
                ++pos_;
                if (pos_ >= s_.size() || variable_index(peek()) < 0) fail("expected variable after '*'");
            }
        }
        while (pos_ < s_.size()) {
            int vi = variable_index(peek());
            if (vi < 0) break;
            if (vi >= n_) fail(std::string("variable '") + peek() + "' exceeds dimension");
            ++pos_;
            long e = 1;
            if (pos_ < s_.size() && peek() == '^') {
                ++pos_;
                if (pos_ >= s_.size() || !std::isdigit((unsigned char)peek())) fail("expected exponent");
                Int ee = parse_integer();
                if (ee > 1000) fail("exponent too large");
                e = (long)ee;
            }
            m.e[vi] += (int)e;
            saw_factor = true;
            if (pos_ < s_.size() && peek() == '*') {
                ++pos_;
                if (pos_ >= s_.size() || variable_index(peek()) < 0) fail("expected variable after '*'");
            }
        }
        if (!saw_factor) fail("expected term");
        f.add_term(m, sign * coeff);
    }

    Int parse_integer() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit((unsigned char)peek())) digits.push_back(s_[pos_++]);
        return Int(digits);
    }

    char peek() const { return s_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("polynomial syntax error at position " + std::to_string(pos_) + ": " + msg);
    }

    std::string s_;
    std::size_t pos_ = 0;
    int n_;
};

}  // namespace detail

// Grammar: terms joined by +/-; a term is [coeff][*]var[^exp] chains with
// variables x,y,z,w,u,v; whitespace is ignored.
inline IntPolynomial parse_polynomial(const std::string& text, int n) {
    detail::PolyParser p(text, n);
    IntPolynomial f = p.parse();
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    return f;
}

// canonical printing: terms in descending lexicographic exponent order
inline std::string print_polynomial(const IntPolynomial& f) {
    if (f.is_zero()) return "0";
    std::vector<std::pair<Monomial, Int>> ts(f.terms().begin(), f.terms().end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return b.first < a.first; });
    std::string out;
    bool first = true;
    for (const auto& [m, c] : ts) {
        Int a = c;
        if (first) {
            if (a < 0) { out += "-"; a = -a; }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        std::string factors;
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (!factors.empty()) factors += "*";
            factors.push_back(kVariableNames[i]);
            if (m.e[i] > 1) factors += "^" + std::to_string(m.e[i]);
        }
        if (factors.empty()) {
            out += a.str();
        } else {
            if (a != 1) out += a.str() + "*";
            out += factors;
        }
        first = false;
    }
    return out;
}

}  // namespace igusa

#endif
