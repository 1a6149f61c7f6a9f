#pragma once

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "thetacover/rational.hpp"
#include "thetacover/varset.hpp"

namespace thetacover {

/// Multilinear polynomial with exact rational coefficients, stored as a map
/// from squarefree monomial supports to nonzero coefficients. Products of
/// monomials union their supports, so x_j * x_j = x_j by construction.
class Polynomial {
public:
    using TermMap = std::map<VarSubset, Rational, GradedLexLess>;

    Polynomial() = default;

    static Polynomial constant(const Rational& c) {
        Polynomial p;
        p.add_term({}, c);
        return p;
    }

    static Polynomial variable(int j) {
        if (j < 0) throw std::invalid_argument("Polynomial::variable: negative index");
        Polynomial p;
        p.add_term({j}, 1);
        return p;
    }

    static Polynomial monomial(const VarSubset& support, const Rational& coeff) {
        if (!is_canonical(support))
            throw std::invalid_argument("Polynomial::monomial: support not canonical");
        Polynomial p;
        p.add_term(support, coeff);
        return p;
    }

    /// x^S for a canonical support S.
    static Polynomial power_monomial(const VarSubset& support) {
        return monomial(support, 1);
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Max support size; -1 for the zero polynomial (standing in for -inf).
    int degree() const {
        int d = -1;
        for (const auto& [s, c] : terms_) d = std::max(d, static_cast<int>(s.size()));
        return d;
    }

    Rational coeff(const VarSubset& support) const {
        auto it = terms_.find(support);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const VarSubset& support, const Rational& coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(support, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& other) {
        for (const auto& [s, c] : other.terms_) add_term(s, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        for (const auto& [s, c] : other.terms_) add_term(s, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [sa, ca] : a.terms_)
            for (const auto& [sb, cb] : b.terms_) out.add_term(set_union(sa, sb), ca * cb);
        return out;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial out;
        for (const auto& [s, coeff] : p.terms_) out.add_term(s, c * coeff);
        return out;
    }

    friend Polynomial operator-(const Polynomial& p) { return Rational(-1) * p; }

    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    /// Evaluate at the 0/1 point chi_S: a monomial contributes iff its
    /// support lies inside S.
    Rational eval_binary(const VarSubset& s) const {
        Rational out = 0;
        for (const auto& [support, c] : terms_)
            if (is_subset(support, s)) out += c;
        return out;
    }

    Rational eval(const std::vector<Rational>& x) const {
        Rational out = 0;
        for (const auto& [support, c] : terms_) {
            Rational term = c;
            for (int j : support) {
                if (j >= static_cast<int>(x.size()))
                    throw std::invalid_argument("Polynomial::eval: point too short");
                term *= x[static_cast<std::size_t>(j)];
            }
            out += term;
        }
        return out;
    }

    int max_var_index() const {
        int m = -1;
        for (const auto& [s, c] : terms_)
            if (!s.empty()) m = std::max(m, s.back());
        return m;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [s, c] : terms_) {
            if (!first) out << " + ";
            first = false;
            out << format_rational(c);
            for (int j : s) out << "*x" << j;
        }
        return out.str();
    }

private:
    TermMap terms_;
};

}
