#pragma once

#include "gambier/rational.hpp"

#include <array>
#include <cmath>
#include <compare>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

namespace gambier {

// Monomial in N variables. Variable 0 is Laurent (its exponent may be
// negative); every other variable must have a non-negative exponent.
template <int N>
struct Mono {
    std::array<int, N> e{};

    auto operator<=>(const Mono&) const = default;

    bool valid() const {
        for (int i = 1; i < N; ++i)
            if (e[i] < 0) return false;
        return true;
    }
};

using Mono2 = Mono<2>;  // (xexp, vexp)

// Sparse Laurent polynomial with exact rational coefficients, canonical form:
// no zero coefficients are stored and terms are ordered lexicographically on
// the exponent vector, so equality is structural.
template <int N>
class Poly {
public:
    using TermMap = std::map<Mono<N>, Rat>;

    Poly() = default;

    static Poly term(const Mono<N>& m, const Rat& c) {
        Poly p;
        p.add_term(m, c);
        return p;
    }

    static Poly constant(const Rat& c) { return term(Mono<N>{}, c); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    void add_term(const Mono<N>& m, const Rat& c) {
        if (!m.valid())
            throw std::invalid_argument("Poly: negative exponent on a non-Laurent variable");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Mono<N> m;
                for (int i = 0; i < N; ++i) m.e[i] = ma.e[i] + mb.e[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }

    Poly scaled(const Rat& s) const {
        Poly r;
        if (s == 0) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    // Exact partial derivative with respect to variable `var`.
    Poly partial(int var) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            if (m.e[var] == 0) continue;
            Mono<N> d = m;
            d.e[var] -= 1;
            r.add_term(d, c * Rat(m.e[var]));
        }
        return r;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    double eval(const std::array<double, N>& p) const {
        double acc = 0.0;
        for (const auto& [m, c] : terms_) {
            double t = to_double(c);
            for (int i = 0; i < N; ++i) t *= std::pow(p[i], m.e[i]);
            acc += t;
        }
        return acc;
    }

    Rat eval_exact(const std::array<Rat, N>& p) const {
        Rat acc(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (int i = 0; i < N; ++i) t *= rat_pow(p[i], m.e[i]);
            acc += t;
        }
        return acc;
    }

private:
    TermMap terms_;
};

using PlanePoly = Poly<2>;  // LaurentPoly in (x, v)

}  // namespace gambier
