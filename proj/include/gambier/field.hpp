#pragma once

#include "gambier/laurent.hpp"

#include <array>
#include <sstream>
#include <string>
#include <vector>

namespace gambier {

// Polynomial vector field on R^N (variable 0 punctured: Laurent exponents).
template <int N>
struct VField {
    std::array<Poly<N>, N> comp{};

    bool is_zero() const {
        for (const auto& p : comp)
            if (!p.is_zero()) return false;
        return true;
    }

    VField& operator+=(const VField& o) {
        for (int i = 0; i < N; ++i) comp[i] += o.comp[i];
        return *this;
    }
    VField& operator-=(const VField& o) {
        for (int i = 0; i < N; ++i) comp[i] -= o.comp[i];
        return *this;
    }
    friend VField operator+(VField a, const VField& b) { return a += b; }
    friend VField operator-(VField a, const VField& b) { return a -= b; }
    VField operator-() const {
        VField r;
        for (int i = 0; i < N; ++i) r.comp[i] = -comp[i];
        return r;
    }
    VField scaled(const Rat& s) const {
        VField r;
        for (int i = 0; i < N; ++i) r.comp[i] = comp[i].scaled(s);
        return r;
    }
    friend VField operator*(const Rat& s, const VField& f) { return f.scaled(s); }

    bool operator==(const VField& o) const { return comp == o.comp; }

    std::array<double, N> eval(const std::array<double, N>& p) const {
        std::array<double, N> r{};
        for (int i = 0; i < N; ++i) r[i] = comp[i].eval(p);
        return r;
    }
};

using PlaneField = VField<2>;   // fields on the punctured (x, v) plane
using LinearField = VField<3>;  // fields on the (y, v_y, a_y) space
using LineField = VField<1>;    // fields on the x line

// [A,B]^i = sum_j (A^j d_j B^i - B^j d_j A^i), exact.
template <int N>
VField<N> lie_bracket(const VField<N>& a, const VField<N>& b) {
    VField<N> r;
    for (int i = 0; i < N; ++i) {
        Poly<N> acc;
        for (int j = 0; j < N; ++j) {
            acc += a.comp[j] * b.comp[i].partial(j);
            acc -= b.comp[j] * a.comp[i].partial(j);
        }
        r.comp[i] = acc;
    }
    return r;
}

// ad_A^j B = [A,[A,...,[A,B]...]] with j >= 1 bracket applications.
template <int N>
VField<N> ad_power(const VField<N>& a, const VField<N>& b, int j) {
    if (j < 1) throw std::invalid_argument("ad_power: j must be >= 1");
    VField<N> r = b;
    for (int k = 0; k < j; ++k) r = lie_bracket(a, r);
    return r;
}

namespace detail {

template <int N>
std::string mono_to_string(const Mono<N>& m, const Rat& c,
                           const std::array<const char*, N>& vars) {
    std::ostringstream num;
    Rat ac = c < 0 ? Rat(-c) : c;
    bool coeff_one = (ac == 1);
    bool have_factor = false;
    if (!coeff_one) {
        num << rat_to_string(ac);
        have_factor = true;
    }
    std::ostringstream den;
    bool have_den = false;
    for (int i = 0; i < N; ++i) {
        int e = m.e[i];
        if (e == 0) continue;
        if (e > 0) {
            if (have_factor) num << "*";
            num << vars[i];
            if (e > 1) num << "^" << e;
            have_factor = true;
        } else {
            if (have_den) den << "*";
            den << vars[i];
            if (e < -1) den << "^" << -e;
            have_den = true;
        }
    }
    std::string s = num.str();
    if (s.empty()) s = "1";
    if (have_den) s += "/" + den.str();
    return s;
}

}  // namespace detail

// Renders e.g. "v^2/x d/dv" or "3/2*x d/dv - x^3 d/dx", canonical term order.
template <int N>
std::string pretty(const VField<N>& f, const std::array<const char*, N>& vars) {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < N; ++i) {
        for (const auto& [m, c] : f.comp[i].terms()) {
            if (first) {
                if (c < 0) out << "-";
                first = false;
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            out << detail::mono_to_string<N>(m, c, vars) << " d/d" << vars[i];
        }
    }
    if (first) return "0";
    return out.str();
}

inline std::string pretty(const PlaneField& f) { return pretty<2>(f, {"x", "v"}); }
inline std::string pretty(const LinearField& f) { return pretty<3>(f, {"y", "vy", "ay"}); }
inline std::string pretty(const LineField& f) { return pretty<1>(f, {"x"}); }

}  // namespace gambier
