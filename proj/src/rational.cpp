#include "gambier/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gambier {

Rat rat_pow(const Rat& r, int e) {
    if (e == 0) return Rat(1);
    bool invert = e < 0;
    unsigned long long k = invert ? -static_cast<long long>(e) : e;
    Rat base = r;
    Rat acc(1);
    while (k) {
        if (k & 1ull) acc *= base;
        base *= base;
        k >>= 1;
    }
    if (invert) {
        if (acc == 0) throw std::domain_error("rat_pow: zero to a negative power");
        acc = Rat(1) / acc;
    }
    return acc;
}

Rat rationalize(double x, double tol) {
    if (!std::isfinite(x)) throw std::domain_error("rationalize: non-finite input");
    if (x == 0.0) return Rat(0);
    const double bound = tol * std::max(1.0, std::fabs(x));
    bool neg = x < 0;
    double r = std::fabs(x);

    // continued-fraction convergents h/k
    BigInt h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(r);
        if (fl > 9e17) break;  // give up on the CF; fall back below
        BigInt a(static_cast<long long>(fl));
        BigInt h2 = a * h1 + h0;
        BigInt k2 = a * k1 + k0;
        h0 = h1; h1 = h2;
        k0 = k1; k1 = k2;
        Rat approx(h1, k1);
        double err = std::fabs(to_double(approx) - std::fabs(x));
        if (err <= bound) {
            Rat res = approx;
            return neg ? -res : res;
        }
        double frac = r - fl;
        if (frac <= std::numeric_limits<double>::epsilon() * std::fabs(r)) break;
        r = 1.0 / frac;
    }
    // Fall back to the exact binary value of the double.
    Rat exact(x);
    return exact;
}

std::string rat_to_string(const Rat& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

}  // namespace gambier
