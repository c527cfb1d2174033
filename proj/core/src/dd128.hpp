#pragma once

// Compensated pair arithmetic over __float128 (~68 significant digits).
// Used for series whose alternating terms grow to e^|sqrt-arg| before the
// sum collapses; double (or a double pair) cannot absorb that cancellation.

#include <quadmath.h>

namespace ccf::detail {

using f128 = __float128;

struct DD {
    f128 hi{0};
    f128 lo{0};

    DD() = default;
    DD(f128 h) : hi(h) {}
    DD(f128 h, f128 l) : hi(h), lo(l) {}
    explicit DD(double d) : hi(d) {}

    double to_double() const { return static_cast<double>(hi + lo); }
};

inline DD two_sum(f128 a, f128 b) {
    f128 s = a + b;
    f128 bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(f128 a, f128 b) { // requires |a| >= |b|
    f128 s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(f128 a, f128 b) {
    f128 p = a * b;
    return {p, fmaq(a, b, -p)};
}

inline DD dd_add(const DD& a, const DD& b) {
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD dd_sub(const DD& a, const DD& b) { return dd_add(a, DD{-b.hi, -b.lo}); }

inline DD dd_mul(const DD& a, const DD& b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_mul_f(const DD& a, f128 b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD dd_div_f(const DD& a, f128 b) {
    f128 q1 = a.hi / b;
    DD r = two_prod(q1, b);
    f128 e = ((a.hi - r.hi) - r.lo) + a.lo;
    f128 q2 = e / b;
    return quick_two_sum(q1, q2);
}

inline DD dd_div(const DD& a, const DD& b) {
    f128 q1 = a.hi / b.hi;
    DD r = dd_sub(a, dd_mul_f(b, q1));
    f128 q2 = r.hi / b.hi;
    r = dd_sub(r, dd_mul_f(b, q2));
    f128 q3 = r.hi / b.hi;
    DD q = quick_two_sum(q1, q2);
    return dd_add(q, DD{q3});
}

inline DD dd_inv_f(f128 b) { return dd_div_f(DD{f128(1)}, b); }

inline DD dd_neg(const DD& a) { return {-a.hi, -a.lo}; }

inline f128 dd_abs_hi(const DD& a) { return a.hi < 0 ? -a.hi : a.hi; }

} // namespace ccf::detail
