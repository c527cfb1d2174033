#include "ccf/functions.hpp"

#include <array>
#include <cmath>

#include "ccf/errors.hpp"

namespace ccf {

namespace {

// Taylor coefficients around the evaluation point, orders 0..4; exact
// derivative propagation for every registry integrand.
struct Jet {
    std::array<double, 5> c{};

    static Jet constant(double v) {
        Jet j;
        j.c[0] = v;
        return j;
    }
    static Jet variable(double x0) {
        Jet j;
        j.c[0] = x0;
        j.c[1] = 1;
        return j;
    }
    double deriv(int k) const {
        double fact = 1;
        for (int i = 2; i <= k; ++i) fact *= i;
        return c[k] * fact;
    }
};

Jet operator+(const Jet& a, const Jet& b) {
    Jet r;
    for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}
Jet operator-(const Jet& a, const Jet& b) {
    Jet r;
    for (int i = 0; i < 5; ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}
Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k < 5; ++k)
        for (int i = 0; i <= k; ++i) r.c[k] += a.c[i] * b.c[k - i];
    return r;
}
Jet operator*(double s, const Jet& a) {
    Jet r;
    for (int i = 0; i < 5; ++i) r.c[i] = s * a.c[i];
    return r;
}
Jet operator/(const Jet& a, const Jet& b) {
    Jet r;
    for (int k = 0; k < 5; ++k) {
        double s = a.c[k];
        for (int i = 1; i <= k; ++i) s -= b.c[i] * r.c[k - i];
        r.c[k] = s / b.c[0];
    }
    return r;
}

Jet jet_exp(const Jet& u) {
    Jet r;
    r.c[0] = std::exp(u.c[0]);
    for (int k = 1; k < 5; ++k) {
        double s = 0;
        for (int i = 1; i <= k; ++i) s += i * u.c[i] * r.c[k - i];
        r.c[k] = s / k;
    }
    return r;
}

Jet jet_cos(const Jet& u) {
    Jet s, c;
    s.c[0] = std::sin(u.c[0]);
    c.c[0] = std::cos(u.c[0]);
    for (int k = 1; k < 5; ++k) {
        double as = 0, ac = 0;
        for (int i = 1; i <= k; ++i) {
            as += i * u.c[i] * c.c[k - i];
            ac -= i * u.c[i] * s.c[k - i];
        }
        s.c[k] = as / k;
        c.c[k] = ac / k;
    }
    return c;
}

// u^p for u.c[0] > 0
Jet jet_pow(const Jet& u, double p) {
    Jet r;
    r.c[0] = std::pow(u.c[0], p);
    for (int k = 1; k < 5; ++k) {
        double s = 0;
        for (int i = 1; i <= k; ++i) s += (p * i - (k - i)) * u.c[i] * r.c[k - i];
        r.c[k] = s / (k * u.c[0]);
    }
    return r;
}

} // namespace

TestFunction make_function(std::string_view id, double b, double p) {
    auto jet_of = [id, b, p](double x) -> Jet {
        Jet X = Jet::variable(x);
        if (id == "one") return Jet::constant(1.0);
        if (id == "x") return X;
        if (id == "exp") return jet_exp(X);
        if (id == "runge") {
            Jet t = (2.0 / b) * X - Jet::constant(1.0);
            return Jet::constant(1.0) / (Jet::constant(1.0) + 25.0 * (t * t));
        }
        if (id == "reciprocal") return Jet::constant(1.0) / (Jet::constant(1.0) + X);
        if (id == "cos5") return jet_cos(5.0 * X);
        if (id == "abs_power") {
            double t = x - 0.5;
            if (t == 0.0) return Jet{}; // kink: value and low-order derivatives vanish
            Jet u = (t > 0) ? X - Jet::constant(0.5) : Jet::constant(0.5) - X;
            Jet r = jet_pow(u, p);
            return r;
        }
        throw DomainError("unknown function id: " + std::string(id));
    };
    TestFunction tf;
    tf.id = std::string(id);
    tf.f = [jet_of](double x) { return jet_of(x).c[0]; };
    tf.deriv = [jet_of](int k, double x) {
        if (k < 0 || k > 4)
            throw DomainError("TestFunction::deriv supports orders 0..4");
        Jet j = jet_of(x);
        if (j.c[0] == 0.0 && x == 0.5) return 0.0;
        return j.deriv(k);
    };
    return tf;
}

std::vector<std::string> function_ids() {
    return {"one", "x", "exp", "runge", "reciprocal", "cos5", "abs_power"};
}

} // namespace ccf
