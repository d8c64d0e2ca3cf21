#include "palinpair/diophantine.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <stdexcept>

namespace palinpair {

ExtendedGcd extended_gcd(const SignedInt& p, const SignedInt& q) {
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("extended_gcd: both arguments zero");
    SignedInt old_r = p, r = q;
    SignedInt old_s(1), s(0);
    SignedInt old_t(0), t(1);
    while (!r.is_zero()) {
        SignedInt quot = old_r / r;
        SignedInt tmp = old_r - quot * r;
        old_r = std::exchange(r, std::move(tmp));
        tmp = old_s - quot * s;
        old_s = std::exchange(s, std::move(tmp));
        tmp = old_t - quot * t;
        old_t = std::exchange(t, std::move(tmp));
    }
    if (old_r.is_negative()) {
        old_r = old_r.negated();
        old_s = old_s.negated();
        old_t = old_t.negated();
    }
    return {std::move(old_r), std::move(old_s), std::move(old_t)};
}

namespace {

struct Window {
    // Closed parameter interval; unbounded when unconstrained.
    std::optional<SignedInt> lo;
    std::optional<SignedInt> hi;
    bool empty = false;
};

// Parameter window keeping v0 + step*t within [lo, hi].
Window window_for(const SignedInt& v0, const SignedInt& step, const VarBounds& bounds) {
    Window w;
    SignedInt lo(bounds.lo), hi(bounds.hi);
    if (step.is_zero()) {
        if (v0 < lo || v0 > hi) w.empty = true;
        return w;
    }
    SignedInt a = lo - v0;
    SignedInt b = hi - v0;
    if (step.is_negative()) std::swap(a, b);
    w.lo = SignedInt::ceil_div(a, step);
    w.hi = SignedInt::floor_div(b, step);
    if (*w.lo > *w.hi) w.empty = true;
    return w;
}

void intersect(Window& acc, const Window& other) {
    if (other.empty) {
        acc.empty = true;
        return;
    }
    if (other.lo && (!acc.lo || *other.lo > *acc.lo)) acc.lo = other.lo;
    if (other.hi && (!acc.hi || *other.hi < *acc.hi)) acc.hi = other.hi;
    if (acc.lo && acc.hi && *acc.lo > *acc.hi) acc.empty = true;
}

}  // namespace

std::vector<Assignment> solve_two_var(const LinearEquation& eq) {
    if (eq.coeffs.size() != 2 || eq.bounds.size() != 2)
        throw std::domain_error("solve_two_var: expected exactly two variables");
    const SignedInt& alpha = eq.coeffs[0];
    const SignedInt& beta = eq.coeffs[1];
    if (alpha.is_zero() && beta.is_zero())
        throw std::domain_error("solve_two_var: zero coefficient vector");

    ExtendedGcd e = extended_gcd(alpha, beta);
    if (!SignedInt::divides(e.g, eq.rhs)) return {};
    SignedInt scale = eq.rhs / e.g;
    SignedInt x0 = e.s * scale;
    SignedInt y0 = e.t * scale;
    SignedInt step_x = beta / e.g;
    SignedInt step_y = (alpha / e.g).negated();

    Window w = window_for(x0, step_x, eq.bounds[0]);
    intersect(w, window_for(y0, step_y, eq.bounds[1]));
    if (w.empty) return {};
    // At least one step is nonzero, so the intersection is finite.
    if (!w.lo || !w.hi) throw std::logic_error("solve_two_var: unbounded window");

    std::vector<Assignment> out;
    for (SignedInt t = *w.lo; t <= *w.hi; t += SignedInt(1)) {
        SignedInt x = x0 + step_x * t;
        SignedInt y = y0 + step_y * t;
        out.push_back({x.to_int64(), y.to_int64()});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Assignment> solve_bounded(const LinearEquation& eq) {
    const std::size_t k = eq.coeffs.size();
    if (k == 0 || eq.bounds.size() != k)
        throw std::domain_error("solve_bounded: malformed equation");

    // Reachable interval of each suffix sum, for pruning.
    std::vector<SignedInt> suffix_min(k + 1), suffix_max(k + 1);
    for (std::size_t i = k; i-- > 0;) {
        SignedInt at_lo = eq.coeffs[i] * SignedInt(eq.bounds[i].lo);
        SignedInt at_hi = eq.coeffs[i] * SignedInt(eq.bounds[i].hi);
        if (at_hi < at_lo) std::swap(at_lo, at_hi);
        suffix_min[i] = suffix_min[i + 1] + at_lo;
        suffix_max[i] = suffix_max[i + 1] + at_hi;
    }

    std::vector<Assignment> out;
    Assignment current(k, 0);
    auto dfs = [&](auto&& self, std::size_t i, const SignedInt& partial) -> void {
        SignedInt need = eq.rhs - partial;
        if (need < suffix_min[i] || need > suffix_max[i]) return;
        if (i == k) {
            if (need.is_zero()) out.push_back(current);
            return;
        }
        for (int64_t v = eq.bounds[i].lo; v <= eq.bounds[i].hi; ++v) {
            current[i] = v;
            self(self, i + 1, partial + eq.coeffs[i] * SignedInt(v));
        }
    };
    dfs(dfs, 0, SignedInt(0));
    return out;  // ascending loops emit in lexicographic order already
}

DerivedEquation derive_block_equation(const Natural& a, PairKind kind, std::size_t n,
                                      const std::map<std::size_t, int>& fixed) {
    if (a.is_zero()) throw std::domain_error("derive_block_equation: a must be positive");
    if (n == 0) throw std::domain_error("derive_block_equation: need at least one digit");
    for (const auto& [pos, digit] : fixed) {
        if (pos < 1 || pos > n)
            throw std::domain_error("derive_block_equation: position out of range");
        if (digit < 0 || digit > 9)
            throw std::domain_error("derive_block_equation: digit out of range");
    }
    if (fixed.size() >= n)
        throw std::domain_error("derive_block_equation: no free position");

    auto coeff_at = [&](std::size_t j) {
        return SignedInt(a * Natural::pow10(j - 1)) - SignedInt(Natural::pow10(n - j));
    };

    SignedInt a2(a * a);
    SignedInt rhs = kind == PairKind::sum ? a2 : a2.negated();
    DerivedEquation out;
    for (std::size_t j = 1; j <= n; ++j) {
        auto it = fixed.find(j);
        if (it != fixed.end()) {
            rhs -= coeff_at(j) * SignedInt(static_cast<int64_t>(it->second));
            continue;
        }
        out.positions.push_back(j);
        out.eq.coeffs.push_back(coeff_at(j));
        bool end_digit = (j == 1 || j == n);
        out.eq.bounds.push_back(end_digit ? VarBounds{1, 9} : VarBounds{0, 9});
    }
    out.eq.rhs = std::move(rhs);

    SignedInt g_coeffs(0);
    for (const SignedInt& c : out.eq.coeffs) g_coeffs = SignedInt::gcd(g_coeffs, c);
    if (g_coeffs.is_zero()) {
        out.unsatisfiable_by_gcd = !out.eq.rhs.is_zero();
        return out;
    }
    out.unsatisfiable_by_gcd = !SignedInt::divides(g_coeffs, out.eq.rhs);
    SignedInt common = out.eq.rhs.is_zero() ? g_coeffs : SignedInt::gcd(g_coeffs, out.eq.rhs);
    if (common > SignedInt(1)) {
        for (SignedInt& c : out.eq.coeffs) c = c / common;
        out.eq.rhs = out.eq.rhs / common;
    }
    return out;
}

std::string equation_to_string(const LinearEquation& eq,
                               const std::vector<std::size_t>& positions) {
    std::string out;
    for (std::size_t idx = eq.coeffs.size(); idx-- > 0;) {
        const SignedInt& c = eq.coeffs[idx];
        if (c.is_zero()) continue;
        if (out.empty()) {
            if (c.is_negative()) out += "-";
        } else {
            out += c.is_negative() ? " - " : " + ";
        }
        out += c.magnitude().to_string();
        out += "*c";
        out += std::to_string(positions[idx]);
    }
    if (out.empty()) out = "0";
    out += " = ";
    out += eq.rhs.to_string();
    return out;
}

}  // namespace palinpair
