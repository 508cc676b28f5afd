#ifndef SEQFORGE_CORRELATION_HPP
#define SEQFORGE_CORRELATION_HPP

#include <cstdint>

#include "seqforge/core.hpp"

namespace seqforge {

namespace detail {

// Accumulates xi^d exactly for q in {2, 4}.
inline void add_unit_exact(int q, int d, std::int64_t& re, std::int64_t& im) {
    if (q == 2) {
        re += (d == 0) ? 1 : -1;
        return;
    }
    switch (d) {
        case 0: ++re; break;
        case 1: ++im; break;
        case 2: --re; break;
        default: --im; break;
    }
}

inline bool exact_modulus(int q) { return q == 2 || q == 4; }

}  // namespace detail

// Aperiodic cross-correlation C(a,b)(lambda):
//   sum_i a_i * conj(b_{i+lambda})      for 0 <= lambda <= L-1
//   sum_i a_{i+|lambda|} * conj(b_i)    for -L+1 <= lambda <= -1
//   0                                   for |lambda| >= L
// so that C(a,b)(-lambda) = conj(C(b,a)(lambda)).
inline CorrelationValue accf(const PhaseSequence& a, const PhaseSequence& b, int lambda) {
    if (a.length() != b.length() || a.q() != b.q())
        throw dimension_error("accf requires equal length and modulus");
    const int L = a.length();
    const int q = a.q();
    CorrelationValue out;
    out.exact = detail::exact_modulus(q);
    out.tol = out.exact ? 0.0 : 1e-9 * L;
    if (lambda >= L || lambda <= -L) return out;

    const int shift = lambda >= 0 ? lambda : -lambda;
    const int terms = L - shift;
    if (out.exact) {
        std::int64_t re = 0, im = 0;
        for (int i = 0; i < terms; ++i) {
            const int d = lambda >= 0
                              ? ((a.exp_at(i) - b.exp_at(i + shift)) % q + q) % q
                              : ((a.exp_at(i + shift) - b.exp_at(i)) % q + q) % q;
            detail::add_unit_exact(q, d, re, im);
        }
        out.re = static_cast<double>(re);
        out.im = static_cast<double>(im);
    } else {
        std::complex<double> s = 0.0;
        for (int i = 0; i < terms; ++i) {
            const int d = lambda >= 0
                              ? ((a.exp_at(i) - b.exp_at(i + shift)) % q + q) % q
                              : ((a.exp_at(i + shift) - b.exp_at(i)) % q + q) % q;
            const double ang = 2.0 * std::numbers::pi * d / q;
            s += std::complex<double>(std::cos(ang), std::sin(ang));
        }
        out.re = s.real();
        out.im = s.imag();
    }
    return out;
}

// Floating-point route over evaluated entries; used to cross-check the
// exact Gaussian-integer path.
inline std::complex<double> accf_float(const PhaseSequence& a, const PhaseSequence& b,
                                       int lambda) {
    if (a.length() != b.length() || a.q() != b.q())
        throw dimension_error("accf requires equal length and modulus");
    const int L = a.length();
    if (lambda >= L || lambda <= -L) return 0.0;
    const int shift = lambda >= 0 ? lambda : -lambda;
    std::complex<double> s = 0.0;
    for (int i = 0; i < L - shift; ++i) {
        s += lambda >= 0 ? a.value_at(i) * std::conj(b.value_at(i + shift))
                         : a.value_at(i + shift) * std::conj(b.value_at(i));
    }
    return s;
}

inline CorrelationValue aacf(const PhaseSequence& a, int lambda) { return accf(a, a, lambda); }

// sum_t x_t * conj(y_t), i.e. the lambda = 0 correlation.
inline CorrelationValue dot(const PhaseSequence& x, const PhaseSequence& y) {
    return accf(x, y, 0);
}

// Kronecker product of plain vectors; the Turyn half-sum vectors live in
// {-1, 0, 1}, so this works on integers rather than phase exponents.
template <typename T>
std::vector<T> kronecker(const std::vector<T>& a, const std::vector<T>& b) {
    std::vector<T> out;
    out.reserve(a.size() * b.size());
    for (const T& x : a)
        for (const T& y : b) out.push_back(x * y);
    return out;
}

}  // namespace seqforge

#endif
