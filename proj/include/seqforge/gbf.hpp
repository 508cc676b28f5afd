#ifndef SEQFORGE_GBF_HPP
#define SEQFORGE_GBF_HPP

#include <algorithm>
#include <map>
#include <numeric>

#include "seqforge/gcp.hpp"

namespace seqforge {

// Generalized Boolean function f: Z_2^m -> Z_q, stored as a map from
// monomial (sorted subset of {1..m}) to its coefficient mod q. The empty
// subset holds the constant term.
class Gbf {
public:
    Gbf(int m, int q) : m_(m), q_(q) {
        if (m_ < 1) throw std::invalid_argument("variable count must be >= 1");
        if (q_ < 2 || q_ % 2 != 0)
            throw std::invalid_argument("phase modulus must be even and >= 2");
    }

    int m() const { return m_; }
    int q() const { return q_; }

    Gbf& add_term(std::vector<int> vars, int coeff) {
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        for (int v : vars)
            if (v < 1 || v > m_) throw std::invalid_argument("variable index out of range");
        int& c = coeffs_[vars];
        c = ((c + coeff) % q_ + q_) % q_;
        if (c == 0) coeffs_.erase(vars);
        return *this;
    }

    const std::map<std::vector<int>, int>& coeffs() const { return coeffs_; }

    // f evaluated at the point whose index I has x_1 as least-significant bit.
    int evaluate_at(int index) const {
        int total = 0;
        for (const auto& [vars, coeff] : coeffs_) {
            int prod = 1;
            for (int v : vars) prod *= (index >> (v - 1)) & 1;
            total += coeff * prod;
        }
        return ((total % q_) + q_) % q_;
    }

    // psi(f): the length-2^m exponent sequence (f_0, ..., f_{2^m - 1}).
    PhaseSequence evaluate() const {
        const int n = 1 << m_;
        std::vector<int> e(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) e[static_cast<std::size_t>(i)] = evaluate_at(i);
        return PhaseSequence(q_, std::move(e));
    }

    Gbf operator+(const Gbf& other) const {
        if (other.m_ != m_ || other.q_ != q_)
            throw dimension_error("Gbf sum requires matching m and q");
        Gbf out = *this;
        for (const auto& [vars, coeff] : other.coeffs_) out.add_term(vars, coeff);
        return out;
    }

    bool operator==(const Gbf& other) const {
        return m_ == other.m_ && q_ == other.q_ && coeffs_ == other.coeffs_;
    }

private:
    int m_;
    int q_;
    std::map<std::vector<int>, int> coeffs_;
};

// Quadratic-form Golay pair:
//   f = 2^{h-1} sum_i x_{pi(i)} x_{pi(i+1)} + sum_k c_k x_k
//   pair = (psi(f + theta), psi(f + 2^{h-1} x_{pi(1)} + theta'))
// The result is validated by the GcpPair constructor; parameter choices
// for which the pair fails to cancel are rejected there.
inline GcpPair quadratic_gcp(int m, int q, int h, const std::vector<int>& pi,
                             const std::vector<int>& c, int theta, int theta_prime) {
    if (h < 1) throw std::invalid_argument("h must be >= 1");
    if (static_cast<int>(pi.size()) != m)
        throw std::invalid_argument("permutation must have m entries");
    std::vector<int> sorted = pi;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < m; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i + 1)
            throw std::invalid_argument("pi must be a permutation of {1..m}");
    if (static_cast<int>(c.size()) != m)
        throw std::invalid_argument("linear coefficient vector must have m entries");

    const int quad = 1 << (h - 1);
    Gbf f(m, q);
    for (int i = 0; i + 1 < m; ++i)
        f.add_term({pi[static_cast<std::size_t>(i)], pi[static_cast<std::size_t>(i + 1)]}, quad);
    for (int k = 1; k <= m; ++k) f.add_term({k}, c[static_cast<std::size_t>(k - 1)]);

    Gbf fa = f, fb = f;
    fa.add_term({}, theta);
    fb.add_term({pi.front()}, quad).add_term({}, theta_prime);
    return {fa.evaluate(), fb.evaluate()};
}

}  // namespace seqforge

#endif
