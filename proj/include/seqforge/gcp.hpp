#ifndef SEQFORGE_GCP_HPP
#define SEQFORGE_GCP_HPP

#include <array>
#include <sstream>

#include "seqforge/correlation.hpp"
#include "seqforge/core.hpp"

namespace seqforge {

namespace detail {

inline bool pair_is_complementary(const PhaseSequence& a, const PhaseSequence& b) {
    if (a.length() != b.length() || a.q() != b.q()) return false;
    for (int lambda = 1; lambda < a.length(); ++lambda) {
        CorrelationValue s = aacf(a, lambda);
        s += aacf(b, lambda);
        if (!s.is_zero()) return false;
    }
    return true;
}

}  // namespace detail

// A Golay complementary pair; the defining cancellation
// A(a)(lambda) + A(b)(lambda) = 0 for lambda != 0 is checked on construction.
class GcpPair {
public:
    GcpPair(PhaseSequence a, PhaseSequence b) : a_(std::move(a)), b_(std::move(b)) {
        if (a_.length() != b_.length() || a_.q() != b_.q())
            throw dimension_error("GCP requires equal length and modulus");
        if (!detail::pair_is_complementary(a_, b_))
            throw construction_error("sequences do not form a Golay complementary pair");
    }

    const PhaseSequence& a() const { return a_; }
    const PhaseSequence& b() const { return b_; }
    int length() const { return a_.length(); }
    int q() const { return a_.q(); }

private:
    PhaseSequence a_, b_;
};

// Embedded binary kernels of lengths 2, 10 and 26.
inline GcpPair seed_pair(int length) {
    static const std::vector<int> a2{1, 1}, b2{1, -1};
    static const std::vector<int> a10{1, 1, -1, 1, -1, 1, -1, -1, 1, 1};
    static const std::vector<int> b10{1, 1, -1, 1, 1, 1, 1, 1, -1, -1};
    static const std::vector<int> a26{1, 1, 1,  1,  -1, 1, 1,  -1, -1, 1, -1, 1,  -1,
                                      1, -1, -1, 1,  -1, 1, 1,  1,  -1, -1, 1, 1,  1};
    static const std::vector<int> b26{1, 1, 1, 1, -1, 1, 1,  -1, -1, 1,  -1, 1,  1,
                                      1, 1, 1, -1, 1, -1, -1, -1, 1,  1,  -1, -1, -1};
    switch (length) {
        case 2: return {PhaseSequence::from_pm1(a2), PhaseSequence::from_pm1(b2)};
        case 10: return {PhaseSequence::from_pm1(a10), PhaseSequence::from_pm1(b10)};
        case 26: return {PhaseSequence::from_pm1(a26), PhaseSequence::from_pm1(b26)};
        default: throw std::invalid_argument("seed pairs exist for lengths 2, 10 and 26 only");
    }
}

// (c, d) = (reverse(conj(b)), -reverse(conj(a))), a complementary mate:
// C(a,c)(lambda) + C(b,d)(lambda) = 0 for all lambda != 0.
inline GcpPair complementary_mate(const GcpPair& p) {
    return {p.b().conjugated().reversed(), p.a().conjugated().reversed().negated()};
}

enum class TurynVariant {
    printed,   // e = a(x)(c+d)/2 - b*(x)(c-d)/2,          f = b(x)(c+d)/2 + a*(x)(c-d)/2
    reversed,  // e = a(x)(c+d)/2 - rev(b*)(x)(c-d)/2,     f = b(x)(c+d)/2 + rev(a*)(x)(c-d)/2
};

// Composes two binary GCPs into one of the product length. The composed
// pair is re-validated as a GCP; failure is a hard error.
inline GcpPair turyn_compose(const GcpPair& p1, const GcpPair& p2,
                             TurynVariant variant = TurynVariant::reversed) {
    if (p1.q() != 2 || p2.q() != 2)
        throw std::invalid_argument("Turyn composition operates on binary pairs");
    const std::vector<int> a = p1.a().to_pm1(), b = p1.b().to_pm1();
    const std::vector<int> c = p2.a().to_pm1(), d = p2.b().to_pm1();
    const int n = static_cast<int>(c.size());

    std::vector<int> half_sum(c.size()), half_diff(c.size());
    for (int i = 0; i < n; ++i) {
        half_sum[static_cast<std::size_t>(i)] = (c[static_cast<std::size_t>(i)] + d[static_cast<std::size_t>(i)]) / 2;
        half_diff[static_cast<std::size_t>(i)] = (c[static_cast<std::size_t>(i)] - d[static_cast<std::size_t>(i)]) / 2;
    }

    std::vector<int> b_used = b, a_used = a;
    if (variant == TurynVariant::reversed) {
        b_used.assign(b.rbegin(), b.rend());
        a_used.assign(a.rbegin(), a.rend());
    }

    const auto e1 = kronecker(a, half_sum);
    const auto e2 = kronecker(b_used, half_diff);
    const auto f1 = kronecker(b, half_sum);
    const auto f2 = kronecker(a_used, half_diff);

    std::vector<int> e(e1.size()), f(f1.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = e1[i] - e2[i];
        f[i] = f1[i] + f2[i];
    }
    // entries must come back unimodular before wrapping as phases
    for (std::size_t i = 0; i < e.size(); ++i)
        if ((e[i] != 1 && e[i] != -1) || (f[i] != 1 && f[i] != -1))
            throw construction_error("Turyn composition produced a non-unimodular entry");
    return {PhaseSequence::from_pm1(e), PhaseSequence::from_pm1(f)};
}

inline bool admissible_gcp_length(long long n) {
    if (n < 1) return false;
    while (n % 26 == 0) n /= 26;
    while (n % 10 == 0) n /= 10;
    while (n % 2 == 0) n /= 2;
    return n == 1;
}

// Binary GCP of any length N = 2^a * 10^b * 26^c, composed greedily from
// the largest seed factors down.
inline GcpPair gcp_for(long long n) {
    if (!admissible_gcp_length(n)) {
        std::ostringstream msg;
        msg << "no Golay pair of length " << n
            << "; admissible lengths are 2^a * 10^b * 26^c (a, b, c >= 0)";
        throw unsupported_length_error(msg.str());
    }
    if (n == 1)
        return {PhaseSequence::from_pm1({1}), PhaseSequence::from_pm1({1})};

    std::vector<int> factors;
    long long rest = n;
    while (rest % 26 == 0) { factors.push_back(26); rest /= 26; }
    while (rest % 10 == 0) { factors.push_back(10); rest /= 10; }
    while (rest % 2 == 0) { factors.push_back(2); rest /= 2; }

    GcpPair acc = seed_pair(factors.front());
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = turyn_compose(acc, seed_pair(factors[i]));
    return acc;
}

}  // namespace seqforge

#endif
