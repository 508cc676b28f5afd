#ifndef SEQFORGE_CONFORMANCE_HPP
#define SEQFORGE_CONFORMANCE_HPP

#include <random>
#include <sstream>

#include "seqforge/matrix.hpp"
#include "seqforge/verify.hpp"

namespace seqforge {

// Randomized comparison of a shift/correlation identity: the left side is
// always a brute-force dot product or correlation sum; the right side is
// evaluated twice, once from the identity as commonly printed and once
// from a conjugate-corrected variant. For binary sequences the two
// coincide; for quaternary they can differ, and the corrected variant is
// the one the library asserts.
struct ConformanceReport {
    int lemma_id = 0;
    int trials = 0;
    int printed_agree = 0;
    int validated_agree = 0;
    std::optional<std::string> printed_counterexample;
    std::optional<std::string> validated_counterexample;
    bool asserted = false;

    bool printed_ok() const { return printed_agree == trials; }
    bool validated_ok() const { return validated_agree == trials; }
};

inline bool lemma_is_asserted(int id) {
    return id == 4 || id == 5 || id == 6 || id == 7 || id == 10;
}

namespace detail {

using cplx = std::complex<double>;

inline PhaseSequence random_sequence(std::mt19937_64& rng, int q, int len) {
    std::uniform_int_distribution<int> pick(0, q - 1);
    std::vector<int> e(static_cast<std::size_t>(len));
    for (auto& x : e) x = pick(rng);
    return PhaseSequence(q, std::move(e));
}

inline cplx cval(const CorrelationValue& v) { return v.value(); }

inline bool close(cplx x, cplx y, int len) {
    return std::abs(x - y) <= 1e-9 * len;
}

struct TrialOutcome {
    cplx lhs, printed, validated;
    std::string context;
};

inline std::string describe(const PhaseSequence& s) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < s.length(); ++i) os << (i ? "," : "") << s.exp_at(i);
    os << "]";
    return os.str();
}

inline TrialOutcome trial_lemma4(std::mt19937_64& rng, int q, int len) {
    const PhaseSequence a = random_sequence(rng, q, len);
    const PhaseSequence b = random_sequence(rng, q, len);
    std::uniform_int_distribution<int> pick(0, len - 1);
    int i = pick(rng), j = pick(rng);
    if (j > i) std::swap(i, j);
    const int kp = i - j;
    TrialOutcome t;
    t.lhs = cval(dot(shift_right(a, i), shift_right(b, j)));
    t.printed = cval(accf(b, a, len - kp)) + cval(accf(a, b, kp));
    t.validated = cval(accf(a, b, kp)) + cval(accf(a, b, kp - len));
    std::ostringstream os;
    os << "q=" << q << " L=" << len << " i=" << i << " j=" << j << " a=" << describe(a)
       << " b=" << describe(b);
    t.context = os.str();
    return t;
}

inline TrialOutcome trial_lemma5(std::mt19937_64& rng, int q, int len) {
    const PhaseSequence a = random_sequence(rng, q, len);
    const PhaseSequence b = random_sequence(rng, q, len);
    std::uniform_int_distribution<int> pick(0, len - 1);
    int i = pick(rng), j = pick(rng);
    if (i > j) std::swap(i, j);
    const int kp = j - i;
    TrialOutcome t;
    t.lhs = cval(dot(shift_right(a, i), shift_right(b, j)));
    t.printed = cval(accf(b, a, kp)) + cval(accf(a, b, len - kp));
    t.validated = cval(accf(a, b, -kp)) + cval(accf(a, b, len - kp));
    std::ostringstream os;
    os << "q=" << q << " L=" << len << " i=" << i << " j=" << j << " a=" << describe(a)
       << " b=" << describe(b);
    t.context = os.str();
    return t;
}

inline TrialOutcome trial_lemma6(std::mt19937_64& rng, int q, int len) {
    const PhaseSequence a = random_sequence(rng, q, len);
    std::uniform_int_distribution<int> pick(1, len);
    int i = pick(rng), j = pick(rng);
    if (i > j) std::swap(i, j);
    const int kp = j - i;
    TrialOutcome t;
    t.lhs = cval(dot(shift_forward(a, i), shift_forward(a, j)));
    if (i == j) {
        t.printed = t.validated = static_cast<double>(len);
    } else {
        t.printed = cval(aacf(a, kp)) + cval(aacf(a, len - kp));
        t.validated = cval(aacf(a, kp)) + std::conj(cval(aacf(a, len - kp)));
    }
    std::ostringstream os;
    os << "q=" << q << " L=" << len << " i=" << i << " j=" << j << " a=" << describe(a);
    t.context = os.str();
    return t;
}

inline TrialOutcome trial_lemma7(std::mt19937_64& rng, int q, int len) {
    const PhaseSequence a = random_sequence(rng, q, len);
    std::uniform_int_distribution<int> pick_k(0, len - 1);
    const int k = pick_k(rng);
    std::uniform_int_distribution<int> pick_l(0, len - 1 - k);
    const int lambda = pick_l(rng);
    const SequenceMatrix rows = truncate_columns(circulant(a), k);
    TrialOutcome t;
    t.lhs = cval(auto_sum(rows, lambda));
    const double scale = len - lambda - k;
    t.printed = scale * (cval(aacf(a, lambda)) + cval(aacf(a, len - lambda)));
    t.validated =
        scale * (std::conj(cval(aacf(a, lambda))) + cval(aacf(a, len - lambda)));
    std::ostringstream os;
    os << "q=" << q << " n=" << len << " k=" << k << " lambda=" << lambda
       << " a=" << describe(a);
    t.context = os.str();
    return t;
}

inline TrialOutcome trial_lemma8(std::mt19937_64& rng, int q, int n) {
    const PhaseSequence a = random_sequence(rng, q, n);
    const PhaseSequence b = random_sequence(rng, q, n);
    std::uniform_int_distribution<int> pick_k(0, 2 * n - 2);
    const int k = pick_k(rng);
    const int rowlen = 2 * n - k;
    std::uniform_int_distribution<int> pick_l(0, rowlen - 1);
    const int lambda = pick_l(rng);

    std::vector<PhaseSequence> rows;
    for (int i = 1; i <= n; ++i)
        rows.push_back(shift_forward(a, i).concat(shift_forward(b, i)).truncated(rowlen));
    const SequenceMatrix z(std::move(rows));

    const auto A = [&](const PhaseSequence& s, int l) { return cval(aacf(s, l)); };
    const auto C = [&](const PhaseSequence& x, const PhaseSequence& y, int l) {
        return cval(accf(x, y, l));
    };
    const auto mod_n = [&](int x) { return ((x % n) + n) % n; };

    TrialOutcome t;
    t.lhs = cval(auto_sum(z, lambda));
    if (k <= n - 1) {
        if (lambda <= n - 1) {
            t.printed = double(n - lambda) * (A(a, lambda) + A(a, n - lambda)) +
                        double(n - lambda - k) * (A(b, lambda) + A(b, n - lambda)) +
                        double(lambda) * (C(a, b, lambda) + C(a, b, n - lambda));
            t.validated =
                double(n - lambda) * (std::conj(A(a, lambda)) + A(a, n - lambda)) +
                double(std::max(0, n - lambda - k)) *
                    (std::conj(A(b, lambda)) + A(b, n - lambda)) +
                double(std::min(lambda, n - k)) * (C(a, b, -lambda) + C(a, b, n - lambda));
        } else {
            const int mu = lambda - n;
            t.printed = double(lambda - k) *
                        (A(a, mod_n(lambda)) + A(a, mod_n(n - lambda)));
            t.validated = double(2 * n - k - lambda) * (C(a, b, -mu) + C(a, b, n - mu));
        }
    } else {
        t.printed = double(mod_n(lambda - k)) * (A(a, lambda) + A(a, n - lambda));
        t.validated = lambda <= 2 * n - k - 1
                          ? double(2 * n - k - lambda) *
                                (std::conj(A(a, lambda)) + A(a, n - lambda))
                          : cplx{};
    }
    std::ostringstream os;
    os << "q=" << q << " n=" << n << " k=" << k << " lambda=" << lambda
       << " a=" << describe(a) << " b=" << describe(b);
    t.context = os.str();
    return t;
}

inline TrialOutcome trial_lemma9(std::mt19937_64& rng, int q, int len) {
    const PhaseSequence r1 = random_sequence(rng, q, len);
    const PhaseSequence r2 = random_sequence(rng, q, len);
    std::uniform_int_distribution<int> pick_k(0, len - 1);
    const int k = pick_k(rng);
    const PhaseSequence big_a = r1.concat(r1.truncated(len - k).negated());
    const PhaseSequence big_b = r2.concat(r2.truncated(len - k).negated());
    std::uniform_int_distribution<int> pick_l(0, 2 * len - k - 1);
    const int lambda = pick_l(rng);

    const auto C = [&](const PhaseSequence& x, const PhaseSequence& y, int l) {
        return cval(accf(x, y, l));
    };
    const auto head = [](const PhaseSequence& s, int m) { return s.truncated(m); };

    TrialOutcome t;
    t.lhs = cval(accf(big_a, big_b, lambda));
    if (lambda <= len - k - 1) {
        t.printed = C(r1, r2, lambda) + C(head(r1, len - k), head(r2, len - k), lambda) -
                    C(r2, r1, len - lambda);
        t.validated = C(r1, r2, lambda) +
                      C(head(r1, len - k), head(r2, len - k), lambda) -
                      C(r1, r2, lambda - len);
    } else if (lambda <= len - 1) {
        t.printed = C(r1, r2, lambda) -
                    C(head(r2, len - k), head(r1, len - k), len - lambda);
        const int m = 2 * len - k - lambda;
        t.validated = C(r1, r2, lambda) - C(head(r1, m), head(r2, m), -(len - lambda));
    } else {
        const int m = 2 * len - k - lambda;
        t.printed = -C(head(r1, m), head(r2, m), lambda % len);
        t.validated = -C(head(r1, len - k), head(r2, len - k), lambda - len);
    }
    std::ostringstream os;
    os << "q=" << q << " L=" << len << " k=" << k << " lambda=" << lambda
       << " R1=" << describe(r1) << " R2=" << describe(r2);
    t.context = os.str();
    return t;
}

inline TrialOutcome trial_lemma10(std::mt19937_64& rng, int q, int len) {
    const PhaseSequence a = random_sequence(rng, q, len);
    const PhaseSequence c = random_sequence(rng, q, len);
    std::uniform_int_distribution<int> pick_i(1, len);
    const int i = pick_i(rng);
    std::uniform_int_distribution<int> pick_t(1, len);
    const int tshift = pick_t(rng);
    const int kp = ((tshift - i) % len + len) % len;

    TrialOutcome t;
    t.lhs = cval(dot(shift_forward(a, i), shift_forward(c, tshift)));
    t.printed = cval(accf(a, c, kp)) + cval(accf(c, a, len - kp));
    t.validated = cval(accf(a, c, kp)) + std::conj(cval(accf(c, a, len - kp)));
    std::ostringstream os;
    os << "q=" << q << " L=" << len << " i=" << i << " j=" << len + tshift
       << " a=" << describe(a) << " c=" << describe(c);
    t.context = os.str();
    return t;
}

}  // namespace detail

inline ConformanceReport lemma_conformance(int lemma_id, int trials, std::uint64_t seed) {
    if (lemma_id < 4 || lemma_id > 10)
        throw std::invalid_argument("lemma id must be in 4..10");
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");

    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(lemma_id));
    ConformanceReport rep;
    rep.lemma_id = lemma_id;
    rep.trials = trials;
    rep.asserted = lemma_is_asserted(lemma_id);

    const int max_len = (lemma_id == 8 || lemma_id == 9) ? 24 : 64;
    std::uniform_int_distribution<int> pick_len(2, max_len);
    for (int t = 0; t < trials; ++t) {
        const int q = (t % 2 == 0) ? 2 : 4;
        const int len = pick_len(rng);
        detail::TrialOutcome out;
        switch (lemma_id) {
            case 4: out = detail::trial_lemma4(rng, q, len); break;
            case 5: out = detail::trial_lemma5(rng, q, len); break;
            case 6: out = detail::trial_lemma6(rng, q, len); break;
            case 7: out = detail::trial_lemma7(rng, q, len); break;
            case 8: out = detail::trial_lemma8(rng, q, len); break;
            case 9: out = detail::trial_lemma9(rng, q, len); break;
            default: out = detail::trial_lemma10(rng, q, len); break;
        }
        const bool p_ok = detail::close(out.lhs, out.printed, 2 * len);
        const bool v_ok = detail::close(out.lhs, out.validated, 2 * len);
        rep.printed_agree += p_ok;
        rep.validated_agree += v_ok;
        const auto note = [&](std::optional<std::string>& slot, detail::cplx rhs) {
            if (slot) return;
            std::ostringstream os;
            os << out.context << " lhs=(" << out.lhs.real() << "," << out.lhs.imag()
               << ") rhs=(" << rhs.real() << "," << rhs.imag() << ")";
            slot = os.str();
        };
        if (!p_ok) note(rep.printed_counterexample, out.printed);
        if (!v_ok) note(rep.validated_counterexample, out.validated);
    }
    return rep;
}

}  // namespace seqforge

#endif
