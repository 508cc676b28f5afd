#ifndef SEQFORGE_VERIFY_HPP
#define SEQFORGE_VERIFY_HPP

#include <optional>
#include <string>

#include "seqforge/matrix.hpp"

namespace seqforge {

// First violated condition of a failed check.
struct Witness {
    std::string condition;
    int lambda = 0;
    int p = -1;        // code index, -1 when not applicable
    int p_prime = -1;  // second code index, -1 when not applicable
    double re = 0.0;
    double im = 0.0;
};

struct VerifyReport {
    std::string property;
    bool holds = true;
    std::optional<Witness> witness;
    std::optional<int> max_zone;
    std::optional<bool> optimal;

    static VerifyReport pass(std::string prop) { return {std::move(prop), true, {}, {}, {}}; }

    static VerifyReport fail(std::string prop, Witness w) {
        VerifyReport r{std::move(prop), false, {}, {}, {}};
        r.witness = std::move(w);
        return r;
    }
};

namespace detail {

// sum_j C(S.row_j, T.row_{(j+1) mod M})(lambda), the inter-code analogue
// of the adjacent cross sum.
inline CorrelationValue cross_sum_adjacent_between(const SequenceMatrix& s,
                                                   const SequenceMatrix& t, int lambda) {
    const int m = s.row_count();
    CorrelationValue acc = accf(s.row(0), t.row(1 % m), lambda);
    for (int j = 1; j < m; ++j) acc += accf(s.row(j), t.row((j + 1) % m), lambda);
    return acc;
}

inline Witness witness_of(std::string condition, int lambda, const CorrelationValue& v,
                          int p = -1, int p_prime = -1) {
    return {std::move(condition), lambda, p, p_prime, v.re, v.im};
}

}  // namespace detail

// M * M^H = n * I_n; the conjugate transpose reduces to the plain
// transpose for q = 2.
inline VerifyReport is_hadamard(const SequenceMatrix& m) {
    if (m.row_count() != m.col_count())
        throw dimension_error("Hadamard check requires a square matrix");
    for (int i = 0; i < m.row_count(); ++i) {
        for (int j = 0; j < m.row_count(); ++j) {
            const CorrelationValue d = dot(m.row(i), m.row(j));
            const bool ok = (i == j) ? d.equals(m.col_count(), 0.0) : d.is_zero();
            if (!ok)
                return VerifyReport::fail(
                    "hadamard", detail::witness_of("row_gram", 0, d, i, j));
        }
    }
    return VerifyReport::pass("hadamard");
}

// Golay complementary set: auto sums vanish at every nonzero shift.
inline VerifyReport is_gcs(const SequenceMatrix& m) {
    for (int lambda = 1; lambda < m.col_count(); ++lambda) {
        const CorrelationValue v = auto_sum(m, lambda);
        if (!v.is_zero())
            return VerifyReport::fail("gcs", detail::witness_of("auto_sum", lambda, v));
    }
    return VerifyReport::pass("gcs");
}

inline VerifyReport is_gcp(const PhaseSequence& a, const PhaseSequence& b) {
    if (a.length() != b.length() || a.q() != b.q())
        throw dimension_error("GCP check requires equal length and modulus");
    for (int lambda = 1; lambda < a.length(); ++lambda) {
        CorrelationValue v = aacf(a, lambda);
        v += aacf(b, lambda);
        if (!v.is_zero())
            return VerifyReport::fail("gcp", detail::witness_of("aacf_sum", lambda, v));
    }
    return VerifyReport::pass("gcp");
}

// (c, d) is a complementary mate of (a, b):
// C(a,c)(lambda) + C(b,d)(lambda) = 0 for every lambda != 0.
inline VerifyReport is_mate(const PhaseSequence& a, const PhaseSequence& b,
                            const PhaseSequence& c, const PhaseSequence& d) {
    if (a.length() != b.length() || a.length() != c.length() || a.length() != d.length() ||
        a.q() != b.q() || a.q() != c.q() || a.q() != d.q())
        throw dimension_error("mate check requires equal lengths and moduli");
    const int L = a.length();
    for (int lambda = -(L - 1); lambda <= L - 1; ++lambda) {
        if (lambda == 0) continue;
        CorrelationValue v = accf(a, c, lambda);
        v += accf(b, d, lambda);
        if (!v.is_zero())
            return VerifyReport::fail("mate", detail::witness_of("accf_sum", lambda, v));
    }
    return VerifyReport::pass("mate");
}

// Largest Z such that auto sums vanish on T_1 = {1..Z} and T_2 = {L-Z..L-1}
// and adjacent cross sums vanish on T_2. Conditions only accumulate as Z
// grows, so the scan walks upward and stops at the first violation. Zones
// with Z > L/2 overlap and are tested literally. When min_zone is given,
// holds reflects max_zone >= min_zone.
inline VerifyReport czcs_max_zone(const SequenceMatrix& m,
                                  std::optional<int> min_zone = std::nullopt) {
    const int L = m.col_count();
    int zone = 0;
    std::optional<Witness> first_violation;
    for (int z = 1; z <= L - 1; ++z) {
        const CorrelationValue front = auto_sum(m, z);
        if (!front.is_zero()) {
            first_violation = detail::witness_of("auto_sum_front", z, front);
            break;
        }
        const CorrelationValue tail = auto_sum(m, L - z);
        if (!tail.is_zero()) {
            first_violation = detail::witness_of("auto_sum_tail", L - z, tail);
            break;
        }
        const CorrelationValue cross = cross_sum_adjacent(m, L - z);
        if (!cross.is_zero()) {
            first_violation = detail::witness_of("cross_sum_adjacent", L - z, cross);
            break;
        }
        zone = z;
    }
    VerifyReport r = VerifyReport::pass("czcs");
    r.max_zone = zone;
    if (min_zone && zone < *min_zone) {
        r.holds = false;
        r.witness = first_violation;
    }
    return r;
}

// Complete complementary code: pointwise cross sums peak at ML only for
// p = p' at lambda = 0 and vanish everywhere else.
inline VerifyReport is_ccc(const CodeSet& s) {
    const int peak = s.flock_size() * s.length();
    for (int p = 0; p < s.code_count(); ++p) {
        for (int pp = 0; pp < s.code_count(); ++pp) {
            for (int lambda = 0; lambda < s.length(); ++lambda) {
                const CorrelationValue v =
                    cross_sum_pointwise(s.codes[static_cast<std::size_t>(p)],
                                        s.codes[static_cast<std::size_t>(pp)], lambda);
                const bool ok = (p == pp && lambda == 0) ? v.equals(peak, 0.0) : v.is_zero();
                if (!ok)
                    return VerifyReport::fail(
                        "ccc", detail::witness_of("cross_sum_pointwise", lambda, v, p, pp));
            }
        }
    }
    return VerifyReport::pass("ccc");
}

// Cross Z-complementary sequence set with zone width Z:
//   within each code, auto sums vanish on (T_1 u T_2) n {1..L-1} and
//   adjacent cross sums vanish on T_2;
//   across distinct codes, pointwise sums vanish on {0} u T_1 u T_2 and
//   adjacent sums vanish on T_2.
// The optimality flag records Z == NL / (2M).
inline VerifyReport is_czcss(const CodeSet& s, int zone) {
    const int L = s.length();
    if (zone < 0 || zone > L) throw std::out_of_range("zone width out of range");

    std::vector<int> front, tail, zero_front_tail;
    for (int z = 1; z <= zone && z <= L - 1; ++z) front.push_back(z);
    for (int lam = L - zone; lam <= L - 1; ++lam)
        if (lam >= 1) tail.push_back(lam);
    zero_front_tail.push_back(0);
    zero_front_tail.insert(zero_front_tail.end(), front.begin(), front.end());
    for (int lam : tail)
        if (lam > zone) zero_front_tail.push_back(lam);

    VerifyReport r = VerifyReport::pass("czcss");
    r.optimal = 2LL * s.flock_size() * zone == 1LL * s.code_count() * L;

    for (int p = 0; p < s.code_count(); ++p) {
        const SequenceMatrix& code = s.codes[static_cast<std::size_t>(p)];
        for (int lam : front) {
            const CorrelationValue v = auto_sum(code, lam);
            if (!v.is_zero())
                return VerifyReport::fail("czcss",
                                          detail::witness_of("auto_sum_front", lam, v, p, p));
        }
        for (int lam : tail) {
            const CorrelationValue v = auto_sum(code, lam);
            if (!v.is_zero())
                return VerifyReport::fail("czcss",
                                          detail::witness_of("auto_sum_tail", lam, v, p, p));
            const CorrelationValue c = cross_sum_adjacent(code, lam);
            if (!c.is_zero())
                return VerifyReport::fail(
                    "czcss", detail::witness_of("cross_sum_adjacent", lam, c, p, p));
        }
    }
    for (int p = 0; p < s.code_count(); ++p) {
        for (int pp = 0; pp < s.code_count(); ++pp) {
            if (p == pp) continue;
            const SequenceMatrix& cp = s.codes[static_cast<std::size_t>(p)];
            const SequenceMatrix& cq = s.codes[static_cast<std::size_t>(pp)];
            for (int lam : zero_front_tail) {
                const CorrelationValue v = cross_sum_pointwise(cp, cq, lam);
                if (!v.is_zero())
                    return VerifyReport::fail(
                        "czcss", detail::witness_of("cross_sum_pointwise", lam, v, p, pp));
            }
            for (int lam : tail) {
                const CorrelationValue v = detail::cross_sum_adjacent_between(cp, cq, lam);
                if (!v.is_zero())
                    return VerifyReport::fail(
                        "czcss",
                        detail::witness_of("cross_sum_adjacent_between", lam, v, p, pp));
            }
        }
    }
    return r;
}

enum class GcsType { Type1, Type2, NotGcs };

// Type-1: square GCS that is also Hadamard. Type-2: square GCS that is not.
inline GcsType classify_gcs(const SequenceMatrix& m) {
    if (m.row_count() != m.col_count())
        throw dimension_error("classification requires a square matrix");
    if (!is_gcs(m).holds) return GcsType::NotGcs;
    return is_hadamard(m).holds ? GcsType::Type1 : GcsType::Type2;
}

inline const char* to_string(GcsType t) {
    switch (t) {
        case GcsType::Type1: return "type1";
        case GcsType::Type2: return "type2";
        default: return "not_gcs";
    }
}

// Every Hadamard matrix is a GCS; exposed as a named check.
inline VerifyReport hadamard_rows_are_gcs(const SequenceMatrix& m) {
    if (!is_hadamard(m).holds)
        throw std::invalid_argument("input must be a Hadamard matrix");
    return is_gcs(m);
}

}  // namespace seqforge

#endif
