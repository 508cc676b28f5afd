#ifndef SEQFORGE_CORE_HPP
#define SEQFORGE_CORE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqforge {

// Thrown when two operands disagree on length or phase modulus.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Thrown when a construction's oracle-checked postcondition does not hold.
struct construction_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown for lengths outside the admissible set 2^a * 10^b * 26^c.
struct unsupported_length_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A length-L vector of Z_q phase exponents. Entry i evaluates to
// xi^exps[i] with xi = e^{2*pi*i/q}; for q = 2 this is exactly +/-1.
class PhaseSequence {
public:
    PhaseSequence(int q, std::vector<int> exps) : q_(q), exps_(std::move(exps)) {
        if (q_ < 2 || q_ % 2 != 0)
            throw std::invalid_argument("phase modulus must be even and >= 2");
        if (exps_.empty())
            throw std::invalid_argument("sequence must be non-empty");
        for (auto& e : exps_) e = ((e % q_) + q_) % q_;
    }

    // +1 -> exponent 0, -1 -> exponent 1, with q = 2.
    static PhaseSequence from_pm1(const std::vector<int>& signs) {
        std::vector<int> exps;
        exps.reserve(signs.size());
        for (int s : signs) {
            if (s != 1 && s != -1)
                throw std::invalid_argument("entries must be +1 or -1");
            exps.push_back(s == 1 ? 0 : 1);
        }
        return PhaseSequence(2, std::move(exps));
    }

    int q() const { return q_; }
    int length() const { return static_cast<int>(exps_.size()); }
    int exp_at(int i) const { return exps_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exps() const { return exps_; }

    std::complex<double> value_at(int i) const {
        const double ang = 2.0 * std::numbers::pi * exp_at(i) / q_;
        return {std::cos(ang), std::sin(ang)};
    }

    std::vector<std::complex<double>> values() const {
        std::vector<std::complex<double>> v;
        v.reserve(exps_.size());
        for (int i = 0; i < length(); ++i) v.push_back(value_at(i));
        return v;
    }

    // q == 2 only.
    std::vector<int> to_pm1() const {
        if (q_ != 2) throw std::logic_error("to_pm1 requires q = 2");
        std::vector<int> v;
        v.reserve(exps_.size());
        for (int e : exps_) v.push_back(e == 0 ? 1 : -1);
        return v;
    }

    PhaseSequence conjugated() const {
        std::vector<int> e = exps_;
        for (auto& x : e) x = (q_ - x) % q_;
        return PhaseSequence(q_, std::move(e));
    }

    PhaseSequence reversed() const {
        return PhaseSequence(q_, std::vector<int>(exps_.rbegin(), exps_.rend()));
    }

    PhaseSequence negated() const {
        std::vector<int> e = exps_;
        for (auto& x : e) x = (x + q_ / 2) % q_;
        return PhaseSequence(q_, std::move(e));
    }

    PhaseSequence truncated(int keep) const {
        if (keep < 1 || keep > length())
            throw std::out_of_range("truncation length out of range");
        return PhaseSequence(q_, std::vector<int>(exps_.begin(), exps_.begin() + keep));
    }

    // Elementwise product: exponents add mod q.
    PhaseSequence elementwise(const PhaseSequence& other) const {
        if (other.q_ != q_ || other.length() != length())
            throw dimension_error("elementwise product requires matching shape and modulus");
        std::vector<int> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            e[i] = (exps_[i] + other.exps_[i]) % q_;
        return PhaseSequence(q_, std::move(e));
    }

    PhaseSequence concat(const PhaseSequence& tail) const {
        if (tail.q_ != q_)
            throw dimension_error("concat requires matching modulus");
        std::vector<int> e = exps_;
        e.insert(e.end(), tail.exps_.begin(), tail.exps_.end());
        return PhaseSequence(q_, std::move(e));
    }

    bool operator==(const PhaseSequence& other) const {
        return q_ == other.q_ && exps_ == other.exps_;
    }

private:
    int q_;
    std::vector<int> exps_;
};

// An aperiodic correlation sum. For q in {2, 4} the value is an exact
// Gaussian integer; otherwise it is a complex double with a zero test
// of tolerance 1e-9 * L.
struct CorrelationValue {
    double re = 0.0;
    double im = 0.0;
    bool exact = true;
    double tol = 0.0;

    bool is_zero() const {
        if (exact) return re == 0.0 && im == 0.0;
        return std::abs(re) + std::abs(im) <= tol;
    }

    bool equals(double r, double i) const {
        if (exact) return re == r && im == i;
        return std::abs(re - r) + std::abs(im - i) <= tol;
    }

    std::complex<double> value() const { return {re, im}; }

    CorrelationValue& operator+=(const CorrelationValue& o) {
        re += o.re;
        im += o.im;
        exact = exact && o.exact;
        tol = std::max(tol, o.tol);
        return *this;
    }
};

}  // namespace seqforge

#endif
