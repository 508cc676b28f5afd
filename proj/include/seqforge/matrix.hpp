#ifndef SEQFORGE_MATRIX_HPP
#define SEQFORGE_MATRIX_HPP

#include "seqforge/correlation.hpp"
#include "seqforge/core.hpp"

namespace seqforge {

// k-th forward cyclic shift T^k (1 <= k <= L):
// T^k(v) = (v_{k-1}, v_{k-2}, ..., v_0, v_{L-1}, ..., v_k).
inline PhaseSequence shift_forward(const PhaseSequence& v, int k) {
    const int n = v.length();
    if (k < 1 || k > n) throw std::out_of_range("shift_forward requires 1 <= k <= L");
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = v.exp_at(((k - 1 - j) % n + n) % n);
    return PhaseSequence(v.q(), std::move(e));
}

// k-fold right rotation T_1^k (0 <= k <= L-1); T_1^0 is the identity.
inline PhaseSequence shift_right(const PhaseSequence& v, int k) {
    const int n = v.length();
    if (k < 0 || k > n - 1) throw std::out_of_range("shift_right requires 0 <= k <= L-1");
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = v.exp_at(((j - k) % n + n) % n);
    return PhaseSequence(v.q(), std::move(e));
}

// M rows of equal length over a shared phase modulus.
class SequenceMatrix {
public:
    explicit SequenceMatrix(std::vector<PhaseSequence> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) throw std::invalid_argument("matrix must have at least one row");
        for (const auto& r : rows_)
            if (r.q() != rows_.front().q() || r.length() != rows_.front().length())
                throw dimension_error("all rows must share length and modulus");
    }

    int q() const { return rows_.front().q(); }
    int row_count() const { return static_cast<int>(rows_.size()); }
    int col_count() const { return rows_.front().length(); }
    const PhaseSequence& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
    const std::vector<PhaseSequence>& rows() const { return rows_; }

    bool operator==(const SequenceMatrix& other) const { return rows_ == other.rows_; }

private:
    std::vector<PhaseSequence> rows_;
};

// Cir(a): row i (1-indexed) is T^i(a); entry [i][j] = a_{(i-j) mod L}.
inline SequenceMatrix circulant(const PhaseSequence& a) {
    std::vector<PhaseSequence> rows;
    rows.reserve(static_cast<std::size_t>(a.length()));
    for (int i = 1; i <= a.length(); ++i) rows.push_back(shift_forward(a, i));
    return SequenceMatrix(std::move(rows));
}

// Removes the last k columns, 0 <= k < L.
inline SequenceMatrix truncate_columns(const SequenceMatrix& m, int k) {
    if (k < 0 || k >= m.col_count())
        throw std::out_of_range("column truncation requires 0 <= k < L");
    if (k == 0) return m;
    std::vector<PhaseSequence> rows;
    rows.reserve(static_cast<std::size_t>(m.row_count()));
    for (const auto& r : m.rows()) rows.push_back(r.truncated(m.col_count() - k));
    return SequenceMatrix(std::move(rows));
}

inline SequenceMatrix hconcat(const SequenceMatrix& a, const SequenceMatrix& b) {
    if (a.row_count() != b.row_count()) throw dimension_error("hconcat row count mismatch");
    std::vector<PhaseSequence> rows;
    rows.reserve(static_cast<std::size_t>(a.row_count()));
    for (int i = 0; i < a.row_count(); ++i) rows.push_back(a.row(i).concat(b.row(i)));
    return SequenceMatrix(std::move(rows));
}

inline SequenceMatrix vconcat(const SequenceMatrix& a, const SequenceMatrix& b) {
    if (a.col_count() != b.col_count()) throw dimension_error("vconcat column count mismatch");
    std::vector<PhaseSequence> rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return SequenceMatrix(std::move(rows));
}

inline SequenceMatrix negated(const SequenceMatrix& m) {
    std::vector<PhaseSequence> rows;
    rows.reserve(static_cast<std::size_t>(m.row_count()));
    for (const auto& r : m.rows()) rows.push_back(r.negated());
    return SequenceMatrix(std::move(rows));
}

// R (.) M: row R multiplied elementwise into every row of M.
inline SequenceMatrix row_broadcast(const PhaseSequence& r, const SequenceMatrix& m) {
    std::vector<PhaseSequence> rows;
    rows.reserve(static_cast<std::size_t>(m.row_count()));
    for (const auto& row : m.rows()) rows.push_back(r.elementwise(row));
    return SequenceMatrix(std::move(rows));
}

// N codes of identical shape; carrier for CCC / CZCSS.
struct CodeSet {
    std::vector<SequenceMatrix> codes;

    explicit CodeSet(std::vector<SequenceMatrix> c) : codes(std::move(c)) {
        if (codes.empty()) throw std::invalid_argument("code set must be non-empty");
        for (const auto& m : codes)
            if (m.q() != codes.front().q() || m.row_count() != codes.front().row_count() ||
                m.col_count() != codes.front().col_count())
                throw dimension_error("all codes must share shape and modulus");
    }

    int q() const { return codes.front().q(); }
    int code_count() const { return static_cast<int>(codes.size()); }
    int flock_size() const { return codes.front().row_count(); }
    int length() const { return codes.front().col_count(); }
};

// sum_j A(row_j)(lambda)
inline CorrelationValue auto_sum(const SequenceMatrix& s, int lambda) {
    CorrelationValue acc = aacf(s.row(0), lambda);
    for (int j = 1; j < s.row_count(); ++j) acc += aacf(s.row(j), lambda);
    return acc;
}

// sum_j C(row_j, row_{(j+1) mod M})(lambda)
inline CorrelationValue cross_sum_adjacent(const SequenceMatrix& s, int lambda) {
    const int m = s.row_count();
    CorrelationValue acc = accf(s.row(0), s.row(1 % m), lambda);
    for (int j = 1; j < m; ++j) acc += accf(s.row(j), s.row((j + 1) % m), lambda);
    return acc;
}

// sum_i C(S.row_i, S'.row_i)(lambda)
inline CorrelationValue cross_sum_pointwise(const SequenceMatrix& s, const SequenceMatrix& t,
                                            int lambda) {
    if (s.row_count() != t.row_count() || s.col_count() != t.col_count() || s.q() != t.q())
        throw dimension_error("pointwise cross sum requires identical shapes");
    CorrelationValue acc = accf(s.row(0), t.row(0), lambda);
    for (int i = 1; i < s.row_count(); ++i) acc += accf(s.row(i), t.row(i), lambda);
    return acc;
}

}  // namespace seqforge

#endif
