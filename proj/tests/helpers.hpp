#ifndef SEQFORGE_TEST_HELPERS_HPP
#define SEQFORGE_TEST_HELPERS_HPP

#include "seqforge/seqforge.hpp"

namespace seqforge::testhelp {

inline PhaseSequence pm(const std::vector<int>& signs) { return PhaseSequence::from_pm1(signs); }

inline SequenceMatrix pm_matrix(const std::vector<std::vector<int>>& rows) {
    std::vector<PhaseSequence> out;
    out.reserve(rows.size());
    for (const auto& r : rows) out.push_back(pm(r));
    return SequenceMatrix(std::move(out));
}

// 4x4 circulant Hadamard matrix with -1 diagonal.
inline SequenceMatrix e4_neg_diag() {
    return pm_matrix({{-1, 1, 1, 1}, {1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}});
}

// 4x4 circulant Hadamard matrix of psi(x1 x2) = (1, 1, 1, -1).
inline SequenceMatrix e4_plain() {
    return pm_matrix({{1, -1, 1, 1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {-1, 1, 1, 1}});
}

inline SequenceMatrix f8_fixture() {
    return pm_matrix({{-1, 1, 1, 1, -1, 1, 1, 1},
                      {1, -1, 1, 1, 1, -1, 1, 1},
                      {1, 1, -1, 1, 1, 1, -1, 1},
                      {1, 1, 1, -1, 1, 1, 1, -1},
                      {-1, 1, 1, 1, 1, -1, -1, -1},
                      {1, -1, 1, 1, -1, 1, -1, -1},
                      {1, 1, -1, 1, -1, -1, 1, -1},
                      {1, 1, 1, -1, -1, -1, -1, 1}});
}

// 8x8 circulant-block matrix built from a=(1,1,1,-1), b=(1,1,-1,1) and
// their mate c=(1,-1,1,1), d=(1,-1,-1,-1).
inline SequenceMatrix g8_fixture() {
    return pm_matrix({{1, -1, 1, 1, 1, 1, -1, 1},
                      {1, 1, -1, 1, 1, 1, 1, -1},
                      {1, 1, 1, -1, -1, 1, 1, 1},
                      {-1, 1, 1, 1, 1, -1, 1, 1},
                      {1, 1, 1, -1, 1, -1, -1, -1},
                      {-1, 1, 1, 1, -1, 1, -1, -1},
                      {1, -1, 1, 1, -1, -1, 1, -1},
                      {1, 1, -1, 1, -1, -1, -1, 1}});
}

// 8x8 matrix that is a GCS but not Hadamard.
inline SequenceMatrix type2_fixture() {
    return pm_matrix({{1, 1, 1, -1, -1, 1, 1, 1},
                      {1, 1, -1, 1, 1, -1, 1, 1},
                      {-1, -1, -1, 1, 1, 1, -1, 1},
                      {-1, -1, 1, -1, 1, 1, 1, -1},
                      {-1, -1, -1, 1, -1, 1, 1, 1},
                      {-1, -1, 1, -1, 1, -1, 1, 1},
                      {1, 1, 1, -1, 1, 1, -1, 1},
                      {1, 1, -1, 1, 1, 1, 1, -1}});
}

// The eight codes R_i (.) G built from the doubled e4_plain matrix.
inline std::vector<std::vector<std::vector<int>>> table1_codes() {
    return {
        {{1, 1, 1, 1, 1, 1, 1, 1},
         {1, -1, -1, 1, 1, -1, -1, 1},
         {1, -1, 1, -1, 1, -1, 1, -1},
         {-1, -1, 1, 1, -1, -1, 1, 1},
         {1, 1, 1, 1, -1, -1, -1, -1},
         {1, -1, -1, 1, -1, 1, 1, -1},
         {1, -1, 1, -1, -1, 1, -1, 1},
         {-1, -1, 1, 1, 1, 1, -1, -1}},
        {{1, -1, -1, 1, 1, -1, -1, 1},
         {1, 1, 1, 1, 1, 1, 1, 1},
         {1, 1, -1, -1, 1, 1, -1, -1},
         {-1, 1, -1, 1, -1, 1, -1, 1},
         {1, -1, -1, 1, -1, 1, 1, -1},
         {1, 1, 1, 1, -1, -1, -1, -1},
         {1, 1, -1, -1, -1, -1, 1, 1},
         {-1, 1, -1, 1, 1, -1, 1, -1}},
        {{1, -1, 1, -1, 1, -1, 1, -1},
         {1, 1, -1, -1, 1, 1, -1, -1},
         {1, 1, 1, 1, 1, 1, 1, 1},
         {-1, 1, 1, -1, -1, 1, 1, -1},
         {1, -1, 1, -1, -1, 1, -1, 1},
         {1, 1, -1, -1, -1, -1, 1, 1},
         {1, 1, 1, 1, -1, -1, -1, -1},
         {-1, 1, 1, -1, 1, -1, -1, 1}},
        {{-1, -1, 1, 1, -1, -1, 1, 1},
         {-1, 1, -1, 1, -1, 1, -1, 1},
         {-1, 1, 1, -1, -1, 1, 1, -1},
         {1, 1, 1, 1, 1, 1, 1, 1},
         {-1, -1, 1, 1, 1, 1, -1, -1},
         {-1, 1, -1, 1, 1, -1, 1, -1},
         {-1, 1, 1, -1, 1, -1, -1, 1},
         {1, 1, 1, 1, -1, -1, -1, -1}},
        {{1, 1, 1, 1, -1, -1, -1, -1},
         {1, -1, -1, 1, -1, 1, 1, -1},
         {1, -1, 1, -1, -1, 1, -1, 1},
         {-1, -1, 1, 1, 1, 1, -1, -1},
         {1, 1, 1, 1, 1, 1, 1, 1},
         {1, -1, -1, 1, 1, -1, -1, 1},
         {1, -1, 1, -1, 1, -1, 1, -1},
         {-1, -1, 1, 1, -1, -1, 1, 1}},
        {{1, -1, -1, 1, -1, 1, 1, -1},
         {1, 1, 1, 1, -1, -1, -1, -1},
         {1, 1, -1, -1, -1, -1, 1, 1},
         {-1, 1, -1, 1, 1, -1, 1, -1},
         {1, -1, -1, 1, 1, -1, -1, 1},
         {1, 1, 1, 1, 1, 1, 1, 1},
         {1, 1, -1, -1, 1, 1, -1, -1},
         {-1, 1, -1, 1, -1, 1, -1, 1}},
        {{1, -1, 1, -1, -1, 1, -1, 1},
         {1, 1, -1, -1, -1, -1, 1, 1},
         {1, 1, 1, 1, -1, -1, -1, -1},
         {-1, 1, 1, -1, 1, -1, -1, 1},
         {1, -1, 1, -1, 1, -1, 1, -1},
         {1, 1, -1, -1, 1, 1, -1, -1},
         {1, 1, 1, 1, 1, 1, 1, 1},
         {-1, 1, 1, -1, -1, 1, 1, -1}},
        {{-1, -1, 1, 1, 1, 1, -1, -1},
         {-1, 1, -1, 1, 1, -1, 1, -1},
         {-1, 1, 1, -1, 1, -1, -1, 1},
         {1, 1, 1, 1, -1, -1, -1, -1},
         {-1, -1, 1, 1, -1, -1, 1, 1},
         {-1, 1, -1, 1, -1, 1, -1, 1},
         {-1, 1, 1, -1, -1, 1, 1, -1},
         {1, 1, 1, 1, 1, 1, 1, 1}}};
}

}  // namespace seqforge::testhelp

#endif
