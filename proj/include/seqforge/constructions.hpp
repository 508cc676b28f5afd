#ifndef SEQFORGE_CONSTRUCTIONS_HPP
#define SEQFORGE_CONSTRUCTIONS_HPP

#include "seqforge/gbf.hpp"
#include "seqforge/gcp.hpp"
#include "seqforge/verify.hpp"

namespace seqforge {

// E_4 = Cir(psi(f)) for f = (q/2)(x1 x2 + theta1 x1 + theta2 x2) + theta3,
// a circulant Hadamard matrix of order 4 for any even q.
inline SequenceMatrix circulant_hadamard4(int q, int theta1, int theta2, int theta3) {
    Gbf f(2, q);
    f.add_term({1, 2}, q / 2)
        .add_term({1}, (q / 2) * theta1)
        .add_term({2}, (q / 2) * theta2)
        .add_term({}, theta3);
    SequenceMatrix e4 = circulant(f.evaluate());
    if (!is_hadamard(e4).holds)
        throw construction_error("order-4 circulant construction failed the Hadamard oracle");
    return e4;
}

// All 8 binary circulant Hadamard matrices of order 4, from
// (theta1, theta2, theta3) over {0,1}^3.
inline std::vector<SequenceMatrix> enumerate_chm4() {
    std::vector<SequenceMatrix> out;
    out.reserve(8);
    for (int t1 = 0; t1 <= 1; ++t1)
        for (int t2 = 0; t2 <= 1; ++t2)
            for (int t3 = 0; t3 <= 1; ++t3) {
                SequenceMatrix m = circulant_hadamard4(2, t1, t2, t3);
                bool seen = false;
                for (const auto& prev : out) seen = seen || prev == m;
                if (!seen) out.push_back(std::move(m));
            }
    return out;
}

enum class DoublingVariant { F, G, H, I };

inline DoublingVariant doubling_variant_from(char c) {
    switch (c) {
        case 'F': case 'f': return DoublingVariant::F;
        case 'G': case 'g': return DoublingVariant::G;
        case 'H': case 'h': return DoublingVariant::H;
        case 'I': case 'i': return DoublingVariant::I;
        default: throw std::invalid_argument("variant must be one of F, G, H, I");
    }
}

inline char to_char(DoublingVariant v) {
    switch (v) {
        case DoublingVariant::F: return 'F';
        case DoublingVariant::G: return 'G';
        case DoublingVariant::H: return 'H';
        default: return 'I';
    }
}

// One doubling step: the block sign patterns are
//   F: [[E, E], [E, -E]]   G: [[E, E], [-E, E]]
//   H: [[-E, E], [E, E]]   I: [[E, -E], [E, E]]
inline SequenceMatrix doubling_step(const SequenceMatrix& e, DoublingVariant v) {
    switch (v) {
        case DoublingVariant::F: return vconcat(hconcat(e, e), hconcat(e, negated(e)));
        case DoublingVariant::G: return vconcat(hconcat(e, e), hconcat(negated(e), e));
        case DoublingVariant::H: return vconcat(hconcat(negated(e), e), hconcat(e, e));
        default: return vconcat(hconcat(e, negated(e)), hconcat(e, e));
    }
}

// n doubling steps from a 4x4 circulant Hadamard seed: intermediate levels
// use pattern F, the requested variant applies at the outermost level. The
// result has order 2^{n+2} and stays Hadamard.
inline SequenceMatrix doubling_chain(const SequenceMatrix& e4, int n, DoublingVariant variant) {
    if (e4.row_count() != 4 || e4.col_count() != 4)
        throw std::invalid_argument("doubling seed must be 4x4");
    if (!is_hadamard(e4).holds)
        throw std::invalid_argument("doubling seed must be a Hadamard matrix");
    if (n < 1) throw std::out_of_range("doubling requires n >= 1");
    SequenceMatrix m = e4;
    for (int step = 1; step < n; ++step) m = doubling_step(m, DoublingVariant::F);
    return doubling_step(m, variant);
}

struct CzcsParams {
    int n = 0;
    int k = 0;
    int M = 0;  // set size 2^{n+2}
    int L = 0;  // length 2^{n+2} - k
    int Z = 0;  // zone 2^{n+1} - (k - 2^n) * floor(k / 2^n)
};

inline CzcsParams czcs_params(int n, int k) {
    const int two_n = 1 << n;
    if (n < 1) throw std::out_of_range("n must be >= 1");
    if (k < 0 || k > 2 * two_n - 1) throw std::out_of_range("k must satisfy 0 <= k <= 2^{n+1}-1");
    CzcsParams p;
    p.n = n;
    p.k = k;
    p.M = 4 * two_n;
    p.L = 4 * two_n - k;
    p.Z = 2 * two_n - (k - two_n) * (k / two_n);
    return p;
}

// (2^{n+2}, 2^{n+2}-k, Z)-CZCS by truncating k columns off the doubled matrix.
inline std::pair<SequenceMatrix, CzcsParams> czcs_matrix(int n, int k, DoublingVariant variant,
                                                         const SequenceMatrix& e4) {
    const CzcsParams p = czcs_params(n, k);
    return {truncate_columns(doubling_chain(e4, n, variant), k), p};
}

// (2^{n+2}, 2^{n+2}-k)-GCS; k runs one short of the CZCS bound.
inline SequenceMatrix gcs_truncated(const SequenceMatrix& e4, int n, int k,
                                    DoublingVariant variant) {
    if (k < 0 || k > (2 << n) - 2) throw std::out_of_range("k must satisfy 0 <= k <= 2^{n+1}-2");
    return truncate_columns(doubling_chain(e4, n, variant), k);
}

// [[Cir(a), Cir(b)], [Cir(c), Cir(d)]] with (c, d) the complementary mate
// of the pair (a, b).
inline SequenceMatrix circulant_block_gcs(const GcpPair& p, int k) {
    const int n = p.length();
    if (k < 0 || k > 2 * n - 2) throw std::out_of_range("k must satisfy 0 <= k <= 2N-2");
    const GcpPair mate = complementary_mate(p);
    const SequenceMatrix top = hconcat(circulant(p.a()), circulant(p.b()));
    const SequenceMatrix bottom = hconcat(circulant(mate.a()), circulant(mate.b()));
    return truncate_columns(vconcat(top, bottom), k);
}

// (2N, 2N-k)-GCS for any admissible N = 2^a * 10^b * 26^c.
inline SequenceMatrix gcs_circulant(long long n, int k) {
    return circulant_block_gcs(gcp_for(n), k);
}

// Hadamard matrix of order 2N: the untruncated circulant-block GCS.
inline SequenceMatrix hadamard_2N(long long n) {
    SequenceMatrix h = gcs_circulant(n, 0);
    if (!is_hadamard(h).holds)
        throw construction_error("circulant-block construction failed the Hadamard oracle");
    return h;
}

// (2N, 2N, 2N)-CCC: code p is row p of G broadcast into G.
inline CodeSet ccc_codes(const SequenceMatrix& g) {
    if (g.row_count() != g.col_count())
        throw std::invalid_argument("CCC construction requires a square matrix");
    std::vector<SequenceMatrix> codes;
    codes.reserve(static_cast<std::size_t>(g.row_count()));
    for (int i = 0; i < g.row_count(); ++i) codes.push_back(row_broadcast(g.row(i), g));
    return CodeSet(std::move(codes));
}

// (2^{n+2}, 2^{n+2}, 2^{n+2}, 2^{n+1})-CZCSS: rows of the doubled matrix
// broadcast into it.
inline CodeSet czcss_codes(const SequenceMatrix& e4, int n, DoublingVariant variant) {
    return ccc_codes(doubling_chain(e4, n, variant));
}

}  // namespace seqforge

#endif
