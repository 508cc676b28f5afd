#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "seqforge/seqforge.hpp"

namespace {

using namespace seqforge;

SequenceMatrix e4_from_theta(int q, const std::vector<int>& theta) {
    if (theta.size() != 3)
        throw std::invalid_argument("theta must have exactly three entries");
    return circulant_hadamard4(q, theta[0], theta[1], theta[2]);
}

// A file is either a single matrix or a code set; peek at the keys.
bool is_codeset_json(const nlohmann::json& j) { return j.is_object() && j.contains("codes"); }

void write_profile_csv(const std::string& path, const CodeSet& s, bool cross) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << "p,p_prime,lambda,re,im\n";
    const int L = s.length();
    for (int p = 0; p < s.code_count(); ++p) {
        for (int pp = 0; pp < s.code_count(); ++pp) {
            if (cross ? (p == pp) : (p != pp)) continue;
            for (int lambda = -(L - 1); lambda <= L - 1; ++lambda) {
                const CorrelationValue v =
                    cross_sum_pointwise(s.codes[static_cast<std::size_t>(p)],
                                        s.codes[static_cast<std::size_t>(pp)], lambda);
                out << p << "," << pp << "," << lambda << "," << format_number(v.re) << ","
                    << format_number(v.im) << "\n";
            }
        }
    }
}

int run_gen(const std::string& kind, int q, const std::vector<int>& theta,
            const std::vector<int>& e4_theta, int n, int k, long long big_n,
            const std::string& variant_str, const std::string& out_path) {
    const DoublingVariant variant = doubling_variant_from(variant_str.at(0));
    const auto seed_e4 = [&] { return e4_from_theta(2, e4_theta); };

    if (kind == "chm4") {
        const SequenceMatrix m = e4_from_theta(q, theta);
        save_json(out_path, matrix_to_json(m));
        std::cout << "(4,4) circulant Hadamard matrix, q=" << q << "\n";
    } else if (kind == "chm4-all") {
        const auto all = enumerate_chm4();
        save_json(out_path, codeset_to_json(CodeSet(all)));
        std::cout << all.size() << " circulant Hadamard matrices of order 4\n";
    } else if (kind == "czcs") {
        const auto [m, p] = czcs_matrix(n, k, variant, seed_e4());
        save_json(out_path, matrix_to_json(m));
        std::cout << "(" << p.M << "," << p.L << "," << p.Z << ")-CZCS\n";
    } else if (kind == "gcs-recursive") {
        const SequenceMatrix m = gcs_truncated(seed_e4(), n, k, variant);
        save_json(out_path, matrix_to_json(m));
        std::cout << "(" << m.row_count() << "," << m.col_count() << ")-GCS\n";
    } else if (kind == "gcs-circulant") {
        const SequenceMatrix m = gcs_circulant(big_n, k);
        save_json(out_path, matrix_to_json(m));
        std::cout << "(" << m.row_count() << "," << m.col_count() << ")-GCS\n";
    } else if (kind == "hadamard") {
        const SequenceMatrix m = hadamard_2N(big_n);
        save_json(out_path, matrix_to_json(m));
        std::cout << "Hadamard matrix of order " << m.row_count() << "\n";
    } else if (kind == "ccc") {
        const CodeSet s = ccc_codes(hadamard_2N(big_n));
        save_json(out_path, codeset_to_json(s));
        std::cout << "(" << s.code_count() << "," << s.flock_size() << "," << s.length()
                  << ")-CCC\n";
    } else if (kind == "czcss") {
        const CodeSet s = czcss_codes(seed_e4(), n, variant);
        const int zone = 1 << (n + 1);
        save_json(out_path, codeset_to_json(s));
        std::cout << "(" << s.code_count() << "," << s.flock_size() << "," << s.length()
                  << "," << zone << ")-CZCSS\n";
    } else {
        throw std::invalid_argument("unknown generator kind: " + kind);
    }
    return 0;
}

int run_verify(const std::string& property, const std::string& path, std::optional<int> zone) {
    const nlohmann::json j = load_json(path);
    VerifyReport rep;
    if (property == "ccc") {
        rep = is_ccc(codeset_from_json(j));
    } else if (property == "czcss") {
        if (!zone) throw std::invalid_argument("czcss verification requires --Z");
        rep = is_czcss(codeset_from_json(j), *zone);
    } else if (property == "classify") {
        const GcsType t = classify_gcs(matrix_from_json(j));
        std::cout << nlohmann::json{{"property", "classify"}, {"type", to_string(t)}}.dump(2)
                  << "\n";
        return t == GcsType::NotGcs ? 1 : 0;
    } else {
        const SequenceMatrix m = matrix_from_json(j);
        if (property == "hadamard") {
            rep = is_hadamard(m);
        } else if (property == "gcs") {
            rep = is_gcs(m);
        } else if (property == "gcp") {
            if (m.row_count() != 2)
                throw std::invalid_argument("gcp verification expects a 2-row matrix (a, b)");
            rep = is_gcp(m.row(0), m.row(1));
        } else if (property == "mate") {
            if (m.row_count() != 4)
                throw std::invalid_argument(
                    "mate verification expects a 4-row matrix (a, b, c, d)");
            rep = is_mate(m.row(0), m.row(1), m.row(2), m.row(3));
        } else if (property == "czcs") {
            rep = czcs_max_zone(m, zone);
        } else {
            throw std::invalid_argument("unknown property: " + property);
        }
    }
    std::cout << report_to_json(rep).dump(2) << "\n";
    return rep.holds ? 0 : 1;
}

int run_profile(const std::string& mode, const std::string& in_path,
                const std::string& out_csv) {
    const nlohmann::json j = load_json(in_path);
    CodeSet s = is_codeset_json(j) ? codeset_from_json(j)
                                   : CodeSet({matrix_from_json(j)});
    if (mode == "auto") {
        write_profile_csv(out_csv, s, false);
    } else if (mode == "cross") {
        if (s.code_count() < 2)
            throw std::invalid_argument("cross profile requires a code set with >= 2 codes");
        write_profile_csv(out_csv, s, true);
    } else {
        throw std::invalid_argument("profile mode must be auto or cross");
    }
    std::cout << "wrote " << out_csv << "\n";
    return 0;
}

int run_conformance(std::vector<int> lemmas, int trials, std::uint64_t seed) {
    if (lemmas.empty()) lemmas = {4, 5, 6, 7, 8, 9, 10};
    bool all_asserted_ok = true;
    std::cout << "lemma  trials  printed  validated  asserted\n";
    std::vector<ConformanceReport> reports;
    for (int id : lemmas) {
        const ConformanceReport r = lemma_conformance(id, trials, seed);
        std::cout << "  " << r.lemma_id << "     " << r.trials << "    " << r.printed_agree
                  << "      " << r.validated_agree << "       "
                  << (r.asserted ? "yes" : "no") << "\n";
        if (r.asserted && !r.validated_ok()) all_asserted_ok = false;
        reports.push_back(r);
    }
    for (const auto& r : reports) {
        if (r.printed_counterexample)
            std::cout << "lemma " << r.lemma_id
                      << " printed-form counterexample: " << *r.printed_counterexample << "\n";
        if (r.validated_counterexample)
            std::cout << "lemma " << r.lemma_id
                      << " validated-form counterexample: " << *r.validated_counterexample
                      << "\n";
    }
    return all_asserted_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"complementary sequence family generator and verifier"};
    app.require_subcommand(1);

    // gen
    std::string kind, out_path = "out.json", variant_str = "F";
    int q = 2, n = 1, k = 0;
    long long big_n = 1;
    std::vector<int> theta{1, 1, 1}, e4_theta{1, 1, 1};
    auto* gen = app.add_subcommand("gen", "generate a construction");
    gen->add_option("kind", kind,
                    "one of chm4, chm4-all, czcs, gcs-recursive, gcs-circulant, hadamard, "
                    "ccc, czcss")
        ->required();
    gen->add_option("--q", q, "phase modulus (chm4)");
    gen->add_option("--theta", theta, "theta1,theta2,theta3 for chm4")->delimiter(',');
    gen->add_option("--e4-theta", e4_theta, "theta triple selecting the binary 4x4 seed")
        ->delimiter(',');
    gen->add_option("--n", n, "doubling depth");
    gen->add_option("--k", k, "truncation length");
    gen->add_option("--N", big_n, "Golay pair length (2^a 10^b 26^c)");
    gen->add_option("--variant", variant_str, "doubling variant F, G, H or I");
    gen->add_option("--out", out_path, "output file");

    // verify
    std::string property, in_path;
    std::optional<int> zone;
    auto* ver = app.add_subcommand("verify", "verify a property of a file");
    ver->add_option("property", property,
                    "one of hadamard, gcs, gcp, mate, czcs, ccc, czcss, classify")
        ->required();
    ver->add_option("file", in_path, "matrix or code-set JSON file")->required();
    ver->add_option("--Z", zone, "zone width (czcs bound / czcss requirement)");

    // profile
    std::string mode, profile_in, out_csv;
    auto* prof = app.add_subcommand("profile", "emit correlation-sum CSV profiles");
    prof->add_option("mode", mode, "auto or cross")->required();
    prof->add_option("file", profile_in, "matrix or code-set JSON file")->required();
    prof->add_option("out", out_csv, "output CSV path")->required();

    // conformance
    std::vector<int> lemmas;
    int trials = 1000;
    std::uint64_t seed = 7;
    if (const char* env = std::getenv("SEQFORGE_SEED")) seed = std::strtoull(env, nullptr, 10);
    auto* conf = app.add_subcommand("conformance", "randomized shift-identity conformance");
    conf->add_option("--lemmas", lemmas, "identity ids, subset of 4..10")->delimiter(',');
    conf->add_option("--trials", trials, "trials per identity");
    conf->add_option("--seed", seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed())
            return run_gen(kind, q, theta, e4_theta, n, k, big_n, variant_str, out_path);
        if (ver->parsed()) return run_verify(property, in_path, zone);
        if (prof->parsed()) return run_profile(mode, profile_in, out_csv);
        return run_conformance(lemmas, trials, seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
