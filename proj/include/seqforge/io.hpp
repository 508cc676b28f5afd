#ifndef SEQFORGE_IO_HPP
#define SEQFORGE_IO_HPP

#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "seqforge/matrix.hpp"
#include "seqforge/verify.hpp"

namespace seqforge {

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact integers render as integers; everything else gets 12 significant
// digits.
inline std::string format_number(double x) {
    const double r = std::round(x);
    if (x == r && std::abs(x) < 1e15) {
        std::ostringstream os;
        os << static_cast<long long>(r);
        return os.str();
    }
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

inline nlohmann::json matrix_to_json(const SequenceMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : m.rows()) rows.push_back(r.exps());
    return {{"q", m.q()}, {"rows", m.row_count()}, {"cols", m.col_count()},
            {"exponents", rows}};
}

inline SequenceMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("exponents"))
        throw io_error("matrix file must be an object with q and exponents");
    const int q = j.at("q").get<int>();
    const auto& exps = j.at("exponents");
    if (!exps.is_array() || exps.empty())
        throw io_error("exponents must be a non-empty array of rows");
    std::vector<PhaseSequence> rows;
    for (const auto& row : exps) {
        if (!row.is_array() || row.empty()) throw io_error("each row must be a non-empty array");
        rows.emplace_back(q, row.get<std::vector<int>>());
    }
    SequenceMatrix m(std::move(rows));
    if (j.contains("rows") && j.at("rows").get<int>() != m.row_count())
        throw io_error("rows header does not match payload");
    if (j.contains("cols") && j.at("cols").get<int>() != m.col_count())
        throw io_error("cols header does not match payload");
    return m;
}

inline nlohmann::json codeset_to_json(const CodeSet& s) {
    nlohmann::json codes = nlohmann::json::array();
    for (const auto& c : s.codes) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : c.rows()) rows.push_back(r.exps());
        codes.push_back({{"rows", c.row_count()}, {"cols", c.col_count()},
                         {"exponents", rows}});
    }
    return {{"q", s.q()}, {"codes", codes}};
}

inline CodeSet codeset_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("q") || !j.contains("codes"))
        throw io_error("code set file must be an object with q and codes");
    const int q = j.at("q").get<int>();
    if (!j.at("codes").is_array() || j.at("codes").empty())
        throw io_error("codes must be a non-empty array");
    std::vector<SequenceMatrix> codes;
    for (const auto& cj : j.at("codes")) {
        nlohmann::json with_q = cj;
        with_q["q"] = q;
        codes.push_back(matrix_from_json(with_q));
    }
    return CodeSet(std::move(codes));
}

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw io_error(std::string("malformed JSON: ") + e.what());
    }
    return j;
}

inline void save_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw io_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

inline SequenceMatrix read_matrix_file(const std::string& path) {
    return matrix_from_json(load_json(path));
}

inline CodeSet read_codeset_file(const std::string& path) {
    return codeset_from_json(load_json(path));
}

// Plain-text export for q = 2: rows of space-separated 1 / -1.
inline std::string matrix_to_text(const SequenceMatrix& m) {
    if (m.q() != 2) throw io_error("text format supports q = 2 only");
    std::ostringstream os;
    for (const auto& r : m.rows()) {
        const auto pm = r.to_pm1();
        for (std::size_t i = 0; i < pm.size(); ++i) os << (i ? " " : "") << pm[i];
        os << "\n";
    }
    return os.str();
}

inline SequenceMatrix matrix_from_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<PhaseSequence> rows;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> signs;
        int v;
        while (ls >> v) signs.push_back(v);
        if (signs.empty()) continue;
        rows.push_back(PhaseSequence::from_pm1(signs));
    }
    if (rows.empty()) throw io_error("text matrix is empty");
    return SequenceMatrix(std::move(rows));
}

inline nlohmann::json report_to_json(const VerifyReport& r) {
    nlohmann::json j = {{"property", r.property}, {"holds", r.holds}};
    if (r.witness) {
        j["witness"] = {{"condition", r.witness->condition},
                        {"lambda", r.witness->lambda},
                        {"re", r.witness->re},
                        {"im", r.witness->im}};
        if (r.witness->p >= 0) j["witness"]["p"] = r.witness->p;
        if (r.witness->p_prime >= 0) j["witness"]["p_prime"] = r.witness->p_prime;
    }
    if (r.max_zone) j["max_zone"] = *r.max_zone;
    if (r.optimal) j["optimal"] = *r.optimal;
    return j;
}

}  // namespace seqforge

#endif
