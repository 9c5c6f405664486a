// Deterministic serialization of reports, verdicts, grids and oracle tables
// to JSON, CSV and plain text. JSON key order is fixed; identical inputs
// produce byte-identical output.
#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "symprod/classifier.hpp"

namespace symprod {

enum class OutputFormat { json, csv, text };

inline OutputFormat parse_format(const std::string& s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "text") return OutputFormat::text;
    throw std::invalid_argument("unknown format: " + s);
}

using ojson = nlohmann::ordered_json;

inline ojson ext_to_json(const ExtElement<Int>& e) {
    ojson arr = ojson::array();
    for (const auto& [m, c] : e.terms()) {
        ojson term;
        term["monomial"] = m.indices();
        term["coeff"] = to_int64(c);
        arr.push_back(std::move(term));
    }
    return arr;
}

inline ojson report_to_json(const InvariantReport& r) {
    ojson j;
    j["spec"] = {{"g", r.spec.g}, {"k", r.spec.k}, {"n", r.spec.n}, {"N", r.spec.N}};
    j["dimension"] = r.dimension;
    j["s"] = r.s;
    ojson betti = ojson::array();
    for (const auto& b : r.betti) betti.push_back(to_int64(b));
    j["betti"] = std::move(betti);
    j["c1"] = ext_to_json(r.c1);
    if (r.pontrjagin_zero) {
        j["pontrjagin"] = "zero";
    } else {
        ojson ps = ojson::array();
        for (const auto& p : r.pontrjagin_list) ps.push_back(ext_to_json(p));
        j["pontrjagin"] = std::move(ps);
    }
    j["w2_rank"] = r.w2_rank;
    return j;
}

inline std::string betti_csv(const std::vector<Int>& betti) {
    std::string s;
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (i) s += "|";
        s += betti[i].get_str();
    }
    return s;
}

inline std::string pontrjagin_str(const InvariantReport& r) {
    if (r.pontrjagin_zero) return "zero";
    std::string s;
    for (std::size_t i = 0; i < r.pontrjagin_list.size(); ++i) {
        if (i) s += "; ";
        s += "p" + std::to_string(i + 1) + "=" + r.pontrjagin_list[i].str();
    }
    return s;
}

inline std::string report_csv_header() {
    return "g,k,n,N,dimension,s,homotopy_class,betti,c1,pontrjagin,w2_rank";
}

inline std::string report_csv_row(const InvariantReport& r) {
    std::ostringstream os;
    os << r.spec.g << "," << r.spec.k << "," << r.spec.n << "," << r.spec.N << "," << r.dimension << "," << r.s
       << "," << r.s << "," << betti_csv(r.betti) << "," << r.c1.str() << "," << pontrjagin_str(r) << ","
       << r.w2_rank;
    return os.str();
}

inline std::string report_text(const InvariantReport& r) {
    std::ostringstream os;
    os << "Sym^" << r.spec.n << " M^2_{" << r.spec.g << "," << r.spec.k << "}";
    if (r.spec.N > 0) os << " x R^" << r.spec.N;
    os << "\n";
    os << "  dimension: " << r.dimension << "\n";
    os << "  s (rank of pi_1): " << r.s << "\n";
    os << "  betti: " << betti_csv(r.betti) << "\n";
    os << "  c1: " << r.c1.str() << "\n";
    os << "  pontrjagin: " << pontrjagin_str(r) << "\n";
    os << "  w2_rank: " << r.w2_rank << "\n";
    return os.str();
}

inline std::string render_report(const InvariantReport& r, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json: return report_to_json(r).dump(2) + "\n";
        case OutputFormat::csv: return report_csv_header() + "\n" + report_csv_row(r) + "\n";
        case OutputFormat::text: return report_text(r);
    }
    throw std::logic_error("unknown format");
}

inline std::string render_classify(const InvariantReport& a, const InvariantReport& b, const CompareResult& cr,
                                   OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json: {
            ojson j;
            j["verdict"] = to_string(cr.verdict);
            j["invariants_a"] = report_to_json(a);
            j["invariants_b"] = report_to_json(b);
            j["witness"] = cr.witness;
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string s = "side," + report_csv_header() + ",verdict,witness\n";
            s += "a," + report_csv_row(a) + "," + to_string(cr.verdict) + "," + cr.witness + "\n";
            s += "b," + report_csv_row(b) + "," + to_string(cr.verdict) + "," + cr.witness + "\n";
            return s;
        }
        case OutputFormat::text: {
            std::ostringstream os;
            os << "A: " << report_text(a) << "B: " << report_text(b);
            os << "verdict: " << to_string(cr.verdict) << "\n";
            os << "witness: " << cr.witness << "\n";
            return os.str();
        }
    }
    throw std::logic_error("unknown format");
}

inline std::string render_table(const std::vector<InvariantReport>& rows, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::json: {
            ojson arr = ojson::array();
            for (const auto& r : rows) {
                ojson j = report_to_json(r);
                j["homotopy_class"] = r.s;
                arr.push_back(std::move(j));
            }
            return arr.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string s = report_csv_header() + "\n";
            for (const auto& r : rows) s += report_csv_row(r) + "\n";
            return s;
        }
        case OutputFormat::text: {
            std::string s;
            for (const auto& r : rows) s += report_text(r) + "\n";
            return s;
        }
    }
    throw std::logic_error("unknown format");
}

struct OracleRow {
    int q = 0;
    long macdonald_dim = 0;
    long projector_dim = 0;
    bool match() const { return macdonald_dim == projector_dim; }
};

inline std::string render_oracle(int g, int n, const std::vector<OracleRow>& rows, OutputFormat fmt) {
    bool all = true;
    for (const auto& r : rows) all = all && r.match();
    switch (fmt) {
        case OutputFormat::json: {
            ojson j;
            j["g"] = g;
            j["n"] = n;
            ojson degs = ojson::array();
            for (const auto& r : rows)
                degs.push_back({{"q", r.q},
                                {"macdonald", r.macdonald_dim},
                                {"projector", r.projector_dim},
                                {"match", r.match()}});
            j["degrees"] = std::move(degs);
            j["all_match"] = all;
            return j.dump(2) + "\n";
        }
        case OutputFormat::csv: {
            std::string s = "q,macdonald,projector,match\n";
            for (const auto& r : rows)
                s += std::to_string(r.q) + "," + std::to_string(r.macdonald_dim) + "," +
                     std::to_string(r.projector_dim) + "," + (r.match() ? "true" : "false") + "\n";
            return s;
        }
        case OutputFormat::text: {
            std::ostringstream os;
            os << "oracle check for g=" << g << ", n=" << n << "\n";
            for (const auto& r : rows)
                os << "  q=" << r.q << "  macdonald=" << r.macdonald_dim << "  projector=" << r.projector_dim
                   << "  " << (r.match() ? "ok" : "MISMATCH") << "\n";
            os << "RESULT: " << (all ? "match" : "mismatch") << "\n";
            return os.str();
        }
    }
    throw std::logic_error("unknown format");
}

}  // namespace symprod
