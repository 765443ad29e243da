#ifndef R2PENCIL_REPORT_HPP
#define R2PENCIL_REPORT_HPP

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "r2pencil/errors.hpp"
#include "r2pencil/scalar.hpp"

namespace r2pencil {

// One verification cell: a (suite, instance, index-pair) observation.
// Biorth cells carry the computed and closed-form values side by side;
// boolean checks use residual 0/1 against tolerance 0.
struct ReportCell {
    std::string suite;
    std::string instance;
    long n = -1;
    long m = -1;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = true;
    std::string computed_re, computed_im;
    std::string closed_re, closed_im;
    std::string note;
};

struct SuiteResult {
    std::string suite;
    std::string instance; // e.g. "s1/float" or "seed7/exact"
    double max_residual = 0.0;
    bool pass = true;
    std::vector<ReportCell> cells;
    std::vector<std::string> witnesses;
};

struct VerificationReport {
    std::vector<SuiteResult> suites;
    bool pass = true;

    void add(SuiteResult s) {
        s.max_residual = 0.0;
        for (const auto& c : s.cells) {
            s.max_residual = std::max(s.max_residual, c.residual);
            if (!c.pass) s.pass = false;
        }
        if (!s.pass) pass = false;
        suites.push_back(std::move(s));
    }

    // Canonical ordering regardless of execution order.
    void canonicalize() {
        for (auto& s : suites)
            std::stable_sort(s.cells.begin(), s.cells.end(), [](const ReportCell& a, const ReportCell& b) {
                if (a.n != b.n) return a.n < b.n;
                return a.m < b.m;
            });
        std::stable_sort(suites.begin(), suites.end(), [](const SuiteResult& a, const SuiteResult& b) {
            if (a.suite != b.suite) return a.suite < b.suite;
            return a.instance < b.instance;
        });
    }
};

using json = nlohmann::ordered_json;

inline json report_to_json(const VerificationReport& rep, const json& config_echo) {
    json out;
    out["config"] = config_echo;
    out["overall_pass"] = rep.pass;
    out["suites"] = json::array();
    for (const auto& s : rep.suites) {
        json js;
        js["suite"] = s.suite;
        js["instance"] = s.instance;
        js["max_residual"] = s.max_residual;
        js["pass"] = s.pass;
        js["witnesses"] = s.witnesses;
        js["cells"] = json::array();
        for (const auto& c : s.cells) {
            json jc;
            jc["n"] = c.n;
            jc["m"] = c.m;
            jc["residual"] = c.residual;
            jc["tolerance"] = c.tolerance;
            jc["pass"] = c.pass;
            if (!c.computed_re.empty()) jc["computed"] = {{"re", c.computed_re}, {"im", c.computed_im}};
            if (!c.closed_re.empty()) jc["closed_form"] = {{"re", c.closed_re}, {"im", c.closed_im}};
            if (!c.note.empty()) jc["note"] = c.note;
            js["cells"].push_back(std::move(jc));
        }
        out["suites"].push_back(std::move(js));
    }
    return out;
}

namespace detail {
inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += "\"\"";
        out += ch;
    }
    out += "\"";
    return out;
}
} // namespace detail

// One row per (suite, instance, index) with the fixed column set.
inline std::string report_to_csv(const VerificationReport& rep) {
    std::ostringstream out;
    out << "suite,instance,n,m,residual,tolerance,pass\n";
    for (const auto& s : rep.suites)
        for (const auto& c : s.cells) {
            out << detail::csv_escape(s.suite) << ',' << detail::csv_escape(s.instance) << ',' << c.n << ','
                << c.m << ',' << format_double(c.residual) << ',' << format_double(c.tolerance) << ','
                << (c.pass ? "true" : "false") << '\n';
        }
    return out.str();
}

inline std::string csv_from_report_json(const json& report) {
    std::ostringstream out;
    out << "suite,instance,n,m,residual,tolerance,pass\n";
    if (!report.contains("suites") || !report["suites"].is_array())
        throw IoError("report json has no suites array");
    for (const auto& s : report["suites"])
        for (const auto& c : s.at("cells")) {
            out << detail::csv_escape(s.at("suite").get<std::string>()) << ','
                << detail::csv_escape(s.at("instance").get<std::string>()) << ','
                << c.at("n").get<long>() << ',' << c.at("m").get<long>() << ','
                << format_double(c.at("residual").get<double>()) << ','
                << format_double(c.at("tolerance").get<double>()) << ','
                << (c.at("pass").get<bool>() ? "true" : "false") << '\n';
        }
    return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

} // namespace r2pencil

#endif
