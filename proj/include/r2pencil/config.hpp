#ifndef R2PENCIL_CONFIG_HPP
#define R2PENCIL_CONFIG_HPP

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "r2pencil/errors.hpp"
#include "r2pencil/instance.hpp"
#include "r2pencil/params.hpp"
#include "r2pencil/scalar.hpp"

namespace r2pencil {

using json = nlohmann::ordered_json;

// A complex literal as it appeared in the config: either two numbers or
// two decimal/rational strings.  Strings materialize exactly in the
// exact backend ("1/3" stays 1/3); numbers carry their exact binary
// value over.
struct ComplexLit {
    bool from_strings = false;
    std::string re_s, im_s;
    double re_d = 0.0, im_d = 0.0;

    template <class S>
    S materialize() const {
        using traits = ScalarTraits<S>;
        if (from_strings) return traits::parse_part_pair(re_s, im_s);
        if constexpr (traits::is_exact) {
            return S{rational_from_double(re_d), rational_from_double(im_d)};
        } else {
            return S{re_d, im_d};
        }
    }
};

enum class BackendChoice { float_only, exact_only, both };
enum class SuiteChoice { all, pencil, biorth, christoffel };

struct RunConfig {
    enum class Mode { explicit_params, random } mode = Mode::random;

    // random mode
    std::uint64_t seed = 1;
    std::size_t depth = 8; // N: numerator polynomials r_1..r_N
    bool unimodular_beta = false;

    // explicit mode (or preset)
    std::string preset; // "s1" | "s2" | empty
    std::vector<ComplexLit> alpha, beta, e, d, c;

    std::optional<ComplexLit> m0, m1;

    bool christoffel_enabled = false;
    bool christoffel_explicitly_set = false;
    std::optional<ComplexLit> z_hat;

    double float_tol = 1e-9;
    double root_tol = 1e-10;

    BackendChoice backend = BackendChoice::both;
    SuiteChoice suite = SuiteChoice::all;

    std::size_t exact_depth_cap = 8;
    std::size_t float_depth_cap = 16;

    json echo; // the normalized config, embedded in reports for determinism checks
};

namespace detail {

inline ComplexLit parse_complex_lit(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2)
        throw ConfigError(path + ": expected a two-element [re, im] array");
    ComplexLit lit;
    if (j[0].is_string() != j[1].is_string())
        throw ConfigError(path + ": re and im must both be strings or both numbers");
    if (j[0].is_string()) {
        lit.from_strings = true;
        lit.re_s = j[0].get<std::string>();
        lit.im_s = j[1].get<std::string>();
        parse_rational(lit.re_s); // validate early
        parse_rational(lit.im_s);
    } else if (j[0].is_number() && j[1].is_number()) {
        lit.re_d = j[0].get<double>();
        lit.im_d = j[1].get<double>();
    } else {
        throw ConfigError(path + ": entries must be numbers or strings");
    }
    return lit;
}

inline std::vector<ComplexLit> parse_complex_list(const json& j, const std::string& path) {
    if (!j.is_array()) throw ConfigError(path + ": expected an array");
    std::vector<ComplexLit> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(parse_complex_lit(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

} // namespace detail

inline BackendChoice parse_backend(const std::string& s) {
    if (s == "float") return BackendChoice::float_only;
    if (s == "exact") return BackendChoice::exact_only;
    if (s == "both") return BackendChoice::both;
    throw ConfigError("backend: must be one of float|exact|both, got '" + s + "'");
}

inline SuiteChoice parse_suite(const std::string& s) {
    if (s == "all") return SuiteChoice::all;
    if (s == "pencil") return SuiteChoice::pencil;
    if (s == "biorth") return SuiteChoice::biorth;
    if (s == "christoffel") return SuiteChoice::christoffel;
    throw ConfigError("suite: must be one of pencil|biorth|christoffel|all, got '" + s + "'");
}

inline const char* backend_name(BackendChoice b) {
    switch (b) {
        case BackendChoice::float_only: return "float";
        case BackendChoice::exact_only: return "exact";
        default: return "both";
    }
}

inline const char* suite_name(SuiteChoice s) {
    switch (s) {
        case SuiteChoice::all: return "all";
        case SuiteChoice::pencil: return "pencil";
        case SuiteChoice::biorth: return "biorth";
        default: return "christoffel";
    }
}

inline RunConfig config_from_json(const json& j) {
    RunConfig cfg;
    if (!j.is_object()) throw ConfigError("config root must be an object");

    if (j.contains("preset")) {
        cfg.preset = j.at("preset").get<std::string>();
        if (cfg.preset != "s1" && cfg.preset != "s2")
            throw ConfigError("preset: unknown preset '" + cfg.preset + "' (expected s1 or s2)");
        cfg.mode = RunConfig::Mode::explicit_params;
    }

    std::string mode = j.value("mode", cfg.preset.empty() ? "random" : "explicit");
    if (mode == "random") {
        cfg.mode = RunConfig::Mode::random;
        if (!cfg.preset.empty()) throw ConfigError("preset: cannot combine a preset with mode=random");
    } else if (mode == "explicit") {
        cfg.mode = RunConfig::Mode::explicit_params;
    } else {
        throw ConfigError("mode: must be 'explicit' or 'random', got '" + mode + "'");
    }

    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("n")) {
        long long n = j.at("n").get<long long>();
        if (n < 1) throw ConfigError("n: must be >= 1");
        cfg.depth = static_cast<std::size_t>(n);
    }
    if (j.contains("unimodular_beta")) cfg.unimodular_beta = j.at("unimodular_beta").get<bool>();

    if (cfg.mode == RunConfig::Mode::explicit_params && cfg.preset.empty()) {
        for (const char* key : {"alpha", "beta", "e", "d", "c"})
            if (!j.contains(key)) throw ConfigError(std::string(key) + ": required in explicit mode");
        cfg.alpha = detail::parse_complex_list(j.at("alpha"), "alpha");
        cfg.beta = detail::parse_complex_list(j.at("beta"), "beta");
        cfg.e = detail::parse_complex_list(j.at("e"), "e");
        cfg.d = detail::parse_complex_list(j.at("d"), "d");
        cfg.c = detail::parse_complex_list(j.at("c"), "c");
    }

    if (j.contains("moments")) {
        const auto& m = j.at("moments");
        if (m.contains("m0")) cfg.m0 = detail::parse_complex_lit(m.at("m0"), "moments.m0");
        if (m.contains("m1")) cfg.m1 = detail::parse_complex_lit(m.at("m1"), "moments.m1");
    }

    if (j.contains("christoffel")) {
        const auto& c = j.at("christoffel");
        if (c.contains("enabled")) {
            cfg.christoffel_enabled = c.at("enabled").get<bool>();
            cfg.christoffel_explicitly_set = true;
        }
        if (c.contains("z_hat")) cfg.z_hat = detail::parse_complex_lit(c.at("z_hat"), "christoffel.z_hat");
    }
    if (!cfg.christoffel_explicitly_set)
        cfg.christoffel_enabled = cfg.unimodular_beta || cfg.preset == "s2";

    if (j.contains("tolerances")) {
        const auto& t = j.at("tolerances");
        if (t.contains("float_tol")) cfg.float_tol = t.at("float_tol").get<double>();
        if (t.contains("root_tol")) cfg.root_tol = t.at("root_tol").get<double>();
    }

    if (j.contains("backend")) cfg.backend = parse_backend(j.at("backend").get<std::string>());
    if (j.contains("suite")) cfg.suite = parse_suite(j.at("suite").get<std::string>());
    if (j.contains("exact_depth_cap")) cfg.exact_depth_cap = j.at("exact_depth_cap").get<std::size_t>();
    if (j.contains("float_depth_cap")) cfg.float_depth_cap = j.at("float_depth_cap").get<std::size_t>();

    // R2PENCIL_BACKEND overrides the config's backend selection.
    if (const char* env = std::getenv("R2PENCIL_BACKEND")) cfg.backend = parse_backend(env);

    cfg.echo = j;
    return cfg;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw ConfigError("config parse error in " + path + ": " + ex.what());
    }
    return config_from_json(j);
}

// Materialize the configured parameter sequence in backend S, validating
// the ParamSeq invariants (violations are config errors).
template <class S>
ParamSeq<S> config_params(const RunConfig& cfg) {
    ParamSeq<S> p;
    if (cfg.mode == RunConfig::Mode::random) {
        p = gen_instance<S>(cfg.seed, cfg.depth, cfg.unimodular_beta);
    } else if (cfg.preset == "s1") {
        p = preset_s1<S>();
    } else if (cfg.preset == "s2") {
        p = preset_s2<S>();
    } else {
        using traits = ScalarTraits<S>;
        for (const auto& v : cfg.alpha) p.alpha.push_back(v.materialize<S>());
        for (const auto& v : cfg.beta) p.beta.push_back(v.materialize<S>());
        for (const auto& v : cfg.e) p.e.push_back(v.materialize<S>());
        for (const auto& v : cfg.d) p.d.push_back(v.materialize<S>());
        for (const auto& v : cfg.c) p.c.push_back(v.materialize<S>());
        if (!p.beta.empty() && !traits::is_zero(p.beta[0]) )
            throw ConfigError("beta[0] must be exactly 0");
    }
    p.validate();
    return p;
}

} // namespace r2pencil

#endif
