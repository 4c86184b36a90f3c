#include "evolkit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "evolkit/descent.hpp"
#include "evolkit/errors.hpp"
#include "evolkit/io.hpp"
#include "evolkit/radical.hpp"
#include "evolkit/report.hpp"
#include "evolkit/spectra.hpp"

namespace evolkit {

using nlohmann::json;

namespace {

std::string load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json scalars_json(const Vector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

json element_json(const Element& e) { return scalars_json(e.coeffs); }

json indices_json(const std::vector<int>& zero_based) {
    json a = json::array();
    for (int i : zero_based) a.push_back(i + 1);
    return a;
}

std::vector<int> parse_index_set(const std::string& text, int n) {
    std::vector<int> out;
    std::string current;
    std::istringstream ss(text);
    while (std::getline(ss, current, ',')) {
        std::string t = current;
        t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }),
                t.end());
        if (t.empty()) throw InvalidInput("index set: empty entry");
        try {
            std::size_t pos = 0;
            int v = std::stoi(t, &pos);
            if (pos != t.size()) throw std::invalid_argument(t);
            if (v < 1 || v > n) throw InvalidInput("index " + t + " out of range 1.." + std::to_string(n));
            out.push_back(v - 1);
        } catch (const std::invalid_argument&) {
            throw InvalidInput("index set: malformed entry '" + t + "'");
        } catch (const std::out_of_range&) {
            throw InvalidInput("index set: malformed entry '" + t + "'");
        }
    }
    if (out.empty()) throw InvalidInput("index set: no entries");
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

json spectrum_json(const SpectrumResult& r) {
    json out;
    out["kind"] = r.kind == SpectrumKind::spectrum ? "spectrum" : "m_spectrum";
    json pts = json::array();
    for (const auto& p : r.exact_points) pts.push_back(p.str());
    out["exact_points"] = std::move(pts);
    json npts = json::array();
    for (const auto& z : r.numeric_points) npts.push_back(format_complex(z));
    out["numeric_points"] = std::move(npts);
    out["contains_zero"] = r.contains_zero;
    out["certainty"] = r.certainty == Certainty::exact ? "exact" : "mixed";
    return out;
}

const char* verdict_value_name(VerdictValue v) {
    switch (v) {
        case VerdictValue::yes: return "yes";
        case VerdictValue::no: return "no";
        default: return "probably_yes";
    }
}

json verdict_json(const SemisimplicityVerdict& v) {
    json out;
    out["value"] = verdict_value_name(v.value);
    out["certified"] = v.certified;
    if (v.witness_index) out["witness_index"] = *v.witness_index + 1;
    if (v.witness_element) out["witness_element"] = element_json(*v.witness_element);
    if (!v.index_witnesses.empty()) {
        json ws = json::array();
        for (const auto& [i, e] : v.index_witnesses)
            ws.push_back(json{{"index", i + 1}, {"element", element_json(e)}});
        out["witnesses"] = std::move(ws);
    }
    return out;
}

const char* classification_name(RadicalClass c) {
    switch (c) {
        case RadicalClass::semisimple: return "semisimple";
        case RadicalClass::radical: return "radical";
        default: return "intermediate";
    }
}

json radical_json(const EvolutionAlgebra& alg, const RadicalReport& rad) {
    json res;
    res["dimension"] = alg.dim();
    res["modular_indexes"] = indices_json(rad.modular_indexes);
    res["radical_support"] = indices_json(rad.radical_support);
    res["classification"] = classification_name(rad.classification);
    json qd = json::array();
    for (const auto& w : rad.quotient_diag) qd.push_back(w.str());
    res["quotient_diag"] = std::move(qd);
    return res;
}

json maximal_ideals_json(const EvolutionAlgebra& alg) {
    json arr = json::array();
    const std::vector<int> mods = modular_indexes(alg);
    const std::vector<IdealDescriptor> ideals = maximal_modular_ideals(alg);
    for (std::size_t k = 0; k < ideals.size(); ++k) {
        json d;
        d["index"] = mods[k] + 1;
        d["support"] = indices_json(ideals[k].support);
        d["modular_unit"] = element_json(*ideals[k].modular_unit);
        arr.push_back(std::move(d));
    }
    return arr;
}

struct Options {
    std::string format = "text";
    std::uint64_t seed = 1;
    unsigned trials = 16;
    double tol = 1e-9;
    bool strict = false;
};

void add_verdict_warnings(const json& verdict, const std::string& name, std::vector<std::string>& warnings,
                          bool& uncertified) {
    if (!verdict["certified"].get<bool>()) {
        uncertified = true;
        warnings.push_back(name + " verdict is probabilistic (value " +
                           verdict["value"].get<std::string>() + "); rerun with more --trials");
    }
}

} // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of finite-dimensional evolution algebras"};
    app.name("evolkit");
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    auto* seed_opt = app.add_option("--seed", opt.seed, "Seed for randomized verdict paths");
    app.add_option("--trials", opt.trials, "Sample count for randomized verdict paths")
        ->check(CLI::Range(1u, 1000000u))
        ->capture_default_str();
    app.add_option("--tol", opt.tol, "Tolerance for numeric roots and rank tests")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--strict", opt.strict, "Exit 3 when a verdict stays uncertified");

    std::string file;
    std::string element_text;
    std::string a_text;
    std::string b_text;
    std::string validate_text;
    std::string mode_text = "exact";
    int index_1based = 0;
    int generation = 0;
    bool m_only = false;

    auto add_file = [&file](CLI::App* cmd) {
        cmd->add_option("file", file, "Algebra document (JSON)")->required();
    };

    CLI::App* classify = app.add_subcommand("classify", "Unit, radical, quotient, and semisimplicity");
    add_file(classify);
    CLI::App* radical_cmd = app.add_subcommand("radical", "Modular indexes and Jacobson radical");
    add_file(radical_cmd);
    CLI::App* ideals = app.add_subcommand("ideals", "Maximal modular ideals; optional support validation");
    add_file(ideals);
    ideals->add_option("--validate-support", validate_text, "Comma-separated 1-based index set");
    CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "Spectrum and m-spectrum of an element");
    add_file(spectrum_cmd);
    spectrum_cmd->add_option("--element", element_text, "Comma-separated coefficients")->required();
    spectrum_cmd->add_flag("--m-only", m_only, "Report only the m-spectrum");
    spectrum_cmd->add_option("--mode", mode_text, "exact or numeric")
        ->check(CLI::IsMember({"exact", "numeric"}))
        ->capture_default_str();
    CLI::App* descendants_cmd = app.add_subcommand("descendants", "Descendant sets of an index");
    add_file(descendants_cmd);
    descendants_cmd->add_option("--index", index_1based, "1-based index")->required();
    auto* gen_opt = descendants_cmd->add_option("--generation", generation, "Exact generation m >= 1");
    CLI::App* product_cmd = app.add_subcommand("product", "Product of two elements");
    add_file(product_cmd);
    product_cmd->add_option("--a", a_text, "Left factor")->required();
    product_cmd->add_option("--b", b_text, "Right factor")->required();
    CLI::App* qinv_cmd = app.add_subcommand("quasi-inverse", "Quasi-inverse of an element");
    add_file(qinv_cmd);
    qinv_cmd->add_option("--element", element_text, "Comma-separated coefficients")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return 1;
    }

    if (seed_opt->count() == 0) {
        if (const char* env = std::getenv("EVOLKIT_SEED")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end == env || *end != '\0') {
                err << "error: EVOLKIT_SEED must be an unsigned integer\n";
                return 1;
            }
            opt.seed = v;
        }
    }

    CLI::App* cmd = app.get_subcommands().front();
    const std::string command = cmd->get_name();
    const ReportFormat fmt = opt.format == "json" ? ReportFormat::json : ReportFormat::text;

    Report report;
    report.command = command;
    int exit_code = 0;

    try {
        const EvolutionAlgebra alg = parse_algebra(load_file(file));
        report.input_digest = input_digest(serialize_algebra_document(alg));
        json& res = report.results;

        if (cmd == classify) {
            res["dimension"] = alg.dim();
            if (alg.labels()) res["labels"] = *alg.labels();
            auto unit = unit_of(alg);
            res["unit"] = unit ? element_json(*unit) : json("none");
            const std::vector<int> ann = annihilator(alg);
            res["annihilator"] = indices_json(ann);
            res["degenerate"] = !ann.empty();
            res["nonzero_trivial"] = is_nonzero_trivial(alg);
            res["unitization_is_evolution"] = unitization_is_evolution(alg);
            const RadicalReport rad = jacobson_radical(alg);
            res.update(radical_json(alg, rad));
            res["maximal_modular_ideals"] = maximal_ideals_json(alg);
            res["semisimple"] = rad.classification == RadicalClass::semisimple;
            res["spectrally_semisimple"] =
                verdict_json(spectrally_semisimple_check(alg, opt.trials, opt.seed));
            res["m_semisimple"] = verdict_json(m_semisimple_check(alg, opt.trials, opt.seed));
            bool uncertified = false;
            add_verdict_warnings(res["spectrally_semisimple"], "spectrally_semisimple", report.warnings,
                                 uncertified);
            add_verdict_warnings(res["m_semisimple"], "m_semisimple", report.warnings, uncertified);
            if (uncertified && opt.strict) exit_code = 3;
        } else if (cmd == radical_cmd) {
            res = radical_json(alg, jacobson_radical(alg));
        } else if (cmd == ideals) {
            res["maximal_modular_ideals"] = maximal_ideals_json(alg);
            if (!validate_text.empty()) {
                const std::vector<int> support = parse_index_set(validate_text, alg.dim());
                const ModularSupportCheck chk = is_modular_ideal_support(alg, support);
                json v;
                v["support"] = indices_json(support);
                v["valid"] = chk.valid;
                if (chk.unit) v["modular_unit"] = element_json(*chk.unit);
                res["validation"] = std::move(v);
            }
        } else if (cmd == spectrum_cmd) {
            const Element a = parse_element(element_text, alg.dim());
            const SpectrumMode mode =
                mode_text == "numeric" ? SpectrumMode::numeric : SpectrumMode::exact;
            const SpectrumResult ms = m_spectrum(alg, a, mode, opt.tol);
            res["element"] = element_json(a);
            res["m_spectrum"] = spectrum_json(ms);
            std::optional<SpectrumResult> s;
            if (!m_only) {
                s = spectrum(alg, a, mode, opt.tol);
                res["spectrum"] = spectrum_json(*s);
            }
            const SpectralRadii radii = spectral_radii(alg, a, opt.tol);
            res["radii"] = json{{"rho", format_numeric(radii.rho)},
                                {"rho_m", format_numeric(radii.rho_m)},
                                {"rho_zero_exact", radii.rho_zero_exact},
                                {"rho_m_zero_exact", radii.rho_m_zero_exact}};
            if (ms.certainty == Certainty::mixed)
                report.warnings.push_back(
                    "characteristic polynomial has a residual factor without Gaussian-rational "
                    "roots; exact points are a subset (certainty mixed)");
            if (s && !s->numeric_points.empty())
                report.warnings.push_back(
                    "numeric spectrum membership decided by rank comparison at tolerance " +
                    format_numeric(opt.tol));
        } else if (cmd == descendants_cmd) {
            if (index_1based < 1 || index_1based > alg.dim())
                throw InvalidInput("--index out of range 1.." + std::to_string(alg.dim()));
            DescentGraph g(alg);
            res["index"] = index_1based;
            if (gen_opt->count() > 0) {
                if (generation < 1) throw InvalidInput("--generation must be at least 1");
                res["generation"] = generation;
                res["indices"] =
                    indices_json(g.nth_generation(index_1based - 1, static_cast<unsigned>(generation)));
            } else {
                res["indices"] = indices_json(g.descendants(index_1based - 1));
            }
        } else if (cmd == product_cmd) {
            const Element a = parse_element(a_text, alg.dim());
            const Element b = parse_element(b_text, alg.dim());
            res["a"] = element_json(a);
            res["b"] = element_json(b);
            res["product"] = element_json(product(alg, a, b));
        } else { // quasi-inverse
            const Element a = parse_element(element_text, alg.dim());
            const auto qi = quasi_inverse(alg, a);
            res["element"] = element_json(a);
            res["quasi_inverse"] = qi ? element_json(*qi) : json("none");
        }
    } catch (const NumericFailure& e) {
        report.results = json::object();
        report.results["error"] = e.what();
        json best = json::array();
        for (const auto& z : e.best_iterate) best.push_back(format_complex(z));
        report.results["best_iterate"] = std::move(best);
        report.warnings.push_back(e.what());
        out << emit_report(report, fmt);
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidInput& e) {
        report.results = json::object();
        report.results["error"] = e.what();
        report.warnings.push_back(e.what());
        out << emit_report(report, fmt);
        err << "error: " << e.what() << "\n";
        return 1;
    }

    out << emit_report(report, fmt);
    return exit_code;
}

} // namespace evolkit
