#include "cli.hpp"

#include "toric/catalog.hpp"
#include "toric/filtration.hpp"
#include "toric/json_io.hpp"
#include "toric/kstability.hpp"
#include "toric/position.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace toric::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kCatalogDirEnv = "TORIC_KSTAB_CATALOG_DIR";

class InputError : public Error {
public:
    using Error::Error;
};

std::optional<fs::path> user_catalog_dir() {
    const char* dir = std::getenv(kCatalogDirEnv);
    if (!dir || !*dir) return std::nullopt;
    return fs::path(dir);
}

std::vector<std::string> user_catalog_names() {
    std::vector<std::string> names;
    auto dir = user_catalog_dir();
    if (!dir || !fs::is_directory(*dir)) return names;
    for (const auto& e : fs::directory_iterator(*dir))
        if (e.is_regular_file() && e.path().extension() == ".json") names.push_back(e.path().stem().string());
    std::sort(names.begin(), names.end());
    return names;
}

Fan fan_from_stream(std::istream& is, const std::string& source) {
    Json j;
    try {
        j = Json::parse(is);
    } catch (const Json::parse_error& e) {
        throw InputError("malformed JSON in " + source + ": " + e.what());
    }
    try {
        return fan_from_json(j);
    } catch (const FanStructureError& e) {
        throw InputError("invalid fan in " + source + ": " + e.what());
    } catch (const SchemaError& e) {
        throw InputError("invalid fan in " + source + ": " + e.what());
    }
}

Fan fan_from_file(const fs::path& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot read " + path.string());
    return fan_from_stream(f, path.string());
}

std::optional<fs::path> user_catalog_file(const std::string& name) {
    auto dir = user_catalog_dir();
    if (!dir) return std::nullopt;
    auto p = *dir / (name + ".json");
    if (fs::is_regular_file(p)) return p;
    return std::nullopt;
}

bool is_builtin(const std::string& name) {
    auto names = catalog_list();
    return std::binary_search(names.begin(), names.end(), name);
}

Fan resolve_fan(const std::string& input, std::istream& in) {
    if (input == "-") return fan_from_stream(in, "standard input");
    if (is_builtin(input)) return catalog_get(input).fan;
    if (auto p = user_catalog_file(input)) return fan_from_file(*p);
    if (fs::is_regular_file(input)) return fan_from_file(input);
    std::string known;
    for (const auto& n : catalog_list()) known += (known.empty() ? "" : ", ") + n;
    throw InputError("'" + input + "' is neither a catalog name nor a readable fan file (catalog: " + known + ")");
}

ToricFano certified(const Fan& fan) {
    try {
        return ToricFano(fan);
    } catch (const NotQFanoError& e) {
        throw InputError(e.what());
    }
}

std::vector<std::string> split(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(item);
    return parts;
}

std::vector<std::size_t> parse_indices(const std::string& s) {
    std::vector<std::size_t> out;
    for (const auto& part : split(s)) {
        Rational r = Rational::parse(part);
        if (!r.is_integer() || r.sign() < 0) throw InputError("'" + part + "' is not a ray index");
        out.push_back(r.numerator().get_ui());
    }
    if (out.empty()) throw InputError("empty ray list");
    return out;
}

std::string braces(const std::vector<std::size_t>& v) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str() + '}';
}

void print_report_text(std::ostream& out, const KStabilityReport& r) {
    out << "barycenter: " << r.barycenter << '\n';
    out << "anticanonical volume: " << r.anticanonical_volume << '\n';
    for (std::size_t i = 0; i < r.betas.size(); ++i) out << "beta(-K, D_" << i << "): " << r.betas[i] << '\n';
    out << "delta: " << r.delta << " (attained at rays " << braces(r.minimizing_rays) << ")\n";
    out << "verdict: " << to_string(r.verdict) << '\n';
    out << "eligible rays: " << braces(r.eligible_rays) << '\n';
    out << "smooth: " << (r.smooth ? "yes" : "no") << '\n';
}

void print_position_text(std::ostream& out, const PositionReport& r) {
    out << "rays: " << braces(r.rays) << '\n';
    out << "intersect properly: " << (r.intersect_properly ? "yes" : "no") << '\n';
    out << "general position (strict): " << (r.general_position_strict ? "yes" : "no") << '\n';
    out << "general position (lenient): " << (r.general_position_lenient ? "yes" : "no") << '\n';
    for (const auto& w : r.witnesses) {
        out << "  " << braces(w.subset) << ": ";
        if (w.dimension)
            out << "dimension " << *w.dimension;
        else
            out << "EMPTY";
        out << '\n';
    }
}

void print_certificate_text(std::ostream& out, const VojtaCertificate& c) {
    out << "route: " << to_string(c.route) << '\n';
    out << "chosen rays: " << braces(c.chosen_rays) << '\n';
    if (c.reference_ray) out << "reference ray: " << *c.reference_ray << '\n';
    for (const auto& check : c.checks)
        out << "  [" << (check.passed ? "pass" : "FAIL") << (check.gating ? "" : ", informational") << "] "
            << check.id << " " << check.name << ": " << check.witness << '\n';
    out << "certificate: " << (c.valid() ? "VALID" : "INVALID") << '\n';
}

struct Options {
    std::string input;
    std::string format = "json";
    std::string divisor;
    std::size_t ray = 0;
    unsigned long max_n = 40;
    std::string rays;
    std::string route;
    std::optional<std::size_t> reference;
    std::optional<std::string> catalog_name;
    bool export_fan = false;
};

int dispatch(CLI::App& app, const Options& o, std::istream& in, std::ostream& out) {
    const bool json = o.format == "json";
    auto emit = [&](const Json& j) { out << j.dump(2) << '\n'; };

    if (app.got_subcommand("analyze")) {
        const auto x = certified(resolve_fan(o.input, in));
        const auto report = analyze(x);
        if (json)
            emit(report_to_json(report, x));
        else
            print_report_text(out, report);
        return kExitOk;
    }
    if (app.got_subcommand("beta")) {
        const Fan fan = resolve_fan(o.input, in);
        certified(fan);
        ToricDivisor d;
        for (const auto& part : split(o.divisor)) d.coefficients.push_back(Rational::parse(part));
        if (d.size() != fan.ray_count())
            throw InputError("--divisor has " + std::to_string(d.size()) + " coefficients but the fan has " +
                             std::to_string(fan.ray_count()) + " rays");
        const Rational beta = beta_exact_general(fan, d);
        if (json) {
            Json j;
            j["divisor"] = Json::array();
            for (const auto& c : d.coefficients) j["divisor"].push_back(c.str());
            j["beta"] = beta.str();
            emit(j);
        } else {
            out << "beta(-K, D) = " << beta << '\n';
        }
        return kExitOk;
    }
    if (app.got_subcommand("sweep")) {
        const Fan fan = resolve_fan(o.input, in);
        certified(fan);
        if (o.max_n == 0) throw InputError("--max-N must be positive");
        out << "N,section_count,estimate,exact_target,abs_error\n";
        for (const auto& row : beta_sweep(fan, o.ray, o.max_n))
            out << row.dilation << ',' << row.section_count.get_str() << ',' << row.estimate << ','
                << row.exact_target << ',' << row.abs_error << '\n';
        return kExitOk;
    }
    if (app.got_subcommand("position")) {
        const Fan fan = resolve_fan(o.input, in);
        const auto diag = validate_fan(fan);
        if (!diag.complete) throw InputError("fan is not complete: " + diag.failures.front());
        const auto report = general_position_report(fan, parse_indices(o.rays));
        if (json)
            emit(position_to_json(report));
        else
            print_position_text(out, report);
        return kExitOk;
    }
    if (app.got_subcommand("certify")) {
        const auto route = parse_route(o.route);
        if (!route) throw InputError("--route must be B or C");
        const auto x = certified(resolve_fan(o.input, in));
        const auto cert = vojta_certificate(x, *route, parse_indices(o.rays), o.reference);
        if (json)
            emit(certificate_to_json(cert));
        else
            print_certificate_text(out, cert);
        return cert.valid() ? kExitOk : kExitInvalidCertificate;
    }
    if (app.got_subcommand("catalog")) {
        if (!o.catalog_name) {
            std::set<std::string> names;
            for (const auto& n : catalog_list()) names.insert(n);
            for (const auto& n : user_catalog_names()) names.insert(n);
            if (json) {
                emit(Json(std::vector<std::string>(names.begin(), names.end())));
            } else {
                for (const auto& n : names) out << n << '\n';
            }
            return kExitOk;
        }
        const std::string& name = *o.catalog_name;
        std::optional<CatalogEntry> entry;
        if (is_builtin(name)) {
            entry = catalog_get(name);
        } else if (auto p = user_catalog_file(name)) {
            entry = CatalogEntry{name, fan_from_file(*p), std::nullopt, "user file " + p->string()};
        } else {
            catalog_get(name);  // throws with the list of available names
        }
        if (o.export_fan) {
            emit(fan_to_json(entry->fan));
        } else if (json) {
            emit(catalog_entry_to_json(*entry));
        } else {
            out << entry->name << ": " << entry->provenance << '\n';
            if (entry->expected_verdict) out << "expected verdict: " << to_string(*entry->expected_verdict) << '\n';
        }
        return kExitOk;
    }
    throw InputError("no command given");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact K-stability invariants of toric Q-Fano varieties", "toric-kstab"};
    app.require_subcommand(1);
    Options o;
    const auto formats = CLI::IsMember({"json", "text"});

    auto* analyze_cmd = app.add_subcommand("analyze", "Barycenter, beta values, delta and verdict");
    analyze_cmd->add_option("fan", o.input, "Catalog name, fan JSON file, or - for stdin")->required();
    analyze_cmd->add_option("--format", o.format, "Output format")->check(formats);

    auto* beta_cmd = app.add_subcommand("beta", "Exact beta(-K, D) for an effective divisor");
    beta_cmd->add_option("fan", o.input, "Catalog name, fan JSON file, or - for stdin")->required();
    beta_cmd->add_option("--divisor", o.divisor, "Coefficients c1,...,cd")->required();
    beta_cmd->add_option("--format", o.format, "Output format")->check(formats);

    auto* sweep_cmd = app.add_subcommand("sweep", "Lattice-count estimates of beta(-K, D_i) as CSV");
    sweep_cmd->add_option("fan", o.input, "Catalog name, fan JSON file, or - for stdin")->required();
    sweep_cmd->add_option("--ray", o.ray, "Ray index")->required();
    sweep_cmd->add_option("--max-N", o.max_n, "Largest dilation");

    auto* position_cmd = app.add_subcommand("position", "Proper intersection and general position");
    position_cmd->add_option("fan", o.input, "Catalog name, fan JSON file, or - for stdin")->required();
    position_cmd->add_option("--rays", o.rays, "Ray indices i,j,...")->required();
    position_cmd->add_option("--format", o.format, "Output format")->check(formats);

    auto* certify_cmd = app.add_subcommand("certify", "Check the hypotheses of a route for chosen rays");
    certify_cmd->add_option("fan", o.input, "Catalog name, fan JSON file, or - for stdin")->required();
    certify_cmd->add_option("--route", o.route, "B or C")->required();
    certify_cmd->add_option("--rays", o.rays, "Ray indices i,j,...")->required();
    certify_cmd->add_option("--reference", o.reference, "Reference ray E (route B)");
    certify_cmd->add_option("--format", o.format, "Output format")->check(formats);

    auto* catalog_cmd = app.add_subcommand("catalog", "List built-in fans or export one");
    catalog_cmd->add_option("name", o.catalog_name, "Entry to show");
    catalog_cmd->add_flag("--export", o.export_fan, "Print only the fan JSON");
    catalog_cmd->add_option("--format", o.format, "Output format")->check(formats);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        return dispatch(app, o, in, out);
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e) ||
            dynamic_cast<const std::domain_error*>(&e)) {
            err << "error: " << e.what() << '\n';
            return kExitInputError;
        }
        err << "internal error: " << e.what() << '\n';
        return kExitInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

}  // namespace toric::cli
