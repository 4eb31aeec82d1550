// padicres: JSON front end to the library.
//
//   padicres SUBCOMMAND [--in FILE] [--out FILE] [--precision N] [--xprec M]
//            [--seed S] [--threads T] [--timings]
//   padicres --schema SUBCOMMAND
//
// Exit codes: 0 ok, 1 domain error, 2 malformed input or usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <regex>
#include <sstream>
#include <string>

#include "padicres/dynamics.hpp"
#include "padicres/errors.hpp"
#include "padicres/hensel.hpp"
#include "padicres/resultant.hpp"
#include "padicres/series.hpp"
#include "padicres/universal.hpp"
#include "padicres/weierstrass.hpp"

using json = nlohmann::json;
using namespace padicres;

namespace {

struct SchemaError : std::runtime_error {
    std::string path;
    SchemaError(std::string p, const std::string& what) : std::runtime_error(what), path(std::move(p)) {}
};

struct Overrides {
    std::optional<int> precision;
    std::optional<int> xprec;
    std::optional<std::uint64_t> seed;
    int threads = 1;
};

// ---- reading ---------------------------------------------------------------

const json& member(const json& obj, const std::string& key, const std::string& path) {
    if (!obj.is_object()) throw SchemaError(path, "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) throw SchemaError(path + "." + key, "missing field");
    return *it;
}

const json* optional_member(const json& obj, const std::string& key) {
    auto it = obj.find(key);
    return it == obj.end() || it->is_null() ? nullptr : &*it;
}

long read_int(const json& v, const std::string& path) {
    if (v.is_number_integer()) return v.get<long>();
    if (v.is_string()) {
        const auto& s = v.get_ref<const std::string&>();
        static const std::regex re("-?[0-9]{1,18}");
        if (std::regex_match(s, re)) return std::stol(s);
    }
    throw SchemaError(path, "expected an integer");
}

mpz_class read_big(const json& v, const std::string& path) {
    if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
    if (v.is_string()) {
        static const std::regex re("-?[0-9]+");
        const auto& s = v.get_ref<const std::string&>();
        if (std::regex_match(s, re)) return mpz_class(s);
    }
    throw SchemaError(path, "expected an integer or a decimal string");
}

FieldRef read_field(const json& in, const Overrides& ov, const std::string& path = "$.field") {
    const json& f = member(in, "field", "$");
    const long p = read_int(member(f, "p", path), path + ".p");
    int N = static_cast<int>(read_int(member(f, "precision", path), path + ".precision"));
    if (ov.precision) N = *ov.precision;
    std::vector<mpz_class> eis;
    if (const json* e = optional_member(f, "eisenstein")) {
        if (!e->is_array()) throw SchemaError(path + ".eisenstein", "expected an array");
        for (size_t i = 0; i < e->size(); ++i) eis.push_back(read_big((*e)[i], path + ".eisenstein[" + std::to_string(i) + "]"));
    } else {
        eis = {mpz_class(-p), mpz_class(1)};
    }
    try {
        return FieldSpec::create(p, eis, N);
    } catch (const UsageError& e) {
        throw SchemaError(path, e.what());
    }
}

OKElement read_element(const FieldRef& field, const json& v, const std::string& path) {
    if (v.is_array()) {
        if (static_cast<int>(v.size()) != field->e())
            throw SchemaError(path, "expected " + std::to_string(field->e()) + " coordinates");
        std::vector<mpz_class> c;
        for (size_t i = 0; i < v.size(); ++i) c.push_back(read_big(v[i], path + "[" + std::to_string(i) + "]"));
        return OKElement::from_coords(field, std::move(c));
    }
    return OKElement(field, read_big(v, path));
}

std::vector<OKElement> read_elements(const FieldRef& field, const json& v, const std::string& path) {
    if (!v.is_array()) throw SchemaError(path, "expected an array");
    std::vector<OKElement> out;
    for (size_t i = 0; i < v.size(); ++i) out.push_back(read_element(field, v[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

struct SeriesInput {
    PowerSeries series;
    bool polynomial = false;
};

// {"coeffs": [...], "xprec": M, "polynomial": bool}. --xprec replaces M;
// coefficients beyond it are dropped.
SeriesInput read_series(const FieldRef& field, const json& in, const std::string& key, const Overrides& ov) {
    const std::string path = "$." + key;
    const json& s = member(in, key, "$");
    std::vector<OKElement> c = read_elements(field, member(s, "coeffs", path), path + ".coeffs");
    int M = static_cast<int>(c.size());
    if (const json* x = optional_member(s, "xprec")) M = static_cast<int>(read_int(*x, path + ".xprec"));
    if (ov.xprec) M = *ov.xprec;
    if (M < 0) throw SchemaError(path + ".xprec", "must be >= 0");
    SeriesInput out;
    if (const json* p = optional_member(s, "polynomial")) {
        if (!p->is_boolean()) throw SchemaError(path + ".polynomial", "expected a boolean");
        out.polynomial = p->get<bool>();
    }
    if (static_cast<int>(c.size()) > M) {
        if (out.polynomial) throw SchemaError(path + ".xprec", "below the degree of an exact polynomial");
        c.resize(M, OKElement::zero(field));
    }
    out.series = PowerSeries::from_coeffs(field, c, M);
    return out;
}

ResidueSeries read_residue(const json& in, const std::string& path, const Overrides& ov) {
    const long p = read_int(member(in, "p", path), path + ".p");
    const json& c = member(in, "coeffs", path);
    if (!c.is_array()) throw SchemaError(path + ".coeffs", "expected an array");
    std::vector<long> coeffs;
    for (size_t i = 0; i < c.size(); ++i) coeffs.push_back(read_int(c[i], path + ".coeffs[" + std::to_string(i) + "]"));
    int M = static_cast<int>(coeffs.size());
    if (const json* x = optional_member(in, "xprec")) M = static_cast<int>(read_int(*x, path + ".xprec"));
    if (ov.xprec) M = *ov.xprec;
    if (static_cast<int>(coeffs.size()) > M) coeffs.resize(M);
    try {
        return ResidueSeries(p, coeffs, M);
    } catch (const UsageError& e) {
        throw SchemaError(path, e.what());
    }
}

// ---- writing ---------------------------------------------------------------

json element_json(const OKElement& x) {
    json a = json::array();
    for (const auto& c : x.coords()) a.push_back(c.get_str());
    return a;
}

json elements_json(const std::vector<OKElement>& xs) {
    json a = json::array();
    for (const auto& x : xs) a.push_back(element_json(x));
    return a;
}

json series_json(const PowerSeries& f) { return {{"coeffs", elements_json(f.coeffs())}, {"xprec", f.xprec()}}; }

json polynomial_json(const Polynomial& f) { return elements_json(f.coeffs()); }

json valuation_json(const Valuation& v) { return {{"value", v.value}, {"exact", v.exact}}; }

json certified_json(const CertifiedElement& c) {
    return {{"value", element_json(c.value)}, {"precision", c.precision}, {"valuation", valuation_json(c.valuation())}};
}

json universal_json(const UniversalSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.poly.sorted_terms()) {
        json exps = json::object();
        for (const auto& [name, k] : s.labelled(e)) exps[name] = k;
        terms.push_back({{"exps", exps}, {"coeff", c.get_str()}});
    }
    return {{"order", s.order}, {"terms", terms}, {"text", s.to_string()}};
}

struct Result {
    json payload;
    int certified_precision = 0;
};

// ---- subcommands -----------------------------------------------------------

Result cmd_prepare(const json& in, const Overrides& ov) {
    const FieldRef field = read_field(in, ov);
    const PowerSeries f = read_series(field, in, "f", ov).series;
    const WeierstrassFactorization w = weierstrass_prepare(f);
    return {{{"wideg", w.p.degree()},
             {"p", elements_json(w.p.lows())},
             {"u", series_json(w.u)},
             {"reconstruction_ok", w.reconstructs(f)}},
            field->precision()};
}

Result cmd_divide(const json& in, const Overrides& ov) {
    const FieldRef field = read_field(in, ov);
    const PowerSeries g = read_series(field, in, "g", ov).series;
    const PowerSeries f = read_series(field, in, "f", ov).series;
    const WeierstrassDivision d = weierstrass_divide(g, f);
    return {{{"quotient", series_json(d.quotient)}, {"remainder", polynomial_json(d.remainder)}, {"sweeps", d.sweeps}},
            field->precision()};
}

Result cmd_resultant(const json& in, const Overrides& ov) {
    const FieldRef field = read_field(in, ov);
    const PowerSeries f = read_series(field, in, "f", ov).series;
    const SeriesInput g = read_series(field, in, "g", ov);
    const CertifiedElement r = g.polynomial ? res_n(f, g.series.low_part(g.series.xprec())) : res_n(f, g.series);
    json payload = certified_json(r);
    payload["common_root"] = r.certified_nonzero() ? "none" : "possible";
    return {payload, r.precision};
}

Result cmd_discriminant(const json& in, const Overrides& ov) {
    const FieldRef field = read_field(in, ov);
    const PowerSeries f = read_series(field, in, "f", ov).series;
    const CertifiedElement d = disc_n(f);
    return {certified_json(d), d.precision};
}

Result cmd_newton(const json& in, const Overrides& ov) {
    const FieldRef field = read_field(in, ov);
    const PowerSeries f = read_series(field, in, "f", ov).series;
    const NewtonPolygon np = newton_polygon(f);
    json segs = json::array();
    for (const auto& s : np.segments)
        segs.push_back({{"slope", to_string(s.slope)}, {"length", s.length}, {"start", s.start}, {"certified", s.certified}});
    json payload{{"segments", segs},
                 {"zero_multiplicity", np.zero_multiplicity},
                 {"wideg", np.wideg},
                 {"roots_in_open_disk", np.wideg}};
    payload["certified_up_to"] = np.certified_up_to ? json(to_string(*np.certified_up_to)) : json(nullptr);
    return {payload, field->precision()};
}

Result cmd_hensel(const json& in, const Overrides& ov) {
    const FieldRef field = read_field(in, ov);
    const PowerSeries f = read_series(field, in, "f", ov).series;
    const HenselFactorization h = hensel_factor(f);
    return {{{"mu_min", h.mu.n},
             {"d", h.mu.d},
             {"P", polynomial_json(h.P)},
             {"U", series_json(h.U)},
             {"rounds", h.rounds},
             {"reconstruction_ok", h.reconstructs(f)}},
            field->precision()};
}

Result cmd_slope0(const json& in, const Overrides& ov) {
    const FieldRef field = read_field(in, ov);
    const std::vector<OKElement> c = read_elements(field, member(in, "F", "$"), "$.F");
    const Polynomial P = slope_zero_factor(Polynomial(field, c));
    return {{{"P", polynomial_json(P)}, {"degree", P.degree()}}, field->precision()};
}

Result cmd_sen(const json& in, const Overrides& ov) {
    const ResidueSeries w = read_residue(member(in, "w", "$"), "$.w", ov);
    const int n_max = static_cast<int>(read_int(member(in, "n_max", "$"), "$.n_max"));
    SenPolicy policy = SenPolicy::throw_on_indeterminate;
    if (const json* p = optional_member(in, "policy")) {
        if (*p == "record") policy = SenPolicy::record_indeterminate;
        else if (*p != "throw") throw SchemaError("$.policy", "expected \"throw\" or \"record\"");
    }
    const SenReport r = sen_check(w, n_max, policy);
    static const char* names[] = {"pass", "fail", "vacuous", "indeterminate"};
    json pairs = json::array();
    for (const auto& s : r.pairs)
        pairs.push_back({{"n", s.n},
                         {"i_prev", to_string(s.i_prev)},
                         {"i", to_string(s.i)},
                         {"mod", s.modulus},
                         {"pass", s.status == SenPair::Status::pass || s.status == SenPair::Status::vacuous},
                         {"status", names[static_cast<int>(s.status)]}});
    return {{{"pairs", pairs}, {"all_pass", r.all_pass()}}, 0};
}

Result cmd_lift(const json& in, const Overrides& ov) {
    const ResidueSeries w = read_residue(member(in, "w", "$"), "$.w", ov);
    Overrides field_ov = ov;
    field_ov.xprec.reset();
    const FieldRef field = read_field(in, field_ov);
    LiftOptions opt;
    const json& ns = member(in, "ns", "$");
    if (!ns.is_array()) throw SchemaError("$.ns", "expected an array");
    for (size_t i = 0; i < ns.size(); ++i) opt.ns.insert(static_cast<int>(read_int(ns[i], "$.ns[" + std::to_string(i) + "]")));
    if (const json* b = optional_member(in, "budget")) opt.budget = static_cast<int>(read_int(*b, "$.budget"));
    if (const json* s = optional_member(in, "seed")) opt.seed = static_cast<std::uint64_t>(read_int(*s, "$.seed"));
    if (ov.seed) opt.seed = *ov.seed;
    opt.threads = ov.threads;
    const LiftReport r = good_lift_search(w, field, opt);
    json discs = json::object();
    for (const auto& [n, d] : r.discriminants) discs[std::to_string(n)] = certified_json(d);
    json ram = json::object();
    for (const auto& [n, i] : r.ramification) ram[std::to_string(n)] = i;
    return {{{"lift", series_json(r.lift)},
             {"accepted_candidate", r.accepted_candidate},
             {"checked", r.checked},
             {"discriminants", discs},
             {"i_n", ram},
             {"seed", std::to_string(r.seed)},
             {"budget", r.budget},
             {"working_xprec", r.working_xprec}},
            field->precision()};
}

Result cmd_universal(const json& in, const Overrides&) {
    const json& op = member(in, "op", "$");
    auto get = [&](const char* key) { return static_cast<int>(read_int(member(in, key, "$"), std::string("$.") + key)); };
    if (op == "prepare") {
        int u_xprec = -1;
        if (const json* u = optional_member(in, "u_xprec")) u_xprec = static_cast<int>(read_int(*u, "$.u_xprec"));
        const UniversalPreparation r = universal_prepare(get("n"), get("D"), get("kmax"), u_xprec);
        json P = json::array(), U = json::array();
        for (const auto& s : r.P) P.push_back(universal_json(s));
        for (const auto& s : r.U) U.push_back(universal_json(s));
        return {{{"P", P}, {"U", U}, {"u_xprec", r.u_xprec}, {"sweeps", r.sweeps}}, 0};
    }
    if (op == "bgw") return {universal_json(bgw_p0(get("D"), get("kmax"))), 0};
    if (op == "bgw_compare") {
        const BgwComparison c = compare_bgw_with_prepare(get("D"), get("kmax"));
        return {{{"equals_P0", c.equals_p0}, {"equals_F1_times_P0", c.equals_f1_times_p0}, {"D", c.D}, {"kmax", c.kmax}}, 0};
    }
    if (op == "respol") return {universal_json(respol_symmetric(get("n"), get("dmax"), get("gmax"))), 0};
    throw SchemaError("$.op", "expected one of prepare, bgw, bgw_compare, respol");
}

using Handler = std::function<Result(const json&, const Overrides&)>;

struct Command {
    Handler run;
    std::string schema;
};

std::string expand(std::string text) {
    static const std::pair<std::string, std::string> macros[] = {
        {"@F", R"("field": {"p": int, "precision": N, "eisenstein": [c_0, ..., c_e] (optional, monic)})"},
        {"@S", R"({"coeffs": [element, ...], "xprec": M (optional), "polynomial": bool (optional)})"},
        {"@W", R"("w": {"p": int, "coeffs": [int, ...], "xprec": M})"},
    };
    for (const auto& [k, v] : macros)
        for (size_t pos; (pos = text.find(k)) != std::string::npos;) text.replace(pos, k.size(), v);
    return text;
}

const std::map<std::string, Command>& commands() {
    static const std::map<std::string, Command> table{
        {"prepare", {cmd_prepare, expand(R"({@F, "f": @S})")}},
        {"divide", {cmd_divide, expand(R"({@F, "g": @S, "f": @S})")}},
        {"resultant", {cmd_resultant, expand(R"({@F, "f": @S, "g": @S})")}},
        {"discriminant", {cmd_discriminant, expand(R"({@F, "f": @S})")}},
        {"newton", {cmd_newton, expand(R"({@F, "f": @S})")}},
        {"hensel", {cmd_hensel, expand(R"({@F, "f": @S})")}},
        {"slope0", {cmd_slope0, expand(R"({@F, "F": [element, ...]})")}},
        {"sen", {cmd_sen, expand(R"({@W, "n_max": int, "policy": "throw" | "record" (optional)})")}},
        {"lift", {cmd_lift, expand(R"({@W, @F, "ns": [int, ...], "budget": int (optional), "seed": int (optional)})")}},
        {"universal", {cmd_universal, expand(R"({"op": "prepare", "n": int, "D": int, "kmax": int, "u_xprec": int (optional)})"
                                             R"( | {"op": "bgw" | "bgw_compare", "D": int, "kmax": int})"
                                             R"( | {"op": "respol", "n": int, "dmax": int, "gmax": int})")}},
    };
    return table;
}

int emit(const json& doc, const std::string& out_path) {
    const std::string text = doc.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream os(out_path);
        if (!os) {
            std::cerr << "cannot write " << out_path << "\n";
            return 2;
        }
        os << text;
    }
    return 0;
}

json error_doc(const std::string& kind, const std::string& message, const std::string& path = "") {
    json err{{"kind", kind}, {"message", message}};
    if (!path.empty()) err["path"] = path;
    return {{"status", "error"}, {"error", err}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic power series: preparation, resultants, Newton polygons, dynamics"};
    std::string sub, in_path, out_path, schema;
    Overrides ov;
    bool timings = false;
    app.add_option("subcommand", sub, "one of: prepare divide resultant discriminant newton hensel slope0 sen lift universal");
    app.add_option("--in", in_path, "input JSON file (default: stdin)");
    app.add_option("--out", out_path, "output JSON file (default: stdout)");
    app.add_option("--precision", ov.precision, "override the field precision N");
    app.add_option("--xprec", ov.xprec, "override the X-precision M of every input series");
    app.add_option("--seed", ov.seed, "seed for lift");
    app.add_option("--threads", ov.threads, "worker threads for lift")->check(CLI::PositiveNumber);
    app.add_option("--schema", schema, "print the input schema of a subcommand");
    app.add_flag("--timings", timings, "add wall-clock timings to the output");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (!schema.empty()) {
        auto it = commands().find(schema);
        if (it == commands().end()) {
            std::cerr << "unknown subcommand: " << schema << "\n";
            return 2;
        }
        std::cout << it->second.schema << "\n";
        return 0;
    }
    auto it = commands().find(sub);
    if (it == commands().end()) {
        emit(error_doc("UnknownSubcommand", sub.empty() ? "no subcommand given" : "unknown subcommand: " + sub), out_path);
        return 2;
    }

    json input;
    try {
        if (in_path.empty()) {
            input = json::parse(std::cin);
        } else {
            std::ifstream is(in_path);
            if (!is) {
                emit(error_doc("IOError", "cannot read " + in_path), out_path);
                return 2;
            }
            input = json::parse(is);
        }
    } catch (const json::parse_error& e) {
        emit(error_doc("ParseError", e.what(), "$"), out_path);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        const Result r = it->second.run(input, ov);
        json doc{{"status", "ok"}, {"payload", r.payload}, {"certified_precision", r.certified_precision}};
        if (timings) {
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            doc["timings"] = {{"total_ms", ms}};
        }
        return emit(doc, out_path);
    } catch (const SchemaError& e) {
        emit(error_doc("SchemaError", e.what(), e.path), out_path);
        return 2;
    } catch (const Error& e) {
        emit(error_doc(e.kind(), e.what()), out_path);
        return e.is_domain_error() ? 1 : 2;
    } catch (const json::exception& e) {
        emit(error_doc("SchemaError", e.what(), "$"), out_path);
        return 2;
    }
}
