#include "diracsl/problem_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "diracsl/errors.hpp"
#include "json.hpp"

namespace diracsl {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const char* where) {
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) {
            if (key == a) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw domain_error("unknown key '" + key + "' in " + where);
        }
    }
}

const json& require(const json& obj, const char* key, const char* where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw domain_error(std::string("missing key '") + key + "' in " + where);
    }
    return *it;
}

double as_number(const json& v, const char* what) {
    if (!v.is_number()) throw domain_error(std::string(what) + " must be a number");
    return v.get<double>();
}

std::vector<double> as_number_array(const json& v, const char* what) {
    if (!v.is_array()) throw domain_error(std::string(what) + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& e : v) out.push_back(as_number(e, what));
    return out;
}

Potential parse_potential(const json& p) {
    if (!p.is_object()) throw domain_error("potential must be an object");
    const json& type = require(p, "type", "potential");
    if (!type.is_string()) throw domain_error("potential type must be a string");
    const std::string t = type.get<std::string>();
    if (t == "zero") {
        reject_unknown_keys(p, {"type"}, "potential");
        return Potential::zero();
    }
    if (t == "constant") {
        reject_unknown_keys(p, {"type", "value"}, "potential");
        return Potential::constant(as_number(require(p, "value", "potential"), "value"));
    }
    if (t == "piecewise_constant") {
        reject_unknown_keys(p, {"type", "breakpoints", "values"}, "potential");
        return Potential::piecewise_constant(
            as_number_array(require(p, "breakpoints", "potential"), "breakpoints"),
            as_number_array(require(p, "values", "potential"), "values"));
    }
    if (t == "sampled") {
        reject_unknown_keys(p, {"type", "xs", "qs"}, "potential");
        return Potential::sampled(as_number_array(require(p, "xs", "potential"), "xs"),
                                  as_number_array(require(p, "qs", "potential"), "qs"));
    }
    throw domain_error("unknown potential type '" + t + "'");
}

json potential_to_json(const Potential& p) {
    json out;
    struct Visitor {
        json& out;
        void operator()(const ZeroPotential&) const { out["type"] = "zero"; }
        void operator()(const ConstantPotential& c) const {
            out["type"] = "constant";
            out["value"] = c.value;
        }
        void operator()(const PiecewiseConstantPotential& c) const {
            out["type"] = "piecewise_constant";
            out["breakpoints"] = c.breakpoints;
            out["values"] = c.values;
        }
        void operator()(const SampledPotential& c) const {
            out["type"] = "sampled";
            out["xs"] = c.xs;
            out["qs"] = c.qs;
        }
    };
    std::visit(Visitor{out}, p.repr());
    return out;
}

json parse_json_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw domain_error(std::string(what) + ": " + e.what());
    }
}

}  // namespace

ProblemFile parse_problem_file(const std::string& json_text) {
    const json doc = parse_json_text(json_text, "problem file is not valid JSON");
    if (!doc.is_object()) throw domain_error("problem file must be a JSON object");
    reject_unknown_keys(doc, {"potential", "weight", "tolerances"}, "problem file");

    ProblemFile out;
    out.potential = parse_potential(require(doc, "potential", "problem file"));

    const json& w = require(doc, "weight", "problem file");
    if (!w.is_object()) throw domain_error("weight must be an object");
    reject_unknown_keys(w, {"nodes", "masses"}, "weight");
    out.weight = DiracWeight(as_number_array(require(w, "nodes", "weight"), "nodes"),
                             as_number_array(require(w, "masses", "weight"), "masses"));

    if (doc.contains("tolerances")) {
        const json& t = doc["tolerances"];
        if (!t.is_object()) throw domain_error("tolerances must be an object");
        reject_unknown_keys(t, {"zero_det", "root", "dedup", "ode_rel", "ode_abs"},
                            "tolerances");
        Tolerances tol;
        if (t.contains("zero_det")) tol.zero_det = as_number(t["zero_det"], "zero_det");
        if (t.contains("root")) tol.root = as_number(t["root"], "root");
        if (t.contains("dedup")) tol.dedup = as_number(t["dedup"], "dedup");
        if (t.contains("ode_rel")) tol.ode_rel = as_number(t["ode_rel"], "ode_rel");
        if (t.contains("ode_abs")) tol.ode_abs = as_number(t["ode_abs"], "ode_abs");
        for (double v : {tol.zero_det, tol.root, tol.dedup, tol.ode_rel, tol.ode_abs}) {
            if (!(v > 0.0) || !std::isfinite(v)) {
                throw domain_error("tolerances must be positive finite numbers");
            }
        }
        out.tolerances = tol;
    }
    return out;
}

std::string serialize_problem(const ProblemFile& p) {
    json doc;
    doc["potential"] = potential_to_json(p.potential);
    doc["weight"]["nodes"] = p.weight.nodes;
    doc["weight"]["masses"] = p.weight.masses;
    doc["tolerances"]["zero_det"] = p.tolerances.zero_det;
    doc["tolerances"]["root"] = p.tolerances.root;
    doc["tolerances"]["dedup"] = p.tolerances.dedup;
    doc["tolerances"]["ode_rel"] = p.tolerances.ode_rel;
    doc["tolerances"]["ode_abs"] = p.tolerances.ode_abs;
    return doc.dump(2) + "\n";
}

Potential parse_potential_json(const std::string& json_text) {
    return parse_potential(parse_json_text(json_text, "potential file is not valid JSON"));
}

namespace {

json hypotheses_to_json(const HypothesisReport& h) {
    json out;
    out["h0"] = h.h0;
    out["h"] = h.h;
    out["h1"] = h.h1;
    out["margins"]["h0"] = h.h0_margin;
    out["margins"]["h"] = h.h_margin;
    out["margins"]["h1"] = h.h1_margin;
    out["discriminants"]["d10"] = h.d10;
    out["discriminants"]["consecutive"] = h.consecutive;
    out["discriminants"]["upper"] = h.upper;
    out["discriminants"]["lower"] = h.lower;
    return out;
}

}  // namespace

std::string serialize_report(const SpectrumReport& r) {
    json doc;
    doc["classification"] = r.classification;
    doc["eigenvalues"] = r.eigenvalues;
    doc["hypotheses"] = hypotheses_to_json(r.hypotheses);
    doc["method"] = r.method;
    doc["residuals"] = r.residuals;
    return doc.dump(2) + "\n";
}

std::string serialize_hypotheses(const HypothesisReport& r, const std::string& classification) {
    json doc = hypotheses_to_json(r);
    doc["classification"] = classification;
    return doc.dump(2) + "\n";
}

std::string serialize_validation(const ValidationReport& r) {
    json doc;
    doc["positivity"]["pass"] = r.positivity;
    doc["positivity"]["min_value"] = r.min_value;
    doc["positivity"]["min_location"] = r.min_location;
    doc["divergence"]["at_0"] = r.divergence_at_0;
    doc["divergence"]["at_1"] = r.divergence_at_1;
    doc["smoothness"]["second_derivative_finite"] = r.second_derivative_finite;
    doc["ratio"]["sup"] = r.ratio_sup;
    doc["ratio"]["pass"] = r.ratio_ok;
    doc["limit_bands"]["near_0"] = r.band0;
    doc["limit_bands"]["near_1"] = r.band1;
    doc["limit_bands"]["near_0_stable"] = r.band0_stable;
    doc["limit_bands"]["near_1_stable"] = r.band1_stable;
    doc["limit_bands"]["heuristic"] = true;
    doc["overall"] = r.overall();
    return doc.dump(2) + "\n";
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string emit_csv(const std::vector<std::vector<double>>& rows, const std::string& header) {
    const std::size_t width = static_cast<std::size_t>(
        std::count(header.begin(), header.end(), ',') + 1);
    std::string out = header + "\n";
    for (const auto& row : rows) {
        if (row.size() != width) {
            throw domain_error("csv row width does not match the header");
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

SpectralData parse_spectral_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw domain_error("spectral csv is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "t,lambda") {
        throw domain_error("spectral csv must start with the header 't,lambda'");
    }
    SpectralData out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
            throw domain_error("spectral csv line " + std::to_string(lineno) +
                               " must have exactly two fields");
        }
        double t = 0.0, lam = 0.0;
        const char* tb = line.data();
        auto tr = std::from_chars(tb, tb + comma, t);
        auto lr = std::from_chars(tb + comma + 1, tb + line.size(), lam);
        if (tr.ec != std::errc{} || tr.ptr != tb + comma || lr.ec != std::errc{} ||
            lr.ptr != tb + line.size()) {
            throw domain_error("spectral csv line " + std::to_string(lineno) +
                               " is not numeric");
        }
        if (!(t > 0.0 && t < 1.0)) {
            throw domain_error("spectral csv: t values must lie strictly inside (0, 1)");
        }
        if (!out.ts.empty() && !(t > out.ts.back())) {
            throw domain_error("spectral csv: t values must be strictly increasing");
        }
        if (!(lam > 0.0)) {
            throw domain_error("spectral csv: lambda values must be positive");
        }
        out.ts.push_back(t);
        out.lambdas.push_back(lam);
    }
    if (out.ts.empty()) throw domain_error("spectral csv has no data rows");
    return out;
}

}  // namespace diracsl
