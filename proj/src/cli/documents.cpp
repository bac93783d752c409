#include "hauptmod/cli/documents.hpp"

#include "hauptmod/arith.hpp"
#include "hauptmod/errors.hpp"

#include <algorithm>
#include <cctype>

namespace hauptmod::cli {

namespace {

bool is_decimal(const std::string& s, bool allow_fraction) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') ++i;
    std::size_t digits = 0;
    bool slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            ++digits;
        } else if (s[i] == '/' && allow_fraction && !slash && digits > 0 && i + 1 < s.size()) {
            slash = true;
            digits = 0;
        } else {
            return false;
        }
    }
    return digits > 0;
}

bool is_int(const json& v) { return v.is_number_integer(); }

std::string power(char var, int k) {
    if (k == 1) return std::string(1, var);
    std::string e = std::to_string(k);
    return std::string(1, var) + "^" + (e.size() > 1 ? "{" + e + "}" : e);
}

std::string factored_latex(const BivarPoly& g, int p) {
    return "(" + power('X', p) + "-Y)(X-" + power('Y', p) + ")-" + std::to_string(p) + "XY(" +
           to_string(g, PolyFormat::Latex) + ")";
}

// Problem-reporting helpers: each returns an empty string when fine.
std::string need(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) return std::string("missing field '") + key + "'";
    return {};
}

std::string check_terms(const json& terms) {
    if (!terms.is_array()) return "terms must be an array";
    for (const auto& t : terms) {
        if (!t.is_array() || t.size() != 3 || !is_int(t[0]) || !is_int(t[1]) || !t[2].is_string() ||
            !is_decimal(t[2].get<std::string>(), false))
            return "malformed term " + t.dump();
        if (t[0].get<long>() < 0 || t[1].get<long>() < 0) return "negative exponent in " + t.dump();
    }
    return {};
}

std::string check_expand(const json& r) {
    for (const char* k : {"exponent_denominator", "valuation", "precision", "coefficients", "text"})
        if (auto e = need(r, k); !e.empty()) return e;
    if (!is_int(r["exponent_denominator"]) || r["exponent_denominator"].get<long>() < 1)
        return "exponent_denominator must be a positive integer";
    for (const char* k : {"valuation", "precision"})
        if (!r[k].is_string() || !is_decimal(r[k].get<std::string>(), true))
            return std::string(k) + " must be a rational string";
    if (!r["coefficients"].is_array()) return "coefficients must be an array";
    for (const auto& c : r["coefficients"])
        if (!c.is_string() || !is_decimal(c.get<std::string>(), true))
            return "coefficient " + c.dump() + " is not a decimal string";
    return {};
}

std::string check_cusps(const json& r) {
    for (const char* k : {"level", "count", "cusps"})
        if (auto e = need(r, k); !e.empty()) return e;
    if (!r["cusps"].is_array() || r["cusps"].size() != r["count"].get<std::size_t>())
        return "count does not match the cusp list";
    for (const auto& c : r["cusps"]) {
        if (auto e = need(c, "cusp"); !e.empty()) return e;
        if (auto e = need(c, "width"); !e.empty()) return e;
        if (c.contains("order") && (!c["order"].is_string() || !is_decimal(c["order"].get<std::string>(), true)))
            return "order must be a rational string";
    }
    return {};
}

std::string check_modeq(const json& r) {
    for (const char* k : {"level", "degrees", "coefficients", "plain", "latex", "factored", "solver",
                          "normalization"})
        if (auto e = need(r, k); !e.empty()) return e;
    if (!is_int(r["level"]) || r["level"].get<long>() < 2) return "level must be an integer >= 2";
    for (const char* k : {"d1", "d2"})
        if (auto e = need(r["degrees"], k); !e.empty()) return e;
    if (auto e = check_terms(r["coefficients"]); !e.empty()) return e;
    if (!r["factored"].is_null()) {
        for (const char* k : {"p", "inner", "latex"})
            if (auto e = need(r["factored"], k); !e.empty()) return e;
        if (auto e = check_terms(r["factored"]["inner"]); !e.empty()) return e;
    }
    for (const char* k : {"method", "precision_used", "nullspace_dim", "primes_used", "attempts"})
        if (auto e = need(r["solver"], k); !e.empty()) return e;
    for (const char* k : {"anchor", "scale"})
        if (auto e = need(r["normalization"], k); !e.empty()) return e;
    if (!r["normalization"]["scale"].is_string() ||
        !is_decimal(r["normalization"]["scale"].get<std::string>(), false))
        return "normalization scale must be a decimal string";
    return {};
}

std::string check_verify(const json& r) {
    for (const char* k : {"subset", "golden_checksum", "checks", "passed", "failed", "not_reproduced"})
        if (auto e = need(r, k); !e.empty()) return e;
    if (!r["checks"].is_array()) return "checks must be an array";
    for (const auto& c : r["checks"]) {
        for (const char* k : {"name", "status", "detail", "precision", "witness"})
            if (auto e = need(c, k); !e.empty()) return e;
        const std::string st = c["status"].is_string() ? c["status"].get<std::string>() : "";
        if (st != "pass" && st != "fail" && st != "insufficient_precision") return "bad status " + st;
        if (st != "pass" && !c["witness"].is_string()) return "failing check without witness";
    }
    return {};
}

}  // namespace

json document(const std::string& command, json inputs, json result, std::optional<double> timing_ms) {
    json d;
    d["schema_version"] = kSchemaVersion;
    d["command"] = command;
    d["inputs"] = std::move(inputs);
    d["result"] = std::move(result);
    d["timing"] = timing_ms ? json(*timing_ms) : json(nullptr);
    return d;
}

json series_json(const QSeries& s) {
    json r;
    r["exponent_denominator"] = s.denom();
    r["valuation"] = to_decimal(s.valuation_exponent());
    r["precision"] = to_decimal(s.precision_exponent());
    json c = json::array();
    for (const auto& x : s.coefficients()) c.push_back(to_decimal(x));
    r["coefficients"] = std::move(c);
    r["text"] = to_string(s);
    return r;
}

json quotient_json(const EtaQuotient& f) {
    json r;
    r["level"] = f.level();
    json e = json::object();
    for (const auto& [d, k] : f.exponents()) e[std::to_string(d)] = k;
    r["exponents"] = std::move(e);
    r["spec"] = f.to_string();
    r["weight"] = to_decimal(weight(f));
    r["modular_function"] = is_modular_function(f);
    return r;
}

json poly_terms_json(const BivarPoly& f) {
    json a = json::array();
    for (const auto& [k, c] : f.terms()) a.push_back(json::array({k.first, k.second, c.get_str()}));
    return a;
}

BivarPoly poly_from_terms_json(const json& terms) {
    if (auto e = check_terms(terms); !e.empty()) throw BadSpec(e);
    std::map<BivarPoly::Exponents, BigInt> m;
    for (const auto& t : terms) {
        BigInt c(t[2].get<std::string>());
        if (c != 0) m[{t[0].get<int>(), t[1].get<int>()}] += c;
    }
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return BivarPoly(std::move(m));
}

json modeq_result_json(const ModEqResult& r) {
    json out;
    out["level"] = r.level;
    out["degrees"] = {{"d1", r.d1}, {"d2", r.d2}};
    out["coefficients"] = poly_terms_json(r.poly);
    out["plain"] = to_string(r.poly, PolyFormat::Plain);
    out["latex"] = to_string(r.poly, PolyFormat::Latex);
    out["factored"] = nullptr;
    if (r.level >= 5 && arith::is_prime(r.level)) {
        if (auto g = kronecker_inner_factor(r.poly, r.level)) {
            const int p = static_cast<int>(r.level);
            out["factored"] = {{"p", p},
                               {"inner", poly_terms_json(*g)},
                               {"latex", factored_latex(*g, p)}};
        }
    }
    out["solver"] = {{"method", to_string(r.method)},
                     {"precision_used", r.precision_used},
                     {"nullspace_dim", r.nullspace_dim},
                     {"primes_used", r.primes_used},
                     {"attempts", r.attempts}};
    out["normalization"] = {
        {"anchor", json::array({r.normalization.anchor.first, r.normalization.anchor.second})},
        {"scale", r.normalization.scale.get_str()}};
    return out;
}

json cusps_result_json(std::int64_t level, const std::optional<EtaQuotient>& f) {
    json out;
    out["level"] = level;
    const auto cs = cusp_set(level);
    out["count"] = cs.size();
    json list = json::array();
    for (const Cusp& x : cs) {
        json c;
        c["cusp"] = x.to_string();
        c["width"] = width(level, x);
        if (f) c["order"] = to_decimal(order_at_cusp(*f, x));
        list.push_back(std::move(c));
    }
    out["cusps"] = std::move(list);
    if (f) out["divisor_of"] = quotient_json(*f);
    return out;
}

json verify_result_json(const std::string& subset, const std::vector<verify::CheckReport>& reports,
                        const std::string& golden_checksum) {
    json out;
    out["subset"] = subset;
    out["golden_checksum"] = golden_checksum;
    json checks = json::array();
    std::size_t passed = 0;
    for (const auto& r : reports) {
        passed += r.passed();
        checks.push_back({{"name", r.name},
                          {"status", verify::to_string(r.status)},
                          {"detail", r.detail},
                          {"precision", r.precision},
                          {"witness", r.witness ? json(*r.witness) : json(nullptr)}});
    }
    out["checks"] = std::move(checks);
    out["passed"] = passed;
    out["failed"] = reports.size() - passed;
    json nr = json::array();
    for (const auto& u : verify::unreproduced_claims())
        nr.push_back({{"claim", u.claim}, {"proxy", u.proxy}});
    out["not_reproduced"] = std::move(nr);
    return out;
}

json golden_to_json(const std::vector<golden::Equation>& equations) {
    json eqs = json::array();
    for (const auto& e : equations) {
        json terms = json::array();
        for (const auto& t : e.terms) terms.push_back(json::array({t.i, t.j, std::to_string(t.coeff)}));
        eqs.push_back({{"level", e.level},
                       {"form", e.form == golden::Form::Flat ? "flat" : "kronecker_frame"},
                       {"terms", std::move(terms)}});
    }
    return {{"schema_version", kSchemaVersion}, {"equations", std::move(eqs)}};
}

std::vector<golden::Equation> golden_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("equations") || !doc["equations"].is_array())
        throw BadSpec("golden file needs an 'equations' array");
    std::vector<golden::Equation> out;
    for (const auto& e : doc["equations"]) {
        if (!e.is_object() || !e.contains("level") || !is_int(e["level"]) || !e.contains("terms"))
            throw BadSpec("golden equation needs 'level' and 'terms'");
        golden::Equation eq;
        eq.level = e["level"].get<std::int64_t>();
        if (eq.level < 2) throw BadSpec("golden level must be >= 2");
        const std::string form = e.value("form", "flat");
        if (form == "flat")
            eq.form = golden::Form::Flat;
        else if (form == "kronecker_frame")
            eq.form = golden::Form::KroneckerFrame;
        else
            throw BadSpec("unknown golden form '" + form + "'");
        if (auto err = check_terms(e["terms"]); !err.empty()) throw BadSpec("golden level " +
                                                                            std::to_string(eq.level) + ": " + err);
        for (const auto& t : e["terms"]) {
            try {
                eq.terms.push_back({t[0].get<int>(), t[1].get<int>(), std::stol(t[2].get<std::string>())});
            } catch (const std::out_of_range&) {
                throw BadSpec("golden coefficient out of range: " + t.dump());
            }
        }
        out.push_back(std::move(eq));
    }
    return out;
}

std::string validate_document(const json& doc) {
    if (!doc.is_object()) return "document is not an object";
    for (const char* k : {"schema_version", "command", "inputs", "result", "timing"})
        if (auto e = need(doc, k); !e.empty()) return e;
    for (const auto& [k, v] : doc.items()) {
        if (k != "schema_version" && k != "command" && k != "inputs" && k != "result" && k != "timing" &&
            k != "cache")
            return "unexpected field '" + k + "'";
    }
    if (doc["schema_version"] != kSchemaVersion) return "unsupported schema_version";
    if (!doc["inputs"].is_object()) return "inputs must be an object";
    if (!doc["result"].is_object()) return "result must be an object";
    if (!doc["timing"].is_null() && !doc["timing"].is_number()) return "timing must be a number or null";
    if (doc.contains("cache")) {
        const auto& c = doc["cache"];
        if (c != "hit" && c != "miss" && c != "bypass") return "cache must be hit, miss or bypass";
    }
    const auto& cmd = doc["command"];
    if (cmd == "expand") return check_expand(doc["result"]);
    if (cmd == "cusps") return check_cusps(doc["result"]);
    if (cmd == "modeq") return check_modeq(doc["result"]);
    if (cmd == "verify") return check_verify(doc["result"]);
    return "unknown command " + cmd.dump();
}

std::string validate_modeq_cache(const json& doc, std::int64_t level, SolveMethod method) {
    try {
        if (auto e = validate_document(doc); !e.empty()) return e;
        if (doc["command"] != "modeq") return "not a modeq document";
        const json& r = doc["result"];
        if (r["level"].get<std::int64_t>() != level) return "level mismatch";
        if (r["solver"]["method"] != to_string(method)) return "method mismatch";
        BivarPoly f = poly_from_terms_json(r["coefficients"]);
        if (f.is_zero()) return "empty polynomial";
        if (!(f == f.normalized())) return "polynomial is not normalized";
        Degrees d = predict_degrees(level);
        if (r["degrees"]["d1"] != d.d1 || r["degrees"]["d2"] != d.d2) return "degree mismatch";
        if (f.deg_x() > d.d2 || f.deg_y() > d.d1) return "polynomial exceeds the predicted bidegree";
        const std::int64_t prec = r["solver"]["precision_used"].get<std::int64_t>();
        if (prec < 1) return "bad precision_used";
        QSeries res = modular_equation_residual(f, level, prec);
        if (res.precision_exponent() < prec || !res.truncated(prec * res.denom()).is_zero())
            return "stored polynomial does not annihilate w(tau), w(n tau)";
        if (r["plain"] != to_string(f, PolyFormat::Plain) || r["latex"] != to_string(f, PolyFormat::Latex))
            return "rendered forms disagree with the coefficients";
    } catch (const std::exception& e) {
        return e.what();
    }
    return {};
}

}  // namespace hauptmod::cli
