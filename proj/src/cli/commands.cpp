#include "hauptmod/cli/commands.hpp"

#include "hauptmod/cli/documents.hpp"
#include "hauptmod/errors.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;

namespace hauptmod::cli {

namespace {

struct Common {
    bool no_timing = false;
    std::string format = "json";
};

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

std::optional<double> elapsed(const Common& c, std::chrono::steady_clock::time_point t0) {
    if (c.no_timing) return std::nullopt;
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

EtaQuotient named_or_parsed(const std::string& text) {
    if (text == "w") return named_w();
    if (text == "X") return named_X();
    return EtaQuotient::parse(text);
}

// --- expand

struct ExpandArgs {
    std::string name;
    std::string quotient;
    std::int64_t prec = 8;
};

int cmd_expand(const ExpandArgs& a, const Common& c, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    if (a.name.empty() == a.quotient.empty()) throw CLI::ValidationError("expand needs exactly one of --name or --quotient");
    if (a.prec < 1) throw CLI::ValidationError("--prec must be at least 1");
    json inputs;
    json result;
    QSeries s;
    if (a.name == "j") {
        inputs = {{"name", "j"}, {"quotient", nullptr}, {"prec", a.prec}};
        s = named_j(a.prec);
        result = series_json(s);
        result["quotient"] = nullptr;
    } else {
        EtaQuotient f = a.name.empty() ? EtaQuotient::parse(a.quotient) : named_or_parsed(a.name);
        inputs = {{"name", a.name.empty() ? json(nullptr) : json(a.name)},
                  {"quotient", a.name.empty() ? a.quotient : f.to_string()},
                  {"prec", a.prec}};
        s = expand(f, a.prec);
        result = series_json(s);
        result["quotient"] = quotient_json(f);
    }
    if (c.format == "plain")
        out << to_string(s, SeriesFormat::Plain) << "\n";
    else if (c.format == "latex")
        out << to_string(s, SeriesFormat::Latex) << "\n";
    else
        emit(out, document("expand", std::move(inputs), std::move(result), elapsed(c, t0)));
    return kOk;
}

// --- cusps

struct CuspsArgs {
    std::int64_t level = 0;
    std::string divisor;
};

int cmd_cusps(const CuspsArgs& a, const Common& c, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    if (a.level < 1) throw CLI::ValidationError("level must be at least 1");
    std::optional<EtaQuotient> f;
    if (!a.divisor.empty()) {
        EtaQuotient g = named_or_parsed(a.divisor);
        if (a.level % g.level() != 0)
            throw BadSpec("quotient level " + std::to_string(g.level()) + " does not divide " +
                          std::to_string(a.level));
        f = g.lifted(a.level);
    }
    json result = cusps_result_json(a.level, f);
    if (c.format == "plain") {
        out << result["count"].get<std::size_t>() << " cusps on Gamma0(" << a.level << ")\n";
        for (const auto& x : result["cusps"]) {
            out << x["cusp"].get<std::string>() << "\twidth " << x["width"].get<long>();
            if (x.contains("order")) out << "\torder " << x["order"].get<std::string>();
            out << "\n";
        }
        return kOk;
    }
    json inputs = {{"level", a.level}, {"divisor", a.divisor.empty() ? json(nullptr) : json(a.divisor)}};
    emit(out, document("cusps", std::move(inputs), std::move(result), elapsed(c, t0)));
    return kOk;
}

// --- modeq

struct ModeqArgs {
    std::int64_t level = 0;
    std::string method = "multimodular";
    std::string cache_dir;
    bool no_cache = false;
};

std::optional<fs::path> resolve_cache_dir(const std::string& flag) {
    if (!flag.empty()) return fs::path(flag);
    if (const char* v = std::getenv("HAUPTMOD_CACHE_DIR"); v && *v) return fs::path(v);
    if (const char* v = std::getenv("XDG_CACHE_HOME"); v && *v) return fs::path(v) / "hauptmod";
    if (const char* v = std::getenv("HOME"); v && *v) return fs::path(v) / ".cache" / "hauptmod";
    return std::nullopt;
}

std::optional<json> read_json(const fs::path& p) {
    std::ifstream in(p);
    if (!in) return std::nullopt;
    return json::parse(in, nullptr, false);
}

bool write_atomic(const fs::path& p, const std::string& text) {
    std::error_code ec;
    fs::create_directories(p.parent_path(), ec);
    if (ec) return false;
    fs::path tmp = p;
    tmp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream o(tmp, std::ios::binary | std::ios::trunc);
        if (!o) return false;
        o << text;
        if (!o.flush()) return false;
    }
    fs::rename(tmp, p, ec);
    if (ec) fs::remove(tmp, ec);
    return !ec;
}

int cmd_modeq(const ModeqArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
    auto t0 = std::chrono::steady_clock::now();
    if (a.level < 2) throw CLI::ValidationError("modular-equation level must be at least 2");
    const SolveMethod method = a.method == "exact" ? SolveMethod::Exact : SolveMethod::Multimodular;

    std::optional<fs::path> file;
    if (!a.no_cache) {
        if (auto dir = resolve_cache_dir(a.cache_dir))
            file = *dir / ("modeq-v" + std::string(kSchemaVersion) + "-n" + std::to_string(a.level) + "-" +
                           to_string(method) + ".json");
    }

    json result;
    std::string cache_state = a.no_cache ? "bypass" : "miss";
    if (file && fs::exists(*file)) {
        std::optional<json> stored = read_json(*file);
        std::string why = !stored || stored->is_discarded() ? "unparsable JSON"
                                                            : validate_modeq_cache(*stored, a.level, method);
        if (why.empty()) {
            result = (*stored)["result"];
            cache_state = "hit";
        } else {
            CacheCorrupt warning("cache entry " + file->string() + " rejected (" + why + "); recomputing");
            err << "warning: " << warning.what() << "\n";
        }
    }
    if (cache_state != "hit") {
        ModEqResult r = solve_modular_equation(a.level, SolveOptions{method, std::nullopt});
        result = modeq_result_json(r);
        if (file) {
            json stored = document("modeq", {{"level", a.level}, {"method", to_string(method)}}, result,
                                   std::nullopt);
            if (!write_atomic(*file, stored.dump(2) + "\n"))
                err << "warning: could not write cache entry " << file->string() << "\n";
        }
    }

    if (c.format == "plain") {
        out << result["plain"].get<std::string>() << "\n";
        return kOk;
    }
    if (c.format == "latex") {
        out << result["latex"].get<std::string>() << "\n";
        if (!result["factored"].is_null()) out << result["factored"]["latex"].get<std::string>() << "\n";
        return kOk;
    }
    json inputs = {{"level", a.level},
                   {"method", to_string(method)},
                   {"cache_dir", file ? json(file->parent_path().string()) : json(nullptr)}};
    json doc = document("modeq", std::move(inputs), std::move(result), elapsed(c, t0));
    doc["cache"] = cache_state;
    emit(out, doc);
    return kOk;
}

// --- verify

struct VerifyArgs {
    std::string subset = "all";
    bool fail_fast = false;
    std::string golden_file;
};

int cmd_verify(const VerifyArgs& a, const Common& c, std::ostream& out) {
    auto t0 = std::chrono::steady_clock::now();
    verify::SuiteOptions o;
    o.subset = *verify::parse_subset(a.subset);
    o.fail_fast = a.fail_fast;
    if (!a.golden_file.empty()) {
        std::optional<json> g = read_json(a.golden_file);
        if (!g) throw BadSpec("cannot read golden file " + a.golden_file);
        if (g->is_discarded()) throw BadSpec("golden file " + a.golden_file + " is not valid JSON");
        o.golden = golden_from_json(*g);
    }
    auto reports = verify::run_suite(o);
    const std::string sum = golden::checksum(o.golden);
    json result = verify_result_json(a.subset, reports, sum);
    const bool ok = result["failed"].get<std::size_t>() == 0;

    if (c.format == "plain") {
        for (const auto& r : reports) {
            out << verify::to_string(r.status) << "\t" << r.name << "\t" << r.detail;
            if (!r.passed() && r.witness) out << " [witness " << *r.witness << "]";
            out << "\n";
        }
        out << result["passed"].get<std::size_t>() << " passed, " << result["failed"].get<std::size_t>()
            << " failed; golden checksum " << sum << "\n";
        for (const auto& u : verify::unreproduced_claims())
            out << "not reproduced: " << u.claim << " (proxy: " << u.proxy << ")\n";
    } else {
        json inputs = {{"subset", a.subset},
                       {"fail_fast", a.fail_fast},
                       {"golden", a.golden_file.empty() ? json(nullptr) : json(a.golden_file)}};
        emit(out, document("verify", std::move(inputs), std::move(result), elapsed(c, t0)));
    }
    return ok ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Modular equations and identities for the eta quotient w(tau) on Gamma0(18)", "hauptmod"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_flag("--no-timing", common.no_timing, "Emit timing as null (byte-deterministic output)");

    const auto formats = CLI::IsMember({"json", "plain", "latex"});

    ExpandArgs ea;
    auto* expand_cmd = app.add_subcommand("expand", "q-expansion of w, X, j or an eta quotient");
    expand_cmd->add_option("--name", ea.name, "Named function")->check(CLI::IsMember({"w", "X", "j"}));
    expand_cmd->add_option("--quotient", ea.quotient, "Eta quotient \"N; d1:r1, d2:r2, ...\"");
    expand_cmd->add_option("--prec", ea.prec, "Coefficients below q^prec")->capture_default_str();
    expand_cmd->add_option("--format", common.format, "json, plain or latex")->check(formats);

    CuspsArgs ca;
    auto* cusps_cmd = app.add_subcommand("cusps", "Inequivalent cusps of Gamma0(N) with widths");
    cusps_cmd->add_option("N", ca.level, "Level")->required();
    cusps_cmd->add_option("--divisor", ca.divisor, "Attach orders of w, X or an eta quotient");
    cusps_cmd->add_option("--format", common.format, "json or plain")->check(CLI::IsMember({"json", "plain"}));

    ModeqArgs ma;
    auto* modeq_cmd = app.add_subcommand("modeq", "Modular equation F_n(w(tau), w(n tau)) = 0");
    modeq_cmd->add_option("n", ma.level, "Level n >= 2")->required();
    modeq_cmd->add_option("--method", ma.method, "multimodular or exact")
        ->check(CLI::IsMember({"multimodular", "exact"}))
        ->capture_default_str();
    modeq_cmd->add_option("--cache-dir", ma.cache_dir, "Cache directory (default $HAUPTMOD_CACHE_DIR)");
    modeq_cmd->add_flag("--no-cache", ma.no_cache, "Neither read nor write the cache");
    modeq_cmd->add_option("--format", common.format, "json, plain or latex")->check(formats);

    VerifyArgs va;
    auto* verify_cmd = app.add_subcommand("verify", "Run the reproduction checks");
    verify_cmd->add_option("subset", va.subset, "all, tables, identities or cusps")
        ->check(CLI::IsMember({"all", "tables", "identities", "cusps"}))
        ->capture_default_str();
    verify_cmd->add_flag("--fail-fast", va.fail_fast, "Stop at the first failing check");
    verify_cmd->add_option("--golden", va.golden_file, "Reference tables as JSON (see `golden`)");
    verify_cmd->add_option("--format", common.format, "json or plain")->check(CLI::IsMember({"json", "plain"}));

    auto* golden_cmd = app.add_subcommand("golden", "Print the built-in reference tables as JSON");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsage;
    }

    try {
        if (*expand_cmd) return cmd_expand(ea, common, out);
        if (*cusps_cmd) return cmd_cusps(ca, common, out);
        if (*modeq_cmd) return cmd_modeq(ma, common, out, err);
        if (*verify_cmd) return cmd_verify(va, common, out);
        if (*golden_cmd) {
            out << golden_to_json(golden::builtin_equations()).dump(2) << "\n";
            return kOk;
        }
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SolverError& e) {
        err << "solver error: " << e.what() << "\n";
        return kSolverError;
    } catch (const BadSpec& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const NotModular& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kSolverError;
    }
    return kUsage;
}

}  // namespace hauptmod::cli
