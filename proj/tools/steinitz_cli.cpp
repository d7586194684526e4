// Command-line front end.  All mathematics goes through the C API in
// steinitz.h; this tool only parses arguments and renders output.

#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "steinitz.h"

namespace {

// Exit codes: 0 success, 1 usage error, 2 verification failure,
// 3 non-stabilized sampling under --require-stable.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;
constexpr int kExitUnstable = 3;

struct Options {
    int64_t d = 0;
    std::string group;
    std::string special;
    int64_t bound = 100;
    int window = 50;
    int64_t max_norm = 100000;
    std::string cache_dir;
    std::string format = "text";
    bool require_stable = false;
    int64_t modulus = 0;
    bool plus_minus = false;
    bool alt_even_factor = false;
    bool sylow_check = false;
};

struct FieldHandle {
    stz_field* p = nullptr;
    ~FieldHandle() { stz_field_destroy(p); }
};

std::string take_string(char* s) {
    std::string out = s ? s : "";
    stz_string_free(s);
    return out;
}

[[noreturn]] void fail(stz_status st) {
    std::cerr << "error: " << stz_last_error() << "\n";
    std::exit(st == STZ_ERR_VERIFICATION ? kExitVerification : kExitUsage);
}

void check(stz_status st) {
    if (st != STZ_OK) fail(st);
}

std::string render_text(const nlohmann::json& j, int indent = 0) {
    std::string pad(size_t(indent) * 2, ' ');
    std::string out;
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it.value().is_structured() && !it.value().empty())
                out += pad + it.key() + ":\n" + render_text(it.value(), indent + 1);
            else
                out += pad + it.key() + ": " + it.value().dump() + "\n";
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_structured() && !v.empty())
                out += pad + "-\n" + render_text(v, indent + 1);
            else
                out += pad + "- " + v.dump() + "\n";
        }
    } else {
        out += pad + j.dump() + "\n";
    }
    return out;
}

void print_payload(const Options& opt, const std::string& json_text) {
    if (opt.format == "json") {
        std::cout << json_text << "\n";
        return;
    }
    std::cout << render_text(nlohmann::json::parse(json_text));
}

// Exit 3 when sampling did not stabilize and the caller demanded stability.
int stability_exit(const Options& opt, stz_field* field) {
    if (!opt.require_stable) return kExitOk;
    int ok = 0;
    check(stz_all_stabilized(field, &ok));
    return ok ? kExitOk : kExitUnstable;
}

FieldHandle open_field(const Options& opt) {
    FieldHandle f;
    check(stz_field_create(opt.d, &f.p));
    check(stz_field_set_policy(f.p, opt.window, opt.max_norm));
    std::string cache = opt.cache_dir;
    if (cache.empty()) {
        const char* env = std::getenv("STEINITZ_CACHE_DIR");
        if (env) cache = env;
    }
    if (!cache.empty()) check(stz_field_set_cache_dir(f.p, cache.c_str()));
    return f;
}

std::vector<int64_t> parse_factors(const std::string& text) {
    std::vector<int64_t> out;
    std::string tok;
    std::stringstream ss(text);
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoll(tok));
    if (out.empty()) {
        std::cerr << "error: empty group specification\n";
        std::exit(kExitUsage);
    }
    return out;
}

const char* kEnumerateSchema =
    "JSON schema: {field_d, bound, samples:[{alpha:[a,b], disc_norm, class:[...]}], "
    "realized:[[...]]}; biquadratic mode replaces samples by "
    "pairs:[{alpha1, alpha2, class}]";
const char* kIntervalSchema =
    "JSON schema: {exact, lower:{order, generators}, upper:{order, generators}, "
    "trail:[{rule, detail}], group|special, stabilized}";
const char* kWgroupSchema =
    "JSON schema: {modulus, residues, plus_minus, stabilized, short_circuited, "
    "window, max_norm_reached, subgroup:{order, generators}, "
    "witnesses:[{p, r, norm, residue, class}]}";

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Realizable Steinitz classes of tame extensions over imaginary "
                 "quadratic fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;

    app.add_option("--cache-dir", opt.cache_dir,
                   "witness cache directory (default: $STEINITZ_CACHE_DIR)");
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--window", opt.window, "stabilization window (default 50)");
    app.add_option("--max-norm", opt.max_norm, "sampling norm ceiling (default 100000)");
    app.add_flag("--require-stable", opt.require_stable,
                 "exit 3 when any sampled subgroup failed to stabilize");

    auto add_d = [&](CLI::App* cmd) {
        cmd->add_option("-d,--field", opt.d, "squarefree negative d of Q(sqrt(d))")
            ->required();
    };

    auto* c_class = app.add_subcommand("classgroup", "class group via reduced forms");
    add_d(c_class);

    auto* c_w = app.add_subcommand("wgroup", "norm-condition subgroup of the class group");
    add_d(c_w);
    c_w->add_option("-m,--modulus", opt.modulus, "norm residue modulus")->required();
    c_w->add_flag("--pm", opt.plus_minus, "allow residues {1, m-1} instead of {1}");
    c_w->footer(kWgroupSchema);

    auto* c_real = app.add_subcommand("realizable", "realizable-class interval for a group");
    add_d(c_real);
    c_real->add_option("-g,--group", opt.group,
                       "abelian invariant factors, e.g. 4,2 for C(4)xC(2)");
    c_real->add_option("--special", opt.special,
                       "special group: a4 | d2n:<odd n> | c2vec:<n>,<odd factors>");
    c_real->add_flag("--alt-even-factor", opt.alt_even_factor,
                     "also evaluate the even-order auxiliary factor with the "
                     "first invariant 2-part and report both when they differ");
    c_real->add_flag("--sylow-check", opt.sylow_check,
                     "recompose from Sylow subgroups and require agreement");
    c_real->footer(kIntervalSchema);

    auto* c_enum = app.add_subcommand("enumerate", "tame quadratic/biquadratic lab");
    add_d(c_enum);
    c_enum->add_option("-g,--group", opt.group, "2 (quadratic) or 2,2 (biquadratic)")
        ->required();
    c_enum->add_option("--bound", opt.bound, "prime norm bound (default 100)");
    c_enum->footer(kEnumerateSchema);

    auto* c_verify = app.add_subcommand(
        "verify", "enumerate, evaluate the formulas, and check containments");
    add_d(c_verify);
    c_verify->add_option("-g,--group", opt.group, "2 or 2,2")->required();
    c_verify->add_option("--bound", opt.bound, "prime norm bound (default 100)");

    auto* c_self = app.add_subcommand("selftest", "elementary sweeps and subgroup laws");
    (void)c_self;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand("selftest")) {
            char* out = nullptr;
            stz_status st = stz_selftest(&out);
            print_payload(opt, take_string(out));
            if (st == STZ_ERR_VERIFICATION) return kExitVerification;
            if (st != STZ_OK) fail(st);
            return kExitOk;
        }

        FieldHandle f = open_field(opt);
        char* out = nullptr;

        if (app.got_subcommand("classgroup")) {
            check(stz_class_group(f.p, &out));
            print_payload(opt, take_string(out));
            return kExitOk;
        }
        if (app.got_subcommand("wgroup")) {
            check(stz_w_group(f.p, opt.modulus, opt.plus_minus ? 1 : 0, &out));
            print_payload(opt, take_string(out));
            return stability_exit(opt, f.p);
        }
        if (app.got_subcommand("realizable")) {
            if (opt.group.empty() == opt.special.empty()) {
                std::cerr << "error: exactly one of --group/--special is required\n";
                return kExitUsage;
            }
            if (!opt.special.empty()) {
                check(stz_realizable_special(f.p, opt.special.c_str(), &out));
            } else if (opt.sylow_check) {
                auto fs = parse_factors(opt.group);
                check(stz_sylow_check(f.p, fs.data(), fs.size(), &out));
            } else {
                auto fs = parse_factors(opt.group);
                check(stz_realizable(f.p, fs.data(), fs.size(),
                                     opt.alt_even_factor ? 1 : 0, &out));
            }
            print_payload(opt, take_string(out));
            return stability_exit(opt, f.p);
        }
        if (app.got_subcommand("enumerate") || app.got_subcommand("verify")) {
            auto fs = parse_factors(opt.group);
            int group = 0;
            if (fs == std::vector<int64_t>{2}) group = 2;
            else if (fs == std::vector<int64_t>{2, 2}) group = 22;
            else {
                std::cerr << "error: enumeration supports only -g 2 and -g 2,2\n";
                return kExitUsage;
            }
            stz_status st;
            if (app.got_subcommand("enumerate"))
                st = stz_enumerate(f.p, group, opt.bound, &out);
            else
                st = stz_verify(f.p, group, opt.bound, &out);
            if (st == STZ_ERR_VERIFICATION) {
                std::cerr << "verification failure: " << stz_last_error() << "\n";
                return kExitVerification;
            }
            check(st);
            print_payload(opt, take_string(out));
            int stability = stability_exit(opt, f.p);
            return stability;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
