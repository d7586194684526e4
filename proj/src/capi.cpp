#include "steinitz.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "steinitz/json_io.hpp"
#include "steinitz/selftest.hpp"

using namespace steinitz;

struct stz_field {
    ClassGroup cg;
    SamplePolicy policy;
    std::string cache_dir;
    std::unique_ptr<Engine> engine;

    explicit stz_field(i64 d) : cg(ClassGroup(make_field(d))) { rebuild(); }

    void rebuild() {
        engine = std::make_unique<Engine>(
            cg, policy,
            cache_dir.empty() ? std::nullopt : std::optional<std::string>(cache_dir));
    }
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

stz_status set_error(stz_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename Fn>
stz_status guarded(Fn&& fn) {
    try {
        fn();
        return STZ_OK;
    } catch (const domain_error& e) {
        return set_error(STZ_ERR_DOMAIN, e.what());
    } catch (const unsupported_error& e) {
        return set_error(STZ_ERR_UNSUPPORTED, e.what());
    } catch (const not_a_square_error& e) {
        return set_error(STZ_ERR_NOT_SQUARE, e.what());
    } catch (const degenerate_error& e) {
        return set_error(STZ_ERR_DEGENERATE, e.what());
    } catch (const capacity_error& e) {
        return set_error(STZ_ERR_CAPACITY, e.what());
    } catch (const consistency_error& e) {
        return set_error(STZ_ERR_INCONSISTENT, e.what());
    } catch (const verification_error& e) {
        return set_error(STZ_ERR_VERIFICATION, e.what());
    } catch (const std::exception& e) {
        return set_error(STZ_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(STZ_ERR_INTERNAL, "unknown error");
    }
}

stz_status emit(char** json_out, const nlohmann::json& j) {
    if (!json_out) return set_error(STZ_ERR_INVALID, "null output pointer");
    *json_out = dup_string(j.dump(2, ' ', false, nlohmann::json::error_handler_t::replace));
    if (!*json_out) return set_error(STZ_ERR_INTERNAL, "allocation failure");
    return STZ_OK;
}

AbelianGroupSpec spec_from_factors(const int64_t* factors, size_t nfactors) {
    if (!factors || nfactors == 0)
        throw domain_error("group factors must be a non-empty list");
    std::vector<i64> fs(factors, factors + nfactors);
    return AbelianGroupSpec::from_orders(fs);
}

SpecialGroupSpec parse_special(const std::string& text) {
    SpecialGroupSpec spec;
    if (text == "a4") {
        spec.kind = SpecialGroupSpec::Kind::A4;
        return spec;
    }
    auto starts = [&](const char* p) { return text.rfind(p, 0) == 0; };
    if (starts("d2n:")) {
        spec.kind = SpecialGroupSpec::Kind::Dihedral2n;
        spec.n = std::stoll(text.substr(4));
        return spec;
    }
    if (starts("c2vec:")) {
        spec.kind = SpecialGroupSpec::Kind::TwoVecSemidirect;
        std::stringstream ss(text.substr(6));
        std::string tok;
        std::vector<i64> nums;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) nums.push_back(std::stoll(tok));
        if (nums.size() < 2)
            throw domain_error("c2vec needs n and at least one odd factor");
        spec.n = nums[0];
        spec.odd_part = AbelianGroupSpec::from_orders(
            std::vector<i64>(nums.begin() + 1, nums.end()));
        return spec;
    }
    throw domain_error("unknown special group: " + text);
}

nlohmann::json verify_json(stz_field* field, int group, i64 bound) {
    const Engine& engine = *field->engine;
    auto quad = enumerate_tame_quadratic(engine.class_group(), bound);
    nlohmann::json j;
    if (group == 2) {
        auto g = AbelianGroupSpec::from_orders({2});
        auto interval = engine.realizable(g);
        std::vector<ClassElem> classes;
        for (const auto& s : quad.samples) classes.push_back(s.steinitz);
        auto outcome = verify_against_engine(engine, g, quad.realized, classes, interval);
        j["report"] = to_json(engine.class_group().field(), quad);
        j["interval"] = to_json(interval);
        j["outcome"] = to_json(outcome);
    } else if (group == 22) {
        auto g = AbelianGroupSpec::from_orders({2, 2});
        auto interval = engine.realizable(g);
        auto biq = enumerate_tame_biquadratic(engine.class_group(), quad);
        std::vector<ClassElem> classes;
        for (const auto& s : biq.samples) classes.push_back(s.steinitz);
        auto outcome = verify_against_engine(engine, g, biq.realized, classes, interval);
        j["report"] = to_json(engine.class_group().field(), biq);
        j["interval"] = to_json(interval);
        j["outcome"] = to_json(outcome);
    } else {
        throw domain_error("verify: group must be 2 (quadratic) or 22 (biquadratic)");
    }
    return j;
}

}  // namespace

extern "C" {

stz_status stz_field_create(int64_t d, stz_field** out) {
    if (!out) return set_error(STZ_ERR_INVALID, "null output pointer");
    *out = nullptr;
    return guarded([&] { *out = new stz_field(d); });
}

void stz_field_destroy(stz_field* field) { delete field; }

stz_status stz_field_set_policy(stz_field* field, int window, int64_t max_norm) {
    if (!field) return set_error(STZ_ERR_INVALID, "null field");
    return guarded([&] {
        if (window < 1 || max_norm < 2)
            throw domain_error("policy: window >= 1 and max_norm >= 2 required");
        field->policy = SamplePolicy{window, max_norm};
        field->rebuild();
    });
}

stz_status stz_field_set_cache_dir(stz_field* field, const char* dir) {
    if (!field) return set_error(STZ_ERR_INVALID, "null field");
    return guarded([&] {
        field->cache_dir = dir ? dir : "";
        field->rebuild();
    });
}

stz_status stz_class_group(stz_field* field, char** json_out) {
    if (!field) return set_error(STZ_ERR_INVALID, "null field");
    stz_status st = STZ_OK;
    stz_status g = guarded([&] { st = emit(json_out, to_json(field->cg)); });
    return g == STZ_OK ? st : g;
}

stz_status stz_w_group(stz_field* field, int64_t modulus, int plus_minus,
                       char** json_out) {
    if (!field) return set_error(STZ_ERR_INVALID, "null field");
    stz_status st = STZ_OK;
    stz_status g = guarded([&] {
        const auto& res = field->engine->w(modulus, plus_minus != 0);
        st = emit(json_out, to_json(NormCondition{modulus, plus_minus != 0}, res));
    });
    return g == STZ_OK ? st : g;
}

stz_status stz_realizable(stz_field* field, const int64_t* factors, size_t nfactors,
                          int alt_even_factor, char** json_out) {
    if (!field) return set_error(STZ_ERR_INVALID, "null field");
    stz_status st = STZ_OK;
    stz_status g = guarded([&] {
        auto spec = spec_from_factors(factors, nfactors);
        auto interval = field->engine->realizable(spec, {}, alt_even_factor != 0);
        nlohmann::json j = to_json(interval);
        j["group"] = spec.factors;
        j["stabilized"] = field->engine->all_sampled_stabilized();
        st = emit(json_out, j);
    });
    return g == STZ_OK ? st : g;
}

stz_status stz_realizable_special(stz_field* field, const char* spec, char** json_out) {
    if (!field || !spec) return set_error(STZ_ERR_INVALID, "null argument");
    stz_status st = STZ_OK;
    stz_status g = guarded([&] {
        auto parsed = parse_special(spec);
        auto interval = field->engine->realizable_special(parsed);
        nlohmann::json j = to_json(interval);
        j["special"] = spec;
        j["stabilized"] = field->engine->all_sampled_stabilized();
        st = emit(json_out, j);
    });
    return g == STZ_OK ? st : g;
}

stz_status stz_sylow_check(stz_field* field, const int64_t* factors, size_t nfactors,
                           char** json_out) {
    if (!field) return set_error(STZ_ERR_INVALID, "null field");
    stz_status st = STZ_OK;
    stz_status g = guarded([&] {
        auto spec = spec_from_factors(factors, nfactors);
        auto interval = field->engine->sylow_recompose(spec);
        nlohmann::json j = to_json(interval);
        j["group"] = spec.factors;
        st = emit(json_out, j);
    });
    return g == STZ_OK ? st : g;
}

stz_status stz_enumerate(stz_field* field, int group, int64_t bound, char** json_out) {
    if (!field) return set_error(STZ_ERR_INVALID, "null field");
    stz_status st = STZ_OK;
    stz_status g = guarded([&] {
        auto quad = enumerate_tame_quadratic(field->cg, bound);
        if (group == 2) {
            st = emit(json_out, to_json(field->cg.field(), quad));
        } else if (group == 22) {
            auto biq = enumerate_tame_biquadratic(field->cg, quad);
            st = emit(json_out, to_json(field->cg.field(), biq));
        } else {
            throw domain_error("enumerate: group must be 2 or 22");
        }
    });
    return g == STZ_OK ? st : g;
}

stz_status stz_verify(stz_field* field, int group, int64_t bound, char** json_out) {
    if (!field) return set_error(STZ_ERR_INVALID, "null field");
    stz_status st = STZ_OK;
    stz_status g = guarded([&] { st = emit(json_out, verify_json(field, group, bound)); });
    return g == STZ_OK ? st : g;
}

stz_status stz_all_stabilized(stz_field* field, int* out) {
    if (!field || !out) return set_error(STZ_ERR_INVALID, "null argument");
    return guarded([&] { *out = field->engine->all_sampled_stabilized() ? 1 : 0; });
}

stz_status stz_selftest(char** json_out) {
    stz_status st = STZ_OK;
    bool ok = false;
    stz_status g = guarded([&] {
        auto res = run_selftest();
        ok = res.ok;
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : res.checks)
            checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        st = emit(json_out, nlohmann::json{{"ok", res.ok}, {"checks", checks}});
    });
    if (g != STZ_OK) return g;
    if (st != STZ_OK) return st;
    return ok ? STZ_OK : set_error(STZ_ERR_VERIFICATION, "selftest failed");
}

const char* stz_last_error(void) { return g_last_error.c_str(); }

void stz_string_free(char* s) { std::free(s); }

const char* stz_version(void) { return "0.1.0"; }

}  // extern "C"
