#include "skewmat/skewmat.h"

#include "analyze.hpp"
#include "descent.hpp"
#include "fuzz.hpp"
#include "papersuite.hpp"
#include "skewset.hpp"
#include "structalg.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

namespace {

using skewmat::FElem;
using skewmat::FieldPtr;
using skewmat::Json;
using skewmat::Vec;

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

Json parse_json(const char* text, const char* what) {
    if (!text) skewmat::fail(skewmat::errc::bad_input, std::string(what) + " is null");
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded())
        skewmat::fail(skewmat::errc::bad_input, std::string(what) + " is not valid JSON");
    return j;
}

template <typename Body>
int wrap(char** out_json, const Body& body) {
    if (!out_json) {
        g_last_error = "out_json is null";
        return static_cast<int>(skewmat::errc::bad_input);
    }
    *out_json = nullptr;
    try {
        Json j = body();
        *out_json = dup_string(j.dump());
        if (!*out_json) {
            g_last_error = "allocation failed";
            return -1;
        }
        g_last_error.clear();
        return 0;
    } catch (const skewmat::error& e) {
        g_last_error = e.what();
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return -1;
    }
}

Json vec_to_json(const FieldPtr& f, const Vec& v) {
    Json a = Json::array();
    for (const FElem& x : v) a.push_back(f->elem_to_json(x));
    return a;
}

Vec vec_from_json(const FieldPtr& f, const Json& j, const char* what) {
    if (!j.is_array())
        skewmat::fail(skewmat::errc::bad_input, std::string(what) + " must be an array");
    Vec v;
    for (const Json& e : j) v.push_back(f->elem_from_json(e));
    return v;
}

Json poly_to_json(const skewmat::Poly& p) {
    return vec_to_json(p.f, p.c);
}

// Accepts a full field document, the shorthand {"p", "k"?} for GF(p^k) with
// the library-chosen modulus, or the strings "Q"/"rational"/"rationals".
FieldPtr field_from_spec(const Json& j) {
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "Q" || s == "rational" || s == "rationals") return skewmat::Field::rationals();
        skewmat::fail(skewmat::errc::bad_input, "unknown field spec: " + s);
    }
    if (j.is_object() && j.contains("kind")) return skewmat::Field::from_json(j);
    if (j.is_object() && j.contains("p")) {
        unsigned k = j.contains("k") ? j.at("k").get<unsigned>() : 1;
        return skewmat::make_gfq(skewmat::json_to_int(j.at("p")), k);
    }
    skewmat::fail(skewmat::errc::bad_input, "unrecognized field spec");
}

}  // namespace

extern "C" {

const char* skewmat_version(void) { return "1.0.0"; }

const char* skewmat_errc_name(int code) {
    return skewmat::errc_name(static_cast<skewmat::errc>(code));
}

const char* skewmat_last_error(void) { return g_last_error.c_str(); }

void skewmat_free(char* buf) { std::free(buf); }

int skewmat_validate(const char* skewset_json, char** out_json) {
    return wrap(out_json, [&] {
        Json j = parse_json(skewset_json, "skew set");
        std::vector<skewmat::Violation> v = skewmat::validate_skewset_json(j);
        Json out;
        out["ok"] = v.empty();
        Json arr = Json::array();
        for (const auto& x : v) {
            Json e;
            e["i"] = x.i;
            e["j"] = x.j;
            e["k"] = x.k;
            e["value"] = x.value;
            arr.push_back(std::move(e));
        }
        out["violations"] = std::move(arr);
        return out;
    });
}

int skewmat_analyze(const char* skewset_json, size_t cap_ideals, char** out_json) {
    return wrap(out_json, [&] {
        skewmat::SkewSet c = skewmat::SkewSet::from_json(parse_json(skewset_json, "skew set"));
        skewmat::AnalyzeOptions opt;
        opt.cap_ideals = cap_ideals;
        return skewmat::analyze_skewset(c, opt).report;
    });
}

int skewmat_equivalent(const char* a_json, const char* b_json, char** out_json) {
    return wrap(out_json, [&] {
        skewmat::SkewSet a = skewmat::SkewSet::from_json(parse_json(a_json, "first skew set"));
        skewmat::SkewSet b = skewmat::SkewSet::from_json(parse_json(b_json, "second skew set"));
        skewmat::EquivResult r = skewmat::equivalent(a, b);
        Json out;
        out["equivalent"] = r.equivalent;
        out["reason"] = r.reason;
        out["detail"] = r.detail;
        if (r.equivalent) {
            const FieldPtr& f = a.field();
            Json g = Json::array();
            for (const auto& row : r.gamma) g.push_back(vec_to_json(f, row));
            out["gamma"] = std::move(g);
            out["verified"] = skewmat::check_equiv_witness(a, b, r.gamma);
        }
        return out;
    });
}

int skewmat_tensor(const char* a_json, const char* b_json, char** out_json) {
    return wrap(out_json, [&] {
        skewmat::SkewSet a = skewmat::SkewSet::from_json(parse_json(a_json, "first skew set"));
        skewmat::SkewSet b = skewmat::SkewSet::from_json(parse_json(b_json, "second skew set"));
        return a.tensor(b).to_json();
    });
}

int skewmat_fuzz(const char* options_json, char** out_json) {
    return wrap(out_json, [&] {
        Json j = options_json && *options_json ? parse_json(options_json, "options")
                                               : Json::object();
        skewmat::FuzzOptions opt;
        opt.field = j.contains("field") ? field_from_spec(j.at("field"))
                                        : skewmat::Field::rationals();
        if (j.contains("n")) opt.n = j.at("n").get<unsigned>();
        if (j.contains("density")) opt.density = j.at("density").get<double>();
        if (j.contains("count")) opt.count = j.at("count").get<std::size_t>();
        if (j.contains("seed")) opt.seed = j.at("seed").get<std::uint64_t>();
        return skewmat::run_fuzz(opt).to_json();
    });
}

int skewmat_paper_suite(const char* only_id, char** out_json) {
    return wrap(out_json, [&] {
        return skewmat::run_paper_suite(only_id ? only_id : "").to_json();
    });
}

int skewmat_paper_case_ids(char** out_json) {
    return wrap(out_json, [&] {
        Json arr = Json::array();
        for (const std::string& id : skewmat::paper_case_ids()) arr.push_back(id);
        return arr;
    });
}

int skewmat_split(const char* input_json, unsigned long long seed, char** out_json) {
    return wrap(out_json, [&] {
        Json j = parse_json(input_json, "split input");
        skewmat::StructAlgebra a =
            j.contains("skewset")
                ? skewmat::StructAlgebra::from_skew(skewmat::SkewSet::from_json(j.at("skewset")))
                : skewmat::StructAlgebra::from_json(j.at("algebra"));
        const FieldPtr& f = a.field();
        FieldPtr e = skewmat::Field::from_json(j.at("e"));
        std::vector<Vec> kb;
        for (const Json& row : j.at("k_basis")) kb.push_back(vec_from_json(f, row, "k_basis row"));
        Vec u = vec_from_json(f, j.at("u"), "u");
        std::vector<FElem> roots;
        for (const Json& r : j.at("roots")) roots.push_back(e->elem_from_json(r));
        std::optional<Vec> v;
        if (j.contains("v") && !j.at("v").is_null()) v = vec_from_json(e, j.at("v"), "v");
        skewmat::SplitInput in{std::move(a), std::move(kb), std::move(u), e, std::move(roots)};
        skewmat::SplitResult res = skewmat::split_to_skew(in, v, seed);
        Json out;
        out["cprime"] = res.cprime.to_json();
        out["v_used"] = vec_to_json(e, res.v_used);
        Json tr = Json::array();
        for (std::size_t r = 0; r < res.transition.rows(); ++r)
            tr.push_back(vec_to_json(e, res.transition.row(r)));
        out["transition"] = std::move(tr);
        return out;
    });
}

int skewmat_descend(const char* datum_json, unsigned long long seed, char** out_json) {
    return wrap(out_json, [&] {
        skewmat::DescentDatum d =
            skewmat::DescentDatum::from_json(parse_json(datum_json, "descent datum"));
        skewmat::DescentResult res = skewmat::fixed_subalgebra(d, seed);
        Json out;
        out["algebra"] = res.fixed.to_json();
        out["dim"] = res.fixed.dim();
        out["associative"] = res.fixed.is_associative();
        Json diag = Json::array();
        for (std::size_t t : res.diagonal) diag.push_back(t);
        out["diagonal"] = std::move(diag);
        Json reps = Json::array();
        for (const auto& p : res.orbit_rep) reps.push_back(Json::array({p.first, p.second}));
        out["orbit_rep"] = std::move(reps);
        if (res.k_generator) {
            out["k_generator"] = vec_to_json(res.fixed.field(), *res.k_generator);
            out["k_min_poly"] = poly_to_json(res.k_min_poly);
        } else {
            out["k_generator"] = nullptr;
        }
        return out;
    });
}

int skewmat_realize_sigma(const char* request_json, unsigned long long seed, char** out_json) {
    return wrap(out_json, [&] {
        Json j = parse_json(request_json, "realize request");
        skewmat::Int p = skewmat::json_to_int(j.at("p"));
        std::vector<skewmat::RealizeTarget> targets;
        for (const Json& t : j.at("targets")) {
            skewmat::RealizeTarget rt;
            rt.m = t.at("m").get<unsigned>();
            rt.d = t.at("d").get<unsigned>();
            targets.push_back(rt);
        }
        skewmat::RealizeResult res = skewmat::realize_sigma(p, targets, seed);
        Json out;
        out["algebra"] = res.alg.to_json();
        out["radical_dim"] = res.radical_candidate.size();
        out["sigma"] = res.sig.to_json();
        return out;
    });
}

}  // extern "C"
