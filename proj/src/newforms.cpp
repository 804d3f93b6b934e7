#include "quintic/newforms.hpp"

#include "quintic/characters.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>

namespace quintic {
namespace newforms {

using nlohmann::json;

std::string class_name(NewformClass c) {
    switch (c) {
        case NewformClass::S1: return "S1";
        case NewformClass::S2: return "S2";
        case NewformClass::S3: return "S3";
    }
    return "?";
}

NewformClass classify_newform(const NewformRecord& f) {
    if (f.cm_disc) return NewformClass::S1;
    return f.field_degree() > 2 ? NewformClass::S2 : NewformClass::S3;
}

int Census::count(long level, NewformClass c) const {
    auto it = by_level.find(level);
    if (it == by_level.end()) return 0;
    auto jt = it->second.find(c);
    return jt == it->second.end() ? 0 : jt->second;
}

long sturm_bound(long N, int k) {
    if (N < 1 || k < 2) throw std::domain_error("sturm_bound: need N >= 1, k >= 2");
    // ceil( k/12 * N * prod_{l | N} (1 + 1/l) )
    Int num(k), den(12);
    num *= N;
    for (auto& [l, e] : factor_trial(Int(N), Int(N))) {
        num *= (l + 1);
        den *= l;
    }
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return mpz_get_ui(q.get_mpz_t());
}

namespace {

Rat rat_from_json_int(const json& j) {
    if (j.is_number_integer()) return Rat(Int(std::to_string(j.get<long long>())));
    if (j.is_string()) return Rat(Int(j.get<std::string>()));
    throw SchemaError("newforms: coefficient is not an exact integer");
}

std::vector<Rat> rat_vector(const json& j, const char* what) {
    if (!j.is_array()) throw SchemaError(std::string("newforms: ") + what + " must be an array");
    std::vector<Rat> out;
    for (const auto& x : j) out.push_back(rat_from_json_int(x));
    return out;
}

}  // namespace

Dataset load_newforms(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("newforms: cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw SchemaError(std::string("newforms: JSON parse failure: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("version") || !doc.contains("forms"))
        throw SchemaError("newforms: missing version or forms");
    Dataset ds;
    ds.schema_version = doc["version"].get<int>();
    if (ds.schema_version != 1) throw SchemaError("newforms: unsupported schema version");

    for (const auto& jf : doc["forms"]) {
        for (const char* key : {"id", "level", "char", "field_poly", "i_embed", "den", "cm_disc", "an",
                                "conj_class_size"})
            if (!jf.contains(key)) throw SchemaError(std::string("newforms: record missing field ") + key);
        NewformRecord f;
        f.id = jf["id"].get<std::string>();
        f.level = jf["level"].get<long>();
        f.char_label = jf["char"].get<std::string>();
        if (f.char_label != "20.ord4") throw SchemaError("newforms: unexpected character label for " + f.id);
        f.conj_class_size = jf["conj_class_size"].get<int>();

        Int den(rat_from_json_int(jf["den"]).get_num());
        if (den <= 0) throw SchemaError("newforms: nonpositive denominator for " + f.id);
        Rat scale{Rat(1) / Rat(den)};

        auto poly = rat_vector(jf["field_poly"], "field_poly");
        for (auto& x : poly) f.field_poly.push_back(Int(x.get_num()));
        auto iemb = rat_vector(jf["i_embed"], "i_embed");
        for (auto& x : iemb) x *= scale;
        f.ctx = std::make_shared<NFCtx>(poly, iemb);

        if (!jf["cm_disc"].is_null()) {
            int dsc = jf["cm_disc"].get<int>();
            if (dsc != -4 && dsc != -20) throw SchemaError("newforms: cm_disc must be -4, -20 or null");
            f.cm_disc = dsc;
        }

        const auto& jan = jf["an"];
        if (!jan.is_array() || jan.empty()) throw SchemaError("newforms: empty an for " + f.id);
        f.an.resize(jan.size() + 1, NFElt::zero(f.ctx));
        for (size_t n = 0; n < jan.size(); ++n) {
            auto coords = rat_vector(jan[n], "an entry");
            for (auto& x : coords) x *= scale;
            f.an[n + 1] = NFElt(f.ctx, std::move(coords));
        }
        ds.forms.push_back(std::move(f));
    }

    for (const auto& f : ds.forms) {
        NewformClass c = classify_newform(f);
        ds.census.by_level[f.level][c] += 1;
        if (f.cm_disc == -4) ds.census.cm_m4 += 1;
        if (f.cm_disc == -20) ds.census.cm_m20 += 1;
    }

    validate_invariants(ds);
    validate_census(ds.census);
    return ds;
}

void validate_invariants(const Dataset& ds) {
    long needed = sturm_bound(1600, 2);
    for (const auto& f : ds.forms) {
        if (long(f.an.size()) - 1 < needed)
            throw DataError("newforms: " + f.id + " has fewer than " + std::to_string(needed) + " coefficients");
        if (f.an[1] != NFElt::one(f.ctx)) throw DataError("newforms: a_1 != 1 for " + f.id);
        // i^2 = -1 in the presented field
        NFElt i_elt(f.ctx, f.ctx->i_embed);
        if (i_elt * i_elt != NFElt::from_rat(f.ctx, Rat(-1)))
            throw DataError("newforms: i_embed does not square to -1 for " + f.id);
        if (f.level != 100 && f.level != 400 && f.level != 800 && f.level != 1600)
            throw DataError("newforms: unexpected level for " + f.id);

        // multiplicativity spot checks on coprime pairs
        for (auto [m, n] : {std::pair<int, int>{2, 3}, {3, 4}, {3, 5}, {5, 7}, {4, 9}, {7, 9}, {11, 13}}) {
            if (m * n > long(f.an.size()) - 1) continue;
            if (f.an[m * n] != f.an[m] * f.an[n])
                throw DataError("newforms: multiplicativity fails at (" + std::to_string(m) + "," +
                                std::to_string(n) + ") for " + f.id);
        }
        // Hecke recursion at a prime power: a_9 = a_3^2 - eps_bar(3)*3
        {
            GaussianElt e3 = epsilon_bar()(Int(3));
            NFElt want = f.an[3] * f.an[3] - Rat(3) * NFElt::from_gaussian(f.ctx, e3);
            if (f.an[9] != want) throw DataError("newforms: Hecke recursion fails at 9 for " + f.id);
        }

        // Weil bounds |a_q| <= 2 sqrt(q) under every complex embedding
        auto roots = f.ctx->complex_roots();
        for (long q : {3, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
            if (q > long(f.an.size()) - 1) break;
            if (f.level % q == 0) continue;
            for (const auto& root : roots) {
                double mag = std::abs(f.an[q].embed(root));
                if (mag > 2.0 * std::sqrt(double(q)) + 1e-9)
                    throw DataError("newforms: Weil bound fails at q=" + std::to_string(q) + " for " + f.id);
            }
        }
    }
}

void validate_census(const Census& c) {
    auto expect = [&](long level, NewformClass cls, int want) {
        int got = c.count(level, cls);
        if (got != want)
            throw DataError("newforms: census mismatch at level " + std::to_string(level) + " class " +
                            class_name(cls) + ": got " + std::to_string(got) + ", want " + std::to_string(want));
    };
    // levels relevant to even a+b: totals over {1600,400,100}
    int s1 = c.count(1600, NewformClass::S1) + c.count(400, NewformClass::S1) + c.count(100, NewformClass::S1);
    int s2 = c.count(1600, NewformClass::S2) + c.count(400, NewformClass::S2) + c.count(100, NewformClass::S2);
    if (s1 != 8)
        throw DataError("newforms: census mismatch: S1 total over {1600,400,100} is " + std::to_string(s1) +
                        ", want 8");
    if (s2 != 12)
        throw DataError("newforms: census mismatch: S2 total over {1600,400,100} is " + std::to_string(s2) +
                        ", want 12");
    expect(1600, NewformClass::S3, 10);
    expect(400, NewformClass::S3, 0);
    expect(100, NewformClass::S3, 0);
    expect(800, NewformClass::S1, 0);
    expect(800, NewformClass::S2, 4);
    expect(800, NewformClass::S3, 10);
    if (c.cm_m4 != 4 || c.cm_m20 != 4)
        throw DataError("newforms: CM split should be 4 by Q(i) and 4 by Q(sqrt-5)");
}

}  // namespace newforms
}  // namespace quintic
