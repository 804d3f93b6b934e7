#pragma once

#include "quintic/numberfield.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quintic {
namespace newforms {

// Loader failures map to CLI exit codes: schema errors exit 2, data (count /
// invariant) errors exit 1.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class NewformClass { S1, S2, S3 };
std::string class_name(NewformClass c);

struct NewformRecord {
    std::string id;
    long level = 0;
    std::string char_label;            // always "20.ord4"
    std::vector<Int> field_poly;       // monic, ascending
    std::optional<int> cm_disc;        // -4, -20 or none
    int conj_class_size = 1;
    std::shared_ptr<const NFCtx> ctx;
    std::vector<NFElt> an;             // an[n] = a_n, 1 <= n <= sturm bound; an[0] unused

    const NFElt& a(int n) const { return an.at(n); }
    int field_degree() const { return ctx->deg; }
    std::optional<GaussianElt> a_gaussian(int n) const { return an.at(n).as_gaussian(); }
};

NewformClass classify_newform(const NewformRecord& f);

struct Census {
    // class counts per level, modulo Galois conjugation
    std::map<long, std::map<NewformClass, int>> by_level;
    int cm_m4 = 0, cm_m20 = 0;
    int count(long level, NewformClass c) const;
};

struct Dataset {
    std::vector<NewformRecord> forms;
    Census census;
    int schema_version = 0;
};

// Parses and fully validates a dataset file:
//  - schema: mandatory fields, integer-only coefficients, version field;
//  - invariants: a_1 = 1, i^2 = -1 in every coefficient field, Weil bounds
//    under all complex embeddings at primes not dividing the level,
//    multiplicativity spot checks;
//  - census: 8 S1 / 12 S2 / 10 S3 (S3 all at 1600) over levels {1600,400,100},
//    and 4 S2 + 10 S3 + 0 S1 at level 800.
Dataset load_newforms(const std::string& path);

// Invariant checks only (used by load_newforms and by validate-only flows).
void validate_invariants(const Dataset& ds);
void validate_census(const Census& census);

long sturm_bound(long N, int k);

}  // namespace newforms
}  // namespace quintic
