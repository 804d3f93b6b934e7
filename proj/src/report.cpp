#include "quintic/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace quintic {
namespace report {

std::string status_name(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Discrepancy: return "discrepancy";
        case Status::Inconclusive: return "inconclusive";
    }
    return "?";
}

const std::map<std::string, std::string>& claim_registry() {
    static const std::map<std::string, std::string> reg = {
        {"descent.phi-identities", "(a+b)^2 = -conj(w) phi1 - w phi2 and phi = phi1 phi2"},
        {"descent.lemma-coprime", "a+b and phi(a,b) are coprime outside 5; v5(phi) = 1 when 5 | a+b"},
        {"descent.lemma-divides", "a prime l not 1 mod 5 dividing a^5+b^5 divides a+b"},
        {"descent.corollary-1mod5", "primes dividing phi(a,b) other than 5 are 1 mod 5"},
        {"descent.classification", "a solution lands in phi = c0^p or phi = 5 c0^p with c0 odd, prime-to-5"},
        {"descent.search-trivial", "the exhaustive search finds only trivial solutions"},
        {"frey.construction", "E: y^2 = x^3 + 2(a+b) x^2 - conj(w) phi1 x is a valid elliptic curve"},
        {"frey.discriminant", "Delta(E) = 2^6 conj(w) phi phi1"},
        {"frey.isogeny", "the explicit 2-isogeny mu: sigmaE -> E and its dual verify"},
        {"frey.twist", "E_gamma is the gamma-quadratic twist with j(E_gamma) = j(E)"},
        {"conductor.P2", "the P2-exponent of N_{E_gamma} matches the case table"},
        {"conductor.P5", "the P5-exponent of N_{E_gamma} matches the case table"},
        {"conductor.multiplicative", "primes dividing the phi-cofactor are multiplicative of exponent 1"},
        {"conductor.twist2", "the P2-exponent of the twist by 2 lies in {0, 4}"},
        {"trace.P3", "a_{P3}(E_gamma) = -18 whenever 3 | a+b"},
        {"quer.epsilon", "epsilon = eps2 * eps5 has modulus 20, order 4, conductor 20"},
        {"quer.cocycle-table", "the isogeny cocycle table satisfies the 2-cocycle and degree identities"},
        {"quer.embedding", "N_{s0}(alpha0) = -1, N_{s1}(alpha1) = 5 and the compatibility quotient holds"},
        {"quer.splitting-map", "the splitting coboundary is rational-valued with zeta = -1"},
        {"quer.gamma", "gamma = 2 theta^2 - theta - 5 with a 4-element Galois orbit"},
        {"weil.milne", "N_B = Nm(N_{E_gamma}) Disc(K/Q)^2 reproduces the restriction conductors"},
        {"weil.table-products", "printed representation conductors multiply to the restriction conductor"},
        {"weil.serre-level", "the Serre level lies in {1600, 800, 400, 100}"},
        {"weil.twisted-level", "the chi8-twisted representation has level 400 or 100"},
        {"newforms.schema", "the dataset matches the exact-coefficient schema"},
        {"newforms.census", "the class census matches 8 S1 / 12 S2 / 10 S3 plus 4 S2 + 10 S3 at level 800"},
        {"newforms.invariants", "a_1 = 1, Weil bounds and Hecke multiplicativity hold"},
        {"eliminate.s1", "CM forms are excluded under the split-Cartan congruences"},
        {"eliminate.s2", "S2 forms are excluded outside the a_3 norm primes"},
        {"eliminate.s3", "S3 forms are excluded through the chi8 twist or the P3 trace"},
        {"eliminate.twist-match", "every level-1600 S3 form twists to level 800"},
        {"eliminate.trace-values", "a_{P3}(f) takes the values 14 and 2 on the S3 trace route"},
        {"theorem.d2", "no solutions for p > 13 with p = 1 mod 4 and p = +-1 mod 5"},
        {"theorem.d3", "no solutions for p > 73 with p = 1 mod 4"},
        {"theorem.density", "the eligible prime density matches 1/4 (d=2) or 1/2 (d=3)"},
    };
    return reg;
}

const std::string& claim_anchor(const std::string& id) {
    auto it = claim_registry().find(id);
    if (it == claim_registry().end()) throw std::logic_error("unknown claim id: " + id);
    return it->second;
}

void Report::add(const std::string& claim_id, Status st, const std::string& details) {
    entries.push_back({claim_id, claim_anchor(claim_id), st, details});
}

int Report::passes() const {
    int n = 0;
    for (auto& e : entries) n += (e.status == Status::Pass);
    return n;
}
int Report::fails() const {
    int n = 0;
    for (auto& e : entries) n += (e.status == Status::Fail);
    return n;
}
int Report::discrepancies() const {
    int n = 0;
    for (auto& e : entries) n += (e.status == Status::Discrepancy);
    return n;
}
int Report::inconclusive() const {
    int n = 0;
    for (auto& e : entries) n += (e.status == Status::Inconclusive);
    return n;
}

int Report::exit_code(bool strict) const {
    if (fails() > 0 || inconclusive() > 0) return 1;
    if (strict && discrepancies() > 0) return 1;
    return 0;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "== " << command << " ==\n";
    for (const auto& e : entries) {
        os << "[" << status_name(e.status) << "] " << e.claim_id << ": " << e.anchor;
        if (!e.details.empty()) os << "\n    " << e.details;
        os << "\n";
    }
    os << "summary: " << passes() << " pass, " << fails() << " fail, " << discrepancies() << " discrepancy, "
       << inconclusive() << " inconclusive\n";
    return os.str();
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : entries) {
        nlohmann::ordered_json je;
        je["claim"] = e.claim_id;
        je["anchor"] = e.anchor;
        je["status"] = status_name(e.status);
        je["details"] = e.details;
        j["entries"].push_back(je);
    }
    j["summary"] = {{"pass", passes()}, {"fail", fails()}, {"discrepancy", discrepancies()},
                    {"inconclusive", inconclusive()}};
    j["version"] = version;
    return j.dump(2) + "\n";
}

}  // namespace report
}  // namespace quintic
