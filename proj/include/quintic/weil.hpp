#pragma once

#include "quintic/descent.hpp"
#include "quintic/rational.hpp"

#include <array>
#include <string>
#include <vector>

namespace quintic {
namespace weil {

// Conductor as 2^e2 * 5^e5 * (radical cofactor c0)^c0exp; the cofactor is
// squarefree and coprime to 10 and is carried symbolically.
struct ConductorIdeal {
    long e2 = 0, e5 = 0;
    int c0exp = 0;

    friend bool operator==(const ConductorIdeal& a, const ConductorIdeal& b) {
        return a.e2 == b.e2 && a.e5 == b.e5 && a.c0exp == b.c0exp;
    }
    std::string str() const;
};

// N_B = Nm(N_E) * Disc(K/Q)^2 with Nm(P2) = 4, Nm(P5) = 5, Nm((c0)) = c0^4
// and Disc(K/Q) = 2^4 * 5^3.
ConductorIdeal milne_conductor(const ConductorIdeal& N_E);

enum class Nu2Class { Zero, One, Two, ThreePlus };
Nu2Class nu2_class(long nu2);  // kNuInfinity maps to ThreePlus
std::string nu2_class_name(Nu2Class c);

struct TableRow {
    descent::EquationTag tag;
    Nu2Class nu2;
    std::array<ConductorIdeal, 4> rep_conductors;  // rho_S1, rho_S1^sigma, rho_S2, rho_S2^sigma
};

// The printed conductor table, stored verbatim as golden data.
TableRow conductor_table(descent::EquationTag tag, Nu2Class nu2);

// Ramified exponents of N_{E_gamma} for each case (the case-analysis
// propositions); nu2 = Zero admits two values of e2.
std::vector<ConductorIdeal> curve_conductor_cases(descent::EquationTag tag, Nu2Class nu2);

struct TableDiagnostic {
    descent::EquationTag tag;
    Nu2Class nu2;
    ConductorIdeal row_product;                 // product of the four printed entries
    std::vector<ConductorIdeal> milne_options;  // N_B through the Milne formula
    bool consistent = false;                    // row product matches one option
    bool rho_pairs_equal = false;               // printed conductors of rho and rho^sigma agree
};

// Deterministic product check of all eight printed rows against the Milne
// conductors; inconsistencies are reported, never corrected.
std::vector<TableDiagnostic> conductor_table_diagnostics();

struct SerreData {
    long level = 0;      // in {1600, 800, 400, 100}
    int weight = 2;
    std::string character = "conj(epsilon), the order-4 character mod 20";
    long irreducibility_bound = 13;  // absolute irreducibility needs p > 13
};

// Serre level from the rho_S1 column of the table with the c0 factor removed.
SerreData serre_parameters(descent::EquationTag tag, Nu2Class nu2);

// Level of the chi8-twisted representation from the P2-exponent of E_{gamma,2}.
long twisted_serre_level(long exponent2);

}  // namespace weil
}  // namespace quintic
