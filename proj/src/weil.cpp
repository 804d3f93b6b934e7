#include "quintic/weil.hpp"

#include <sstream>
#include <stdexcept>

namespace quintic {
namespace weil {

using descent::EquationTag;

std::string ConductorIdeal::str() const {
    std::ostringstream os;
    os << "2^" << e2 << " 5^" << e5;
    if (c0exp == 1)
        os << " c0";
    else if (c0exp > 1)
        os << " c0^" << c0exp;
    return os.str();
}

ConductorIdeal milne_conductor(const ConductorIdeal& N_E) {
    // Nm(P2^a P5^b (c0)) = 4^a 5^b c0^4; Disc^2 = 2^8 5^6
    ConductorIdeal r;
    r.e2 = 2 * N_E.e2 + 8;
    r.e5 = N_E.e5 + 6;
    r.c0exp = N_E.c0exp == 0 ? 0 : 4;
    return r;
}

Nu2Class nu2_class(long nu2) {
    if (nu2 == descent::kNuInfinity || nu2 >= 3) return Nu2Class::ThreePlus;
    if (nu2 == 0) return Nu2Class::Zero;
    if (nu2 == 1) return Nu2Class::One;
    return Nu2Class::Two;
}

std::string nu2_class_name(Nu2Class c) {
    switch (c) {
        case Nu2Class::Zero: return "0";
        case Nu2Class::One: return "1";
        case Nu2Class::Two: return "2";
        case Nu2Class::ThreePlus: return ">=3";
    }
    return "?";
}

TableRow conductor_table(EquationTag tag, Nu2Class nu2) {
    auto C = [](long e2, long e5) { return ConductorIdeal{e2, e5, 1}; };
    TableRow row;
    row.tag = tag;
    row.nu2 = nu2;
    if (tag == EquationTag::Eq4) {
        switch (nu2) {
            case Nu2Class::Zero:      row.rep_conductors = {C(6, 2), C(6, 2), C(6, 2), C(6, 2)}; break;
            case Nu2Class::ThreePlus: row.rep_conductors = {C(6, 2), C(6, 2), C(6, 2), C(6, 2)}; break;
            case Nu2Class::Two:       row.rep_conductors = {C(4, 2), C(4, 2), C(4, 2), C(4, 2)}; break;
            case Nu2Class::One:       row.rep_conductors = {C(2, 2), C(4, 2), C(4, 2), C(4, 2)}; break;
        }
    } else {
        switch (nu2) {
            case Nu2Class::Zero:      row.rep_conductors = {C(5, 2), C(5, 2), C(5, 1), C(5, 0)}; break;
            case Nu2Class::ThreePlus: row.rep_conductors = {C(6, 2), C(6, 2), C(6, 1), C(6, 1)}; break;
            case Nu2Class::Two:       row.rep_conductors = {C(4, 2), C(4, 2), C(4, 1), C(4, 1)}; break;
            case Nu2Class::One:       row.rep_conductors = {C(2, 2), C(2, 2), C(2, 1), C(2, 1)}; break;
        }
    }
    return row;
}

std::vector<ConductorIdeal> curve_conductor_cases(EquationTag tag, Nu2Class nu2) {
    long e5 = (tag == EquationTag::Eq4) ? 2 : 0;
    std::vector<long> e2s;
    switch (nu2) {
        case Nu2Class::Zero: e2s = {8, 6}; break;
        case Nu2Class::One: e2s = {8}; break;
        case Nu2Class::Two: e2s = {0}; break;
        case Nu2Class::ThreePlus: e2s = {4}; break;
    }
    std::vector<ConductorIdeal> out;
    for (long e2 : e2s) out.push_back(ConductorIdeal{e2, e5, 1});
    return out;
}

std::vector<TableDiagnostic> conductor_table_diagnostics() {
    std::vector<TableDiagnostic> out;
    for (EquationTag tag : {EquationTag::Eq4, EquationTag::Eq5}) {
        for (Nu2Class nu2 : {Nu2Class::Zero, Nu2Class::ThreePlus, Nu2Class::Two, Nu2Class::One}) {
            TableRow row = conductor_table(tag, nu2);
            TableDiagnostic d;
            d.tag = tag;
            d.nu2 = nu2;
            ConductorIdeal prod{0, 0, 0};
            for (const auto& c : row.rep_conductors) {
                prod.e2 += c.e2;
                prod.e5 += c.e5;
                prod.c0exp += c.c0exp;
            }
            d.row_product = prod;
            for (const auto& ne : curve_conductor_cases(tag, nu2)) d.milne_options.push_back(milne_conductor(ne));
            d.consistent = false;
            for (const auto& opt : d.milne_options)
                if (opt == prod) d.consistent = true;
            d.rho_pairs_equal = (row.rep_conductors[0] == row.rep_conductors[1]) &&
                                (row.rep_conductors[2] == row.rep_conductors[3]);
            out.push_back(d);
        }
    }
    return out;
}

SerreData serre_parameters(EquationTag tag, Nu2Class nu2) {
    TableRow row = conductor_table(tag, nu2);
    const ConductorIdeal& c = row.rep_conductors[0];
    SerreData sd;
    Int lvl = int_pow(Int(2), (unsigned long)c.e2) * int_pow(Int(5), (unsigned long)c.e5);
    sd.level = mpz_get_ui(lvl.get_mpz_t());
    return sd;
}

long twisted_serre_level(long exponent2) {
    // Through the Milne formula with the 5-part P5^2: exponent 4 -> 2^4 5^2,
    // exponent 0 -> 2^2 5^2 (the 2-part of Disc contributes the floor).
    if (exponent2 == 4) return 400;
    if (exponent2 == 0) return 100;
    throw std::domain_error("twisted_serre_level: exponent must be 0 or 4");
}

}  // namespace weil
}  // namespace quintic
