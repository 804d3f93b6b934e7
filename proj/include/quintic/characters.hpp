#pragma once

#include "quintic/gaussian.hpp"

#include <vector>

namespace quintic {

// Dirichlet character with values in Q(i), stored as a full value table on
// residues mod the modulus.
class DirichletChar {
  public:
    DirichletChar(long modulus, std::vector<GaussianElt> values);

    long modulus() const { return modulus_; }
    long conductor() const { return conductor_; }
    int order() const { return order_; }

    GaussianElt operator()(const Int& n) const;
    GaussianElt operator()(long n) const { return (*this)(Int(n)); }

    DirichletChar conj() const;
    DirichletChar pow(int k) const;
    // product of characters, defined modulo lcm of the moduli
    friend DirichletChar operator*(const DirichletChar& a, const DirichletChar& b);

    bool is_trivial() const;

  private:
    long modulus_;
    std::vector<GaussianElt> vals_;
    long conductor_;
    int order_;

    void compute_invariants();
};

// epsilon2: the quadratic character of conductor 4.
const DirichletChar& epsilon2();
// epsilon5: the order-4 character of conductor 5 with epsilon5(2) = i.
const DirichletChar& epsilon5();
// epsilon = epsilon2 * epsilon5: modulus 20, order 4, conductor 20.
const DirichletChar& epsilon();
const DirichletChar& epsilon_bar();
// chi8: the quadratic character of Q(sqrt2), conductor 8.
const DirichletChar& chi8();

}  // namespace quintic
