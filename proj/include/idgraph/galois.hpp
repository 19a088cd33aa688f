#pragma once

#include <cstdint>

namespace idg {

// Arithmetic in GF(q) for q = p or p^2 with p an odd prime. The quadratic
// extension is F_p[x]/(x^2 - s) with s the smallest non-residue mod p.
// Elements are (a, b) standing for a + b·x; prime fields keep b = 0.
class GaloisField {
 public:
  explicit GaloisField(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int extension_degree() const { return degree_; }

  struct Element {
    int a = 0, b = 0;
    bool operator==(const Element&) const = default;
  };

  Element element(int index) const;  // index in [0, q), order a + b*p
  int index(Element e) const { return e.a + e.b * p_; }

  Element add(Element x, Element y) const;
  Element sub(Element x, Element y) const;
  Element mul(Element x, Element y) const;
  Element pow(Element x, long long e) const;
  Element zero() const { return {}; }
  Element one() const { return {1, 0}; }

  // Nonzero squares; x^((q-1)/2) == 1.
  bool is_square(Element x) const;

 private:
  int q_, p_, degree_, non_residue_;
};

bool is_prime(int n);

}  // namespace idg
