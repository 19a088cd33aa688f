#include "idgraph/galois.hpp"

#include <stdexcept>
#include <string>

#include "idgraph/errors.hpp"

namespace idg {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

int smallest_non_residue(int p) {
  for (int s = 2; s < p; ++s) {
    bool residue = false;
    for (int x = 1; x < p && !residue; ++x) residue = (x * x) % p == s;
    if (!residue) return s;
  }
  throw std::logic_error("no quadratic non-residue found");
}

}  // namespace

GaloisField::GaloisField(int q) : q_(q) {
  if (is_prime(q) && q % 2 == 1) {
    p_ = q;
    degree_ = 1;
  } else {
    int root = 0;
    while ((root + 1) * (root + 1) <= q) ++root;
    if (root * root != q || !is_prime(root) || root % 2 == 0)
      throw infeasible_error("GF(" + std::to_string(q) +
                             "): order must be an odd prime or its square");
    p_ = root;
    degree_ = 2;
  }
  non_residue_ = degree_ == 2 ? smallest_non_residue(p_) : 0;
}

GaloisField::Element GaloisField::element(int index) const {
  if (index < 0 || index >= q_) throw std::out_of_range("field element index out of range");
  return {index % p_, index / p_};
}

GaloisField::Element GaloisField::add(Element x, Element y) const {
  return {(x.a + y.a) % p_, (x.b + y.b) % p_};
}

GaloisField::Element GaloisField::sub(Element x, Element y) const {
  return {(x.a - y.a + p_) % p_, (x.b - y.b + p_) % p_};
}

GaloisField::Element GaloisField::mul(Element x, Element y) const {
  // (a + bx)(c + dx) = ac + s·bd + (ad + bc)x  with x^2 = s
  int ac = x.a * y.a, bd = x.b * y.b, cross = x.a * y.b + x.b * y.a;
  return {(ac + non_residue_ * bd) % p_, cross % p_};
}

GaloisField::Element GaloisField::pow(Element x, long long e) const {
  Element result = one();
  Element base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

bool GaloisField::is_square(Element x) const {
  if (x == zero()) return false;
  return pow(x, (q_ - 1) / 2) == one();
}

}  // namespace idg
