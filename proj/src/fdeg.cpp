#include "alcove/fdeg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace alcove {

Int OrderPolynomial::degree() const {
  Int d = N;
  for (auto& [deg, eps] : factors) d += deg;
  for (auto& p : extra) d += static_cast<Int>(p.size()) - 1;
  return d;
}

BigInt OrderPolynomial::evaluate(Int q) const {
  BigInt v = BigInt::pow(q, N);
  for (auto& [deg, eps] : factors) {
    BigInt f = BigInt::pow(q, deg) - BigInt(eps);
    v = v * f;
  }
  for (auto& p : extra) {
    BigInt f(0);
    for (size_t i = p.size(); i-- > 0;) f = f * BigInt(q) + BigInt(p[i]);
    v = v * f;
  }
  return v;
}

std::string OrderPolynomial::to_string() const {
  std::ostringstream os;
  os << "q^" << N;
  for (auto& [deg, eps] : factors) os << "*(q^" << deg << (eps > 0 ? "-1" : "+1") << ")";
  for (auto& p : extra) os << "*(" << poly_to_string(p) << ")";
  return os.str();
}

namespace {

// audited twisted sign data
//   2A_n: degrees 2..n+1, factor (q^d - (-1)^d)      [unitary groups]
//   2D_n: degrees 2,4,...,2n-2 with +1 and (q^n + 1)  [non-split orthogonal]
//   3D_4: q^12 (q^2-1)(q^6-1)(q^8+q^4+1)              [triality form]
//   2E_6: degrees 2,5,6,8,9,12, factor (q^d - (-1)^d)
OrderPolynomial twisted_table(const RootDatum& d, int twist) {
  OrderPolynomial out;
  out.N = d.num_positive();
  out.cyc.qpow = out.N;
  const CartanType t = d.type();
  auto push_pm = [&](Int deg, int eps) {
    out.factors.emplace_back(deg, eps);
    if (eps > 0) out.cyc.mul_qd_minus_1(static_cast<int>(deg));
    else out.cyc.mul_qd_plus_1(static_cast<int>(deg));
  };
  if (t.family == Family::A && twist == 2) {
    for (Int deg = 2; deg <= t.rank + 1; ++deg) push_pm(deg, deg % 2 == 0 ? 1 : -1);
    return out;
  }
  if (t.family == Family::D && twist == 2) {
    for (Int deg = 2; deg <= 2 * (t.rank - 1); deg += 2) push_pm(deg, 1);
    push_pm(t.rank, -1);
    return out;
  }
  if (t.family == Family::D && twist == 3) {
    push_pm(2, 1);
    push_pm(6, 1);
    out.extra.push_back({1, 0, 0, 0, 1, 0, 0, 0, 1});  // q^8 + q^4 + 1
    out.cyc.mul_cyc(3);
    out.cyc.mul_cyc(6);
    out.cyc.mul_cyc(12);
    return out;
  }
  if (t.family == Family::E && t.rank == 6 && twist == 2) {
    for (Int deg : {2, 5, 6, 8, 9, 12}) push_pm(deg, deg % 2 == 0 ? 1 : -1);
    return out;
  }
  throw Error("unsupported twist for the order polynomial table");
}

}  // namespace

OrderPolynomial order_polynomial(const RootDatum& d, int twist) {
  if (!d.is_irreducible()) throw Error("order polynomial of a simple type requires irreducible datum");
  if (twist == 1) {
    OrderPolynomial out;
    out.N = d.num_positive();
    out.cyc.qpow = out.N;
    for (Int deg : d.invariant_degrees()) {
      out.factors.emplace_back(deg, 1);
      out.cyc.mul_qd_minus_1(static_cast<int>(deg));
    }
    if (out.degree() != d.dimension()) throw Error("order polynomial degree mismatch");
    return out;
  }
  CartanType t = d.type();
  t.twist = twist;
  t.validate();
  OrderPolynomial out = twisted_table(d, twist);
  if (out.degree() != d.dimension()) throw Error("twisted order polynomial degree mismatch");
  return out;
}

OrderPolynomial order_polynomial_reductive(const std::vector<CartanType>& components,
                                           int central_torus_rank) {
  OrderPolynomial out;
  for (const auto& t : components) {
    RootDatum d = RootDatum::build(t, Isogeny::adjoint);
    OrderPolynomial part = order_polynomial(d, 1);
    out.N += part.N;
    out.cyc.qpow += part.N;
    for (auto& f : part.factors) {
      out.factors.push_back(f);
      out.cyc.mul_qd_minus_1(static_cast<int>(f.first));
    }
  }
  for (int i = 0; i < central_torus_rank; ++i) {
    out.factors.emplace_back(1, 1);
    out.cyc.mul_qd_minus_1(1);
  }
  std::sort(out.factors.begin(), out.factors.end());
  return out;
}

OrderPolynomial order_polynomial_of_pseudo_levi(const AffineRootSystem& a, const PseudoLevi& pl) {
  const RootDatum& d = a.datum();
  std::vector<int> basis_roots;
  for (int node : pl.basis_nodes) basis_roots.push_back(a.derivation(node));
  std::vector<CartanType> comps;
  for (const auto& c : classify_basis_components(d, basis_roots))
    comps.push_back(CartanType{c.family, c.rank, 1});
  int central = d.rank() - static_cast<int>(basis_roots.size());
  return order_polynomial_reductive(comps, central);
}

Int iwahori_volume_exponent(const RootDatum& d) {
  return static_cast<Int>(d.num_positive()) - d.dimension();
}

RatioExponent fdeg_ratio_exponent(const RootDatum& g, const PseudoLevi& h) {
  for (int idx : h.roots_H)
    if (idx < 0 || idx >= g.num_roots()) throw Error("pseudo-Levi roots outside the ambient datum");
  RatioExponent out;
  Int dim_g = g.dimension();
  Int dim_h = static_cast<Int>(h.roots_H.size()) + g.rank();  // equal-rank centralizer
  if ((dim_g - dim_h) % 2 != 0) throw Error("dimension difference is odd");
  out.half_dim_difference = (dim_g - dim_h) / 2;
  out.positive_root_difference =
      static_cast<Int>(g.num_positive()) - static_cast<Int>(h.roots_H.size()) / 2;
  out.consistent = out.half_dim_difference == out.positive_root_difference;
  return out;
}

ConductorReport tame_adjoint_conductor(const RootDatum& g, const PseudoLevi& h) {
  ConductorReport out;
  Int dim_h = static_cast<Int>(h.roots_H.size()) + g.rank();
  out.conductor = g.dimension() - dim_h;
  if (out.conductor % 2 != 0) throw Error("conductor is odd");
  out.gamma_exponent = out.conductor / 2;
  return out;
}

PPrimeRatio pprime_ratio(const OrderPolynomial& Gq, const OrderPolynomial& Hq, Int multiplier) {
  if (multiplier <= 0) throw Error("component multiplier must be positive");
  PPrimeRatio out;
  out.q_power_delta = Gq.N - Hq.N;
  QFactored ratio = Gq.cyc.divided_by(Hq.cyc);
  out.q_power_matches = ratio.qpow == out.q_power_delta;
  ratio.qpow = 0;  // strip the q-power: the p-part is accounted separately
  out.connected = ratio;
  out.with_multiplier = ratio;
  out.with_multiplier.mul_scalar(1, multiplier);
  out.connected_is_polynomial = out.connected.is_polynomial();
  if (out.connected_is_polynomial) out.reduced_polynomial = out.connected.expand();
  return out;
}

}  // namespace alcove
