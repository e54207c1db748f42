#pragma once

#include <string>
#include <vector>

#include "alcove/centralizer.hpp"
#include "alcove/qpoly.hpp"
#include "alcove/rootcore.hpp"

// Order polynomials of finite reductive groups in the factored form
// q^N prod (q^{d_i} - eps_i), pro-p Iwahori volume exponents, formal
// degree ratio exponents, tame adjoint conductors and p'-part ratios.
// Untwisted degrees are computed from the height partition; the twisted
// sign data is a fixed audited table.

namespace alcove {

struct OrderPolynomial {
  Int N = 0;                                 // exponent of q
  std::vector<std::pair<Int, int>> factors;  // (degree d_i, eps_i in {+1,-1})
  std::vector<std::vector<Int>> extra;       // extra integer polynomial factors
  QFactored cyc;                             // same value in cyclotomic form

  Int degree() const;
  BigInt evaluate(Int q) const;  // via the factor list
  std::string to_string() const;
};

// Order polynomial of a simple group of the given type and twist.
// Supported twists: 1 for every family; 2 for A, D, E6; 3 for D4.
OrderPolynomial order_polynomial(const RootDatum& d, int twist);

// Order polynomial of a split reductive group: a product of untwisted
// simple components and a split central torus.
OrderPolynomial order_polynomial_reductive(const std::vector<CartanType>& components,
                                           int central_torus_rank);

// The identity component attached to a pseudo-Levi: its components (all
// split untwisted here) plus the central torus of the ambient rank.
OrderPolynomial order_polynomial_of_pseudo_levi(const AffineRootSystem& a, const PseudoLevi& pl);

// N - dim G = -(N + rank).
Int iwahori_volume_exponent(const RootDatum& d);

struct RatioExponent {
  Int half_dim_difference = 0;  // (dim G - dim H)/2
  Int positive_root_difference = 0;  // N_G - N_H
  bool consistent = false;
};

// (dim G - dim H)/2 with the independent N_G - N_H cross-check.
RatioExponent fdeg_ratio_exponent(const RootDatum& g, const PseudoLevi& h);

struct ConductorReport {
  Int conductor = 0;       // dim g - dim h
  Int gamma_exponent = 0;  // half of it
};

// Artin conductor exponent of the inertia-moved part of the adjoint
// representation of a tame parameter: dim g - dim h.
ConductorReport tame_adjoint_conductor(const RootDatum& g, const PseudoLevi& h);

struct PPrimeRatio {
  QFactored connected;        // |G|_{p'} / |H|_{p'}
  QFactored with_multiplier;  // |G|_{p'} / (|H|_{p'} * component multiplier)
  Int q_power_delta = 0;      // N_G - N_H, stripped from the ratio
  bool q_power_matches = false;
  bool connected_is_polynomial = false;
  std::vector<Int> reduced_polynomial;  // dense coefficients when polynomial
};

// Ratio of the prime-to-p parts, fully reduced in cyclotomic form; the
// component multiplier is the order of the relevant component group.
PPrimeRatio pprime_ratio(const OrderPolynomial& Gq, const OrderPolynomial& Hq, Int multiplier);

}  // namespace alcove
