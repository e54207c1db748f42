#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alcove/affine.hpp"
#include "alcove/rootcore.hpp"

// Torsion elements of the torus presented by Kac coordinates, their
// centralizing root subsystems (delete nodes of the extended diagram),
// component groups of the centralizer from the point stabilizer in the
// extended affine Weyl group, Frobenius rationality, and the standard
// representation eigenvalue test for the orthogonal types.
//
// A torsion element is x = lambda/m with lambda in X_*; alpha(s) = 1 is
// decided by <alpha, lambda> = 0 mod m.  Elements are always reduced to
// the dominant alcove representative before any comparison.

namespace alcove {

struct KacPoint {
  Int order = 1;    // m
  Vec lambda_cw;    // numerator in fundamental-coweight coordinates
  bool reduced = false;

  // Kac coordinates (s_0, ..., s_r) of an alcove representative.
  Vec kac_coordinates(const AffineRootSystem& a) const;
  bool operator==(const KacPoint&) const = default;
};

// Reduce to the canonical dominant-alcove representative: alcove-reduce
// under W x Q^vee, then minimize over the lattice's diagram rotations,
// then divide out the point's true order.
KacPoint canonicalize(const AffineRootSystem& a, const KacPoint& s);

// Build a KacPoint from coordinates in the datum's own cocharacter basis
// (the external input format), converting to coweight coordinates.
KacPoint kac_point_from_lattice_coords(const RootDatum& d, Int m, const Vec& coords);

struct PseudoLevi {
  std::vector<int> roots_H;      // ambient root indices, sorted
  std::vector<int> basis_nodes;  // vanishing nodes of the extended diagram
  FinAbGroup omega_H;            // X_*/<Phi_H^vee> (may have free part)
  KacPoint witness;              // the canonical representative used
  std::string shape;             // component type names, sorted, "+"-joined
};

// {alpha : alpha(s) = 1} with its basis inside the extended diagram.
PseudoLevi pseudo_levi(const AffineRootSystem& a, const KacPoint& s);

enum class Confidence { exhaustive, generated };

struct ComponentGroup {
  std::vector<int> omega_elements;       // stabilizing diagram classes
  std::vector<WeylElement> coset_reps;   // Weyl parts, fixing s modulo X_*
  std::vector<std::vector<int>> table;   // multiplication table
  std::vector<int> frobenius_action;     // permutation of the elements, or empty
  Confidence confidence = Confidence::exhaustive;
  Int order() const { return static_cast<Int>(coset_reps.size()); }
};

// pi_0 of the centralizer of s: the stabilizer of the alcove point in
// Omega(X_*), with coset representatives in W.  The orbit verification
// path runs when the orbit fits under `orbit_guard`; otherwise the result
// carries Confidence::generated.
ComponentGroup component_group(const AffineRootSystem& a, const KacPoint& s,
                               const FrobeniusForm* form = nullptr,
                               size_t orbit_guard = 300000);

// q sigma_*(lambda) = lambda mod m X_*: the element defined over F_q for
// the given form.  Requires gcd(q, m) = 1.
bool frobenius_rational(const AffineRootSystem& a, const KacPoint& s,
                        const FrobeniusForm& form, Int q);

struct EigenvaluePhases {
  std::vector<std::pair<Int, Int>> phases;  // (num, den) in Q/Z, den > 0, sorted
  bool has_plus_one = false;                // phase 0
  bool has_minus_one = false;               // phase 1/2
};

// Phases of s in the standard representation of an orthogonal group
// (weights {+-e_i}, plus 0 for B_n).  The datum's cocharacter lattice must
// pair integrally against the standard weights (SO lattice, not adjoint D).
EigenvaluePhases standard_rep_eigenvalues(const AffineRootSystem& a, const KacPoint& s);

struct IndexIdentityReport {
  Int omega_Hx_frob_order = 0;   // |Omega_{H,x}^Frob|
  Int kernel_frob_order = 0;     // |ker(Omega_{H,x} -> Omega_{G,x})^Frob|
  Int image_order = 0;           // |A|, image of the Frob-fixed parts
  Int omega_Gx_frob_order = 0;
  bool orders_consistent = false;  // |A| * |ker^F| == |Omega_{H,x}^F|
};

// The two sides of the index identity at a facet point: the image of
// Omega_{H,x}^Frob in Omega_{G,x}^Frob versus the quotient by the kernel.
IndexIdentityReport index_identity_check(const AffineRootSystem& a, const KacPoint& s,
                                         const FrobeniusForm& form, const Facet& facet,
                                         size_t orbit_guard = 300000);

// Stabilizer classes of a rational point x in X_*/<coroot lattice of the
// given subsystem>, computed by a Schreier orbit of x under W(subsystem).
// Returns the class keys of the stabilizer subgroup, with the Smith data
// used for keying.  Used by index_identity_check and exposed for tests.
struct PointClassGroup {
  Smith smith;               // of the subsystem coroot lattice in coweight coords
  std::vector<Vec> classes;  // subgroup element keys, identity first
  std::vector<WeylElement> weyl_reps;
};
PointClassGroup point_stabilizer_classes(const RootDatum& d, const std::vector<int>& sub_roots,
                                         const std::vector<int>& sub_basis, const RatVec& x,
                                         size_t orbit_guard);

}  // namespace alcove
