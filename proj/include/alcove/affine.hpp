#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "alcove/rootcore.hpp"

// Extended Dynkin diagrams, affine root systems at the hyperspecial base
// point (level sets are exactly Z), the fundamental group acting on the
// extended diagram, Frobenius forms (quasi-split twists composed with
// inner twists), facets and their stabilizers, reductive quotients, and
// the inclusion of the affine root system of an equal-rank subsystem.
//
// The affine basis is Delta_aff = {(alpha_i, 0)} u {(-theta, 1)}; node 0
// is the affine node throughout.  The fundamental alcove determined by
// Delta_aff is the fixed base chamber; all reports are relative to it.

namespace alcove {

struct AffineRoot {
  int root_index = -1;  // gradient
  Int level = 0;
  bool operator==(const AffineRoot&) const = default;
};

// One element of the fundamental group Omega = P^vee / Q^vee, realized as
// t_{pi} * u with pi a minuscule fundamental coweight and u in W.
struct OmegaElement {
  int node = 0;             // 0 for the identity, else the minuscule simple index (1-based)
  WeylElement weyl_part;    // u
  Vec translation_cw;       // pi in coweight coordinates (zero for identity)
  std::vector<int> affine_perm;  // action on diagram nodes 0..r
};

class AffineRootSystem;

class OmegaGroup {
 public:
  int size() const { return static_cast<int>(elements_.size()); }
  const OmegaElement& element(int k) const { return elements_[k]; }
  int multiply(int a, int b) const;
  int inverse(int a) const;
  int power(int a, Int e) const;
  int act_node(int k, int node) const { return elements_[k].affine_perm[node]; }
  // Index of the element whose lattice class matches [cw]; -1 if none
  // (never happens for classes of P^vee / Q^vee).
  int element_of_class(const Vec& cw) const;
  // Elements whose translation representative lies in the given datum's
  // cocharacter lattice (the subgroup X_* / Q^vee of Omega).
  std::vector<int> subgroup_in_lattice(const RootDatum& d) const;

 private:
  friend class AffineRootSystem;
  std::vector<OmegaElement> elements_;
  std::map<Vec, int> by_class_key_;
  Smith coroot_smith_;  // of P^vee / Q^vee; value copy keeps the group self-contained
};

class AffineRootSystem {
 public:
  // Requires an irreducible datum.  The Omega action on the diagram is
  // only defined in the adjoint normalization; construction succeeds for
  // any isogeny but omega_action_on_diagram refuses non-adjoint data.
  static AffineRootSystem build(const RootDatum& d);

  const RootDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  int num_nodes() const { return rank() + 1; }
  const AffineRoot& node(int a) const { return nodes_[a]; }
  int derivation(int a) const { return nodes_[a].root_index; }
  // Mark of a node (coefficient in the null root); node 0 has mark 1.
  Int mark(int a) const;
  const OmegaGroup& omega() const { return omega_; }

  // Value of the affine root at a rational point of the apartment
  // (coweight coordinates): <gamma, x> + n, as (num, den).
  std::pair<Int, Int> eval_affine(const AffineRoot& psi, const RatVec& x) const;

 private:
  RootDatum datum_;
  std::vector<AffineRoot> nodes_;
  OmegaGroup omega_;
};

// A Frobenius form: the quasi-split diagram automorphism of the given
// order composed with an inner twist by a fundamental-group element.
struct FrobeniusForm {
  int twist = 1;
  int inner_node = 0;            // 0 = quasi-split, else a minuscule simple index
  std::vector<int> sigma;        // 0-based permutation of the simples
  std::vector<int> affine_perm;  // induced permutation of the diagram nodes
  Mat linear_cw;                 // linear part of the Frobenius on coweight coords
  Vec translation_cw;            // translation part (from the inner twist)
  Mat sigma_cw;                  // permutation matrix of sigma on coweight coords

  static FrobeniusForm make(const AffineRootSystem& a, int twist, int inner_node);
  std::string name(const CartanType& t) const;
  bool is_split() const { return twist == 1 && inner_node == 0; }
  // Affine action on a point of the apartment.
  RatVec apply(const AffineRootSystem& a, const RatVec& x) const;
};

struct Facet {
  std::set<int> delta_F;  // diagram nodes, proper subset of {0..r}

  void validate(const AffineRootSystem& a, const FrobeniusForm& form) const;
};

// --- operations --------------------------------------------------------------

// The action of each Omega generator (and every element) on the extended
// diagram.  Keys are element indices in a.omega().
std::map<int, std::vector<int>> omega_action_on_diagram(const AffineRootSystem& a);

struct FacetStabilizer {
  std::vector<int> stabilizer;  // Omega element indices preserving delta_F
  std::vector<int> frob_fixed;  // the sigma-fixed part of the stabilizer
};
FacetStabilizer facet_stabilizer(const AffineRootSystem& a, const FrobeniusForm& form,
                                 const Facet& f);

struct FinAbGroup {
  std::vector<Int> invariant_factors;  // entries > 1, then 0 per free rank
  std::vector<Vec> generator_lifts;    // coweight coordinates
  Int order() const;
};

// Omega / (sigma - 1) Omega with generator lifts.
FinAbGroup h1_coinvariants(const AffineRootSystem& a, const FrobeniusForm& form);
// Fixed points of sigma on Omega, as element indices.
std::vector<int> omega_frobenius_fixed(const AffineRootSystem& a, const FrobeniusForm& form);

struct ComponentShape {
  std::string type_name;       // normalized: rank-2 double bond reported as C2,
                               // D3 as A3, D2 split into two A1 components
  Family family = Family::A;
  int rank = 0;
  std::vector<int> nodes;      // diagram nodes, sorted
  std::vector<Vec> coroots_cw; // coroots of the derivations, coweight coords
};

struct ReductiveShape {
  std::vector<ComponentShape> components;
  std::vector<Int> center_invariant_factors;  // torsion of X^*(T)/<Delta_F>
  int central_torus_rank = 0;
  bool center_connected = true;
  std::string shape_string;  // e.g. "A1+C2", sorted
};

// Root datum data of the reductive quotient at a facet (adjoint ambient
// datum required; characters are taken in the root lattice).
ReductiveShape reductive_quotient(const AffineRootSystem& a, const Facet& f);

// Connected components of a simple-system of roots (given by ambient root
// indices), each classified by Cartan type.  Rank-2 double bonds come back
// as C2, chains as A_n.
std::vector<ComponentShape> classify_basis_components(const RootDatum& d,
                                                      const std::vector<int>& basis_roots);

// X_* / <coroots of the given roots>, with generator lifts in the X_* basis.
FinAbGroup cochar_mod_coroots(const RootDatum& d, const std::vector<int>& roots);

// Canonical point of the facet: the barycenter of the corresponding face
// of the fundamental alcove, in coweight coordinates.
RatVec facet_point(const AffineRootSystem& a, const Facet& f);

struct ApartmentEmbedding {
  bool closed = false;            // subsystem closed in the ambient system
  bool levels_integral = true;    // level set of every subsystem gradient is Z
  bool frob_equivariant = true;   // sigma-stability when a form is supplied
  std::vector<std::vector<int>> component_roots;          // ambient root indices
  std::vector<std::vector<AffineRoot>> component_bases;   // affine bases inside Psi_G
};

// The affine root system of an equal-rank reflection subsystem, embedded
// in the ambient one; verifies closure and the level normalization.
ApartmentEmbedding apartment_embedding(const std::vector<int>& roots_H,
                                       const AffineRootSystem& a,
                                       const FrobeniusForm* form = nullptr);

struct WeylInclusionReport {
  std::vector<Int> omega_H_factors;  // invariant factors of X_*/<Phi_H^vee>
  std::vector<Int> omega_G_factors;
  bool surjective = false;
  bool kottwitz_commutes = false;
  int generators_checked = 0;
};

// X_*/<Phi_H^vee> ->> X_*/<Phi_G^vee> together with a generator-level
// certificate that the Kottwitz square commutes.
WeylInclusionReport extended_weyl_inclusion(const std::vector<int>& roots_H,
                                            const AffineRootSystem& a);

// True iff the derivations of the facet's vanishing affine roots span the
// dual of the Frobenius-fixed subspace of the apartment.
bool vertex_test(const AffineRootSystem& a, const FrobeniusForm& form, const Facet& f);

}  // namespace alcove
