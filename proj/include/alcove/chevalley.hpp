#pragma once

#include <memory>
#include <vector>

#include "alcove/rootcore.hpp"

// The Chevalley Z-form of a simple Lie algebra: integer structure
// constants fixed by the extraspecial-pair convention in the canonical
// root order, the adjoint representation, and the Weyl-group lifts
// n_beta = exp(ad X_beta) exp(-ad X_{-beta}) exp(ad X_beta).
//
// Every lift acts on the root spaces as a signed permutation and on the
// Cartan subalgebra by an integer block; elements are stored in that
// structured form, so products cost O(|Phi| + r^2) and the 248x248 dense
// matrices only materialize on demand.

namespace alcove {

class ChevalleyAlgebra;

// A lift of a Weyl element to the adjoint Chevalley group over Z.
struct TitsElement {
  std::vector<int> perm;      // image root index per root index
  std::vector<int> signs;     // +-1: X_g maps to signs[g] * X_{perm[g]}
  Mat cartan_block;           // action on the Cartan subalgebra, coroot coords
  WeylElement underlying;

  bool is_diagonal() const;   // identity permutation on root spaces
  bool operator==(const TitsElement&) const = default;
};

class ChevalleyAlgebra {
 public:
  // Requires irreducible datum of rank <= 8.  Builds the full structure
  // constant table and the simple-root lifts, with integrality and
  // monomiality of the assembled matrices verified.
  static ChevalleyAlgebra build(const RootDatum& d);

  const RootDatum& datum() const { return *datum_; }
  int dim() const { return datum_->num_roots() + datum_->rank(); }

  // N_{gamma,delta}; zero when gamma + delta is not a root.
  Int structure_constant(int g, int h) const {
    return ntab_[static_cast<size_t>(g) * datum_->num_roots() + h];
  }
  // Root-string depth p = max{k : delta - k gamma is a root}.
  int string_depth(int g, int h) const;

  TitsElement identity_element() const;
  const TitsElement& simple_lift(int i) const { return simple_[i]; }  // 0-based

  TitsElement compose(const TitsElement& a, const TitsElement& b) const;
  TitsElement invert(const TitsElement& a) const;

  // n(w) along the canonical reduced word; rejects non-reduced input.
  TitsElement tits_lift(const WeylElement& w) const;
  TitsElement tits_lift_word(const std::vector<int>& reduced_word) const;

  // The torus element mu(-1) for mu in the cocharacter lattice (coweight
  // coordinates): diagonal signs (-1)^{<delta, mu>} on the root spaces.
  TitsElement torus_minus_one(const Vec& mu_cw) const;

  // (w gamma, sign) read off a lift.
  std::pair<int, int> sign_action(const TitsElement& n, int root_idx) const;

  // Dense adjoint matrix (dim x dim), basis = root spaces then Cartan.
  Mat full_matrix(const TitsElement& n) const;

  // Action of the diagram automorphism on lifts: permutes root spaces by
  // the induced root permutation with signs +1 on the simple ones.
  int root_image_under(const std::vector<int>& simple_perm, int root_idx) const;

 private:
  std::shared_ptr<const RootDatum> datum_;
  std::vector<Int> ntab_;          // dense |Phi| x |Phi|
  std::vector<TitsElement> simple_;

  void build_constants();
  void build_simple_lifts();
};

// gamma^vee(-1) acting on X_delta: (-1)^{<delta, gamma^vee>}.
int torus_sign(const RootDatum& d, int coroot_of, int delta);

struct W0SquareCertificate {
  bool verified = false;
  Int dimension = 0;
  std::string detail;
};

// n(w0)^2 equals the torus element acting by (-1)^{<delta, 2 rho^vee>}.
W0SquareCertificate w0_square_identity(const ChevalleyAlgebra& A);

}  // namespace alcove
