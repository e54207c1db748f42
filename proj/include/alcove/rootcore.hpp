#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "alcove/linalg.hpp"

// Finite root systems, lattices, Weyl groups and fundamental groups for
// the simple Cartan types, all in exact integer arithmetic.
//
// Conventions, fixed once and used everywhere:
//  * Bourbaki numbering of simple roots (1-based in the API where nodes
//    of the extended diagram appear, node 0 being the affine one).
//  * Roots are stored as integer vectors in the simple-root basis,
//    coroots in the simple-coroot basis.  cartan(i,j) = <alpha_i, alpha_j^vee>,
//    so a reflection acts by s_j(x) = x - <x, alpha_j^vee> alpha_j.
//  * Cocharacters are written in the fundamental-coweight basis; for the
//    adjoint isogeny this basis spans the full cocharacter lattice.
//  * Positive roots are ordered by height, then lexicographically in
//    simple-root coordinates ("canonical root order"); negatives follow,
//    mirroring the positives.

namespace alcove {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);

struct CartanType {
  Family family = Family::A;
  int rank = 1;
  int twist = 1;  // order of the diagram automorphism defining a quasi-split form

  void validate() const;  // throws Error on a bad (family, rank, twist)
  std::string name() const;  // e.g. "C4", "2A3", "3D4"
  bool operator==(const CartanType&) const = default;
};

enum class Isogeny { adjoint, simply_connected, intermediate };

struct Root {
  Vec alpha;        // simple-root coordinates
  Vec alpha_check;  // simple-coroot coordinates of the coroot
  int height = 0;   // sum of coordinates
  Int norm2 = 0;    // (alpha, alpha) under the normalization short = 2
  bool positive = false;
  int negative_of = -1;  // index of -alpha
};

// A Weyl group element held as its canonical (lexicographically smallest)
// reduced word in simple reflections.
struct WeylElement {
  std::vector<int> word;  // 1-based simple indices

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }
  bool operator==(const WeylElement&) const = default;
  bool operator<(const WeylElement& o) const { return word < o.word; }
};

struct FundamentalGroup {
  std::vector<Int> invariant_factors;  // > 1 entries, then 0 per free rank
  std::vector<Vec> generator_reps;     // cocharacter-lattice representatives
  Int order() const;                   // throws if infinite
};

class RootDatum {
 public:
  static RootDatum build(CartanType type, Isogeny isogeny,
                         std::optional<Mat> cochar_basis = std::nullopt);
  // SO_{2n+1} is the adjoint B_n group; SO_{2n} sits strictly between the
  // adjoint and simply connected D_n groups and needs its own lattice.
  static RootDatum build_so(CartanType type);
  // Direct sum of two data; used to exercise the reducible-input guards.
  static RootDatum product(const RootDatum& a, const RootDatum& b);

  const CartanType& type() const { return type_; }
  Isogeny isogeny() const { return isogeny_; }
  int rank() const { return rank_; }
  Int cartan(int i, int j) const { return cartan_(i, j); }  // 0-based here
  const Mat& cartan_matrix() const { return cartan_; }
  Int symmetrizer(int i) const { return sym_[i]; }  // (alpha_i, alpha_i)/2

  int num_roots() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return num_roots() / 2; }
  const Root& root(int idx) const { return roots_[idx]; }
  const std::vector<Root>& roots() const { return roots_; }
  int root_index(const Vec& alpha) const;  // -1 if not a root
  int simple_root_index(int i) const { return simple_index_[i]; }  // i 0-based
  bool is_long(int idx) const { return roots_[idx].norm2 == max_norm2_; }
  Int max_norm2() const { return max_norm2_; }

  bool is_irreducible() const;
  int highest_root_index() const;          // requires irreducible
  const Vec& marks() const;                // theta in simple-root coordinates
  Vec dual_marks() const;                  // theta^vee in simple-coroot coordinates
  Int coxeter_number() const;              // 1 + sum of marks
  Int dual_coxeter_number() const;         // 1 + sum of dual marks

  // <gamma, 2 rho^vee> = sum over positive coroots; gamma any root.
  Int rho_pairing(int root_idx) const;

  // Pairing of a character-side vector (simple-root coordinates) with a
  // cocharacter-side vector (simple-coroot coordinates).
  Int pair_root_coroot(const Vec& a, const Vec& b) const;
  // Pairing of a root with a fundamental-coweight-coordinate vector.
  Int pair_root_coweight(const Vec& alpha, const Vec& cw) const;

  // Cocharacter lattice X_* as a sublattice of the coweight lattice:
  // rows of the matrix are basis vectors in coweight coordinates.
  const Mat& cochar_basis() const { return cochar_basis_; }
  const Smith& cochar_smith() const { return cochar_smith_; }
  bool in_cochar_lattice(const Vec& cw) const;

  // Fundamental group X_* / <coroot lattice>, invariant factors via the
  // Smith normal form of the coroot matrix in the X_* basis.
  FundamentalGroup fundamental_group() const;
  // Smith data of the coroot lattice inside coweight coordinates, for
  // class computations in P^vee / Q^vee.
  const Smith& coroot_smith() const { return coroot_smith_; }
  Vec coroot_in_coweight_coords(int root_idx) const;
  Vec coroot_coords_to_coweight(const Vec& coroot_coords) const;

  // --- Weyl group machinery ------------------------------------------------
  WeylElement canonicalize(const std::vector<int>& word) const;
  WeylElement multiply(const WeylElement& u, const WeylElement& v) const;
  WeylElement inverse(const WeylElement& w) const;
  // Action on a vector in simple-root coordinates.
  Vec act_root_coords(const WeylElement& w, Vec x) const;
  // Action on a vector in fundamental-coweight coordinates.
  Vec act_coweight_coords(const WeylElement& w, Vec x) const;
  int act_on_root(const WeylElement& w, int root_idx) const;
  Mat matrix_root_coords(const WeylElement& w) const;
  Mat matrix_coweight_coords(const WeylElement& w) const;
  int length_by_inversions(const WeylElement& w) const;
  std::vector<int> inversion_set(const WeylElement& w) const;  // {gamma>0 : w gamma < 0}

  WeylElement longest_element() const;
  WeylElement longest_element(const std::vector<int>& parabolic) const;  // 1-based simple indices
  // Unique minimal w with w(simple alpha) = target root, built from the
  // target's dominance chain; used for the highest-root elements.
  WeylElement minimal_mapping_to(int simple_1based, int target_root_idx) const;
  // Element with prescribed inversion set (must be biconvex).
  WeylElement from_inversion_set(std::vector<int> pos_root_indices) const;

  // Exhaustive enumeration (guarded); returns every element as canonical word.
  std::vector<WeylElement> enumerate_weyl(size_t guard = 2000000) const;
  Int weyl_order() const;  // from the classification via invariant degrees

  // Invariant degrees d_1 <= ... <= d_r from the height partition.
  std::vector<Int> invariant_degrees() const;

  Int dimension() const { return num_roots() + rank_; }

 private:
  CartanType type_;
  Isogeny isogeny_ = Isogeny::adjoint;
  int rank_ = 0;
  Mat cartan_;           // cartan_(i,j) = <alpha_i, alpha_j^vee>
  std::vector<Int> sym_; // symmetrizers d_i, short roots have d = 1
  std::vector<Root> roots_;
  std::unordered_map<std::string, int> root_lookup_;
  std::vector<int> simple_index_;
  Int max_norm2_ = 2;
  Mat cochar_basis_;
  Smith cochar_smith_;
  Smith coroot_smith_;
  mutable std::optional<Vec> marks_cache_;

  void finish_construction();
  std::vector<int> left_descents(const Mat& inv_action) const;
};

// Cartan matrix of a simple type, Bourbaki numbering.
Mat cartan_matrix(CartanType type);

// The diagram automorphism of order `twist` as a permutation of simple
// indices (0-based); identity if twist == 1.
std::vector<int> diagram_automorphism(CartanType type);

}  // namespace alcove
