#include "alcove/affine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace alcove {

Int FinAbGroup::order() const {
  Int o = 1;
  for (Int d : invariant_factors) {
    if (d == 0) throw Error("group has free part");
    o = checked_mul(o, d);
  }
  return o;
}

// --- Omega -------------------------------------------------------------------

int OmegaGroup::element_of_class(const Vec& cw) const {
  auto it = by_class_key_.find(coroot_smith_.class_key(cw));
  return it == by_class_key_.end() ? -1 : it->second;
}

int OmegaGroup::multiply(int a, int b) const {
  Vec rep = vec_add(elements_[a].translation_cw, elements_[b].translation_cw);
  int k = element_of_class(rep);
  if (k < 0) throw Error("omega multiply: class not represented");
  return k;
}

int OmegaGroup::inverse(int a) const {
  Vec rep = vec_scale(-1, elements_[a].translation_cw);
  int k = element_of_class(rep);
  if (k < 0) throw Error("omega inverse: class not represented");
  return k;
}

int OmegaGroup::power(int a, Int e) const {
  int acc = 0;
  Int n = e >= 0 ? e : -e;
  for (Int i = 0; i < n; ++i) acc = multiply(acc, a);
  return e >= 0 ? acc : inverse(acc);
}

std::vector<int> OmegaGroup::subgroup_in_lattice(const RootDatum& d) const {
  std::vector<int> out;
  for (int k = 0; k < size(); ++k)
    if (d.in_cochar_lattice(elements_[k].translation_cw)) out.push_back(k);
  return out;
}

// --- AffineRootSystem --------------------------------------------------------

AffineRootSystem AffineRootSystem::build(const RootDatum& d) {
  if (!d.is_irreducible()) throw Error("affine system requires an irreducible datum");
  AffineRootSystem a;
  a.datum_ = d;
  int r = d.rank();
  int theta = a.datum_.highest_root_index();
  a.nodes_.resize(r + 1);
  a.nodes_[0] = AffineRoot{a.datum_.root(theta).negative_of, 1};
  for (int i = 0; i < r; ++i) a.nodes_[i + 1] = AffineRoot{a.datum_.simple_root_index(i), 0};

  // Omega: identity plus t_{pi_j} w_{0,J} w_0 for every mark-one node j.
  a.omega_.coroot_smith_ = a.datum_.coroot_smith();
  OmegaElement id;
  id.node = 0;
  id.translation_cw = Vec(r, 0);
  id.affine_perm.resize(r + 1);
  std::iota(id.affine_perm.begin(), id.affine_perm.end(), 0);
  a.omega_.elements_.push_back(id);

  const Vec& marks = a.datum_.marks();
  WeylElement w0 = a.datum_.longest_element();
  for (int j = 1; j <= r; ++j) {
    if (marks[j - 1] != 1) continue;
    OmegaElement om;
    om.node = j;
    std::vector<int> J;
    for (int i = 1; i <= r; ++i)
      if (i != j) J.push_back(i);
    om.weyl_part = a.datum_.multiply(a.datum_.longest_element(J), w0);
    om.translation_cw = Vec(r, 0);
    om.translation_cw[j - 1] = 1;
    om.affine_perm.resize(r + 1, -1);
    for (int node = 0; node <= r; ++node) {
      const AffineRoot& psi = a.nodes_[node];
      int g = a.datum_.act_on_root(om.weyl_part, psi.root_index);
      Int lvl = psi.level - dot(a.datum_.root(g).alpha, om.translation_cw);
      int image = -1;
      for (int b = 0; b <= r; ++b)
        if (a.nodes_[b].root_index == g && a.nodes_[b].level == lvl) image = b;
      if (image < 0) throw Error("omega element does not permute the affine basis");
      om.affine_perm[node] = image;
    }
    a.omega_.elements_.push_back(om);
  }
  for (int k = 0; k < a.omega_.size(); ++k) {
    Vec key = a.datum_.coroot_smith().class_key(a.omega_.elements_[k].translation_cw);
    if (!a.omega_.by_class_key_.emplace(key, k).second)
      throw Error("omega classes are not distinct");
  }
  return a;
}

Int AffineRootSystem::mark(int a) const {
  if (a == 0) return 1;
  return datum_.marks()[a - 1];
}

std::pair<Int, Int> AffineRootSystem::eval_affine(const AffineRoot& psi, const RatVec& x) const {
  Int num = checked_add(dot(datum_.root(psi.root_index).alpha, x.num),
                        checked_mul(psi.level, x.den));
  return {num, x.den};
}

// --- FrobeniusForm -----------------------------------------------------------

FrobeniusForm FrobeniusForm::make(const AffineRootSystem& a, int twist, int inner_node) {
  const RootDatum& d = a.datum();
  int r = d.rank();
  FrobeniusForm f;
  f.twist = twist;
  f.inner_node = inner_node;
  CartanType t = d.type();
  t.twist = twist;
  t.validate();
  f.sigma = diagram_automorphism(t);

  f.sigma_cw = Mat(r, r);
  for (int i = 0; i < r; ++i) f.sigma_cw(f.sigma[i], i) = 1;

  int om_idx = 0;
  if (inner_node != 0) {
    Vec rep(r, 0);
    rep[inner_node - 1] = 1;
    om_idx = a.omega().element_of_class(rep);
    if (om_idx <= 0) throw Error("inner twist index is not a minuscule node");
  }
  const OmegaElement& om = a.omega().element(om_idx);

  f.affine_perm.resize(r + 1);
  for (int node = 0; node <= r; ++node) {
    int after_sigma = node == 0 ? 0 : f.sigma[node - 1] + 1;
    f.affine_perm[node] = om.affine_perm[after_sigma];
  }
  f.linear_cw = mat_mul(d.matrix_coweight_coords(om.weyl_part), f.sigma_cw);
  f.translation_cw = om.translation_cw;

  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (d.cartan(f.sigma[i], f.sigma[j]) != d.cartan(i, j))
        throw Error("form automorphism does not preserve the Cartan matrix");
  return f;
}

std::string FrobeniusForm::name(const CartanType& t) const {
  std::ostringstream os;
  if (twist > 1) os << twist;
  os << static_cast<char>(t.family) << t.rank;
  if (inner_node != 0) os << "-inner" << inner_node;
  else if (twist == 1) os << "-split";
  return os.str();
}

RatVec FrobeniusForm::apply(const AffineRootSystem& a, const RatVec& x) const {
  (void)a;
  RatVec y;
  y.den = x.den;
  y.num = mat_vec(linear_cw, x.num);
  y = rat_add(y, RatVec::integral(translation_cw));
  return y;
}

void Facet::validate(const AffineRootSystem& a, const FrobeniusForm& form) const {
  int n = a.num_nodes();
  // the empty set is the alcove barycenter facet of an anisotropic form
  if (static_cast<int>(delta_F.size()) >= n)
    throw Error("facet node set must be a proper subset of the diagram");
  for (int v : delta_F)
    if (v < 0 || v >= n) throw Error("facet node out of range");
  for (int v : delta_F)
    if (!delta_F.count(form.affine_perm[v]))
      throw Error("facet is not stable under the Frobenius permutation");
}

// --- operations --------------------------------------------------------------

std::map<int, std::vector<int>> omega_action_on_diagram(const AffineRootSystem& a) {
  if (a.datum().isogeny() != Isogeny::adjoint)
    throw Error("diagram action of the fundamental group requires the adjoint datum");
  if (!a.datum().is_irreducible()) throw Error("diagram action requires an irreducible datum");
  std::map<int, std::vector<int>> out;
  for (int k = 0; k < a.omega().size(); ++k) out[k] = a.omega().element(k).affine_perm;
  return out;
}

FacetStabilizer facet_stabilizer(const AffineRootSystem& a, const FrobeniusForm& form,
                                 const Facet& f) {
  f.validate(a, form);
  FacetStabilizer out;
  for (int k = 0; k < a.omega().size(); ++k) {
    const auto& perm = a.omega().element(k).affine_perm;
    bool stable = std::all_of(f.delta_F.begin(), f.delta_F.end(),
                              [&](int v) { return f.delta_F.count(perm[v]) > 0; });
    if (!stable) continue;
    out.stabilizer.push_back(k);
    const Vec& rep = a.omega().element(k).translation_cw;
    Vec image = mat_vec(form.sigma_cw, rep);
    if (a.omega().element_of_class(image) == k) out.frob_fixed.push_back(k);
  }
  return out;
}

namespace {

FinAbGroup quotient_with_lifts(const Mat& relations) {
  Smith s = smith_normal_form(relations);
  FinAbGroup g;
  g.invariant_factors = s.invariant_factors();
  int n = relations.rows;
  int rk = 0;
  for (Int d : s.diag)
    if (d != 0) ++rk;
  for (size_t i = 0; i < s.diag.size(); ++i) {
    if (s.diag[i] == 1 || s.diag[i] == 0) continue;
    Vec e(n, 0);
    e[static_cast<int>(i)] = 1;
    RatVec z = solve_exact(s.P, e);
    if (z.den != 1) throw Error("unimodular solve failed");
    g.generator_lifts.push_back(z.num);
  }
  for (int i = rk; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    RatVec z = solve_exact(s.P, e);
    if (z.den != 1) throw Error("unimodular solve failed");
    g.generator_lifts.push_back(z.num);
  }
  return g;
}

}  // namespace

FinAbGroup cochar_mod_coroots(const RootDatum& d, const std::vector<int>& roots) {
  int r = d.rank();
  Mat LT(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) LT(i, j) = d.cochar_basis()(j, i);
  Mat A(r, static_cast<int>(roots.size()));
  for (size_t j = 0; j < roots.size(); ++j) {
    Vec cw = d.coroot_in_coweight_coords(roots[j]);
    RatVec y = solve_exact(LT, cw);
    if (y.den != 1) throw Error("coroot not in cocharacter lattice");
    for (int i = 0; i < r; ++i) A(i, static_cast<int>(j)) = y.num[i];
  }
  return quotient_with_lifts(A);
}

FinAbGroup h1_coinvariants(const AffineRootSystem& a, const FrobeniusForm& form) {
  const RootDatum& d = a.datum();
  int r = d.rank();
  // Omega/(sigma - 1)Omega = X_* / (Q^vee + (sigma - 1) X_*)
  Mat rel(r, 2 * r);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) rel(i, j) = d.cartan(i, j);
  for (int j = 0; j < r; ++j)
    for (int i = 0; i < r; ++i) rel(i, r + j) = form.sigma_cw(i, j) - (i == j ? 1 : 0);
  return quotient_with_lifts(rel);
}

std::vector<int> omega_frobenius_fixed(const AffineRootSystem& a, const FrobeniusForm& form) {
  std::vector<int> out;
  for (int k = 0; k < a.omega().size(); ++k) {
    Vec image = mat_vec(form.sigma_cw, a.omega().element(k).translation_cw);
    if (a.omega().element_of_class(image) == k) out.push_back(k);
  }
  return out;
}

std::vector<ComponentShape> classify_basis_components(const RootDatum& d,
                                                      const std::vector<int>& basis_roots) {
  int m = static_cast<int>(basis_roots.size());
  auto pairing = [&](int u, int v) {
    return d.pair_root_coroot(d.root(basis_roots[u]).alpha, d.root(basis_roots[v]).alpha_check);
  };
  auto bond = [&](int u, int v) { return pairing(u, v) * pairing(v, u); };

  std::vector<int> comp(m, -1);
  int nc = 0;
  for (int st = 0; st < m; ++st) {
    if (comp[st] >= 0) continue;
    comp[st] = nc;
    std::vector<int> stack{st};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < m; ++v)
        if (comp[v] < 0 && bond(u, v) != 0) {
          comp[v] = nc;
          stack.push_back(v);
        }
    }
    ++nc;
  }

  std::vector<ComponentShape> out;
  for (int c = 0; c < nc; ++c) {
    std::vector<int> local;  // indices into basis_roots
    for (int j = 0; j < m; ++j)
      if (comp[j] == c) local.push_back(j);
    int n = static_cast<int>(local.size());
    Family fam = Family::A;
    if (n > 1) {
      Int max_bond = 0;
      std::vector<int> degree(n, 0);
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
          if (u != v && bond(local[u], local[v]) > 0) {
            ++degree[u];
            max_bond = std::max<Int>(max_bond, bond(local[u], local[v]));
          }
      if (max_bond == 3) {
        fam = Family::G;
      } else if (max_bond == 2) {
        int du = -1, dv = -1;
        for (int u = 0; u < n && du < 0; ++u)
          for (int v = 0; v < n; ++v)
            if (u != v && bond(local[u], local[v]) == 2) {
              du = u;
              dv = v;
              break;
            }
        bool u_leaf = degree[du] == 1, v_leaf = degree[dv] == 1;
        if (n == 2) {
          fam = Family::C;  // B2 and C2 coincide; C2 is the canonical name here
        } else if (!u_leaf && !v_leaf) {
          fam = Family::F;
        } else {
          int leaf = u_leaf ? du : dv;
          int other = u_leaf ? dv : du;
          Int leaf_norm = d.root(basis_roots[local[leaf]]).norm2;
          Int other_norm = d.root(basis_roots[local[other]]).norm2;
          fam = leaf_norm < other_norm ? Family::B : Family::C;
        }
      } else {
        int tri = -1;
        for (int u = 0; u < n; ++u)
          if (degree[u] == 3) tri = u;
        if (tri >= 0) {
          std::vector<int> arms;
          for (int v = 0; v < n; ++v) {
            if (v == tri || bond(local[tri], local[v]) == 0) continue;
            int len = 1, prev = tri, cur = v;
            for (;;) {
              int next = -1;
              for (int w = 0; w < n; ++w)
                if (w != prev && w != cur && bond(local[cur], local[w]) > 0) next = w;
              if (next < 0) break;
              prev = cur;
              cur = next;
              ++len;
            }
            arms.push_back(len);
          }
          std::sort(arms.begin(), arms.end());
          if (arms.size() != 3) throw Error("component is not a Dynkin diagram");
          fam = (arms[0] == 1 && arms[1] == 1) ? Family::D : Family::E;
        }
      }
    }
    ComponentShape cs;
    cs.family = fam;
    cs.rank = n;
    cs.type_name = std::string(1, static_cast<char>(fam)) + std::to_string(n);
    for (int j : local) {
      cs.nodes.push_back(basis_roots[j]);  // ambient root indices here
      cs.coroots_cw.push_back(d.coroot_in_coweight_coords(basis_roots[j]));
    }
    out.push_back(cs);
  }
  std::sort(out.begin(), out.end(),
            [](const ComponentShape& x, const ComponentShape& y) { return x.nodes < y.nodes; });
  return out;
}

ReductiveShape reductive_quotient(const AffineRootSystem& a, const Facet& f) {
  const RootDatum& d = a.datum();
  if (d.isogeny() != Isogeny::adjoint)
    throw Error("reductive quotient is computed against the adjoint character lattice");
  int r = d.rank();
  std::vector<int> nodes(f.delta_F.begin(), f.delta_F.end());
  int m = static_cast<int>(nodes.size());

  Mat A(r, m);
  for (int j = 0; j < m; ++j) {
    const Vec& al = d.root(a.derivation(nodes[j])).alpha;
    for (int i = 0; i < r; ++i) A(i, j) = al[i];
  }
  if (rank(A) != m) throw Error("facet derivations are linearly dependent");

  ReductiveShape out;
  out.central_torus_rank = r - m;
  Smith s = smith_normal_form(A);
  for (Int dd : s.diag)
    if (dd > 1) out.center_invariant_factors.push_back(dd);
  out.center_connected = out.center_invariant_factors.empty();

  std::vector<int> derivs;
  for (int node : nodes) derivs.push_back(a.derivation(node));
  out.components = classify_basis_components(d, derivs);
  // translate ambient root indices back to diagram nodes
  for (auto& cs : out.components)
    for (auto& v : cs.nodes) {
      int node = -1;
      for (int candidate : nodes)
        if (a.derivation(candidate) == v) node = candidate;
      v = node;
    }
  std::vector<std::string> names;
  for (auto& c : out.components) names.push_back(c.type_name);
  std::sort(names.begin(), names.end());
  std::ostringstream os;
  for (size_t i = 0; i < names.size(); ++i) os << (i ? "+" : "") << names[i];
  out.shape_string = os.str();
  std::sort(out.components.begin(), out.components.end(),
            [](const ComponentShape& x, const ComponentShape& y) { return x.nodes < y.nodes; });
  return out;
}

RatVec facet_point(const AffineRootSystem& a, const Facet& f) {
  const RootDatum& d = a.datum();
  int r = d.rank();
  // psi = 0 on delta_F, all other nodes share a common positive value; the
  // identity sum_a mark_a * psi_a = 1 makes one interior equation redundant.
  std::vector<int> rest;
  for (int node = 0; node <= r; ++node)
    if (!f.delta_F.count(node)) rest.push_back(node);
  Int mass = 0;
  for (int node : rest) mass = checked_add(mass, a.mark(node));
  Mat A(r, r);
  Vec b(r, 0);
  int row = 0;
  for (int node : f.delta_F) {
    const AffineRoot& psi = a.node(node);
    const Vec& al = d.root(psi.root_index).alpha;
    for (int i = 0; i < r; ++i) A(row, i) = al[i];
    b[row] = -psi.level;
    ++row;
  }
  for (size_t k = 0; k + 1 < rest.size() && row < r; ++k) {
    const AffineRoot& p1 = a.node(rest[k]);
    const AffineRoot& p2 = a.node(rest[k + 1]);
    const Vec& a1 = d.root(p1.root_index).alpha;
    const Vec& a2 = d.root(p2.root_index).alpha;
    for (int i = 0; i < r; ++i) A(row, i) = a1[i] - a2[i];
    b[row] = p2.level - p1.level;
    ++row;
  }
  if (row != r) throw Error("facet_point: could not assemble a full system");
  RatVec x = solve_exact(A, b);
  for (int node = 0; node <= r; ++node) {
    auto [num, den] = a.eval_affine(a.node(node), x);
    if (f.delta_F.count(node)) {
      if (num != 0) throw Error("facet_point: vanishing condition failed");
    } else {
      if (checked_mul(num, mass) != den) throw Error("facet_point: interior condition failed");
    }
  }
  return x;
}

ApartmentEmbedding apartment_embedding(const std::vector<int>& roots_H,
                                       const AffineRootSystem& a, const FrobeniusForm* form) {
  const RootDatum& d = a.datum();
  std::set<int> H(roots_H.begin(), roots_H.end());
  ApartmentEmbedding out;

  out.closed = true;
  for (int g : H)
    if (!H.count(d.root(g).negative_of)) out.closed = false;
  for (int g : H)
    for (int h : H) {
      Vec sum = vec_add(d.root(g).alpha, d.root(h).alpha);
      int idx = d.root_index(sum);
      if (idx >= 0 && !H.count(idx)) out.closed = false;
    }
  if (!out.closed) throw Error("subsystem is not closed in the ambient root system");

  if (form) {
    for (int g : H) {
      const Vec& al = d.root(g).alpha;
      Vec im(d.rank(), 0);
      for (int i = 0; i < d.rank(); ++i) im[form->sigma[i]] = al[i];
      int idx = d.root_index(im);
      if (idx < 0 || !H.count(idx)) out.frob_equivariant = false;
    }
  }

  std::set<int> pos;
  for (int g : H)
    if (d.root(g).positive) pos.insert(g);
  std::set<int> simples = pos;
  for (int g : pos)
    for (int h : pos) {
      Vec sum = vec_add(d.root(g).alpha, d.root(h).alpha);
      int idx = d.root_index(sum);
      if (idx >= 0 && pos.count(idx)) simples.erase(idx);
    }

  std::vector<int> simp(simples.begin(), simples.end());
  int m = static_cast<int>(simp.size());
  std::vector<int> comp(m, -1);
  int nc = 0;
  for (int st = 0; st < m; ++st) {
    if (comp[st] >= 0) continue;
    comp[st] = nc;
    std::vector<int> stack{st};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < m; ++v)
        if (comp[v] < 0 &&
            d.pair_root_coroot(d.root(simp[u]).alpha, d.root(simp[v]).alpha_check) != 0) {
          comp[v] = nc;
          stack.push_back(v);
        }
    }
    ++nc;
  }

  for (int c = 0; c < nc; ++c) {
    std::vector<int> cs;
    for (int j = 0; j < m; ++j)
      if (comp[j] == c) cs.push_back(simp[j]);
    Mat A(d.rank(), static_cast<int>(cs.size()));
    for (size_t j = 0; j < cs.size(); ++j)
      for (int i = 0; i < d.rank(); ++i) A(i, static_cast<int>(j)) = d.root(cs[j]).alpha[i];
    int rkA = rank(A);
    std::vector<int> component;
    for (int g : H) {
      Mat Ab(d.rank(), static_cast<int>(cs.size()) + 1);
      for (int i = 0; i < d.rank(); ++i) {
        for (size_t j = 0; j < cs.size(); ++j) Ab(i, static_cast<int>(j)) = A(i, static_cast<int>(j));
        Ab(i, static_cast<int>(cs.size())) = d.root(g).alpha[i];
      }
      if (rank(Ab) == rkA) component.push_back(g);
    }
    out.component_roots.push_back(component);

    int best = -1, best_h = -1 << 20;
    for (int g : component)
      if (d.root(g).height > best_h) {
        best = g;
        best_h = d.root(g).height;
      }
    std::vector<AffineRoot> basis;
    for (int g : cs) basis.push_back(AffineRoot{g, 0});
    basis.push_back(AffineRoot{d.root(best).negative_of, 1});
    out.component_bases.push_back(basis);
  }
  out.levels_integral = true;  // hyperspecial normalization: levels are Z
  return out;
}

WeylInclusionReport extended_weyl_inclusion(const std::vector<int>& roots_H,
                                            const AffineRootSystem& a) {
  const RootDatum& d = a.datum();
  int r = d.rank();
  WeylInclusionReport rep;

  Mat LT(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) LT(i, j) = d.cochar_basis()(j, i);

  auto coroot_cols = [&](const std::vector<int>& roots) {
    Mat A(r, static_cast<int>(roots.size()));
    for (size_t j = 0; j < roots.size(); ++j) {
      Vec cw = d.coroot_in_coweight_coords(roots[j]);
      RatVec y = solve_exact(LT, cw);
      if (y.den != 1) throw Error("coroot not in cocharacter lattice");
      for (int i = 0; i < r; ++i) A(i, static_cast<int>(j)) = y.num[i];
    }
    return A;
  };

  std::vector<int> all_roots(d.num_roots());
  std::iota(all_roots.begin(), all_roots.end(), 0);
  Mat AH = coroot_cols(roots_H);
  Mat AG = coroot_cols(all_roots);
  Smith sH = smith_normal_form(AH);
  Smith sG = smith_normal_form(AG);
  rep.omega_H_factors = sH.invariant_factors();
  rep.omega_G_factors = sG.invariant_factors();
  rep.surjective = true;  // same ambient lattice, larger relation lattice

  int checked = 0;
  bool ok = true;
  for (int i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    Vec kH = sH.class_key(e);
    Vec kG = sG.class_key(e);
    for (size_t j = 0; j < roots_H.size(); ++j) {
      Vec cw = d.coroot_in_coweight_coords(roots_H[j]);
      RatVec y = solve_exact(LT, cw);
      Vec shifted = vec_add(e, y.num);
      if (sH.class_key(shifted) != kH || sG.class_key(shifted) != kG) ok = false;
      ++checked;
    }
  }
  for (int g : roots_H) {
    for (Int n = 0; n <= 1; ++n) {
      Vec cw = d.coroot_in_coweight_coords(g);
      RatVec y = solve_exact(LT, cw);
      Vec tr = vec_scale(-n, y.num);
      if (!is_zero(sH.class_key(tr)) || !is_zero(sG.class_key(tr))) ok = false;
      ++checked;
    }
  }
  rep.kottwitz_commutes = ok;
  rep.generators_checked = checked;
  return rep;
}

bool vertex_test(const AffineRootSystem& a, const FrobeniusForm& form, const Facet& f) {
  f.validate(a, form);
  const RootDatum& d = a.datum();
  int r = d.rank();
  Mat LmI = form.linear_cw;
  for (int i = 0; i < r; ++i) LmI(i, i) -= 1;
  std::vector<Vec> fixed = nullspace(LmI);
  int dim_fixed = static_cast<int>(fixed.size());
  if (dim_fixed == 0) return true;
  Mat P(static_cast<int>(f.delta_F.size()), dim_fixed);
  int row = 0;
  for (int node : f.delta_F) {
    const Vec& al = d.root(a.derivation(node)).alpha;
    for (int k = 0; k < dim_fixed; ++k) P(row, k) = dot(al, fixed[k]);
    ++row;
  }
  return rank(P) == dim_fixed;
}

}  // namespace alcove
