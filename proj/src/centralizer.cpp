#include "alcove/centralizer.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

namespace alcove {

namespace {

// lambda mod m * X_*, as the canonical remainder vector (coweight coords)
Vec reduce_mod_lattice(const RootDatum& d, Vec lambda, Int m) {
  const Smith& s = d.cochar_smith();
  Vec y = mat_vec(s.P, lambda);
  for (int i = 0; i < d.rank(); ++i) {
    Int mod = checked_mul(m, s.diag[i]);
    y[i] %= mod;
    if (y[i] < 0) y[i] += mod;
  }
  RatVec back = solve_exact(s.P, y);
  if (back.den != 1) throw Error("unimodular solve failed");
  return back.num;
}

bool in_m_lattice(const RootDatum& d, const Vec& v, Int m) {
  const Smith& s = d.cochar_smith();
  Vec y = mat_vec(s.P, v);
  for (int i = 0; i < d.rank(); ++i)
    if (y[i] % checked_mul(m, s.diag[i]) != 0) return false;
  return true;
}

Int point_order(const RootDatum& d, const Vec& lambda, Int m) {
  const Smith& s = d.cochar_smith();
  Vec y = mat_vec(s.P, lambda);
  Int ord = 1;
  for (int i = 0; i < d.rank(); ++i) {
    Int mod = checked_mul(m, s.diag[i]);
    Int r = ((y[i] % mod) + mod) % mod;
    ord = std::lcm(ord, mod / std::gcd(r, mod));
  }
  return ord;
}

Int weyl_order_of(Family f, int n) {
  auto fact = [](int k) {
    Int v = 1;
    for (int i = 2; i <= k; ++i) v = checked_mul(v, i);
    return v;
  };
  switch (f) {
    case Family::A: return fact(n + 1);
    case Family::B:
    case Family::C: return checked_mul(Int{1} << n, fact(n));
    case Family::D: return checked_mul(Int{1} << (n - 1), fact(n));
    case Family::E: return n == 6 ? 51840 : (n == 7 ? 2903040 : 696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  throw Error("unknown family");
}

}  // namespace

Vec KacPoint::kac_coordinates(const AffineRootSystem& a) const {
  const RootDatum& d = a.datum();
  Vec out(d.rank() + 1, 0);
  Int theta_pairing = dot(d.marks(), lambda_cw);
  out[0] = order - theta_pairing;
  for (int i = 0; i < d.rank(); ++i) out[i + 1] = lambda_cw[i];
  return out;
}

KacPoint kac_point_from_lattice_coords(const RootDatum& d, Int m, const Vec& coords) {
  if (static_cast<int>(coords.size()) != d.rank())
    throw Error("kac point coordinate count does not match the rank");
  KacPoint s;
  s.order = m;
  s.lambda_cw.assign(d.rank(), 0);
  for (int i = 0; i < d.rank(); ++i)
    for (int k = 0; k < d.rank(); ++k)
      s.lambda_cw[i] = checked_add(s.lambda_cw[i], checked_mul(coords[k], d.cochar_basis()(k, i)));
  return s;
}

KacPoint canonicalize(const AffineRootSystem& a, const KacPoint& s_in) {
  const RootDatum& d = a.datum();
  if (s_in.order <= 0) throw Error("torsion order must be positive");
  if (static_cast<int>(s_in.lambda_cw.size()) != d.rank())
    throw Error("kac point has wrong rank");
  if (!d.in_cochar_lattice(s_in.lambda_cw))
    throw Error("kac point numerator is not in the cocharacter lattice");

  KacPoint s = s_in;
  // reduce the fraction to the true order of the point
  Int ord = point_order(d, s.lambda_cw, s.order);
  if (ord != s.order) {
    for (auto& v : s.lambda_cw) {
      Int num = checked_mul(v, ord);
      if (num % s.order != 0) throw Error("order reduction failed");
      v = num / s.order;
    }
    s.order = ord;
  }
  s.lambda_cw = reduce_mod_lattice(d, s.lambda_cw, s.order);

  // alcove reduction under the affine Weyl group W x Q^vee
  Vec theta_cw = d.coroot_in_coweight_coords(d.highest_root_index());
  const Vec& marks = d.marks();
  size_t cap = 1u << 22;
  for (size_t iter = 0;; ++iter) {
    if (iter > cap) throw Error("alcove reduction did not terminate");
    int neg = -1;
    for (int i = 0; i < d.rank(); ++i)
      if (s.lambda_cw[i] < 0) {
        neg = i;
        break;
      }
    if (neg >= 0) {
      Int li = s.lambda_cw[neg];
      for (int k = 0; k < d.rank(); ++k)
        s.lambda_cw[k] -= checked_mul(li, d.cartan(k, neg));
      continue;
    }
    Int t = dot(marks, s.lambda_cw);
    if (t > s.order) {
      Int excess = t - s.order;
      for (int k = 0; k < d.rank(); ++k)
        s.lambda_cw[k] -= checked_mul(excess, theta_cw[k]);
      continue;
    }
    break;
  }

  // minimize over the lattice's diagram rotations
  auto kac_tuple = [&](const Vec& lam) {
    Vec t(d.rank() + 1);
    t[0] = s.order - dot(marks, lam);
    for (int i = 0; i < d.rank(); ++i) t[i + 1] = lam[i];
    return t;
  };
  Vec best = s.lambda_cw;
  Vec best_key = kac_tuple(best);
  for (int k : a.omega().subgroup_in_lattice(d)) {
    if (k == 0) continue;
    const OmegaElement& om = a.omega().element(k);
    Vec cur = s.lambda_cw;
    for (int step = 0; step < a.omega().size(); ++step) {
      cur = d.act_coweight_coords(om.weyl_part, cur);
      cur = vec_add(cur, vec_scale(s.order, om.translation_cw));
      Vec key = kac_tuple(cur);
      for (Int v : key)
        if (v < 0) throw Error("omega image left the alcove");
      if (key < best_key) {
        best_key = key;
        best = cur;
      }
    }
  }
  s.lambda_cw = best;
  s.reduced = true;
  return s;
}

PseudoLevi pseudo_levi(const AffineRootSystem& a, const KacPoint& s_in) {
  const RootDatum& d = a.datum();
  KacPoint s = s_in.reduced ? s_in : canonicalize(a, s_in);
  PseudoLevi out;
  out.witness = s;
  for (int k = 0; k < d.num_roots(); ++k)
    if (dot(d.root(k).alpha, s.lambda_cw) % s.order == 0) out.roots_H.push_back(k);

  Vec kc = s.kac_coordinates(a);
  for (int node = 0; node < a.num_nodes(); ++node)
    if (kc[node] == 0) out.basis_nodes.push_back(node);

  // Borel-de Siebenthal: the vanishing nodes generate the subsystem.
  std::vector<int> basis_roots;
  for (int node : out.basis_nodes) basis_roots.push_back(a.derivation(node));
  std::set<int> gen(basis_roots.begin(), basis_roots.end());
  std::deque<int> work(gen.begin(), gen.end());
  while (!work.empty()) {
    int g = work.front();
    work.pop_front();
    for (int b : basis_roots) {
      Int p = d.pair_root_coroot(d.root(g).alpha, d.root(b).alpha_check);
      Vec img = d.root(g).alpha;
      for (int i = 0; i < d.rank(); ++i) img[i] -= checked_mul(p, d.root(b).alpha[i]);
      int idx = d.root_index(img);
      if (idx >= 0 && gen.insert(idx).second) work.push_back(idx);
    }
  }
  std::vector<int> generated(gen.begin(), gen.end());
  if (generated != out.roots_H)
    throw Error("vanishing-node basis does not generate the annihilator subsystem");

  out.omega_H = cochar_mod_coroots(d, out.roots_H);
  auto comps = classify_basis_components(d, basis_roots);
  std::vector<std::string> names;
  for (auto& c : comps) names.push_back(c.type_name);
  std::sort(names.begin(), names.end());
  std::ostringstream os;
  for (size_t i = 0; i < names.size(); ++i) os << (i ? "+" : "") << names[i];
  out.shape = os.str();
  return out;
}

ComponentGroup component_group(const AffineRootSystem& a, const KacPoint& s_in,
                               const FrobeniusForm* form, size_t orbit_guard) {
  const RootDatum& d = a.datum();
  KacPoint s = s_in.reduced ? s_in : canonicalize(a, s_in);
  ComponentGroup out;

  std::vector<int> sub = a.omega().subgroup_in_lattice(d);
  for (int k : sub) {
    const OmegaElement& om = a.omega().element(k);
    Vec img = d.act_coweight_coords(om.weyl_part, s.lambda_cw);
    img = vec_add(img, vec_scale(s.order, om.translation_cw));
    if (img == s.lambda_cw) {
      out.omega_elements.push_back(k);
      out.coset_reps.push_back(om.weyl_part);
    }
  }
  int n = static_cast<int>(out.omega_elements.size());
  out.table.assign(n, std::vector<int>(n, -1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int prod = a.omega().multiply(out.omega_elements[i], out.omega_elements[j]);
      auto it = std::find(out.omega_elements.begin(), out.omega_elements.end(), prod);
      if (it == out.omega_elements.end()) throw Error("stabilizer is not closed");
      out.table[i][j] = static_cast<int>(it - out.omega_elements.begin());
    }
  if (form) {
    out.frobenius_action.assign(n, -1);
    bool total = true;
    for (int i = 0; i < n; ++i) {
      Vec rep = a.omega().element(out.omega_elements[i]).translation_cw;
      int img = a.omega().element_of_class(mat_vec(form->sigma_cw, rep));
      auto it = std::find(out.omega_elements.begin(), out.omega_elements.end(), img);
      if (it == out.omega_elements.end()) total = false;
      else out.frobenius_action[i] = static_cast<int>(it - out.omega_elements.begin());
    }
    if (!total) out.frobenius_action.clear();
  }

  // verification by orbit counting when feasible
  out.confidence = Confidence::generated;
  if (d.rank() <= 7) {
    std::map<Vec, char> orbit;
    std::deque<Vec> work;
    Vec start = reduce_mod_lattice(d, s.lambda_cw, s.order);
    orbit.emplace(start, 1);
    work.push_back(start);
    bool guarded = false;
    while (!work.empty()) {
      Vec cur = work.front();
      work.pop_front();
      for (int i = 0; i < d.rank(); ++i) {
        Vec img = cur;
        Int li = img[i];
        for (int k = 0; k < d.rank(); ++k) img[k] -= checked_mul(li, d.cartan(k, i));
        img = reduce_mod_lattice(d, img, s.order);
        if (orbit.emplace(img, 1).second) {
          if (orbit.size() > orbit_guard) {
            guarded = true;
            work.clear();
            break;
          }
          work.push_back(img);
        }
      }
      if (guarded) break;
    }
    if (!guarded) {
      PseudoLevi pl = pseudo_levi(a, s);
      std::vector<int> basis_roots;
      for (int node : pl.basis_nodes) basis_roots.push_back(a.derivation(node));
      Int wh = 1;
      for (auto& c : classify_basis_components(d, basis_roots))
        wh = checked_mul(wh, weyl_order_of(c.family, c.rank));
      Int lhs = checked_mul(static_cast<Int>(orbit.size()),
                            checked_mul(wh, static_cast<Int>(n)));
      if (lhs != d.weyl_order())
        throw Error("orbit-stabilizer verification failed for the component group");
      out.confidence = Confidence::exhaustive;
    }
  }
  return out;
}

bool frobenius_rational(const AffineRootSystem& a, const KacPoint& s_in,
                        const FrobeniusForm& form, Int q) {
  const RootDatum& d = a.datum();
  KacPoint s = s_in.reduced ? s_in : canonicalize(a, s_in);
  if (q <= 0 || std::gcd(q, s.order) != 1)
    throw Error("q must be a positive prime power coprime to the torsion order");
  Vec img = mat_vec(form.linear_cw, s.lambda_cw);
  Vec diff = vec_sub(vec_scale(q, img), s.lambda_cw);
  return in_m_lattice(d, diff, s.order);
}

EigenvaluePhases standard_rep_eigenvalues(const AffineRootSystem& a, const KacPoint& s_in) {
  const RootDatum& d = a.datum();
  if (d.type().family != Family::B && d.type().family != Family::D)
    throw Error("standard representation weights are defined for orthogonal types only");
  KacPoint s = s_in.reduced ? s_in : canonicalize(a, s_in);
  int n = d.rank();

  // twice the weights +-e_i in simple-root coordinates
  std::vector<Vec> twice_weights;
  for (int i = 0; i < n; ++i) {
    Vec w(n, 0);
    if (d.type().family == Family::B) {
      for (int j = i; j < n; ++j) w[j] = 2;
    } else {
      for (int j = i; j < n - 2; ++j) w[j] = 2;
      if (i <= n - 2) {
        w[n - 2] = 1;
        w[n - 1] = 1;
      } else {
        w[n - 2] = -1;
        w[n - 1] = 1;
      }
    }
    twice_weights.push_back(w);
    Vec neg = w;
    for (auto& v : neg) v = -v;
    twice_weights.push_back(neg);
  }
  if (d.type().family == Family::B) twice_weights.push_back(Vec(n, 0));

  for (const auto& w : twice_weights)
    for (int row = 0; row < n; ++row) {
      Vec basis_vec(n);
      for (int k = 0; k < n; ++k) basis_vec[k] = d.cochar_basis()(row, k);
      if (dot(w, basis_vec) % 2 != 0)
        throw Error("standard weights are not integral on this cocharacter lattice");
    }

  EigenvaluePhases out;
  Int den0 = 2 * s.order;
  for (const auto& w : twice_weights) {
    Int num = dot(w, s.lambda_cw) % den0;
    if (num < 0) num += den0;
    Int g = std::gcd(num, den0);
    Int pn = num / g, pd = den0 / g;
    if (pn == 0) pd = 1;
    out.phases.emplace_back(pn, pd);
    if (pn == 0) out.has_plus_one = true;
    if (pd == 2 && pn == 1) out.has_minus_one = true;
  }
  std::sort(out.phases.begin(), out.phases.end());
  return out;
}

PointClassGroup point_stabilizer_classes(const RootDatum& d, const std::vector<int>& sub_roots,
                                         const std::vector<int>& sub_basis, const RatVec& x,
                                         size_t orbit_guard) {
  (void)sub_roots;
  int r = d.rank();
  PointClassGroup out;

  Mat A(r, static_cast<int>(sub_basis.size()));
  for (size_t j = 0; j < sub_basis.size(); ++j) {
    Vec cw = d.coroot_in_coweight_coords(sub_basis[j]);
    for (int i = 0; i < r; ++i) A(i, static_cast<int>(j)) = cw[i];
  }
  out.smith = smith_normal_form(A);

  // reflections of the basis roots as Weyl elements
  std::vector<WeylElement> gens;
  for (int b : sub_basis) {
    int idx = d.root(b).positive ? b : d.root(b).negative_of;
    int simple = -1;
    for (int i = 0; i < r; ++i)
      if (d.simple_root_index(i) == idx) simple = i;
    WeylElement s_beta;
    if (simple >= 0) {
      s_beta = d.canonicalize({simple + 1});
    } else {
      // lower the root to a simple one, conjugating along the way
      Vec cur = d.root(idx).alpha;
      std::vector<int> chain;
      for (;;) {
        int at = d.root_index(cur);
        bool is_simple = false;
        for (int i = 0; i < r; ++i)
          if (d.simple_root_index(i) == at) {
            simple = i;
            is_simple = true;
          }
        if (is_simple) break;
        int pick = -1;
        for (int j = 0; j < r; ++j) {
          Int p = 0;
          for (int i = 0; i < r; ++i) p = checked_add(p, checked_mul(cur[i], d.cartan(i, j)));
          if (p <= 0) continue;
          Vec img = cur;
          img[j] -= p;
          int ii = d.root_index(img);
          if (ii >= 0 && d.root(ii).positive) {
            pick = j;
            break;
          }
        }
        if (pick < 0) throw Error("could not lower root to a simple root");
        Int p = 0;
        for (int i = 0; i < r; ++i) p = checked_add(p, checked_mul(cur[i], d.cartan(i, pick)));
        cur[pick] -= p;
        chain.push_back(pick + 1);
      }
      std::vector<int> word;
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) word.push_back(*it);
      word.push_back(simple + 1);
      for (auto it = chain.begin(); it != chain.end(); ++it) word.push_back(*it);
      s_beta = d.canonicalize(word);
      if (d.act_on_root(s_beta, idx) != d.root(idx).negative_of)
        throw Error("constructed reflection does not negate its root");
    }
    gens.push_back(s_beta);
  }

  // Schreier orbit of x modulo X_*
  Int den = x.den;
  Vec start = reduce_mod_lattice(d, x.num, den);
  std::map<Vec, WeylElement> transversal;
  std::deque<Vec> work;
  transversal.emplace(start, WeylElement{});
  work.push_back(start);
  while (!work.empty()) {
    Vec cur = work.front();
    work.pop_front();
    const WeylElement u = transversal.at(cur);
    for (const auto& g : gens) {
      Vec img = reduce_mod_lattice(d, d.act_coweight_coords(g, cur), den);
      if (!transversal.count(img)) {
        if (transversal.size() >= orbit_guard)
          throw Error("orbit guard exceeded in point stabilizer computation");
        transversal.emplace(img, d.multiply(g, u));
        work.push_back(img);
      }
    }
  }

  // Schreier generators, sent to classes [x - w x] in X_*/<subsystem coroots>
  std::vector<Vec> class_gens;
  std::vector<WeylElement> weyl_gens;
  Vec x_start = start;
  for (auto& [p, u] : transversal) {
    for (const auto& g : gens) {
      Vec img = reduce_mod_lattice(d, d.act_coweight_coords(g, p), den);
      WeylElement w = d.multiply(d.inverse(transversal.at(img)), d.multiply(g, u));
      Vec wx = d.act_coweight_coords(w, x_start);
      Vec diffv = vec_sub(x_start, wx);
      Vec cls(r, 0);
      bool ok = true;
      for (int i = 0; i < r; ++i) {
        if (diffv[i] % den != 0) ok = false;
        else cls[i] = diffv[i] / den;
      }
      if (!ok) throw Error("schreier generator does not stabilize the point class");
      class_gens.push_back(cls);
      weyl_gens.push_back(w);
    }
  }

  std::map<Vec, char> seen;
  seen.emplace(out.smith.class_key(Vec(r, 0)), 1);
  std::vector<std::pair<Vec, WeylElement>> reps;
  reps.emplace_back(Vec(r, 0), WeylElement{});
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::pair<Vec, WeylElement>> snapshot = reps;
    for (auto& [v, wv] : snapshot)
      for (size_t gi = 0; gi < class_gens.size(); ++gi) {
        Vec sum = vec_add(v, class_gens[gi]);
        Vec key = out.smith.class_key(sum);
        if (!seen.count(key)) {
          seen.emplace(key, 1);
          reps.emplace_back(sum, d.multiply(weyl_gens[gi], wv));
          grew = true;
        }
      }
  }
  for (auto& [v, w] : reps) {
    out.classes.push_back(v);
    out.weyl_reps.push_back(w);
  }
  return out;
}

IndexIdentityReport index_identity_check(const AffineRootSystem& a, const KacPoint& s_in,
                                         const FrobeniusForm& form, const Facet& facet,
                                         size_t orbit_guard) {
  const RootDatum& d = a.datum();
  KacPoint s = s_in.reduced ? s_in : canonicalize(a, s_in);
  facet.validate(a, form);
  RatVec x = facet_point(a, facet);
  RatVec fx = form.apply(a, x);
  if (!(rat_sub(fx, x).num == Vec(d.rank(), 0)))
    throw Error("facet point is not fixed by the Frobenius");

  PseudoLevi pl = pseudo_levi(a, s);

  std::vector<int> basis_H;
  for (int node : pl.basis_nodes) basis_H.push_back(a.derivation(node));
  std::vector<int> basis_G;
  for (int i = 0; i < d.rank(); ++i) basis_G.push_back(d.simple_root_index(i));
  std::vector<int> all_roots(d.num_roots());
  std::iota(all_roots.begin(), all_roots.end(), 0);

  PointClassGroup H = point_stabilizer_classes(d, pl.roots_H, basis_H, x, orbit_guard);
  PointClassGroup G = point_stabilizer_classes(d, all_roots, basis_G, x, orbit_guard);

  auto frob_fixed = [&](const PointClassGroup& g) {
    std::vector<Vec> out;
    for (const Vec& v : g.classes) {
      Vec img = mat_vec(form.linear_cw, v);
      if (g.smith.class_key(img) == g.smith.class_key(v)) out.push_back(v);
    }
    return out;
  };
  std::vector<Vec> Hf = frob_fixed(H);
  std::vector<Vec> Gf = frob_fixed(G);

  IndexIdentityReport rep;
  rep.omega_Hx_frob_order = static_cast<Int>(Hf.size());
  rep.omega_Gx_frob_order = static_cast<Int>(Gf.size());
  std::set<Vec> image, kernel;
  for (const Vec& v : Hf) {
    Vec gk = G.smith.class_key(v);
    image.insert(gk);
    if (is_zero(gk)) kernel.insert(H.smith.class_key(v));
  }
  rep.image_order = static_cast<Int>(image.size());
  rep.kernel_frob_order = static_cast<Int>(kernel.size());
  rep.orders_consistent =
      checked_mul(rep.image_order, rep.kernel_frob_order) == rep.omega_Hx_frob_order;
  return rep;
}

}  // namespace alcove
