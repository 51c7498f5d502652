#include "arrlab/moduli.hpp"

#include <algorithm>
#include <random>
#include <tuple>

namespace arrlab {

std::string_view to_string(SlotKind k) {
  switch (k) {
    case SlotKind::Frame: return "frame";
    case SlotKind::Free: return "free";
    case SlotKind::Pencil: return "pencil";
    case SlotKind::Determined: return "determined";
  }
  return "?";
}

std::string_view to_string(ModuliStatus s) {
  switch (s) {
    case ModuliStatus::Points: return "points";
    case ModuliStatus::IrreducibleFamily: return "irreducible_family";
    case ModuliStatus::Unsupported: return "unsupported";
    case ModuliStatus::Infeasible: return "infeasible";
  }
  return "?";
}

// ------------------------------------------------------------------ planning

namespace {

std::vector<std::vector<int>> candidate_frames(const IncidenceStructure& s) {
  std::vector<std::vector<int>> out;
  const int n = s.n();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          if (s.concurrent(a, b, c) || s.concurrent(a, b, d) || s.concurrent(a, c, d) || s.concurrent(b, c, d)) continue;
          out.push_back({a, b, c, d});
        }
  return out;
}

ConstructionPlan greedy_plan(const IncidenceStructure& s, const std::vector<int>& frame) {
  const int n = s.n();
  std::vector<std::vector<int>> sets_of(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < s.multiples().size(); ++k) {
    for (int x : s.multiples()[k]) sets_of[static_cast<std::size_t>(x)].push_back(static_cast<int>(k));
  }
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  ConstructionPlan plan;
  plan.frame = frame;
  for (int f : frame) {
    plan.slots.push_back({f, SlotKind::Frame, {}, 0});
    placed[static_cast<std::size_t>(f)] = true;
  }
  auto placed_in = [&](int set) {
    int c = 0;
    for (int x : s.multiples()[static_cast<std::size_t>(set)]) c += placed[static_cast<std::size_t>(x)] ? 1 : 0;
    return c;
  };
  for (int step = 4; step < n; ++step) {
    int best = -1;
    std::vector<int> best_points;
    for (int l = 0; l < n; ++l) {
      if (placed[static_cast<std::size_t>(l)]) continue;
      std::vector<int> pts;
      for (int set : sets_of[static_cast<std::size_t>(l)]) {
        if (placed_in(set) >= 2) pts.push_back(set);
      }
      if (best == -1 || pts.size() > best_points.size()) {
        best = l;
        best_points = std::move(pts);
      }
    }
    const int k = static_cast<int>(best_points.size());
    PlanSlot slot{best, k >= 2 ? SlotKind::Determined : (k == 1 ? SlotKind::Pencil : SlotKind::Free), best_points,
                  std::max(0, 2 - k)};
    plan.residual_params += slot.params;
    plan.constraint_count += std::max(0, k - 2);
    plan.slots.push_back(std::move(slot));
    placed[static_cast<std::size_t>(best)] = true;
  }
  return plan;
}

std::vector<ConstructionPlan> ranked_plans(const IncidenceStructure& s) {
  if (s.n() < 4) throw Error(Errc::NoFrame, "a frame needs four lines, lattice has " + std::to_string(s.n()));
  std::vector<ConstructionPlan> plans;
  for (const auto& f : candidate_frames(s)) plans.push_back(greedy_plan(s, f));
  if (plans.empty()) throw Error(Errc::NoFrame, "every four lines contain a concurrent triple");
  std::stable_sort(plans.begin(), plans.end(), [](const ConstructionPlan& x, const ConstructionPlan& y) {
    return std::tie(x.residual_params, x.frame) < std::tie(y.residual_params, y.frame);
  });
  return plans;
}

}  // namespace

int frame_count(const IncidenceStructure& target) {
  return static_cast<int>(candidate_frames(target).size());
}

ConstructionPlan plan_construction(const IncidenceStructure& target, const PlanOptions& opts) {
  auto plans = ranked_plans(target);
  if (opts.frame_rank < 0 || opts.frame_rank >= static_cast<int>(plans.size())) {
    throw Error(Errc::InvalidArgument, "frame rank out of range");
  }
  return plans[static_cast<std::size_t>(opts.frame_rank)];
}

// ------------------------------------------------------- symbolic placement

namespace {

using MVec = std::array<MPoly, 3>;

MVec mcross(const MVec& u, const MVec& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

MPoly mdot(const MVec& u, const MVec& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

bool mzero(const MVec& v) { return v[0].is_zero() && v[1].is_zero() && v[2].is_zero(); }

/// Removes common factors so degrees stay small: the polynomial gcd of the
/// components when there is one variable, then a shared content/monomial.
MVec reduce_vec(MVec v, int nvars) {
  if (mzero(v)) return v;
  if (nvars == 1) {
    Poly g;
    for (const auto& c : v) g = gcd(g, c.to_poly());
    if (g.degree() >= 1) {
      for (auto& c : v) c = MPoly::from_poly(divmod(c.to_poly(), g).first, 1, 0);
    }
  }
  MPoly::Monomial low;
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& c : v) {
    for (const auto& [m, coef] : c.terms()) {
      if (low.empty()) low = m;
      for (std::size_t i = 0; i < low.size(); ++i) low[i] = std::min(low[i], m[i]);
      mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), coef.numerator().get_mpz_t());
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), coef.denominator().get_mpz_t());
    }
  }
  const Rational scale(mpq_class(den_lcm, num_gcd));
  for (auto& comp : v) comp = comp.scaled_quotient(low, scale);
  return v;
}

struct SymbolicArrangement {
  int nvars = 0;
  std::vector<MVec> lines;
  std::vector<ClosureConstraint> constraints;
};

SymbolicArrangement place_lines(const IncidenceStructure& s, const ConstructionPlan& plan) {
  SymbolicArrangement out;
  out.nvars = plan.residual_params;
  const int nv = out.nvars;
  out.lines.assign(static_cast<std::size_t>(s.n()), MVec{});
  std::vector<int> position(static_cast<std::size_t>(s.n()), -1);
  for (std::size_t p = 0; p < plan.slots.size(); ++p) position[static_cast<std::size_t>(plan.slots[p].line)] = static_cast<int>(p);

  auto c = [nv](long v) { return MPoly(nv, Rational(v)); };
  const MVec frame_lines[4] = {{c(1), c(0), c(0)}, {c(0), c(1), c(0)}, {c(0), c(0), c(1)}, {c(1), c(1), c(1)}};

  // The two earliest-placed members of a multiple set define its point.
  auto defining_pair = [&](int set) {
    Block members = s.multiples()[static_cast<std::size_t>(set)];
    std::sort(members.begin(), members.end(), [&](int x, int y) {
      return position[static_cast<std::size_t>(x)] < position[static_cast<std::size_t>(y)];
    });
    return std::pair<int, int>(members[0], members[1]);
  };
  auto point_of = [&](int set) {
    auto [a, b] = defining_pair(set);
    return mcross(out.lines[static_cast<std::size_t>(a)], out.lines[static_cast<std::size_t>(b)]);
  };

  int next_var = 0;
  for (std::size_t p = 0; p < plan.slots.size(); ++p) {
    const PlanSlot& slot = plan.slots[p];
    MVec line;
    switch (slot.kind) {
      case SlotKind::Frame:
        line = frame_lines[p];
        break;
      case SlotKind::Free:
        line = {MPoly::variable(nv, next_var), MPoly::variable(nv, next_var + 1), c(1)};
        next_var += 2;
        break;
      case SlotKind::Pencil: {
        // A + t*B sweeps the pencil through A^B; t = 0 and t = oo give A and B themselves.
        auto [a, b] = defining_pair(slot.through[0]);
        MPoly t = MPoly::variable(nv, next_var++);
        for (std::size_t k = 0; k < 3; ++k) {
          line[k] = out.lines[static_cast<std::size_t>(a)][k] + t * out.lines[static_cast<std::size_t>(b)][k];
        }
        break;
      }
      case SlotKind::Determined:
        line = mcross(point_of(slot.through[0]), point_of(slot.through[1]));
        break;
    }
    line = reduce_vec(std::move(line), nv);
    out.lines[static_cast<std::size_t>(slot.line)] = line;
    for (std::size_t j = 2; j < slot.through.size() && slot.kind == SlotKind::Determined; ++j) {
      MPoly cst = mdot(line, point_of(slot.through[j]));
      bool automatic = cst.is_zero();
      out.constraints.push_back({automatic ? cst : cst.primitive_part(), slot.line, slot.through[j], automatic});
    }
  }
  return out;
}

/// Polynomials whose vanishing makes the construction degenerate: two lines
/// coincide, or three lines not concurrent in the target become concurrent.
std::vector<MPoly> degeneracy_conditions(const IncidenceStructure& s, const SymbolicArrangement& sym,
                                         bool& identically_degenerate) {
  std::vector<MPoly> out;
  identically_degenerate = false;
  const int n = s.n();
  for (int a = 0; a < n; ++a) {
    if (mzero(sym.lines[static_cast<std::size_t>(a)])) identically_degenerate = true;
  }
  if (identically_degenerate) return out;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      MVec x = mcross(sym.lines[static_cast<std::size_t>(a)], sym.lines[static_cast<std::size_t>(b)]);
      if (mzero(x)) {
        identically_degenerate = true;
        return out;
      }
      if (sym.nvars == 1) {
        Poly g;
        for (const auto& comp : x) g = gcd(g, comp.to_poly());
        if (g.degree() >= 1) out.push_back(MPoly::from_poly(g, 1, 0));
      }
      for (int c2 = b + 1; c2 < n; ++c2) {
        if (s.concurrent(a, b, c2)) continue;
        MPoly det = mdot(sym.lines[static_cast<std::size_t>(c2)], x);
        if (det.is_zero()) {
          identically_degenerate = true;
          return out;
        }
        if (!det.is_constant()) out.push_back(det);
      }
    }
  }
  return out;
}

std::optional<Arrangement> realize_at(const IncidenceStructure& s, const SymbolicArrangement& sym,
                                      const std::vector<Rational>& point) {
  std::vector<ProjLine> lines;
  for (const auto& v : sym.lines) {
    Vec3 e{QuadExt(v[0].evaluate(point)), QuadExt(v[1].evaluate(point)), QuadExt(v[2].evaluate(point))};
    if (is_zero(e)) return std::nullopt;
    lines.emplace_back(e);
  }
  try {
    Arrangement arr(std::move(lines), 1);
    if (incidence_of(arr) != s) return std::nullopt;
    return arr;
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::optional<Arrangement> realize_at_root(const IncidenceStructure& s, const SymbolicArrangement& sym,
                                           const QuadExt& root, std::int64_t field_d) {
  std::vector<ProjLine> lines;
  for (const auto& v : sym.lines) {
    Vec3 e{v[0].to_poly().evaluate(root), v[1].to_poly().evaluate(root), v[2].to_poly().evaluate(root)};
    if (is_zero(e)) return std::nullopt;
    lines.emplace_back(e);
  }
  try {
    Arrangement arr(std::move(lines), field_d);
    if (incidence_of(arr) != s) return std::nullopt;
    return arr;
  } catch (const Error&) {
    return std::nullopt;
  }
}

/// A generic member of a family; deterministic sample sequence.
std::optional<Arrangement> sample_family(const IncidenceStructure& s, const SymbolicArrangement& sym) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 7);
  for (int attempt = 0; attempt < 400; ++attempt) {
    std::vector<Rational> point;
    for (int i = 0; i < sym.nvars; ++i) {
      long p = num(rng);
      point.emplace_back(p == 0 ? 1 : p, attempt < 20 ? 1 : den(rng));
    }
    if (auto arr = realize_at(s, sym, point)) return arr;
  }
  return std::nullopt;
}

/// f = c1(v) * u + c0(v) in two variables with gcd(c1, c0) = 1. Such an f is
/// irreducible, and v -> (v, -c0/c1) parametrizes its zero set off c1 = 0.
struct LinearHypersurface {
  MPoly f;
  int var = 0;  // u
  Poly c1, c0;  // in the other variable
};

std::optional<LinearHypersurface> linear_hypersurface(const std::vector<MPoly>& live) {
  const MPoly f = live.front().primitive_part();
  for (const auto& g : live) {
    MPoly q = g.primitive_part();
    if (!(q == f) && !(q == -f)) return std::nullopt;
  }
  for (int var = 0; var < 2; ++var) {
    const std::size_t u = static_cast<std::size_t>(var);
    const std::size_t v = 1 - u;
    std::vector<QuadExt> c1, c0;
    bool linear = true;
    for (const auto& [m, coef] : f.terms()) {
      if (m[u] > 1) linear = false;
      auto& target = m[u] == 1 ? c1 : c0;
      const std::size_t e = static_cast<std::size_t>(m[v]);
      if (target.size() <= e) target.resize(e + 1);
      target[e] = QuadExt(coef);
    }
    if (!linear || c1.empty()) continue;
    LinearHypersurface out{f, var, Poly(std::move(c1)), Poly(std::move(c0))};
    if (gcd(out.c1, out.c0).degree() != 0) continue;
    return out;
  }
  return std::nullopt;
}

std::optional<Arrangement> sample_hypersurface(const IncidenceStructure& s, const SymbolicArrangement& sym,
                                               const LinearHypersurface& h) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> num(-40, 40);
  std::uniform_int_distribution<long> den(1, 7);
  for (int attempt = 0; attempt < 400; ++attempt) {
    Rational v(num(rng), attempt < 20 ? 1 : den(rng));
    QuadExt c1 = h.c1.evaluate(QuadExt(v));
    if (c1.is_zero()) continue;
    Rational u = (-h.c0.evaluate(QuadExt(v)) / c1).a();
    std::vector<Rational> point(2);
    point[static_cast<std::size_t>(h.var)] = u;
    point[static_cast<std::size_t>(1 - h.var)] = v;
    if (auto arr = realize_at(s, sym, point)) return arr;
  }
  return std::nullopt;
}

}  // namespace

ModuliReport solve_moduli(const IncidenceStructure& target, const PlanOptions& opts) {
  ModuliReport rep;
  rep.plan = plan_construction(target, opts);
  SymbolicArrangement sym = place_lines(target, rep.plan);
  rep.constraints = sym.constraints;
  const int nv = sym.nvars;

  std::vector<MPoly> live;
  for (const auto& c : sym.constraints) {
    if (!c.automatic) live.push_back(c.poly);
  }

  bool identically_degenerate = false;
  std::vector<MPoly> forbidden = degeneracy_conditions(target, sym, identically_degenerate);
  if (identically_degenerate) {
    rep.status = ModuliStatus::Infeasible;
    rep.reason = "every parameter value forces a coincidence or an extra concurrency";
    return rep;
  }

  if (live.empty()) {
    auto sample = sample_family(target, sym);
    if (!sample) {
      rep.status = ModuliStatus::Unsupported;
      rep.reason = "no generic sample found";
      return rep;
    }
    rep.realizations.push_back(*sample);
    rep.free_dimension = nv;
    if (nv == 0) {
      rep.status = ModuliStatus::Points;
      rep.point_count = 1;
    } else {
      rep.status = ModuliStatus::IrreducibleFamily;
      rep.reason = "all closure constraints vanish identically";
    }
    return rep;
  }

  if (nv == 0) {
    rep.status = ModuliStatus::Infeasible;
    rep.reason = "a closure constraint is a nonzero constant";
    return rep;
  }
  if (nv >= 2) {
    if (nv == 2) {
      if (auto lin = linear_hypersurface(live)) {
        rep.family_constraint = lin->f;
        auto sample = sample_hypersurface(target, sym, *lin);
        if (sample) {
          rep.status = ModuliStatus::IrreducibleFamily;
          rep.reason = "single closure constraint, linear in u" + std::to_string(lin->var) +
                       " with coprime coefficients; rationally parametrized by u" + std::to_string(1 - lin->var);
          rep.free_dimension = 1;
          rep.realizations.push_back(std::move(*sample));
          return rep;
        }
        rep.status = ModuliStatus::Infeasible;
        rep.reason = "closure hypersurface has no non-degenerate sample";
        return rep;
      }
    }
    rep.status = ModuliStatus::Unsupported;
    rep.reason = std::to_string(nv) + " residual parameters with non-trivial constraints";
    return rep;
  }

  Poly closure;
  for (const auto& c : live) closure = gcd(closure, c.to_poly());
  rep.closure_polynomial = closure.primitive();
  if (closure.degree() < 1) {
    rep.status = ModuliStatus::Infeasible;
    rep.reason = "closure constraints have no common root";
    return rep;
  }
  Poly sqf = squarefree(closure);
  const int full_degree = sqf.degree();
  for (const auto& f : forbidden) {
    Poly g = gcd(sqf, f.to_poly());
    if (g.degree() < 1) continue;
    sqf = divmod(sqf, g).first;
    if (g.degree() <= 2) {
      for (const auto& r : poly_roots_quadratic(g).roots) rep.rejected_parameter_values.push_back(r.value);
    }
  }
  rep.degenerate_roots_rejected = full_degree - sqf.degree();
  rep.nondegenerate_closure = sqf.primitive();
  if (sqf.degree() < 1) {
    rep.status = ModuliStatus::Infeasible;
    rep.reason = "every closure root is degenerate";
    return rep;
  }
  if (sqf.degree() > 2) {
    rep.status = ModuliStatus::Unsupported;
    rep.reason = "closure polynomial of degree " + std::to_string(sqf.degree());
    return rep;
  }
  QuadraticRoots roots = poly_roots_quadratic(sqf);
  rep.splitting_field_d = roots.field_d;
  for (const auto& r : roots.roots) {
    if (auto arr = realize_at_root(target, sym, r.value, roots.field_d)) {
      rep.parameter_values.push_back(r.value);
      rep.realizations.push_back(std::move(*arr));
    } else {
      ++rep.degenerate_roots_rejected;
      rep.rejected_parameter_values.push_back(r.value);
    }
  }
  rep.point_count = static_cast<int>(rep.realizations.size());
  if (rep.point_count == 0) {
    rep.status = ModuliStatus::Infeasible;
    rep.reason = "no closure root survives verification";
    return rep;
  }
  rep.status = ModuliStatus::Points;
  return rep;
}

std::vector<Vec3> evaluate_plan(const IncidenceStructure& target, const ConstructionPlan& plan, const QuadExt& t) {
  if (plan.residual_params != 1) throw Error(Errc::InvalidArgument, "evaluate_plan needs a one-parameter plan");
  SymbolicArrangement sym = place_lines(target, plan);
  std::vector<Vec3> out;
  for (const auto& v : sym.lines) out.push_back({v[0].to_poly().evaluate(t), v[1].to_poly().evaluate(t), v[2].to_poly().evaluate(t)});
  return out;
}

// ------------------------------------------------------------- equivalence

namespace {

using Mat = ProjTransform::Matrix;

Mat columns(const Vec3& c0, const Vec3& c1, const Vec3& c2) {
  Mat m;
  for (std::size_t i = 0; i < 3; ++i) m[i] = {c0[i], c1[i], c2[i]};
  return m;
}

Vec3 mul(const Mat& m, const Vec3& v) {
  Vec3 r;
  for (std::size_t i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return r;
}

Mat mul(const Mat& a, const Mat& b) {
  Mat r;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return r;
}

Mat inverse(const Mat& m) {
  ProjTransform t(m);
  QuadExt inv_det = t.determinant().inverse();
  Mat adj = t.adjugate();
  for (auto& row : adj)
    for (auto& x : row) x *= inv_det;
  return adj;
}

/// Matrix M with M*src[k] ~ dst[k] for four lines in general position.
Mat frame_map(const std::array<Vec3, 4>& src, const std::array<Vec3, 4>& dst) {
  Mat a = columns(src[0], src[1], src[2]);
  Mat b = columns(dst[0], dst[1], dst[2]);
  Vec3 lambda = mul(inverse(a), src[3]);
  Vec3 mu = mul(inverse(b), dst[3]);
  Mat scale{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) scale[i][j] = QuadExt(0);
    scale[i][i] = mu[i] / lambda[i];
  }
  return mul(mul(b, scale), inverse(a));
}

}  // namespace

std::optional<Equivalence> find_equivalence(const Arrangement& a, const Arrangement& b, LineMatching matching) {
  if (a.size() != b.size()) return std::nullopt;
  IncidenceStructure la = incidence_of(a);
  IncidenceStructure lb = incidence_of(b);
  std::vector<Permutation> perms;
  if (matching == LineMatching::Identity) {
    if (!(la == lb)) return std::nullopt;
    Permutation id(a.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    perms.push_back(std::move(id));
  } else {
    perms = all_isomorphisms(la, lb);
  }
  if (perms.empty()) return std::nullopt;
  auto frames = candidate_frames(la);
  if (frames.empty()) throw Error(Errc::NoFrame, "arrangement has no four lines in general position");
  const auto& f = frames.front();
  for (const auto& phi : perms) {
    std::array<Vec3, 4> src, dst;
    for (std::size_t k = 0; k < 4; ++k) {
      src[k] = a.line(static_cast<std::size_t>(f[k])).coeffs();
      dst[k] = b.line(static_cast<std::size_t>(phi[static_cast<std::size_t>(f[k])])).coeffs();
    }
    Mat m = frame_map(src, dst);
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      Vec3 img = mul(m, a.line(i).coeffs());
      ok = is_zero(cross(img, b.line(static_cast<std::size_t>(phi[i])).coeffs()));
    }
    if (ok) return Equivalence{phi, m};
  }
  return std::nullopt;
}

bool realizations_equivalent(const Arrangement& a, const Arrangement& b, LineMatching matching) {
  return find_equivalence(a, b, matching).has_value();
}

}  // namespace arrlab
