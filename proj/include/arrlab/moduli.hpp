#pragma once

// Realization of an abstract lattice by incremental line placement. The first
// four plan lines are pinned to x=0, y=0, z=0, x+y+z=0, which uses up PGL_3;
// every later line either is free, moves in a pencil through one constructed
// point, or is fixed by two constructed points. Further concurrencies become
// polynomial constraints in the residual parameters.

#include <optional>
#include <string>
#include <vector>

#include "arrlab/geometry.hpp"
#include "arrlab/lattice.hpp"
#include "arrlab/mpoly.hpp"

namespace arrlab {

enum class SlotKind { Frame, Free, Pencil, Determined };
std::string_view to_string(SlotKind k);

struct PlanSlot {
  int line = -1;              // 0-based target line
  SlotKind kind = SlotKind::Frame;
  std::vector<int> through;   // multiple sets whose (already constructed) point the line must contain
  int params = 0;             // 2 free, 1 pencil, 0 determined or frame
};

struct ConstructionPlan {
  std::vector<int> frame;         // the four frame lines, pinned in this order
  std::vector<PlanSlot> slots;    // every line, in placement order
  int residual_params = 0;
  int constraint_count = 0;       // sum over determined slots of (points - 2)
};

struct PlanOptions {
  /// Use the k-th best frame (ranked by residual parameters, then frame
  /// lexicographically). Rank 0 is the default plan.
  int frame_rank = 0;
};

/// Throws NoFrame when the lattice has fewer than four lines or every
/// four lines contain a concurrent triple.
ConstructionPlan plan_construction(const IncidenceStructure& target, const PlanOptions& opts = {});
/// Number of frames the planner can rank.
int frame_count(const IncidenceStructure& target);

/// A concurrency imposed on a determined line: the line must pass through the
/// point of `multiple` in addition to its two defining points.
struct ClosureConstraint {
  MPoly poly;
  int line = -1;
  int multiple = -1;
  bool automatic = false;  // vanishes identically (an incidence theorem)
};

enum class ModuliStatus { Points, IrreducibleFamily, Unsupported, Infeasible };
std::string_view to_string(ModuliStatus s);

struct ModuliReport {
  ModuliStatus status = ModuliStatus::Unsupported;
  std::string reason;
  ConstructionPlan plan;
  std::vector<ClosureConstraint> constraints;
  Poly closure_polynomial;       // primitive gcd of the nonzero constraints (one parameter)
  MPoly family_constraint;       // the single linear-in-one-variable constraint (two parameters)
  Poly nondegenerate_closure;    // its squarefree part with degenerate factors removed
  int point_count = 0;
  std::int64_t splitting_field_d = 1;
  int free_dimension = 0;
  int degenerate_roots_rejected = 0;
  std::vector<QuadExt> parameter_values;   // one per realization (one-parameter case)
  std::vector<QuadExt> rejected_parameter_values;  // closure roots that degenerate (quadratic factors only)
  std::vector<Arrangement> realizations;   // line i realizes target line i
};

/// Never throws for infeasible or out-of-scope lattices; those come back as
/// statuses. Throws NoFrame when no plan exists.
ModuliReport solve_moduli(const IncidenceStructure& target, const PlanOptions& opts = {});

/// Line coordinates of a one-parameter plan at parameter value t, before any
/// degeneracy check (lines may coincide or vanish).
std::vector<Vec3> evaluate_plan(const IncidenceStructure& target, const ConstructionPlan& plan, const QuadExt& t);

enum class LineMatching {
  Identity,  // same moduli point: line i must go to line i
  Any,       // any lattice isomorphism may relabel the lines
};

struct Equivalence {
  Permutation permutation;        // a line i goes to b line permutation[i]
  ProjTransform::Matrix line_map; // b_perm[i] ~ line_map * a_i
};

std::optional<Equivalence> find_equivalence(const Arrangement& a, const Arrangement& b,
                                            LineMatching matching = LineMatching::Any);
bool realizations_equivalent(const Arrangement& a, const Arrangement& b, LineMatching matching = LineMatching::Any);

}  // namespace arrlab
