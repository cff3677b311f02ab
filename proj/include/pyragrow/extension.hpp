#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pyragrow/distance.hpp"
#include "pyragrow/polytope.hpp"

namespace pyragrow {

enum class StepKind { StackOnFacet, PyramidOver };

/// Single-apex extension certificate. For StackOnFacet, `facet` holds the
/// vertex indices (into the pre-polytope) of the stacked facet.
struct PyramidalStep {
  StepKind kind;
  Vec apex;
  std::vector<int> facet;
};

struct GrowthChain {
  Polytope initial;
  std::vector<PyramidalStep> steps;

  /// initial, then the polytope after each step (recomputed, deterministic).
  std::vector<Polytope> intermediates() const;
  Polytope final_polytope() const;
};

/// Quasi-pyramidal chain: inclusions P_0 c P_1 c ... c P_n where step i has a
/// pyramidal witness P'_i with P_0 c= P'_i c= P_{i-1} and P'_i pyramidally
/// extends to P_i. Pure pyramidal steps carry no explicit witness entry
/// (their witness is P_{i-1} itself).
struct QuasiWitness {
  int index;          // 1-based step index it certifies
  Polytope polytope;  // P'_i
  PyramidalStep step; // from P'_i to P_i
};

struct QuasiChain {
  std::vector<Polytope> polytopes;  // P_0 ... P_n
  std::vector<QuasiWitness> witnesses;
  DistanceInterval defect;

  const QuasiWitness* witness_for(int index) const;
};

struct StepDiagnostic {
  int index;
  std::string message;
};

struct VerificationReport {
  bool valid = false;
  std::string message;
  std::vector<StepDiagnostic> diagnostics;
  std::optional<PyramidalStep> step;      // inferred step for a valid pair
  std::optional<Polytope> final_polytope;
  std::optional<DistanceInterval> defect;
};

/// Decides whether P c Q is a pyramidal extension: exactly one new vertex v
/// outside P, Q == conv(P, v), and v either off Aff(P) (pyramid over P) or
/// seeing exactly one facet of P (stacking). Total; invalid is a verdict.
VerificationReport verify_pyramidal(const Polytope& p, const Polytope& q);

/// conv(P, apex) after checking the step against P. Throws InvalidStep.
Polytope apply_step(const Polytope& p, const PyramidalStep& s);

VerificationReport verify_chain(const GrowthChain& chain);

enum class DefectRule {
  DistanceToStep,        // sum d_H(P'_i, P_i) over strict witnesses (default)
  DistanceToPredecessor  // sum d_H(P'_i, P_{i-1}) over strict witnesses
};

DistanceInterval defect(const QuasiChain& qc, const Rational& tol,
                        DefectRule rule = DefectRule::DistanceToStep);

VerificationReport verify_quasi(const QuasiChain& qc,
                                const Rational& defect_tol = Rational(1, 1000000),
                                DefectRule rule = DefectRule::DistanceToStep);

/// Stricter stacking predicate: additionally every codimension-2 face of P
/// must survive as a face of Q.
VerificationReport verify_stacked_restricted(const Polytope& p, const Polytope& q);

/// Wrap a pure pyramidal chain as a quasi chain with trivial witnesses.
QuasiChain quasi_from_chain(const GrowthChain& chain);

}  // namespace pyragrow
