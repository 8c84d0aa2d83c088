#pragma once

// Membership in finitely generated sub-semigroups of H(n,Q).
//
// Outline: scale to integer entries; split the generators by whether their
// psi-image pairs strictly positively with some vector of the dual cone
// (G+) or not (G0); bound the number of G+ occurrences; then either solve
// linear systems in nonnegative integers (G0 commutative) or reduce to
// reachability in a finite automaton with integer registers (G0 not
// commutative).

#include "semireach/flow.hpp"
#include "semireach/heisenberg.hpp"
#include "semireach/verdict.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace semireach::heis {

struct MembershipInstance {
  std::vector<HeisTriple> generators;
  HeisTriple target{3};
};

/// Throws std::invalid_argument for an empty generator list or mixed dimensions.
void validate(const MembershipInstance& inst);

struct ScaledInstance {
  MembershipInstance instance;
  /// N: (a, b, c) was mapped to (N a, N b, N^2 c).
  Integer factor;
};

ScaledInstance scale_to_integer(const MembershipInstance& inst);

struct Partition {
  std::vector<std::size_t> g0;
  std::vector<std::size_t> gplus;
  /// witness[k] certifies gplus[k]: v_j^T u >= 0 for all j and v_i^T u >= 1.
  std::vector<RationalVec> witness;
};

Partition partition_generators(const std::vector<HeisTriple>& gens);

struct OccurrenceBounds {
  /// beta[k] caps the occurrences of generator gplus[k].
  std::vector<Integer> beta;
  Integer total;
};

/// nullopt means the target is rejected outright: v^T u_i < 0 for some i,
/// while every product pairs nonnegatively with u_i.
std::optional<OccurrenceBounds> occurrence_bounds(const std::vector<HeisTriple>& gens,
                                                  const Partition& p, const HeisTriple& target);

/// Whether the generators with the given indices pairwise commute.
bool commute_pairwise(const std::vector<HeisTriple>& gens, const std::vector<std::size_t>& idx);

struct CaseIStats {
  std::size_t multisets = 0;
  std::size_t arrangements = 0;
  std::size_t ilp_calls = 0;
};

/// Case G0 commutative. Requires an integer instance.
Verdict decide_case_commutative(const MembershipInstance& inst, const Partition& p,
                                const OccurrenceBounds& b, CaseIStats* stats = nullptr);

struct CentralElement {
  Integer corner;
  std::vector<std::size_t> word;
};

struct CentralPair {
  HeisTriple plus{3}, minus{3};
  Integer p, q;
  /// gcd of p, -q and of the extra central elements.
  Integer m;
  std::vector<std::size_t> plus_word, minus_word;
  /// Multiplicities r with sum r_i psi(A_i) = 0.
  IntegerVec r;
  /// Base sequence B_1 ... B_m in the chosen order (delta > 0).
  std::vector<std::size_t> base;
  Rational delta;
  std::size_t t = 0;
  /// Every central element used for m (includes M+ and M-).
  std::vector<CentralElement> central;
};

/// Case G0 not commutative. Requires an integer instance and a non-commuting
/// pair in G0.
CentralPair find_central_elements(const MembershipInstance& inst, const Partition& p);

struct ResidueAutomaton {
  long m = 1;
  std::size_t d = 1;
  /// Reachable states (s_1..s_d, t_1..t_d, u) mod m; states[0] is zero.
  std::vector<std::vector<long>> states;
  std::map<std::vector<long>, std::size_t> index;
  /// next[state][generator]
  std::vector<std::vector<std::size_t>> next;
  /// Register increment psi(A_l) of each generator.
  std::vector<IntegerVec> weights;

  std::optional<std::size_t> find(const std::vector<long>& residues) const;
};

/// Residues of an integer triple modulo m, in automaton state order.
std::vector<long> residues_of(const HeisTriple& x, long m);

ResidueAutomaton build_residue_automaton(const MembershipInstance& inst, long m);

Verdict decide_case_noncommutative(const MembershipInstance& inst, const CentralPair& cp);

struct MembershipReport {
  Verdict verdict;
  Integer scale = 1;
  std::optional<Partition> partition;
  std::optional<OccurrenceBounds> bounds;
  /// "reject", "commutative" or "noncommutative".
  std::string case_name;
  std::optional<CentralPair> central;
  CaseIStats case1;
};

MembershipReport decide_membership_report(const MembershipInstance& inst);

/// Is inst.target a nonempty product of generators? Never Unknown.
Verdict decide_membership(const MembershipInstance& inst);

}  // namespace semireach::heis
