#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wreath/closures.hpp"
#include "wreath/colored.hpp"
#include "wreath/io.hpp"
#include "wreath/perm_group.hpp"

namespace wreath {

/// A group together with the spec text it was built from.
struct NamedGroup {
  std::string spec;
  PermGroup group;
};

NamedGroup named(std::string spec, const Limits& limits = {});

/// One predicted-versus-observed comparison.
struct VerificationOutcome {
  std::string claim;
  std::vector<std::string> inputs;
  bool predicted = false;
  bool observed = false;
  bool agree = false;
  /// Certificates (cycle notation) backing negative observations.
  std::vector<std::string> witnesses;
  std::string note;
  double ms = 0;
};

/// Replaceable oracles; the suite's observed side goes through these.
struct Hooks {
  std::function<ColoredGraph(const PermGroup&)> orbital_graph;
};

/// Membership flags of an input group, computed once per spec.
struct Profile {
  bool gr = false;
  bool dgr = false;
  std::optional<bool> bgr;
  bool dgr_plus = false;
  bool i2 = false;
  bool transitive = false;
  bool symmetric = false;
  bool alternating = false;
  std::size_t degree = 0;
  std::size_t rank = 0;
  std::size_t nsp = 0;
  std::size_t orbit_count = 0;
  bool transposable = false;
};

/// Result of comparing a group with one of its closures on the observed
/// side. `witness_verified` means the witness preserves the structure and
/// lies outside the group.
struct Verdict {
  bool member = false;
  std::uint64_t closure_order = 0;
  std::optional<Permutation> witness;
  bool witness_verified = false;
};

class Harness {
 public:
  explicit Harness(Limits limits = {}, Hooks hooks = {});

  const Limits& limits() const noexcept { return limits_; }

  /// Flags of a small input group via the library classifier.
  Profile profile(const NamedGroup& g);

  /// Observed membership through the hooked oracles.
  Verdict observe(const PermGroup& g, ClosureKind kind) const;

  VerificationOutcome verify_imprimitive_classification(const NamedGroup& a,
                                                        const NamedGroup& b);
  VerificationOutcome verify_digraph_classification(const NamedGroup& a, const NamedGroup& b);
  VerificationOutcome verify_orbital_factorization(const NamedGroup& a, const NamedGroup& b);
  VerificationOutcome verify_parallel_multiple_law(const NamedGroup& b, std::size_t t);

  /// Collapsed graph on W x {0..t-1} built from G*(A wr B); its
  /// automorphism group is compared with the parallel multiple of B.
  std::pair<std::optional<ColoredGraph>, VerificationOutcome> build_lemma_A_graph(
      const NamedGroup& a, const NamedGroup& b);

  /// Graph on V x W assembled from G*(B x I_t) and G*(A); its automorphism
  /// group is compared with A wr B.
  std::pair<std::optional<ColoredGraph>, VerificationOutcome> build_lemma_C_graph(
      const NamedGroup& a, const NamedGroup& b);

  /// For transitive A, B with G = G*(A wr B) and Aut(G) = A wr B: splits G
  /// into a fibre graph H1 and a base graph H2 and checks G = H2 o H1,
  /// Aut(H1) = A, Aut(H2) = B.
  VerificationOutcome verify_transitive_decomposition(const NamedGroup& a,
                                                      const NamedGroup& b);

  /// Closure structure and classification clauses for A in product action
  /// over B. One outcome per applicable clause.
  std::vector<VerificationOutcome> product_action_report(const NamedGroup& a,
                                                         const NamedGroup& b);

  /// Membership of a group against a stated value.
  VerificationOutcome verify_membership(const std::string& claim, const NamedGroup& g,
                                        ClosureKind kind, bool stated);

  /// Stated (non-)representability by an uncolored hypergraph.
  VerificationOutcome verify_uncolored(const NamedGroup& g, bool stated);

 private:
  ColoredGraph graph_of(const PermGroup& g) const;

  Limits limits_;
  Hooks hooks_;
  std::mutex mutex_;
  std::map<std::string, Profile> profiles_;
};

/// Catalog names of degree <= max_degree, each group listed once (A3 is
/// left out as it coincides with C3, C2 and D3 likewise).
std::vector<std::string> catalog_names(std::size_t max_degree);

/// Ordered pairs of catalog names (degree <= 6) with product degree <= 12.
std::vector<std::pair<std::string, std::string>> grid_pairs();

struct ClaimCount {
  std::size_t total = 0;
  std::size_t agreed = 0;
};

struct SuiteReport {
  std::vector<VerificationOutcome> outcomes;
  std::map<std::string, ClaimCount> counts;
  bool passed() const;
};

struct SuiteOptions {
  Limits limits;
  Hooks hooks;
  /// Worker threads; zero picks the hardware concurrency.
  unsigned threads = 0;
};

/// Sections: memberships, imprimitive-gr, imprimitive-dgr, factorization,
/// parallel, constructions, product; "paper" runs all of them. Outcomes
/// come back in a fixed order regardless of scheduling.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options = {});

std::vector<std::string> suite_sections();

Json outcome_json(const VerificationOutcome& o, bool timings = false);
Json suite_report_json(const SuiteReport& r, bool timings = false);

/// Corrupts one edge color of G*(C2 wr C3) and leaves every other orbital
/// graph alone.
Hooks mutated_hooks();

}  // namespace wreath
