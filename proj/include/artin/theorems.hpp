#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/instance.hpp"

namespace artin {

enum class Status { Vacuous, Pass, Fail, NoCounterexample };
std::string_view status_name(Status s);

/// Which modules of an instance a statement reads.
enum class Subject { Ring, Single, Pair };

struct Statement {
  std::string id;                    // S1..S29
  std::string title;
  std::string anchor;                // verbatim key phrase of the statement
  std::vector<std::string> clauses;  // selectable as id.clause, e.g. S4.3
  Subject subject = Subject::Pair;
  bool conjecture = false;           // never PASS: NO_COUNTEREXAMPLE or FAIL
};

const std::vector<Statement>& registry();
/// Throws UndefinedInputError for an unknown id or clause.
const Statement& find_statement(std::string_view id);
/// S1..S23 and S26..S29: statements whose checks carry no "for all i > 0" truncation caveat.
std::vector<std::string> suite_statement_ids();

struct Verdict {
  std::string id;
  std::string instance;
  Status status = Status::Vacuous;
  std::string hypothesis;  // why VACUOUS, or which hypotheses held
  std::string conclusion;
  std::size_t cutoff = kDefaultCutoff;
  std::vector<std::pair<std::string, std::string>> facts;  // stable-ordered key/value records
  std::string counterexample;  // minimized serialized instance, FAIL only
};

/// Evaluates one statement (or one clause, `S4.3`) on an instance. Hypotheses are decided
/// first; conclusions are evaluated only when they hold, except for statements of the form
/// "vanishing ⇒ free/Gorenstein", which are also checked contrapositively: a non-free module
/// passes when the vanishing window does not materialize through the cutoff.
/// Instance parameters: `n` cutoff, `j` window start, `cap` size limit for free modules
/// in the resolutions (ambient dimension, default 1500).
template <Field F>
Verdict check(std::string_view id, const Instance<F>& inst);

struct SuiteReport {
  std::vector<Verdict> verdicts;
  std::map<Status, std::size_t> counts;
  bool any_fail() const { return counts.contains(Status::Fail); }
};

template <Field F>
SuiteReport check_suite(const std::vector<Instance<F>>& corpus, const std::vector<std::string>& ids);

/// The AGP ring with M = coker φ and N = ω.
template <Field F>
Instance<F> agp_instance(const F& field);
inline constexpr const char* kAgpInstanceText = R"(# k[x1..x4] modulo seven quadrics; m^3 = 0, Hilbert series 1 + 4t + 3t^2
[ring]
field = GF(101)
vars = x1, x2, x3, x4
rel = x1^2
rel = x1*x2 - x3*x4
rel = x1*x2 - x4^2
rel = x1*x3 - x2*x4
rel = x1*x4 - x2^2
rel = x1*x4 - x2*x3
rel = x1*x4 - x3^2

# M = coker phi, phi = [[x3, x1], [x4, x2]]
[module M]
row = x3, x1
row = x4, x2
)";

/// Non-Gorenstein graded rings with m³ = 0: every monomial quotient with e ≤ 3 (up to
/// permuting variables) plus a few binomial examples. Each instance carries M = ω.
template <Field F>
std::vector<Instance<F>> omega_corpus(const F& field);
/// Every monomial quotient k[x_1..x_e]/(S + m³) with S a set of quadratic monomials,
/// 1 ≤ e ≤ max_e, one representative per orbit of variable permutations.
template <Field F>
std::vector<RingPtr<F>> monomial_m3_rings(const F& field, std::size_t max_e);

/// Random m³ = 0 ring: `quadrics` random quadratic forms plus all cubic monomials.
template <Field F>
RingPtr<F> random_m3_ring(const F& field, std::size_t e, std::size_t quadrics, std::uint64_t seed);

/// The canned corpus: AGP and its syzygies, the standard small examples, free instances,
/// the ω corpus and seeded random m³ = 0 instances.
template <Field F>
std::vector<Instance<F>> canned_corpus(const F& field);

}  // namespace artin
