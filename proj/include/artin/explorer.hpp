#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/instance.hpp"

namespace artin {

/// Search for pairs M, N over random graded rings with Tor_i(M, N) = 0 for 1 <= i <= cutoff,
/// m^p M = m^q N = 0 and m^{p+q−1} != 0. With p = q = 2 this is the m³ = 0 question.
struct ExploreParams {
  std::size_t cutoff = kDefaultCutoff;
  std::size_t min_e = 2;
  std::size_t max_e = 4;
  std::size_t max_gens = 3;      // ν bound for the random modules
  bool cubics = true;            // allow random cubic relations besides the quadrics
  std::size_t length_cap = 48;   // reject rings with λ(R) above this
  std::size_t retries = 100;     // ring and module rejections per trial
  std::size_t p = 2;
  std::size_t q = 2;
  std::size_t cap = 1500;        // ambient dimension limit for a single Tor computation
};

struct ExploreTrial {
  std::size_t index = 0;
  bool sampled = false;  // false when every ring or module draw was rejected
  std::size_t e = 0;
  std::vector<std::size_t> hilbert;
  std::size_t nu_m = 0, nu_n = 0;
  std::optional<std::size_t> first_nonzero;  // nullopt: all zero, or undecided
  bool undecided = false;                    // a Tor dimension exceeded the size cap
  bool escalated = false;                    // all-zero window, re-tested at twice the cutoff
};

struct ExploreCandidate {
  std::size_t trial = 0;
  std::vector<std::size_t> profile;  // Tor_1 .. Tor_{2 cutoff}
  std::string dossier;               // instance file with the profile as comments
};

struct ExploreReport {
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  std::string field;
  ExploreParams params;
  bool vacuous = false;  // p = 1 or q = 1
  std::vector<ExploreTrial> trials;
  std::map<std::size_t, std::size_t> histogram;  // first nonzero Tor index -> count
  std::size_t undecided = 0;
  std::size_t rejected_rings = 0;
  std::vector<ExploreCandidate> candidates;
};

/// Deterministic in (field, seed, budget, params).
template <Field F>
ExploreReport explore(const F& field, std::uint64_t seed, std::size_t budget, const ExploreParams& params = {});

/// key=value lines in a fixed order.
std::vector<std::pair<std::string, std::string>> machine_records(const ExploreReport& r);
std::string human_report(const ExploreReport& r);

}  // namespace artin
