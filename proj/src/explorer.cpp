#include "artin/explorer.hpp"

#include <sstream>

#include "artin/homology.hpp"
#include "artin/random.hpp"

namespace artin {

namespace {

mpz_class coefficient(const PrimeField& f, Rng& rng) { return mpz_class(static_cast<unsigned long>(rng.below(f.characteristic()))); }
mpz_class coefficient(const RationalField&, Rng& rng) { return mpz_class(static_cast<long>(rng.below(19)) - 9); }

template <Field F>
Polynomial random_form(const F& field, std::size_t e, std::size_t d, Rng& rng) {
  Polynomial f(e);
  for (const auto& m : monomials_of_degree(e, d)) f.add_term(m, coefficient(field, rng));
  return f;
}

template <Field F>
std::optional<RingPtr<F>> sample_ring(const F& field, const ExploreParams& p, Rng& rng, std::size_t& rejected) {
  const std::size_t h_min = p.p + p.q - 1;
  for (std::size_t attempt = 0; attempt < p.retries; ++attempt) {
    const std::size_t e = rng.range(p.min_e, p.max_e);
    const std::size_t n2 = monomials_of_degree(e, 2).size();
    const bool with_cubics = p.cubics && rng.below(2) == 1;
    const std::size_t quads = with_cubics ? rng.range(1, n2) : rng.range(e, n2);
    RingPresentation pres;
    for (std::size_t i = 0; i < e; ++i) pres.vars.push_back("x" + std::to_string(i + 1));
    for (std::size_t i = 0; i < quads; ++i) {
      auto f = random_form(field, e, 2, rng);
      if (!f.is_zero()) pres.relations.push_back(std::move(f));
    }
    if (with_cubics) {
      const std::size_t cubes = rng.range(1, monomials_of_degree(e, 3).size());
      for (std::size_t i = 0; i < cubes; ++i) {
        auto f = random_form(field, e, 3, rng);
        if (!f.is_zero()) pres.relations.push_back(std::move(f));
      }
    }
    try {
      auto r = make_ring(field, pres, 16, p.length_cap);
      if (ring_invariants(*r).loewy >= h_min) return r;
    } catch (const NotArtinianError&) {
    } catch (const PresentationError&) {
    }
    ++rejected;
  }
  return std::nullopt;
}

template <Field F>
std::optional<FiniteModule<F>> sample_module(const RingPtr<F>& r, std::size_t power, const ExploreParams& p,
                                             Rng& rng) {
  RandomModuleParams mp;
  mp.max_gens = p.max_gens;
  for (std::size_t attempt = 0; attempt < p.retries; ++attempt) {
    auto m = random_module(r, rng.next(), mp);
    m = quotient_by(m, msub(m, power));
    if (m.dim() == 0) continue;
    if (resolve(m, 1)->betti(1) == 0) continue;
    return m;
  }
  return std::nullopt;
}

// Tor_i(a, b) using whichever side has an affordable resolution; nullopt when neither does.
template <Field F>
std::optional<std::size_t> bounded_tor(const FiniteModule<F>& a, const FiniteModule<F>& b, std::size_t i,
                                       std::size_t cap) {
  const std::size_t lam = a.ring()->length();
  auto side = [&](const FiniteModule<F>& x, const FiniteModule<F>& y) -> std::optional<std::size_t> {
    auto res = resolve(x, 0);
    while (!res->terminated() && res->computed() < i + 1) {
      const std::size_t c = res->computed();
      if (c >= 1 && res->betti(c) * lam > cap) return std::nullopt;
      res->extend_to(c + 1);
    }
    const std::size_t bi = res->betti(i), bi1 = res->betti(i + 1);
    if (bi == 0) return std::size_t{0};
    if (std::max(bi, bi1) * y.dim() > cap) return std::nullopt;
    return tor_dim(x, y, i);
  };
  if (auto t = side(a, b)) return t;
  return side(b, a);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

}  // namespace

template <Field F>
ExploreReport explore(const F& field, std::uint64_t seed, std::size_t budget, const ExploreParams& params) {
  if (params.cutoff < 1) throw PreconditionError("cutoff must be at least 1");
  if (params.min_e < 1 || params.min_e > params.max_e) throw PreconditionError("invalid embedding dimension range");
  if (params.p < 1 || params.q < 1) throw PreconditionError("p and q must be positive");
  ExploreReport rep;
  rep.seed = seed;
  rep.budget = budget;
  rep.field = field.name();
  rep.params = params;
  if (budget == 0) return rep;
  // m^1 M = 0 makes M a sum of copies of k; Tor_i(k, N) != 0 for non-free N.
  if (params.p == 1 || params.q == 1) {
    rep.vacuous = true;
    return rep;
  }
  Rng root(seed);
  for (std::size_t t = 0; t < budget; ++t) {
    clear_resolution_cache();
    Rng rng = root.fork(t);
    ExploreTrial trial;
    trial.index = t;
    auto ring = sample_ring(field, params, rng, rep.rejected_rings);
    std::optional<FiniteModule<F>> m, n;
    if (ring) {
      m = sample_module(*ring, params.p, params, rng);
      if (m) n = sample_module(*ring, params.q, params, rng);
    }
    if (!ring || !m || !n) {
      rep.trials.push_back(trial);
      continue;
    }
    trial.sampled = true;
    trial.e = ring_invariants(**ring).e;
    trial.hilbert = hilbert(**ring);
    trial.nu_m = min_gens(*m);
    trial.nu_n = min_gens(*n);

    std::vector<std::size_t> profile;
    auto scan = [&](std::size_t hi) {
      for (std::size_t i = profile.size() + 1; i <= hi; ++i) {
        auto v = bounded_tor(*m, *n, i, params.cap);
        if (!v) {
          trial.undecided = true;
          return;
        }
        profile.push_back(*v);
        if (*v != 0) {
          trial.first_nonzero = i;
          return;
        }
      }
    };
    scan(params.cutoff);
    if (!trial.first_nonzero && !trial.undecided) {
      trial.escalated = true;
      scan(2 * params.cutoff);
      if (!trial.first_nonzero && !trial.undecided) {
        Instance<F> inst;
        inst.name = "candidate-" + std::to_string(t);
        inst.ring = *ring;
        inst.add("M", *m);
        inst.add("N", *n);
        inst.params["n"] = static_cast<long>(2 * params.cutoff);
        ExploreCandidate c;
        c.trial = t;
        c.profile = profile;
        c.dossier = "# explorer seed=" + std::to_string(seed) + " trial=" + std::to_string(t) +
                    "\n# Tor_1..Tor_" + std::to_string(profile.size()) + " = " + join(profile) + "\n" +
                    serialize_instance(inst);
        rep.candidates.push_back(std::move(c));
      }
    }
    if (trial.first_nonzero)
      ++rep.histogram[*trial.first_nonzero];
    else if (trial.undecided)
      ++rep.undecided;
    rep.trials.push_back(std::move(trial));
  }
  clear_resolution_cache();
  return rep;
}

std::vector<std::pair<std::string, std::string>> machine_records(const ExploreReport& r) {
  std::vector<std::pair<std::string, std::string>> out;
  auto put = [&](std::string k, std::string v) { out.emplace_back(std::move(k), std::move(v)); };
  auto num = [](std::size_t v) { return std::to_string(v); };
  put("explore.seed", std::to_string(r.seed));
  put("explore.budget", num(r.budget));
  put("explore.field", r.field);
  put("explore.cutoff", num(r.params.cutoff));
  put("explore.p", num(r.params.p));
  put("explore.q", num(r.params.q));
  put("explore.e", num(r.params.min_e) + ".." + num(r.params.max_e));
  if (r.vacuous) {
    put("explore.status", "vacuously consistent");
    return out;
  }
  std::size_t sampled = 0;
  for (const auto& t : r.trials) sampled += t.sampled;
  put("explore.trials", num(r.trials.size()));
  put("explore.sampled", num(sampled));
  put("explore.rejected_rings", num(r.rejected_rings));
  put("explore.undecided", num(r.undecided));
  put("explore.candidates", num(r.candidates.size()));
  for (const auto& [i, c] : r.histogram) put("histogram." + num(i), num(c));
  for (const auto& t : r.trials) {
    const std::string k = "trial." + num(t.index) + ".";
    if (!t.sampled) {
      put(k + "status", "rejected");
      continue;
    }
    put(k + "hilbert", join(t.hilbert));
    put(k + "nu", num(t.nu_m) + "," + num(t.nu_n));
    put(k + "first_nonzero", t.first_nonzero ? num(*t.first_nonzero) : (t.undecided ? "undecided" : "none"));
    if (t.escalated) put(k + "escalated", "1");
  }
  for (const auto& c : r.candidates) put("candidate." + num(c.trial) + ".profile", join(c.profile));
  return out;
}

std::string human_report(const ExploreReport& r) {
  std::ostringstream os;
  os << "explore seed " << r.seed << ", budget " << r.budget << ", field " << r.field << ", cutoff "
     << r.params.cutoff << ", p = " << r.params.p << ", q = " << r.params.q << "\n";
  if (r.vacuous) {
    os << "vacuously consistent: a module killed by m is a sum of copies of k\n";
    return os.str();
  }
  std::size_t sampled = 0;
  for (const auto& t : r.trials) sampled += t.sampled;
  os << r.trials.size() << " trials, " << sampled << " sampled, " << r.rejected_rings << " rings rejected, "
     << r.undecided << " undecided\n";
  if (!r.histogram.empty()) {
    os << "first nonzero Tor index:\n";
    for (const auto& [i, c] : r.histogram) os << "  " << i << ": " << c << "\n";
  }
  os << r.candidates.size() << " candidate(s)";
  os << (r.candidates.empty() ? "\n" : ":\n");
  for (const auto& c : r.candidates) os << c.dossier << "\n";
  return os.str();
}

template ExploreReport explore<PrimeField>(const PrimeField&, std::uint64_t, std::size_t, const ExploreParams&);
template ExploreReport explore<RationalField>(const RationalField&, std::uint64_t, std::size_t, const ExploreParams&);

}  // namespace artin
