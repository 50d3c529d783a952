#include "artin/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <set>
#include <tuple>

#include "artin/homology.hpp"
#include "artin/random.hpp"

namespace artin {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Vacuous: return "VACUOUS";
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NoCounterexample: return "NO_COUNTEREXAMPLE";
  }
  return "?";
}

const std::vector<Statement>& registry() {
  static const std::vector<Statement> r = {
      {"S1", "residue-field summands of early syzygies", "k is not a direct summand", {}, Subject::Pair},
      {"S2", "truncated Poincare product", "slightly modified version of a technique", {}, Subject::Pair},
      {"S3", "range and extremes of gamma", "γ(M)=0 if and only if mM=0", {}, Subject::Single},
      {"S4", "gamma and Betti identities", "In particular, there is an inequality", {"1", "2", "3"}, Subject::Pair},
      {"S5", "lower bound and integrality of gamma", "then γ(M) is an integer", {"1", "2"}, Subject::Pair},
      {"S6", "first Betti number and first syzygy", "b_1(M)=(e−γ(M))b_0(M)", {"1", "2"}, Subject::Pair},
      {"S7", "additivity of gamma", "γ(M)+γ(N)−γ(M⊗_RN)=e", {}, Subject::Pair},
      {"S8", "rational Poincare series of k", "1−γ(M⊗_RN)t", {}, Subject::Pair},
      {"S9", "vanishing when m^2 = 0", "then M or N is free", {}, Subject::Pair},
      {"S10", "Lescot recurrences", "b_{i+1}(M) ≥ eb_i(M) − ν(mM_i)", {"1", "2"}, Subject::Single},
      {"S11", "socle of modules killed by m^2", "Soc(M)=mM", {}, Subject::Single},
      {"S12", "socle of the ring", "Soc(R)=m²", {}, Subject::Pair},
      {"S13", "three vanishing Tor modules", "γ(M) and γ(N) are positive integers", {"1", "2", "3", "4"},
       Subject::Pair},
      {"S14", "extended ratio laws", "b_{i+1}(N)=eb_i(N)−ab_{i−1}(N)", {}, Subject::Pair},
      {"S15", "numerics of the canonical module", "λ(ω)=λ(R)=1+r+e", {"1", "2", "3", "4"}, Subject::Ring},
      {"S16", "vanishing against the canonical module", "e=a+1, γ(ω₁)=1, γ(M)=a", {}, Subject::Single},
      {"S17", "Gorenstein criteria via Tor(ω, ω)", "Tor_1^R(ω,ω)=0", {"2", "3", "4"}, Subject::Ring},
      {"S18", "vanishing against tensor products", "m(M_i⊗N)=m(M_{i+1}⊗N)=0", {}, Subject::Pair},
      {"S19", "large embedding dimension", "c(N)=max{4, log₂(b₁(N))+2}", {"1", "2", "gp"}, Subject::Pair},
      {"S20", "Auslander-Reiten for m^3 = 0", "four consecutive values of i", {"1", "2"}, Subject::Single},
      {"S21", "Auslander-Reiten for m^2 M = 0", "0<i≤max{3, ν(M), ν(mM)}", {}, Subject::Single},
      {"S22", "gamma of the Matlis dual", "γ(M^∨)=γ(M)^{−1}", {}, Subject::Single},
      {"S23", "self-Ext vanishing", "M is either free or injective", {"1", "2"}, Subject::Single},
      {"S24", "vanishing of all Tor forces m^3 = 0", "for all i>0, then m³=0", {}, Subject::Pair, true},
      {"S25", "graded case of the vanishing conjecture", "standard graded local ring", {"1", "2"}, Subject::Pair},
      {"S26", "Tor against the inclusion mN -> N", "Tor_i^R(k,μ_N)=0", {}, Subject::Pair},
      {"S27", "maximal minors annihilate", "then aM=0", {"1", "2"}, Subject::Single},
      {"S28", "two-generated faithful modules", "then ν(N)≤1", {}, Subject::Single},
      {"S29", "type at most two", "then R is Gorenstein", {"1", "2"}, Subject::Ring},
  };
  return r;
}

namespace {

std::pair<std::string, std::string> split_id(std::string_view id) {
  auto dot = id.find('.');
  if (dot == std::string_view::npos) return {std::string(id), ""};
  return {std::string(id.substr(0, dot)), std::string(id.substr(dot + 1))};
}

}  // namespace

const Statement& find_statement(std::string_view id) {
  auto [base, clause] = split_id(id);
  for (const auto& s : registry())
    if (s.id == base) {
      if (!clause.empty() && std::find(s.clauses.begin(), s.clauses.end(), clause) == s.clauses.end())
        throw UndefinedInputError("statement " + base + " has no clause '" + clause + "'");
      return s;
    }
  throw UndefinedInputError("unknown statement '" + std::string(id) + "'");
}

std::vector<std::string> suite_statement_ids() {
  std::vector<std::string> ids;
  for (int i = 1; i <= 29; ++i)
    if (i != 24 && i != 25) ids.push_back("S" + std::to_string(i));
  return ids;
}

namespace {

using std::size_t;

Rational q(size_t v) { return Rational(static_cast<unsigned long>(v)); }
std::string str(size_t v) { return std::to_string(v); }
std::string str(const Rational& v) { return v.get_str(); }
bool is_integer(const Rational& v) { return v.get_den() == 1; }

struct Part {
  std::string label;
  Status status;
  std::string hypothesis;
  std::string conclusion;
};

struct Outcome {
  std::vector<Part> parts;
  std::vector<std::pair<std::string, std::string>> facts;

  void vacuous(const std::string& label, const std::string& why) { parts.push_back({label, Status::Vacuous, why, ""}); }
  void result(const std::string& label, bool ok, const std::string& hyp, const std::string& concl) {
    parts.push_back({label, ok ? Status::Pass : Status::Fail, hyp, concl});
  }
  void fact(const std::string& k, const std::string& v) {
    for (const auto& f : facts)
      if (f.first == k) return;
    facts.emplace_back(k, v);
  }
};

/// Collects a list of equalities/inequalities; reports the first failure.
struct Claims {
  bool ok = true;
  std::string first_failure;
  std::size_t count = 0;
  void add(bool holds, const std::string& what) {
    ++count;
    if (!holds && ok) {
      ok = false;
      first_failure = what;
    }
  }
  std::string report(const std::string& summary) const { return ok ? summary : "violated: " + first_failure; }
};

template <Field F>
class Ctx {
 public:
  using Mod = FiniteModule<F>;

  explicit Ctx(const Instance<F>& in)
      : inst(in), ring(in.ring), inv(ring_invariants(*ring)), n(in.cutoff()) {
    auto c = in.param("cap");
    cap = c && *c > 0 ? static_cast<size_t>(*c) : 1500;
  }

  const Instance<F>& inst;
  RingPtr<F> ring;
  RingInvariants inv;
  size_t n;
  size_t cap;

  size_t lam() const { return inv.length; }
  size_t m2_length() const { return inv.length - 1 - inv.e; }
  bool m3_zero() const { return inv.loewy <= 2; }

  std::optional<size_t> betti(const Mod& x, size_t i) {
    auto res = resolve(x, 0);
    while (!res->terminated() && res->computed() < i) {
      const size_t c = res->computed();
      if (c >= 1 && res->betti(c) * lam() > cap) return std::nullopt;
      res->extend_to(c + 1);
    }
    return res->betti(i);
  }
  bool is_free(const Mod& x) { return *betti(x, 1) == 0; }
  bool m2_kills(const Mod& x) { return msub(x, 2).dim() == 0; }
  size_t nu_m(const Mod& x) { return min_gens(submodule(x, msub(x, 1))); }

  std::optional<Mod> syz(const Mod& x, size_t i) {
    if (i == 0) return x;
    if (!betti(x, i)) return std::nullopt;
    return resolve(x, i)->syzygy_module(i);
  }

  std::optional<size_t> tor(const Mod& a, const Mod& b, size_t i) {
    auto key = std::make_tuple(a.id(), b.id(), i);
    if (auto it = tors_.find(key); it != tors_.end()) return it->second;
    auto v = tor_side(a, b, i);
    if (!v) v = tor_side(b, a, i);
    tors_[key] = v;
    tors_[std::make_tuple(b.id(), a.id(), i)] = v;
    return v;
  }
  std::optional<size_t> ext(const Mod& a, const Mod& b, size_t i) { return tor(a, dual(b), i); }

  const Mod& dual(const Mod& x) {
    auto it = duals_.find(x.id());
    if (it == duals_.end()) it = duals_.emplace(x.id(), matlis_dual(x)).first;
    return it->second;
  }
  const Mod& omega() {
    if (!omega_) omega_ = canonical_module(ring);
    return *omega_;
  }
  const Mod& regular() {
    if (!regular_) regular_ = regular_module(ring);
    return *regular_;
  }
  const Mod& residue() {
    if (!residue_) residue_ = residue_field(ring);
    return *residue_;
  }
  const Mod& tensor(const Mod& a, const Mod& b) {
    auto key = std::make_pair(a.id(), b.id());
    auto it = tensors_.find(key);
    if (it == tensors_.end()) it = tensors_.emplace(key, tensor_over_R(a, b)).first;
    return it->second;
  }

  /// Largest k <= hi with Tor_1..Tor_k all zero; `blocked` when an unknown value stopped the scan.
  struct Prefix {
    size_t k = 0;
    bool blocked = false;
  };
  Prefix vanishing_prefix(const Mod& a, const Mod& b, size_t hi) {
    Prefix p;
    for (size_t i = 1; i <= hi; ++i) {
      auto t = tor(a, b, i);
      if (!t) {
        p.blocked = true;
        return p;
      }
      if (*t != 0) return p;
      p.k = i;
    }
    return p;
  }
  /// Tor_i for lo <= i <= hi.
  std::vector<std::optional<size_t>> window(const Mod& a, const Mod& b, size_t lo, size_t hi) {
    std::vector<std::optional<size_t>> w;
    for (size_t i = lo; i <= hi; ++i) w.push_back(tor(a, b, i));
    return w;
  }

 private:
  std::optional<size_t> tor_side(const Mod& a, const Mod& b, size_t i) {
    auto bi1 = betti(a, i + 1);
    if (!bi1) return std::nullopt;
    auto bi = *betti(a, i);
    if (bi == 0) return size_t{0};
    if (std::max(bi, *bi1) * b.dim() > cap) return std::nullopt;
    return tor_dim(a, b, i);
  }

  std::map<std::tuple<std::uint64_t, std::uint64_t, size_t>, std::optional<size_t>> tors_;
  std::map<std::uint64_t, Mod> duals_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, Mod> tensors_;
  std::optional<Mod> omega_, regular_, residue_;
};

/// Runs of `len` consecutive zeros among Tor_lo..Tor_hi (values may be unknown).
std::vector<size_t> zero_runs(const std::vector<std::optional<size_t>>& w, size_t lo, size_t len) {
  std::vector<size_t> starts;
  for (size_t s = 0; s + len <= w.size(); ++s) {
    bool all = true;
    for (size_t t = s; t < s + len; ++t)
      if (!w[t] || *w[t] != 0) all = false;
    if (all) starts.push_back(lo + s);
  }
  return starts;
}

std::string through(size_t lo, size_t hi) { return "[" + str(lo) + ", " + str(hi) + "]"; }

template <Field F>
class Checker {
 public:
  using Mod = FiniteModule<F>;

  Checker(Ctx<F>& ctx, Outcome& out, std::string clause) : c_(ctx), out_(out), clause_(std::move(clause)) {}

  bool want(const std::string& cl) const { return clause_.empty() || clause_ == cl; }

  // "premise ⇒ conclusion" checked in both directions: a false conclusion passes when the
  // premise fails too.
  void implication(const std::string& label, std::optional<bool> premise, const std::string& premise_text,
                   bool conclusion, const std::string& conclusion_text) {
    if (!premise) {
      if (conclusion)
        out_.vacuous(label, premise_text + " undecided within size limits");
      else
        out_.vacuous(label, premise_text + " undecided within size limits; conclusion false");
      return;
    }
    if (*premise) {
      out_.result(label, conclusion, premise_text + " holds", conclusion_text + (conclusion ? " holds" : " fails"));
    } else if (!conclusion) {
      out_.result(label, true, premise_text + " fails", conclusion_text + " fails (contrapositive)");
    } else {
      out_.vacuous(label, premise_text + " fails");
    }
  }

  // ---- S1 ----
  void s1(const std::string& lab, const Mod& m, const Mod& nn) {
    if (c_.is_free(nn)) return out_.vacuous(lab, "N is free");
    auto w = c_.window(m, nn, 1, c_.n);
    std::optional<size_t> last;
    for (size_t i = 1; i <= w.size(); ++i)
      if (w[i - 1] && *w[i - 1] == 0) last = i;
    if (!last) return out_.vacuous(lab, "no Tor_i vanishes for i in " + through(1, c_.n));
    Claims cl;
    size_t checked = 0;
    for (size_t j = 0; j < *last; ++j) {
      auto mj = c_.syz(m, j);
      if (!mj) break;
      cl.add(!k_summand(*mj), "k is a summand of M_" + str(j));
      checked = j;
    }
    out_.result(lab, cl.ok, "N not free, Tor_" + str(*last) + " = 0",
                cl.report("no k-summand in M_0..M_" + str(checked)));
  }

  // ---- S2 ----
  void s2(const std::string& lab, const Mod& m, const Mod& nn) {
    auto p = c_.vanishing_prefix(m, nn, c_.n);
    if (p.k == 0) return out_.vacuous(lab, "Tor_1 != 0 or undecided");
    const auto& t = c_.tensor(m, nn);
    Claims cl;
    size_t depth = 0;
    for (size_t i = 0; i <= p.k; ++i) {
      auto bt = c_.betti(t, i);
      if (!bt) break;
      size_t conv = 0;
      bool known = true;
      for (size_t a = 0; a <= i; ++a) {
        auto bm = c_.betti(m, a), bn = c_.betti(nn, i - a);
        if (!bm || !bn) {
          known = false;
          break;
        }
        conv += *bm * *bn;
      }
      if (!known) break;
      cl.add(*bt == conv, "coefficient " + str(i) + ": " + str(*bt) + " != " + str(conv));
      depth = i;
    }
    out_.result(lab, cl.ok, "Tor_i = 0 for i in " + through(1, p.k),
                cl.report("[P_{M⊗N}] = [P_M P_N] through degree " + str(depth)));
  }

  // ---- S3 ----
  void s3(const std::string& lab, const Mod& x) {
    if (x.dim() == 0) return out_.vacuous(lab, "module is zero");
    auto g = gamma(x);
    out_.fact("gamma." + lab, str(g));
    const Rational top = q(c_.lam()) - 1;
    Claims cl;
    cl.add(g >= 0 && g <= top, "γ outside [0, λ(R)−1]");
    cl.add((g == 0) == (msub(x, 1).dim() == 0), "γ = 0 does not match mM = 0");
    cl.add((g == top) == c_.is_free(x), "γ = λ(R)−1 does not match freeness");
    out_.result(lab, cl.ok, "M != 0", cl.report("γ = " + str(g) + " within range, extremes consistent"));
  }

  // ---- S4 ----
  void s4(const std::string& lab, const Mod& m, const Mod& nn) {
    if (m.dim() == 0) return out_.vacuous(lab, "M is zero");
    if (c_.is_free(nn)) return out_.vacuous(lab, "N is free");
    auto w = c_.window(m, nn, 1, c_.n);
    auto zero = [&](size_t i) { return i >= 1 && i <= w.size() && w[i - 1] && *w[i - 1] == 0; };
    const auto gm = gamma(m);
    const bool m2 = c_.m2_kills(m);
    Claims c1, c2, c3;
    std::vector<size_t> used1, used3;
    for (size_t i = 1; i <= w.size(); ++i) {
      if (!zero(i)) continue;
      auto ni = c_.syz(nn, i);
      auto nprev = c_.syz(nn, i - 1);
      if (!ni || !nprev) continue;
      const Rational bi = q(*c_.betti(nn, i)), bp = q(*c_.betti(nn, i - 1));
      const auto& ti = c_.tensor(m, *ni);
      const auto& tp = c_.tensor(m, *nprev);
      const auto gi = gamma(ti), gp = gamma(tp);
      used1.push_back(i);
      if (want("1")) {
        c1.add((gi + 1) * bi == (gm - gp) * bp, "identity at i = " + str(i));
        c1.add(bi <= gm * bp, "b_i(N) <= γ(M) b_{i-1}(N) at i = " + str(i));
      }
      if (want("2") && m2) {
        c2.add(msub(ti, 1).dim() == 0, "m(M⊗N_i) != 0 at i = " + str(i));
        c2.add(bi == (gm - gp) * bp, "b_i(N) = (γ(M) − γ(M⊗N_{i−1})) b_{i−1}(N) at i = " + str(i));
      }
      if (want("3") && m2 && i > 1 && zero(i - 1)) {
        used3.push_back(i);
        c3.add(bi == gm * bp, "b_i(N) = γ(M) b_{i−1}(N) at i = " + str(i));
      }
    }
    auto idx = [](const std::vector<size_t>& v) {
      std::string s;
      for (auto i : v) s += (s.empty() ? "" : ",") + str(i);
      return s;
    };
    if (want("1")) {
      if (used1.empty())
        out_.vacuous(lab + " (1)", "no usable i with Tor_i = 0");
      else
        out_.result(lab + " (1)", c1.ok, "Tor_i = 0 for i in {" + idx(used1) + "}", c1.report("length identity"));
    }
    if (want("2")) {
      if (!m2)
        out_.vacuous(lab + " (2)", "m²M != 0");
      else if (used1.empty())
        out_.vacuous(lab + " (2)", "no usable i with Tor_i = 0");
      else
        out_.result(lab + " (2)", c2.ok, "m²M = 0, Tor_i = 0 for i in {" + idx(used1) + "}",
                    c2.report("m(M⊗N_i) = 0 and Betti recursion"));
    }
    if (want("3")) {
      if (!m2)
        out_.vacuous(lab + " (3)", "m²M != 0");
      else if (used3.empty())
        out_.vacuous(lab + " (3)", "no i > 1 with Tor_{i−1} = Tor_i = 0");
      else
        out_.result(lab + " (3)", c3.ok, "m²M = 0, Tor_{i−1} = Tor_i = 0 for i in {" + idx(used3) + "}",
                    c3.report("b_i(N) = γ(M) b_{i−1}(N)"));
    }
  }

  // ---- S5 ----
  void s5(const std::string& lab, const Mod& m, const Mod& nn) {
    if (m.dim() == 0) return out_.vacuous(lab, "M is zero");
    if (c_.is_free(nn)) return out_.vacuous(lab, "N is free");
    const auto gm = gamma(m);
    auto window_zero = [&](size_t w) -> std::optional<bool> {
      auto p = c_.vanishing_prefix(m, nn, w);
      if (p.k >= w) return true;
      if (p.blocked) return std::nullopt;
      return false;
    };
    if (want("1")) {
      const size_t w = min_gens(nn);
      if (w > c_.n) {
        out_.vacuous(lab + " (1)", "window [1, ν(N)] exceeds the cutoff");
      } else {
        auto z = window_zero(w);
        if (!z || !*z)
          out_.vacuous(lab + " (1)", "Tor does not vanish on " + through(1, w));
        else
          out_.result(lab + " (1)", gm >= 1, "Tor_i = 0 on " + through(1, w), "γ(M) = " + str(gm) + " >= 1");
      }
    }
    if (want("2")) {
      if (!c_.m2_kills(m)) {
        out_.vacuous(lab + " (2)", "m²M != 0");
      } else {
        const size_t b1 = *c_.betti(nn, 1);
        const size_t w = static_cast<size_t>(std::floor(std::log2(static_cast<double>(b1)))) + 2;
        if (w > c_.n) {
          out_.vacuous(lab + " (2)", "window exceeds the cutoff");
        } else {
          auto z = window_zero(w);
          if (!z || !*z)
            out_.vacuous(lab + " (2)", "Tor does not vanish on " + through(1, w));
          else
            out_.result(lab + " (2)", is_integer(gm), "m²M = 0, Tor_i = 0 on " + through(1, w),
                        "γ(M) = " + str(gm) + " is an integer");
        }
      }
    }
  }

  // ---- S6 ----
  void s6(const std::string& lab, const Mod& m, const Mod& nn) {
    if (c_.is_free(m) || c_.is_free(nn)) return out_.vacuous(lab, "M or N is free");
    if (!c_.m2_kills(m)) return out_.vacuous(lab, "m²M != 0");
    auto p = c_.vanishing_prefix(m, nn, 2);
    if (p.k < 2) return out_.vacuous(lab, "Tor_1 or Tor_2 does not vanish");
    const auto gm = gamma(m);
    const size_t b0 = *c_.betti(m, 0), b1 = *c_.betti(m, 1);
    if (want("1"))
      out_.result(lab + " (1)", q(b1) == (q(c_.inv.e) - gm) * q(b0), "Tor_1 = Tor_2 = 0",
                  "b_1 = " + str(b1) + ", (e − γ(M)) b_0 = " + str((q(c_.inv.e) - gm) * q(b0)));
    if (want("2")) {
      auto m1 = *c_.syz(m, 1);
      const size_t lhs = msub(m1, 1).dim(), rhs = b0 * c_.m2_length();
      out_.result(lab + " (2)", lhs == rhs, "Tor_1 = Tor_2 = 0",
                  "λ(mM_1) = " + str(lhs) + ", λ(m²R^{b_0}) = " + str(rhs));
    }
  }

  // ---- S7 ----
  void s7(const std::string& lab, const Mod& m, const Mod& nn) {
    if (c_.is_free(m) || c_.is_free(nn)) return out_.vacuous(lab, "M or N is free");
    if (!c_.m2_kills(m) || !c_.m2_kills(nn)) return out_.vacuous(lab, "m²M != 0 or m²N != 0");
    if (c_.vanishing_prefix(m, nn, 2).k < 2) return out_.vacuous(lab, "Tor_1 or Tor_2 does not vanish");
    const Rational lhs = gamma(m) + gamma(nn) - gamma(c_.tensor(m, nn));
    out_.result(lab, lhs == q(c_.inv.e), "Tor_1 = Tor_2 = 0", "γ(M)+γ(N)−γ(M⊗N) = " + str(lhs));
  }

  // ---- S8 ----
  void s8(const std::string& lab, const Mod& m, const Mod& nn) {
    if (c_.is_free(m) || c_.is_free(nn)) return out_.vacuous(lab, "M or N is free");
    if (!c_.m2_kills(m) || !c_.m2_kills(nn)) return out_.vacuous(lab, "m²M != 0 or m²N != 0");
    auto p = c_.vanishing_prefix(m, nn, c_.n);
    if (p.k < c_.n) return out_.vacuous(lab, "Tor does not vanish through " + str(c_.n));
    // The identity is forced through degree n − 1.
    std::vector<Rational> pk;
    for (size_t i = 0; i + 1 <= c_.n; ++i) {
      auto b = c_.betti(c_.residue(), i);
      if (!b) break;
      pk.push_back(q(*b));
    }
    const auto gm = gamma(m), gn = gamma(nn), gt = gamma(c_.tensor(m, nn));
    // P_k · (1 − γ(M)t)(1 − γ(N)t) against 1 − γ(M⊗N)t.
    std::vector<Rational> den = {1, -(gm + gn), gm * gn};
    Claims cl;
    for (size_t d = 0; d < pk.size(); ++d) {
      Rational lhs = 0;
      for (size_t a = 0; a <= 2 && a <= d; ++a) lhs += den[a] * pk[d - a];
      Rational rhs = d == 0 ? Rational(1) : d == 1 ? Rational(-gt) : Rational(0);
      cl.add(lhs == rhs, "coefficient of t^" + str(d));
    }
    out_.fact("gamma." + lab, str(gm) + "," + str(gn) + "," + str(gt));
    out_.result(lab, cl.ok, "Tor_i = 0 through " + str(c_.n),
                cl.report("P_k identity through degree " + str(pk.size() - 1)));
  }

  // ---- S9 ----
  void s9(const std::string& lab, const Mod& m, const Mod& nn) {
    if (c_.inv.loewy > 1) return out_.vacuous(lab, "m² != 0");
    if (c_.n < 2) return out_.vacuous(lab, "cutoff below 2");
    search_implication(lab, tor_search(m, nn, 2, 1), 2, "Tor_i = 0", c_.is_free(m) || c_.is_free(nn),
                       "M or N free");
  }

  // ---- S10 ----
  void s10(const std::string& lab, const Mod& x) {
    if (!c_.m3_zero()) return out_.vacuous(lab, "m³ != 0");
    // With m² = 0 every syzygy is a sum of copies of k.
    if (c_.inv.loewy < 2) return out_.vacuous(lab, "m² = 0");
    if (c_.is_free(x)) return out_.vacuous(lab, "M is free");
    if (!c_.m2_kills(x)) return out_.vacuous(lab, "m²M != 0");
    Claims c1, c2;
    size_t depth = 0;
    size_t uses2 = 0;
    std::optional<Mod> cur = x;
    for (size_t i = 0; i + 1 <= c_.n; ++i) {
      auto next = c_.syz(x, i + 1);
      if (!next) break;
      const size_t bi = *c_.betti(x, i), bn = *c_.betti(x, i + 1);
      const size_t nu = c_.nu_m(*cur);
      const long bound = static_cast<long>(c_.inv.e * bi) - static_cast<long>(nu);
      const bool has_k = k_summand(*next);
      c1.add(static_cast<long>(bn) >= bound, "inequality at i = " + str(i));
      c1.add((static_cast<long>(bn) == bound) == !has_k, "equality vs k-summand of M_" + str(i + 1));
      if (i > 1 && !k_summand(*cur)) {
        ++uses2;
        c2.add(nu == c_.inv.type * *c_.betti(x, i - 1), "ν(mM_i) = a b_{i−1} at i = " + str(i));
      }
      depth = i;
      cur = std::move(next);
    }
    if (want("1"))
      out_.result(lab + " (1)", c1.ok, "m³ = 0, M not free, m²M = 0",
                  c1.report("inequality and equality criterion for 0 <= i <= " + str(depth)));
    if (want("2")) {
      if (uses2 == 0)
        out_.vacuous(lab + " (2)", "no i > 1 with M_i free of k-summands within reach");
      else
        out_.result(lab + " (2)", c2.ok, "no k-summand in M_i (" + str(uses2) + " indices)",
                    c2.report("ν(mM_i) = a b_{i−1}"));
    }
  }

  // ---- S11 ----
  void s11(const std::string& lab, const Mod& x) {
    if (!c_.m2_kills(x)) return out_.vacuous(lab, "m²M != 0");
    if (k_summand(x)) return out_.vacuous(lab, "k is a summand");
    out_.result(lab, socle(x) == msub(x, 1), "m²M = 0, no k-summand", "Soc(M) = mM");
  }

  // ---- S12 ----
  void s12(const std::string& lab, const Mod& m, const Mod& nn) {
    if (!c_.m3_zero()) return out_.vacuous(lab, "m³ != 0");
    if (c_.is_free(m) || c_.is_free(nn)) return out_.vacuous(lab, "M or N is free");
    if (c_.n < 3) return out_.vacuous(lab, "cutoff below 3");
    search_implication(lab, tor_search(m, nn, 3, 1), 3, "Tor_i = 0", c_.inv.type == c_.m2_length(),
                       "Soc(R) = m²");
  }

  // ---- S13 / S14 / S18 shared hypothesis ----
  struct Window3 {
    bool ok = false;
    size_t j = 0;
    std::string why;
  };
  Window3 three_window(const Mod& m, const Mod& nn, bool largest) {
    Window3 w;
    if (!c_.m3_zero()) return w.why = "m³ != 0", w;
    if (c_.is_free(m) || c_.is_free(nn)) return w.why = "M or N is free", w;
    if (!c_.m2_kills(m) || !c_.m2_kills(nn)) return w.why = "m²M != 0 or m²N != 0", w;
    if (c_.n < 3) return w.why = "cutoff below 3", w;
    auto tor = c_.window(m, nn, 1, c_.n);
    auto runs = zero_runs(tor, 1, 3);
    if (auto pj = c_.inst.param("j")) {
      if (*pj < 1 || std::find(runs.begin(), runs.end(), static_cast<size_t>(*pj)) == runs.end())
        return w.why = "Tor_j..Tor_{j+2} != 0 for j = " + std::to_string(*pj), w;
      w.ok = true;
      w.j = static_cast<size_t>(*pj);
      return w;
    }
    if (runs.empty()) return w.why = "no three consecutive vanishing Tor within " + through(1, c_.n), w;
    w.ok = true;
    w.j = largest ? runs.back() : runs.front();
    return w;
  }

  // b_{i+1}(M) = γ(N) b_i(M) and b_{i+1}(N) = γ(M) b_i(N) for i <= upto, each side as far
  // as its resolution is affordable. Returns a description of the depth reached.
  std::string ratio_laws(const Mod& m, const Mod& nn, const Rational& gm, const Rational& gn, size_t upto,
                         Claims& cl) {
    size_t dm = 0, dn = 0;
    bool any_m = false, any_n = false;
    for (size_t i = 0; i <= upto; ++i) {
      auto bm = c_.betti(m, i), bm1 = c_.betti(m, i + 1);
      if (!bm || !bm1) break;
      cl.add(q(*bm1) == gn * q(*bm), "b_{i+1}(M)/b_i(M) = γ(N) at i = " + str(i));
      dm = i;
      any_m = true;
    }
    for (size_t i = 0; i <= upto; ++i) {
      auto bn = c_.betti(nn, i), bn1 = c_.betti(nn, i + 1);
      if (!bn || !bn1) break;
      cl.add(q(*bn1) == gm * q(*bn), "b_{i+1}(N)/b_i(N) = γ(M) at i = " + str(i));
      dn = i;
      any_n = true;
    }
    auto side = [](bool any, size_t d) { return any ? str(d) : std::string("none"); };
    if (dm == dn && any_m && any_n) return str(dm);
    return side(any_m, dm) + " for M, " + side(any_n, dn) + " for N";
  }

  void s13(const std::string& lab, const Mod& m, const Mod& nn) {
    auto w = three_window(m, nn, true);
    if (!w.ok) return out_.vacuous(lab, w.why);
    const auto gm = gamma(m), gn = gamma(nn);
    const std::string hyp = "Tor_j = Tor_{j+1} = Tor_{j+2} = 0, j = " + str(w.j);
    out_.fact("j." + lab, str(w.j));
    out_.fact("gamma.M." + lab, str(gm));
    out_.fact("gamma.N." + lab, str(gn));
    if (want("1"))
      out_.result(lab + " (1)", is_integer(gm) && is_integer(gn) && gm > 0 && gn > 0, hyp,
                  "γ(M) = " + str(gm) + ", γ(N) = " + str(gn) + " positive integers");
    if (want("2")) {
      Claims cl;
      auto reach = ratio_laws(m, nn, gm, gn, w.j + 1, cl);
      out_.result(lab + " (2)", cl.ok, hyp, cl.report("ratio laws for 0 <= i <= " + reach));
    }
    if (want("3")) {
      Claims cl;
      std::string reach = "none";
      for (size_t i = 0; i <= w.j; ++i) {
        auto mi = c_.syz(m, i), ni = c_.syz(nn, i);
        if (mi) cl.add(gamma(*mi) == gm, "γ(M_i) = γ(M) at i = " + str(i));
        if (ni) cl.add(gamma(*ni) == gn, "γ(N_i) = γ(N) at i = " + str(i));
        if (!mi && !ni) break;
        reach = str(i) + (mi && ni ? "" : " (one side)");
      }
      out_.result(lab + " (3)", cl.ok, hyp, cl.report("γ constant along syzygies for i <= " + reach));
    }
    if (want("4"))
      out_.result(lab + " (4)", gm + gn == q(c_.inv.e) && gm * gn == q(c_.inv.type), hyp,
                  "γ(M)+γ(N) = " + str(gm + gn) + " (e = " + str(c_.inv.e) + "), γ(M)γ(N) = " + str(gm * gn) +
                      " (a = " + str(c_.inv.type) + ")");
  }

  void s14(const std::string& lab, const Mod& m, const Mod& nn) {
    auto w = three_window(m, nn, false);
    if (!w.ok) return out_.vacuous(lab, w.why);
    // Largest l <= n − 1 with no k-summand in M_i and N_i for i < l.
    size_t l = 0;
    for (size_t i = 0; i + 1 <= c_.n - 1; ++i) {
      auto mi = c_.syz(m, i), ni = c_.syz(nn, i);
      if (!mi || !ni || k_summand(*mi) || k_summand(*ni)) break;
      l = i + 1;
    }
    if (l < w.j + 3) return out_.vacuous(lab, "no l >= j+3 (j = " + str(w.j) + ") within reach");
    const auto gm = gamma(m), gn = gamma(nn);
    Claims cl;
    auto reach = ratio_laws(m, nn, gm, gn, l - 1, cl);
    out_.result(lab, cl.ok,
                "j = " + str(w.j) + ", l = " + str(l) + ", no k-summand in M_i, N_i for i < l",
                cl.report("ratio laws for 0 <= i <= " + reach + " (wanted " + str(l - 1) + ")"));
  }

  // ---- S15 ----
  void s15() {
    const std::string lab = "R";
    if (!c_.m3_zero() || c_.inv.loewy < 2) return out_.vacuous(lab, "needs m³ = 0 and m² != 0");
    const auto& w = c_.omega();
    const size_t e = c_.inv.e, a = c_.inv.type, r = c_.inv.r, lam = c_.lam();
    auto w1 = c_.syz(w, 1);
    if (want("1"))
      out_.result(lab + " (1)", w.dim() == lam && lam == 1 + r + e, "m³ = 0, m² != 0",
                  "λ(ω) = " + str(w.dim()) + ", λ(R) = " + str(lam) + ", 1+r+e = " + str(1 + r + e));
    if (want("2")) {
      const size_t nu = c_.nu_m(w);
      out_.result(lab + " (2)", nu + a == e + r, "m³ = 0, m² != 0",
                  "ν(mω) = " + str(nu) + ", e+r−a = " + std::to_string(long(e + r) - long(a)));
    }
    if (want("3"))
      out_.result(lab + " (3)", w1->dim() == (a - 1) * (1 + r + e), "m³ = 0, m² != 0",
                  "λ(ω₁) = " + str(w1->dim()) + ", (a−1)(1+r+e) = " + str((a - 1) * (1 + r + e)));
    if (want("4")) {
      if (a != r || a < 2)
        out_.vacuous(lab + " (4)", "needs a = r >= 2");
      else if (k_summand(*w1))
        out_.vacuous(lab + " (4)", "k is a summand of ω₁");
      else {
        const size_t nu = min_gens(*w1);
        const auto g = gamma(*w1);
        out_.result(lab + " (4)", nu == e * (a - 1) && g == Rational(long(1 + a)) / long(e),
                    "a = r, no k-summand in ω₁", "ν(ω₁) = " + str(nu) + ", γ(ω₁) = " + str(g));
      }
    }
  }

  // ---- S16 ----
  void s16(const std::string& lab, const Mod& x) {
    if (c_.inv.gorenstein) return out_.vacuous(lab, "R is Gorenstein");
    if (!c_.m3_zero()) return out_.vacuous(lab, "m³ != 0");
    if (c_.is_free(x)) return out_.vacuous(lab, "M is free");
    if (!c_.m2_kills(x)) return out_.vacuous(lab, "m²M != 0");
    const auto& w = c_.omega();
    auto tor = c_.window(x, w, 1, c_.n);
    std::vector<size_t> runs;
    for (auto j : zero_runs(tor, 1, 3))
      if (j >= 2) runs.push_back(j);
    if (runs.empty()) return out_.vacuous(lab, "no j >= 2 with Tor_j..Tor_{j+2}(M, ω) = 0 within " + through(1, c_.n));
    const size_t j = runs.back();
    auto w1 = c_.syz(w, 1);
    const auto gw1 = gamma(*w1), gm = gamma(x);
    Claims cl;
    cl.add(c_.inv.e == c_.inv.type + 1, "e != a + 1");
    cl.add(gw1 == 1, "γ(ω₁) != 1");
    cl.add(gm == q(c_.inv.type), "γ(M) != a");
    const size_t b0 = *c_.betti(x, 0);
    for (size_t i = 1; i <= j + 2; ++i) {
      auto b = c_.betti(x, i);
      cl.add(b && *b == b0, "b_" + str(i) + "(M) != b_0(M)");
    }
    out_.fact("e", str(c_.inv.e));
    out_.fact("a", str(c_.inv.type));
    out_.fact("gamma." + lab, str(gm));
    out_.fact("gamma.omega1", str(gw1));
    out_.result(lab, cl.ok, "Tor_j..Tor_{j+2}(M, ω) = 0 with j = " + str(j),
                cl.report("e = " + str(c_.inv.e) + ", a = " + str(c_.inv.type) + ", γ(M) = " + str(gm) +
                          ", γ(ω₁) = " + str(gw1) + ", b_0 = ... = b_" + str(j + 2) + " = " + str(b0)));
  }

  // ---- S17 ----
  void s17() {
    if (!c_.m3_zero()) return out_.vacuous("R", "m³ != 0");
    const bool g = c_.inv.gorenstein;
    const auto& w = c_.omega();
    const std::string gtext = g ? "R Gorenstein" : "R not Gorenstein";
    auto iff = [&](const std::string& lab, std::optional<bool> clause, const std::string& text) {
      if (!clause) return out_.vacuous(lab, text + " undecided within size limits");
      out_.result(lab, *clause == g, gtext, text + (*clause ? " holds" : " fails"));
    };
    auto t = [&](size_t i) { return c_.tor(w, w, i); };
    if (want("2")) {
      auto t1 = t(1);
      out_.fact("tor.omega.omega.1", t1 ? str(*t1) : "?");
      iff("R (2)", t1 ? std::optional<bool>(*t1 == 0) : std::nullopt, "Tor_1(ω,ω) = 0");
    }
    if (want("3")) {
      auto t2 = t(2), t3 = t(3);
      std::optional<bool> v;
      if ((t2 && *t2) || (t3 && *t3))
        v = false;
      else if (t2 && t3)
        v = true;
      iff("R (3)", v, "Tor_2(ω,ω) = Tor_3(ω,ω) = 0");
    }
    if (want("4")) {
      if (c_.n < 5) return out_.vacuous("R (4)", "cutoff below 5");
      auto win = c_.window(w, w, 3, c_.n);
      const bool found = !zero_runs(win, 3, 3).empty();
      std::optional<bool> v = found;
      if (!found && g) v.reset();
      iff("R (4)", v, "Tor_j..Tor_{j+2}(ω,ω) = 0 for some j in " + through(3, c_.n - 2));
    }
  }

  // ---- S18 ----
  void s18(const std::string& lab, const Mod& m, const Mod& nn) {
    auto w = three_window(m, nn, true);
    if (!w.ok) return out_.vacuous(lab, w.why);
    Claims cl;
    size_t last = 0;
    for (size_t i = 0; i <= w.j; ++i) {
      auto mi = c_.syz(m, i), mi1 = c_.syz(m, i + 1);
      auto t = c_.tor(m, nn, i + 1);
      if (!mi || !mi1 || !t) break;
      const bool lhs = *t == 0;
      const bool rhs = msub(c_.tensor(*mi, nn), 1).dim() == 0 && msub(c_.tensor(*mi1, nn), 1).dim() == 0;
      cl.add(lhs == rhs, "equivalence at i = " + str(i));
      last = i;
    }
    out_.result(lab, cl.ok, "j = " + str(w.j), cl.report("equivalence for 0 <= i <= " + str(last)));
  }

  // ---- S19 ----
  void s19(const std::string& lab, const Mod& m, const Mod& nn) {
    const long e = long(c_.inv.e), h = long(c_.inv.loewy), l2 = long(c_.m2_length());
    const bool ring_ok = e >= l2 - h + 4;
    const bool concl = c_.is_free(m) || c_.is_free(nn);
    if (want("1")) {
      if (!ring_ok)
        out_.vacuous(lab + " (1)", "ν(m) < λ(m²) − ℓℓ(R) + 4");
      else if (!c_.m2_kills(m))
        out_.vacuous(lab + " (1)", "m²M != 0");
      else {
        const size_t b1 = *c_.betti(nn, 1);
        size_t cn = 4;
        if (b1 > 0) cn = std::max<size_t>(4, static_cast<size_t>(std::floor(std::log2(double(b1)))) + 2);
        if (cn > c_.n) {
          out_.vacuous(lab + " (1)", "window [1, c(N)] exceeds the cutoff");
        } else {
          auto p = c_.vanishing_prefix(m, nn, cn);
          std::optional<bool> premise = p.k >= cn;
          if (!*premise && p.blocked) premise.reset();
          implication(lab + " (1)", premise, "Tor_i = 0 on " + through(1, cn), concl, "M or N free");
        }
      }
    }
    if (want("2")) {
      if (!ring_ok)
        out_.vacuous(lab + " (2)", "ν(m) < λ(m²) − ℓℓ(R) + 4");
      else if (!c_.m3_zero())
        out_.vacuous(lab + " (2)", "m³ != 0");
      else if (c_.n < 4)
        out_.vacuous(lab + " (2)", "cutoff below 4");
      else {
        search_implication(lab + " (2)", tor_search(m, nn, 2, 3), 2, "Tor_i = Tor_{i+1} = Tor_{i+2} = 0", concl,
                           "M or N free");
      }
    }
    if (want("gp")) {
      const long coef = l2 + 2 - h;
      Claims cl;
      size_t depth = 0;
      for (const Mod* x : {&m, &nn})
        for (size_t i = 1; i + 1 <= c_.n; ++i) {
          auto b0 = c_.betti(*x, i - 1), b1 = c_.betti(*x, i), b2 = c_.betti(*x, i + 1);
          if (!b0 || !b1 || !b2) break;
          cl.add(long(*b2) >= e * long(*b1) - coef * long(*b0), "inequality at i = " + str(i));
          depth = std::max(depth, i);
        }
      out_.result(lab + " (gp)", cl.ok, "any module",
                  cl.report("b_{i+1} >= e b_i − (λ(m²)+2−ℓℓ(R)) b_{i−1} for i <= " + str(depth)));
    }
  }

  // Ext^i(X, X ⊕ R) = 0.
  std::optional<bool> ext_self_free_zero(const Mod& x, size_t i) {
    auto a = c_.ext(x, x, i);
    if (a && *a) return false;
    auto b = c_.tor(x, c_.omega(), i);
    if (b && *b) return false;
    if (!a || !b) return std::nullopt;
    return true;
  }
  std::optional<bool> ext_self_zero(const Mod& x, size_t i) {
    auto a = c_.ext(x, x, i);
    if (!a) return std::nullopt;
    return *a == 0;
  }
  // Looks for `len` consecutive indices in [lo, n] where pred holds, scanning until the first
  // undecidable index. A miss is reported as false through the last decided index `hi`.
  struct Search {
    std::optional<bool> found;
    size_t hi = 0;
    std::string window(size_t lo) const { return through(lo, hi); }
  };
  Search search(size_t lo, size_t len, const std::function<std::optional<bool>(size_t)>& pred) {
    Search r;
    r.hi = lo - 1;
    size_t run = 0;
    for (size_t i = lo; i <= c_.n; ++i) {
      auto v = pred(i);
      if (!v) break;
      r.hi = i;
      run = *v ? run + 1 : 0;
      if (run >= len) {
        r.found = true;
        return r;
      }
    }
    if (r.hi + 1 >= lo + len) r.found = false;
    return r;
  }
  Search tor_search(const Mod& m, const Mod& nn, size_t lo, size_t len) {
    return search(lo, len, [&](size_t i) -> std::optional<bool> {
      auto t = c_.tor(m, nn, i);
      if (!t) return std::nullopt;
      return *t == 0;
    });
  }
  // "for some i in [lo, hi]" with hi the decided range.
  void search_implication(const std::string& label, const Search& s, size_t lo, const std::string& what,
                          bool conclusion, const std::string& conclusion_text) {
    implication(label, s.found, what + " for some i in " + through(lo, s.found ? s.hi : c_.n),
                conclusion, conclusion_text);
  }

  std::optional<bool> all_in(size_t lo, size_t hi, const std::function<std::optional<bool>(size_t)>& pred) {
    bool unknown = false;
    for (size_t i = lo; i <= hi; ++i) {
      auto v = pred(i);
      if (!v)
        unknown = true;
      else if (!*v)
        return false;
    }
    if (unknown) return std::nullopt;
    return true;
  }

  // ---- S20 ----
  void s20(const std::string& lab, const Mod& x) {
    if (!c_.m3_zero()) return out_.vacuous(lab, "m³ != 0");
    const bool free = c_.is_free(x);
    if (want("1")) {
      if (c_.n < 5)
        out_.vacuous(lab + " (1)", "cutoff below 5");
      else
        search_implication(lab + " (1)", search(2, 4, [&](size_t i) { return ext_self_free_zero(x, i); }), 2,
                           "Ext^i..Ext^{i+3}(M, M⊕R) = 0", free, "M free");
    }
    if (want("2")) {
      if (!c_.inv.gorenstein)
        out_.vacuous(lab + " (2)", "R not Gorenstein");
      else
        search_implication(lab + " (2)", search(1, 1, [&](size_t i) { return ext_self_zero(x, i); }), 1,
                           "Ext^i(M, M) = 0", free, "M free");
    }
  }

  // ---- S21 ----
  void s21(const std::string& lab, const Mod& x) {
    if (!c_.m2_kills(x)) return out_.vacuous(lab, "m²M != 0");
    const size_t w = std::max({size_t{3}, min_gens(x), x.dim() ? c_.nu_m(x) : 0});
    if (w > c_.n) return out_.vacuous(lab, "window [1, " + str(w) + "] exceeds the cutoff");
    implication(lab, all_in(1, w, [&](size_t i) { return ext_self_free_zero(x, i); }),
                "Ext^i(M, M⊕R) = 0 on " + through(1, w), c_.is_free(x), "M free");
  }

  // ---- S22 ----
  void s22(const std::string& lab, const Mod& x) {
    if (c_.inv.loewy < 2) return out_.vacuous(lab, "m² = 0");
    if (x.dim() == 0) return out_.vacuous(lab, "M is zero");
    if (!c_.m2_kills(x)) return out_.vacuous(lab, "m²M != 0");
    const auto g = gamma(x);
    const auto gd = gamma(c_.dual(x));
    search_implication(lab, search(1, 1, [&](size_t i) { return ext_self_zero(x, i); }), 1, "Ext^i(M, M) = 0",
                       g != 0 && gd * g == 1, "γ(M^∨) = 1/γ(M) with γ(M) = " + str(g) + ", γ(M^∨) = " + str(gd));
  }

  // ---- S23 ----
  void s23(const std::string& lab, const Mod& x) {
    if (x.dim() == 0) return out_.vacuous(lab, "M is zero");
    if (!c_.m2_kills(x)) return out_.vacuous(lab, "m²M != 0");
    const bool concl = c_.inv.loewy <= 1 && (c_.is_free(x) || c_.is_free(c_.dual(x)));
    const std::string ctext = "m² = 0 and M free or injective";
    if (want("1")) {
      const size_t w = std::max({size_t{3}, min_gens(x), c_.nu_m(x)});
      if (w > c_.n)
        out_.vacuous(lab + " (1)", "window exceeds the cutoff");
      else
        implication(lab + " (1)", all_in(1, w, [&](size_t i) { return ext_self_zero(x, i); }),
                    "Ext^i(M, M) = 0 on " + through(1, w), concl, ctext);
    }
    if (want("2")) {
      if (!c_.m3_zero())
        out_.vacuous(lab + " (2)", "m³ != 0");
      else if (c_.n < 3)
        out_.vacuous(lab + " (2)", "cutoff below 3");
      else
        search_implication(lab + " (2)", search(1, 3, [&](size_t i) { return ext_self_zero(x, i); }), 1,
                           "Ext^i..Ext^{i+2}(M, M) = 0", concl, ctext);
    }
  }

  // ---- S24 / S25 ----
  struct AllVanish {
    std::optional<bool> holds;
    std::string why;
  };
  AllVanish all_vanish(const Mod& m, const Mod& nn, size_t hi) {
    auto p = c_.vanishing_prefix(m, nn, hi);
    if (p.k >= hi) return {true, "Tor_i = 0 on " + through(1, hi)};
    if (p.blocked) return {std::nullopt, "Tor_" + str(p.k + 1) + " out of reach"};
    return {false, "Tor_" + str(p.k + 1) + " != 0"};
  }

  void s24(const std::string& lab, const Mod& m, const Mod& nn) {
    if (m.dim() == 0 || nn.dim() == 0) return out_.vacuous(lab, "a module is zero");
    if (!c_.m2_kills(m) || !c_.m2_kills(nn)) return out_.vacuous(lab, "m²M != 0 or m²N != 0");
    auto v = all_vanish(m, nn, c_.n);
    if (!v.holds) return out_.vacuous(lab, v.why);
    if (c_.m3_zero()) {
      if (!*v.holds) return out_.vacuous(lab, v.why);
      out_.parts.push_back({lab, Status::NoCounterexample, v.why, "m³ = 0"});
      return;
    }
    if (!*v.holds) {
      out_.parts.push_back({lab, Status::NoCounterexample, v.why, "m³ != 0 and vanishing fails"});
      return;
    }
    auto again = all_vanish(m, nn, 2 * c_.n);
    if (again.holds && !*again.holds) {
      out_.parts.push_back({lab, Status::NoCounterexample, again.why + " at doubled cutoff", "m³ != 0"});
      return;
    }
    out_.parts.push_back({lab, Status::Fail, again.why + " (doubled cutoff)", "m³ != 0: candidate counterexample"});
  }

  void s25(const std::string& lab, const Mod& m, const Mod& nn) {
    if (m.dim() == 0 || nn.dim() == 0) return out_.vacuous(lab, "a module is zero");
    if (!c_.m2_kills(m) || !c_.m2_kills(nn)) return out_.vacuous(lab, "m²M != 0 or m²N != 0");
    auto v = all_vanish(m, nn, c_.n);
    if (want("1")) {
      std::optional<bool> premise = v.holds;
      if (premise && *premise && !c_.m3_zero()) {
        auto again = all_vanish(m, nn, 2 * c_.n);
        premise = again.holds;
      }
      implication(lab + " (1)", premise, "Tor_i = 0 through the cutoff", c_.m3_zero(), "m³ = 0");
    }
    if (want("2")) {
      if (c_.is_free(m) || c_.is_free(nn))
        out_.vacuous(lab + " (2)", "M or N is free");
      else if (!v.holds || !*v.holds)
        out_.vacuous(lab + " (2)", v.why);
      else {
        size_t d = 0;
        while (d < c_.n && c_.betti(c_.residue(), d + 1)) ++d;
        auto rep = koszul_test(c_.ring, d);
        out_.result(lab + " (2)", rep.consistent, v.why,
                    rep.consistent ? "P_k = Hilb_R(−t)^{-1} through degree " + str(d)
                                   : "Koszul mismatch at degree " + str(*rep.first_mismatch));
      }
    }
  }

  // ---- S26 ----
  void s26(const std::string& lab, const Mod& m, const Mod& nn) {
    if (!c_.m2_kills(m)) return out_.vacuous(lab, "m²M != 0");
    if (c_.is_free(nn)) return out_.vacuous(lab, "N is free");
    auto p = c_.vanishing_prefix(m, nn, c_.n);
    if (p.k < 2) return out_.vacuous(lab, "Tor_1 or Tor_2 does not vanish");
    auto mu = max_ideal_inclusion(nn);
    Claims cl;
    size_t last = 0;
    bool any = false;
    for (size_t i = 0; i + 1 <= p.k; ++i) {
      auto bk = c_.betti(c_.residue(), i + 1);
      if (!bk || *bk * std::max(mu.source.dim(), nn.dim()) > c_.cap) break;
      cl.add(tor_induced_k(mu, i) == 0, "Tor_" + str(i) + "(k, μ_N) != 0");
      last = i;
      any = true;
    }
    if (!any) return out_.vacuous(lab, "Tor(k, μ_N) out of reach");
    out_.result(lab, cl.ok, "m²M = 0, Tor_i = 0 on " + through(1, p.k),
                cl.report("Tor_i(k, μ_N) = 0 for 0 <= i <= " + str(last)));
  }

  // ---- S27 ----
  void s27(const std::string& lab, const Mod& x) {
    const size_t nu = min_gens(x);
    if (nu == 0) return out_.vacuous(lab, "M is zero");
    if (nu > 8) return out_.vacuous(lab, "ν(M) > 8");
    auto phi = minimal_presentation(x);
    // C(cols, nu) · nu! determinant terms.
    double work = 1;
    for (size_t i = 0; i < nu; ++i) work *= double(phi.cols() - std::min(i, phi.cols()));
    if (work > 2e5) return out_.vacuous(lab, "too many maximal minors");
    auto img = wedge_image(phi);
    if (want("1")) {
      bool ok = true;
      for (size_t i = 0; i < img.dim() && ok; ++i) ok = ring_action(x, img.basis().row_vec(i)).is_zero();
      out_.result(lab + " (1)", ok, "0 -> M_1 -> R^" + str(nu) + " -> M -> 0",
                  "minor ideal of dimension " + str(img.dim()) + " annihilates M");
    }
    if (want("2")) {
      if (!is_faithful(x))
        out_.vacuous(lab + " (2)", "M not faithful");
      else
        out_.result(lab + " (2)", img.dim() == 0, "M faithful", "Λ^n(φ) has image of dimension " + str(img.dim()));
    }
  }

  // ---- S28 ----
  void s28(const std::string& lab, const Mod& x) {
    if (min_gens(x) != 2) return out_.vacuous(lab, "ν(M) != 2");
    if (!is_faithful(x)) return out_.vacuous(lab, "M not faithful");
    auto t = c_.tor(x, x, 2);
    const size_t b1 = *c_.betti(x, 1);
    implication(lab, t ? std::optional<bool>(*t == 0) : std::nullopt, "Tor_2(M, M) = 0", b1 <= 1,
                "ν(M_1) = " + str(b1) + " <= 1");
  }

  // ---- S29 ----
  void s29() {
    if (c_.inv.type > 2) return out_.vacuous("R", "type > 2");
    const auto& w = c_.omega();
    const bool g = c_.inv.gorenstein;
    if (want("1")) {
      auto t2 = c_.tor(w, w, 2);
      implication("R (1)", t2 ? std::optional<bool>(*t2 == 0) : std::nullopt, "Tor_2(ω, ω) = 0", g,
                  "R Gorenstein");
    }
    if (want("2")) {
      const auto& reg = c_.regular();
      auto e1 = c_.ext(w, reg, 1), e2 = c_.ext(w, reg, 2);
      std::optional<bool> premise;
      if ((e1 && *e1) || (e2 && *e2))
        premise = false;
      else if (e1 && e2)
        premise = true;
      implication("R (2)", premise, "Ext^1(ω, R) = Ext^2(ω, R) = 0", g, "R Gorenstein");
    }
  }

 private:
  Ctx<F>& c_;
  Outcome& out_;
  std::string clause_;
};

template <Field F>
std::vector<std::pair<std::string, std::pair<const FiniteModule<F>*, const FiniteModule<F>*>>> pairs_of(
    const Instance<F>& inst) {
  std::vector<std::pair<std::string, std::pair<const FiniteModule<F>*, const FiniteModule<F>*>>> out;
  const auto& ms = inst.modules;
  if (ms.empty()) return out;
  if (ms.size() == 1) {
    out.push_back({ms[0].first + "," + ms[0].first, {&ms[0].second, &ms[0].second}});
    return out;
  }
  const auto* m = inst.find("M");
  const auto* n = inst.find("N");
  std::string mn = m ? "M" : ms[0].first;
  if (!m) m = &ms[0].second;
  std::string nn = n ? "N" : (ms[0].first == mn ? ms[1].first : ms[0].first);
  if (!n) n = inst.find(nn);
  out.push_back({mn + "," + nn, {m, n}});
  out.push_back({nn + "," + mn, {n, m}});
  return out;
}

Verdict assemble(const std::string& id, const std::string& inst_name, std::size_t cutoff, Outcome& out) {
  Verdict v;
  v.id = id;
  v.instance = inst_name;
  v.cutoff = cutoff;
  v.facts = std::move(out.facts);
  bool fail = false, pass = false, noc = false;
  std::string hyp, concl;
  auto join = [](std::string& s, const std::string& piece) {
    if (!s.empty()) s += "; ";
    s += piece;
  };
  for (const auto& p : out.parts) {
    fail |= p.status == Status::Fail;
    pass |= p.status == Status::Pass;
    noc |= p.status == Status::NoCounterexample;
    join(hyp, p.label + ": " + p.hypothesis);
    if (p.status != Status::Vacuous) join(concl, p.label + ": " + std::string(status_name(p.status)) + " " + p.conclusion);
  }
  v.status = fail ? Status::Fail : pass ? Status::Pass : noc ? Status::NoCounterexample : Status::Vacuous;
  v.hypothesis = hyp.empty() ? "instance has no modules" : hyp;
  v.conclusion = concl;
  return v;
}

}  // namespace

namespace {

template <Field F>
Verdict evaluate(std::string_view id, const Instance<F>& inst) {
  const Statement& st = find_statement(id);
  inst.validate();
  const std::string clause = split_id(id).second;
  Ctx<F> ctx(inst);
  Outcome out;
  Checker<F> ch(ctx, out, clause);
  const int num = std::stoi(st.id.substr(1));

  using Mod = FiniteModule<F>;
  using PairFn = void (Checker<F>::*)(const std::string&, const Mod&, const Mod&);
  using SingleFn = void (Checker<F>::*)(const std::string&, const Mod&);
  static const std::map<int, PairFn> pair_fns = {
      {1, &Checker<F>::s1},   {2, &Checker<F>::s2},   {4, &Checker<F>::s4},   {5, &Checker<F>::s5},
      {6, &Checker<F>::s6},   {7, &Checker<F>::s7},   {8, &Checker<F>::s8},   {9, &Checker<F>::s9},
      {12, &Checker<F>::s12}, {13, &Checker<F>::s13}, {14, &Checker<F>::s14}, {18, &Checker<F>::s18},
      {19, &Checker<F>::s19}, {24, &Checker<F>::s24}, {25, &Checker<F>::s25}, {26, &Checker<F>::s26}};
  static const std::map<int, SingleFn> single_fns = {
      {3, &Checker<F>::s3},   {10, &Checker<F>::s10}, {11, &Checker<F>::s11}, {16, &Checker<F>::s16},
      {20, &Checker<F>::s20}, {21, &Checker<F>::s21}, {22, &Checker<F>::s22}, {23, &Checker<F>::s23},
      {27, &Checker<F>::s27}, {28, &Checker<F>::s28}};

  switch (st.subject) {
    case Subject::Ring:
      if (num == 15) ch.s15();
      if (num == 17) ch.s17();
      if (num == 29) ch.s29();
      break;
    case Subject::Single:
      for (const auto& [name, m] : inst.modules) (ch.*single_fns.at(num))(name, m);
      break;
    case Subject::Pair:
      for (const auto& [label, mn] : pairs_of(inst)) (ch.*pair_fns.at(num))(label, *mn.first, *mn.second);
      break;
  }

  return assemble(std::string(id), inst.name, ctx.n, out);
}

// Greedy shrink of a failing instance: drop modules, then lower the cutoff, while it still fails.
template <Field F>
Instance<F> minimize_failure(std::string_view id, Instance<F> inst, std::size_t n) {
  inst.params["n"] = static_cast<long>(n);
  auto fails = [&](const Instance<F>& c) { return evaluate(id, c).status == Status::Fail; };
  for (std::size_t i = inst.modules.size(); i-- > 0;) {
    Instance<F> smaller = inst;
    smaller.modules.erase(smaller.modules.begin() + static_cast<long>(i));
    if (fails(smaller)) inst = std::move(smaller);
  }
  while (n > 1) {
    Instance<F> shorter = inst;
    shorter.params["n"] = static_cast<long>(n - 1);
    if (!fails(shorter)) break;
    inst = std::move(shorter);
    --n;
  }
  return inst;
}

}  // namespace

template <Field F>
Verdict check(std::string_view id, const Instance<F>& inst) {
  Verdict v = evaluate(id, inst);
  if (v.status == Status::Fail) {
    auto small = minimize_failure(id, inst, v.cutoff);
    v.counterexample = "# " + std::string(id) + " fails on this instance (minimized)\n" + serialize_instance(small);
  }
  return v;
}

template <Field F>
SuiteReport check_suite(const std::vector<Instance<F>>& corpus, const std::vector<std::string>& ids) {
  SuiteReport rep;
  for (const auto& inst : corpus)
    for (const auto& id : ids) {
      rep.verdicts.push_back(check(id, inst));
      ++rep.counts[rep.verdicts.back().status];
    }
  return rep;
}

// ---- corpus ----

template <Field F>
Instance<F> agp_instance(const F& field) {
  auto inst = build_instance(parse_instance_text(kAgpInstanceText), field, "agp");
  inst.provenance = "canned";
  inst.add("N", canonical_module(inst.ring));
  return inst;
}

namespace {

template <Field F>
RingPtr<F> ring_of(const F& field, const std::vector<std::string>& vars, const std::vector<std::string>& rels) {
  return make_ring(field, parse_presentation(vars, rels));
}

template <Field F>
FiniteModule<F> cyclic(const RingPtr<F>& r, const std::vector<std::string>& gens) {
  RMatrix<F> p(r, 1, gens.size());
  for (std::size_t c = 0; c < gens.size(); ++c)
    p(0, c) = r->normal_form(parse_polynomial(gens[c], r->presentation().vars));
  return from_presentation(p);
}

template <Field F>
Instance<F> make_instance(std::string name, RingPtr<F> r, std::string provenance = "canned") {
  Instance<F> inst;
  inst.name = std::move(name);
  inst.ring = std::move(r);
  inst.provenance = std::move(provenance);
  return inst;
}

std::vector<std::string> var_names(std::size_t e) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::vector<std::string> v;
  for (std::size_t i = 0; i < e; ++i) v.emplace_back(e <= 4 ? names[i] : "x" + std::to_string(i + 1));
  return v;
}

}  // namespace

template <Field F>
std::vector<RingPtr<F>> monomial_m3_rings(const F& field, std::size_t max_e) {
  std::vector<RingPtr<F>> out;
  for (std::size_t e = 1; e <= max_e; ++e) {
    auto quads = monomials_of_degree(e, 2);
    auto cubes = monomials_of_degree(e, 3);
    std::vector<std::size_t> perm(e);
    std::set<std::vector<Exponent>> seen;
    for (std::size_t mask = 0; mask < (std::size_t{1} << quads.size()); ++mask) {
      std::vector<Exponent> chosen;
      for (std::size_t b = 0; b < quads.size(); ++b)
        if (mask >> b & 1) chosen.push_back(quads[b]);
      // Canonical representative under permutations of the variables.
      std::vector<Exponent> best;
      for (std::size_t i = 0; i < e; ++i) perm[i] = i;
      bool first = true;
      do {
        std::vector<Exponent> img;
        for (const auto& m : chosen) {
          Exponent x(e, 0);
          for (std::size_t i = 0; i < e; ++i) x[perm[i]] = m[i];
          img.push_back(x);
        }
        std::sort(img.begin(), img.end());
        if (first || img < best) best = img;
        first = false;
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (!seen.insert(best).second) continue;
      RingPresentation p;
      p.vars = var_names(e);
      for (const auto& m : chosen) p.relations.push_back(Polynomial::monomial(m));
      for (const auto& m : cubes)
        if (std::none_of(chosen.begin(), chosen.end(), [&](const Exponent& d) {
              for (std::size_t i = 0; i < e; ++i)
                if (d[i] > m[i]) return false;
              return true;
            }))
          p.relations.push_back(Polynomial::monomial(m));
      out.push_back(make_ring(field, p));
    }
  }
  return out;
}

template <Field F>
RingPtr<F> random_m3_ring(const F& field, std::size_t e, std::size_t quadrics, std::uint64_t seed) {
  Rng rng(seed);
  auto quads = monomials_of_degree(e, 2);
  RingPresentation p;
  p.vars = var_names(e);
  for (std::size_t k = 0; k < quadrics; ++k) {
    Polynomial f(e);
    for (const auto& m : quads) f.add_term(m, mpz_class(static_cast<long>(rng.below(7)) - 3));
    if (!f.is_zero()) p.relations.push_back(f);
  }
  for (const auto& m : monomials_of_degree(e, 3)) p.relations.push_back(Polynomial::monomial(m));
  return make_ring(field, p);
}

template <Field F>
std::vector<Instance<F>> omega_corpus(const F& field) {
  std::vector<Instance<F>> out;
  std::size_t idx = 0;
  auto add = [&](RingPtr<F> r, std::string name) {
    if (ring_invariants(*r).gorenstein) return;
    auto inst = make_instance(std::move(name), r);
    inst.add("M", canonical_module(r));
    out.push_back(std::move(inst));
  };
  for (auto& r : monomial_m3_rings(field, 3)) add(r, "monomial-" + std::to_string(++idx));
  add(ring_of(field, {"x", "y"}, {"x^2", "x*y", "y^2"}), "m2-e2");
  add(ring_of(field, {"x", "y", "z"}, {"x^2", "y^2", "z^2", "x*y"}), "binomial-1");
  add(ring_of(field, {"x", "y", "z"}, {"x^2 - y*z", "x*y", "x*z", "y^3", "z^3"}), "binomial-2");
  add(agp_instance(field).ring, "agp-ring");
  return out;
}

template <Field F>
std::vector<Instance<F>> canned_corpus(const F& field) {
  std::vector<Instance<F>> out;

  auto agp = agp_instance(field);
  out.push_back(agp);
  {
    auto inst = make_instance("agp-syzygies", agp.ring);
    auto m1 = resolve(agp.module("M"), 1)->syzygy_module(1);
    auto w1 = resolve(agp.module("N"), 1)->syzygy_module(1);
    inst.add("M", m1);
    inst.add("N", w1);
    out.push_back(std::move(inst));
  }
  {
    auto inst = make_instance("agp-self", agp.ring);
    inst.add("M", agp.module("M"));
    out.push_back(std::move(inst));
  }
  {
    auto inst = make_instance("agp-free", agp.ring);
    inst.add("M", free_module(agp.ring, 2));
    inst.add("N", agp.module("N"));
    out.push_back(std::move(inst));
  }
  {
    auto r = ring_of(field, {"x"}, {"x^3"});
    auto inst = make_instance("cubic", r);
    inst.add("M", cyclic(r, {"x"}));
    inst.add("N", cyclic(r, {"x^2"}));
    out.push_back(std::move(inst));
  }
  {
    auto r = ring_of(field, {"x", "y"}, {"x^2", "y^2"});
    auto inst = make_instance("ci", r);
    inst.add("M", cyclic(r, {"x"}));
    out.push_back(std::move(inst));
    auto fr = make_instance("ci-free", r);
    fr.add("M", regular_module(r));
    fr.add("N", residue_field(r));
    out.push_back(std::move(fr));
  }
  {
    auto r = ring_of(field, {"x", "y"}, {"x^2", "x*y", "y^2"});
    auto inst = make_instance("m2", r);
    inst.add("M", residue_field(r));
    inst.add("N", canonical_module(r));
    out.push_back(std::move(inst));
  }
  {
    auto r = ring_of(field, {"x", "y", "z"}, {"x*y", "x*z", "y*z", "x^2 - y^2", "x^2 - z^2"});
    auto inst = make_instance("gorenstein-e3", r);
    inst.add("M", cyclic(r, {"x"}));
    inst.add("N", canonical_module(r));
    out.push_back(std::move(inst));
  }
  for (auto& inst : omega_corpus(field)) out.push_back(std::move(inst));
  // Seeded random m³ = 0 instances with m²M = m²N = 0.
  for (std::uint64_t s = 1; s <= 6; ++s) {
    const std::size_t e = 2 + s % 2;
    auto r = random_m3_ring(field, e, 1 + s % e, 1000 + s);
    auto inst = make_instance("random-" + std::to_string(s), r, "canned seed=" + std::to_string(1000 + s));
    RandomModuleParams p;
    p.truncate_m2 = true;
    p.max_gens = 2;
    inst.add("M", random_module(r, 2000 + s, p));
    inst.add("N", random_module(r, 3000 + s, p));
    out.push_back(std::move(inst));
  }
  return out;
}

#define ARTIN_INSTANTIATE_THEOREMS(F)                                                              \
  template Verdict check<F>(std::string_view, const Instance<F>&);                                 \
  template SuiteReport check_suite<F>(const std::vector<Instance<F>>&, const std::vector<std::string>&); \
  template Instance<F> agp_instance<F>(const F&);                                                  \
  template std::vector<Instance<F>> omega_corpus<F>(const F&);                                     \
  template std::vector<RingPtr<F>> monomial_m3_rings<F>(const F&, std::size_t);                    \
  template RingPtr<F> random_m3_ring<F>(const F&, std::size_t, std::size_t, std::uint64_t);        \
  template std::vector<Instance<F>> canned_corpus<F>(const F&);

ARTIN_INSTANTIATE_THEOREMS(PrimeField)
ARTIN_INSTANTIATE_THEOREMS(RationalField)

}  // namespace artin
