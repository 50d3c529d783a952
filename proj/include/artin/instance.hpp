#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "artin/module.hpp"

namespace artin {

inline constexpr std::size_t kDefaultCutoff = 12;

/// A ring with named modules and integer parameters (`n` is the cutoff, `j` a window start).
template <Field F>
struct Instance {
  std::string name;
  RingPtr<F> ring;
  std::vector<std::pair<std::string, FiniteModule<F>>> modules;
  std::map<std::string, long> params;
  std::string provenance;  // canned | file | explorer seed=...

  const FiniteModule<F>* find(const std::string& module_name) const;
  /// Throws UndefinedInputError for an unknown name.
  const FiniteModule<F>& module(const std::string& module_name) const;
  void add(std::string module_name, FiniteModule<F> m);
  std::size_t cutoff() const;
  std::optional<long> param(const std::string& key) const;
  /// Every module lives over `ring`; throws PreconditionError otherwise.
  void validate() const;
};

/// Syntax tree of an instance file, before any field is chosen.
struct InstanceText {
  struct Module {
    std::string name;
    std::size_t line = 0;
    std::vector<std::vector<Polynomial>> rows;
  };
  std::optional<std::string> field;
  std::vector<std::string> vars;
  std::vector<Polynomial> relations;
  std::vector<Module> modules;
  std::map<std::string, long> params;
};

/// Grammar, one statement per line, `#` starts a comment:
///   [ring]           field = GF(p) | Q ; vars = x, y ; rel = <poly>   (repeatable)
///   [module NAME]    row = <poly>, <poly>, ...   (one row of the presentation matrix)
///   [params]         key = <integer>
/// Errors carry 1-based line and column.
InstanceText parse_instance_text(std::string_view text);

/// Parses `GF(p)`, `p` or `Q`. Returns nullopt for Q.
std::optional<std::uint32_t> parse_field_name(std::string_view s);

/// Builds the ring and the modules (cokernels of the presentations) over `field`.
template <Field F>
Instance<F> build_instance(const InstanceText& t, const F& field, std::string name = "file");

/// Writes the ring presentation and a minimal presentation of each module. Over Q every
/// presentation column is scaled by the common denominator of its entries.
template <Field F>
std::string serialize_instance(const Instance<F>& inst);

}  // namespace artin
