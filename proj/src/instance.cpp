#include "artin/instance.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

namespace artin {

template <Field F>
const FiniteModule<F>* Instance<F>::find(const std::string& module_name) const {
  for (const auto& [n, m] : modules)
    if (n == module_name) return &m;
  return nullptr;
}

template <Field F>
const FiniteModule<F>& Instance<F>::module(const std::string& module_name) const {
  if (const auto* m = find(module_name)) return *m;
  throw UndefinedInputError("unknown module '" + module_name + "'");
}

template <Field F>
void Instance<F>::add(std::string module_name, FiniteModule<F> m) {
  if (find(module_name)) throw PreconditionError("duplicate module name '" + module_name + "'");
  modules.emplace_back(std::move(module_name), std::move(m));
}

template <Field F>
std::size_t Instance<F>::cutoff() const {
  auto n = param("n");
  return n && *n >= 1 ? static_cast<std::size_t>(*n) : kDefaultCutoff;
}

template <Field F>
std::optional<long> Instance<F>::param(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) return std::nullopt;
  return it->second;
}

template <Field F>
void Instance<F>::validate() const {
  if (!ring) throw PreconditionError("instance has no ring");
  for (const auto& [n, m] : modules)
    if (m.ring() != ring) throw PreconditionError("module '" + n + "' is not over the instance ring");
}

namespace {

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0;
  while (b < s.size() && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  std::size_t e = s.size();
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset += b;
  return s.substr(b, e - b);
}

// Parses `text` as a polynomial; `col` is the 1-based column of text[0] on `line`.
Polynomial poly_at(std::string_view text, const std::vector<std::string>& vars, std::size_t line, std::size_t col) {
  std::size_t off = 0;
  auto t = trim(text, &off);
  if (t.empty()) throw ParseError(line, col, "empty polynomial");
  try {
    return parse_polynomial(t, vars);
  } catch (const ParseError& e) {
    std::string msg = e.what();
    auto pos = msg.find(": ");
    if (pos != std::string::npos) msg = msg.substr(pos + 2);
    throw ParseError(line, col + off + (e.column() ? e.column() - 1 : 0), msg);
  }
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

}  // namespace

std::optional<std::uint32_t> parse_field_name(std::string_view s) {
  s = trim(s);
  if (s == "Q" || s == "QQ") return std::nullopt;
  if (s.starts_with("GF(") && s.ends_with(")")) s = s.substr(3, s.size() - 4);
  std::uint32_t p = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), p);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw PresentationError("unknown field '" + std::string(s) + "' (expected GF(p) or Q)");
  return p;
}

InstanceText parse_instance_text(std::string_view text) {
  InstanceText out;
  enum class Section { None, Ring, Module, Params } section = Section::None;
  bool saw_ring = false;
  bool saw_vars = false;
  std::set<std::string> module_names;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t lead = 0;
    auto body = trim(line, &lead);
    if (body.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::size_t col0 = lead + 1;

    if (body.front() == '[') {
      if (body.back() != ']') throw ParseError(line_no, col0 + body.size(), "expected ']'");
      std::size_t inner_off = 0;
      auto inner = trim(body.substr(1, body.size() - 2), &inner_off);
      if (inner == "ring") {
        if (saw_ring) throw ParseError(line_no, col0, "duplicate [ring] section");
        saw_ring = true;
        section = Section::Ring;
      } else if (inner == "params") {
        section = Section::Params;
      } else if (inner.starts_with("module")) {
        std::size_t name_off = 0;
        auto name = trim(inner.substr(6), &name_off);
        const std::size_t name_col = col0 + 1 + inner_off + 6 + name_off;
        if (inner.size() > 6 && !std::isspace(static_cast<unsigned char>(inner[6])))
          throw ParseError(line_no, col0 + 1 + inner_off, "unknown section '" + std::string(inner) + "'");
        if (!valid_name(name)) throw ParseError(line_no, name_col, "invalid module name");
        if (!module_names.insert(std::string(name)).second)
          throw ParseError(line_no, name_col, "duplicate module name '" + std::string(name) + "'");
        out.modules.push_back({std::string(name), line_no, {}});
        section = Section::Module;
      } else {
        throw ParseError(line_no, col0 + 1 + inner_off, "unknown section '" + std::string(inner) + "'");
      }
      if (end == text.size()) break;
      continue;
    }

    auto eq = body.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, col0, "expected 'key = value'");
    auto key = trim(body.substr(0, eq));
    std::size_t value_off = 0;
    auto value = trim(body.substr(eq + 1), &value_off);
    const std::size_t value_col = col0 + eq + 1 + value_off;

    switch (section) {
      case Section::None:
        throw ParseError(line_no, col0, "statement outside of a section");
      case Section::Ring:
        if (key == "field") {
          if (out.field) throw ParseError(line_no, col0, "duplicate field");
          out.field = std::string(value);
        } else if (key == "vars") {
          if (saw_vars) throw ParseError(line_no, col0, "duplicate vars");
          saw_vars = true;
          std::size_t pos = 0;
          while (true) {
            auto comma = value.find(',', pos);
            auto piece = value.substr(pos, comma == std::string_view::npos ? value.size() - pos : comma - pos);
            std::size_t off = 0;
            auto v = trim(piece, &off);
            if (!valid_name(v)) throw ParseError(line_no, value_col + pos + off, "invalid variable name");
            if (std::find(out.vars.begin(), out.vars.end(), v) != out.vars.end())
              throw ParseError(line_no, value_col + pos + off, "duplicate variable '" + std::string(v) + "'");
            out.vars.emplace_back(v);
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
          }
        } else if (key == "rel") {
          if (!saw_vars) throw ParseError(line_no, col0, "rel before vars");
          out.relations.push_back(poly_at(value, out.vars, line_no, value_col));
        } else {
          throw ParseError(line_no, col0, "unknown key '" + std::string(key) + "' in [ring]");
        }
        break;
      case Section::Module: {
        if (key != "row") throw ParseError(line_no, col0, "unknown key '" + std::string(key) + "' in [module]");
        if (!saw_vars) throw ParseError(line_no, col0, "module rows before [ring] vars");
        std::vector<Polynomial> row;
        if (!value.empty()) {
          std::size_t pos = 0;
          while (true) {
            auto comma = value.find(',', pos);
            auto piece = value.substr(pos, comma == std::string_view::npos ? value.size() - pos : comma - pos);
            row.push_back(poly_at(piece, out.vars, line_no, value_col + pos));
            if (comma == std::string_view::npos) break;
            pos = comma + 1;
          }
        }
        auto& mod = out.modules.back();
        if (!mod.rows.empty() && mod.rows.front().size() != row.size())
          throw ParseError(line_no, value_col,
                           "row has " + std::to_string(row.size()) + " entries, expected " +
                               std::to_string(mod.rows.front().size()));
        mod.rows.push_back(std::move(row));
        break;
      }
      case Section::Params: {
        if (!valid_name(key)) throw ParseError(line_no, col0, "invalid parameter name");
        long v = 0;
        auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
        if (ec != std::errc() || ptr != value.data() + value.size() || value.empty())
          throw ParseError(line_no, value_col, "expected an integer");
        out.params[std::string(key)] = v;
        break;
      }
    }
    if (end == text.size()) break;
  }
  if (!saw_ring) throw ParseError(1, 1, "missing [ring] section");
  if (!saw_vars) throw ParseError(line_no, 1, "missing vars in [ring]");
  return out;
}

template <Field F>
Instance<F> build_instance(const InstanceText& t, const F& field, std::string name) {
  Instance<F> inst;
  inst.name = std::move(name);
  inst.provenance = "file";
  inst.ring = make_ring(field, RingPresentation{t.vars, t.relations});
  for (const auto& m : t.modules) {
    const std::size_t cols = m.rows.empty() ? 0 : m.rows.front().size();
    RMatrix<F> p(inst.ring, m.rows.size(), cols);
    for (std::size_t r = 0; r < m.rows.size(); ++r)
      for (std::size_t c = 0; c < cols; ++c) p(r, c) = inst.ring->normal_form(m.rows[r][c]);
    inst.add(m.name, from_presentation(p));
  }
  inst.params = t.params;
  return inst;
}

template <Field F>
std::string serialize_instance(const Instance<F>& inst) {
  const auto& ring = *inst.ring;
  const auto& vars = ring.presentation().vars;
  std::ostringstream os;
  os << "[ring]\nfield = " << ring.field().name() << "\nvars = ";
  for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? ", " : "") << vars[i];
  os << "\n";
  for (const auto& rel : ring.presentation().relations) os << "rel = " << rel.to_string(vars) << "\n";
  for (const auto& [name, m] : inst.modules) {
    os << "\n[module " << name << "]\n";
    auto p = minimal_presentation(m);
    std::vector<mpz_class> scale(p.cols(), 1);
    if constexpr (std::is_same_v<F, RationalField>) {
      for (std::size_t c = 0; c < p.cols(); ++c)
        for (std::size_t r = 0; r < p.rows(); ++r)
          for (const auto& x : p(r, c)) mpz_lcm(scale[c].get_mpz_t(), scale[c].get_mpz_t(), x.get_den_mpz_t());
    }
    for (std::size_t r = 0; r < p.rows(); ++r) {
      os << "row =";
      for (std::size_t c = 0; c < p.cols(); ++c)
        os << (c ? ", " : " ") << ring.to_polynomial(p(r, c), scale[c]).to_string(vars);
      os << "\n";
    }
  }
  if (!inst.params.empty()) {
    os << "\n[params]\n";
    for (const auto& [k, v] : inst.params) os << k << " = " << v << "\n";
  }
  return os.str();
}

#define ARTIN_INSTANTIATE_INSTANCE(F)                                                    \
  template struct Instance<F>;                                                           \
  template Instance<F> build_instance<F>(const InstanceText&, const F&, std::string);    \
  template std::string serialize_instance<F>(const Instance<F>&);

ARTIN_INSTANTIATE_INSTANCE(PrimeField)
ARTIN_INSTANTIATE_INSTANCE(RationalField)

}  // namespace artin
