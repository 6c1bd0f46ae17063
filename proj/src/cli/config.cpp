#include "qcox/config.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "qcox/error.hpp"

namespace qcox {

namespace {

namespace pt = boost::property_tree;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

// Items separated by commas and/or whitespace.
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::int64_t parse_integer(const std::string& s, const std::string& field) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(field + ": expected an integer, got '" + s + "'");
  }
}

std::uint64_t parse_unsigned(const std::string& s, const std::string& field) {
  std::int64_t v = parse_integer(s, field);
  if (v < 0) throw ParseError(field + ": expected a non-negative integer, got '" + s + "'");
  return static_cast<std::uint64_t>(v);
}

// Line of `key` inside `[section]`, for diagnostics on semantically bad values.
int line_of(const std::vector<std::string>& lines, const std::string& section, const std::string& key) {
  std::string current;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string t = trim(lines[i]);
    if (t.empty() || t[0] == ';' || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      current = trim(t.substr(1, t.size() - 2));
      continue;
    }
    auto eq = t.find('=');
    if (eq != std::string::npos && current == section && trim(t.substr(0, eq)) == key)
      return static_cast<int>(i + 1);
  }
  return 0;
}

const std::set<std::string>& known_keys(const std::string& section) {
  static const std::map<std::string, std::set<std::string>> keys{
      {"group", {"type", "lattice", "torsion"}},
      {"lattice", {}},
      {"hecke", {"q"}},
      {"limits", {"node_cap", "max_iter", "seed"}},
  };
  static const std::set<std::string> none;
  auto it = keys.find(section);
  return it == keys.end() ? none : it->second;
}

std::vector<std::int64_t> env_override(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return {};
  return {static_cast<std::int64_t>(parse_unsigned(trim(v), std::string("environment ") + name))};
}

std::vector<std::int64_t> parse_int_list(const std::string& text, const std::string& what) {
  auto open = text.find('(');
  if (open == std::string::npos || text.back() != ')')
    throw ParseError("malformed " + what + " '" + text + "'");
  std::vector<std::int64_t> out;
  for (const auto& item : split_list(text.substr(open + 1, text.size() - open - 2)))
    out.push_back(parse_integer(item, what));
  return out;
}

Point parse_point(const std::string& inner) {
  Point p;
  for (const auto& item : split_list(inner)) p.push_back(parse_rational(item));
  return p;
}

// Splits "s1 t(1, 0) s0" into tokens, keeping parenthesized groups whole.
std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0) throw ParseError("unbalanced ')' in element '" + text + "'");
    if ((std::isspace(static_cast<unsigned char>(c)) || c == '*') && depth == 0) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in element '" + text + "'");
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

GroupConfig parse_config(std::istream& in) {
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::vector<std::string> lines;
  {
    std::istringstream ls(text);
    for (std::string l; std::getline(ls, l);) lines.push_back(l);
  }

  pt::ptree tree;
  try {
    std::istringstream is(text);
    pt::read_ini(is, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ParseError(e.message(), static_cast<int>(e.line()));
  }

  auto fail = [&](const std::string& section, const std::string& key, const std::string& msg) -> ParseError {
    return ParseError("[" + section + "] " + key + ": " + msg, line_of(lines, section, key));
  };

  GroupConfig cfg;
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty())
      throw ParseError("key '" + section + "' outside a section", line_of(lines, "", section));
    if (section != "group" && section != "lattice" && section != "hecke" && section != "limits")
      throw ParseError("unknown section [" + section + "]");
    for (const auto& [key, value] : body) {
      const std::string v = trim(value.data());
      const std::string field = "[" + section + "] " + key;
      try {
        if (section == "lattice") {
          if (key.rfind("row", 0) != 0) throw fail(section, key, "expected row1, row2, ...");
          cfg.rows.push_back(parse_point(v));
          continue;
        }
        if (!known_keys(section).count(key)) throw fail(section, key, "unknown key");
        if (key == "type") {
          cfg.type = v;
        } else if (key == "lattice") {
          if (v != "adjoint" && v != "coweight" && v != "explicit")
            throw fail(section, key, "expected adjoint, coweight or explicit, got '" + v + "'");
          cfg.lattice = v;
        } else if (key == "torsion") {
          cfg.torsion.clear();
          for (const auto& item : split_list(v)) cfg.torsion.push_back(parse_integer(item, field));
        } else if (key == "q") {
          cfg.q.clear();
          for (const auto& item : split_list(v)) cfg.q.push_back(parse_integer(item, field));
          if (cfg.q.empty()) throw fail(section, key, "empty list");
        } else if (key == "node_cap") {
          cfg.node_cap = parse_unsigned(v, field);
        } else if (key == "max_iter") {
          std::uint64_t m = parse_unsigned(v, field);
          cfg.max_iter = m == 0 ? std::nullopt : std::optional<std::size_t>(m);
        } else if (key == "seed") {
          cfg.seed = parse_unsigned(v, field);
        }
      } catch (const ParseError& e) {
        if (e.line() > 0) throw;
        throw ParseError(e.what(), line_of(lines, section, key));
      }
    }
  }
  if (cfg.type.empty()) throw ParseError("[group] type is required");
  if (cfg.lattice == "explicit" && cfg.rows.empty())
    throw ParseError("[lattice] explicit lattice needs row1, row2, ...");
  if (cfg.lattice != "explicit" && !cfg.rows.empty())
    throw ParseError("[lattice] rows given but [group] lattice is '" + cfg.lattice + "'");
  return cfg;
}

GroupConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file '" + path + "'");
  try {
    return parse_config(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void apply_environment(GroupConfig& cfg) {
  if (auto v = env_override("QCOX_NODE_CAP"); !v.empty()) cfg.node_cap = static_cast<std::size_t>(v[0]);
}

LatticeSpec lattice_spec(const RootSystem& rs, const GroupConfig& cfg) {
  LatticeSpec spec;
  if (cfg.lattice == "adjoint") {
    spec = LatticeSpec::adjoint(rs);
  } else if (cfg.lattice == "coweight") {
    spec = LatticeSpec::coweight(rs);
  } else {
    spec.free_generators = cfg.rows;
  }
  spec.torsion_orders = cfg.torsion;
  return spec;
}

QuasiCoxeterGroup build_group(const GroupConfig& cfg) {
  RootSystem rs(CartanDatum::parse(cfg.type));
  LatticeSpec spec = lattice_spec(rs, cfg);
  return QuasiCoxeterGroup(std::move(rs), std::move(spec));
}

QParams q_params(const QuasiCoxeterGroup& g, const std::vector<std::int64_t>& values) {
  if (values.size() == 1) return QParams::uniform(g, values[0]);
  if (values.size() != g.num_generators())
    throw ConstructionError("q: expected 1 or " + std::to_string(g.num_generators()) + " values, got " +
                            std::to_string(values.size()));
  return QParams{values};
}

OmegaElement parse_omega(const QuasiCoxeterGroup& g, const std::string& text) {
  if (text.rfind("omega(", 0) != 0) throw ParseError("expected omega(...), got '" + text + "'");
  std::vector<std::int64_t> residues = parse_int_list(text, "Omega class");
  OmegaElement c = g.omega_identity();
  const std::size_t nf = c.free_class.size(), nt = c.torsion_class.size();
  if (residues.size() != nf + nt)
    throw ParseError("Omega class '" + text + "' needs " + std::to_string(nf + nt) + " residues");
  for (std::size_t i = 0; i < nf; ++i) c.free_class[i] = residues[i];
  for (std::size_t j = 0; j < nt; ++j) c.torsion_class[j] = residues[nf + j];
  try {
    g.validate_class(c);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
  return c;
}

GroupElement parse_element(const QuasiCoxeterGroup& g, const std::string& text) {
  std::vector<std::string> tokens = tokenize(text);
  if (tokens.empty()) throw ParseError("empty element");
  GroupElement w = g.identity();
  for (const auto& tok : tokens) {
    GroupElement factor;
    try {
      if (tok == "1" || tok == "e") {
        factor = g.identity();
      } else if (tok.size() >= 2 && tok[0] == 's' && std::isdigit(static_cast<unsigned char>(tok[1]))) {
        std::int64_t i = parse_integer(tok.substr(1), "generator");
        if (i < 0 || static_cast<std::size_t>(i) >= g.num_generators())
          throw ParseError("generator '" + tok + "' out of range s0..s" + std::to_string(g.rank()));
        factor = g.generator(static_cast<std::size_t>(i));
      } else if (tok.rfind("t(", 0) == 0 && tok.back() == ')') {
        factor = g.translation(parse_point(tok.substr(2, tok.size() - 3)));
      } else if (tok.rfind("tor(", 0) == 0) {
        factor = g.torsion_element(parse_int_list(tok, "torsion element"));
      } else if (tok.rfind("omega(", 0) == 0) {
        factor = g.omega_section(parse_omega(g, tok));
      } else {
        throw ParseError("unknown token '" + tok + "'");
      }
    } catch (const PreconditionError& e) {
      throw ParseError("'" + tok + "': " + e.what());
    }
    w = g.compose(w, factor);
  }
  return w;
}

std::string format_element(const QuasiCoxeterGroup& g, const GroupElement& w) {
  std::vector<std::string> parts;
  bool zero = true;
  for (const auto& c : w.lambda) zero = zero && c == 0;
  if (!zero) parts.push_back("t" + to_string(w.lambda));
  bool no_torsion = true;
  for (auto t : w.torsion) no_torsion = no_torsion && t == 0;
  if (!no_torsion) {
    std::string s = "tor(";
    for (std::size_t j = 0; j < w.torsion.size(); ++j) s += (j ? "," : "") + std::to_string(w.torsion[j]);
    parts.push_back(s + ")");
  }
  for (auto i : g.root_system().reduced_word(w.finite)) parts.push_back(generator_name(i));
  if (parts.empty()) return "1";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : " ") + p;
  return out;
}

std::string format_word(const QuasiCoxeterGroup& g, const GroupElement& w) {
  if (!g.normalizes_affine_group()) return format_element(g, w);
  ElementWord dec = g.reduced_decomposition(w);
  std::string out;
  for (auto s : dec.word) out += (out.empty() ? "" : " ") + generator_name(s);
  if (!(dec.omega == g.omega_identity())) out += (out.empty() ? "" : " ") + to_string(dec.omega);
  return out.empty() ? "1" : out;
}

}  // namespace qcox
