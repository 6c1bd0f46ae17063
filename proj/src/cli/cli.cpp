#include "qcox/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "qcox/certificate_io.hpp"
#include "qcox/config.hpp"
#include "qcox/diamond.hpp"
#include "qcox/error.hpp"
#include "qcox/hecke.hpp"
#include "qcox/render.hpp"

namespace qcox {

namespace {

GroupConfig load(const std::string& path) {
  GroupConfig cfg = load_config(path);
  apply_environment(cfg);
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
}

std::vector<std::int64_t> parse_q_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v <= 0) throw std::invalid_argument("q");
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("--q-list: expected positive integers separated by commas, got '" + text + "'");
    }
  }
  if (out.empty()) throw ParseError("--q-list is empty");
  return out;
}

std::vector<OmegaElement> classes_for(const QuasiCoxeterGroup& g, const std::string& tau) {
  if (!tau.empty()) return {parse_omega(g, tau)};
  return g.omega_classes();
}

void print_certificate(std::ostream& out, const QuasiCoxeterGroup& g, const DiamondCertificate& c) {
  auto row = [&](const std::string& k, const std::string& v) { out << std::left << std::setw(24) << k << v << "\n"; };
  row("element", format_element(g, c.original) + "   [" + format_word(g, c.original) + "]");
  row("length", std::to_string(g.length(c.original)));
  std::string conj;
  for (auto s : c.conjugators) conj += (conj.empty() ? "" : " ") + generator_name(s);
  row("conjugators", conj.empty() ? "(none)" : conj);
  row("witness", generator_name(c.witness));
  row("final", format_element(g, c.final_element) + "   [" + format_word(g, c.final_element) + "]");
  row("antidominant_iterations", std::to_string(c.antidominant_iterations));
  out << "transcript\n";
  for (std::size_t i = 0; i < c.transcript.size(); ++i) {
    const auto& st = c.transcript[i];
    out << "  " << std::setw(3) << std::right << i << "  " << std::left << std::setw(18) << to_string(st.phase)
        << "len " << std::setw(4) << st.length << format_element(g, st.element);
    if (st.conjugator) out << "  -> conjugate by " << generator_name(*st.conjugator);
    if (!st.note.empty()) out << "  (" << st.note << ")";
    out << "\n";
  }
}

// ---------------------------------------------------------------------------

struct ValidateArgs {
  std::string config;
  std::size_t exhaustive = 8;
  std::size_t samples = 64;
};

int cmd_validate(const ValidateArgs& a, std::ostream& out) {
  GroupConfig cfg = load(a.config);
  RootSystem rs(CartanDatum::parse(cfg.type));
  LatticeSpec spec = lattice_spec(rs, cfg);
  ValidationOptions opts;
  opts.exhaustive_length = a.exhaustive;
  opts.random_samples = a.samples;
  opts.seed = cfg.seed;
  ValidationReport report = validate_qcg(rs, spec, opts);
  out << "type " << rs.datum().name() << ", lattice " << cfg.lattice << "\n";
  out << report.to_text();
  return report.passed() ? kExitOk : kExitCheckFailed;
}

struct DiamondArgs {
  std::string config;
  std::string element;
  bool verify = false;
  bool brute_force = false;
  bool json = false;
  bool no_instrument = false;
  std::size_t max_iter = 0;
  std::string out_path;
  std::string replay;
  std::size_t random = 0;
  std::size_t word_length = 10;
  std::optional<std::uint64_t> seed;
};

// Returns false if the requested cross-check failed.
bool brute_force_check(std::ostream& out, const QuasiCoxeterGroup& g, const GroupElement& w,
                       const DiamondCertificate& cert, std::size_t cap) {
  BruteForceResult bf = brute_force_diamond(g, w, cap);
  if (bf.status == SearchStatus::CapReached)
    throw ResourceError("brute force reached the node cap " + std::to_string(cap) + " (raise QCOX_NODE_CAP)");
  if (bf.status != SearchStatus::Found) {
    out << "brute-force            FAIL (class exhausted without a direct diamond)\n";
    return false;
  }
  LateralClass cls = lateral_class(g, w, cap);
  if (!cls.complete)
    throw ResourceError("lateral class exceeds the node cap " + std::to_string(cap) + " (raise QCOX_NODE_CAP)");
  const bool member = cls.contains(cert.final_element);
  out << "brute-force            " << (member ? "pass" : "FAIL") << " (witness " << format_word(g, *bf.element)
      << " at " << generator_name(*bf.witness) << ", depth " << bf.depth << ", class size "
      << cls.members.size() << ")\n";
  return member;
}

int cmd_diamond(const DiamondArgs& a, std::ostream& out) {
  GroupConfig cfg = load(a.config);
  QuasiCoxeterGroup g = build_group(cfg);
  DiamondOptions opts;
  opts.instrument = !a.no_instrument;
  if (a.max_iter) opts.max_iter = a.max_iter;
  else opts.max_iter = cfg.max_iter;

  if (!a.replay.empty()) {
    DiamondCertificate c = read_certificate(g, cfg, read_file(a.replay));
    CertificateCheck check = verify_certificate(g, c.original, c);
    out << "replay " << a.replay << ": " << (check ? "pass" : "FAIL: " + check.failure) << "\n";
    return check ? kExitOk : kExitCheckFailed;
  }

  if (a.random > 0) {
    const std::uint64_t seed = a.seed.value_or(cfg.seed);
    std::size_t passed = 0, skipped = 0, failed = 0;
    for (std::size_t i = 0; i < a.random; ++i) {
      GroupElement w = g.random_element(a.word_length, seed + i);
      if (g.is_translation(w)) {
        ++skipped;
        out << "skip  " << format_word(g, w) << "  (translation)\n";
        continue;
      }
      DiamondCertificate c = find_diamond(g, w, opts);
      bool ok = static_cast<bool>(verify_certificate(g, w, c));
      std::ostringstream extra;
      if (ok && a.brute_force) ok = brute_force_check(extra, g, w, c, cfg.node_cap);
      (ok ? passed : failed) += 1;
      out << (ok ? "ok    " : "FAIL  ") << format_word(g, w) << "  len " << g.length(w) << "  witness "
          << generator_name(c.witness) << " after " << c.conjugators.size() << " conjugations\n";
      if (!ok) out << extra.str();
    }
    out << passed << " passed, " << failed << " failed, " << skipped << " translations skipped\n";
    return failed == 0 ? kExitOk : kExitCheckFailed;
  }

  if (a.element.empty()) throw ParseError("diamond: give an element, --random N or --replay FILE");
  GroupElement w = parse_element(g, a.element);
  DiamondCertificate c;
  try {
    c = find_diamond(g, w, opts);
  } catch (const DomainError& e) {
    throw DomainError("hypothesis \"w \xE2\x88\x89 \xCE\x9B\" violated: " + format_word(g, w) +
                      " is a translation (" + e.what() + ")");
  }
  if (!a.out_path.empty()) write_file(a.out_path, write_certificate(g, cfg, c));
  if (a.json) out << write_certificate(g, cfg, c);
  else print_certificate(out, g, c);

  bool ok = true;
  if (a.verify) {
    CertificateCheck check = verify_certificate(g, w, c);
    if (!a.json) out << "verify                 " << (check ? "pass" : "FAIL: " + check.failure) << "\n";
    ok = ok && check.passed;
  }
  if (a.brute_force) {
    std::ostringstream report;
    ok = brute_force_check(report, g, w, c, cfg.node_cap) && ok;
    if (!a.json) out << report.str();
  }
  return ok ? kExitOk : kExitCheckFailed;
}

struct CenterArgs {
  std::string config;
  std::size_t length = 0;
  std::string tau;
  std::string q_list;
};

int cmd_center(const CenterArgs& a, std::ostream& out) {
  GroupConfig cfg = load(a.config);
  QuasiCoxeterGroup g = build_group(cfg);
  std::vector<std::vector<std::int64_t>> qs;
  if (a.q_list.empty()) {
    qs.push_back(cfg.q);
  } else {
    for (auto q : parse_q_list(a.q_list)) qs.push_back({q});
  }
  out << std::left << std::setw(6) << "type" << std::setw(10) << "lattice" << std::setw(4) << "L" << std::setw(14)
      << "tau" << std::setw(8) << "q" << std::setw(6) << "dim" << std::setw(6) << "N"
      << "tight\n";
  bool ok = true;
  for (const auto& q : qs) {
    HeckeAlgebra H(g, q_params(g, q));
    std::string qtext;
    for (auto v : q) qtext += (qtext.empty() ? "" : ",") + std::to_string(v);
    for (const auto& tau : classes_for(g, a.tau)) {
      BoundReport r = check_dimension_bound(H, a.length, tau);
      out << std::setw(6) << g.root_system().datum().name() << std::setw(10) << cfg.lattice << std::setw(4)
          << a.length << std::setw(14) << to_string(tau) << std::setw(8) << qtext << std::setw(6) << r.dimension
          << std::setw(6) << r.orbit_count << (r.tight() ? "yes" : "no") << (r.passed() ? "" : "  BOUND VIOLATED")
          << "\n";
      ok = ok && r.passed();
    }
  }
  return ok ? kExitOk : kExitCheckFailed;
}

struct OrbitArgs {
  std::string config;
  std::size_t length = 0;
  std::string tau;
};

int cmd_orbits(const OrbitArgs& a, std::ostream& out) {
  GroupConfig cfg = load(a.config);
  QuasiCoxeterGroup g = build_group(cfg);
  for (const auto& tau : classes_for(g, a.tau)) {
    OrbitCount oc = translation_orbit_count(g, a.length, tau);
    out << to_string(tau) << ": N = " << oc.count() << "\n";
    for (const auto& o : oc.orbits)
      out << "  dominant " << std::left << std::setw(16) << to_string(o.dominant) << " size " << std::setw(4)
          << o.size << " length " << o.length << "\n";
  }
  return kExitOk;
}

struct RenderArgs {
  std::string config;
  std::string out_path;
  std::size_t radius = 3;
  std::string class_of;
  std::string gallery_to;
  std::string shade = "none";
};

int cmd_render(const RenderArgs& a, std::ostream& out) {
  GroupConfig cfg = load(a.config);
  QuasiCoxeterGroup g = build_group(cfg);
  FigureSpec spec;
  spec.radius = a.radius;
  if (!a.class_of.empty()) {
    LateralClass cls = lateral_class(g, parse_element(g, a.class_of), cfg.node_cap);
    if (!cls.complete) throw ResourceError("lateral class exceeds the node cap (raise QCOX_NODE_CAP)");
    spec.class_members = cls.members;
  }
  if (!a.gallery_to.empty()) {
    const RootSystem& rs = g.root_system();
    spec.gallery = minimal_gallery(rs, base_alcove(rs), alcove_of(g, parse_element(g, a.gallery_to)));
  }
  if (a.shade == "dominant") spec.shade = Shade::Dominant;
  else if (a.shade == "antidominant") spec.shade = Shade::Antidominant;
  else if (a.shade != "none") throw ParseError("--shade: expected none, dominant or antidominant");
  std::string svg = render_svg(g, spec);
  if (a.out_path.empty() || a.out_path == "-") {
    out << svg;
  } else {
    write_file(a.out_path, svg);
    out << "wrote " << a.out_path << "\n";
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diamond Property and Hecke center checks for quasi-Coxeter groups", "qcox"};
  app.require_subcommand(1);

  ValidateArgs va;
  auto* validate = app.add_subcommand("validate", "check the quasi-Coxeter hypotheses for a config");
  validate->add_option("config", va.config, "group config (INI)")->required();
  validate->add_option("--exhaustive", va.exhaustive, "exhaustive length bound");
  validate->add_option("--samples", va.samples, "random samples");

  DiamondArgs da;
  auto* diamond = app.add_subcommand("diamond", "find and check a Diamond Property certificate");
  diamond->add_option("config", da.config, "group config (INI)")->required();
  diamond->add_option("element", da.element, "element, e.g. \"s1 s0 omega(1)\"");
  diamond->add_flag("--verify", da.verify, "replay the certificate");
  diamond->add_flag("--brute-force", da.brute_force, "cross-check against the lateral-class search");
  diamond->add_flag("--json", da.json, "print the JSON certificate document");
  diamond->add_flag("--no-instrument", da.no_instrument, "skip the proof-shadowing checks");
  diamond->add_option("--max-iter", da.max_iter, "anti-dominant iteration cap");
  diamond->add_option("--out", da.out_path, "write the JSON certificate to a file");
  diamond->add_option("--replay", da.replay, "verify a saved certificate");
  diamond->add_option("--random", da.random, "batch over N seeded random elements");
  diamond->add_option("--word-length", da.word_length, "random word length");
  diamond->add_option("--seed", da.seed, "first seed of the batch");

  CenterArgs ca;
  auto* center = app.add_subcommand("center", "dimension of Z_{L,tau} against the orbit count");
  center->add_option("config", ca.config, "group config (INI)")->required();
  center->add_option("-L,--length", ca.length, "length bound L")->required();
  center->add_option("--tau", ca.tau, "Omega class, e.g. omega(1); default all");
  center->add_option("--q-list", ca.q_list, "comma-separated uniform q values; default [hecke] q");

  OrbitArgs oa;
  auto* orbits = app.add_subcommand("orbits", "finite Weyl orbits of translations");
  orbits->add_option("config", oa.config, "group config (INI)")->required();
  orbits->add_option("-L,--length", oa.length, "length bound L")->required();
  orbits->add_option("--tau", oa.tau, "Omega class; default all");

  RenderArgs ra;
  auto* render = app.add_subcommand("render", "SVG picture of the alcoves of a rank-2 group");
  render->add_option("config", ra.config, "group config (INI)")->required();
  render->add_option("-o,--out", ra.out_path, "output file, - for stdout");
  render->add_option("--radius", ra.radius, "alcoves with -R <= k < R");
  render->add_option("--class", ra.class_of, "highlight the lateral class of this element");
  render->add_option("--gallery", ra.gallery_to, "highlight a minimal gallery to w(A)");
  render->add_option("--shade", ra.shade, "none | dominant | antidominant");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*validate) return cmd_validate(va, out);
    if (*diamond) return cmd_diamond(da, out);
    if (*center) return cmd_center(ca, out);
    if (*orbits) return cmd_orbits(oa, out);
    if (*render) return cmd_render(ra, out);
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const InvariantError& e) {
    err << "internal check failed: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace qcox
