#include "qcox/certificate_io.hpp"

#include <json.hpp>

#include "qcox/error.hpp"

namespace qcox {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormat = "qcox-certificate/1";

Json group_block(const GroupConfig& cfg) {
  Json rows = Json::array();
  for (const auto& r : cfg.rows) rows.push_back(to_string(r));
  return Json{{"type", CartanDatum::parse(cfg.type).name()},
              {"lattice", cfg.lattice},
              {"rows", rows},
              {"torsion", cfg.torsion}};
}

std::size_t parse_generator(const QuasiCoxeterGroup& g, const std::string& name) {
  if (name.size() < 2 || name[0] != 's') throw ParseError("expected a generator name, got '" + name + "'");
  try {
    std::size_t used = 0;
    unsigned long i = std::stoul(name.substr(1), &used);
    if (used == name.size() - 1 && i < g.num_generators()) return i;
  } catch (const std::exception&) {
  }
  throw ParseError("generator '" + name + "' out of range s0..s" + std::to_string(g.rank()));
}

Phase parse_phase(const std::string& s) {
  for (Phase p : {Phase::Intermediate, Phase::Antidominant, Phase::DominantShortcut})
    if (to_string(p) == s) return p;
  throw ParseError("unknown phase '" + s + "'");
}

}  // namespace

std::string write_certificate(const QuasiCoxeterGroup& g, const GroupConfig& cfg,
                              const DiamondCertificate& c) {
  Json conj = Json::array();
  for (auto s : c.conjugators) conj.push_back(generator_name(s));
  Json transcript = Json::array();
  for (const auto& step : c.transcript) {
    transcript.push_back(Json{
        {"element", format_element(g, step.element)},
        {"length", step.length},
        {"phase", to_string(step.phase)},
        {"conjugator", step.conjugator ? Json(generator_name(*step.conjugator)) : Json(nullptr)},
        {"note", step.note},
    });
  }
  Json doc{
      {"format", kFormat},
      {"group", group_block(cfg)},
      {"element", format_element(g, c.original)},
      {"length", g.length(c.original)},
      {"conjugators", conj},
      {"witness", generator_name(c.witness)},
      {"final", format_element(g, c.final_element)},
      {"antidominant_iterations", c.antidominant_iterations},
      {"transcript", transcript},
  };
  return doc.dump(2) + "\n";
}

DiamondCertificate read_certificate(const QuasiCoxeterGroup& g, const GroupConfig& cfg,
                                    const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    if (doc.at("format") != kFormat) throw ParseError("unsupported certificate format");
    if (doc.at("group") != group_block(cfg))
      throw ParseError("certificate was produced for a different group: " + doc.at("group").dump());
    DiamondCertificate c;
    c.original = parse_element(g, doc.at("element").get<std::string>());
    for (const auto& s : doc.at("conjugators")) c.conjugators.push_back(parse_generator(g, s.get<std::string>()));
    c.witness = parse_generator(g, doc.at("witness").get<std::string>());
    c.final_element = parse_element(g, doc.at("final").get<std::string>());
    c.antidominant_iterations = doc.at("antidominant_iterations").get<std::size_t>();
    for (const auto& st : doc.at("transcript")) {
      TranscriptStep step;
      step.element = parse_element(g, st.at("element").get<std::string>());
      step.length = st.at("length").get<std::size_t>();
      step.phase = parse_phase(st.at("phase").get<std::string>());
      if (!st.at("conjugator").is_null()) step.conjugator = parse_generator(g, st.at("conjugator").get<std::string>());
      step.note = st.at("note").get<std::string>();
      c.transcript.push_back(std::move(step));
    }
    return c;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace qcox
