#include "smw/machine_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

namespace smw {

using nlohmann::json;

namespace {

json alphabet_json(const Alphabet& a) {
  json out = json::array();
  for (LetterId id : a.letters()) out.push_back(display(id));
  return out;
}

Alphabet alphabet_from(const json& j, LetterKind kind) {
  if (!j.is_array()) throw FormatError("alphabet must be an array of letters");
  std::vector<LetterId> ids;
  for (const auto& x : j) {
    auto text = x.get<std::string>();
    auto known = find_letter(text);
    ids.push_back(known ? *known : intern(text, kind));
  }
  return Alphabet(std::move(ids));
}

// Tape letters named in a domain must already exist; parse through the table.
Alphabet domain_from(const json& j) {
  if (!j.is_array()) throw FormatError("domain entry must be an array of letters");
  std::vector<LetterId> ids;
  for (const auto& x : j) {
    auto text = x.get<std::string>();
    auto id = find_letter(text);
    if (!id) throw UnknownLetter(text);
    ids.push_back(*id);
  }
  return Alphabet(std::move(ids));
}

}  // namespace

json machine_to_json(const Machine& m) {
  const auto& h = m.hardware();
  json out;
  out["tape_alphabets"] = json::array();
  for (const auto& a : h.tape_alphabets()) out["tape_alphabets"].push_back(alphabet_json(a));
  out["state_alphabets"] = json::array();
  for (const auto& a : h.state_alphabets()) out["state_alphabets"].push_back(alphabet_json(a));
  out["rules"] = json::array();
  for (std::size_t i = 0; i < m.declared_count(); ++i) {
    const auto& r = m.rule(i);
    json jr;
    jr["name"] = r.name;
    jr["polarity"] = r.polarity == Polarity::positive ? "positive" : "negative";
    jr["substitutions"] = json::array();
    for (const auto& s : r.substitutions)
      jr["substitutions"].push_back({{"pattern", to_string(s.from.flat())}, {"replacement", to_string(s.to.flat())}});
    json domain = json::object();
    for (std::size_t j = 0; j < h.sectors(); ++j) {
      auto it = r.domain.find(j);
      domain[std::to_string(j + 1)] = alphabet_json(it == r.domain.end() ? h.tape(j) : it->second);
    }
    jr["domain"] = domain;
    out["rules"].push_back(jr);
  }
  out["notes"] = m.notes;
  return out;
}

Machine machine_from_json(const json& j) {
  try {
    std::vector<Alphabet> tape, state;
    for (const auto& a : j.at("tape_alphabets")) tape.push_back(alphabet_from(a, LetterKind::tape));
    for (const auto& a : j.at("state_alphabets")) state.push_back(alphabet_from(a, LetterKind::state));
    Hardware h(std::move(tape), std::move(state));
    std::vector<SRule> rules;
    for (const auto& jr : j.at("rules")) {
      SRule r;
      r.name = jr.at("name").get<std::string>();
      auto pol = jr.value("polarity", std::string("positive"));
      if (pol != "positive" && pol != "negative") throw FormatError("polarity must be positive or negative");
      r.polarity = pol == "positive" ? Polarity::positive : Polarity::negative;
      for (const auto& js : jr.at("substitutions"))
        r.substitutions.push_back(parse_substitution(h, js.at("pattern").get<std::string>(),
                                                     js.at("replacement").get<std::string>()));
      if (jr.contains("domain")) {
        for (const auto& [key, value] : jr.at("domain").items()) {
          std::size_t sector = std::stoul(key);
          if (sector == 0 || sector > h.sectors()) throw FormatError("domain sector " + key + " out of range");
          Alphabet a = domain_from(value);
          if (a == h.tape(sector - 1)) continue;
          r.domain[sector - 1] = std::move(a);
        }
      }
      rules.push_back(std::move(r));
    }
    Machine m(std::move(h), std::move(rules));
    if (j.contains("notes")) m.notes = j.at("notes").get<std::vector<std::string>>();
    return m;
  } catch (const json::exception& e) {
    throw FormatError(std::string("machine file: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("machine file: ") + e.what());
  }
}

Machine load_machine(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open machine file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw FormatError("malformed JSON in '" + path + "': " + e.what());
  }
  return machine_from_json(j);
}

void write_trace(std::ostream& out, const Machine& m, const Computation& c) {
  for (std::size_t i = 0; i < c.words.size(); ++i) {
    json rec;
    rec["index"] = i;
    rec["rule"] = i == 0 ? json(nullptr) : json(m.rule(c.steps[i - 1].rule).display_name());
    rec["word"] = to_string(c.words[i]);
    out << rec.dump() << '\n';
  }
}

Computation read_trace(std::istream& in, const Machine& m) {
  Computation c;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw FormatError(std::string("trace line: ") + e.what());
    }
    if (rec.contains("header")) continue;
    c.words.push_back(parse_admissible(m.hardware(), rec.at("word").get<std::string>()));
    if (c.words.size() > 1) {
      auto name = rec.at("rule").get<std::string>();
      auto idx = m.find_rule(name);
      if (!idx) throw FormatError("trace names unknown rule '" + name + "'");
      c.steps.push_back({*idx, touch_position(m.rule(*idx), c.words[c.words.size() - 2])});
    }
  }
  if (c.words.empty()) throw FormatError("trace contains no words");
  return c;
}

}  // namespace smw
