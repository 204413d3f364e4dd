#include "smw/toy.hpp"

#include <string>

namespace smw {

Machine chain_machine(std::size_t parts, std::size_t rules, std::size_t letters) {
  if (parts < 2) throw Error("chain machine needs at least two parts");
  if (letters < 1 || letters > 26) throw Error("chain machine needs 1..26 letters");
  if (rules < 1 || rules > 3) throw Error("chain machine has 1..3 rules");

  std::vector<LetterId> tape;
  for (std::size_t c = 0; c < letters; ++c) tape.push_back(intern(std::string(1, char('a' + c)), LetterKind::tape));
  std::vector<Alphabet> y(parts - 1, Alphabet(tape));
  std::vector<Alphabet> q;
  std::vector<std::string> k;
  for (std::size_t i = 1; i <= parts; ++i) {
    k.push_back("k" + std::to_string(i));
    q.push_back(Alphabet({intern(k.back(), LetterKind::state)}));
  }
  Hardware h(std::move(y), std::move(q));

  std::vector<SRule> out;
  SRule theta{"theta", {}, {}, Polarity::positive};
  for (const auto& s : k) theta.substitutions.push_back(parse_substitution(h, s, s));
  out.push_back(std::move(theta));

  if (rules >= 2) {
    SRule grow{"grow", {}, {}, Polarity::positive};
    for (std::size_t i = 0; i < parts; ++i)
      grow.substitutions.push_back(parse_substitution(h, k[i], i + 1 < parts ? k[i] + " a" : k[i]));
    out.push_back(std::move(grow));
  }
  if (rules >= 3) {
    SRule shed{"shed", {}, {}, Polarity::positive};
    for (std::size_t i = 0; i < parts; ++i)
      shed.substitutions.push_back(parse_substitution(h, i == 0 ? k[i] : "a " + k[i], k[i]));
    out.push_back(std::move(shed));
  }
  return Machine(std::move(h), std::move(out));
}

Machine two_letter_machine() {
  LetterId a = intern("a", LetterKind::tape), b = intern("b", LetterKind::tape);
  LetterId q1 = intern("q1", LetterKind::state), q1p = intern("q1'", LetterKind::state);
  LetterId q2 = intern("q2", LetterKind::state);
  Hardware h({Alphabet({a, b})}, {Alphabet({q1, q1p}), Alphabet({q2})});
  std::vector<SRule> rules;
  rules.push_back({"flip", {parse_substitution(h, "q1 a", "q1' a"), parse_substitution(h, "q2", "q2")}, {}, {}});
  rules.push_back({"push", {parse_substitution(h, "q1'", "q1' b"), parse_substitution(h, "q2", "q2")}, {}, {}});
  rules.push_back({"tie", {parse_substitution(h, "q1' b q2", "q1 a q2")}, {}, {}});
  return Machine(std::move(h), std::move(rules));
}

}  // namespace smw
