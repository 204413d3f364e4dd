#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "smw/machine.hpp"

namespace smw {

class FormatError : public Error {
 public:
  using Error::Error;
};

/// Machine file:
///   { "tape_alphabets": [["a0","a1"], ...],
///     "state_alphabets": [["L"], ["p(1)", ...], ...],
///     "rules": [{ "name": ..., "polarity": "positive",
///                 "substitutions": [{"pattern": "p(1)", "replacement": "a1^-1 p(1) a0"}],
///                 "domain": {"1": ["a0","a1"], "2": []} }],
///     "notes": [...] }
/// Domain keys are 1-based sectors. The writer lists every sector; the reader
/// treats a missing or full entry as unrestricted.
nlohmann::json machine_to_json(const Machine& m);
Machine machine_from_json(const nlohmann::json& j);

Machine load_machine(const std::string& path);

/// One JSON object per line: {"index": i, "rule": name-or-null, "word": text}.
void write_trace(std::ostream& out, const Machine& m, const Computation& c);

/// Reads trace records (lines with a "header" key are skipped) and re-parses
/// each word against the machine's hardware.
Computation read_trace(std::istream& in, const Machine& m);

}  // namespace smw
