// Text and JSON formats.
//
// Ptableau text: one line per row, boxes separated by single spaces, "."
// for a blank.  Output is always the canonical left-justified layout; input
// accepts any layout (and validates it).  A tableau with no cells prints as
// a single "." per row.
//
// Word text: letters concatenated without separators when the alphabet
// bound is at most 9 ("2133"), space-separated otherwise.
//
// Biword text: top and bottom words joined by "/" ("1122/2121").
//
// Operator sequences: space-separated steps "e2 f1^3", applied left first.
//
// JSON: a ptableau is {"rows": [[1, null, 2], ...]}; words are arrays of
// integers; biwords are {"top": [...], "bottom": [...]}; an insertion pair
// is {"PT": ..., "Tmax": ...} plus an optional "trace".

#pragma once

#include <string>

#include <json.hpp>

#include "ptabkit/crystal.hpp"
#include "ptabkit/duality.hpp"
#include "ptabkit/errors.hpp"
#include "ptabkit/ptableau.hpp"
#include "ptabkit/rsk.hpp"
#include "ptabkit/word.hpp"

namespace ptab {

std::string format_ptableau(const Ptableau& t);            // canonical layout
std::string format_layout(const Grid& grid);               // a layout verbatim
Ptableau parse_ptableau(const std::string& text);

std::string format_word(const Word& w);
Word parse_word(const std::string& text);

std::string format_biword(const Biword& b);
Biword parse_biword(const std::string& text);

std::string format_matrix(const IntMatrix& m);

std::string format_sequence(const CrystalOpSequence& seq);  // "" when empty
CrystalOpSequence parse_sequence(const std::string& text);

nlohmann::ordered_json json_ptableau(const Ptableau& t);
Ptableau ptableau_from_json(const nlohmann::json& j);

nlohmann::ordered_json json_word(const Word& w);
nlohmann::ordered_json json_biword(const Biword& b);
nlohmann::ordered_json json_matrix(const IntMatrix& m);
nlohmann::ordered_json json_trace(const ResolutionTrace& trace);
nlohmann::ordered_json json_rsk_pair(const RskPair& pair);

}  // namespace ptab
