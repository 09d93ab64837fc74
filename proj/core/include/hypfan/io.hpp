#pragma once

// JSON file formats for complexes, fans and move scripts.
//
// Complex (dimension 2):
//   {"dimension": 2, "vertices": [[d0,d1,d2,d3], ...], "edges": [[a,b], ...],
//    "twisted": [bool, ...], "surface": {"orientable": b, "genus_or_crosscaps": k}}
// Complex (dimension 3):
//   {"dimension": 3, "cells": {"0": [{}, ...], "1": [{"boundary": [...]}, ...],
//    "2": [{"boundary": [...], "hypersurface": l}, ...], "3": [{"boundary": [...]}, ...]}}
// Either may carry "fan" (a fan object) and "involution" (a dart map in
// dimension 2, {"0": [...], ..., "3": [...]} in dimension 3).
//
// Fan: {"dimension": n, "vectors": {"<label>": [c, ...]}} where each c is an
// integer, a [num, den] pair or a "p/q" string.

#include <optional>
#include <string>
#include <variant>

#include "hypfan/moves.hpp"

namespace hypfan {

struct ComplexDocument {
  std::variant<SurfaceComplex, CellComplex3> complex;
  std::optional<Fan> fan;
  std::optional<DartInvolution> involution2;
  std::optional<CellInvolution> involution3;
};

/// Throws Error(ParseError) on bad JSON, Error(MalformedInput) on a bad
/// shape, and whatever complex construction throws.
ComplexDocument parse_complex(const std::string& text);
Fan parse_fan(const std::string& text);
MoveScript parse_script(const std::string& text);

std::string write_complex(const ComplexDocument& doc);
std::string write_fan(const Fan& fan);
std::string write_script(const MoveScript& script);

ComplexDocument to_document(const State& s);
State to_state(ComplexDocument doc);

}  // namespace hypfan
