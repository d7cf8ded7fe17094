#pragma once

#include <string>

#include "modlie/lie_algebra.hpp"

namespace modlie {

/// Canonical JSON form of an algebra:
///   {p, dim, labels: [...], sc: [[i, j, [[k, c], ...]], ...],
///    pmap: [[coords], ...] | null, meta: {family, params}}
/// sc lists only pairs i < j with a nonzero bracket, sorted; terms sorted by
/// basis index. save(load(s)) reproduces s byte for byte.
std::string algebra_to_json(const LieAlgebra& L);

/// Parses and validates. Throws std::runtime_error on malformed input or when
/// validate_algebra rejects the loaded structure constants.
LieAlgebra algebra_from_json(const std::string& text, bool validate = true);

void save_algebra_file(const LieAlgebra& L, const std::string& path);
LieAlgebra load_algebra_file(const std::string& path, bool validate = true);

}  // namespace modlie
