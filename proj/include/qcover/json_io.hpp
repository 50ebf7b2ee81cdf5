#pragma once

#include <string>

#include <json.hpp>

#include "qcover/covers.hpp"
#include "qcover/hom.hpp"
#include "qcover/rack.hpp"

namespace qcover {

// Key order is part of the output contract (reports must be byte-stable).
using json = nlohmann::ordered_json;

// Rack files: {"name": str, "elements": [str], "table": [[int]]} with
// table[i][j] the index of elements[i] <| elements[j]. With row_acts the
// stored rows index the acting element instead and the table is transposed
// on load. The pseudo-path "tn:N" yields the trivial rack of order N.
RackPtr load_rack_file(const std::string& path, bool row_acts = false);
RackPtr rack_from_json(const json& j, const std::string& fallback_name, bool row_acts = false);
json rack_to_json(const FiniteRack& X);

// Hom files: {"dom": path-or-inline, "cod": path-or-inline, "map": [int]};
// relative paths resolve against the hom file's directory.
RackHom load_hom_file(const std::string& path, bool row_acts = false);

// Group files: {"elements": [str], "cayley": [[int]]}.
RackPtr load_group_file_as_conj(const std::string& path);

// Horn files: {"hom": path, "base": label-or-index,
//              "steps": [[a, b, delta], ...]} with labels or indices.
Horn load_horn_file(const std::string& path, bool row_acts = false);

std::string dot_pi0(const FiniteRack& X, const Pi0Result& p);
std::string dot_skeleton(const FiniteRack& X, const SkeletonReport& rep);

json congruence_classes_json(const FiniteRack& X, const Congruence& C);
std::string classes_str(const FiniteRack& X, const Congruence& C);

}  // namespace qcover
