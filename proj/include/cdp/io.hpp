#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cdp/cdp_set.hpp"
#include "cdp/family.hpp"
#include "cdp/separability.hpp"

namespace cdp::io {

using nlohmann::json;

// All stored and emitted data is 0-based; input adapters shift by the
// declared ground-set base.

json perms_to_json(const CdpSet& s);
CdpSet perms_from_json(const json& j);

json family_to_json(const CoefficientFamily& f);
CoefficientFamily family_from_json(const json& j);

json dense_to_json(const CMat& m);  // row-major [re, im] pairs
json report_to_json(const SeparabilityReport& r);

/// One permutation per line in cycle notation; '#' starts a comment.  A
/// leading "# base: N" directive declares the ground-set base; an explicit
/// base argument >= 0 overrides it.
std::vector<Permutation> read_cycles_text(const std::string& text, int n, int base = -1);

/// Load a CDP set from a file holding either JSON ({"n":..,"perms":[..]}) or
/// cycle-notation text.  For text files the degree is inferred from the
/// largest symbol unless n is given.
CdpSet load_set(const std::string& path, int n = -1, int base = -1);

CoefficientFamily load_family(const std::string& path);

std::vector<std::vector<int>> load_table(const std::string& path);

/// Human-readable block grid of a dense operator matrix: structural zeros of
/// the pattern induced by sigma print as dots, block boundaries every n
/// columns/rows.
std::string render_grid(const CMat& dense, const CdpSet& sigma);

/// Plain grid without a pattern: exact zeros print as dots.
std::string render_grid(const CMat& dense, int block);

std::string read_file(const std::string& path);

}  // namespace cdp::io
