#pragma once

#include <string>

#include "hedgeres/algebra.hpp"
#include "hedgeres/saturate.hpp"

namespace hedgeres {

/// `{"result", "reliability", "nodes", "root"}` as described by
/// docs/proof.schema.json. Non-refuted results carry no nodes.
std::string proof_to_json(const SaturationResult& result, const Algebra& algebra);

/// Indented tree, conclusion first, one inference per line. A subproof used
/// twice is printed once and referenced afterwards.
std::string proof_to_text(const ProofTree& proof, const Algebra& algebra, bool color = false);

}  // namespace hedgeres
