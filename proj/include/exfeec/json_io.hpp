// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "exfeec/extension.hpp"
#include "exfeec/linalg.hpp"
#include "exfeec/polyform.hpp"
#include "exfeec/star.hpp"

#include <json.hpp>

namespace exfeec {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& x) { return x.str(); }
json to_json(const QuadExt& x);
json to_json(const IncreasingMap& m);
json to_json(const MultiIndex& a);
// host, k, canonical text and canonical terms
json to_json(const PolyForm& w);
json to_json(const Matrix<Rational>& M);
json to_json(const IsoReport& r);
json to_json(const DualReport& r);
json to_json(const LegacyHReport& r);
json to_json(const ProxyReport& r);
json to_json(const VanishingReport& r);
json to_json(const BubbleTrace& W);
json to_json(const GeometricDecomposition& G);

Rational rational_from_json(const json& j);
// Accepts {"host": [...], "k": k, "terms": [{"coeff": "p/q", "alpha": [...], "dl": [...]}]}
// with dl given by global labels.
PolyForm polyform_from_json(const json& j);

}  // namespace exfeec
