// Licensed under the Apache 2.0 license. See LICENSE in the project root.
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "laakso/covering.hpp"
#include "laakso/diffset.hpp"
#include "laakso/family.hpp"
#include "laakso/graph.hpp"
#include "laakso/metric.hpp"

namespace laakso {

// All emitters use ordered_json and fixed field order so identical inputs
// produce byte-identical output. Exact {value, unit_exponent} pairs always
// carry a display-only decimal field.
using ordered_json = nlohmann::ordered_json;

ordered_json scaled_json(const ScaledDistance& d);
ScaledDistance scaled_from_json(const nlohmann::json& j);

ordered_json point_json(LaaksoFamily& family, const Point& p);
Point point_from_json(LaaksoFamily& family, const nlohmann::json& j);

/// "label" at default_level, or "LEVEL:label".
Point parse_point(LaaksoFamily& family, std::string_view spec, int default_level);

ordered_json graph_json(const LaaksoGraph& g);
std::string graph_dot(const LaaksoGraph& g);
std::string graph_edgelist(const LaaksoGraph& g);

std::string matrix_csv(const LaaksoGraph& g, const DistanceMatrix& m);

ordered_json gap_json(LaaksoFamily& family, const GapCertificate& cert);
ordered_json doubling_json(const LaaksoGraph& g, const DoublingReport& report);
ordered_json homogeneity_json(const LaaksoGraph& g, const HomogeneityFit& fit);
std::string homogeneity_csv(const LaaksoGraph& g, const HomogeneityFit& fit);

ordered_json kuratowski_json(const KuratowskiReport& report);
ordered_json separation_family_json(LaaksoFamily& family, const SeparationFamily& fam);
ordered_json refutation_certificate_json(LaaksoFamily& family, const RefutationCertificate& cert);

std::vector<CenterPair> centers_from_json(LaaksoFamily& family, const nlohmann::json& doc);

ordered_json growth_rows_json(const std::vector<GrowthRow>& rows);
std::string growth_rows_csv(const std::vector<GrowthRow>& rows);

}  // namespace laakso
