#pragma once

#include <iosfwd>
#include <vector>

#include <nlohmann/json.hpp>

#include "grmin/extremal.hpp"
#include "grmin/geomeans.hpp"
#include "grmin/optimizer.hpp"
#include "grmin/orbits.hpp"
#include "grmin/plucker.hpp"
#include "grmin/qfamily.hpp"
#include "grmin/reconstruct.hpp"
#include "grmin/types.hpp"

namespace grmin {

// Reports keep their field order, so serialized output is stable.
using json = nlohmann::ordered_json;

/// {"n": int, "columns": [[u, v], ...]}
json matrix_to_json(const PointMatrix& X);
PointMatrix matrix_from_json(const json& j);

/// Map "i,j" -> value over ordered pairs.
json plucker_to_json(const PluckerVector& P);
PluckerVector plucker_from_json(const json& j);

/// Map "i,j" -> value over the outer-orbit pairs; n is inferred from the
/// largest index.
json outer_to_json(const OuterOrbitData& data);
OuterOrbitData outer_from_json(const json& j);

json orbit_table_to_json(const OrbitTable& table);
json certificate_to_json(const CertificateReport& report);
json qfamily_to_json(const QFamilyReport& report);
json optimization_to_json(const OptimizationResult& result);

/// CSV rows (k, D_k, a_k); the a column is blank when not computed.
void write_geomeans_csv(std::ostream& os, const GeoMeans& G);
/// CSV rows (j, k, l, slack).
void write_slacks_csv(std::ostream& os, const std::vector<SlackEntry>& slacks);
/// CSV rows (q, E).
void write_plateau_csv(std::ostream& os,
                       const std::vector<std::pair<double, double>>& rows);

}  // namespace grmin
