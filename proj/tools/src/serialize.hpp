#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "flc/groupoid.hpp"
#include "flc/hull.hpp"
#include "flc/witness.hpp"

namespace flc::cli {

using nlohmann::json;

/// Scalars are strings accepted by parse_scalar ("1+sqrt(2)", "-3/4").
json to_json(const QuadraticScalar& s);
json to_json(const GroupElement& g);
json to_json(const Window& w);
json to_json(const Region& r);
json to_json(const std::vector<GroupElement>& pts);
json to_json(const PointSetDescriptor& d);
json to_json(const Patch& p);
json to_json(const PatchCatalog& c);
json to_json(const UdVerdict& v);
json to_json(const FlcVerdict& v);
json to_json(const RefinementMap& m);
json to_json(const ClopenClassId& c);
json to_json(const SeparationWitness& w);
json to_json(const ConvergenceVerdict& v);
json to_json(const Arrow& a);
json to_json(const AxiomReport& r);
json to_json(const BisectionSurvey& s);
json to_json(const PsdCertificate& c);
json to_json(const ProperSupportVerdict& v);
json to_json(const XDiscreteness& v);
json to_json(const InnerAmenabilityReport& r);

/// One row per point: x{i}_p, x{i}_q for value p + q*sqrt(d), then d, then x{i} as floats.
std::string points_csv(const std::vector<GroupElement>& pts);
/// Static scatter of 1D or 2D points; DomainError for higher dimensions.
std::string points_svg(const std::vector<GroupElement>& pts, const Window& view, const std::string& title);

}  // namespace flc::cli
