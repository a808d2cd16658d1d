#pragma once

#include <json.hpp>
#include <string>

#include "fbc/automorphism.hpp"
#include "fbc/fixed_points.hpp"
#include "fbc/group.hpp"
#include "fbc/orbit.hpp"
#include "fbc/twisted.hpp"

namespace fbc {

using Json = nlohmann::json;

/// Automorphism form: {"rank": n, "images": ["ab", "a"], "inverse_images":
/// optional}.  Inverse images are verified against the forward images, never
/// trusted; absent inverse images are recovered by the Nielsen inversion.
FreeAutomorphism automorphism_from_json(const Json& j);
Json automorphism_to_json(const FreeAutomorphism& phi);

/// Presentation form: {"rank": n, "phi": {...}, "m": int or "inf", "h":
/// optional word, identity by default}.  The result is validated.
FbcPresentation presentation_from_json(const Json& j);
Json presentation_to_json(const FbcPresentation& pres);

Json group_element_json(const GroupElement& e);
GroupElement group_element_from_json(const Json& j, int rank);

Json verdict_json(const GroupConjVerdict& v);
Json verdict_json(const PowerConjVerdict& v);
Json verdict_json(const TwistedVerdict& v);
Json verdict_json(const PowerTwistedVerdict& v);
Json verdict_json(const OrbitVerdict& v);
Json verdict_json(const PowerOrbitVerdict& v);

Json basis_json(const SubgroupBasis& b);
Json basis_json(const PeriodicBasis& b);

}  // namespace fbc
