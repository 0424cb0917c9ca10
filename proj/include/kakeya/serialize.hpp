#pragma once

// JSON forms of the domain types. Integers serialize as JSON numbers up to
// 2^53 in magnitude and as decimal strings beyond, so arbitrary precision
// survives the trip; parsers accept both forms.

#include "kakeya/ap_cover.hpp"
#include "kakeya/constructions.hpp"
#include "kakeya/entropy.hpp"
#include "kakeya/erdos_selfridge.hpp"
#include "kakeya/planar.hpp"

#include <json.hpp>

namespace kakeya {

using Json = nlohmann::ordered_json;

Json int_to_json(const Int& x);
Int json_to_int(const Json& j);

Json int_set_to_json(const IntSet& s);        // sorted array
IntSet json_to_int_set(const Json& j);

Json planar_to_json(const PlanarSet& s);      // array of [x, y]
PlanarSet json_to_planar(const Json& j);

Json certificate_to_json(const ApCertificate& c);   // {"k":k,"entries":{"d":a}}
ApCertificate json_to_certificate(const Json& j);

Json qr_to_json(const QRConstruction& c);

Json fpset_to_json(const FpSet& s);           // {"p":p,"n":n,"points":[[...],...]}
FpSet json_to_fpset(const Json& j);

Json joint_z_to_json(const JointZ& j);        // {"ambient":"Z","atoms":[[x,y,"num/den"],...]}
JointZ json_to_joint_z(const Json& j);

Json joint_fp_to_json(const JointFp& j);      // {"ambient":{"type":"Fp",...},"atoms":...}
JointFp json_to_joint_fp(const Json& j);

Json es_instance_to_json(const ESInstance& inst);   // {"primes":[...],"k":k,"w":w}
ESInstance json_to_es_instance(const Json& j);

}  // namespace kakeya
