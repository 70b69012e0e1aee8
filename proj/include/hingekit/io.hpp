#pragma once

#include <json.hpp>
#include <string>

#include "hingekit/search.hpp"
#include "hingekit/transforms.hpp"

namespace hingekit {

using json = nlohmann::json;

inline constexpr const char* kSchema = "hingekit/1";

// Exact scalars as {"a":"p/q","b":..,"c":..,"d":..} over 1, sqrt2, sqrt3, sqrt6;
// approximate ones as {"approx":"<decimal>","epsilon":"<decimal>"}.
json scalar_json(const Exact& x);
json scalar_json(const Real& x);
template <class T>
T scalar_from_json(const json& j);

template <class T>
json point_json(const Point<T>& p);
template <class T>
Point<T> point_from_json(const json& j);
template <class T>
json motion_json(const RigidMotion<T>& m);
template <class T>
RigidMotion<T> motion_from_json(const json& j);

json polyform_json(const Polyform& f);
// Accepts {"family":..,"cells":[[x,y,t],...]} or {"grid":"<ascii art>"} for ominoes.
Polyform polyform_from_json(const json& j);

template <class T>
json dissection_json(const HingedDissection<T>& h);
template <class T>
HingedDissection<T> dissection_from_json(const json& j);

template <class T>
json complex_json(const CellComplex<T>& c);
template <class T>
CellComplex<T> complex_from_json(const json& j);

template <class T>
json realization_json(const Realization<T>& r);
template <class T>
Realization<T> realization_from_json(const json& j);

template <class T>
json rotation_json(const Rotation<T>& r);
template <class T>
Rotation<T> rotation_from_json(const json& j);
template <class T>
json extendible_json(const ExtendibleChain<T>& c);
template <class T>
ExtendibleChain<T> extendible_from_json(const json& j);

json report_json(const VerificationReport& r);
json certificate_json(const LowerBoundCertificate& c);
json hinging_json(const SquareHinging& h);

// "exact" or "approx", from the document's "mode" field (exact when absent).
std::string document_mode(const json& j);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);

}  // namespace hingekit
