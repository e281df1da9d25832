#pragma once

#include <json.hpp>

#include "altknot/markers.hpp"
#include "altknot/twirl.hpp"

namespace altknot {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

void to_json(Json& j, const Diagram& d);
void from_json(const Json& j, Diagram& d);
void to_json(Json& j, const Move& m);
void from_json(const Json& j, Move& m);
void to_json(Json& j, const Certificate& c);
void from_json(const Json& j, Certificate& c);
void to_json(Json& j, const Embedding& e);
void from_json(const Json& j, Embedding& e);
void to_json(Json& j, const GoeritzForm& f);
void to_json(Json& j, const UnknottingReport& r);
void to_json(Json& j, const TwirlTower& t);

Json matrix_json(const IntMatrix& m);
IntVector vector_from_json(const Json& j);

// certificate bundle readable by replay: input diagram plus certificate
Json certificate_bundle(const Diagram& input, const Certificate& c);

}  // namespace altknot
