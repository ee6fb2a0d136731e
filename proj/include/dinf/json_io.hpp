#pragma once

#include <json.hpp>

#include "dinf/category.hpp"
#include "dinf/oracle.hpp"
#include "dinf/quiver_export.hpp"
#include "dinf/triangulation.hpp"

namespace dinf {

using json = nlohmann::json;

// from_json throws Failure(Parse) on malformed input
void to_json(json& j, const MarkedPoint& p);
void from_json(const json& j, MarkedPoint& p);
void to_json(json& j, const DiskModel& m);
void from_json(const json& j, DiskModel& m);
void to_json(json& j, const TaggedEdge& e);
void from_json(const json& j, TaggedEdge& e);
void to_json(json& j, const QuiverVertex& v);
void from_json(const json& j, QuiverVertex& v);
void to_json(json& j, const Indecomposable& x);
void from_json(const json& j, Indecomposable& x);
void to_json(json& j, const Triangulation& t);
void from_json(const json& j, Triangulation& t);
void to_json(json& j, const Error& e);
void to_json(json& j, const TranslationQuiverWindow& w);
void to_json(json& j, const ARQuiver& ar);
void to_json(json& j, const ExchangeMatrix& b);
void from_json(const json& j, ExchangeMatrix& b);

json parse_json(const std::string& text);  // Parse on syntax errors

}  // namespace dinf
