#pragma once

#include "tqc/exactnum.hpp"
#include "tqc/laurent_poly.hpp"
#include "tqc/univariate.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace tqc::cli {

using json = nlohmann::ordered_json;

enum class Format { json, csv };

json rational_json(const BigRational& q);
BigRational rational_from_json(const json& j);

// {"arity": n, "terms": [{"exp": [...], "coeff": "p/q"}, ...]}, graded-lex order.
json laurent_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const json& j);

// Ascending coefficient list.
json upoly_json(const UPoly& p);
UPoly upoly_from_json(const json& j);

json rational_function_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const json& j);

json int_list(const std::vector<int>& v);

// One "path,value" row per leaf.
std::string to_csv(const json& doc);

std::string emit(const json& doc, Format fmt);

} // namespace tqc::cli
