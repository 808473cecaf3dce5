#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "gendem/verify.hpp"

namespace gendem {

using Json = nlohmann::json;

// All emitters tag their output with {"schema": "gendem/1"}. Rational
// scalars are serialized as "p/q" strings except in point lists, which use
// [num, den] coordinate pairs.
Json crystal_json(const GenDemCrystal& crystal);
Json transform_json(const CartanData& cd, const Word& word);
Json points_json(const Word& word, const Multidegree& m,
                 const std::vector<StringVector>& pts);
Json pl_report_json(const Word& word, const RationalPoint& a, const PLReport& rep);
Json hull_json(const HullResult& hull);
Json verify_json(const VerifyReport& rep);

std::string points_csv(const std::vector<StringVector>& pts);
std::string points_text(const std::vector<StringVector>& pts);
std::string verify_text(const VerifyReport& rep);

}  // namespace gendem
