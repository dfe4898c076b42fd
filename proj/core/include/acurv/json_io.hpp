#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "acurv/curvature.hpp"
#include "acurv/osserman.hpp"
#include "acurv/schur.hpp"
#include "acurv/symgroup.hpp"
#include "acurv/young.hpp"

namespace acurv {

using Json = nlohmann::ordered_json;

// Syntax errors become ParseError naming `source` and the byte offset.
Json parse_json(std::string_view text, const std::string& source = "<input>");
Json read_json_file(const std::filesystem::path& path);

// Encoders. Rationals are written as "p/q" strings.
Json encode(const Rational& value);
Json encode(const Vector& v);
Json encode(const Matrix& m);
Json encode(const Permutation& p);
Json encode(const GroupRingElement& a);
Json encode(const Partition& lambda);
Json encode(const YoungTableau& t);
Json encode(const DenseTensor& t);  // sparse, 0-based indices
Json encode(const CurvatureDecomposition& d);
Json encode(const Metric& g);
Json encode(const SchurSum& s);
Json encode(const SpectrumReport& r);

// Decoders. Semantic errors become ParseError naming the JSON pointer of the
// offending node, e.g. "/entries/3/idx".
Rational decode_rational(const Json& j, const std::string& where = "");
Vector decode_vector(const Json& j, const std::string& where = "");
Matrix decode_matrix(const Json& j, const std::string& where = "");
GroupRingElement decode_group_ring(const Json& j, const std::string& where = "");
Partition decode_partition(const Json& j, const std::string& where = "");
YoungTableau decode_tableau(const Json& j, const std::string& where = "");
DenseTensor decode_tensor(const Json& j, const std::string& where = "");
CurvatureDecomposition decode_decomposition(const Json& j, const std::string& where = "");
Metric decode_metric(const Json& j, const std::string& where = "");

}  // namespace acurv
