#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"
#include "qorder/qorder.hpp"

namespace qorder::cli {

using Json = nlohmann::ordered_json;

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A validated structure read from a quandle or group document, normalized
/// to 0-indexed elements.
struct ParsedInput {
  std::variant<FiniteQuandle, FiniteGroup> value;
  std::size_t index_base = 0;
  std::optional<std::string> name;

  bool is_quandle() const noexcept { return std::holds_alternative<FiniteQuandle>(value); }
};

/// Accepts
///   {"kind":"quandle","index_base":0|1,"table":[[...]],"name":optional}
///   {"kind":"group","index_base":0|1,"identity":i,"table":[[...]]}
/// Throws ParseError for malformed documents and NotAQuandle / NotAGroup
/// (0-indexed witnesses) for tables failing validation.
ParsedInput parse_input(const nlohmann::json& doc);
ParsedInput parse_input_text(std::string_view text);
ParsedInput load_input_file(const std::string& path);

Json serialize(const FiniteQuandle& q, const std::optional<std::string>& name = std::nullopt);
Json serialize(const FiniteGroup& g);

Json to_json(const CyclicOrder& c);
Json to_json(const LinearOrder& o);
/// [x, y, z, value] entries for nondegenerate triples, lexicographic order.
Json to_json(const TripleFunction& f);
Json to_json(const Certificate& cert);
Json to_json(const Verdict& v);
Json to_json(const OrderSpace& space);
Json to_json(const EmbeddingReport& report);
Json to_json(const CensusRecord& record);

CyclicOrder cyclic_order_from_json(const nlohmann::json& doc);
LinearOrder linear_order_from_json(const nlohmann::json& doc);
TripleFunction triple_function_from_json(const nlohmann::json& doc, std::size_t n);

/// Structured error object; validation witnesses are echoed both 0-indexed
/// and in the input's index base.
Json error_to_json(const std::exception& e, std::size_t index_base = 0);

}  // namespace qorder::cli
