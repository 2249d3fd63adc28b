#include "qorder_cli/builtin.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "qorder_cli/io.hpp"

namespace qorder::cli {

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

long long integer(std::string_view s, std::string_view context) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw ParseError("expected an integer in \"" + std::string(context) + "\", got \"" +
                     std::string(s) + "\"");
  }
  return v;
}

std::size_t positive(std::string_view s, std::string_view context) {
  const long long v = integer(s, context);
  if (v < 1 || v > 4096) {
    throw ParseError("size in \"" + std::string(context) + "\" must be in 1..4096");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view spec) {
  if (spec.empty()) throw ParseError("empty group spec");
  if (spec.front() == '@') {
    auto in = load_input_file(std::string(spec.substr(1)));
    if (in.is_quandle()) throw ParseError("expected a group document in " + std::string(spec));
    return std::get<FiniteGroup>(std::move(in.value));
  }
  const auto factors = split(spec, 'x');
  if (factors.size() > 1) {
    FiniteGroup g = parse_group_spec(factors.front());
    for (std::size_t k = 1; k < factors.size(); ++k) {
      g = direct_product(g, parse_group_spec(factors[k]));
    }
    return g;
  }
  if (spec.front() == 'Z') return cyclic_group(positive(spec.substr(1), spec));
  if (spec.front() == 'S') {
    const auto d = positive(spec.substr(1), spec);
    if (d > 5) throw ParseError("symmetric groups are limited to S1..S5");
    return symmetric_group(d);
  }
  throw ParseError("unknown group spec \"" + std::string(spec) + "\"");
}

FiniteQuandle parse_builtin(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw ParseError("builtin spec needs the form family:args, got \"" + std::string(spec) + "\"");
  }
  const auto family = spec.substr(0, colon);
  const auto args = spec.substr(colon + 1);

  if (family == "product") {
    std::vector<FiniteQuandle> factors;
    for (auto part : split(args, '+')) factors.push_back(parse_builtin(part));
    return product_quandle(factors);
  }
  if (family == "trivial") return trivial_quandle(positive(args, spec));
  if (family == "dihedral") return dihedral_quandle(positive(args, spec));
  if (family == "affine") {
    const auto parts = split(args, ':');
    if (parts.size() != 2) throw ParseError("affine spec is affine:n:alpha");
    return affine_quandle(positive(parts[0], spec), integer(parts[1], spec));
  }
  if (family == "conj") return conj_quandle(parse_group_spec(args));
  if (family == "core") return core_quandle(parse_group_spec(args));
  if (family == "alexander") {
    const auto last = args.rfind(':');
    if (last == std::string_view::npos) throw ParseError("alexander spec is alexander:GROUP:k");
    const auto g = parse_group_spec(args.substr(0, last));
    return generalized_alexander_quandle(
        GroupAutomorphism::power_map(g, integer(args.substr(last + 1), spec)));
  }
  throw ParseError("unknown quandle family \"" + std::string(family) + "\"");
}

}  // namespace qorder::cli
