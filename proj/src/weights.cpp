#include "mwis/weights.hpp"

#include <charconv>
#include <string_view>

namespace mwis {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Weight> gen_weights(std::size_t n, const WeightGenSpec& spec) {
  if (spec.lo < 1 || spec.lo > spec.hi) {
    throw Error(ErrorCode::BadBounds, "weight bounds must satisfy 1 <= lo <= hi");
  }
  if (spec.hi > kMaxInputWeight) {
    throw Error(ErrorCode::BadBounds, "upper weight bound exceeds 2^20");
  }
  const auto range = static_cast<std::uint64_t>(spec.hi - spec.lo + 1);
  std::uint64_t state = spec.seed;
  std::vector<Weight> out(n);
  for (auto& w : out) w = spec.lo + static_cast<Weight>(splitmix64(state) % range);
  return out;
}

std::optional<WeightGenSpec> parse_weight_gen(const std::string& text) {
  constexpr std::string_view prefix = "gen:uniform:";
  if (text.rfind(prefix, 0) != 0) return std::nullopt;
  std::string_view rest(text);
  rest.remove_prefix(prefix.size());

  auto next_field = [&rest](auto& value) {
    const auto colon = rest.find(':');
    const auto field = rest.substr(0, colon);
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
      throw Error(ErrorCode::MalformedInput, "bad weight generator field '" +
                                                 std::string(field) + "'");
    }
    rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
    return colon != std::string_view::npos;
  };

  WeightGenSpec spec;
  const bool more1 = next_field(spec.lo);
  const bool more2 = more1 && next_field(spec.hi);
  if (!more1 || !more2) {
    throw Error(ErrorCode::MalformedInput, "expected gen:uniform:LO:HI:SEED");
  }
  if (next_field(spec.seed)) {
    throw Error(ErrorCode::MalformedInput, "trailing fields in weight generator");
  }
  if (spec.lo < 1 || spec.lo > spec.hi) {
    throw Error(ErrorCode::BadBounds, "weight bounds must satisfy 1 <= lo <= hi");
  }
  return spec;
}

}  // namespace mwis
