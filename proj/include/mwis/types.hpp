#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mwis {

// Dense vertex identifier. Contractions append fresh ids past the original range.
using VertexId = std::uint32_t;

// Vertex weights are positive integers; set weights are summed in 64 bits.
using Weight = std::int64_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Largest per-vertex weight accepted at load time. Together with |V| <= 2^31
// this keeps every w(S) inside 64 bits.
inline constexpr Weight kMaxInputWeight = Weight{1} << 20;

enum class ErrorCode {
  MalformedInput,
  ZeroWeight,
  DeadVertex,
  AdjacentMembers,
  InvalidKernelSolution,
  AdjacentPair,
  DegenerateConstraint,
  NotInCover,
  EmptyCover,
  BadBounds,
  NotIndependent,
  UnknownVertex,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

using VertexList = std::vector<VertexId>;

}  // namespace mwis
