#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace singular {

// Typed integer handle. Ids are never reused inside one complex, so a handle
// stays meaningful across quotients (it may become an alias of a class).
template <class Tag>
struct Id {
  std::int32_t value = -1;

  constexpr Id() = default;
  constexpr explicit Id(std::int32_t v) : value(v) {}

  constexpr bool valid() const { return value >= 0; }
  constexpr auto operator<=>(const Id&) const = default;
};

template <class Tag>
std::ostream& operator<<(std::ostream& out, Id<Tag> id) {
  return out << id.value;
}

using VertexId = Id<struct VertexTag>;
using EdgeId = Id<struct EdgeTag>;
using FaceId = Id<struct FaceTag>;

using Point3 = std::array<double, 3>;

enum class ErrorKind {
  MalformedInput,
  NotASurface,
  NonOrientable,
  Disconnected,
  UnsupportedSubdivision,
  InvalidCut,
  DegenerateGrid,
  NoSuchLoop,
  NameClash,
  CannotCoarsen,
  NotSimple,
  NotACycle,
  Overlap,
  ArcMismatch,
  DegenerateArc,
  LengthMismatch,
  SelfIdentification,
  CannotBeConnected,
  OracleTimeout,
  NoGeometry,
  Syntax,
  UnknownName,
  LoopReuse,
  DisjointnessConflict,
};

const char* to_string(ErrorKind kind);

class TopologyError : public std::runtime_error {
 public:
  TopologyError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace singular

template <class Tag>
struct std::hash<singular::Id<Tag>> {
  std::size_t operator()(singular::Id<Tag> id) const noexcept {
    return std::hash<std::int32_t>{}(id.value);
  }
};
