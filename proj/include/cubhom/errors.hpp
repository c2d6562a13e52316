#pragma once

#include <stdexcept>
#include <string>

namespace cubhom {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// intlinalg
struct DimensionMismatch : Error { using Error::Error; };
struct CompositionNotZero : Error { using Error::Error; };

// precubical
struct PrecubicalIdentityViolated : Error { using Error::Error; };
struct DanglingFace : Error { using Error::Error; };
struct RankMismatch : Error { using Error::Error; };
struct FunctorialityViolated : Error { using Error::Error; };

// cubical subsets of Euclidean space
struct IndexOutOfRange : Error { using Error::Error; };
struct BadInterval : Error { using Error::Error; };

// trace monoids and M-sets
struct UnknownEvent : Error { using Error::Error; };
struct ActionNotCompatible : Error { using Error::Error; };

// schemata and posets
struct NotDownwardClosed : Error { using Error::Error; };
struct NotAPoset : Error { using Error::Error; };

// asynchronous transition systems
struct UnusedEvent : Error { using Error::Error; };
struct NondeterministicEvent : Error { using Error::Error; };
struct BrokenDiamond : Error { using Error::Error; };

// front end
struct ParseError : Error { using Error::Error; };
struct UnsupportedKind : Error { using Error::Error; };

}  // namespace cubhom
