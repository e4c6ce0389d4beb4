#pragma once

#include <stdexcept>
#include <string>

namespace ford {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// isometric_sphere applied to an element fixing infinity (|c| ~ 0)
struct StabilizerElement : Error {
  using Error::Error;
};

// dual_edge on a face whose inverse is missing or invisible
struct UnpairedFace : Error {
  using Error::Error;
};

// tunnel_length without a CertifiedFordDomain certificate / gamma face
struct NotCertified : Error {
  using Error::Error;
};

// structurally invalid input (missing inverse among candidates, bad matrix,
// malformed config)
struct MalformedInput : Error {
  using Error::Error;
};

// homology: no nonzero classes left
struct EmptyInput : Error {
  using Error::Error;
};

// homology: build_plan requires every first coordinate nonzero
struct ZeroFirstCoordinate : Error {
  using Error::Error;
};

}  // namespace ford
