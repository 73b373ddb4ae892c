#pragma once

#include <stdexcept>
#include <string>

namespace filltop {

enum class errc {
  // slope / farey
  invalid_slope,
  search_too_large,
  domain_error,
  // diagram validation
  port_reuse,
  unvisited_port,
  empty_component,
  disconnected,
  non_integer_genus,
  invalid_passage,
  // diagram operations
  equal_slopes,
  invalid_degree,
  unknown_face,
  unknown_component,
  bad_cocycle,
  // strat
  not_minimal_position,
  has_punctures,
  unsupported_signature,
  // geom
  not_hyperbolic,
  // bounds / cli
  invalid_params,
  usage,
  io_error,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_slope: return "InvalidSlope";
    case errc::search_too_large: return "SearchTooLarge";
    case errc::domain_error: return "DomainError";
    case errc::port_reuse: return "PortReuse";
    case errc::unvisited_port: return "UnvisitedPort";
    case errc::empty_component: return "EmptyComponent";
    case errc::disconnected: return "Disconnected";
    case errc::non_integer_genus: return "NonIntegerGenus";
    case errc::invalid_passage: return "InvalidPassage";
    case errc::equal_slopes: return "EqualSlopes";
    case errc::invalid_degree: return "InvalidDegree";
    case errc::unknown_face: return "UnknownFace";
    case errc::unknown_component: return "UnknownComponent";
    case errc::bad_cocycle: return "BadCocycle";
    case errc::not_minimal_position: return "NotMinimalPosition";
    case errc::has_punctures: return "HasPunctures";
    case errc::unsupported_signature: return "UnsupportedSignature";
    case errc::not_hyperbolic: return "NotHyperbolic";
    case errc::invalid_params: return "InvalidParams";
    case errc::usage: return "Usage";
    case errc::io_error: return "IoError";
  }
  return "Unknown";
}

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

}  // namespace filltop
