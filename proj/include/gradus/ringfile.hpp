#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "gradus/groebner.hpp"
#include "gradus/parse.hpp"

namespace gradus {

/// Parsed ring-spec document: one ring, named lets, an optional ideal.
///
/// Line-oriented grammar ('#' starts a comment, blank lines ignored):
///   ring NAME
///   var NAME : WEIGHT [odd]     (zero or more)
///   let NAME = EXPR             (zero or more; may use vars and earlier lets)
///   ideal                       (optional section)
///   gen EXPR                    (one per generator)
struct RingFile {
  std::string name;
  Ring ring;
  Scope lets;
  Ideal ideal;  // empty generator list when the file has no ideal section
};

RingFile parse_ring_file(std::string_view text);
RingFile load_ring_file(const std::string& path);

}  // namespace gradus
