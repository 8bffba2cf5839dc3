#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "braidcert/frames.hpp"
#include "braidcert/hurwitz.hpp"

namespace braidcert::json_io {

using Json = nlohmann::ordered_json;

/// {"source_length": m, "moves": [{"k": int, "dir": "fwd"|"inv"}, ...]}
Json to_json(const Certificate& c);
Certificate certificate_from_json(const Json& j);

/// {"n": int, "conjugator": [signed ints], "indices": [ints]}
Json to_json(const frames::FrameFactorization& ff);
frames::FrameFactorization frame_factorization_from_json(const Json& j);

/// {"n": int, "entries": [[signed ints], ...]}
Json to_json(const Factorization& f);

/// Accepts either a frame factorization (realized) or an explicit
/// {"n", "entries"} tuple.
Factorization factorization_from_json(const Json& j);

/// All parse helpers throw ParseError on schema violations.
Json parse(std::string_view text);

}  // namespace braidcert::json_io
