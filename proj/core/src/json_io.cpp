#include "braidcert/json_io.hpp"

#include <cstdlib>
#include <string>

#include "braidcert/errors.hpp"

namespace braidcert::json_io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

BraidWord word_from(const Json& j, int strands, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<Letter> letters;
  for (const Json& v : j) {
    const int l = as_int(v, what);
    if (l == 0 || std::abs(l) >= strands) {
      throw ParseError(std::string(what) + ": generator index " + std::to_string(l) +
                       " out of range for B_" + std::to_string(strands));
    }
    letters.push_back(l);
  }
  return BraidWord(strands, std::move(letters));
}

Json word_to(const BraidWord& w) {
  Json arr = Json::array();
  for (Letter l : w.letters()) arr.push_back(l);
  return arr;
}

int strands_from(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 2) throw ParseError("n must be at least 2");
  return n;
}

}  // namespace

Json to_json(const Certificate& c) {
  Json moves = Json::array();
  for (const HurwitzMove& m : c.moves) {
    Json mv;
    mv["k"] = m.k;
    mv["dir"] = m.direction == MoveDirection::kForward ? "fwd" : "inv";
    moves.push_back(std::move(mv));
  }
  Json out;
  out["source_length"] = c.source_length;
  out["moves"] = std::move(moves);
  return out;
}

Certificate certificate_from_json(const Json& j) {
  const Json& len = field(j, "source_length");
  if (!len.is_number_unsigned() && !(len.is_number_integer() && len.get<long long>() >= 0)) {
    throw ParseError("source_length must be a non-negative integer");
  }
  Certificate c{len.get<std::size_t>(), {}};
  const Json& moves = field(j, "moves");
  if (!moves.is_array()) throw ParseError("moves must be an array");
  for (const Json& mv : moves) {
    HurwitzMove m;
    m.k = as_int(field(mv, "k"), "k");
    const Json& dir = field(mv, "dir");
    if (dir == "fwd") {
      m.direction = MoveDirection::kForward;
    } else if (dir == "inv") {
      m.direction = MoveDirection::kInverse;
    } else {
      throw ParseError("dir must be \"fwd\" or \"inv\"");
    }
    c.moves.push_back(m);
  }
  try {
    c.validate();
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what());
  }
  return c;
}

Json to_json(const frames::FrameFactorization& ff) {
  Json out;
  out["n"] = ff.frame.strands;
  out["conjugator"] = word_to(ff.frame.conjugator);
  out["indices"] = word_to(ff.indices);
  return out;
}

frames::FrameFactorization frame_factorization_from_json(const Json& j) {
  const int n = strands_from(j);
  frames::FrameFactorization ff{frames::Frame{n, word_from(field(j, "conjugator"), n, "conjugator")},
                                word_from(field(j, "indices"), n, "indices")};
  if (!ff.indices.is_positive()) throw ParseError("indices must be positive frame indices");
  return ff;
}

Json to_json(const Factorization& f) {
  Json entries = Json::array();
  for (const BraidWord& e : f.entries()) entries.push_back(word_to(e));
  Json out;
  out["n"] = f.strands();
  out["entries"] = std::move(entries);
  return out;
}

Factorization factorization_from_json(const Json& j) {
  if (j.is_object() && j.contains("indices")) {
    return frames::realize(frame_factorization_from_json(j));
  }
  const int n = strands_from(j);
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) throw ParseError("entries must be an array of words");
  std::vector<BraidWord> words;
  for (const Json& e : entries) words.push_back(word_from(e, n, "entry"));
  return Factorization(n, std::move(words));
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace braidcert::json_io
