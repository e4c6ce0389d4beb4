#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ford/moebius.hpp"

namespace ford {

// Deterministic JSON emitter: insertion-ordered keys, doubles as %.17g
// (lossless round-trip), two-space indentation, trailing newline.  Parsing
// is left to a stock library; only emission needs byte stability.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double v);
  JsonWriter& value(int v);
  JsonWriter& value(long long v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v);
  JsonWriter& value(complexd z);           // [re, im]
  JsonWriter& raw_number(std::string_view digits);  // pre-rendered integer

  // convenience: key + scalar
  template <typename T>
  JsonWriter& field(std::string_view k, T v) {
    key(k);
    return value(v);
  }

  std::string take();

 private:
  void comma_for_value();
  void newline_indent();
  std::string out_;
  std::vector<bool> first_;    // per open container
  std::vector<bool> is_obj_;
  bool pending_key_ = false;
};

std::string json_escape(std::string_view s);
std::string format_double(double v);

}  // namespace ford
