#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ptlab {

/// Formats a finite double with 17 significant digits (round-trip exact).
std::string json_real(double v);

std::string json_escape(std::string_view s);

/// Minimal streaming JSON writer. Key order is call order, output is compact
/// and byte-deterministic, reals go through json_real.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(double v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(int v);
  JsonWriter& value(std::string_view v);
  JsonWriter& value(const char* v);
  JsonWriter& null();
  /// Splices a pre-serialized JSON token (number or object) verbatim.
  JsonWriter& raw(std::string_view token);

  const std::string& str() const { return out_; }

 private:
  void prefix();

  std::string out_;
  std::vector<char> first_;  // per open container: 1 until the first element lands
  bool expect_value_ = false;
};

}  // namespace ptlab
