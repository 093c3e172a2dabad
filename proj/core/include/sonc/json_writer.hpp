#pragma once

#include <string>
#include <vector>

namespace sonc {

// Deterministic JSON emitter: keys in insertion order, floats at 17
// significant digits, no locale dependence. Reports must be byte-stable
// across runs, which rules out generic serializers.
class JsonWriter {
public:
    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(const std::string& k);
    JsonWriter& value(const std::string& s);
    JsonWriter& value(const char* s);
    JsonWriter& value(long v);
    JsonWriter& value(bool v);
    JsonWriter& value_double(double v);
    JsonWriter& value_raw(const std::string& raw);  // preformatted number
    JsonWriter& null();

    const std::string& str() const { return out_; }

private:
    void comma();
    void put_string(const std::string& s);

    std::string out_;
    std::vector<bool> needs_comma_;
    bool after_key_ = false;
};

}  // namespace sonc
