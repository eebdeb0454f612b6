#include "chungfeller/path_io.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace chungfeller {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected integer");
    if (text_[start] == '+') ++start;
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) fail("integer out of range");
    return value;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                "bad path literal at offset " + std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t as_integer(const nlohmann::ordered_json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw Error(ErrorCode::ParseError, std::string(what) + " must be an integer");
  }
  return j.get<std::int64_t>();
}

}  // namespace

std::vector<Step> parse_steps(std::string_view text) {
  Scanner in(text);
  std::vector<Step> steps;
  do {
    in.expect('(');
    const auto x = in.integer();
    in.expect(',');
    const auto y = in.integer();
    in.expect(')');
    steps.push_back({x, y});
  } while (!in.at_end());
  return steps;
}

LatticePath parse_path(std::string_view text) { return LatticePath(parse_steps(text)); }

std::string format_path(const LatticePath& path) {
  std::ostringstream out;
  for (const Step& s : path.steps()) out << '(' << s.x << ',' << s.y << ')';
  return out.str();
}

nlohmann::ordered_json to_json(const LatticePath& path) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const Step& s : path.steps()) steps.push_back({s.x, s.y});
  return {{"steps", std::move(steps)}};
}

nlohmann::ordered_json to_json(const PointedLatticePath& q) {
  nlohmann::ordered_json out = to_json(q.path());
  out["root_offset"] = q.root_offset();
  return out;
}

std::vector<Step> steps_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "steps must be an array");
  std::vector<Step> steps;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(ErrorCode::ParseError, "each step must be a two-element array");
    }
    steps.push_back({as_integer(pair[0], "x"), as_integer(pair[1], "y")});
  }
  return steps;
}

LatticePath path_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("steps")) {
    throw Error(ErrorCode::ParseError, "path object needs a \"steps\" member");
  }
  return LatticePath(steps_from_json(j.at("steps")));
}

PointedLatticePath pointed_from_json(const nlohmann::ordered_json& j) {
  LatticePath path = path_from_json(j);
  const std::int64_t offset = j.contains("root_offset") ? as_integer(j.at("root_offset"), "root_offset") : 0;
  return PointedLatticePath(std::move(path), offset);
}

nlohmann::ordered_json to_json(const Distribution& d, int n, std::int64_t m, Statistic stat) {
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [r, count] : d.counts) counts[std::to_string(r)] = count.str();
  return {{"n", n},
          {"m", m},
          {"statistic", std::string(to_string(stat))},
          {"counts", std::move(counts)},
          {"total", d.total.str()}};
}

std::string to_csv(const Distribution& d) {
  std::ostringstream out;
  out << "r,count\n";
  for (const auto& [r, count] : d.counts) out << r << ',' << count.str() << '\n';
  return out.str();
}

}  // namespace chungfeller
