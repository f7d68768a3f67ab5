#include "agbounds/divisor_expr.hpp"

#include <cctype>
#include <charconv>

namespace agc {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Divisor parse() {
    Divisor d;
    skip_space();
    if (at_end()) throw DivisorParseError("empty divisor", pos_);
    int sign = 1;
    if (peek() == '+' || peek() == '-') sign = take() == '-' ? -1 : 1;
    term(sign, d);
    for (skip_space(); !at_end(); skip_space()) {
      const char c = peek();
      if (c != '+' && c != '-') throw DivisorParseError("expected '+' or '-'", pos_);
      ++pos_;
      term(c == '-' ? -1 : 1, d);
    }
    return d;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void term(int sign, Divisor& d) {
    skip_space();
    const std::size_t start = pos_;
    int value = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) throw DivisorParseError("coefficient out of range", start);
    if (ec != std::errc()) throw DivisorParseError("expected an integer", start);
    pos_ = static_cast<std::size_t>(end - text_.data());
    skip_space();
    if (at_end() || peek() != '*') throw DivisorParseError("expected '*'", pos_);
    ++pos_;
    skip_space();
    const std::string_view rest = text_.substr(pos_);
    if (rest.starts_with("Pinf")) {
      d.inf += sign * value;
      pos_ += 4;
    } else if (rest.starts_with("P0")) {
      d.origin += sign * value;
      pos_ += 2;
    } else {
      throw DivisorParseError("expected 'P0' or 'Pinf'", pos_);
    }
    if (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) {
      throw DivisorParseError("unexpected character", pos_);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Divisor parse_divisor(std::string_view text) { return Parser(text).parse(); }

std::string render_divisor(const Divisor& d) {
  std::string out = std::to_string(d.origin) + "*P0 ";
  out += d.inf < 0 ? "- " : "+ ";
  out += std::to_string(d.inf < 0 ? -static_cast<long long>(d.inf) : d.inf) + "*Pinf";
  return out;
}

}  // namespace agc
