#pragma once

#include <cctype>
#include <string>

#include "hexcgt/game.hpp"

namespace hexcgt {

class ValueParseError : public std::runtime_error {
 public:
  ValueParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)),
        position(pos) {}
  size_t position;
};

// Prints a form in the value grammar: atom names, `{` L `|` R `}` with
// comma-separated options in structural order and no whitespace.
inline std::string print_value(Universe& u, const GameNode* g) {
  if (g->is_atom()) return g->poset->name_of(g->atom);
  std::string s = "{";
  bool first = true;
  for (auto* c : u.left_options(g)) {
    if (!first) s += ",";
    first = false;
    s += print_value(u, c);
  }
  s += "|";
  first = true;
  for (auto* c : u.right_options(g)) {
    if (!first) s += ",";
    first = false;
    s += print_value(u, c);
  }
  s += "}";
  return s;
}

namespace detail {

class ValueParser {
 public:
  ValueParser(Universe& u, const Poset& p, const std::string& text)
      : u_(u), poset_(p), text_(text) {}

  const GameNode* parse() {
    const GameNode* g = value();
    skip_ws();
    if (pos_ != text_.size()) throw ValueParseError("trailing input", pos_);
    return g;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const GameNode* value() {
    skip_ws();
    if (pos_ >= text_.size()) throw ValueParseError("expected value", pos_);
    if (text_[pos_] == '{') {
      ++pos_;
      std::vector<const GameNode*> lo = option_list('|');
      ++pos_;  // '|'
      std::vector<const GameNode*> ro = option_list('}');
      ++pos_;  // '}'
      return u_.form(poset_, std::move(lo), std::move(ro));
    }
    size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) throw ValueParseError("expected atom or '{'", pos_);
    std::string name = text_.substr(start, pos_ - start);
    if (!poset_.contains(name))
      throw ValueParseError("unknown atom '" + name + "' in poset " + poset_.name(),
                            start);
    return u_.atom(poset_, name);
  }

  std::vector<const GameNode*> option_list(char stop) {
    std::vector<const GameNode*> out;
    while (true) {
      out.push_back(value());
      skip_ws();
      if (pos_ >= text_.size())
        throw ValueParseError(std::string("expected ',' or '") + stop + "'", pos_);
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (text_[pos_] == stop) return out;
      throw ValueParseError(std::string("expected ',' or '") + stop + "'", pos_);
    }
  }

  Universe& u_;
  const Poset& poset_;
  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace detail

inline const GameNode* parse_value(Universe& u, const std::string& text,
                                   const Poset& poset = Poset::p3()) {
  return detail::ValueParser(u, poset, text).parse();
}

}  // namespace hexcgt
