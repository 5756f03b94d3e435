#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "probid/rational.hpp"

namespace probid {

/// Closed integer term in one variable j: nonnegative integer constants, j,
/// +, *, ^ and parentheses. ^ binds tightest and is right-associative.
/// Example: "2^j", "(j+1)^2*3".
class Term {
 public:
  static Term parse(std::string_view text);

  BigInt eval(const BigInt& j) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  Term(std::shared_ptr<const Node> root, std::string text)
      : root_(std::move(root)), text_(std::move(text)) {}

  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace probid
