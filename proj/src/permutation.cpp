#include "commgraph/permutation.hpp"

#include <cctype>
#include <charconv>

#include "commgraph/error.hpp"

namespace commgraph {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  for (std::size_t p = 0; p < degree; ++p) images_[p] = static_cast<Point>(p);
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point p : images) {
    if (p >= images.size() || seen[p]) {
      fail(ErrorCode::NonBijectiveGenerator, "image array is not a bijection");
    }
    seen[p] = true;
  }
  return Permutation(std::move(images));
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0 || degree > 65535) {
    fail(ErrorCode::BadParameter, "permutation degree out of range");
  }
  std::vector<Point> images(degree);
  for (std::size_t p = 0; p < degree; ++p) images[p] = static_cast<Point>(p);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) fail(ErrorCode::ParseError, "empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') {
      fail(ErrorCode::ParseError, "expected '(' in '" + std::string(text) + "'");
    }
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i < text.size() && text[i] == ',') {  // tolerate GAP-style commas
        ++i;
        continue;
      }
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
      if (ec != std::errc() || ptr == text.data() + i) {
        fail(ErrorCode::ParseError, "bad point in '" + std::string(text) + "'");
      }
      i = static_cast<std::size_t>(ptr - text.data());
      if (value < 1 || value > degree) {
        fail(ErrorCode::NonBijectiveGenerator,
             "point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      }
      Point p = static_cast<Point>(value - 1);
      if (used[p]) {
        fail(ErrorCode::NonBijectiveGenerator, "point repeated in '" + std::string(text) + "'");
      }
      used[p] = true;
      cycle.push_back(p);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t p = 0; p < images_.size(); ++p) {
    if (images_[p] != p) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t p = 0; p < images_.size(); ++p) inv[images_[p]] = static_cast<Point>(p);
  return Permutation(std::move(inv));
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out += ' ';
      out += std::to_string(p + 1);
      first = false;
      p = images_[p];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& lhs, const Permutation& rhs) {
  if (lhs.degree() != rhs.degree()) {
    fail(ErrorCode::BadParameter, "composing permutations of different degree");
  }
  std::vector<Point> out(lhs.degree());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = lhs(rhs(static_cast<Point>(p)));
  return Permutation(std::move(out));
}

}  // namespace commgraph
