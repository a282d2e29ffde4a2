#pragma once

// Gauss words: parsing, rendering, validation and signing helpers.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gauss {

using Position = std::size_t;

/// Crossing index. Always >= 1.
class Label {
 public:
  explicit Label(std::uint64_t value);

  std::uint64_t value() const noexcept { return value_; }
  auto operator<=>(const Label&) const = default;

 private:
  std::uint64_t value_;
};

enum class Strand : std::uint8_t { Over, Under };
enum class Sign : std::uint8_t { Plus, Minus };
enum class Signedness : std::uint8_t { Unsigned, Signed };
enum class Direction : std::uint8_t { Left, Right };

constexpr Strand opposite(Strand s) noexcept {
  return s == Strand::Over ? Strand::Under : Strand::Over;
}
constexpr Sign opposite(Sign s) noexcept {
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}
constexpr Direction opposite(Direction d) noexcept {
  return d == Direction::Left ? Direction::Right : Direction::Left;
}

char to_char(Strand s) noexcept;
char to_char(Sign s) noexcept;
char to_char(Direction d) noexcept;

struct Symbol {
  Strand strand;
  Label label;
  std::optional<Sign> sign;

  bool operator==(const Symbol&) const = default;
};

std::string to_string(const Symbol& s);

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by parse(). token_index is 1-based, column is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t token_index, std::size_t column, std::string token,
             const std::string& reason);

  std::size_t token_index() const noexcept { return token_index_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& token() const noexcept { return token_; }

 private:
  std::size_t token_index_;
  std::size_t column_;
  std::string token_;
};

/// An operation that requires a valid (or correctly typed) word got something else.
class InvalidWord : public Error {
 public:
  using Error::Error;
};

/// A configured size bound was exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------

/// A cyclic word of crossing symbols. The base point is the first symbol.
///
/// Construction only checks that the symbols agree on signedness; the pairing
/// conditions are checked by validate(). Instances are immutable.
class GaussWord {
 public:
  GaussWord() = default;
  /// Throws InvalidWord if some symbols carry a sign and others do not.
  explicit GaussWord(std::vector<Symbol> symbols);
  /// Explicit signedness; needed for the empty signed word. Throws InvalidWord
  /// if a symbol disagrees with it.
  GaussWord(std::vector<Symbol> symbols, Signedness signedness);

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  const Symbol& operator[](Position p) const { return symbols_.at(p); }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Signedness signedness() const noexcept { return signedness_; }
  bool is_signed() const noexcept { return signedness_ == Signedness::Signed; }

  /// Distinct labels in ascending order.
  std::vector<Label> labels() const;

  bool operator==(const GaussWord&) const = default;

 private:
  std::vector<Symbol> symbols_;
  Signedness signedness_ = Signedness::Unsigned;
};

GaussWord parse(std::string_view text);
/// Canonical ASCII form, e.g. "U1+ O2+ U3+". Inverse of parse().
std::string render(const GaussWord& w);

// ---------------------------------------------------------------------------
// Validation

struct Violation {
  Label label;
  // Occurrence counts of the label. Unsigned symbols are counted as Plus.
  std::size_t under_plus = 0;
  std::size_t over_plus = 0;
  std::size_t under_minus = 0;
  std::size_t over_minus = 0;

  std::string describe(Signedness signedness) const;
};

struct ValidationReport {
  std::vector<Violation> violations;  // ascending by label

  bool ok() const noexcept { return violations.empty(); }
};

ValidationReport validate(const GaussWord& w);
/// Throws InvalidWord listing the first violation.
void require_valid(const GaussWord& w);

// ---------------------------------------------------------------------------
// Positional structure of a valid word

/// Precomputed counterpart table and dense label numbering for a valid word.
class Pairing {
 public:
  /// Throws InvalidWord if w is not valid.
  explicit Pairing(const GaussWord& w);

  std::size_t size() const noexcept { return partner_.size(); }
  std::size_t crossings() const noexcept { return labels_.size(); }
  Position partner(Position p) const { return partner_.at(p); }
  /// Index of the label at p in the ascending label list.
  std::size_t crossing(Position p) const { return dense_.at(p); }
  std::span<const Label> labels() const noexcept { return labels_; }
  Position under_position(std::size_t crossing) const { return under_.at(crossing); }
  Position over_position(std::size_t crossing) const { return over_.at(crossing); }
  /// Dense index of a label; throws InvalidWord if absent.
  std::size_t index_of(Label l) const;

 private:
  std::vector<Position> partner_;
  std::vector<std::size_t> dense_;
  std::vector<Label> labels_;
  std::vector<Position> under_;
  std::vector<Position> over_;
};

Position counterpart(const GaussWord& w, Position p);
Position cyclic_neighbor(const GaussWord& w, Position p, Direction d);

constexpr Position cyclic_step(Position p, Direction d, std::size_t length) noexcept {
  return d == Direction::Right ? (p + 1) % length : (p + length - 1) % length;
}

// ---------------------------------------------------------------------------
// Signing

using Signing = std::map<Label, Sign>;

GaussWord strip_signs(const GaussWord& w);
GaussWord apply_signing(const GaussWord& w, const Signing& s);

/// Enumerates all 2^n signings of a valid unsigned word.
///
/// Labels are taken in ascending order and read as the digits of a binary
/// counter (first label most significant, Plus = 0), so the all-Plus signing
/// comes first and the all-Minus signing last.
class SigningEnumerator {
 public:
  explicit SigningEnumerator(GaussWord w);

  std::optional<GaussWord> next();
  std::uint64_t total() const noexcept { return total_; }

 private:
  GaussWord word_;
  std::vector<Label> labels_;
  std::uint64_t index_ = 0;
  std::uint64_t total_ = 0;
};

std::vector<GaussWord> enumerate_signings(const GaussWord& w);

// ---------------------------------------------------------------------------
// Relabeling utilities used by algorithms that are symmetric under them.

GaussWord rotate(const GaussWord& w, std::size_t shift);
GaussWord relabel(const GaussWord& w, const std::function<Label(Label)>& f);
GaussWord flip_signs(const GaussWord& w);

}  // namespace gauss
