#include "gausswords/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace gauss {

Label::Label(std::uint64_t value) : value_(value) {
  if (value == 0) throw InvalidWord("crossing label must be >= 1");
}

char to_char(Strand s) noexcept { return s == Strand::Over ? 'O' : 'U'; }
char to_char(Sign s) noexcept { return s == Sign::Plus ? '+' : '-'; }
char to_char(Direction d) noexcept { return d == Direction::Left ? 'L' : 'R'; }

std::string to_string(const Symbol& s) {
  std::string out(1, to_char(s.strand));
  out += std::to_string(s.label.value());
  if (s.sign) out += to_char(*s.sign);
  return out;
}

namespace {

std::string parse_error_message(std::size_t token_index, std::size_t column,
                                const std::string& token, const std::string& reason) {
  std::ostringstream os;
  os << "syntax error at token " << token_index << " (column " << column << ", '" << token
     << "'): " << reason;
  return os.str();
}

}  // namespace

ParseError::ParseError(std::size_t token_index, std::size_t column, std::string token,
                       const std::string& reason)
    : Error(parse_error_message(token_index, column, token, reason)),
      token_index_(token_index),
      column_(column),
      token_(std::move(token)) {}

GaussWord::GaussWord(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) return;
  const bool first_signed = symbols_.front().sign.has_value();
  for (const auto& s : symbols_) {
    if (s.sign.has_value() != first_signed)
      throw InvalidWord("word mixes signed and unsigned symbols");
  }
  signedness_ = first_signed ? Signedness::Signed : Signedness::Unsigned;
}

std::vector<Label> GaussWord::labels() const {
  std::vector<Label> out;
  out.reserve(symbols_.size());
  for (const auto& s : symbols_) out.push_back(s.label);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GaussWord::GaussWord(std::vector<Symbol> symbols, Signedness signedness)
    : symbols_(std::move(symbols)), signedness_(signedness) {
  const bool want = signedness == Signedness::Signed;
  for (const auto& s : symbols_) {
    if (s.sign.has_value() != want)
      throw InvalidWord(want ? "signed word has an unsigned symbol"
                             : "unsigned word has a signed symbol");
  }
}

GaussWord parse(std::string_view text) {
  std::vector<Symbol> symbols;
  std::optional<bool> word_signed;
  std::size_t index = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string token(text.substr(start, i - start));
    ++index;

    auto fail = [&](const std::string& reason) -> ParseError {
      return ParseError(index, start, token, reason);
    };

    Strand strand;
    if (token[0] == 'O') {
      strand = Strand::Over;
    } else if (token[0] == 'U') {
      strand = Strand::Under;
    } else {
      throw fail("expected 'O' or 'U'");
    }

    std::size_t k = 1;
    std::uint64_t value = 0;
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    while (k < token.size() && std::isdigit(static_cast<unsigned char>(token[k]))) {
      const auto digit = static_cast<std::uint64_t>(token[k] - '0');
      if (value > (max - digit) / 10) throw fail("label out of range");
      value = value * 10 + digit;
      ++k;
    }
    if (k == 1) throw fail("expected a crossing label");
    if (value == 0) throw fail("crossing label must be >= 1");

    std::optional<Sign> sign;
    if (k < token.size()) {
      if (token[k] == '+') {
        sign = Sign::Plus;
      } else if (token[k] == '-') {
        sign = Sign::Minus;
      } else {
        throw fail(std::string("illegal character '") + token[k] + "'");
      }
      ++k;
    }
    if (k != token.size()) throw fail("trailing characters after sign");

    if (!word_signed) {
      word_signed = sign.has_value();
    } else if (*word_signed != sign.has_value()) {
      throw fail("mixed signed and unsigned tokens");
    }
    symbols.push_back(Symbol{strand, Label(value), sign});
  }
  return GaussWord(std::move(symbols));
}

std::string render(const GaussWord& w) {
  std::string out;
  for (const auto& s : w.symbols()) {
    if (!out.empty()) out += ' ';
    out += to_string(s);
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string Violation::describe(Signedness signedness) const {
  const auto n = label.value();
  std::ostringstream os;
  os << "label " << n << ": ";
  if (signedness == Signedness::Unsigned) {
    os << "|w|_(U," << n << ")=" << under_plus << ", |w|_(O," << n << ")=" << over_plus
       << "; expected exactly one of each";
  } else {
    os << "|w|_(U+," << n << ")=" << under_plus << ", |w|_(O+," << n << ")=" << over_plus
       << ", |w|_(U-," << n << ")=" << under_minus << ", |w|_(O-," << n << ")=" << over_minus
       << "; expected one U and one O with the same sign";
  }
  return os.str();
}

ValidationReport validate(const GaussWord& w) {
  std::map<Label, Violation> counts;
  for (const auto& s : w.symbols()) {
    auto [it, inserted] = counts.try_emplace(s.label, Violation{s.label});
    Violation& v = it->second;
    const bool minus = s.sign == Sign::Minus;
    if (s.strand == Strand::Under) {
      ++(minus ? v.under_minus : v.under_plus);
    } else {
      ++(minus ? v.over_minus : v.over_plus);
    }
  }
  ValidationReport report;
  for (const auto& [label, v] : counts) {
    const bool plus_pair = v.under_plus == 1 && v.over_plus == 1;
    const bool minus_pair = v.under_minus == 1 && v.over_minus == 1;
    const bool plus_empty = v.under_plus == 0 && v.over_plus == 0;
    const bool minus_empty = v.under_minus == 0 && v.over_minus == 0;
    const bool ok = (plus_pair && minus_empty) || (minus_pair && plus_empty);
    if (!ok) report.violations.push_back(v);
  }
  return report;
}

void require_valid(const GaussWord& w) {
  const auto report = validate(w);
  if (!report.ok())
    throw InvalidWord("invalid Gauss word: " + report.violations.front().describe(w.signedness()));
}

// ---------------------------------------------------------------------------

Pairing::Pairing(const GaussWord& w) {
  require_valid(w);
  labels_ = w.labels();
  const std::size_t n = w.size();
  partner_.assign(n, 0);
  dense_.assign(n, 0);
  under_.assign(labels_.size(), 0);
  over_.assign(labels_.size(), 0);
  std::unordered_map<std::uint64_t, std::size_t> index;
  index.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) index.emplace(labels_[i].value(), i);
  for (Position p = 0; p < n; ++p) {
    const auto& s = w[p];
    const std::size_t c = index.at(s.label.value());
    dense_[p] = c;
    (s.strand == Strand::Under ? under_ : over_)[c] = p;
  }
  for (Position p = 0; p < n; ++p) {
    const std::size_t c = dense_[p];
    partner_[p] = w[p].strand == Strand::Under ? over_[c] : under_[c];
  }
}

std::size_t Pairing::index_of(Label l) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
  if (it == labels_.end() || *it != l)
    throw InvalidWord("label " + std::to_string(l.value()) + " does not occur in the word");
  return static_cast<std::size_t>(it - labels_.begin());
}

Position counterpart(const GaussWord& w, Position p) {
  if (p >= w.size()) throw std::out_of_range("position out of range");
  return Pairing(w).partner(p);
}

Position cyclic_neighbor(const GaussWord& w, Position p, Direction d) {
  if (w.empty()) throw InvalidWord("cyclic neighbor of an empty word");
  if (p >= w.size()) throw std::out_of_range("position out of range");
  return cyclic_step(p, d, w.size());
}

// ---------------------------------------------------------------------------

GaussWord strip_signs(const GaussWord& w) {
  if (!w.is_signed() && !w.empty()) throw InvalidWord("strip_signs expects a signed word");
  require_valid(w);
  std::vector<Symbol> out(w.symbols().begin(), w.symbols().end());
  for (auto& s : out) s.sign.reset();
  return GaussWord(std::move(out), Signedness::Unsigned);
}

GaussWord apply_signing(const GaussWord& w, const Signing& signing) {
  if (w.is_signed()) throw InvalidWord("apply_signing expects an unsigned word");
  require_valid(w);
  std::vector<Symbol> out(w.symbols().begin(), w.symbols().end());
  for (auto& s : out) {
    auto it = signing.find(s.label);
    if (it == signing.end())
      throw InvalidWord("signing has no sign for label " + std::to_string(s.label.value()));
    s.sign = it->second;
  }
  return GaussWord(std::move(out), Signedness::Signed);
}

SigningEnumerator::SigningEnumerator(GaussWord w) : word_(std::move(w)) {
  if (word_.is_signed()) throw InvalidWord("signings are enumerated for unsigned words");
  require_valid(word_);
  labels_ = word_.labels();
  if (labels_.size() >= 64) throw LimitExceeded("too many crossings to enumerate signings");
  total_ = std::uint64_t{1} << labels_.size();
}

std::optional<GaussWord> SigningEnumerator::next() {
  if (index_ >= total_) return std::nullopt;
  Signing signing;
  const std::size_t n = labels_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool minus = (index_ >> (n - 1 - i)) & 1U;
    signing.emplace(labels_[i], minus ? Sign::Minus : Sign::Plus);
  }
  ++index_;
  return apply_signing(word_, signing);
}

std::vector<GaussWord> enumerate_signings(const GaussWord& w) {
  SigningEnumerator e(w);
  std::vector<GaussWord> out;
  out.reserve(e.total());
  while (auto s = e.next()) out.push_back(std::move(*s));
  return out;
}

GaussWord rotate(const GaussWord& w, std::size_t shift) {
  if (w.empty()) return w;
  std::vector<Symbol> out(w.symbols().begin(), w.symbols().end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(shift % out.size()), out.end());
  return GaussWord(std::move(out), w.signedness());
}

GaussWord relabel(const GaussWord& w, const std::function<Label(Label)>& f) {
  std::vector<Symbol> out(w.symbols().begin(), w.symbols().end());
  for (auto& s : out) s.label = f(s.label);
  return GaussWord(std::move(out), w.signedness());
}

GaussWord flip_signs(const GaussWord& w) {
  std::vector<Symbol> out(w.symbols().begin(), w.symbols().end());
  for (auto& s : out)
    if (s.sign) s.sign = opposite(*s.sign);
  return GaussWord(std::move(out), w.signedness());
}

}  // namespace gauss
