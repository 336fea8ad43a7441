#include "fst/parse.hpp"

#include <charconv>

namespace fst {

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::size_t pos() const { return pos_; }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    return std::string(s_.substr(start, pos_ - start));
  }

  unsigned small_number(const char* what) {
    std::size_t at = pos();
    std::string d = digits();
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), v);
    if (ec != std::errc() || v > 65535) throw ParseError(std::string(what) + " out of range", at);
    return v;
  }

  std::size_t variable() {
    std::size_t at = pos();
    if (!accept('x')) throw ParseError("expected a variable x<k>", at);
    // The index must follow 'x' immediately.
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError("expected a variable index after 'x'", pos_);
    }
    unsigned idx = small_number("variable index");
    if (idx == 0) throw ParseError("variables are numbered from x1", at);
    return idx - 1;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

namespace detail {

std::vector<RawTerm> parse_terms(std::string_view text) {
  Lexer lx(text);
  std::vector<RawTerm> out;
  if (lx.done()) throw ParseError("empty polynomial", 0);
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    if (lx.accept('+')) {
    } else if (lx.accept('-')) {
      sign = -1;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", lx.pos());
    }
    first = false;
    RawTerm term{mpz_class(sign), {}};
    bool need_factor = true;
    while (need_factor) {
      char c = lx.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term.coeff *= mpz_class(lx.digits());
        if (lx.accept('^')) throw ParseError("powers of integer constants are not supported", lx.pos() - 1);
      } else if (c == 'x') {
        std::size_t v = lx.variable();
        unsigned e = 1;
        if (lx.accept('^')) e = lx.small_number("exponent");
        term.powers.emplace_back(v, e);
      } else {
        throw ParseError(c == '\0' ? std::string("unexpected end of input")
                                   : std::string("unexpected character '") + c + "'",
                         lx.pos());
      }
      need_factor = lx.accept('*');
    }
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace detail

AnyField parse_field_spec(std::string_view spec) {
  if (spec == "Q" || spec == "q" || spec == "QQ") return RationalField{};
  if (spec.size() > 2 && (spec.substr(0, 2) == "p=" || spec.substr(0, 2) == "P=")) {
    std::uint64_t p = 0;
    auto body = spec.substr(2);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size()) throw ParseError("bad field characteristic", 2);
    if (p >= (1u << 31) || !is_prime(p)) throw ParseError("field characteristic must be prime", 2);
    return PrimeField(static_cast<std::uint32_t>(p));
  }
  throw ParseError("field must be 'p=<prime>' or 'Q'", 0);
}

std::size_t max_variable_index(std::string_view text) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1, v = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
      v = v * 10 + static_cast<std::size_t>(text[j] - '0');
      if (v > 1000000) throw ParseError("variable index out of range", i);
      ++j;
    }
    if (j == i + 1) throw ParseError("expected a variable index after 'x'", j);
    best = std::max(best, v);
    i = j - 1;
  }
  return best;
}

std::vector<std::string> split_list(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(sep, start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    std::size_t a = 0, b = piece.size();
    while (a < b && std::isspace(static_cast<unsigned char>(piece[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(piece[b - 1]))) --b;
    if (b > a) out.emplace_back(piece.substr(a, b - a));
    start = end + 1;
  }
  return out;
}

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> out;
  for (auto& line : split_list(text, '\n')) {
    auto hash = line.find('#');
    auto body = split_list(std::string_view(line).substr(0, hash), '\n');
    if (!body.empty()) out.push_back(body.front());
  }
  return out;
}

}  // namespace fst
