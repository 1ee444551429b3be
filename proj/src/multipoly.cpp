#include "mvvd/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "mvvd/error.hpp"

namespace mvvd {

namespace {

constexpr unsigned kFieldsPerWord = 4;
constexpr unsigned kFieldBits = 16;
constexpr std::uint64_t kGuard = 0x8000'8000'8000'8000ULL;

std::size_t words_for(std::size_t nvars) { return (nvars + kFieldsPerWord - 1) / kFieldsPerWord; }

unsigned shift_for(std::size_t var) {
  return kFieldBits * (kFieldsPerWord - 1 - static_cast<unsigned>(var % kFieldsPerWord));
}

// Descending-lex comparison of packed monomials: >0 if a comes first.
int compare(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    if (a[w] != b[w]) return a[w] > b[w] ? 1 : -1;
  }
  return 0;
}

void multiply_mono(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
                   std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t s = a[w] + b[w];
    if ((s & kGuard) != 0) throw Error(ErrorCode::exponent_overflow, "polynomial exponent overflow");
    out[w] = s;
  }
}

// out = b / a when a divides b.
bool divide_mono(const std::uint64_t* b, const std::uint64_t* a, std::uint64_t* out,
                 std::size_t words) {
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t diff = (b[w] | kGuard) - a[w];
    if ((diff & kGuard) != kGuard) return false;
    out[w] = diff ^ kGuard;
  }
  return true;
}

void pack(std::span<const unsigned> exps, std::uint64_t* out, std::size_t words) {
  std::fill(out, out + words, 0);
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] > MultiPoly::max_exponent) {
      throw Error(ErrorCode::exponent_overflow, "exponent " + std::to_string(exps[v]) + " too large");
    }
    out[v / kFieldsPerWord] |= static_cast<std::uint64_t>(exps[v]) << shift_for(v);
  }
}

bool valid_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

VariablesPtr make_variables(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (!valid_identifier(name)) throw Error(ErrorCode::parse_error, "bad variable name '" + name + "'");
    if (!seen.insert(name).second) throw Error(ErrorCode::parse_error, "duplicate variable '" + name + "'");
  }
  return std::make_shared<const Variables>(std::move(names));
}

bool same_variables(const VariablesPtr& a, const VariablesPtr& b) noexcept {
  return a == b || (a && b && *a == *b);
}

MultiPoly::MultiPoly(VariablesPtr vars) : vars_(std::move(vars)), words_(words_for(vars_->size())) {}

MultiPoly MultiPoly::constant(VariablesPtr vars, const mpz_class& c) {
  MultiPoly p(std::move(vars));
  if (c != 0) {
    std::vector<std::uint64_t> zero(p.words_, 0);
    p.push_term(zero.data(), c);
  }
  return p;
}

MultiPoly MultiPoly::variable(VariablesPtr vars, std::size_t index) {
  if (index >= vars->size()) throw Error(ErrorCode::index_out_of_range, "variable index out of range");
  std::vector<unsigned> exps(vars->size(), 0);
  exps[index] = 1;
  return monomial(std::move(vars), exps, 1);
}

MultiPoly MultiPoly::monomial(VariablesPtr vars, std::span<const unsigned> exponents,
                              const mpz_class& c) {
  if (exponents.size() != vars->size()) {
    throw Error(ErrorCode::shape_violation, "exponent vector length differs from variable count");
  }
  MultiPoly p(std::move(vars));
  if (c != 0) {
    std::vector<std::uint64_t> m(p.words_);
    pack(exponents, m.data(), p.words_);
    p.push_term(m.data(), c);
  }
  return p;
}

MultiPoly MultiPoly::from_terms(VariablesPtr vars,
                                std::vector<std::pair<std::vector<unsigned>, mpz_class>> terms) {
  MultiPoly p(std::move(vars));
  const std::size_t words = p.words_;
  std::vector<std::uint64_t> packed(terms.size() * words);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (terms[t].first.size() != p.variable_count()) {
      throw Error(ErrorCode::shape_violation, "exponent vector length differs from variable count");
    }
    pack(terms[t].first, packed.data() + t * words, words);
  }
  std::vector<std::size_t> order(terms.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare(packed.data() + a * words, packed.data() + b * words, words) > 0;
  });
  for (std::size_t k = 0; k < order.size();) {
    const std::uint64_t* m = packed.data() + order[k] * words;
    mpz_class sum = 0;
    std::size_t j = k;
    while (j < order.size() && compare(packed.data() + order[j] * words, m, words) == 0) {
      sum += terms[order[j]].second;
      ++j;
    }
    if (sum != 0) p.push_term(m, std::move(sum));
    k = j;
  }
  return p;
}

void MultiPoly::push_term(const std::uint64_t* m, mpz_class c) {
  exps_.insert(exps_.end(), m, m + words_);
  coeffs_.push_back(std::move(c));
}

void MultiPoly::require_same_ring(const MultiPoly& other) const {
  if (!same_variables(vars_, other.vars_)) {
    throw Error(ErrorCode::ring_mismatch, "polynomials over different variable lists");
  }
}

bool MultiPoly::is_constant() const noexcept {
  if (coeffs_.empty()) return true;
  return coeffs_.size() == 1 && std::all_of(exps_.begin(), exps_.end(), [](auto w) { return w == 0; });
}

mpz_class MultiPoly::constant_term() const {
  // The constant monomial is the smallest, so it can only be the last term.
  if (coeffs_.empty()) return 0;
  const std::uint64_t* m = mono(coeffs_.size() - 1);
  if (std::all_of(m, m + words_, [](auto w) { return w == 0; })) return coeffs_.back();
  return 0;
}

std::vector<unsigned> MultiPoly::exponents(std::size_t term) const {
  std::vector<unsigned> out(variable_count());
  const std::uint64_t* m = mono(term);
  for (std::size_t v = 0; v < out.size(); ++v) {
    out[v] = static_cast<unsigned>((m[v / kFieldsPerWord] >> shift_for(v)) & 0xFFFFU);
  }
  return out;
}

unsigned MultiPoly::total_degree() const {
  unsigned best = 0;
  for (std::size_t t = 0; t < term_count(); ++t) {
    auto e = exponents(t);
    best = std::max(best, std::accumulate(e.begin(), e.end(), 0U));
  }
  return best;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

MultiPoly MultiPoly::merge(const MultiPoly& a, const MultiPoly& b, bool subtract) {
  a.require_same_ring(b);
  MultiPoly r(a.vars_);
  const std::size_t words = a.words_;
  r.exps_.reserve(a.exps_.size() + b.exps_.size());
  r.coeffs_.reserve(a.coeffs_.size() + b.coeffs_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.term_count() || j < b.term_count()) {
    int cmp = 0;
    if (i == a.term_count()) {
      cmp = -1;
    } else if (j == b.term_count()) {
      cmp = 1;
    } else {
      cmp = compare(a.mono(i), b.mono(j), words);
    }
    if (cmp > 0) {
      r.push_term(a.mono(i), a.coeffs_[i]);
      ++i;
    } else if (cmp < 0) {
      r.push_term(b.mono(j), subtract ? mpz_class(-b.coeffs_[j]) : b.coeffs_[j]);
      ++j;
    } else {
      mpz_class c = subtract ? mpz_class(a.coeffs_[i] - b.coeffs_[j]) : mpz_class(a.coeffs_[i] + b.coeffs_[j]);
      if (c != 0) r.push_term(a.mono(i), std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return MultiPoly::merge(a, b, false); }
MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return MultiPoly::merge(a, b, true); }

// Heap-based sparse product: one heap entry per term of the shorter factor,
// each walking the longer factor, so products pop out in descending order.
MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_ring(b);
  MultiPoly r(a.vars_);
  if (a.is_zero() || b.is_zero()) return r;
  const MultiPoly& small = a.term_count() <= b.term_count() ? a : b;
  const MultiPoly& large = a.term_count() <= b.term_count() ? b : a;
  const std::size_t words = a.words_;
  const std::size_t s = small.term_count();
  const std::size_t t = large.term_count();

  if (s == 1) {
    std::vector<std::uint64_t> m(words);
    r.exps_.reserve(t * words);
    r.coeffs_.reserve(t);
    for (std::size_t j = 0; j < t; ++j) {
      multiply_mono(small.mono(0), large.mono(j), m.data(), words);
      r.push_term(m.data(), small.coeffs_[0] * large.coeffs_[j]);
    }
    return r;
  }

  std::vector<std::uint64_t> slot(s * words);
  std::vector<std::size_t> column(s, 0);
  std::vector<std::size_t> heap;
  heap.reserve(s);
  auto less = [&](std::size_t x, std::size_t y) {
    return compare(slot.data() + x * words, slot.data() + y * words, words) < 0;
  };
  auto push = [&](std::size_t i) {
    multiply_mono(small.mono(i), large.mono(column[i]), slot.data() + i * words, words);
    heap.push_back(i);
    std::push_heap(heap.begin(), heap.end(), less);
  };
  push(0);
  std::vector<std::uint64_t> current(words);
  mpz_class acc;
  while (!heap.empty()) {
    std::copy_n(slot.data() + heap.front() * words, words, current.data());
    acc = 0;
    while (!heap.empty() && compare(slot.data() + heap.front() * words, current.data(), words) == 0) {
      std::pop_heap(heap.begin(), heap.end(), less);
      std::size_t i = heap.back();
      heap.pop_back();
      mpz_addmul(acc.get_mpz_t(), small.coeffs_[i].get_mpz_t(), large.coeffs_[column[i]].get_mpz_t());
      if (column[i] == 0 && i + 1 < s) push(i + 1);
      if (++column[i] < t) push(i);
    }
    if (acc != 0) r.push_term(current.data(), acc);
  }
  return r;
}

MultiPoly MultiPoly::scaled(const mpz_class& c) const {
  if (c == 0) return MultiPoly(vars_);
  MultiPoly r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned long exponent) const {
  MultiPoly result = constant(vars_, 1);
  MultiPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1UL) result = result * base;
    exponent >>= 1UL;
    if (exponent != 0) base = base * base;
  }
  return result;
}

// Heap-based exact division: quotient terms are produced in descending
// order and the heap streams the products quotient_k * divisor_j (j >= 1).
MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
  require_same_ring(divisor);
  if (divisor.is_zero()) throw Error(ErrorCode::division_by_zero, "polynomial division by zero");
  MultiPoly q(vars_);
  if (is_zero()) return q;
  const std::size_t words = words_;
  const std::size_t t = divisor.term_count();
  const mpz_class& lead = divisor.coeffs_[0];

  std::vector<std::uint64_t> slot;
  std::vector<std::size_t> column;
  std::vector<std::size_t> heap;
  auto less = [&](std::size_t x, std::size_t y) {
    return compare(slot.data() + x * words, slot.data() + y * words, words) < 0;
  };
  auto push = [&](std::size_t k) {
    multiply_mono(q.mono(k), divisor.mono(column[k]), slot.data() + k * words, words);
    heap.push_back(k);
    std::push_heap(heap.begin(), heap.end(), less);
  };

  std::vector<std::uint64_t> current(words);
  std::vector<std::uint64_t> qmono(words);
  mpz_class acc;
  std::size_t next = 0;
  while (next < term_count() || !heap.empty()) {
    if (heap.empty()) {
      std::copy_n(mono(next), words, current.data());
    } else if (next == term_count()) {
      std::copy_n(slot.data() + heap.front() * words, words, current.data());
    } else {
      const std::uint64_t* top = slot.data() + heap.front() * words;
      std::copy_n(compare(mono(next), top, words) >= 0 ? mono(next) : top, words, current.data());
    }
    acc = 0;
    if (next < term_count() && compare(mono(next), current.data(), words) == 0) {
      acc = coeffs_[next];
      ++next;
    }
    while (!heap.empty() && compare(slot.data() + heap.front() * words, current.data(), words) == 0) {
      std::pop_heap(heap.begin(), heap.end(), less);
      std::size_t k = heap.back();
      heap.pop_back();
      mpz_submul(acc.get_mpz_t(), q.coeffs_[k].get_mpz_t(), divisor.coeffs_[column[k]].get_mpz_t());
      if (++column[k] < t) push(k);
    }
    if (acc == 0) continue;
    if (!divide_mono(current.data(), divisor.mono(0), qmono.data(), words) ||
        !mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t())) {
      throw Error(ErrorCode::inexact_division, "polynomial division leaves a remainder");
    }
    mpz_class c;
    mpz_divexact(c.get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
    q.push_term(qmono.data(), std::move(c));
    if (t > 1) {
      std::size_t k = q.term_count() - 1;
      slot.resize((k + 1) * words);
      column.push_back(1);
      push(k);
    }
  }
  return q;
}

MultiPoly exact_div(const MultiPoly& p, const MultiPoly& q) { return p.exact_div(q); }

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return same_variables(a.vars_, b.vars_) && a.exps_ == b.exps_ && a.coeffs_ == b.coeffs_;
}

std::string MultiPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t t = 0; t < term_count(); ++t) {
    const mpz_class& c = coeffs_[t];
    const bool negative = c < 0;
    if (t == 0) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    mpz_class magnitude = abs(c);
    std::string powers;
    auto e = exponents(t);
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!powers.empty()) powers += '*';
      powers += (*vars_)[v];
      if (e[v] > 1) powers += '^' + std::to_string(e[v]);
    }
    if (powers.empty()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += powers;
    } else {
      out += magnitude.get_str() + '*' + powers;
    }
  }
  return out;
}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  std::string_view number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  std::string_view identifier() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
    }
    return text_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::parse_error,
                what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<std::string> scan_identifiers(std::string_view text) {
  std::vector<std::string> names;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isalpha(static_cast<unsigned char>(text[i]))) {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_')) ++i;
      std::string name(text.substr(start, i - start));
      if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(std::move(name));
    } else {
      ++i;
    }
  }
  return names;
}

MultiPoly MultiPoly::parse(std::string_view text, VariablesPtr vars) {
  Lexer lex(text);
  const std::size_t nvars = vars->size();
  std::vector<std::pair<std::vector<unsigned>, mpz_class>> terms;
  if (lex.done()) lex.fail("empty polynomial");
  bool first = true;
  while (!lex.done()) {
    bool negative = false;
    if (lex.accept('+')) {
    } else if (lex.accept('-')) {
      negative = true;
    } else if (!first) {
      lex.fail("expected '+' or '-'");
    }
    first = false;
    std::vector<unsigned> exps(nvars, 0);
    mpz_class coef = 1;
    do {
      char c = lex.peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coef *= mpz_class(std::string(lex.number()));
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string_view name = lex.identifier();
        auto it = std::find(vars->begin(), vars->end(), name);
        if (it == vars->end()) lex.fail("unknown variable '" + std::string(name) + "'");
        unsigned long power = 1;
        if (lex.accept('^')) {
          std::string_view digits = lex.number();
          if (digits.empty()) lex.fail("expected exponent");
          if (digits.size() > 6) lex.fail("exponent too large");
          power = std::stoul(std::string(digits));
        }
        unsigned long total = exps[it - vars->begin()] + power;
        if (total > max_exponent) lex.fail("exponent too large");
        exps[it - vars->begin()] = static_cast<unsigned>(total);
      } else {
        lex.fail("expected coefficient or variable");
      }
    } while (lex.accept('*'));
    terms.emplace_back(std::move(exps), negative ? mpz_class(-coef) : coef);
  }
  return from_terms(std::move(vars), std::move(terms));
}

}  // namespace mvvd
