#include "primspec/circle.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "primspec/errors.hpp"

namespace primspec {
namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() ||
      v < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("rational arithmetic overflow");
  return static_cast<std::int64_t>(v);
}

Rational make_reduced(i128 num, i128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num, b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a > 1) {
    num /= a;
    den /= a;
  }
  return Rational(narrow(num), narrow(den));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

const Rational kZero{0};
const Rational kOne{1};

}  // namespace

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValidationError("zero denominator");
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    if (part.empty()) throw ValidationError("malformed rational '" + std::string(text) + "'");
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc() || ptr != part.data() + part.size())
      throw ValidationError("malformed rational '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::int64_t den = parse_int(text.substr(slash + 1));
  if (den <= 0)
    throw ValidationError("denominator must be positive in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return make_reduced(i128{a.num_} * b.den_ + i128{b.num_} * a.den_,
                      i128{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return make_reduced(i128{a.num_} * b.den_ - i128{b.num_} * a.den_,
                      i128{a.den_} * b.den_);
}

Rational operator/(const Rational& a, std::int64_t d) {
  if (d == 0) throw std::domain_error("division by zero");
  return make_reduced(a.num_, i128{a.den_} * d);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  return i128{a.num_} * b.den_ <=> i128{b.num_} * a.den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

CirclePoint::CirclePoint(Rational turn) : turn_(turn) {
  if (turn_ < kZero || turn_ >= kOne)
    throw ValidationError("circle parameter " + turn_.to_string() +
                          " is outside [0, 1)");
}

// ---------------------------------------------------------------------------
// CircleSet

CircleSet::CircleSet(std::vector<Interval> raw) : intervals_(std::move(raw)) {
  normalize();
}

void CircleSet::normalize() {
  std::erase_if(intervals_, [](const Interval& i) {
    return i.lo > i.hi || (i.lo == i.hi && !(i.lo_closed && i.hi_closed));
  });
  std::sort(intervals_.begin(), intervals_.end(),
            [](const Interval& a, const Interval& b) {
              if (a.lo != b.lo) return a.lo < b.lo;
              return a.lo_closed && !b.lo_closed;
            });
  std::vector<Interval> merged;
  for (const Interval& i : intervals_) {
    if (!merged.empty()) {
      Interval& cur = merged.back();
      const bool touches =
          i.lo < cur.hi || (i.lo == cur.hi && (cur.hi_closed || i.lo_closed));
      if (touches) {
        if (i.hi > cur.hi) {
          cur.hi = i.hi;
          cur.hi_closed = i.hi_closed;
        } else if (i.hi == cur.hi) {
          cur.hi_closed = cur.hi_closed || i.hi_closed;
        }
        continue;
      }
    }
    merged.push_back(i);
  }
  intervals_ = std::move(merged);
}

CircleSet CircleSet::all() {
  return CircleSet(std::vector<Interval>{{kZero, kOne, true, false}});
}

CircleSet CircleSet::point(CirclePoint t) {
  return CircleSet(std::vector<Interval>{{t.turn(), t.turn(), true, true}});
}

CircleSet CircleSet::arc(CirclePoint lo, CirclePoint hi, bool lo_closed,
                         bool hi_closed) {
  const Rational& a = lo.turn();
  const Rational& b = hi.turn();
  if (a < b) return CircleSet(std::vector<Interval>{{a, b, lo_closed, hi_closed}});
  if (a == b) {
    if (lo_closed || hi_closed) return all();
    return CircleSet(std::vector<Interval>{{kZero, a, true, false},
                                           {a, kOne, false, false}});
  }
  return CircleSet(std::vector<Interval>{{a, kOne, lo_closed, false},
                                         {kZero, b, true, hi_closed}});
}

CircleSet CircleSet::parse(std::string_view text) {
  text = trim(text);
  std::vector<std::string_view> items;
  std::size_t depth = 0, start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '[' || c == '(') ++depth;
    if ((c == ']' || c == ')') && depth > 0) --depth;
    if (c == ',' && depth == 0) {
      items.push_back(trim(text.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (!text.empty()) items.push_back(trim(text.substr(start)));

  CircleSet out;
  for (std::string_view item : items) {
    if (item == "T") {
      out = out | all();
    } else if (item.starts_with("point:")) {
      out = out | point(CirclePoint::parse(item.substr(6)));
    } else if (item.starts_with("arc:")) {
      std::string_view body = trim(item.substr(4));
      if (body.size() < 5 || (body.front() != '[' && body.front() != '(') ||
          (body.back() != ']' && body.back() != ')'))
        throw ValidationError("malformed arc '" + std::string(item) + "'");
      const bool lo_closed = body.front() == '[';
      const bool hi_closed = body.back() == ']';
      body = body.substr(1, body.size() - 2);
      const auto comma = body.find(',');
      if (comma == std::string_view::npos)
        throw ValidationError("malformed arc '" + std::string(item) + "'");
      out = out | arc(CirclePoint::parse(body.substr(0, comma)),
                      CirclePoint::parse(body.substr(comma + 1)), lo_closed,
                      hi_closed);
    } else {
      throw ValidationError("unrecognised circle set item '" +
                            std::string(item) + "'");
    }
  }
  return out;
}

bool CircleSet::is_all() const noexcept {
  return intervals_.size() == 1 && intervals_[0].lo == kZero &&
         intervals_[0].lo_closed && intervals_[0].hi == kOne;
}

bool CircleSet::contains(const CirclePoint& p) const {
  const Rational& t = p.turn();
  return std::any_of(intervals_.begin(), intervals_.end(),
                     [&](const Interval& i) {
                       const bool above = i.lo < t || (i.lo == t && i.lo_closed);
                       const bool below = t < i.hi || (t == i.hi && i.hi_closed);
                       return above && below;
                     });
}

bool CircleSet::is_subset_of(const CircleSet& other) const {
  return std::all_of(intervals_.begin(), intervals_.end(), [&](const Interval& i) {
    return std::any_of(other.intervals_.begin(), other.intervals_.end(),
                       [&](const Interval& o) {
                         const bool lo_ok = o.lo < i.lo ||
                                            (o.lo == i.lo && (o.lo_closed || !i.lo_closed));
                         const bool hi_ok = i.hi < o.hi ||
                                            (o.hi == i.hi && (o.hi_closed || !i.hi_closed));
                         return lo_ok && hi_ok;
                       });
  });
}

std::vector<CirclePoint> CircleSet::endpoints() const {
  std::vector<CirclePoint> out;
  for (const Interval& i : intervals_) {
    out.emplace_back(i.lo);
    out.emplace_back(i.hi == kOne ? kZero : i.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CircleSet operator|(const CircleSet& a, const CircleSet& b) {
  std::vector<CircleSet::Interval> raw = a.intervals_;
  raw.insert(raw.end(), b.intervals_.begin(), b.intervals_.end());
  return CircleSet(std::move(raw));
}

std::string CircleSet::to_string() const {
  if (is_all()) return "T";
  auto arc_text = [](const Rational& lo, const Rational& hi, bool lc, bool hc) {
    return std::string("arc:") + (lc ? "[" : "(") + lo.to_string() + "," +
           (hi == kOne ? kZero : hi).to_string() + (hc ? "]" : ")");
  };
  std::vector<std::string> items;
  std::size_t first = 0;
  std::size_t last = intervals_.size();
  const bool wraps = intervals_.size() >= 2 && intervals_.front().lo == kZero &&
                     intervals_.front().lo_closed && intervals_.back().hi == kOne;
  if (wraps) {
    first = 1;
    last = intervals_.size() - 1;
  }
  for (std::size_t k = first; k < last; ++k) {
    const Interval& i = intervals_[k];
    if (i.lo == i.hi) {
      items.push_back("point:" + i.lo.to_string());
    } else {
      items.push_back(arc_text(i.lo, i.hi, i.lo_closed, i.hi_closed));
    }
  }
  if (wraps) {
    const Interval& head = intervals_.front();
    const Interval& tail = intervals_.back();
    items.push_back(arc_text(tail.lo, head.hi, tail.lo_closed, head.hi_closed));
  }
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ",";
    out += items[k];
  }
  return out;
}

CircleSet circle_closure(const CircleSet& d) {
  std::vector<CircleSet::Interval> raw;
  for (const auto& i : d.intervals()) {
    raw.push_back({i.lo, i.hi, true, i.hi != kOne});
    if (i.hi == kOne) raw.push_back({kZero, kZero, true, true});
  }
  CircleSet out;
  for (const auto& i : raw) {
    out = out | (i.lo == i.hi ? CircleSet::point(CirclePoint(i.lo))
                              : CircleSet::arc(CirclePoint(i.lo),
                                               CirclePoint(i.hi == kOne ? kZero : i.hi),
                                               i.lo_closed, i.hi_closed));
  }
  return out;
}

}  // namespace primspec
