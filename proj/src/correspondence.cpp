#include "sl2green/correspondence.hpp"

#include <array>
#include <set>

#include "sl2green/gtree.hpp"

namespace sl2green {

namespace {

constexpr int kAny = 99;

struct Row {
  std::vector<std::array<int, 5>> patterns;
  int (*weight)(int p, int l, int s);
};

const std::vector<Row>& table() {
  static const std::vector<Row> rows = {
      {{{0, 0, kAny, -1, 0}, {0, 0, kAny, -1, 1}, {0, 0, 0, kAny, 2}},
       [](int, int, int) { return 0; }},
      {{{0, 0, 0, 1, 0}, {1, 0, 1, -1, 0}}, [](int, int, int s) { return s; }},
      {{{0, 0, 0, 1, 1}, {1, 0, 1, -1, 1}}, [](int, int, int s) { return s; }},
      {{{0, 0, 1, 1, 0}, {1, 0, 0, -1, 0}}, [](int p, int, int s) { return p - s; }},
      {{{0, 0, 1, 1, 1}, {1, 0, 0, -1, 1}}, [](int p, int, int s) { return p - s; }},
      {{{0, 1, 0, -1, 0}, {0, 2, 1, 1, 0}, {1, 1, 1, 1, 0}, {1, 2, 0, -1, 0}},
       [](int p, int l, int s) { return p - l - s; }},
      {{{0, 1, 0, -1, 1}, {0, 2, 1, 1, 1}, {1, 1, 1, 1, 1}, {1, 2, 0, -1, 1}},
       [](int p, int l, int s) { return p - l - s; }},
      {{{0, 1, kAny, 1, 0}, {0, 1, kAny, 1, 1}, {0, 1, 1, 1, 2}, {1, 2, kAny, 1, 0},
        {1, 2, kAny, 1, 1}, {1, 2, 0, 1, 2}},
       [](int, int l, int) { return l + 1; }},
      {{{0, 1, 1, -1, 0}, {0, 2, 0, 1, 0}, {1, 1, 0, 1, 0}, {1, 2, 1, -1, 0}},
       [](int, int l, int s) { return l + s; }},
      {{{0, 1, 1, -1, 1}, {0, 2, 0, 1, 1}, {1, 1, 0, 1, 1}, {1, 2, 1, -1, 1}},
       [](int, int l, int s) { return l + s; }},
      {{{kAny, 1, 1, -1, 2}, {0, 2, kAny, -1, 0}, {0, 2, kAny, -1, 1}, {0, 2, 0, kAny, 2},
        {1, 1, kAny, -1, 0}, {1, 1, kAny, -1, 1}},
       [](int p, int l, int) { return p - 1 - l; }},
      {{{1, 0, 0, kAny, 2}, {1, 0, kAny, 1, 0}, {1, 0, kAny, 1, 1}, {1, 1, 1, 1, 2},
        {1, 2, 0, -1, 2}},
       [](int, int, int) { return 1; }},
  };
  return rows;
}

bool matches(const std::array<int, 5>& pat, const FlagTuple& f) {
  const std::array<int, 5> v{f.iflag, f.lflag, f.sflag, f.eflag, f.sumflag};
  for (std::size_t k = 0; k < 5; ++k) {
    if (pat[k] != kAny && pat[k] != v[k]) return false;
  }
  return true;
}

}  // namespace

std::string to_string(const FlagTuple& f) {
  return "(" + std::to_string(f.iflag) + "," + std::to_string(f.lflag) + "," +
         std::to_string(f.sflag) + "," + std::to_string(f.eflag) + "," +
         std::to_string(f.sumflag) + ")";
}

FlagTuple flags_of(const PrimeContext& ctx, const WalkLabel& w) {
  check_walk_ranges(ctx, w.block, w.start, w.length, w.sign);
  FlagTuple f;
  f.iflag = w.block;
  f.lflag = w.start == 0 ? 0 : (w.start % 2 == 1 ? 1 : 2);
  f.sflag = w.length % 2;
  f.eflag = w.sign;
  const int sum = w.start + w.length;
  f.sumflag = sum <= ctx.half() ? 0 : (sum < ctx.p() - 1 ? 1 : 2);
  return f;
}

std::vector<int> matching_rows(const FlagTuple& f) {
  std::vector<int> out;
  const auto& rows = table();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& pat : rows[r].patterns) {
      if (matches(pat, f)) {
        out.push_back(static_cast<int>(r));
        break;
      }
    }
  }
  return out;
}

WalkLabel green_of_u(const PrimeContext& ctx, const ULabel& raw) {
  const ULabel u = validate_ulabel(ctx, raw.a, raw.b);
  if (u.is_projective(ctx)) {
    throw DomainError("projective label " + to_string(u) + " has no Green correspondent");
  }
  const int p = ctx.p(), h = ctx.half(), a = u.a, b = u.b, i = a % 2;
  int l, s, eps;
  if (a <= 1) {
    l = 0;
    s = b <= h ? 2 * b + i - 1 : 2 * (p - b) - i;
    eps = 2 * i - 1;
  } else if (a <= h) {
    if (2 * b <= p - a) {
      l = a - 1, s = 2 * b, eps = 1;
    } else if (b <= p - a) {
      l = a - 1, s = 2 * (p - a - b) + 1, eps = 1;
    } else if (2 * b <= 2 * p - a - 1) {
      l = 2 * (p - b) - a - 1, s = 2 * (a + b - p) + 1, eps = -1;
    } else {
      l = a + 2 * (b - p), s = 2 * (p - b), eps = 1;
    }
  } else {
    if (2 * b <= p - a) {
      l = p - a - 2 * b, s = 2 * b, eps = -1;
    } else if (b <= p - a) {
      l = a + 2 * b - p - 1, s = 2 * (p - a - b) + 1, eps = 1;
    } else if (2 * b <= 2 * p - a - 1) {
      l = p - 1 - a, s = 2 * (a + b - p) + 1, eps = -1;
    } else {
      l = p - 1 - a, s = 2 * (p - b), eps = -1;
    }
  }
  return canonicalize_walk(ctx, i, l, s, eps);
}

ULabel green_of_walk(const PrimeContext& ctx, const WalkLabel& raw) {
  WalkLabel w = canonicalize_walk(ctx, raw);
  const int p = ctx.p();
  const int b = L(ctx, w.block, w.start, w.length);
  if (w.length == 1) return ULabel{ctx.reduce_weight(p - b), b};

  // Walks ending at the leaf are looked up from the leaf end; see the ledger note.
  if (w.start > 0 && w.start + w.length == p - 1) {
    w = WalkLabel{w.block, 0, w.length, reversed_sign(w.length, w.sign)};
  }
  const FlagTuple f = flags_of(ctx, w);
  const auto rows = matching_rows(f);
  if (rows.empty()) {
    throw InternalError("no row of the correspondent table matches flags " + to_string(f) +
                        " of " + to_string(w));
  }
  if (rows.size() > 1) {
    throw InternalError("flags " + to_string(f) + " of " + to_string(w) +
                        " match more than one row of the correspondent table");
  }
  const int a = table()[rows.front()].weight(p, w.start, w.length);
  return ULabel{ctx.reduce_weight(a), b};
}

BijectionReport verify_bijection(const PrimeContext& ctx) {
  BijectionReport rep;
  std::set<WalkLabel> images;
  for (const auto& u : nonprojective_ulabels(ctx)) {
    ++rep.labels;
    try {
      const auto w = green_of_u(ctx, u);
      if (!is_canonical(ctx, w)) rep.failures.push_back(to_string(u) + " -> non-canonical " + to_string(w));
      if (w.block != u.block()) rep.failures.push_back(to_string(u) + " -> wrong block " + to_string(w));
      if (!images.insert(w).second) rep.failures.push_back(to_string(u) + " -> repeated " + to_string(w));
      const auto back = green_of_walk(ctx, w);
      if (back != u) rep.failures.push_back(to_string(u) + " -> " + to_string(w) + " -> " + to_string(back));
    } catch (const std::exception& e) {
      rep.failures.push_back(to_string(u) + ": " + e.what());
    }
  }
  rep.distinct_images = static_cast<int>(images.size());
  for (int i : {0, 1}) {
    for (const auto& w : canonical_walks(ctx, i)) {
      try {
        const auto u = green_of_walk(ctx, w);
        const auto again = green_of_u(ctx, u);
        if (again != w) rep.failures.push_back(to_string(w) + " -> " + to_string(u) + " -> " + to_string(again));
      } catch (const std::exception& e) {
        rep.failures.push_back(to_string(w) + ": " + e.what());
      }
    }
  }
  if (rep.distinct_images != 2 * count_nonprojective_per_block(ctx)) {
    rep.failures.push_back("image has " + std::to_string(rep.distinct_images) + " labels");
  }
  return rep;
}

}  // namespace sl2green
