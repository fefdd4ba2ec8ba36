#include "sl2green/labels.hpp"

#include <set>
#include <sstream>

namespace sl2green {

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

int multiplicative_order(long long x, int p) {
  long long v = ((x % p) + p) % p;
  if (v == 0) throw DomainError("multiplicative_order: zero has no order");
  long long acc = v;
  int k = 1;
  while (acc != 1) {
    acc = acc * v % p;
    ++k;
  }
  return k;
}

int primitive_root(int p) {
  if (p == 2) return 1;
  for (int g = 2; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1) return g;
  }
  throw InternalError("no primitive root found");
}

PrimeContext::PrimeContext(int p) : p_(p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw DomainError("p = " + std::to_string(p) + " is not an odd prime");
  }
  zeta_ = primitive_root(p);
  half_ = (p - 1) / 2;
  vareps_ = (p % 4 == 1) ? 1 : -1;
}

int PrimeContext::reduce_weight(long long a) const {
  const long long m = p_ - 1;
  return static_cast<int>(((a % m) + m) % m);
}

int PrimeContext::mod_p(long long x) const {
  return static_cast<int>(((x % p_) + p_) % p_);
}

int g_block_of_simple(const PrimeContext& ctx, int t) {
  if (t < 1 || t > ctx.p()) {
    throw DomainError("simple index t = " + std::to_string(t) + " outside [1, p]");
  }
  if (t == ctx.p()) return 2;
  return (t % 2 == 1) ? 0 : 1;
}

ULabel validate_ulabel(const PrimeContext& ctx, long long a, long long b) {
  if (b < 1 || b > ctx.p()) {
    throw DomainError("U label dimension b = " + std::to_string(b) + " outside [1, " +
                      std::to_string(ctx.p()) + "]");
  }
  return ULabel{ctx.reduce_weight(a), static_cast<int>(b)};
}

void check_walk_ranges(const PrimeContext& ctx, int i, int l, int s, int eps) {
  const int p = ctx.p();
  if (i != 0 && i != 1) {
    throw DomainError("walk block i = " + std::to_string(i) + " not in {0,1}");
  }
  if (l < 0 || l > (p - 3) / 2) {
    throw DomainError("walk start l = " + std::to_string(l) + " outside [0, " +
                      std::to_string((p - 3) / 2) + "]");
  }
  if (s < 1 || s > p - 1) {
    throw DomainError("walk length s = " + std::to_string(s) + " outside [1, " +
                      std::to_string(p - 1) + "]");
  }
  if (l + s > p - 1) {
    throw DomainError("walk overruns the tree: l + s = " + std::to_string(l + s) + " > p-1 = " +
                      std::to_string(p - 1));
  }
  if (eps != 1 && eps != -1) {
    throw DomainError("walk sign eps = " + std::to_string(eps) + " not in {-1,1}");
  }
}

int reversed_sign(int s, int eps) { return (s % 2 == 1) ? eps : -eps; }

bool is_type_two(const PrimeContext& ctx, const WalkLabel& w) {
  return w.start + w.length > ctx.half();
}

WalkLabel reverse_walk(const PrimeContext& ctx, const WalkLabel& w) {
  check_walk_ranges(ctx, w.block, w.start, w.length, w.sign);
  if (!is_type_two(ctx, w)) {
    throw DomainError("only walks through the exceptional vertex can be re-read from the other end");
  }
  return WalkLabel{w.block, ctx.p() - 1 - w.start - w.length, w.length,
                   reversed_sign(w.length, w.sign)};
}

WalkLabel canonicalize_walk(const PrimeContext& ctx, int i, int l, int s, int eps) {
  check_walk_ranges(ctx, i, l, s, eps);
  WalkLabel w{i, l, s, eps};
  if (s == 1) {
    w.sign = -1;
    return w;
  }
  if (is_type_two(ctx, w)) {
    const int far_tail = ctx.p() - 1 - l - s;
    if (l < far_tail) w = reverse_walk(ctx, w);
    if (w.start == ctx.p() - 1 - w.start - w.length) w.sign = -1;
  }
  return w;
}

WalkLabel canonicalize_walk(const PrimeContext& ctx, const WalkLabel& w) {
  return canonicalize_walk(ctx, w.block, w.start, w.length, w.sign);
}

bool is_canonical(const PrimeContext& ctx, const WalkLabel& w) {
  try {
    return canonicalize_walk(ctx, w) == w;
  } catch (const DomainError&) {
    return false;
  }
}

std::vector<WalkLabel> canonical_walks(const PrimeContext& ctx, int i) {
  if (i != 0 && i != 1) throw DomainError("block index must be 0 or 1");
  const int p = ctx.p();
  std::set<WalkLabel> seen;
  for (int l = 0; l <= (p - 3) / 2; ++l) {
    for (int s = 1; l + s <= p - 1; ++s) {
      for (int eps : {-1, 1}) seen.insert(canonicalize_walk(ctx, i, l, s, eps));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<ULabel> nonprojective_ulabels(const PrimeContext& ctx) {
  std::vector<ULabel> out;
  out.reserve(static_cast<std::size_t>(ctx.p() - 1) * (ctx.p() - 1));
  for (int a = 0; a <= ctx.p() - 2; ++a) {
    for (int b = 1; b <= ctx.p() - 1; ++b) out.push_back(ULabel{a, b});
  }
  return out;
}

int count_nonprojective_per_block(const PrimeContext& ctx) {
  const int expected = (ctx.p() - 1) * (ctx.p() - 1) / 2;
  for (int i : {0, 1}) {
    const auto n = static_cast<int>(canonical_walks(ctx, i).size());
    if (n != expected) {
      throw InternalError("block " + std::to_string(i) + " has " + std::to_string(n) +
                          " canonical walks, expected " + std::to_string(expected));
    }
  }
  return expected;
}

int projective_cover_dim(const PrimeContext& ctx, int t) {
  g_block_of_simple(ctx, t);
  return (t == 1 || t == ctx.p()) ? ctx.p() : 2 * ctx.p();
}

void BDecomposition::add(const ULabel& u, Multiplicity n) {
  if (n == 0) return;
  auto& slot = mult[u];
  slot += n;
  if (slot == 0) mult.erase(u);
}

void BDecomposition::add(const BDecomposition& other, Multiplicity scale) {
  for (const auto& [u, n] : other.mult) add(u, n * scale);
}

long long BDecomposition::dim() const {
  long long d = 0;
  for (const auto& [u, n] : mult) d += static_cast<long long>(u.b) * n;
  return d;
}

BDecomposition BDecomposition::nonprojective_part(const PrimeContext& ctx) const {
  BDecomposition out;
  for (const auto& [u, n] : mult) {
    if (!u.is_projective(ctx)) out.add(u, n);
  }
  return out;
}

void GDecomposition::add_walk(const WalkLabel& w, Multiplicity n) {
  if (n == 0) return;
  auto& slot = walks[w];
  slot += n;
  if (slot == 0) walks.erase(w);
}

void GDecomposition::add_projective(int t, Multiplicity n) {
  if (n == 0) return;
  auto& slot = proj[t];
  slot += n;
  if (slot == 0) proj.erase(t);
}

void GDecomposition::add(const GDecomposition& other, Multiplicity scale) {
  for (const auto& [w, n] : other.walks) add_walk(w, n * scale);
  for (const auto& [t, n] : other.proj) add_projective(t, n * scale);
}

std::string to_string(const ULabel& u) {
  return "U(" + std::to_string(u.a) + "," + std::to_string(u.b) + ")";
}

std::string to_string(const WalkLabel& w) {
  std::ostringstream os;
  os << "M(" << w.block << "," << w.start << "," << w.length << "," << w.sign << ")";
  return os.str();
}

std::string to_string(const GSimpleLabel& v) { return "V(" + std::to_string(v.t) + ")"; }

namespace {

void append_term(std::ostringstream& os, bool& first, const std::string& name, Multiplicity n) {
  if (!first) os << " + ";
  first = false;
  os << name;
  if (n != 1) os << "^" << n;
}

}  // namespace

std::string to_string(const BDecomposition& d) {
  if (d.mult.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [u, n] : d.mult) append_term(os, first, to_string(u), n);
  return os.str();
}

std::string to_string(const GDecomposition& d) {
  if (d.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, n] : d.walks) append_term(os, first, to_string(w), n);
  for (const auto& [t, n] : d.proj) {
    append_term(os, first, "P(" + std::to_string(t) + ")", n);
  }
  return os.str();
}

}  // namespace sl2green
