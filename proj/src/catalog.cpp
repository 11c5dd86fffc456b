#include "fsa/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace fsa {

namespace {

void check_vertex(int vertex) {
  if (vertex < 0 || vertex > 4) {
    throw Error(ErrorCode::InvalidParams, "vertex must be in 0..4, got " + std::to_string(vertex));
  }
}

// Small vocabulary for writing the representatives as stacked blocks.
struct Blocks {
  Field f;

  ExactMatrix id(std::size_t n) const { return identity(f, n); }
  ExactMatrix zero(std::size_t m, std::size_t n) const { return zeros(f, m, n); }
  ExactMatrix anti(std::size_t n) const { return anti_identity(f, n); }
  // °pi_{n,n+1}
  ExactMatrix dpi(std::size_t n) const { return pi_drop_last(f, n); }
  // pi°_{n,n+1}
  ExactMatrix pid(std::size_t n) const { return pi_drop_first(f, n); }
};

LambdaModule postprojective_zero(const Blocks& k, std::size_t n) {
  return LambdaModule(vstack({k.id(n), k.zero(n + 1, n)}), vstack({k.zero(n + 1, n), k.id(n)}),
                      vstack({k.zero(1, n), k.id(n), k.anti(n)}),
                      vstack({k.id(n), k.anti(n), k.zero(1, n)}));
}

// P(2n+1, i)
LambdaModule postprojective_odd(const Blocks& k, std::size_t n, int i) {
  const ExactMatrix narrow = vstack({k.zero(1, n), k.id(n), k.id(n), k.zero(1, n)});
  const ExactMatrix top = vstack({k.id(n + 1), k.zero(n + 1, n + 1)});
  const ExactMatrix bottom = vstack({k.zero(n + 1, n + 1), k.id(n + 1)});
  const ExactMatrix both = vstack({k.id(n + 1), k.id(n + 1)});
  switch (i) {
    case 1: return LambdaModule(narrow, top, bottom, both);
    case 2: return LambdaModule(both, narrow, top, bottom);
    case 3: return LambdaModule(bottom, both, narrow, top);
    default: return LambdaModule(top, bottom, both, narrow);
  }
}

// P(2n, i)
LambdaModule postprojective_even(const Blocks& k, std::size_t n, int i) {
  const ExactMatrix wide = vstack({k.id(n + 1), k.zero(n, n + 1)});
  const ExactMatrix lower = vstack({k.zero(n + 1, n), k.id(n)});
  const ExactMatrix skip_first = vstack({k.zero(1, n), k.id(n), k.id(n)});
  const ExactMatrix skip_middle = vstack({k.id(n), k.zero(1, n), k.id(n)});
  switch (i) {
    case 1: return LambdaModule(wide, lower, skip_first, skip_middle);
    case 2: return LambdaModule(skip_middle, wide, lower, skip_first);
    case 3: return LambdaModule(skip_first, skip_middle, wide, lower);
    // The B block is [0_{1,n}; I_n; I_n]; the printed [0_{1,n}; I_n] has
    // only n+1 rows and cannot be right.
    default: return LambdaModule(lower, skip_first, skip_middle, wide);
  }
}

LambdaModule preinjective_zero(const Blocks& k, std::size_t n) {
  return LambdaModule(vstack({k.zero(n, n + 1), k.id(n + 1)}),
                      vstack({k.id(n + 1), k.zero(n, n + 1)}),
                      vstack({k.anti(n + 1), k.dpi(n)}), vstack({k.pid(n), k.anti(n + 1)}));
}

// I(2n+1, i). The two pi-blocks differ: the one following the [I; 0] slot
// cyclically is pi°, the next one is °pi.
LambdaModule preinjective_odd(const Blocks& k, std::size_t n, int i) {
  const ExactMatrix narrow = vstack({k.zero(n + 1, n), k.id(n)});
  const ExactMatrix top = vstack({k.id(n + 1), k.zero(n, n + 1)});
  const ExactMatrix shift_first = vstack({k.id(n + 1), k.pid(n)});
  const ExactMatrix shift_last = vstack({k.id(n + 1), k.dpi(n)});
  switch (i) {
    case 1: return LambdaModule(narrow, top, shift_first, shift_last);
    case 2: return LambdaModule(shift_last, narrow, top, shift_first);
    case 3: return LambdaModule(shift_first, shift_last, narrow, top);
    default: return LambdaModule(top, shift_first, shift_last, narrow);
  }
}

// I(2n, i)
LambdaModule preinjective_even(const Blocks& k, std::size_t n, int i) {
  const ExactMatrix wide = vstack({k.dpi(n), k.pid(n)});
  const ExactMatrix lower = vstack({k.zero(n, n), k.id(n)});
  const ExactMatrix upper = vstack({k.id(n), k.zero(n, n)});
  const ExactMatrix both = vstack({k.id(n), k.id(n)});
  switch (i) {
    case 1: return LambdaModule(wide, lower, upper, both);
    case 2: return LambdaModule(both, wide, lower, upper);
    case 3: return LambdaModule(upper, both, wide, lower);
    default: return LambdaModule(lower, upper, both, wide);
  }
}

LambdaModule exceptional_odd(const Blocks& k, std::size_t l, int s, TubePoint t) {
  const ExactMatrix thin = vstack({k.id(l - 1), k.zero(1, l - 1), k.id(l - 1)});
  const ExactMatrix shifted = vstack({k.dpi(l - 1), k.id(l)});
  const ExactMatrix upper = vstack({k.id(l - 1), k.zero(l, l - 1)});
  const ExactMatrix lower = vstack({k.zero(l - 1, l), k.id(l)});
  if (t == TubePoint::Zero) {
    return s == 0 ? LambdaModule(thin, shifted, upper, lower)
                  : LambdaModule(shifted, thin, lower, upper);
  }
  if (t == TubePoint::One) {
    return s == 0 ? LambdaModule(shifted, lower, thin, upper)
                  : LambdaModule(thin, upper, shifted, lower);
  }
  return s == 0 ? LambdaModule(shifted, thin, upper, lower)
                : LambdaModule(thin, shifted, lower, upper);
}

LambdaModule exceptional_even(const Blocks& k, std::size_t l, int s, TubePoint t) {
  const ExactMatrix upper = vstack({k.id(l), k.zero(l, l)});
  const ExactMatrix lower = vstack({k.zero(l, l), k.id(l)});
  const ExactMatrix both = vstack({k.id(l), k.id(l)});
  const ExactMatrix nil = vstack({jordan(l, FieldElement(k.f, 0)), k.id(l)});
  if (t == TubePoint::Zero) {
    return s == 0 ? LambdaModule(upper, lower, both, nil) : LambdaModule(lower, upper, nil, both);
  }
  if (t == TubePoint::One) {
    return s == 0 ? LambdaModule(lower, nil, upper, both) : LambdaModule(upper, both, lower, nil);
  }
  return s == 0 ? LambdaModule(lower, upper, both, nil) : LambdaModule(upper, lower, nil, both);
}

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  }
  return out;
}

std::size_t parse_count(const std::string& s, const std::string& whole) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
      s.size() > 6) {
    throw Error(ErrorCode::ParseError, "bad integer '" + s + "' in descriptor '" + whole + "'");
  }
  return static_cast<std::size_t>(std::stoul(s));
}

std::optional<TubePoint> parse_point(const std::string& s) {
  if (s == "0") return TubePoint::Zero;
  if (s == "1") return TubePoint::One;
  if (s == "inf" || s == "oo" || s == "\xE2\x88\x9E") return TubePoint::Infinity;
  return std::nullopt;
}

}  // namespace

std::string_view to_string(TubePoint point) {
  switch (point) {
    case TubePoint::Zero: return "0";
    case TubePoint::One: return "1";
    case TubePoint::Infinity: return "inf";
  }
  return "?";
}

IndecDescriptor IndecDescriptor::postprojective(std::size_t index, int vertex) {
  check_vertex(vertex);
  IndecDescriptor d;
  d.family_ = Family::Postprojective;
  d.index_ = index;
  d.vertex_ = vertex;
  return d;
}

IndecDescriptor IndecDescriptor::preinjective(std::size_t index, int vertex) {
  check_vertex(vertex);
  IndecDescriptor d;
  d.family_ = Family::Preinjective;
  d.index_ = index;
  d.vertex_ = vertex;
  return d;
}

IndecDescriptor IndecDescriptor::homogeneous(std::size_t length, FieldElement lambda) {
  if (length < 1) throw Error(ErrorCode::InvalidParams, "R(l,lambda) requires l >= 1");
  if (lambda.is_zero()) {
    throw Error(ErrorCode::InvalidParams,
                "R(l,lambda) requires lambda not in {0,1}; for lambda = 0 use R(0," +
                    std::to_string(2 * length) + ",0)");
  }
  if (lambda.is_one()) {
    throw Error(ErrorCode::InvalidParams,
                "R(l,lambda) requires lambda not in {0,1}; for lambda = 1 use R(1," +
                    std::to_string(2 * length) + ",1)");
  }
  IndecDescriptor d;
  d.family_ = Family::RegularHomogeneous;
  d.index_ = length;
  d.lambda_ = std::move(lambda);
  return d;
}

IndecDescriptor IndecDescriptor::exceptional(int s, std::size_t length, TubePoint point) {
  if (s != 0 && s != 1) throw Error(ErrorCode::InvalidParams, "R(s,m,t) requires s in {0,1}");
  if (length < 1) throw Error(ErrorCode::InvalidParams, "R(s,m,t) requires m >= 1");
  IndecDescriptor d;
  d.family_ = Family::RegularExceptional;
  d.index_ = length;
  d.s_ = s;
  d.point_ = point;
  return d;
}

std::size_t IndecDescriptor::parameter() const noexcept {
  switch (family_) {
    case Family::Postprojective:
    case Family::Preinjective:
      return vertex_ == 0 ? index_ : index_ / 2;
    case Family::RegularHomogeneous:
      return index_;
    case Family::RegularExceptional:
      return (index_ + 1) / 2;
  }
  return 0;
}

std::string IndecDescriptor::to_string() const {
  switch (family_) {
    case Family::Postprojective:
      return "P(" + std::to_string(index_) + "," + std::to_string(vertex_) + ")";
    case Family::Preinjective:
      return "I(" + std::to_string(index_) + "," + std::to_string(vertex_) + ")";
    case Family::RegularHomogeneous:
      return "R(" + std::to_string(index_) + "," + lambda_->to_string() + ")";
    case Family::RegularExceptional:
      return "R(" + std::to_string(s_) + "," + std::to_string(index_) + "," +
             std::string(fsa::to_string(point_)) + ")";
  }
  return "?";
}

IndecDescriptor parse_descriptor(std::string_view text, Field field) {
  const std::string t = strip_spaces(text);
  const auto open = t.find('(');
  if (t.size() < 4 || open != 1 || t.back() != ')') {
    throw Error(ErrorCode::ParseError, "descriptor must look like P(n,j), I(n,j), R(l,lambda) or "
                                       "R(s,m,t): '" + t + "'");
  }
  std::vector<std::string> args;
  std::string current;
  for (char c : t.substr(2, t.size() - 3)) {
    if (c == ',') {
      args.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  args.push_back(current);

  const char head = t[0];
  if (head == 'P' || head == 'I') {
    if (args.size() != 2) throw Error(ErrorCode::ParseError, "expected two arguments in '" + t + "'");
    const auto index = parse_count(args[0], t);
    const auto vertex = parse_count(args[1], t);
    if (vertex > 4) throw Error(ErrorCode::InvalidParams, "vertex must be in 0..4 in '" + t + "'");
    return head == 'P' ? IndecDescriptor::postprojective(index, static_cast<int>(vertex))
                       : IndecDescriptor::preinjective(index, static_cast<int>(vertex));
  }
  if (head == 'R') {
    if (args.size() == 2) {
      const auto length = parse_count(args[0], t);
      if (parse_point(args[1]) == TubePoint::Infinity) {
        throw Error(ErrorCode::InvalidParams,
                    "lambda = inf lies in an exceptional tube; use R(s,m,inf) in '" + t + "'");
      }
      return IndecDescriptor::homogeneous(length, FieldElement::parse(field, args[1]));
    }
    if (args.size() == 3) {
      const auto s = parse_count(args[0], t);
      const auto length = parse_count(args[1], t);
      const auto point = parse_point(args[2]);
      if (!point) {
        throw Error(ErrorCode::InvalidParams, "exceptional tube label must be 0, 1 or inf in '" + t + "'");
      }
      if (s > 1) throw Error(ErrorCode::InvalidParams, "s must be 0 or 1 in '" + t + "'");
      return IndecDescriptor::exceptional(static_cast<int>(s), length, *point);
    }
    throw Error(ErrorCode::ParseError, "R takes two or three arguments: '" + t + "'");
  }
  throw Error(ErrorCode::ParseError, "unknown family '" + std::string(1, head) + "' in '" + t + "'");
}

LambdaModule homogeneous_construction(std::size_t length, const FieldElement& lambda) {
  const Blocks k{lambda.field()};
  const std::size_t l = length;
  return LambdaModule(vstack({k.id(l), k.zero(l, l)}), vstack({k.zero(l, l), k.id(l)}),
                      vstack({k.id(l), k.id(l)}), vstack({jordan(l, lambda), k.id(l)}));
}

LambdaModule build(const IndecDescriptor& desc, Field field) {
  const Blocks k{field};
  const std::size_t m = desc.index();
  const std::size_t n = desc.parameter();
  switch (desc.family()) {
    case Family::Postprojective:
      if (desc.vertex() == 0) return postprojective_zero(k, m);
      return m % 2 == 1 ? postprojective_odd(k, n, desc.vertex())
                        : postprojective_even(k, n, desc.vertex());
    case Family::Preinjective:
      if (desc.vertex() == 0) return preinjective_zero(k, m);
      return m % 2 == 1 ? preinjective_odd(k, n, desc.vertex())
                        : preinjective_even(k, n, desc.vertex());
    case Family::RegularHomogeneous:
      require_same_field(field, desc.lambda()->field(), "build " + desc.to_string());
      return homogeneous_construction(m, *desc.lambda());
    case Family::RegularExceptional:
      return m % 2 == 1 ? exceptional_odd(k, n, desc.s(), desc.point())
                        : exceptional_even(k, n, desc.s(), desc.point());
  }
  throw Error(ErrorCode::InvalidParams, "unknown family");
}

DimVector declared_dim_vector(const IndecDescriptor& desc) {
  const std::size_t n = desc.parameter();
  const int j = desc.vertex();
  // Vector with `base` everywhere except vertex 0 and the distinguished vertex.
  auto with = [](std::size_t top, std::size_t rest, int special, std::size_t special_value) {
    DimVector d{{top, rest, rest, rest, rest}};
    if (special > 0) d[static_cast<std::size_t>(special)] = special_value;
    return d;
  };
  switch (desc.family()) {
    case Family::Postprojective:
      if (j == 0) return with(2 * n + 1, n, 0, 0);
      if (desc.index() % 2 == 1) return with(2 * n + 2, n + 1, j, n);
      return with(2 * n + 1, n, j, n + 1);
    case Family::Preinjective:
      if (j == 0) return with(2 * n + 1, n + 1, 0, 0);
      if (desc.index() % 2 == 1) return with(2 * n + 1, n + 1, j, n);
      return with(2 * n, n, j, n + 1);
    case Family::RegularHomogeneous:
      return with(2 * n, n, 0, 0);
    case Family::RegularExceptional: {
      const std::size_t l = n;
      if (desc.index() % 2 == 0) return with(2 * l, l, 0, 0);
      const std::size_t a = l - 1, b = l;
      const auto point = desc.point();
      const int s = desc.s();
      if (point == TubePoint::Zero) return s == 0 ? DimVector{{2 * l - 1, a, b, a, b}} : DimVector{{2 * l - 1, b, a, b, a}};
      if (point == TubePoint::One) return s == 0 ? DimVector{{2 * l - 1, b, b, a, a}} : DimVector{{2 * l - 1, a, a, b, b}};
      return s == 0 ? DimVector{{2 * l - 1, b, a, a, b}} : DimVector{{2 * l - 1, a, b, b, a}};
    }
  }
  return {};
}

VertexPermutation exceptional_relabeling(int s, TubePoint point) {
  switch (point) {
    case TubePoint::Zero:
      return s == 0 ? VertexPermutation::identity() : VertexPermutation({2, 1, 4, 3});
    case TubePoint::One:
      return s == 0 ? VertexPermutation({3, 1, 4, 2}) : VertexPermutation({1, 3, 2, 4});
    case TubePoint::Infinity:
      return s == 0 ? VertexPermutation({2, 1, 3, 4}) : VertexPermutation({1, 2, 4, 3});
  }
  return VertexPermutation::identity();
}

std::vector<IndecDescriptor> enumerate(const EnumerationBounds& bounds) {
  std::vector<IndecDescriptor> out;
  auto add = [&out](IndecDescriptor d) {
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
  };

  for (std::size_t n = 0; n <= bounds.max_n; ++n) {
    add(IndecDescriptor::postprojective(n, 0));
    for (int i = 1; i <= 4; ++i) add(IndecDescriptor::postprojective(2 * n, i));
    for (int i = 1; i <= 4; ++i) add(IndecDescriptor::postprojective(2 * n + 1, i));
  }
  for (std::size_t l = 1; l <= bounds.max_l; ++l) {
    for (const auto& lambda : bounds.lambdas) {
      if (lambda.is_zero() || lambda.is_one()) continue;
      add(IndecDescriptor::homogeneous(l, lambda));
    }
    for (std::size_t m : {2 * l - 1, 2 * l}) {
      for (auto point : {TubePoint::Zero, TubePoint::One, TubePoint::Infinity}) {
        for (int s : {0, 1}) add(IndecDescriptor::exceptional(s, m, point));
      }
    }
  }
  for (std::size_t k = bounds.max_n + 1; k-- > 0;) {
    for (int i = 1; i <= 4; ++i) add(IndecDescriptor::preinjective(2 * k + 1, i));
    for (int i = 1; i <= 4; ++i) add(IndecDescriptor::preinjective(2 * k, i));
    add(IndecDescriptor::preinjective(k, 0));
  }
  return out;
}

}  // namespace fsa
