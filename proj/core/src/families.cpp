#include "egr/families.hpp"

#include <charconv>
#include <map>

namespace egr {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) {
    throw Error("invalid " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(trim(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::shared_ptr<const Field> make_field(std::uint64_t q) {
  const auto [p, e] = factor_prime_power(q);
  return std::make_shared<const Field>(p, e);
}

using Coords = std::span<const FieldElement>;

Relation plain(RelationFn f) { return Relation{std::move(f), std::nullopt, std::nullopt}; }

std::vector<Relation> wenger_relations(int n) {
  // p_i + l_i = p_1 l_{i-1}, i = 2..n+1
  std::vector<Relation> rels;
  for (int i = 2; i <= n + 1; ++i) {
    const auto prev = static_cast<std::size_t>(i - 2);
    rels.push_back(plain([prev](const Field& f, Coords p, Coords l) { return f.mul(p[0], l[prev]); }));
  }
  return rels;
}

std::vector<Relation> wenger_alt_relations(int n) {
  // p_i + l_i = p_1 l_1^(i-1), i = 2..n+1
  std::vector<Relation> rels;
  for (int i = 2; i <= n + 1; ++i) {
    const auto exp = static_cast<std::uint64_t>(i - 1);
    rels.push_back(plain([exp](const Field& f, Coords p, Coords l) { return f.mul(p[0], f.pow(l[0], exp)); }));
  }
  return rels;
}

std::vector<Relation> linearized_relations(int m) {
  // p_i + l_i = p_1^(p^(i-2)) l_1, i = 2..m+1
  std::vector<Relation> rels;
  for (int i = 2; i <= m + 1; ++i) {
    const auto k = static_cast<std::uint64_t>(i - 2);
    rels.push_back(plain([k](const Field& f, Coords p, Coords l) { return f.mul(f.frobenius(p[0], k), l[0]); }));
  }
  return rels;
}

std::vector<Relation> lie_m3_relations() {
  std::vector<Relation> rels = wenger_relations(3);
  // p_5 + l_5 = p_2 l_3 - 2 p_3 l_2 + p_4 l_1, with -2 taken in F_q.
  rels.push_back(plain([](const Field& f, Coords p, Coords l) {
    const FieldElement minus_two = f.from_int(-2);
    FieldElement acc = f.mul(p[1], l[2]);
    acc = f.add(acc, f.mul(minus_two, f.mul(p[2], l[1])));
    return f.add(acc, f.mul(p[3], l[0]));
  }));
  return rels;
}

const std::map<std::string_view, FamilyKind, std::less<>>& kind_names() {
  static const std::map<std::string_view, FamilyKind, std::less<>> names{
      {"wenger", FamilyKind::Wenger},         {"wenger-alt", FamilyKind::WengerAlt},
      {"lwenger", FamilyKind::LinearizedWenger}, {"lie-m1", FamilyKind::LieM1},
      {"lie-m2", FamilyKind::LieM2},          {"lie-m3", FamilyKind::LieM3},
  };
  return names;
}

}  // namespace

std::string_view family_kind_name(FamilyKind kind) {
  for (const auto& [name, k] : kind_names()) {
    if (k == kind) return name;
  }
  return "unknown";
}

FamilyKind parse_family_kind(std::string_view name) {
  const auto it = kind_names().find(trim(name));
  if (it == kind_names().end()) throw Error("unknown family '" + std::string(name) + "'");
  return it->second;
}

bool family_uses_index(FamilyKind kind) {
  return kind == FamilyKind::Wenger || kind == FamilyKind::WengerAlt || kind == FamilyKind::LinearizedWenger;
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("family spec '" + std::string(text) + "' has no ':'");
  const std::string_view head = trim(text.substr(0, colon));
  const std::vector<std::string_view> parts = split(text.substr(colon + 1), ',');

  FamilySpec spec;
  bool have_q = false;
  bool have_index = false;
  std::size_t first = 0;
  if (head == "lie") {
    if (parts.empty()) throw Error("lie family needs M1, M2 or M3");
    if (parts[0] == "M1") spec.kind = FamilyKind::LieM1;
    else if (parts[0] == "M2") spec.kind = FamilyKind::LieM2;
    else if (parts[0] == "M3") spec.kind = FamilyKind::LieM3;
    else throw Error("unknown Lie type '" + std::string(parts[0]) + "'");
    first = 1;
  } else if (head == "wenger") {
    spec.kind = FamilyKind::Wenger;
  } else if (head == "wenger-alt") {
    spec.kind = FamilyKind::WengerAlt;
  } else if (head == "lwenger") {
    spec.kind = FamilyKind::LinearizedWenger;
  } else {
    throw Error("unknown family '" + std::string(head) + "'");
  }
  const char index_key = spec.kind == FamilyKind::LinearizedWenger ? 'm' : 'n';

  for (std::size_t i = first; i < parts.size(); ++i) {
    const auto eq = parts[i].find('=');
    if (eq == std::string_view::npos) throw Error("expected key=value, got '" + std::string(parts[i]) + "'");
    const std::string_view key = trim(parts[i].substr(0, eq));
    const std::string_view value = trim(parts[i].substr(eq + 1));
    if (key == "q") {
      spec.q = parse_uint(value, "q");
      have_q = true;
    } else if (key.size() == 1 && key[0] == index_key && family_uses_index(spec.kind)) {
      const std::uint64_t index = parse_uint(value, key);
      if (index > 64) throw Error("index too large");
      spec.index = static_cast<int>(index);
      have_index = true;
    } else {
      throw Error("unexpected key '" + std::string(key) + "' for family '" + std::string(head) + "'");
    }
  }
  if (!have_q) throw Error("family spec is missing q");
  if (family_uses_index(spec.kind) && !have_index) {
    throw Error(std::string("family spec is missing ") + index_key);
  }
  validate(spec);
  return spec;
}

std::string format_family(const FamilySpec& spec) {
  const std::string q = "q=" + std::to_string(spec.q);
  switch (spec.kind) {
    case FamilyKind::Wenger: return "wenger:n=" + std::to_string(spec.index) + "," + q;
    case FamilyKind::WengerAlt: return "wenger-alt:n=" + std::to_string(spec.index) + "," + q;
    case FamilyKind::LinearizedWenger: return "lwenger:m=" + std::to_string(spec.index) + "," + q;
    case FamilyKind::LieM1: return "lie:M1," + q;
    case FamilyKind::LieM2: return "lie:M2," + q;
    case FamilyKind::LieM3: return "lie:M3," + q;
  }
  return {};
}

void validate(const FamilySpec& spec) {
  if (!is_prime_power(spec.q)) throw Error("q = " + std::to_string(spec.q) + " is not a prime power");
  if (family_uses_index(spec.kind)) {
    if (spec.index < 1) throw Error("family index must be >= 1");
  } else if (spec.index != 0) {
    throw Error("Lie families take no index");
  }
}

int family_dimension(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Wenger:
    case FamilyKind::WengerAlt:
    case FamilyKind::LinearizedWenger: return spec.index + 1;
    case FamilyKind::LieM1: return 2;
    case FamilyKind::LieM2: return 3;
    case FamilyKind::LieM3: return 5;
  }
  return 0;
}

std::vector<std::string> family_warnings(const FamilySpec& spec) {
  std::vector<std::string> out;
  if (spec.kind == FamilyKind::LieM3) {
    const auto p = factor_prime_power(spec.q).first;
    if (p == 2 || p == 3) {
      out.push_back("Lie(M3,6,q) is only known to have girth 12 when q is not a power of 2 or 3");
    }
  }
  return out;
}

RelationSet relations(const FamilySpec& spec) {
  validate(spec);
  auto field = make_field(spec.q);
  switch (spec.kind) {
    case FamilyKind::Wenger: return RelationSet(field, wenger_relations(spec.index));
    case FamilyKind::WengerAlt: return RelationSet(field, wenger_alt_relations(spec.index));
    case FamilyKind::LinearizedWenger: return RelationSet(field, linearized_relations(spec.index));
    case FamilyKind::LieM1: return RelationSet(field, wenger_relations(1));
    case FamilyKind::LieM2: return RelationSet(field, wenger_relations(2));
    case FamilyKind::LieM3: return RelationSet(field, lie_m3_relations());
  }
  throw Error("unknown family");
}

std::pair<RelationSet, RelationSet> representation_pair(int n, std::uint64_t q) {
  return {relations(FamilySpec{FamilyKind::Wenger, q, n}), relations(FamilySpec{FamilyKind::WengerAlt, q, n})};
}

}  // namespace egr
