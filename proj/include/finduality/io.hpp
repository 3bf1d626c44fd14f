#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "json.hpp"

#include "finduality/bitop.hpp"
#include "finduality/frith.hpp"
#include "finduality/lattice.hpp"
#include "finduality/pervin.hpp"

namespace finduality {

using json = nlohmann::ordered_json;

/// Any instance a file can hold.
using Instance = std::variant<FinLattice, PervinSpace, FrithPair, BiSpace, BiFrame, LatticeHom, PervinMap,
                              FrithHom, BiMap, BiFrameHom>;

inline const char* kind_of(const Instance& x) {
  static const char* const kinds[] = {"lattice",     "pervin",     "frith",     "bispace",    "biframe",
                                      "lattice_map", "pervin_map", "frith_map", "bispace_map", "biframe_map"};
  return kinds[x.index()];
}

// ---------------------------------------------------------------------------
// Emission

namespace io_detail {

inline json index_array(const ElemSet& s) {
  json a = json::array();
  s.for_each([&](int i) { a.push_back(i); });
  return a;
}

inline json index_array(Mask m) {
  json a = json::array();
  for (int i : mask_indices(m)) a.push_back(i);
  return a;
}

inline json family_array(const SubsetFamily& f) {
  json a = json::array();
  for (Mask m : f.members) a.push_back(index_array(m));
  return a;
}

}  // namespace io_detail

inline json to_json(const FinLattice& L) {
  json covers = json::array();
  for (auto [a, b] : L.poset().covers()) covers.push_back({a, b});
  return {{"kind", "lattice"}, {"elements", L.names()}, {"covers", covers}};
}

inline json to_json(const PervinSpace& P) {
  return {{"kind", "pervin"}, {"ground", P.ground}, {"sets", io_detail::family_array(P.family)}};
}

inline json to_json(const FrithPair& F) {
  return {{"kind", "frith"}, {"lattice", to_json(F.lattice)}, {"sub", io_detail::index_array(F.sub)}};
}

inline json to_json(const BiSpace& X) {
  return {{"kind", "bispace"},
          {"ground", X.ground},
          {"opens_pos", io_detail::family_array(X.pos)},
          {"opens_neg", io_detail::family_array(X.neg)}};
}

inline json to_json(const BiFrame& B) {
  return {{"kind", "biframe"},
          {"main", to_json(B.main)},
          {"pos", io_detail::index_array(B.pos)},
          {"neg", io_detail::index_array(B.neg)}};
}

namespace io_detail {

template <class M>
json map_json(const char* kind, const M& f) {
  return {{"kind", kind}, {"dom", to_json(f.dom)}, {"cod", to_json(f.cod)}, {"map", f.map}};
}

}  // namespace io_detail

inline json to_json(const LatticeHom& h) { return io_detail::map_json("lattice_map", h); }
inline json to_json(const PervinMap& f) { return io_detail::map_json("pervin_map", f); }
inline json to_json(const BiMap& f) { return io_detail::map_json("bispace_map", f); }
inline json to_json(const FrithHom& h) {
  return {{"kind", "frith_map"}, {"dom", to_json(h.dom)}, {"cod", to_json(h.cod)}, {"map", h.hom.map}};
}
inline json to_json(const BiFrameHom& h) {
  return {{"kind", "biframe_map"}, {"dom", to_json(h.dom)}, {"cod", to_json(h.cod)}, {"map", h.hom.map}};
}

inline json to_json(const Instance& x) {
  return std::visit([](const auto& v) { return to_json(v); }, x);
}

/// Canonical text: two-space indentation and a trailing newline.
inline std::string emit(const Instance& x) { return to_json(x).dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Parsing

namespace io_detail {

/// Reads fields of one JSON object, reporting the path of any mismatch.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail("expected an object");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SchemaError, "at " + path_ + ": " + what);
  }

  const json& field(const std::string& k) const {
    if (!j_.contains(k)) fail("missing field '" + k + "'");
    return j_.at(k);
  }
  std::string sub(const std::string& k) const { return path_ + "." + k; }

  void expect_kind(const std::string& kind, bool required) const {
    if (!j_.contains("kind")) {
      if (required) fail("missing field 'kind'");
      return;
    }
    if (!j_.at("kind").is_string() || j_.at("kind").get<std::string>() != kind)
      fail("expected kind '" + kind + "'");
  }

  std::vector<std::string> names(const std::string& k) const {
    const json& a = field(k);
    if (!a.is_array()) fail("field '" + k + "' must be an array of strings");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_string()) fail("field '" + k + "[" + std::to_string(i) + "]' must be a string");
      out.push_back(a[i].get<std::string>());
    }
    return out;
  }

  std::vector<int> indices(const std::string& k, int bound) const { return indices_of(field(k), sub(k), bound); }

  std::vector<int> indices_of(const json& a, const std::string& where, int bound) const {
    if (!a.is_array()) throw Error(ErrorCode::SchemaError, "at " + where + ": expected an array of indices");
    std::vector<int> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!a[i].is_number_integer())
        throw Error(ErrorCode::SchemaError, "at " + where + "[" + std::to_string(i) + "]: expected an integer");
      const int v = a[i].get<int>();
      if (v < 0 || v >= bound)
        throw Error(ErrorCode::SchemaError, "at " + where + "[" + std::to_string(i) + "]: index " +
                                                std::to_string(v) + " out of range 0.." + std::to_string(bound - 1));
      out.push_back(v);
    }
    return out;
  }

  std::vector<Mask> family(const std::string& k, int n) const {
    const json& a = field(k);
    if (!a.is_array()) fail("field '" + k + "' must be an array of index arrays");
    std::vector<Mask> out;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Mask m = 0;
      for (int x : indices_of(a[i], sub(k) + "[" + std::to_string(i) + "]", n)) m |= bit(x);
      out.push_back(m);
    }
    return out;
  }

  ElemSet elems(const std::string& k, int n) const {
    ElemSet s(n);
    for (int i : indices(k, n)) s.set(i);
    return s;
  }

 private:
  const json& j_;
  std::string path_;
};

}  // namespace io_detail

inline FinLattice lattice_from_json(const json& j, const std::string& path = "$", bool kind_required = true) {
  io_detail::Reader r(j, path);
  r.expect_kind("lattice", kind_required);
  auto names = r.names("elements");
  const int n = static_cast<int>(names.size());
  const json& c = r.field("covers");
  if (!c.is_array()) r.fail("field 'covers' must be an array of pairs");
  std::vector<std::pair<int, int>> below;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto p = r.indices_of(c[i], r.sub("covers") + "[" + std::to_string(i) + "]", n);
    if (p.size() != 2) r.fail("covers[" + std::to_string(i) + "] must be a pair");
    below.emplace_back(p[0], p[1]);
  }
  return validate_lattice(FinPoset::from_covers(n, below), std::move(names));
}

inline PervinSpace pervin_from_json(const json& j, const std::string& path = "$", bool kind_required = true) {
  io_detail::Reader r(j, path);
  r.expect_kind("pervin", kind_required);
  auto ground = r.names("ground");
  const int n = static_cast<int>(ground.size());
  if (n > kMaxGround) throw Error(ErrorCode::SizeExceeded, "Pervin spaces are limited to 64 points");
  return PervinSpace::make(std::move(ground), r.family("sets", n));
}

inline FrithPair frith_from_json(const json& j, const std::string& path = "$", bool kind_required = true) {
  io_detail::Reader r(j, path);
  r.expect_kind("frith", kind_required);
  FinLattice L = lattice_from_json(r.field("lattice"), r.sub("lattice"), false);
  return FrithPair::make(L, r.elems("sub", L.size()));
}

inline BiSpace bispace_from_json(const json& j, const std::string& path = "$", bool kind_required = true) {
  io_detail::Reader r(j, path);
  r.expect_kind("bispace", kind_required);
  auto ground = r.names("ground");
  const int n = static_cast<int>(ground.size());
  if (n > kMaxGround) throw Error(ErrorCode::SizeExceeded, "bispace limited to 64 points");
  return BiSpace::make(std::move(ground), r.family("opens_pos", n), r.family("opens_neg", n));
}

inline BiFrame biframe_from_json(const json& j, const std::string& path = "$", bool kind_required = true) {
  io_detail::Reader r(j, path);
  r.expect_kind("biframe", kind_required);
  FinLattice L = lattice_from_json(r.field("main"), r.sub("main"), false);
  return BiFrame::make(L, r.elems("pos", L.size()), r.elems("neg", L.size()));
}

namespace io_detail {

template <class M, class Obj, class Parse, class Valid>
M map_from_json(const json& j, const std::string& path, const char* kind, Parse parse, Valid valid) {
  Reader r(j, path);
  r.expect_kind(kind, true);
  Obj dom = parse(r.field("dom"), r.sub("dom"), false);
  Obj cod = parse(r.field("cod"), r.sub("cod"), false);
  auto size = [](const Obj& o) {
    if constexpr (std::is_same_v<Obj, FinLattice>) return o.size();
    else if constexpr (std::is_same_v<Obj, FrithPair>) return o.lattice.size();
    else if constexpr (std::is_same_v<Obj, BiFrame>) return o.main.size();
    else return o.size();
  };
  auto m = r.indices("map", size(cod));
  if (static_cast<int>(m.size()) != size(dom)) r.fail("field 'map' must have one entry per domain element");
  return valid(dom, cod, m);
}

}  // namespace io_detail

inline Instance parse_json(const json& j) {
  io_detail::Reader r(j, "$");
  const json& k = r.field("kind");
  if (!k.is_string()) r.fail("field 'kind' must be a string");
  const std::string kind = k.get<std::string>();
  if (kind == "lattice") return lattice_from_json(j);
  if (kind == "pervin") return pervin_from_json(j);
  if (kind == "frith") return frith_from_json(j);
  if (kind == "bispace") return bispace_from_json(j);
  if (kind == "biframe") return biframe_from_json(j);
  using namespace io_detail;
  if (kind == "lattice_map")
    return map_from_json<LatticeHom, FinLattice>(j, "$", "lattice_map", lattice_from_json,
        [](const FinLattice& a, const FinLattice& b, const std::vector<int>& m) {
          LatticeHom h{a, b, m};
          if (!h.is_hom()) throw Error(ErrorCode::InvariantViolation, "map is not a bounded lattice homomorphism");
          return h;
        });
  if (kind == "pervin_map")
    return map_from_json<PervinMap, PervinSpace>(j, "$", "pervin_map", pervin_from_json,
        [](const PervinSpace& a, const PervinSpace& b, const std::vector<int>& m) {
          PervinMap f{a, b, m};
          if (!f.is_morphism()) throw Error(ErrorCode::InvariantViolation, "map is not a Pervin map");
          return f;
        });
  if (kind == "frith_map")
    return map_from_json<FrithHom, FrithPair>(j, "$", "frith_map", frith_from_json,
        [](const FrithPair& a, const FrithPair& b, const std::vector<int>& m) {
          FrithHom h{a, b, LatticeHom{a.lattice, b.lattice, m}};
          if (!h.is_valid()) throw Error(ErrorCode::InvariantViolation, "map is not a Frith map");
          return h;
        });
  if (kind == "bispace_map")
    return map_from_json<BiMap, BiSpace>(j, "$", "bispace_map", bispace_from_json,
        [](const BiSpace& a, const BiSpace& b, const std::vector<int>& m) {
          BiMap f{a, b, m};
          if (!f.is_continuous()) throw Error(ErrorCode::InvariantViolation, "map is not bicontinuous");
          return f;
        });
  if (kind == "biframe_map")
    return map_from_json<BiFrameHom, BiFrame>(j, "$", "biframe_map", biframe_from_json,
        [](const BiFrame& a, const BiFrame& b, const std::vector<int>& m) {
          BiFrameHom h{a, b, LatticeHom{a.main, b.main, m}};
          if (!h.is_valid()) throw Error(ErrorCode::InvariantViolation, "map is not a biframe map");
          return h;
        });
  r.fail("unknown kind '" + kind + "'");
}

/// Parses JSON text; syntax errors carry the line and column.
inline Instance parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorCode::SchemaError,
                "line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON");
  }
  return parse_json(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Instance parse_file(const std::string& path) { return parse(read_file(path)); }

template <class T>
T parse_as(const std::string& text) {
  Instance x = parse(text);
  if (!std::holds_alternative<T>(x)) throw Error(ErrorCode::SchemaError, std::string("unexpected kind '") + kind_of(x) + "'");
  return std::get<T>(std::move(x));
}

}  // namespace finduality
