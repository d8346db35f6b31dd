#include "ordersum/catalog.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ordersum/exactnum.hpp"

namespace ordersum {

namespace {

using json = nlohmann::json;

Permutation cycle(std::size_t degree, std::initializer_list<Point> pts) {
  std::vector<Point> v(pts);
  return Permutation::from_cycle(degree, v);
}

FiniteGroup build_cyclic(std::uint64_t n, std::size_t max_order, std::string label) {
  if (n == 0) throw InputError("catalog: C0 is not a group");
  std::size_t deg = static_cast<std::size_t>(n);
  std::vector<Permutation> gens;
  if (n > 1) {
    std::vector<Point> pts(deg);
    for (std::size_t i = 0; i < deg; ++i) pts[i] = static_cast<Point>(i);
    gens.push_back(Permutation::from_cycle(deg, pts));
  }
  return FiniteGroup::from_generators(std::max<std::size_t>(deg, 1), std::move(gens),
                                      max_order, std::move(label));
}

FiniteGroup build_dihedral(std::uint64_t n, std::size_t max_order, std::string label) {
  if (n < 3) throw InputError("catalog: D<n> requires n >= 3");
  std::size_t deg = static_cast<std::size_t>(n);
  std::vector<Point> rot(deg);
  for (std::size_t i = 0; i < deg; ++i) rot[i] = static_cast<Point>(i);
  std::vector<Point> flip(deg);
  for (std::size_t i = 0; i < deg; ++i)
    flip[i] = static_cast<Point>((deg - i) % deg);
  return FiniteGroup::from_generators(
      deg, {Permutation::from_cycle(deg, rot), Permutation(std::move(flip))},
      max_order, std::move(label));
}

FiniteGroup build_symmetric(std::uint64_t k, std::size_t max_order, std::string label) {
  if (k < 1 || k > 7) throw InputError("catalog: S<k> requires 1 <= k <= 7");
  std::size_t deg = static_cast<std::size_t>(k);
  std::vector<Permutation> gens;
  if (k >= 2) {
    gens.push_back(cycle(deg, {0, 1}));
    std::vector<Point> full(deg);
    for (std::size_t i = 0; i < deg; ++i) full[i] = static_cast<Point>(i);
    if (k >= 3) gens.push_back(Permutation::from_cycle(deg, full));
  }
  return FiniteGroup::from_generators(deg, std::move(gens), max_order,
                                      std::move(label));
}

FiniteGroup build_alternating(std::uint64_t k, std::size_t max_order,
                              std::string label) {
  if (k < 3 || k > 7) throw InputError("catalog: A<k> requires 3 <= k <= 7");
  std::size_t deg = static_cast<std::size_t>(k);
  std::vector<Permutation> gens{cycle(deg, {0, 1, 2})};
  if (k > 3) {
    // An even long cycle: all points for odd k, points 1..k-1 for even k.
    std::vector<Point> c;
    for (std::size_t i = (k % 2 == 0) ? 1 : 0; i < deg; ++i)
      c.push_back(static_cast<Point>(i));
    gens.push_back(Permutation::from_cycle(deg, c));
  }
  return FiniteGroup::from_generators(deg, std::move(gens), max_order,
                                      std::move(label));
}

// SL(2,p) acting faithfully on the p^2 - 1 nonzero column vectors.
FiniteGroup build_sl2(std::uint64_t p, std::size_t max_order, std::string label) {
  if (!is_prime(p) || p > 7) throw InputError("catalog: SL2(p) requires prime p <= 7");
  std::vector<std::pair<unsigned, unsigned>> vecs;
  for (unsigned x = 0; x < p; ++x)
    for (unsigned y = 0; y < p; ++y)
      if (x != 0 || y != 0) vecs.emplace_back(x, y);
  std::map<std::pair<unsigned, unsigned>, Point> idx;
  for (std::size_t i = 0; i < vecs.size(); ++i) idx[vecs[i]] = static_cast<Point>(i);
  auto matrix_perm = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    std::vector<Point> im(vecs.size());
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      auto [x, y] = vecs[i];
      im[i] = idx.at({(a * x + b * y) % p, (c * x + d * y) % p});
    }
    return Permutation(std::move(im));
  };
  // [[1,1],[0,1]] and [[0,-1],[1,0]] generate SL(2,p).
  return FiniteGroup::from_generators(
      vecs.size(),
      {matrix_perm(1, 1, 0, 1), matrix_perm(0, static_cast<unsigned>(p - 1), 1, 0)},
      max_order, std::move(label));
}

// PSL(2,7) via Moebius transformations on the 8-point projective line.
FiniteGroup build_psl2_7(std::size_t max_order, std::string label) {
  constexpr unsigned p = 7;
  constexpr Point inf = 7;
  auto inv_mod = [](unsigned a) {  // p = 7 inverse
    for (unsigned b = 1; b < p; ++b)
      if (a * b % p == 1) return b;
    throw Error("psl2: no inverse");
  };
  auto moebius = [&](int a, int b, int c, int d) {
    auto m = [&](int v) { return static_cast<unsigned>(((v % int(p)) + int(p)) % int(p)); };
    unsigned ua = m(a), ub = m(b), uc = m(c), ud = m(d);
    std::vector<Point> im(8);
    for (unsigned z = 0; z < p; ++z) {
      unsigned den = (uc * z + ud) % p;
      im[z] = den == 0 ? inf : static_cast<Point>((ua * z + ub) % p * inv_mod(den) % p);
    }
    im[inf] = uc == 0 ? inf : static_cast<Point>(ua * inv_mod(uc) % p);
    return Permutation(std::move(im));
  };
  // z -> z + 1 and z -> -1/z.
  return FiniteGroup::from_generators(8, {moebius(1, 1, 0, 1), moebius(0, -1, 1, 0)},
                                      max_order, std::move(label));
}

// Quaternion group, degree-8 regular representation (right multiplication on
// [1, -1, i, -i, j, -j, k, -k]).  Ships through the GroupSpec parser so the
// format stays exercised even when no fixture file is on disk.
constexpr const char* kQ8GroupSpec =
    R"({"name": "Q8", "degree": 8, "generators": [[2,3,1,0,7,6,4,5],[4,5,6,7,1,0,3,2]]})";

std::uint64_t parse_number(std::string_view s, std::string_view what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("catalog: bad " + std::string(what) + " in id");
  return value;
}

FiniteGroup build_atom(const std::string& atom, std::size_t max_order) {
  if (atom == "PSL2(7)") return build_psl2_7(max_order, atom);
  if (atom.starts_with("SL2(") && atom.ends_with(")"))
    return build_sl2(parse_number({atom.data() + 4, atom.size() - 5}, "SL2 prime"),
                     max_order, atom);
  if (atom.size() >= 2) {
    char kind = atom[0];
    std::string_view num{atom.data() + 1, atom.size() - 1};
    switch (kind) {
      case 'C': return build_cyclic(parse_number(num, "cyclic order"), max_order, atom);
      case 'D': return build_dihedral(parse_number(num, "dihedral n"), max_order, atom);
      case 'S': return build_symmetric(parse_number(num, "symmetric k"), max_order, atom);
      case 'A': return build_alternating(parse_number(num, "alternating k"), max_order, atom);
      default: break;
    }
  }
  throw InputError("catalog: unknown id '" + atom + "'");
}

std::vector<std::string> split_product(const std::string& id) {
  // Split on 'x' between atoms; 'x' never occurs inside an atom name.
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : id) {
    if (ch == 'x') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace

FiniteGroup build(const std::string& id, std::size_t max_order) {
  if (const CatalogEntry* entry = find_entry(id)) return entry->builder(max_order);
  auto parts = split_product(id);
  if (parts.size() == 1) return build_atom(id, max_order);
  FiniteGroup g = build_atom(parts[0], max_order);
  for (std::size_t i = 1; i < parts.size(); ++i)
    g = direct_product(g, build_atom(parts[i], max_order), max_order, id);
  g.set_label(id);
  return g;
}

FiniteGroup parse_group_spec(std::string_view text, std::size_t max_order) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("groupspec: parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("groupspec: top level must be an object");
  for (const char* field : {"name", "degree", "generators"})
    if (!doc.contains(field))
      throw InputError(std::string("groupspec: missing field '") + field + "'");
  if (!doc["name"].is_string())
    throw InputError("groupspec: field 'name' must be a string");
  if (!doc["degree"].is_number_integer() || doc["degree"].get<std::int64_t>() < 1)
    throw InputError("groupspec: field 'degree' must be a positive integer");
  if (!doc["generators"].is_array())
    throw InputError("groupspec: field 'generators' must be an array");

  auto degree = doc["degree"].get<std::size_t>();
  std::vector<Permutation> gens;
  std::size_t gen_index = 0;
  for (const auto& arr : doc["generators"]) {
    if (!arr.is_array())
      throw InputError("groupspec: generator #" + std::to_string(gen_index) +
                       " must be an array");
    std::vector<Point> im;
    for (const auto& v : arr) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
        throw InputError("groupspec: generator #" + std::to_string(gen_index) +
                         " has a non-integer image");
      im.push_back(v.get<Point>());
    }
    if (im.size() != degree)
      throw ValidationError("groupspec: generator #" + std::to_string(gen_index) +
                            " has length " + std::to_string(im.size()) +
                            ", expected degree " + std::to_string(degree));
    try {
      gens.push_back(Permutation(std::move(im)));
    } catch (const ValidationError&) {
      throw ValidationError("groupspec: generator #" + std::to_string(gen_index) +
                            " is not a bijection of degree " + std::to_string(degree));
    }
    ++gen_index;
  }
  return FiniteGroup::from_generators(degree, std::move(gens), max_order,
                                      doc["name"].get<std::string>());
}

FiniteGroup load_group_spec(const std::filesystem::path& path, std::size_t max_order) {
  std::ifstream in(path);
  if (!in) throw InputError("groupspec: cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_group_spec(buf.str(), max_order);
}

void write_group_spec(std::ostream& out, const FiniteGroup& g) {
  nlohmann::ordered_json doc;
  doc["name"] = g.label();
  doc["degree"] = g.degree();
  auto gens = nlohmann::ordered_json::array();
  for (const auto& p : g.generators()) gens.push_back(p.images());
  doc["generators"] = std::move(gens);
  out << doc.dump() << "\n";
}

namespace {

CatalogEntry entry(std::string id, std::int64_t order, std::int64_t psi,
                   std::int64_t solvable, std::int64_t center_order) {
  CatalogEntry e;
  e.id = id;
  e.builder = [id](std::size_t max_order) { return build_atom(id, max_order); };
  e.expected = {{"order", order},
                {"psi", psi},
                {"solvable", solvable},
                {"center_order", center_order}};
  return e;
}

CatalogEntry product_entry(std::string a, std::string b, std::int64_t order,
                           std::int64_t psi, std::int64_t solvable,
                           std::int64_t center_order) {
  CatalogEntry e;
  e.id = a + "x" + b;
  e.builder = [a, b, id = e.id](std::size_t max_order) {
    return direct_product(build_atom(a, max_order), build_atom(b, max_order),
                          max_order, id);
  };
  e.expected = {{"order", order},
                {"psi", psi},
                {"solvable", solvable},
                {"center_order", center_order}};
  e.product_factors = {a, b};
  return e;
}

std::vector<CatalogEntry> make_manifest() {
  std::vector<CatalogEntry> m;
  // psi(C_n) for n = 1..16, frozen from the additive-order sum.
  const std::int64_t psi_c[17] = {0,  1,  3,  7,   11, 21,  21,  43, 43,
                                  61, 63, 111, 77, 157, 129, 147, 171};
  for (int n = 1; n <= 16; ++n)
    m.push_back(entry("C" + std::to_string(n), n, psi_c[n], 1, n));
  m.push_back(entry("C60", 60, 1617, 1, 60));
  m.push_back(entry("C120", 120, 6321, 1, 120));
  m.push_back(entry("C168", 168, 12943, 1, 168));
  m.push_back(entry("C420", 420, 69531, 1, 420));

  m.push_back(entry("S3", 6, 13, 1, 1));
  {
    CatalogEntry s4 = entry("S4", 24, 67, 1, 1);
    s4.normal_marks = {"V4"};
    m.push_back(std::move(s4));
  }
  m.push_back(entry("S5", 120, 471, 0, 1));
  m.push_back(entry("A4", 12, 31, 1, 1));
  m.push_back(entry("A5", 60, 211, 0, 1));
  m.push_back(entry("A6", 360, 1411, 0, 1));
  m.push_back(entry("D4", 8, 19, 1, 2));

  {
    CatalogEntry q8;
    q8.id = "Q8";
    q8.builder = [](std::size_t max_order) {
      return parse_group_spec(kQ8GroupSpec, max_order);
    };
    q8.expected = {{"order", 8}, {"psi", 27}, {"solvable", 1}, {"center_order", 2}};
    m.push_back(std::move(q8));
  }

  m.push_back(entry("SL2(3)", 24, 99, 1, 2));
  m.push_back(entry("SL2(5)", 120, 663, 0, 2));
  m.push_back(entry("PSL2(7)", 168, 715, 0, 1));

  m.push_back(product_entry("A5", "C2", 120, 603, 0, 2));
  m.push_back(product_entry("A5", "C3", 180, 1237, 0, 3));
  m.push_back(product_entry("A5", "C7", 420, 9073, 0, 7));
  m.push_back(product_entry("A5", "C11", 660, 23421, 0, 11));
  m.push_back(product_entry("A5", "C13", 780, 33127, 0, 13));
  m.push_back(product_entry("A5", "C49", 2940, 443311, 0, 49));
  m.push_back(product_entry("A5", "C77", 4620, 1007103, 0, 77));
  return m;
}

}  // namespace

const std::vector<CatalogEntry>& default_manifest() {
  static const std::vector<CatalogEntry> manifest = make_manifest();
  return manifest;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const auto& e : default_manifest())
    if (e.id == id) return &e;
  return nullptr;
}

Subgroup resolve_marked_subgroup(const FiniteGroup& g, const std::string& mark) {
  if (mark == "V4") {
    // Identity plus all fixed-point-free involutions (the double
    // transpositions when g is S4).
    std::vector<std::uint32_t> members{0};
    for (std::size_t e = 1; e < g.order(); ++e) {
      const auto& p = g.elements()[e];
      if (g.element_order_at(e) != 2) continue;
      bool free = true;
      for (std::size_t i = 0; i < p.degree(); ++i)
        if (p(static_cast<Point>(i)) == i) {
          free = false;
          break;
        }
      if (free) members.push_back(static_cast<std::uint32_t>(e));
    }
    auto sub = subgroup_closure_idx(g, members);
    if (sub.order() != members.size())
      throw DomainError("mark V4: marked element set is not closed");
    return sub;
  }
  throw InputError("catalog: unknown subgroup mark '" + mark + "'");
}

}  // namespace ordersum
