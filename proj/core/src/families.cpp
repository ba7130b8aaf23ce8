#include "zagreb/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

namespace zagreb {

namespace {

using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;

struct TagName {
  FamilyTag tag;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<TagName, 13> kTags{{
    {FamilyTag::figure1, "figure1", 0},
    {FamilyTag::figure2, "figure2", 0},
    {FamilyTag::figure3, "figure3", 0},
    {FamilyTag::figure4, "figure4", 0},
    {FamilyTag::figure5, "figure5", 0},
    {FamilyTag::figure6, "figure6", 0},
    {FamilyTag::cycle_pendants, "cycle_pendants", 2},
    {FamilyTag::star_pendants, "star_pendants", 2},
    {FamilyTag::path, "path", 1},
    {FamilyTag::cycle, "cycle", 1},
    {FamilyTag::star, "star", 1},
    {FamilyTag::complete, "complete", 1},
    {FamilyTag::tetracene_profile, "tetracene_profile", 1},
}};

const TagName& entry(FamilyTag tag) {
  for (const auto& t : kTags) {
    if (t.tag == tag) {
      return t;
    }
  }
  throw std::logic_error("unknown family tag");
}

// The six drawn examples. Vertex indices follow the drawing coordinates noted
// on each line; data/figures/*.edges carries the same lists.

// Square (0:(-3,3) 1:(3,3) 2:(3,-3) 3:(-3,-3)) with two pendants per corner.
Graph figure1() {
  return Graph::from_edge_list(12, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                    {1, 4}, {1, 5},      // (6,4) (4,6)
                                    {0, 6}, {0, 7},      // (-4,6) (-6,4)
                                    {2, 8}, {2, 9},      // (6,-4) (4,-6)
                                    {3, 10}, {3, 11}});  // (-6,-4) (-4,-6)
}

// Square with two pendants on corner (3,3).
Graph figure2() {
  return Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}, {1, 5}});
}

// Square whose corners carry 3, 4, 4, 4 pendants.
Graph figure3() {
  return Graph::from_edge_list(19, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                    // (3,3): (6,5) (5,6) (6.4,3.5) (3.5,6.4)
                                    {1, 4}, {1, 5}, {1, 6}, {1, 7},
                                    // (-3,3): (-4,6) (-5.3,5.3) (-6,4)
                                    {0, 8}, {0, 9}, {0, 10},
                                    // (3,-3): (6,-5) (5,-6) (6.4,-3.5) (3.5,-6.4)
                                    {2, 11}, {2, 12}, {2, 13}, {2, 14},
                                    // (-3,-3): (-6,-5) (-5,-6) (-6.4,-3.5) (-3.5,-6.4)
                                    {3, 15}, {3, 16}, {3, 17}, {3, 18}});
}

// Tree: 0:(0,0) 1:(-5,0) 2:(-10,0) 3:(5,0) 4:(10,0) 5:(-3,4) 6:(3,4)
// 7:(6,8) 8:(0,-5) 9:(0,-10).
Graph figure4() {
  return Graph::from_edge_list(10, {{2, 1}, {1, 0}, {0, 3}, {3, 4}, {0, 5},
                                    {0, 6}, {6, 7}, {0, 8}, {8, 9}});
}

// Tree: 0:(-12,0) 1:(-6,0) 2:(0,0) 3:(6,0) 4:(12,0) 5:(-6,6) 6:(6,-6).
Graph figure5() {
  return Graph::from_edge_list(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {3, 6}});
}

// Tree: 0:(0,0) 1:(-5,0) 2:(5,0) 3:(10,0) 4:(-3,4) 5:(3,4) 6:(6,8)
// 7:(0,-5) 8:(0,-10).
Graph figure6() {
  return Graph::from_edge_list(9, {{1, 0}, {0, 2}, {2, 3}, {0, 4}, {0, 5},
                                   {5, 6}, {0, 7}, {7, 8}});
}

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || s.empty()) {
    throw std::invalid_argument("bad family parameter '" + std::string(s) + "' in '" +
                                std::string(whole) + "'");
  }
  return value;
}

void require(bool ok, const NamedFamily& f, const char* what) {
  if (!ok) {
    throw std::invalid_argument(f.label() + ": " + what);
  }
}

}  // namespace

NamedFamily NamedFamily::parse(std::string_view text) {
  std::string_view name = text;
  std::string_view args;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    args = text.substr(colon + 1);
  } else if (const auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') {
      throw std::invalid_argument("unbalanced parenthesis in family '" + std::string(text) + "'");
    }
    name = text.substr(0, open);
    args = text.substr(open + 1, text.size() - open - 2);
  }

  const auto it = std::find_if(kTags.begin(), kTags.end(),
                               [&](const TagName& t) { return t.name == name; });
  if (it == kTags.end()) {
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
  }

  NamedFamily f{it->tag, {}};
  while (!args.empty()) {
    const auto comma = args.find(',');
    f.params.push_back(parse_int(args.substr(0, comma), text));
    if (comma == std::string_view::npos) {
      break;
    }
    args.remove_prefix(comma + 1);
  }
  if (f.params.size() != it->arity) {
    throw std::invalid_argument("family '" + std::string(name) + "' takes " +
                                std::to_string(it->arity) + " parameter(s)");
  }
  validate(f);
  return f;
}

std::string NamedFamily::name() const { return std::string(entry(tag).name); }

std::string NamedFamily::params_text() const {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) {
      out += ';';
    }
    out += std::to_string(params[i]);
  }
  return out;
}

std::string NamedFamily::label() const {
  std::string out = name();
  if (!params.empty()) {
    out += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) {
        out += ',';
      }
      out += std::to_string(params[i]);
    }
    out += ')';
  }
  return out;
}

void validate(const NamedFamily& f) {
  require(f.params.size() == entry(f.tag).arity, f, "wrong number of parameters");
  const auto p = [&](std::size_t i) { return f.params[i]; };
  switch (f.tag) {
    case FamilyTag::cycle_pendants:
      require(p(0) >= 3 && p(1) >= 1, f, "needs p >= 3 and r >= 1");
      break;
    case FamilyTag::star_pendants:
      require(p(0) > 4 && p(1) > 1 && p(1) < p(0) - 2, f, "needs p > 4 and 1 < a < p - 2");
      break;
    case FamilyTag::path:
    case FamilyTag::complete:
    case FamilyTag::tetracene_profile:
      require(p(0) >= 1, f, "needs n >= 1");
      break;
    case FamilyTag::cycle:
      require(p(0) >= 3, f, "needs n >= 3");
      break;
    case FamilyTag::star:
      require(p(0) >= 2, f, "needs n >= 2");
      break;
    default:
      break;
  }
}

DegreeProfile tetracene_profile(int n) {
  if (n < 1) {
    throw std::invalid_argument("tetracene_profile needs n >= 1");
  }
  const std::int64_t k = n;
  return DegreeProfile::from_counts(23 * k - 2, Frequencies{{2, 8 * k + 4}, {3, 10 * k - 4}});
}

Graph cycle_with_pendants(int p, int r) {
  validate(NamedFamily{FamilyTag::cycle_pendants, {p, r}});
  const std::int64_t n = static_cast<std::int64_t>(p) * (r + 1) - 1;
  Pairs edges;
  for (int i = 0; i < p; ++i) {
    edges.emplace_back(i, (i + 1) % p);
  }
  std::int64_t next = p;
  for (int i = 0; i < p; ++i) {
    const int pendants = i == 0 ? r - 1 : r;
    for (int k = 0; k < pendants; ++k) {
      edges.emplace_back(i, next++);
    }
  }
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

Graph star_with_pendants(int p, int a) {
  validate(NamedFamily{FamilyTag::star_pendants, {p, a}});
  Pairs edges;
  for (int leaf = 1; leaf < p; ++leaf) {
    edges.emplace_back(0, leaf);
  }
  for (int leaf = 1; leaf <= a; ++leaf) {
    edges.emplace_back(leaf, p + leaf - 1);
  }
  return Graph::from_edge_list(static_cast<std::size_t>(p + a), edges);
}

std::variant<Graph, DegreeProfile> build_named(const NamedFamily& f) {
  validate(f);
  const auto p = [&](std::size_t i) { return f.params[i]; };
  Pairs edges;
  switch (f.tag) {
    case FamilyTag::figure1:
      return figure1();
    case FamilyTag::figure2:
      return figure2();
    case FamilyTag::figure3:
      return figure3();
    case FamilyTag::figure4:
      return figure4();
    case FamilyTag::figure5:
      return figure5();
    case FamilyTag::figure6:
      return figure6();
    case FamilyTag::cycle_pendants:
      return cycle_with_pendants(p(0), p(1));
    case FamilyTag::star_pendants:
      return star_with_pendants(p(0), p(1));
    case FamilyTag::path:
      for (int i = 0; i + 1 < p(0); ++i) {
        edges.emplace_back(i, i + 1);
      }
      return Graph::from_edge_list(static_cast<std::size_t>(p(0)), edges);
    case FamilyTag::cycle:
      for (int i = 0; i < p(0); ++i) {
        edges.emplace_back(i, (i + 1) % p(0));
      }
      return Graph::from_edge_list(static_cast<std::size_t>(p(0)), edges);
    case FamilyTag::star:
      for (int i = 1; i < p(0); ++i) {
        edges.emplace_back(0, i);
      }
      return Graph::from_edge_list(static_cast<std::size_t>(p(0)), edges);
    case FamilyTag::complete:
      for (int i = 0; i < p(0); ++i) {
        for (int j = i + 1; j < p(0); ++j) {
          edges.emplace_back(i, j);
        }
      }
      return Graph::from_edge_list(static_cast<std::size_t>(p(0)), edges);
    case FamilyTag::tetracene_profile:
      return tetracene_profile(p(0));
  }
  throw std::logic_error("unhandled family tag");
}

Graph build_graph(const NamedFamily& f) {
  auto built = build_named(f);
  if (auto* g = std::get_if<Graph>(&built)) {
    return std::move(*g);
  }
  throw std::invalid_argument(f.label() + " describes a degree profile, not a graph");
}

}  // namespace zagreb
