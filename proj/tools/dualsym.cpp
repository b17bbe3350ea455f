// Command-line front end: element arithmetic on CS_n / IP_n, enumeration,
// closure tables, ASCII rendering, and the named verification suites.
//
// Exit codes: 0 success, 1 failed verification or internal error, 2 parse or
// usage error, 3 degree mismatch, 4 bound exceeded.

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dualsym/dualsym.hpp"
#include "dualsym/verification.hpp"

namespace {

using namespace dualsym;

struct Bounds {
  int ip = 5;
  int cs = 4;
};

Bounds bounds_from_env() {
  Bounds b;
  if (const char* env = std::getenv("DUALSYM_MAX_N")) {
    try {
      int v = std::stoi(env);
      if (v < 1) throw std::invalid_argument("");
      b.ip = v;
      b.cs = v;
    } catch (...) {
      throw ParseError("DUALSYM_MAX_N must be a positive integer");
    }
  }
  return b;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::string tok = text.substr(pos, next - pos);
    if (tok.empty()) throw ParseError("empty entry in integer list");
    for (char c : tok)
      if (c < '0' || c > '9')
        throw ParseError("bad integer '" + tok + "' in list");
    out.push_back(std::stoi(tok));
    pos = next + 1;
  }
  if (out.empty()) throw ParseError("empty integer list");
  return out;
}

// Accepts partition literals and the named families: id, zero, upsilon,
// tau:LIST, xi:x,y,z, zeta:x, perm:LIST.  `degree` 0 means infer.
Partition parse_element(const std::string& text, int degree) {
  auto need_degree = [&](const char* what) -> int {
    if (degree < 1)
      throw ParseError(std::string(what) + " requires --degree");
    return degree;
  };
  if (text == "id") return Partition::identity(need_degree("'id'"));
  if (text == "zero") return Partition::zero(need_degree("'zero'"));
  if (text == "upsilon") return upsilon(need_degree("'upsilon'"));
  auto with_prefix = [&](const char* p) {
    return text.rfind(p, 0) == 0 ? text.substr(std::strlen(p)) : std::string();
  };
  try {
    if (auto rest = with_prefix("tau:"); !rest.empty()) {
      auto points = parse_int_list(rest);
      int n = degree > 0 ? degree : *std::max_element(points.begin(), points.end());
      return tau(points, n);
    }
    if (auto rest = with_prefix("xi:"); !rest.empty()) {
      auto pts = parse_int_list(rest);
      if (pts.size() != 3) throw ParseError("xi: needs exactly three points");
      int n = degree > 0 ? degree
                         : std::max({pts[0], pts[1], pts[2], 3});
      return xi(pts[0], pts[1], pts[2], n);
    }
    if (auto rest = with_prefix("zeta:"); !rest.empty()) {
      auto pts = parse_int_list(rest);
      if (pts.size() != 1) throw ParseError("zeta: needs exactly one point");
      int n = degree > 0 ? degree : std::max(pts[0], 2);
      return zeta(pts[0], n);
    }
    if (auto rest = with_prefix("perm:"); !rest.empty()) {
      auto images = parse_int_list(rest);
      if (degree > 0 && degree != static_cast<int>(images.size()))
        throw ParseError("perm: image list length disagrees with --degree");
      return eta(Permutation::from_images(images));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return Partition::parse(text);
}

std::string block_tag(int index) {
  std::string tag;
  ++index;
  while (index > 0) {
    --index;
    tag.insert(tag.begin(), static_cast<char>('A' + index % 26));
    index /= 26;
  }
  return tag;
}

void render(std::ostream& os, const Partition& a) {
  const int n = a.degree();
  std::size_t tag_width = block_tag(a.block_count() - 1).size();
  std::size_t idx_width = std::to_string(n).size();
  for (int i = 1; i <= n; ++i) {
    std::string left = block_tag(a.class_of(Point{i, false}));
    std::string right = block_tag(a.class_of(Point{i, true}));
    std::string idx = std::to_string(i);
    os << std::string(idx_width - idx.size(), ' ') << idx << ' ' << left
       << std::string(tag_width - left.size(), ' ') << " | "
       << std::string(tag_width - right.size(), ' ') << right << ' '
       << std::string(idx_width - idx.size(), ' ') << idx << "'\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"inverse partition semigroup toolkit"};
  app.require_subcommand(1);
  int degree = 0;
  app.add_option("--degree,-n", degree,
                 "ambient degree for named element literals");

  std::vector<std::string> elems;
  bool as_json = false;
  std::string relation, format = "lines", kind, suite;
  int arg_n = 0;
  std::uint64_t seed = 123456789;

  auto* mult = app.add_subcommand("mult", "product of two or more elements");
  mult->add_option("elements", elems)->expected(2, -1)->required();
  mult->add_flag("--json", as_json);

  auto* star_cmd = app.add_subcommand("star", "prime-swap involution");
  star_cmd->add_option("elements", elems)->expected(1)->required();
  star_cmd->add_flag("--json", as_json);

  auto* rank_cmd = app.add_subcommand("rank", "block count and projections");
  rank_cmd->add_option("elements", elems)->expected(1)->required();
  rank_cmd->add_flag("--json", as_json);

  auto* green_cmd = app.add_subcommand("green", "Green relation test");
  green_cmd->add_option("relation", relation, "one of R, L, H, D, J")->required();
  green_cmd->add_option("elements", elems)->expected(2)->required();
  green_cmd->add_flag("--json", as_json);

  auto* leq = app.add_subcommand("leq", "natural partial order test");
  leq->add_option("elements", elems)->expected(2)->required();
  leq->add_flag("--json", as_json);

  auto* enumerate = app.add_subcommand("enumerate", "list a family");
  enumerate
      ->add_option("kind", kind, "ip | cs | it | iop | idempotents | ideal:k")
      ->required();
  enumerate->add_option("n", arg_n, "degree")->required();
  enumerate->add_option("--format", format)
      ->check(CLI::IsMember({"lines", "json", "count-only"}));

  auto* verify = app.add_subcommand("verify", "run a named check suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("n", arg_n, "degree")->required();
  verify->add_option("--seed", seed, "seed for randomized spot checks");

  auto* closure = app.add_subcommand("closure", "generate and print a closure table");
  closure->add_option("elements", elems)->expected(1, -1)->required();

  auto* render_cmd = app.add_subcommand("render", "ASCII block listing");
  render_cmd->add_option("elements", elems)->expected(1)->required();

  // --degree may appear after the subcommand name
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  Bounds bounds = bounds_from_env();

  if (*mult) {
    Partition acc = parse_element(elems[0], degree);
    for (std::size_t i = 1; i < elems.size(); ++i)
      acc = acc * parse_element(elems[i], degree);
    if (as_json)
      std::cout << nlohmann::json{{"product", acc.to_string()}}.dump() << "\n";
    else
      std::cout << acc.to_string() << "\n";
    return 0;
  }
  if (*star_cmd) {
    Partition a = parse_element(elems[0], degree).star();
    if (as_json)
      std::cout << nlohmann::json{{"star", a.to_string()}}.dump() << "\n";
    else
      std::cout << a.to_string() << "\n";
    return 0;
  }
  if (*rank_cmd) {
    Partition a = parse_element(elems[0], degree);
    RankCounts rc = rank_counts(a);
    if (as_json) {
      std::cout << nlohmann::json{{"rank", rc.blocks},
                                  {"rho_classes", rc.rho_classes},
                                  {"lambda_classes", rc.lambda_classes},
                                  {"is_ip", a.is_ip()}}
                       .dump()
                << "\n";
    } else {
      std::cout << rc.blocks << "\n";
      if (!a.is_ip())
        std::cout << "note: element lies outside IP_n; projection class counts "
                  << rc.rho_classes << " (domain) and " << rc.lambda_classes
                  << " (codomain) may differ from the block count\n";
    }
    return 0;
  }
  if (*green_cmd) {
    Partition a = parse_element(elems[0], degree);
    Partition b = parse_element(elems[1], degree);
    std::string rel = relation;
    for (char& c : rel) c = static_cast<char>(std::toupper(c));
    bool result = false;
    if (rel == "R") result = green_R(a, b);
    else if (rel == "L") result = green_L(a, b);
    else if (rel == "H") result = green_H(a, b);
    else if (rel == "D") result = green_D(a, b);
    else if (rel == "J") result = green_J(a, b);
    else throw ParseError("unknown Green relation '" + relation + "'");
    if (as_json)
      std::cout << nlohmann::json{{"relation", rel}, {"related", result}}.dump()
                << "\n";
    else
      std::cout << (result ? "true" : "false") << "\n";
    return 0;
  }
  if (*leq) {
    bool result = natural_leq(parse_element(elems[0], degree),
                              parse_element(elems[1], degree));
    if (as_json)
      std::cout << nlohmann::json{{"leq", result}}.dump() << "\n";
    else
      std::cout << (result ? "true" : "false") << "\n";
    return 0;
  }
  if (*enumerate) {
    std::vector<Partition> elements;
    if (kind == "ip") elements = enumerate_ip(arg_n, bounds.ip);
    else if (kind == "cs") elements = enumerate_cs(arg_n, bounds.cs);
    else if (kind == "it") elements = enumerate_it(arg_n, bounds.ip);
    else if (kind == "iop") elements = enumerate_iop(arg_n, bounds.ip);
    else if (kind == "idempotents") elements = enumerate_idempotents(arg_n, bounds.ip);
    else if (kind.rfind("ideal:", 0) == 0) {
      int k = std::stoi(kind.substr(6));
      elements = ideal(k, arg_n, bounds.ip);
    } else {
      throw ParseError("unknown enumeration kind '" + kind + "'");
    }
    if (format == "count-only") {
      std::cout << elements.size() << "\n";
    } else if (format == "json") {
      nlohmann::json j{{"kind", kind}, {"degree", arg_n},
                       {"count", elements.size()}};
      j["elements"] = nlohmann::json::array();
      for (const Partition& p : elements) j["elements"].push_back(p.to_string());
      std::cout << j.dump() << "\n";
    } else {
      for (const Partition& p : elements) std::cout << p.to_string() << "\n";
    }
    return 0;
  }
  if (*verify) {
    auto checks = verification::run_suite(suite, arg_n, seed, bounds.ip);
    if (!checks) {
      std::cerr << "error: unknown suite '" << suite << "'; available:";
      for (const auto& name : verification::suite_names()) std::cerr << ' ' << name;
      std::cerr << "\n";
      return 2;
    }
    std::size_t passed = 0;
    for (const auto& c : *checks) {
      std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.label << "\n";
      passed += c.pass;
    }
    std::cout << "verify " << suite << " n=" << arg_n << ": " << passed << "/"
              << checks->size() << " checks passed\n";
    return passed == checks->size() ? 0 : 1;
  }
  if (*closure) {
    std::vector<Partition> gens;
    gens.reserve(elems.size());
    for (const std::string& e : elems) gens.push_back(parse_element(e, degree));
    std::cout << to_json(close(gens)).dump() << "\n";
    return 0;
  }
  if (*render_cmd) {
    render(std::cout, parse_element(elems[0], degree));
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const dualsym::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const dualsym::DegreeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const dualsym::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
