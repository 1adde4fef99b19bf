#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "scrolls/binary_form.hpp"
#include "scrolls/cone.hpp"
#include "scrolls/error.hpp"
#include "scrolls/graph.hpp"
#include "scrolls/io.hpp"
#include "scrolls/sequences.hpp"
#include "scrolls/series.hpp"
#include "scrolls/syzygy.hpp"

namespace scrolls::cli {

namespace {

using nlohmann::json;

struct Config {
  std::uint64_t field_char = PrimeField::kDefaultCharacteristic;
  std::uint64_t seed = 0;
  std::string format = "text";
  bool no_verify = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string bracketed(const ScrollType& a) { return "[" + format_sequence(a.parts()) + "]"; }

std::string braced(const MultiplicityMultiset& m) { return "{" + format_sequence(m.entries()) + "}"; }

void print_report(std::ostream& out, const ValidityReport& r) {
  out << "valid=" << (r.valid ? "true" : "false");
  if (r.violated) out << " violated=" << to_string(*r.violated);
  if (r.pivot) out << " v=" << *r.pivot;
  out << '\n' << "detail: " << r.detail << '\n';
}

void print_decomposition(std::ostream& out, const SectionDecomposition& d) {
  out << "scroll_part: " << format_sequence(d.scroll_part.parts()) << '\n';
  out << "multiplicities: " << format_sequence(d.multiplicities.entries()) << '\n';
  out << "gcd_degree: " << d.gcd_degree << '\n';
  out << "common_factor: " << (d.common_factor ? d.common_factor->to_string() : "1") << '\n';
  out << "prime: " << (d.irreducible() ? "true" : "false") << '\n';
}

std::vector<LinearFactor> parse_lines(const std::string& text, const PrimeField& field) {
  std::vector<LinearFactor> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "inf") {
      out.push_back(LinearFactor::infinity());
      continue;
    }
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(LinearFactor::finite(field.reduce(v)));
    } catch (const std::exception&) {
      throw Error(Errc::Parse, "line choice must be 'inf' or an integer, got '" + item + "'");
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  if (const char* env = std::getenv("SCROLL_FIELD_CHAR")) {
    try {
      std::size_t used = 0;
      cfg.field_char = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      err << "error: SCROLL_FIELD_CHAR is not an integer: " << env << '\n';
      return kExitUsage;
    }
  }

  CLI::App app{"Hyperplane sections of rational normal scrolls", "scrolls"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--field-char", cfg.field_char, "Prime characteristic p (env SCROLL_FIELD_CHAR)")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "Seed for random forms")->capture_default_str();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_flag("--no-verify", cfg.no_verify, "Skip internal verification of constructions");

  std::function<void()> action;
  std::string a_text, b_text, m_text, lines_text, input, vertex_text;
  int codim = 0;
  bool expand_m = false;

  auto field = [&] { return PrimeField(cfg.field_char); };
  auto options = [&] { return ConstructOptions{!cfg.no_verify}; };
  auto json_mode = [&] { return cfg.format == "json"; };

  auto* sections = app.add_subcommand("sections", "All irreducible hyperplane sections of S(A)");
  sections->add_option("A", a_text, "Scroll type, e.g. 4,5,6,9")->required();
  sections->callback([&] {
    action = [&] {
      const ScrollType a = parse_scroll_type(a_text);
      const auto list = enumerate_sections(a);
      const ScrollType generic = generic_section(a);
      if (json_mode()) {
        print_json(out, {{"scroll", a}, {"sections", list}, {"generic", generic}, {"count", list.size()}});
        return;
      }
      for (const auto& b : list)
        out << format_sequence(b.parts()) << (b == generic ? "  [generic]" : "") << '\n';
    };
  });

  auto* generic = app.add_subcommand("generic", "The general hyperplane section of S(A)");
  generic->add_option("A", a_text, "Scroll type")->required();
  generic->callback([&] {
    action = [&] {
      const ScrollType a = parse_scroll_type(a_text);
      const GenericSectionData data = generic_section_data(a);
      if (json_mode())
        print_json(out, {{"scroll", a}, {"generic", data.section}, {"hilbert_series", data.hilbert_series}});
      else
        out << format_sequence(data.section.parts()) << '\n';
    };
  });

  auto* check = app.add_subcommand("check", "Check the section conditions for (A, B [, M])");
  check->add_option("A", a_text, "Scroll type")->required();
  check->add_option("--b", b_text, "Candidate section")->required();
  check->add_option("--m", m_text, "Multiplicities of linear components (reducible check)");
  check->callback([&] {
    action = [&] {
      const ScrollType a = parse_scroll_type(a_text);
      const ScrollType b = parse_scroll_type(b_text);
      const ValidityReport r = m_text.empty()
                                   ? check_section_conditions(a, b)
                                   : check_reducible_conditions(a, b, parse_multiplicities(m_text));
      if (json_mode())
        print_json(out, r);
      else
        print_report(out, r);
    };
  });

  auto* construct = app.add_subcommand("construct", "Build a hyperplane L realizing (A, B [, M])");
  construct->add_option("A", a_text, "Scroll type")->required();
  construct->add_option("--b", b_text, "Target scroll component")->required();
  construct->add_option("--m", m_text, "Multiplicities; makes the section reducible");
  construct->add_option("--lines", lines_text, "Linear factors: 'inf' for x, an integer l for y - l*x");
  construct->callback([&] {
    action = [&] {
      const PrimeField F = field();
      const ScrollType a = parse_scroll_type(a_text);
      const ScrollType b = parse_scroll_type(b_text);
      if (m_text.empty()) {
        if (!lines_text.empty()) throw UsageError("--lines needs --m");
        const SectionForm form = construct_irreducible_form(F, a, b, options());
        if (json_mode()) {
          json j = form;
          j["matrix"] = hilbert_burch_matrix(F, a, b);
          print_json(out, j);
        } else {
          out << format_section_form(form);
        }
        return;
      }
      std::optional<std::vector<LinearFactor>> lines;
      if (!lines_text.empty()) lines = parse_lines(lines_text, F);
      const SectionForm form =
          construct_reducible_form(F, a, b, parse_multiplicities(m_text), std::move(lines), options());
      if (json_mode())
        print_json(out, form);
      else
        out << format_section_form(form);
    };
  });

  auto* syzygy = app.add_subcommand("syzygy", "Syzygy degrees of the forms in a section file");
  syzygy->add_option("--input", input, "Section form file")->required();
  syzygy->callback([&] {
    action = [&] {
      const SectionForm form = read_section_form(input, field());
      const ScrollType b = syzygy_degrees(form);
      if (json_mode())
        print_json(out, {{"a", form.scroll()}, {"syzygy_degrees", b}});
      else
        out << format_sequence(b.parts()) << '\n';
    };
  });

  auto* analyze = app.add_subcommand("analyze", "Decompose the section given in a file");
  analyze->add_option("--input", input, "Section form file")->required();
  analyze->callback([&] {
    action = [&] {
      const SectionDecomposition d = analyze_section_form(read_section_form(input, field()));
      if (json_mode())
        print_json(out, d);
      else
        print_decomposition(out, d);
    };
  });

  auto* reducible = app.add_subcommand("reducible", "Scroll components of reducible sections of S(A)");
  reducible->add_option("A", a_text, "Scroll type")->required();
  reducible->add_flag("--expand-m", expand_m, "List every multiplicity multiset as well");
  reducible->callback([&] {
    action = [&] {
      const ScrollType a = parse_scroll_type(a_text);
      const auto buckets = enumerate_reducible_components(a, expand_m);
      const std::size_t total = total_components(buckets);
      if (json_mode()) {
        print_json(out, {{"scroll", a}, {"buckets", buckets}, {"total", total}});
        return;
      }
      for (const auto& bucket : buckets) {
        out << bucket.degree << " | " << bucket.components.size() << " |";
        for (std::size_t i = 0; i < bucket.components.size(); ++i)
          out << (i ? "," : " ") << bracketed(bucket.components[i]);
        out << '\n';
        if (expand_m) {
          out << "   m:";
          for (std::size_t i = 0; i < bucket.multiplicities.size(); ++i)
            out << (i ? "," : " ") << braced(bucket.multiplicities[i]);
          out << '\n';
        }
      }
      out << "total: " << total << '\n';
    };
  });

  auto* graph = app.add_subcommand("graph", "Specialization diagram of all scrolls of codimension N");
  graph->add_option("--codim", codim, "Codimension")->required()->check(CLI::PositiveNumber);
  graph->callback([&] {
    action = [&] {
      const SpecializationGraph g = specialization_graph(codim);
      if (cfg.format == "dot") {
        out << emit_dot(g);
      } else if (json_mode()) {
        print_json(out, g);
      } else {
        for (const auto& e : g.edges)
          out << node_label(g.nodes[e.from]) << " -> " << node_label(g.nodes[e.to])
              << (e.generic ? "  [generic]" : "") << '\n';
      }
    };
  });

  auto* cone = app.add_subcommand("cone", "Classify a hyperplane section of a cone S(0^k, ...)");
  cone->add_option("A", a_text, "Scroll type with leading zeros")->required();
  cone->add_option("--vertex-coeffs", vertex_text, "Coefficients on the vertex coordinates")->required();
  cone->add_option("--input", input, "Section form file over the positive part")->required();
  cone->callback([&] {
    action = [&] {
      const PrimeField F = field();
      const ScrollType a = parse_scroll_type(a_text);
      std::vector<PrimeField::Elem> coeffs;
      for (int c : parse_sequence(vertex_text)) coeffs.push_back(F.reduce(c));
      const ConeSectionResult r = classify_cone_section(a, coeffs, read_section_form(input, F));
      if (json_mode()) {
        print_json(out, r);
        return;
      }
      out << "case: " << to_string(r.kind) << '\n';
      out << "scroll: " << format_sequence(r.scroll.parts()) << '\n';
      if (r.base_section) print_decomposition(out, *r.base_section);
    };
  });

  auto* random = app.add_subcommand("random-form", "Random section form of S(A) (uses --seed)");
  random->add_option("A", a_text, "Scroll type")->required();
  random->callback([&] {
    action = [&] {
      const SectionForm form = random_section_form(field(), parse_scroll_type(a_text), cfg.seed);
      if (json_mode())
        print_json(out, form);
      else
        out << format_section_form(form);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.format == "dot" && !graph->parsed()) {
    err << "error: --format dot is only available for the graph command\n";
    return kExitUsage;
  }

  try {
    action();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::Parse ? kExitUsage : kExitDomain;
  }
  return kExitOk;
}

}  // namespace scrolls::cli
