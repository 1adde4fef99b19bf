#include "scrolls/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "scrolls/error.hpp"

namespace scrolls {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<Violation> violation_from_string(std::string_view s) {
  for (Violation v : {Violation::Sum, Violation::Pointwise, Violation::Tail,
                      Violation::MultiplicityBound, Violation::Positivity, Violation::Length})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

}  // namespace

ScrollType parse_scroll_type(const std::string& text) {
  std::vector<int> parts = parse_sequence(text);
  try {
    return ScrollType(std::move(parts));
  } catch (const Error& e) {
    throw Error(Errc::Parse, "invalid scroll type '" + text + "': " + e.what());
  }
}

MultiplicityMultiset parse_multiplicities(const std::string& text) {
  std::vector<int> parts = parse_sequence(text);
  try {
    return MultiplicityMultiset(std::move(parts));
  } catch (const Error& e) {
    throw Error(Errc::Parse, "invalid multiplicities '" + text + "': " + e.what());
  }
}

void to_json(nlohmann::json& j, const ScrollType& a) {
  j = std::vector<int>(a.parts().begin(), a.parts().end());
}

void from_json(const nlohmann::json& j, ScrollType& a) { a = ScrollType(j.get<std::vector<int>>()); }

void to_json(nlohmann::json& j, const MultiplicityMultiset& m) {
  j = std::vector<int>(m.entries().begin(), m.entries().end());
}

void from_json(const nlohmann::json& j, MultiplicityMultiset& m) {
  m = MultiplicityMultiset(j.get<std::vector<int>>());
}

void to_json(nlohmann::json& j, const ValidityReport& r) {
  j = nlohmann::json::object();
  j["valid"] = r.valid;
  j["violated"] = r.violated ? nlohmann::json(std::string(to_string(*r.violated))) : nlohmann::json(nullptr);
  j["v"] = r.pivot ? nlohmann::json(*r.pivot) : nlohmann::json(nullptr);
}

void from_json(const nlohmann::json& j, ValidityReport& r) {
  r = ValidityReport{};
  r.valid = j.at("valid").get<bool>();
  if (const auto& v = j.at("violated"); !v.is_null()) {
    r.violated = violation_from_string(v.get<std::string>());
    if (!r.violated) throw Error(Errc::Parse, "unknown violation tag " + v.get<std::string>());
  }
  if (const auto& v = j.at("v"); !v.is_null()) r.pivot = v.get<int>();
}

void to_json(nlohmann::json& j, const IntPolynomial& p) {
  j = std::vector<IntPolynomial::Coeff>(p.coeffs().begin(), p.coeffs().end());
}

void from_json(const nlohmann::json& j, IntPolynomial& p) {
  p = IntPolynomial(j.get<std::vector<IntPolynomial::Coeff>>());
}

void to_json(nlohmann::json& j, const SpecializationGraph& g) {
  j = nlohmann::json::object();
  j["codim"] = g.codim;
  j["nodes"] = g.nodes;
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"generic", e.generic}});
  j["edges"] = std::move(edges);
}

void from_json(const nlohmann::json& j, SpecializationGraph& g) {
  g.codim = j.at("codim").get<int>();
  g.nodes = j.at("nodes").get<std::vector<ScrollType>>();
  g.edges.clear();
  for (const auto& e : j.at("edges"))
    g.edges.push_back({e.at("from").get<std::size_t>(), e.at("to").get<std::size_t>(),
                       e.at("generic").get<bool>()});
}

void to_json(nlohmann::json& j, const BinaryForm& f) { j = f.to_string(); }

void to_json(nlohmann::json& j, const SectionForm& f) {
  j = nlohmann::json::object();
  j["a"] = f.scroll();
  auto forms = nlohmann::json::array();
  for (const auto& g : f.forms()) forms.push_back(g.to_string());
  j["forms"] = std::move(forms);
}

void to_json(nlohmann::json& j, const SyzygyMatrix& z) {
  j = nlohmann::json::object();
  j["rows"] = z.rows();
  j["cols"] = z.cols();
  j["row_degrees"] = z.row_degrees;
  j["col_degrees"] = z.col_degrees;
  auto entries = nlohmann::json::array();
  for (const auto& e : z.entries) entries.push_back(e.to_string());
  j["entries"] = std::move(entries);
}

void to_json(nlohmann::json& j, const SectionDecomposition& d) {
  j = nlohmann::json::object();
  j["scroll_part"] = d.scroll_part;
  j["multiplicities"] = d.multiplicities;
  j["gcd_degree"] = d.gcd_degree;
  j["common_factor"] = d.common_factor ? nlohmann::json(d.common_factor->to_string()) : nlohmann::json(nullptr);
  j["prime"] = d.irreducible();
}

void to_json(nlohmann::json& j, const ConeSectionResult& r) {
  j = nlohmann::json::object();
  j["case"] = std::string(to_string(r.kind));
  j["scroll"] = r.scroll;
  j["base_section"] = r.base_section ? nlohmann::json(*r.base_section) : nlohmann::json(nullptr);
}

void to_json(nlohmann::json& j, const ReducibleBucket& b) {
  j = nlohmann::json::object();
  j["degree"] = b.degree;
  j["deficit"] = b.deficit;
  j["count"] = b.components.size();
  j["components"] = b.components;
  if (!b.multiplicities.empty()) j["multiplicities"] = b.multiplicities;
}

SectionForm section_form_from_json(const nlohmann::json& j, const PrimeField& field) {
  try {
    ScrollType a = j.at("a").get<ScrollType>();
    const auto& forms = j.at("forms");
    if (!forms.is_array() || forms.size() != a.size())
      throw Error(Errc::Parse, "\"forms\" must list one form per part of \"a\"");
    std::vector<BinaryForm> out;
    for (std::size_t i = 0; i < a.size(); ++i)
      out.push_back(BinaryForm::parse(field, a[i], forms[i].get<std::string>()));
    return SectionForm(std::move(a), std::move(out));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, std::string("malformed section form JSON: ") + e.what());
  }
}

std::string format_section_form(const SectionForm& form) {
  std::ostringstream out;
  out << "a: " << format_sequence(form.scroll().parts()) << '\n';
  for (std::size_t i = 0; i < form.forms().size(); ++i)
    out << 'f' << i + 1 << ": " << form[i].to_string() << '\n';
  return out.str();
}

SectionForm parse_section_form(std::string_view text, const PrimeField& field) {
  if (const auto body = strip(text); !body.empty() && body.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(body);
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::Parse, std::string("invalid JSON: ") + e.what());
    }
    return section_form_from_json(j, field);
  }

  std::optional<ScrollType> scroll;
  std::map<std::size_t, std::string> raw;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s(line);
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = strip(s);
    if (s.empty()) continue;
    const auto colon = s.find(':');
    if (colon == std::string_view::npos)
      throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": expected 'key: value'");
    const std::string key(strip(s.substr(0, colon)));
    const std::string value(strip(s.substr(colon + 1)));
    if (key == "a") {
      if (scroll) throw Error(Errc::Parse, "duplicate 'a:' line");
      scroll = parse_scroll_type(value);
    } else if (key.size() > 1 && key[0] == 'f') {
      std::size_t index = 0;
      try {
        std::size_t used = 0;
        index = std::stoul(key.substr(1), &used);
        if (used != key.size() - 1) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": bad key '" + key + "'");
      }
      if (index == 0 || !raw.emplace(index, value).second)
        throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": bad or duplicate key '" + key + "'");
    } else {
      throw Error(Errc::Parse, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (!scroll) throw Error(Errc::Parse, "missing 'a:' line");
  std::vector<BinaryForm> forms;
  for (std::size_t i = 1; i <= scroll->size(); ++i) {
    auto it = raw.find(i);
    if (it == raw.end()) throw Error(Errc::Parse, "missing line f" + std::to_string(i));
    forms.push_back(BinaryForm::parse(field, (*scroll)[i - 1], it->second));
  }
  if (raw.size() != scroll->size()) throw Error(Errc::Parse, "more forms than parts of a");
  return SectionForm(std::move(*scroll), std::move(forms));
}

SectionForm read_section_form(const std::filesystem::path& path, const PrimeField& field) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Io, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_section_form(buf.str(), field);
}

}  // namespace scrolls
