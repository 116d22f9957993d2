#include "clusternet/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "clusternet/error.hpp"

namespace clusternet::io {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    const std::size_t start = i;
    while (i < s.size() && !is_space(s[i])) ++i;
    if (i > start) out.push_back(Token{s.substr(start, i - start), start});
  }
  return out;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

std::string term(Coord coefficient, const std::string& name) {
  return coefficient == 1 ? name : std::to_string(coefficient) + " " + name;
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<Coord> int_row(const Json& j) {
  return j.get<std::vector<Coord>>();
}

Json binomials_to_json(std::span<const Binomial> bins) {
  Json arr = Json::array();
  for (const auto& b : bins) {
    arr.push_back(Json{{"head", b.head.values()}, {"tail", b.tail.values()}});
  }
  return arr;
}

}  // namespace

void validate_species(SpeciesList species) {
  std::set<std::string_view> seen;
  for (const auto& name : species) {
    if (name.empty()) throw InvalidArgument("empty species name");
    if (name == "+") throw InvalidArgument("species name '+' is reserved");
    if (std::any_of(name.begin(), name.end(), is_space)) {
      throw InvalidArgument("species name '" + name + "' contains whitespace");
    }
    if (!seen.insert(name).second) {
      throw InvalidArgument("duplicate species name '" + name + "'");
    }
  }
}

Exponent parse_state(std::string_view expr, SpeciesList species) {
  const auto tokens = tokenize(expr);
  if (tokens.empty()) throw SyntaxError("empty state expression", 0);
  Exponent x(species.size());
  std::size_t i = 0;
  for (;;) {
    if (i >= tokens.size()) {
      throw SyntaxError("expected a term", expr.size());
    }
    Coord coefficient = 1;
    if (tokens[i].text == "+") {
      throw SyntaxError("expected a term, found '+'", tokens[i].offset);
    }
    if (all_digits(tokens[i].text) && i + 1 < tokens.size() &&
        tokens[i + 1].text != "+") {
      const auto t = tokens[i].text;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(),
                                     coefficient);
      if (ec != std::errc{}) {
        throw SyntaxError("coefficient out of range", tokens[i].offset);
      }
      ++i;
    }
    const Token& name = tokens[i];
    auto it = std::find(species.begin(), species.end(), name.text);
    if (it == species.end()) {
      if (all_digits(name.text)) {
        throw SyntaxError("coefficient without a species", name.offset);
      }
      throw UnknownSpecies(std::string(name.text), name.offset);
    }
    const auto idx = static_cast<std::size_t>(it - species.begin());
    Coord sum;
    if (__builtin_add_overflow(x[idx], coefficient, &sum)) {
      throw SyntaxError("coefficient sum overflows", name.offset);
    }
    x.set(idx, sum);
    ++i;
    if (i == tokens.size()) break;
    if (tokens[i].text != "+") {
      throw SyntaxError("expected '+' between terms", tokens[i].offset);
    }
    ++i;
  }
  return x;
}

std::string format_state(const Exponent& x, SpeciesList species) {
  require_same_size(species.size(), x.size());
  std::string out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += term(x[i], species[i]);
  }
  return out.empty() ? "0" : out;
}

std::string format_reaction(const Move& d, SpeciesList species) {
  return format_state(d.negative_part(), species) + " → " +
         format_state(d.positive_part(), species);
}

// --- Balance matrices --------------------------------------------------------

BalanceMatrix parse_balance_matrix_text(std::istream& in) {
  BalanceMatrix m;
  std::string line;
  bool header = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;
    if (header) {
      for (const auto& t : tokens) m.species.emplace_back(t.text);
      header = false;
      continue;
    }
    std::size_t first = 0;
    std::string label;
    Coord probe;
    const auto t0 = tokens.front().text;
    if (std::from_chars(t0.data(), t0.data() + t0.size(), probe).ptr !=
        t0.data() + t0.size()) {
      label = std::string(t0);
      first = 1;
    }
    std::vector<Coord> row;
    for (std::size_t k = first; k < tokens.size(); ++k) {
      const auto t = tokens[k].text;
      Coord v;
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc{} || p != t.data() + t.size()) {
        throw SyntaxError("bad integer '" + std::string(t) + "' on line " +
                              std::to_string(line_no),
                          tokens[k].offset);
      }
      row.push_back(v);
    }
    m.row_labels.push_back(label.empty() ? "row" + std::to_string(m.rows.size() + 1)
                                         : label);
    m.rows.push_back(std::move(row));
  }
  validate_species(m.species);
  m.validate();
  return m;
}

Json to_json(const BalanceMatrix& m) {
  return Json{{"species", m.species},
              {"row_labels", m.row_labels},
              {"rows", m.rows}};
}

BalanceMatrix balance_matrix_from_json(const Json& j) {
  BalanceMatrix m;
  m.species = j.at("species").get<std::vector<std::string>>();
  if (j.contains("row_labels")) {
    m.row_labels = j.at("row_labels").get<std::vector<std::string>>();
  }
  for (const auto& row : j.at("rows")) m.rows.push_back(int_row(row));
  validate_species(m.species);
  m.validate();
  return m;
}

BalanceMatrix read_balance_matrix(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return balance_matrix_from_json(Json::parse(text));
  }
  std::istringstream in(text);
  return parse_balance_matrix_text(in);
}

// --- Model files -------------------------------------------------------------

void ModelFile::validate() const {
  validate_species(species);
  const std::size_t n = species.size();
  if (balance_matrix) {
    balance_matrix->validate();
    if (balance_matrix->species != species) {
      throw InvalidArgument("balance matrix species differ from model species");
    }
  }
  for (const auto* list : {&reversible, &irreversible}) {
    if (!*list) continue;
    for (const Move& m : **list) require_same_size(n, m.size());
  }
  if (reversible.has_value() != irreversible.has_value()) {
    throw InvalidArgument("model must give both reversible and irreversible "
                          "transitions, or neither");
  }
  if (grading) require_same_size(n, grading->dimension());
  if (!balance_matrix && !reversible) {
    throw InvalidArgument("model needs a balance matrix or transitions");
  }
}

std::size_t ModelFile::cap(const std::string& name,
                           std::size_t fallback) const {
  auto it = caps.find(name);
  return it == caps.end() ? fallback : it->second;
}

Grading ModelFile::resolve_grading() const {
  if (grading) return *grading;
  if (!balance_matrix) {
    throw NoPositiveGrading("model has neither a grading nor a balance matrix");
  }
  return find_positive_grading(balance_matrix->rows);
}

TransitionSet ModelFile::transitions(std::size_t max_reactants,
                                     std::size_t threads) const {
  validate();
  Grading g = resolve_grading();
  if (reversible) {
    TransitionSet ts;
    ts.species = species;
    ts.reversible = *reversible;
    ts.irreversible = *irreversible;
    ts.grading = std::move(g);
    if (!check_homogeneous(ts.reversible, ts.grading) ||
        !check_homogeneous(ts.irreversible, ts.grading)) {
      throw InvalidArgument("model transitions are not homogeneous under the "
                            "grading");
    }
    return ts;
  }
  const auto reactions = enumerate_elementary(
      *balance_matrix, g, max_reactants, cap("fiber_cap", 1'000'000), threads);
  return partition_transitions(reactions.distinct, species, std::move(g));
}

Json to_json(const ModelFile& model) {
  Json j{{"species", model.species}};
  if (model.balance_matrix) {
    j["balance_matrix"] = Json{{"row_labels", model.balance_matrix->row_labels},
                               {"rows", model.balance_matrix->rows}};
  }
  if (model.reversible) {
    Json t;
    Json u = Json::array(), d = Json::array();
    for (const Move& m : *model.reversible) u.push_back(m.values());
    for (const Move& m : *model.irreversible) d.push_back(m.values());
    t["reversible"] = std::move(u);
    t["irreversible"] = std::move(d);
    j["transitions"] = std::move(t);
  }
  if (model.grading) j["grading"] = model.grading->rows();
  if (!model.caps.empty()) j["caps"] = model.caps;
  return j;
}

ModelFile model_from_json(const Json& j) {
  ModelFile model;
  model.species = j.at("species").get<std::vector<std::string>>();
  if (j.contains("balance_matrix")) {
    const Json& bm = j.at("balance_matrix");
    BalanceMatrix m;
    m.species = model.species;
    if (bm.contains("row_labels")) {
      m.row_labels = bm.at("row_labels").get<std::vector<std::string>>();
    }
    for (const auto& row : bm.at("rows")) m.rows.push_back(int_row(row));
    model.balance_matrix = std::move(m);
  }
  if (j.contains("transitions")) {
    const Json& t = j.at("transitions");
    model.reversible.emplace();
    model.irreversible.emplace();
    for (const auto& row : t.at("reversible")) {
      model.reversible->emplace_back(int_row(row));
    }
    for (const auto& row : t.at("irreversible")) {
      model.irreversible->emplace_back(int_row(row));
    }
  }
  if (j.contains("grading")) {
    model.grading = Grading(j.at("grading").get<IntMatrix>());
  }
  if (j.contains("caps")) {
    model.caps = j.at("caps").get<std::map<std::string, std::size_t>>();
  }
  model.validate();
  return model;
}

ModelFile read_model(const std::filesystem::path& path) {
  return model_from_json(Json::parse(read_file(path)));
}

void write_model(const std::filesystem::path& path, const ModelFile& model) {
  write_file(path, dump(to_json(model)));
}

// --- Cluster graph files -----------------------------------------------------

Json to_json(const GraphDocument& doc) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < doc.graph.nodes().size(); ++i) {
    const Exponent& rep = doc.graph.nodes()[i];
    nodes.push_back(Json{{"id", i},
                         {"rep", rep.values()},
                         {"label", format_state(rep, doc.species)}});
  }
  Json arcs = Json::array();
  for (const ClusterArc& a : doc.graph.arcs()) {
    arcs.push_back(Json{{"source", a.source},
                        {"target", a.target},
                        {"label", a.label.values()},
                        {"witness", a.witness.values()},
                        {"reaction", format_reaction(a.label, doc.species)}});
  }
  Json initial = Json::array();
  for (const Exponent& s : doc.initial_states) initial.push_back(s.values());
  return Json{
      {"format", "clusternet-graph/1"},
      {"species", doc.species},
      {"grading", doc.grading.rows()},
      {"order",
       Json{{"weight", doc.order.weight()},
            {"tiebreak_perm", doc.order.tiebreak_perm()}}},
      {"basis", binomials_to_json(doc.basis)},
      {"initial_states", std::move(initial)},
      {"initial_nodes", doc.graph.initial()},
      {"mode", doc.mode},
      {"nodes", std::move(nodes)},
      {"arcs", std::move(arcs)},
  };
}

GraphDocument graph_from_json(const Json& j) {
  GraphDocument doc;
  doc.species = j.at("species").get<std::vector<std::string>>();
  validate_species(doc.species);
  doc.grading = Grading(j.at("grading").get<IntMatrix>());
  doc.order = TermOrder(
      j.at("order").at("weight").get<std::vector<Coord>>(),
      j.at("order").at("tiebreak_perm").get<std::vector<std::size_t>>());
  for (const auto& b : j.at("basis")) {
    doc.basis.push_back(Binomial{Exponent(int_row(b.at("head"))),
                                 Exponent(int_row(b.at("tail")))});
  }
  for (const auto& s : j.at("initial_states")) {
    doc.initial_states.emplace_back(int_row(s));
  }
  doc.mode = j.at("mode").get<std::string>();
  const std::size_t n = doc.species.size();
  for (const auto& node : j.at("nodes")) {
    Exponent rep(int_row(node.at("rep")));
    require_same_size(n, rep.size());
    const auto [idx, inserted] = doc.graph.add_node(rep);
    if (!inserted || idx != node.at("id").get<std::size_t>()) {
      throw InvalidArgument("graph nodes must be unique and listed by id");
    }
  }
  for (const auto& arc : j.at("arcs")) {
    doc.graph.add_arc(ClusterArc{arc.at("source").get<std::size_t>(),
                                 arc.at("target").get<std::size_t>(),
                                 Move(int_row(arc.at("label"))),
                                 Exponent(int_row(arc.at("witness")))});
  }
  for (const auto& i : j.at("initial_nodes")) {
    doc.graph.mark_initial(i.get<std::size_t>());
  }
  return doc;
}

GraphDocument read_graph(const std::filesystem::path& path) {
  return graph_from_json(Json::parse(read_file(path)));
}

void write_graph(const std::filesystem::path& path, const GraphDocument& doc) {
  write_file(path, dump(to_json(doc)));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_dot(const GraphDocument& doc,
                   std::span<const std::size_t> highlight) {
  const std::set<std::size_t> bold(highlight.begin(), highlight.end());
  const auto& initial = doc.graph.initial();
  std::ostringstream out;
  out << "digraph clusters {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < doc.graph.nodes().size(); ++i) {
    out << "  n" << i << " [label=\""
        << escape_dot(format_state(doc.graph.nodes()[i], doc.species)) << "\"";
    if (std::find(initial.begin(), initial.end(), i) != initial.end()) {
      out << ", peripheries=2";
    }
    out << "];\n";
  }
  for (std::size_t a = 0; a < doc.graph.arcs().size(); ++a) {
    const auto& arc = doc.graph.arcs()[a];
    out << "  n" << arc.source << " -> n" << arc.target << " [label=\""
        << escape_dot(format_reaction(arc.label, doc.species)) << "\"";
    if (bold.count(a)) out << ", style=bold, color=red";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string arcs_to_csv(const GraphDocument& doc) {
  std::ostringstream out;
  out << "source,target,reaction,label\n";
  for (const auto& arc : doc.graph.arcs()) {
    std::string label;
    for (std::size_t i = 0; i < arc.label.size(); ++i) {
      if (i) label += ' ';
      label += std::to_string(arc.label[i]);
    }
    out << arc.source << ',' << arc.target << ','
        << csv_field(format_reaction(arc.label, doc.species)) << ','
        << csv_field(label) << '\n';
  }
  return out.str();
}

}  // namespace clusternet::io
