#include "cliquebench/instance.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "cliquebench/dimacs.hpp"
#include "cliquebench/oracle.hpp"

namespace cliquebench {

double PlantParams::log_inv_p_n() const {
  if (!(p > 0.0 && p < 1.0) || n < 1) return std::numeric_limits<double>::quiet_NaN();
  return std::log(static_cast<double>(n)) / std::log(1.0 / p);
}

double PlantParams::epsilon() const {
  const double base = log_inv_p_n();
  if (!(base > 0.0)) return std::numeric_limits<double>::quiet_NaN();
  return static_cast<double>(k) / base - 1.0;
}

bool PlantParams::in_target_range() const {
  const double base = log_inv_p_n();
  if (std::isnan(base)) return false;
  const auto kk = static_cast<double>(k);
  return kk >= base && kk <= 2.0 * base;
}

void PlantParams::validate() const {
  check_probability(p);
  if (k > n) {
    throw InputError("planted clique size k=" + std::to_string(k) + " exceeds n=" +
                     std::to_string(n));
  }
}

Graph sample_gnp(std::size_t n, double p, Rng& rng) {
  check_probability(p);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.next_unit() < p) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph plant_clique(const Graph& g, const VertexSet& members) {
  check_vertices(g, members);
  GraphBuilder b(g);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) b.add_edge(members[i], members[j]);
  }
  return std::move(b).build();
}

PlantedInstance owf_evaluate(const PlantParams& params, Rng& rng) {
  params.validate();
  const std::uint64_t seed = rng.seed();
  Graph g = sample_gnp(params.n, params.p, rng);
  VertexSet k_set = sample_subset(rng, params.n, params.k);
  Graph planted = plant_clique(g, k_set);
  return PlantedInstance{std::move(planted), std::move(k_set), params, seed};
}

PlantedInstance owf_evaluate(const PlantParams& params, std::uint64_t seed) {
  Rng rng(seed);
  return owf_evaluate(params, rng);
}

CliqueSizeSummary natural_clique_size_experiment(std::size_t n, double p, std::size_t trials,
                                                 Rng& rng) {
  CliqueSizeSummary out;
  if (trials == 0) return out;
  out.min = std::numeric_limits<std::size_t>::max();
  double total = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    Rng trial = rng.child("natural/" + std::to_string(t));
    const Graph g = sample_gnp(n, p, trial);
    const std::size_t size = clique_number(g);
    out.sizes.push_back(size);
    total += static_cast<double>(size);
    out.min = std::min(out.min, size);
    out.max = std::max(out.max, size);
  }
  out.mean = total / static_cast<double>(trials);
  return out;
}

void write_instance(std::ostream& out, const PlantedInstance& inst) {
  out << "c cliquebench planted-clique instance\n";
  out << "[metadata]\n";
  out << "format-version = " << kInstanceFormatVersion << '\n';
  out << "n = " << inst.params.n << '\n';
  out << "p = " << std::setprecision(17) << inst.params.p << '\n';
  out << "k = " << inst.params.k << '\n';
  out << "epsilon = " << std::setprecision(17) << inst.params.epsilon() << '\n';
  out << "seed = " << inst.seed << '\n';
  out << "[graph]\n";
  write_dimacs(out, inst.public_graph);
  out << "[hidden-clique]\n";
  for (std::size_t i = 0; i < inst.hidden_clique.size(); ++i) {
    out << (i == 0 ? "" : " ") << inst.hidden_clique[i] + 1;
  }
  out << '\n';
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& text, const std::string& key, std::size_t line) {
  T value{};
  if constexpr (std::is_floating_point_v<T>) {
    std::istringstream in(text);
    in >> value;
    if (in.fail()) {
      if (text == "nan" || text == "-nan") return std::numeric_limits<T>::quiet_NaN();
      throw FormatError("bad value for '" + key + "'", line);
    }
  } else {
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
      throw FormatError("bad value for '" + key + "'", line);
    }
  }
  return value;
}

}  // namespace

PlantedInstance read_instance(std::istream& in) {
  enum class Section { none, metadata, graph, hidden };
  Section section = Section::none;
  std::map<std::string, std::pair<std::string, std::size_t>> meta;
  std::string graph_block;
  std::size_t graph_first_line = 0;
  std::vector<std::pair<std::string, std::size_t>> hidden_tokens;

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string text = trim(raw);
    if (text == "[metadata]") {
      section = Section::metadata;
      continue;
    }
    if (text == "[graph]") {
      section = Section::graph;
      graph_first_line = line + 1;
      continue;
    }
    if (text == "[hidden-clique]") {
      section = Section::hidden;
      continue;
    }
    switch (section) {
      case Section::none:
        if (!text.empty() && text[0] != 'c') throw FormatError("content before [metadata]", line);
        break;
      case Section::metadata: {
        if (text.empty()) break;
        const auto eq = text.find('=');
        if (eq == std::string::npos) throw FormatError("expected 'key = value'", line);
        meta[trim(text.substr(0, eq))] = {trim(text.substr(eq + 1)), line};
        break;
      }
      case Section::graph:
        graph_block += raw;
        graph_block += '\n';
        break;
      case Section::hidden: {
        std::istringstream tokens(text);
        std::string tok;
        while (tokens >> tok) hidden_tokens.emplace_back(tok, line);
        break;
      }
    }
  }

  auto field = [&](const std::string& key) -> const std::pair<std::string, std::size_t>& {
    auto it = meta.find(key);
    if (it == meta.end()) throw FormatError("missing metadata field '" + key + "'", line);
    return it->second;
  };
  const auto& [version_text, version_line] = field("format-version");
  if (parse_number<int>(version_text, "format-version", version_line) != kInstanceFormatVersion) {
    throw FormatError("unsupported format-version " + version_text, version_line);
  }
  PlantedInstance inst;
  inst.params.n = parse_number<std::size_t>(field("n").first, "n", field("n").second);
  inst.params.p = parse_number<double>(field("p").first, "p", field("p").second);
  inst.params.k = parse_number<std::size_t>(field("k").first, "k", field("k").second);
  inst.seed = parse_number<std::uint64_t>(field("seed").first, "seed", field("seed").second);
  if (graph_first_line == 0) throw FormatError("missing [graph] section", line);

  std::istringstream graph_in(graph_block);
  inst.public_graph = read_dimacs(graph_in, graph_first_line);
  if (inst.public_graph.n() != inst.params.n) {
    throw FormatError("graph vertex count disagrees with metadata n", graph_first_line);
  }
  std::vector<Vertex> hidden;
  for (const auto& [tok, tok_line] : hidden_tokens) {
    const auto id = parse_number<std::uint64_t>(tok, "hidden-clique", tok_line);
    if (id == 0 || id > inst.params.n) throw FormatError("hidden-clique vertex out of range", tok_line);
    hidden.push_back(static_cast<Vertex>(id - 1));
  }
  inst.hidden_clique = VertexSet::from_unsorted(std::move(hidden));
  if (inst.hidden_clique.size() != inst.params.k) {
    throw FormatError("hidden clique size disagrees with metadata k", line);
  }
  if (!is_clique(inst.public_graph, inst.hidden_clique)) {
    throw FormatError("hidden clique is not a clique of the stored graph", line);
  }
  return inst;
}

void write_instance_file(const std::string& path, const PlantedInstance& inst) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_instance(out, inst);
  if (!out) throw std::runtime_error("write failed: " + path);
}

PlantedInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_instance(in);
}

}  // namespace cliquebench
