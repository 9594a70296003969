#include "xnlp/json_io.hpp"

namespace xnlp {

namespace {

const char* acceptance_name(Acceptance a) {
  switch (a) {
    case Acceptance::OneAccepting: return "one";
    case Acceptance::AllAccepting: return "all";
    case Acceptance::NonHalting: return "non-halting";
  }
  return "one";
}

Acceptance acceptance_from(const std::string& s) {
  if (s == "one") return Acceptance::OneAccepting;
  if (s == "all") return Acceptance::AllAccepting;
  if (s == "non-halting") return Acceptance::NonHalting;
  throw ValidationError("unknown acceptance flavor '" + s + "'");
}

const char* problem_name(VertexProblem p) {
  switch (p) {
    case VertexProblem::DominatingSet: return "dominating-set";
    case VertexProblem::IndependentSet: return "independent-set";
    case VertexProblem::Clique: return "clique";
  }
  return "dominating-set";
}

VertexProblem problem_from(const std::string& s) {
  if (s == "dominating-set") return VertexProblem::DominatingSet;
  if (s == "independent-set") return VertexProblem::IndependentSet;
  if (s == "clique") return VertexProblem::Clique;
  throw ValidationError("unknown vertex problem '" + s + "'");
}

Json pairs_to_json(const std::vector<std::pair<int, int>>& v) {
  Json a = Json::array();
  for (auto [x, y] : v) a.push_back({x, y});
  return a;
}

std::vector<std::pair<int, int>> pairs_from(const Json& j) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw ValidationError("pairs must be two-element arrays");
    out.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return out;
}

void put_graph(Json& j, const Graph& g) {
  j["n"] = g.n;
  j["edges"] = pairs_to_json(g.edges);
  if (!g.names.empty()) j["names"] = g.names;
}

Json pd_to_json(const PathDecomposition& pd) { return pd.bags; }

PathDecomposition pd_from(const Json& j) {
  PathDecomposition pd;
  pd.bags = j.get<std::vector<std::vector<int>>>();
  return pd;
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key).get<T>();
}

template <class T>
T field_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

Json body(const CellularAutomaton& ca) {
  Json j;
  j["states"] = ca.num_states;
  if (!ca.state_names.empty()) j["state_names"] = ca.state_names;
  j["left"] = ca.left;
  j["right"] = ca.right;
  j["transitions"] = ca.transitions;
  j["accepting"] = ca.accepting;
  j["initial"] = ca.initial;
  j["t"] = ca.t;
  j["acceptance"] = acceptance_name(ca.acceptance);
  return j;
}

Json body(const ChainedCnf& c) {
  Json j;
  j["r"] = c.r;
  j["q"] = c.q;
  j["k"] = c.k;
  j["junctions"] = c.junctions;
  j["first"] = c.first;
  j["last"] = c.last;
  j["positive"] = c.positive;
  j["regular"] = c.regular;
  j["partition"] = c.partition;
  return j;
}

Json body(const LayeredGraph& g) {
  Json j;
  put_graph(j, g.graph);
  j["r"] = g.r;
  j["k"] = g.k;
  j["layer"] = g.layer;
  j["color"] = g.color;
  return j;
}

Json body(const Nnccm& m) {
  Json j;
  j["k"] = m.k;
  j["n"] = m.n;
  Json checks = Json::array();
  for (const auto& c : m.checks) checks.push_back({c.c1, c.c2, c.r1, c.r2});
  j["checks"] = checks;
  return j;
}

Json body(const ListColoringInstance& inst) {
  Json j;
  put_graph(j, inst.graph);
  j["bags"] = pd_to_json(inst.pd);
  j["lists"] = inst.lists;
  if (!inst.precolored.empty()) j["precolored"] = inst.precolored;
  return j;
}

Json body(const PathwidthVertexInstance& inst) {
  Json j;
  j["problem"] = problem_name(inst.problem);
  put_graph(j, inst.graph);
  j["bags"] = pd_to_json(inst.pd);
  j["K"] = inst.K;
  return j;
}

Json body(const SchedulingInstance& inst) {
  Json j;
  j["tasks"] = inst.num_tasks;
  j["prec"] = pairs_to_json(inst.prec);
  j["machines"] = inst.machines;
  j["deadline"] = inst.deadline;
  return j;
}

Json body(const UniformEmulationInstance& inst) {
  Json j;
  j["m"] = inst.m;
  j["c"] = inst.c;
  j["weights"] = inst.weights;
  return j;
}

Json body(const BandwidthInstance& inst) {
  Json j;
  put_graph(j, inst.graph);
  return j;
}

Json body(const ReconfigurationInstance& inst) {
  Json j;
  put_graph(j, inst.graph);
  j["set"] = problem_name(static_cast<VertexProblem>(inst.kind));
  j["rule"] = inst.rule == MoveRule::TokenSliding ? "TS" : "TJ";
  j["start"] = inst.start;
  j["target"] = inst.target;
  j["tokens"] = inst.tokens;
  j["T"] = inst.T;
  j["exact"] = inst.exact;
  return j;
}

Json body(const DfaCollection& d) {
  Json j;
  j["alphabet"] = d.alphabet;
  if (!d.symbols.empty()) j["symbols"] = d.symbols;
  j["acyclic"] = d.acyclic;
  Json autos = Json::array();
  for (const auto& m : d.automata) {
    Json a;
    a["states"] = m.states;
    a["start"] = m.start;
    Json delta = Json::array();
    for (int s = 0; s < m.states; ++s) {
      Json row = Json::array();
      for (int x = 0; x < d.alphabet; ++x) row.push_back(m.delta[static_cast<size_t>(s) * d.alphabet + x]);
      delta.push_back(row);
    }
    a["delta"] = delta;
    a["accepting"] = m.accepting;
    autos.push_back(a);
  }
  j["automata"] = autos;
  return j;
}

Json body(const LcsInstance& inst) {
  Json j;
  j["strings"] = inst.strings;
  j["m"] = inst.m;
  return j;
}

Instance parse_body(const std::string& kind, const Json& j) {
  if (kind == "cellular-automaton") {
    CellularAutomaton ca;
    ca.num_states = field<int>(j, "states");
    ca.state_names = field_or<std::vector<std::string>>(j, "state_names", {});
    ca.left = field<int>(j, "left");
    ca.right = field<int>(j, "right");
    ca.transitions = field<std::vector<std::array<int, 4>>>(j, "transitions");
    ca.accepting = field<std::vector<int>>(j, "accepting");
    ca.initial = field<std::vector<int>>(j, "initial");
    ca.t = field<int>(j, "t");
    ca.acceptance = acceptance_from(field_or<std::string>(j, "acceptance", "one"));
    return ca;
  }
  if (kind == "chained-cnf") {
    ChainedCnf c;
    c.r = field<int>(j, "r");
    c.q = field<int>(j, "q");
    c.k = j.contains("k") ? j["k"].get<int>() : field<int>(j, "parameter");
    c.junctions = field_or<std::vector<Cnf>>(j, "junctions", {});
    c.first = field_or<Cnf>(j, "first", {});
    c.last = field_or<Cnf>(j, "last", {});
    c.positive = field_or<bool>(j, "positive", false);
    c.regular = field_or<bool>(j, "regular", false);
    c.partition = field_or<std::vector<std::vector<int>>>(j, "partition", {});
    return c;
  }
  if (kind == "chained-clique" || kind == "chained-independent-set") {
    LayeredGraph g;
    g.graph = graph_from_json(j);
    g.r = field<int>(j, "r");
    g.k = j.contains("k") ? j["k"].get<int>() : field<int>(j, "parameter");
    g.layer = field<std::vector<int>>(j, "layer");
    g.color = field<std::vector<int>>(j, "color");
    g.variant = kind == "chained-clique" ? ChainedVariant::Clique : ChainedVariant::IndependentSet;
    return g;
  }
  if (kind == "nnccm") {
    Nnccm m;
    m.k = j.contains("k") ? j["k"].get<int>() : field<int>(j, "parameter");
    m.n = field<int>(j, "n");
    for (const auto& c : field<Json>(j, "checks")) {
      if (!c.is_array() || c.size() != 4) throw ValidationError("checks must be four-element arrays");
      m.checks.push_back({c[0].get<int>(), c[1].get<int>(), c[2].get<int>(), c[3].get<int>()});
    }
    return m;
  }
  if (kind == "list-coloring") {
    ListColoringInstance inst;
    inst.graph = graph_from_json(j);
    inst.pd = pd_from(field<Json>(j, "bags"));
    inst.lists = field<std::vector<std::vector<int>>>(j, "lists");
    inst.precolored = field_or<std::vector<int>>(j, "precolored", {});
    return inst;
  }
  if (kind == "pathwidth-vertex") {
    PathwidthVertexInstance inst;
    inst.problem = problem_from(field<std::string>(j, "problem"));
    inst.graph = graph_from_json(j);
    inst.pd = pd_from(field<Json>(j, "bags"));
    inst.K = field<int>(j, "K");
    return inst;
  }
  if (kind == "scheduling") {
    SchedulingInstance inst;
    inst.num_tasks = field<int>(j, "tasks");
    inst.prec = pairs_from(field_or<Json>(j, "prec", Json::array()));
    inst.machines = field<int>(j, "machines");
    inst.deadline = field<int>(j, "deadline");
    return inst;
  }
  if (kind == "uniform-emulation") {
    UniformEmulationInstance inst;
    inst.m = field<int>(j, "m");
    inst.c = j.contains("c") ? j["c"].get<int>() : field<int>(j, "parameter");
    inst.weights = field<std::vector<int>>(j, "weights");
    return inst;
  }
  if (kind == "bandwidth") {
    BandwidthInstance inst;
    inst.graph = graph_from_json(j);
    inst.k = j.contains("k") ? j["k"].get<int>() : field<int>(j, "parameter");
    return inst;
  }
  if (kind == "reconfiguration") {
    ReconfigurationInstance inst;
    inst.graph = graph_from_json(j);
    inst.kind = static_cast<SetKind>(problem_from(field<std::string>(j, "set")));
    auto rule = field<std::string>(j, "rule");
    if (rule == "TS") inst.rule = MoveRule::TokenSliding;
    else if (rule == "TJ") inst.rule = MoveRule::TokenJumping;
    else throw ValidationError("unknown move rule '" + rule + "'");
    inst.start = field<std::vector<int>>(j, "start");
    inst.target = field<std::vector<int>>(j, "target");
    inst.tokens = j.contains("tokens") ? j["tokens"].get<int>() : static_cast<int>(inst.start.size());
    inst.T = field<int>(j, "T");
    inst.exact = field_or<bool>(j, "exact", false);
    return inst;
  }
  if (kind == "fsa-intersection") {
    DfaCollection d;
    d.alphabet = field<int>(j, "alphabet");
    d.symbols = field_or<std::string>(j, "symbols", "");
    d.acyclic = field_or<bool>(j, "acyclic", false);
    for (const auto& a : field<Json>(j, "automata")) {
      Dfa m;
      m.states = field<int>(a, "states");
      m.start = field_or<int>(a, "start", 0);
      for (const auto& row : field<Json>(a, "delta")) {
        if (static_cast<int>(row.size()) != d.alphabet)
          throw ValidationError("transition rows must have one entry per symbol");
        for (const auto& t : row) m.delta.push_back(t.get<int>());
      }
      m.accepting = field<std::vector<int>>(a, "accepting");
      d.automata.push_back(std::move(m));
    }
    return d;
  }
  if (kind == "lcs") {
    LcsInstance inst;
    inst.strings = field<std::vector<std::string>>(j, "strings");
    inst.m = field<int>(j, "m");
    return inst;
  }
  throw ValidationError("unknown kind '" + kind + "'");
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j;
  put_graph(j, g);
  return j;
}

Graph graph_from_json(const Json& j) {
  Graph g;
  g.n = field<int>(j, "n");
  g.edges = pairs_from(field_or<Json>(j, "edges", Json::array()));
  g.names = field_or<std::vector<std::string>>(j, "names", {});
  return g;
}

Json to_json(const Instance& inst) {
  Json j;
  j["kind"] = kind_name(inst);
  j["parameter"] = parameter_of(inst);
  Json rest = std::visit([](const auto& x) { return body(x); }, inst);
  for (auto it = rest.begin(); it != rest.end(); ++it) j[it.key()] = it.value();
  return j;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ValidationError("instance must be a JSON object");
  Instance inst;
  try {
    inst = parse_body(field<std::string>(j, "kind"), j);
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed instance: ") + e.what());
  }
  require_valid(inst);
  if (j.contains("parameter") && j["parameter"].is_number_integer() &&
      j["parameter"].get<long long>() != parameter_of(inst))
    throw ValidationError("parameter field disagrees with the instance (expected " +
                          std::to_string(parameter_of(inst)) + ")");
  return inst;
}

Instance parse_instance(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(j);
}

std::string dump(const Json& j) { return j.dump(); }

}  // namespace xnlp
