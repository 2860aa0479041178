#include "maxekpp/model_builders.hpp"

#include <stdexcept>
#include <string>

namespace maxekpp {

namespace {

// Emits pos1 + pos2 - neg <= 1 with the positive terms first.
void add_triangle_row(IlpModel& m, const char* tag, int pos1, int pos2,
                      int neg) {
  m.add_constraint({{{pos1, 1.0}, {pos2, 1.0}, {neg, -1.0}},
                    ConstraintSense::LessEqual,
                    1.0,
                    tag});
}

// The three triangle rows of the triple i < j < l, pairs A=(i,j),
// B=(j,l), C=(i,l): first row positive on A,B; second on A,C; third on
// B,C. The caller passes the variable on each pair and per-row tags.
void add_triangle_rows(IlpModel& m, const char* tag_ab, const char* tag_ac,
                       const char* tag_bc, int a, int b, int c) {
  add_triangle_row(m, tag_ab, a, b, c);
  add_triangle_row(m, tag_ac, a, c, b);
  add_triangle_row(m, tag_bc, b, c, a);
}

void check_graph_fits(const IlpModel& m, const WeightedGraph& g) {
  if (m.n() != g.node_count())
    throw std::invalid_argument("model built for n=" + std::to_string(m.n()) +
                                ", graph has n=" +
                                std::to_string(g.node_count()));
}

}  // namespace

IlpModel build_complete_clique_model(const WeightedGraph& g) {
  const int n = g.node_count();
  const long pair_count = static_cast<long>(n) * (n - 1) / 2;
  if (g.edge_count() != pair_count)
    throw std::invalid_argument(
        "complete-graph model needs all " + std::to_string(pair_count) +
        " pairs present, graph has " + std::to_string(g.edge_count()));
  IlpModel m(n, 1, ModelFamily::F1c);
  for (const auto& e : g.edges()) {
    const int id = m.add_pair_variable(VarKind::EdgeX, e.first, e.second);
    m.add_objective_term(id, e.weight);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int l = j + 1; l <= n; ++l)
        add_triangle_rows(m, "(1)", "(2)", "(3)", m.pair_variable(i, j),
                          m.pair_variable(j, l), m.pair_variable(i, l));
  return m;
}

IlpModel build_sparse_clique_model(const WeightedGraph& g) {
  const int n = g.node_count();
  IlpModel m(n, 1, ModelFamily::F1s);
  for (const auto& e : g.edges()) {
    const int id = m.add_pair_variable(VarKind::EdgeX, e.first, e.second);
    m.add_objective_term(id, e.weight);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int l = j + 1; l <= n; ++l) {
        const int a = m.pair_variable(i, j);
        const int b = m.pair_variable(j, l);
        const int c = m.pair_variable(i, l);
        const int absent = (a < 0) + (b < 0) + (c < 0);
        if (absent == 0) {
          add_triangle_rows(m, "(5)", "(6)", "(7)", a, b, c);
        } else if (absent == 1) {
          // Two edges through a shared node cannot both be selected when
          // the closing pair is not an edge. Terms follow pair order
          // (i,j), (i,l), (j,l).
          LinearConstraint row;
          row.sense = ConstraintSense::LessEqual;
          row.rhs = 1.0;
          row.tag = "(8)";
          for (int var : {a, c, b})
            if (var >= 0) row.terms.push_back({var, 1.0});
          m.add_constraint(std::move(row));
        }
        // Triples with fewer than two edges never close a triangle.
      }
  return m;
}

IlpModel build_kplex_model(const WeightedGraph& g, int k, bool reduce) {
  if (k < 2)
    throw std::invalid_argument("k-plex model needs k >= 2; use the clique "
                                "models for k = 1");
  const int n = g.node_count();
  IlpModel m(n, k, ModelFamily::Fks);
  for (const auto& e : g.edges()) {
    const int id = m.add_pair_variable(VarKind::EdgeX, e.first, e.second);
    m.add_objective_term(id, e.weight);
  }
  for (const auto& pair : g.complement_edges())
    m.add_pair_variable(VarKind::MissingV, pair.first, pair.second);
  const bool reducing = reduce && k == 2;
  m.reduced = reducing;

  const auto is_missing = [&](int i, int j) { return !g.adjacent(i, j); };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int l = j + 1; l <= n; ++l) {
        const int a = m.pair_variable(i, j);
        const int b = m.pair_variable(j, l);
        const int c = m.pair_variable(i, l);
        const bool ma = is_missing(i, j);
        const bool mb = is_missing(j, l);
        const bool mc = is_missing(i, l);
        if (reducing && ma && mb && mc) continue;
        // When k = 2 the degree cap already limits each node to one
        // selected complement pair, so a row whose two positive terms are
        // v variables sharing a node is implied.
        if (!(reducing && ma && mb)) add_triangle_row(m, "(10)", a, b, c);
        if (!(reducing && ma && mc)) add_triangle_row(m, "(11)", a, c, b);
        if (!(reducing && mb && mc)) add_triangle_row(m, "(12)", b, c, a);
      }

  for (int i = 1; i <= n; ++i) {
    LinearConstraint row;
    row.sense = ConstraintSense::LessEqual;
    row.rhs = k - 1;
    row.tag = "(13)";
    for (int j = 1; j <= n; ++j) {
      if (j == i || g.adjacent(i, j)) continue;
      row.terms.push_back({m.pair_variable(i, j), 1.0});
    }
    if (row.terms.empty())
      m.note_dropped_constraint();
    else
      m.add_constraint(std::move(row));
  }
  return m;
}

IlpModel add_capacity_bounds(const IlpModel& m, const WeightedGraph& g,
                             std::optional<double> lb,
                             std::optional<double> ub) {
  check_graph_fits(m, g);
  if (!lb && !ub) throw std::invalid_argument("no capacity bound given");
  if (lb && *lb < 0.0) throw std::invalid_argument("lb must be nonnegative");
  if (ub && *ub < 0.0) throw std::invalid_argument("ub must be nonnegative");
  if (lb && ub && *lb > *ub) throw std::invalid_argument("lb exceeds ub");
  if (lb && *lb > g.total_node_weight())
    throw std::invalid_argument(
        "lb exceeds the total node weight; no partition can satisfy it");
  if (m.lb || m.ub)
    throw std::invalid_argument("model already carries capacity bounds");

  IlpModel out = m;
  out.lb = lb;
  out.ub = ub;
  const bool pair_on_all = m.family() == ModelFamily::Fks ||
                           m.family() == ModelFamily::F1c;
  const auto selected_weight_terms = [&](int i) {
    std::vector<LinearTerm> terms;
    if (pair_on_all) {
      for (int j = 1; j <= g.node_count(); ++j)
        if (j != i) terms.push_back({out.pair_variable(i, j), g.node_weight(j)});
    } else {
      for (const auto& nb : g.neighbors(i))
        terms.push_back({out.pair_variable(i, nb.node), g.node_weight(nb.node)});
    }
    return terms;
  };
  const bool kplex = m.family() == ModelFamily::Fks;
  if (lb)
    for (int i = 1; i <= g.node_count(); ++i)
      out.add_constraint({selected_weight_terms(i),
                          ConstraintSense::GreaterEqual,
                          *lb - g.node_weight(i),
                          kplex ? "(18)" : "(16)"});
  if (ub)
    for (int i = 1; i <= g.node_count(); ++i)
      out.add_constraint({selected_weight_terms(i),
                          ConstraintSense::LessEqual,
                          *ub - g.node_weight(i),
                          kplex ? "(19)" : "(17)"});
  return out;
}

IlpModel add_component_limit(const IlpModel& m, const WeightedGraph& g, int P) {
  check_graph_fits(m, g);
  if (P < 1) throw std::invalid_argument("component limit must be >= 1");
  if (m.max_components)
    throw std::invalid_argument("model already carries a component limit");

  IlpModel out = m;
  out.max_components = P;
  const int n = g.node_count();
  for (int i = 1; i <= n; ++i)
    for (int p = 1; p <= P; ++p) out.add_node_component_variable(i, p);

  const bool kplex = m.family() == ModelFamily::Fks;
  const char* assign_tag = kplex ? "(23)" : "(20)";
  for (int i = 1; i <= n; ++i) {
    LinearConstraint row;
    row.sense = ConstraintSense::Equal;
    row.rhs = 1.0;
    row.tag = assign_tag;
    for (int p = 1; p <= P; ++p)
      row.terms.push_back({out.node_component_variable(i, p), 1.0});
    out.add_constraint(std::move(row));
  }

  const auto link_row = [&](int i, int j, int p, const char* tag) {
    out.add_constraint({{{out.node_component_variable(i, p), 1.0},
                         {out.node_component_variable(j, p), 1.0},
                         {out.pair_variable(i, j), -1.0}},
                        ConstraintSense::LessEqual,
                        1.0,
                        tag});
  };
  if (kplex) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int p = 1; p <= P; ++p) link_row(i, j, p, "(24)");
  } else {
    for (const auto& e : g.edges())
      for (int p = 1; p <= P; ++p) link_row(e.first, e.second, p, "(21)");
    for (const auto& pair : g.complement_edges())
      for (int p = 1; p <= P; ++p)
        out.add_constraint({{{out.node_component_variable(pair.first, p), 1.0},
                             {out.node_component_variable(pair.second, p), 1.0}},
                            ConstraintSense::LessEqual,
                            1.0,
                            "(22)"});
  }
  return out;
}

}  // namespace maxekpp
