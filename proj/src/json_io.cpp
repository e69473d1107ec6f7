#include "paraflow/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

namespace paraflow {

namespace {

Rational rational_field(const nlohmann::json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return Rational(value.get<long long>());
  }
  if (value.is_string()) {
    const auto parsed = parse_rational(value.get<std::string>());
    if (parsed) {
      return *parsed;
    }
  }
  throw ParseError(where + ": expected an integer or a \"p/q\" string");
}

int integer_field(const nlohmann::json& value, const std::string& where) {
  if (!value.is_number_integer()) {
    throw ParseError(where + ": expected an integer");
  }
  return value.get<int>();
}

const nlohmann::json& require(const nlohmann::json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

nlohmann::json rational_to_json(const Rational& value) {
  return to_string(value);
}

std::string decimal(const Rational& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", to_double(value));
  return buffer;
}

}  // namespace

DynamicNetwork network_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) {
    throw ParseError("network document must be an object");
  }
  DynamicNetwork net;
  net.node_count = integer_field(require(doc, "n"), "n");
  net.source = integer_field(require(doc, "source"), "source");
  net.sink = integer_field(require(doc, "sink"), "sink");
  net.horizon = integer_field(require(doc, "T"), "T");
  net.lambda_max = rational_field(require(doc, "lambda_max"), "lambda_max");
  const nlohmann::json& arcs = require(doc, "arcs");
  if (!arcs.is_array()) {
    throw ParseError("arcs: expected an array");
  }
  const std::size_t periods = static_cast<std::size_t>(net.horizon) + 1;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const std::string where = "arcs[" + std::to_string(i) + "]";
    const nlohmann::json& entry = arcs[i];
    if (!entry.is_object()) {
      throw ParseError(where + ": expected an object");
    }
    ArcSpec arc;
    arc.from = integer_field(require(entry, "from"), where + ".from");
    arc.to = integer_field(require(entry, "to"), where + ".to");
    const std::pair<const char*, int> tables[] = {
        {"h", 0}, {"u", 1}, {"l0", 2}, {"L", 3}};
    for (const auto& [key, kind] : tables) {
      const nlohmann::json& table = require(entry, key);
      if (!table.is_array() || table.size() != periods) {
        throw ParseError(where + "." + key + ": expected an array of length " +
                         std::to_string(periods));
      }
      for (std::size_t t = 0; t < table.size(); ++t) {
        const std::string cell =
            where + "." + key + "[" + std::to_string(t) + "]";
        switch (kind) {
          case 0:
            arc.transit.push_back(integer_field(table[t], cell));
            break;
          case 1:
            arc.capacity.push_back(rational_field(table[t], cell));
            break;
          case 2:
            arc.lower0.push_back(rational_field(table[t], cell));
            break;
          default:
            arc.lower_slope.push_back(rational_field(table[t], cell));
        }
      }
    }
    net.arcs.push_back(std::move(arc));
  }
  return net;
}

nlohmann::json network_to_json(const DynamicNetwork& net) {
  nlohmann::json doc;
  doc["n"] = net.node_count;
  doc["source"] = net.source;
  doc["sink"] = net.sink;
  doc["T"] = net.horizon;
  doc["lambda_max"] = rational_to_json(net.lambda_max);
  doc["arcs"] = nlohmann::json::array();
  for (const ArcSpec& arc : net.arcs) {
    nlohmann::json entry;
    entry["from"] = arc.from;
    entry["to"] = arc.to;
    entry["h"] = arc.transit;
    const std::pair<const char*, const std::vector<Rational>*> tables[] = {
        {"u", &arc.capacity}, {"l0", &arc.lower0}, {"L", &arc.lower_slope}};
    for (const auto& [key, table] : tables) {
      nlohmann::json list = nlohmann::json::array();
      for (const Rational& value : *table) {
        list.push_back(rational_to_json(value));
      }
      entry[key] = std::move(list);
    }
    doc["arcs"].push_back(std::move(entry));
  }
  return doc;
}

ArcTimeTable<Rational> flow_from_json(const nlohmann::json& doc,
                                      const DynamicNetwork& net) {
  if (!doc.is_object()) {
    throw ParseError("flow document must be an object");
  }
  const nlohmann::json& flows = require(doc, "flows");
  if (!flows.is_array()) {
    throw ParseError("flows: expected an array");
  }
  std::map<std::pair<NodeId, NodeId>, std::size_t> arc_by_ends;
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    arc_by_ends[{net.arcs[a].from, net.arcs[a].to}] = a;
  }
  ArcTimeTable<Rational> flow(net.arcs.size(), net.horizon);
  std::set<std::pair<std::size_t, TimeStep>> seen;
  for (std::size_t i = 0; i < flows.size(); ++i) {
    const std::string where = "flows[" + std::to_string(i) + "]";
    const nlohmann::json& entry = flows[i];
    const NodeId from = integer_field(require(entry, "from"), where + ".from");
    const NodeId to = integer_field(require(entry, "to"), where + ".to");
    const TimeStep theta =
        integer_field(require(entry, "theta"), where + ".theta");
    const auto arc = arc_by_ends.find({from, to});
    if (arc == arc_by_ends.end()) {
      throw ParseError(where + ": no such arc in the network");
    }
    if (theta < 0 || theta > net.horizon) {
      throw ParseError(where + ".theta: outside 0..T");
    }
    if (!seen.insert({arc->second, theta}).second) {
      throw ParseError(where + ": duplicate (arc, theta) entry");
    }
    flow.at(arc->second, theta) =
        rational_field(require(entry, "value"), where + ".value");
  }
  return flow;
}

nlohmann::json flow_to_json(const DynamicNetwork& net,
                            const ArcTimeTable<Rational>& flow) {
  nlohmann::json doc;
  doc["flows"] = nlohmann::json::array();
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
      if (flow.at(a, theta) == 0) {
        continue;
      }
      doc["flows"].push_back({{"from", net.arcs[a].from},
                              {"to", net.arcs[a].to},
                              {"theta", theta},
                              {"value", rational_to_json(flow.at(a, theta))}});
    }
  }
  return doc;
}

nlohmann::json solution_to_json(const ParametricSolution& sol,
                                const DynamicNetwork& net, bool trace) {
  nlohmann::json doc;
  doc["K"] = sol.interval_count();
  doc["breakpoints"] = nlohmann::json::array();
  for (const Rational& bp : sol.breakpoints) {
    doc["breakpoints"].push_back(rational_to_json(bp));
  }
  doc["value_function"] = nlohmann::json::array();
  for (const ValuePiece& piece : sol.value_function) {
    doc["value_function"].push_back(
        {{"lambda_lo", rational_to_json(piece.lambda_lo)},
         {"lambda_hi", rational_to_json(piece.lambda_hi)},
         {"v", rational_to_json(piece.value)},
         {"V", rational_to_json(piece.slope)}});
  }
  doc["intervals"] = nlohmann::json::array();
  for (const IntervalResult& interval : sol.intervals) {
    nlohmann::json entry;
    entry["lambda_lo"] = rational_to_json(interval.lambda_lo);
    entry["lambda_hi"] = rational_to_json(interval.lambda_hi);
    entry["flows"] = nlohmann::json::array();
    for (std::size_t a = 0; a < net.arcs.size(); ++a) {
      for (TimeStep theta = 0; theta <= net.horizon; ++theta) {
        if (!net.arc_active(a, theta)) {
          continue;
        }
        const LinearFlow& lf = interval.flow.at(a, theta);
        entry["flows"].push_back({{"from", net.arcs[a].from},
                                  {"to", net.arcs[a].to},
                                  {"theta", theta},
                                  {"f", rational_to_json(lf.base)},
                                  {"F", rational_to_json(lf.slope)}});
      }
    }
    if (trace) {
      entry["augmentations"] = nlohmann::json::array();
      for (const Augmentation& aug : interval.augmentations) {
        nlohmann::json record;
        record["path"] = nlohmann::json::array();
        record["path"].push_back(
            {aug.path.front().from.node, aug.path.front().from.theta});
        for (const Hop& hop : aug.path) {
          record["path"].push_back({hop.to.node, hop.to.theta});
        }
        record["alpha"] = rational_to_json(aug.alpha);
        record["beta"] = rational_to_json(aug.beta);
        // Capacity function rebased to absolute lambda: c0 + c1 * lambda.
        record["capacity_c0"] =
            rational_to_json(aug.alpha - aug.beta * interval.lambda_lo);
        record["capacity_c1"] = rational_to_json(aug.beta);
        record["lambda_limit"] = rational_to_json(aug.lambda_limit);
        entry["augmentations"].push_back(std::move(record));
      }
    }
    doc["intervals"].push_back(std::move(entry));
  }
  return doc;
}

nlohmann::json report_to_json(const VerificationReport& report) {
  nlohmann::json doc;
  doc["all_match"] = report.all_match;
  doc["samples"] = nlohmann::json::array();
  for (const VerificationSample& sample : report.samples) {
    doc["samples"].push_back(
        {{"lambda", rational_to_json(sample.lambda)},
         {"parametric", rational_to_json(sample.parametric)},
         {"oracle", sample.oracle_ok ? rational_to_json(sample.oracle)
                                     : nlohmann::json()},
         {"match", sample.match}});
  }
  return doc;
}

std::string value_function_csv(const ParametricSolution& sol,
                               int grid_points) {
  std::vector<Rational> points(sol.breakpoints);
  const Rational lambda_max = sol.breakpoints.back();
  const int cells = std::max(grid_points, 2) - 1;
  for (int i = 0; i <= cells; ++i) {
    points.push_back(lambda_max * Rational(i, cells));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::string csv = "lambda,value\n";
  for (const Rational& lambda : points) {
    csv += decimal(lambda);
    csv += ',';
    csv += decimal(evaluate_value(sol, lambda));
    csv += '\n';
  }
  return csv;
}

}  // namespace paraflow
