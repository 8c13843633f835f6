#include "moufang/json_io.hpp"

#include <fstream>

#include "moufang/errors.hpp"

namespace moufang {

json loop_to_json(const LoopTable& L) {
  const int n = L.order();
  json table = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int j = 0; j < n; ++j) {
      row.push_back(L.at(i, j));
    }
    table.push_back(std::move(row));
  }
  return json{{"name", L.name()}, {"order", n}, {"table", std::move(table)}};
}

LoopTable loop_from_json(const json& j) {
  if (!j.is_object() || !j.contains("table") || !j["table"].is_array()) {
    throw InputError("loop file must be an object with a \"table\" array");
  }
  std::vector<std::vector<int>> rows;
  for (const json& row : j["table"]) {
    if (!row.is_array()) {
      throw InputError("table rows must be arrays");
    }
    std::vector<int> r;
    for (const json& cell : row) {
      if (!cell.is_number_integer()) {
        throw InputError("table entries must be integers");
      }
      r.push_back(cell.get<int>());
    }
    rows.push_back(std::move(r));
  }
  if (j.contains("order") &&
      (!j["order"].is_number_integer() ||
       j["order"].get<long long>() != static_cast<long long>(rows.size()))) {
    throw InputError("declared order does not match the table");
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) {
      throw InputError("name must be a string");
    }
    name = j["name"].get<std::string>();
  }
  return LoopTable(std::move(rows), std::move(name));
}

LoopTable loop_from_file_unchecked(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot read " + path);
  }
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
  return loop_from_json(j);
}

json verification_to_json(const VerificationReport& r) {
  json out{{"latin_square", r.latin_square},
           {"identity_ok", r.identity_ok},
           {"commutative", r.commutative},
           {"moufang", r.moufang},
           {"all_ok", r.all_ok()},
           {"first_failure", nullptr}};
  if (r.first_failure) {
    out["first_failure"] = *r.first_failure;
  }
  return out;
}

json witness_to_json(const AssociatorWitness& w) {
  json out{{"identity", w.identity},
           {"tuple", w.tuple},
           {"lhs", w.lhs},
           {"rhs", w.rhs}};
  if (w.exponents) {
    out["exponents"] = *w.exponents;
  }
  return out;
}

json scan_result_to_json(const IdentityScanResult& r) {
  json witnesses = json::array();
  for (const AssociatorWitness& w : r.witnesses) {
    witnesses.push_back(witness_to_json(w));
  }
  json coverage = json::array();
  for (const ScanCoverage& c : r.coverage) {
    coverage.push_back(json{{"identity", c.identity},
                            {"checked", c.checked},
                            {"total", c.total},
                            {"failures", c.failures},
                            {"exhaustive", c.exhaustive}});
  }
  return json{{"passed", r.passed()},
              {"witnesses", std::move(witnesses)},
              {"coverage", std::move(coverage)}};
}

json mask_to_json(const SubloopMask& m) {
  return json(m.indices());
}

json coset_partition_to_json(const CosetPartition& p) {
  json out{{"subloop", mask_to_json(p.subloop)},
           {"is_partition", p.is_partition},
           {"coset_count", p.coset_count},
           {"representatives", p.representative_of},
           {"failure", nullptr}};
  if (p.failure) {
    out["failure"] = *p.failure;
  }
  return out;
}

json quotient_to_json(const QuotientResult& q) {
  return json{{"loop", loop_to_json(q.table)}, {"projection", q.projection}};
}

json series_to_json(const SeriesReport& r) {
  json chain = json::array();
  json sizes = json::array();
  for (const SubloopMask& m : r.chain) {
    chain.push_back(mask_to_json(m));
    sizes.push_back(m.count());
  }
  json out{{"kind", to_string(r.kind)},
           {"chain", std::move(chain)},
           {"sizes", std::move(sizes)},
           {"class", nullptr}};
  if (r.class_value) {
    out["class"] = *r.class_value;
  } else {
    out["note"] = "does_not_terminate_at_identity";
  }
  return out;
}

json predicate_to_json(const ClassPredicateResult& r) {
  json out{{"status", to_string(r.status)},
           {"note", r.note},
           {"checked", r.checked},
           {"total", r.total},
           {"exhaustive", r.exhaustive},
           {"witness", nullptr}};
  if (r.witness) {
    json w{{"elements", r.witness->elements},
           {"detail", r.witness->detail},
           {"subloop", nullptr}};
    if (r.witness->subloop) {
      w["subloop"] = mask_to_json(*r.witness->subloop);
    }
    out["witness"] = std::move(w);
  }
  return out;
}

json lemma16_witness_to_json(const Lemma16Witness& w) {
  json out{{"a", w.a},
           {"b", w.b},
           {"coset_equal", w.coset_equal},
           {"mapping_equal", w.mapping_equal},
           {"pair", nullptr}};
  if (w.pair) {
    out["pair"] = *w.pair;
  }
  return out;
}

namespace {

json bounded_verdict_to_json(const BoundedVerdict& v) {
  json out{{"available", v.available}, {"reason", v.reason}, {"holds", nullptr}};
  if (v.available) {
    out["holds"] = v.holds;
  }
  return out;
}

}  // namespace

json classification_to_json(const ClassificationReport& r) {
  json cor_2_7 = bounded_verdict_to_json(r.cor_2_7);
  cor_2_7["class"] = r.cor_2_7_class;
  return json{{"min_condition", r.min_condition},
              {"infinite", r.infinite},
              {"prop_2_17", bounded_verdict_to_json(r.prop_2_17)},
              {"cor_2_7", std::move(cor_2_7)},
              {"cor_2_11_steady",
               json{{"holds", r.cor_2_11_steady.holds},
                    {"reason", r.cor_2_11_steady.reason}}},
              {"classes",
               json{{"nilpotency", r.nilpotency_class_value},
                    {"solvability", r.solvability_class_value}}}};
}

json command_outcome(const std::string& command, const std::string& status,
                     json payload) {
  return json{{"command", command},
              {"status", status},
              {"payload", std::move(payload)}};
}

}  // namespace moufang
