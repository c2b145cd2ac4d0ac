/*
 * Copyright 2026 The BTL Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "btl/trace.hpp"

#include <deque>
#include <map>
#include <sstream>

#include <json.hpp>

#include "btl/printer.hpp"

namespace btl {

std::string compact(const Atom& a) {
  if (a.args.empty()) return a.predicate;
  std::string s = a.predicate + "(";
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) s += ",";
    s += a.args[i].name;
  }
  return s + ")";
}

namespace {

nlohmann::json atoms_json(const WorldState& d) {
  auto out = nlohmann::json::array();
  for (const auto& a : d.atoms()) out.push_back(compact(a));
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string firing_label(const TraceEvent& e) {
  std::string s = *e.op + "(";
  for (std::size_t i = 0; i < e.args.size(); ++i) {
    if (i) s += ",";
    s += e.args[i].name;
  }
  return s + ")";
}

}  // namespace

std::string trace_to_json(const EvalOutcome& outcome) {
  nlohmann::ordered_json j;
  j["initial"] = atoms_json(outcome.trace.initial);
  auto events = nlohmann::ordered_json::array();
  for (const auto& e : outcome.trace.events) {
    nlohmann::ordered_json ev;
    ev["path"] = e.path;
    ev["kind"] = e.kind;
    if (e.op) {
      ev["op"] = *e.op;
      auto args = nlohmann::json::array();
      for (const auto& t : e.args) args.push_back(t.name);
      ev["args"] = args;
    }
    ev["consumed"] = atoms_json(e.consumed);
    ev["produced"] = atoms_json(e.produced);
    ev["status"] = e.ok ? "ok" : "fail";
    events.push_back(std::move(ev));
  }
  j["events"] = std::move(events);
  j["outcome"] = to_string(outcome.status);
  if (outcome.final) j["final"] = atoms_json(*outcome.final);
  return j.dump(2);
}

std::string trace_to_dot(const Trace& trace) {
  std::ostringstream out;
  out << "digraph trace {\n  rankdir=LR;\n";
  out << "  n0 [shape=box, label=\"initial\\n" << escape(to_string(trace.initial)) << "\"];\n";

  // Producers of each live atom copy, oldest first.
  using Pool = std::map<Atom, std::deque<int>>;
  Pool pool;
  for (const auto& [a, n] : trace.initial.entries())
    for (std::size_t i = 0; i < n; ++i) pool[a].push_back(0);
  std::map<std::vector<std::size_t>, Pool> saved;
  std::vector<std::string> edges;

  int next = 1;
  for (const auto& e : trace.events) {
    if (e.kind == "sel-enter" || e.kind == "rep-iter") {
      saved[e.path] = pool;
    } else if (e.kind == "rollback") {
      auto it = saved.find(e.path);
      if (it != saved.end()) pool = it->second;
    } else if (e.kind == "op" && e.ok) {
      int id = next++;
      out << "  n" << id << " [label=\"" << escape(firing_label(e)) << "\"];\n";
      for (const auto& [a, n] : e.consumed.entries()) {
        for (std::size_t i = 0; i < n; ++i) {
          auto& q = pool[a];
          int from = 0;
          if (!q.empty()) {
            from = q.front();
            q.pop_front();
          }
          edges.push_back("  n" + std::to_string(from) + " -> n" + std::to_string(id) +
                          " [label=\"" + escape(compact(a)) + "\"];\n");
        }
      }
      for (const auto& [a, n] : e.produced.entries())
        for (std::size_t i = 0; i < n; ++i) pool[a].push_back(id);
    }
  }
  for (const auto& s : edges) out << s;
  out << "}\n";
  return out.str();
}

}  // namespace btl
