#include "text.hpp"

#include <sstream>

namespace trigrid::api {

namespace {

std::string str(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::string surface_line(const Json& s) {
  std::ostringstream out;
  out << s["normal_form"].get<std::string>() << " (" << (s["orientable"].get<bool>() ? "orientable" : "nonorientable")
      << ", chi = " << s["euler_characteristic"].get<int>() << ")";
  return out.str();
}

std::string moduli_text(const Json& d) {
  std::ostringstream out;
  out << "graph: " << d["graph"]["vertex_count"].get<std::size_t>() << " vertices, b = "
      << d["graph"]["bridge_number"].get<std::size_t>() << "\n";
  out << "slopes: " << d["slopes"]["label"].get<std::string>() << "\n";
  const auto& wc = d["winding_classes"];
  out << "winding classes: " << wc["found"].get<std::size_t>() << " of " << str(wc["total"])
      << (wc["complete"].get<bool>() ? "" : " (incomplete)") << "\n";
  out << "based dimension: " << d["based_dimension"].get<std::size_t>() << "\n";
  if (d["note"] == "empty") {
    out << "moduli: empty\n";
  } else {
    out << "dimension: " << d["dimension"].get<std::size_t>() << "\n";
  }
  for (const auto& c : d["components"]) {
    out << "component " << c["index"].get<std::size_t>() << ": dim " << c["dim"].get<std::size_t>() << ", "
        << c["families"].size() << " wall families, " << c["walls"].size() << " walls";
    if (c.contains("chambers")) out << ", " << c["chambers"]["count"].get<std::size_t>() << " chambers";
    out << "\n";
  }
  for (const auto& c : d["dropped"])
    out << "class " << c["index"].get<std::size_t>() << ": fully degenerate (" << c["certificates"].size()
        << " certificates)\n";
  return out.str();
}

std::string obstruct_text(const Json& d) {
  std::ostringstream out;
  out << "surface: " << surface_line(d["surface"]) << "\n";
  out << "exact Lagrangian embedding into C^2: " << (d["embeddable"].get<bool>() ? "yes" : "no") << "\n";
  out << "link components:";
  for (const auto& [pair, n] : d["link_components"].items()) out << " " << pair << "=" << n.get<std::size_t>();
  out << "\n";
  for (const auto& c : d["conditionals"]) out << "- " << c["statement"].get<std::string>() << "\n";
  out << d["summary"].get<std::string>() << "\n";
  return out.str();
}

std::string chambers_text(const Json& d) {
  std::ostringstream out;
  const auto& set = d["chambers"];
  out << set["count"].get<std::size_t>() << " chambers, " << d["families"].size() << " wall families\n";
  for (const auto& ch : set["chambers"]) {
    out << "chamber " << ch["id"].get<std::size_t>() << ": witness (";
    bool first = true;
    for (const auto& q : ch["witness"]) {
      out << (first ? "" : ", ") << str(q);
      first = false;
    }
    out << ")\n";
  }
  return out.str();
}

std::string moves_text(const Json& d) {
  std::ostringstream out;
  out << d["chamber_count"].get<std::size_t>() << " chambers, " << d["moves"].size() << " moves\n";
  for (const auto& m : d["moves"])
    out << m["from"].get<std::size_t>() << " -> " << m["to"].get<std::size_t>() << " across family "
        << m["family"].get<std::size_t>() << " at level " << str(m["level"]) << "\n";
  if (!d["common_locus"].is_null())
    out << "common codimension-2 locus touches " << d["common_locus"]["touched"].size() << " chambers\n";
  return out.str();
}

}  // namespace

std::optional<std::string> text_view(const std::string& command, const Json& doc) {
  if (doc["kind"] == "error") {
    const auto& e = doc["error"];
    return "error (" + e["code"].get<std::string>() + "): " + e["message"].get<std::string>() + "\n";
  }
  if (command == "moduli") return moduli_text(doc);
  if (command == "obstruct") return obstruct_text(doc);
  if (command == "chambers") return chambers_text(doc);
  if (command == "moves") return moves_text(doc);
  if (command == "surface") return "surface: " + surface_line(doc["surface"]) + "\n";
  if (command == "validate") {
    return std::string("valid: b = ") + std::to_string(doc["graph"]["bridge_number"].get<std::size_t>()) +
           (doc["bipartition"]["bipartite"].get<bool>() ? ", bipartite\n" : ", not bipartite\n");
  }
  if (command == "markov") {
    std::ostringstream out;
    for (const auto& t : doc["triples"]) out << t[0] << " " << t[1] << " " << t[2] << "\n";
    return out.str();
  }
  if (command == "crosscheck") {
    std::ostringstream out;
    out << "n = " << doc["n"] << ": " << doc["diagrams"] << " diagrams, " << doc["graphs"] << " graphs\n";
    for (const auto& [v, n] : doc["verdicts"].items()) out << "  " << v << ": " << n << "\n";
    return out.str();
  }
  return std::nullopt;
}

}  // namespace trigrid::api
