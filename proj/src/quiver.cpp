#include "gkit/quiver.hpp"

#include <set>

#include "gkit/error.hpp"

namespace gkit {

const char* to_string(ArrowRole role) {
  switch (role) {
    case ArrowRole::Original: return "original";
    case ArrowRole::Starred: return "starred";
    case ArrowRole::ZLoop: return "zloop";
  }
  return "original";
}

namespace {

ArrowRole role_from_string(const std::string& s) {
  if (s == "original") return ArrowRole::Original;
  if (s == "starred") return ArrowRole::Starred;
  if (s == "zloop") return ArrowRole::ZLoop;
  throw Error(ErrorKind::InvalidQuiver, "unknown arrow role '" + s + "'");
}

}  // namespace

GradedQuiver::GradedQuiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                           std::optional<int> cy_dimension)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), cy_dimension_(cy_dimension) {
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw Error(ErrorKind::InvalidQuiver, "duplicate vertex '" + v + "'");
  }
  std::set<std::string> names;
  const int nv = num_vertices();
  const int na = num_arrows();
  std::vector<int> z_count(static_cast<std::size_t>(nv), 0);
  for (int i = 0; i < na; ++i) {
    const Arrow& a = arrows_[static_cast<std::size_t>(i)];
    if (a.name.empty()) throw Error(ErrorKind::InvalidQuiver, "empty arrow name");
    if (!names.insert(a.name).second) throw Error(ErrorKind::InvalidQuiver, "duplicate arrow '" + a.name + "'");
    if (a.src < 0 || a.src >= nv || a.tgt < 0 || a.tgt >= nv)
      throw Error(ErrorKind::InvalidQuiver, "arrow '" + a.name + "' has an undeclared endpoint");
    if (a.role == ArrowRole::ZLoop) {
      if (!a.is_loop()) throw Error(ErrorKind::InvalidQuiver, "z-arrow '" + a.name + "' is not a loop");
      if (++z_count[static_cast<std::size_t>(a.src)] > 1)
        throw Error(ErrorKind::InvalidQuiver, "two z-loops at vertex '" + vertices_[static_cast<std::size_t>(a.src)] + "'");
    }
    if (a.partner >= na) throw Error(ErrorKind::InvalidQuiver, "arrow '" + a.name + "' has a bad partner");
  }
  // pairing invariants
  for (int i = 0; i < na; ++i) {
    const Arrow& a = arrows_[static_cast<std::size_t>(i)];
    if (a.role == ArrowRole::Starred && a.partner < 0)
      throw Error(ErrorKind::InvalidQuiver, "starred arrow '" + a.name + "' has no partner");
    if (a.partner < 0) continue;
    const Arrow& b = arrows_[static_cast<std::size_t>(a.partner)];
    if (b.partner != i) throw Error(ErrorKind::InvalidQuiver, "pairing of '" + a.name + "' is not symmetric");
    if (b.src != a.tgt || b.tgt != a.src)
      throw Error(ErrorKind::InvalidQuiver, "partner of '" + a.name + "' does not reverse its endpoints");
    if (cy_dimension_ && a.degree + b.degree != 2 - *cy_dimension_)
      throw Error(ErrorKind::InvalidQuiver, "degrees of '" + a.name + "' and its partner do not sum to 2-d");
    if (a.partner == i && (!a.is_loop() || a.degree % 2 == 0))
      throw Error(ErrorKind::EvenSelfPair, "self-paired arrow '" + a.name + "' must be an odd loop");
  }
  if (cy_dimension_) {
    for (int i = 0; i < na; ++i) {
      const Arrow& a = arrows_[static_cast<std::size_t>(i)];
      if (a.role == ArrowRole::ZLoop && a.degree != 1 - *cy_dimension_)
        throw Error(ErrorKind::InvalidQuiver, "z-loop '" + a.name + "' must have degree 1-d");
    }
  }
}

int GradedQuiver::vertex_index(const std::string& name) const {
  for (int i = 0; i < num_vertices(); ++i)
    if (vertices_[static_cast<std::size_t>(i)] == name) return i;
  return -1;
}

int GradedQuiver::arrow_index(const std::string& name) const {
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[static_cast<std::size_t>(i)].name == name) return i;
  return -1;
}

int GradedQuiver::require_arrow(const std::string& name) const {
  int i = arrow_index(name);
  if (i < 0) throw Error(ErrorKind::UnknownArrow, "no arrow named '" + name + "'");
  return i;
}

bool GradedQuiver::has_starred() const {
  for (const auto& a : arrows_)
    if (a.role == ArrowRole::Starred || (a.role == ArrowRole::Original && a.partner >= 0)) return true;
  return false;
}

bool GradedQuiver::has_z() const {
  for (const auto& a : arrows_)
    if (a.role == ArrowRole::ZLoop) return true;
  return false;
}

int GradedQuiver::z_at(int vertex) const {
  for (int i = 0; i < num_arrows(); ++i) {
    const Arrow& a = arrows_[static_cast<std::size_t>(i)];
    if (a.role == ArrowRole::ZLoop && a.src == vertex) return i;
  }
  return -1;
}

std::vector<int> GradedQuiver::non_z_arrows() const {
  std::vector<int> out;
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[static_cast<std::size_t>(i)].role != ArrowRole::ZLoop) out.push_back(i);
  return out;
}

std::vector<int> GradedQuiver::original_arrows() const {
  std::vector<int> out;
  for (int i = 0; i < num_arrows(); ++i)
    if (arrows_[static_cast<std::size_t>(i)].role == ArrowRole::Original) out.push_back(i);
  return out;
}

std::string GradedQuiver::idempotent_name(int vertex) const {
  if (num_vertices() == 1) return "e";
  return "e_" + vertices_.at(static_cast<std::size_t>(vertex));
}

bool GradedQuiver::operator==(const GradedQuiver& other) const {
  if (vertices_ != other.vertices_ || cy_dimension_ != other.cy_dimension_) return false;
  if (arrows_.size() != other.arrows_.size()) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    const Arrow& b = other.arrows_[i];
    if (a.name != b.name || a.src != b.src || a.tgt != b.tgt || a.degree != b.degree || a.role != b.role ||
        a.partner != b.partner)
      return false;
  }
  return true;
}

QuiverPtr make_quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                      std::optional<int> cy_dimension) {
  return std::make_shared<const GradedQuiver>(std::move(vertices), std::move(arrows), cy_dimension);
}

QuiverPtr build_double_quiver(const GradedQuiver& q, int d) {
  if (q.has_starred()) throw Error(ErrorKind::AlreadyDoubled, "quiver already carries starred arrows");
  if (q.has_z()) throw Error(ErrorKind::AlreadyExtended, "quiver already carries z-loops");
  std::vector<Arrow> arrows = q.arrows();
  const int n = q.num_arrows();
  for (int i = 0; i < n; ++i) {
    Arrow& a = arrows[static_cast<std::size_t>(i)];
    // (2-d)/2 <= |a| <= 0
    if (a.degree > 0 || 2 * a.degree < 2 - d)
      throw Error(ErrorKind::DegreeOutOfRange,
                  "arrow '" + a.name + "' has degree " + std::to_string(a.degree) + " outside [(2-d)/2, 0] for d=" +
                      std::to_string(d));
  }
  for (int i = 0; i < n; ++i) {
    Arrow& a = arrows[static_cast<std::size_t>(i)];
    const bool self_pair = a.is_loop() && 2 * a.degree == 2 - d;
    if (self_pair && a.degree % 2 != 0) {
      a.partner = i;
      continue;
    }
    // Loops of even degree (2-d)/2 always receive a distinct partner, so the
    // EvenSelfPair guard in the constructor cannot fire from here.
    Arrow star;
    star.name = a.name + "'";
    star.src = a.tgt;
    star.tgt = a.src;
    star.degree = 2 - d - a.degree;
    star.role = ArrowRole::Starred;
    star.partner = i;
    a.partner = static_cast<int>(arrows.size());
    arrows.push_back(star);
  }
  return make_quiver(q.vertices(), std::move(arrows), d);
}

QuiverPtr extend_with_z(const GradedQuiver& qt, int d) {
  if (qt.has_z()) throw Error(ErrorKind::AlreadyExtended, "quiver already carries z-loops");
  std::vector<Arrow> arrows = qt.arrows();
  for (int v = 0; v < qt.num_vertices(); ++v) {
    Arrow z;
    z.name = qt.num_vertices() == 1 ? "z" : "z_" + qt.vertices()[static_cast<std::size_t>(v)];
    z.src = v;
    z.tgt = v;
    z.degree = 1 - d;
    z.role = ArrowRole::ZLoop;
    arrows.push_back(z);
  }
  return make_quiver(qt.vertices(), std::move(arrows), d);
}

nlohmann::json quiver_to_json(const GradedQuiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (int i = 0; i < q.num_arrows(); ++i) {
    const Arrow& a = q.arrow(i);
    nlohmann::json ja = {{"name", a.name},
                         {"src", q.vertices()[static_cast<std::size_t>(a.src)]},
                         {"tgt", q.vertices()[static_cast<std::size_t>(a.tgt)]},
                         {"deg", a.degree},
                         {"role", to_string(a.role)}};
    if (a.partner == i) ja["self_paired"] = true;
    else if (a.role == ArrowRole::Starred) ja["partner"] = q.arrow(a.partner).name;
    arrows.push_back(ja);
  }
  nlohmann::json j = {{"vertices", q.vertices()}, {"arrows", arrows}};
  j["d"] = q.cy_dimension() ? nlohmann::json(*q.cy_dimension()) : nlohmann::json(nullptr);
  return j;
}

QuiverPtr quiver_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    auto vindex = [&](const std::string& v) {
      for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v) return static_cast<int>(i);
      throw Error(ErrorKind::InvalidQuiver, "undeclared vertex '" + v + "'");
    };
    std::vector<Arrow> arrows;
    std::vector<std::string> partner_names;
    for (const auto& ja : j.at("arrows")) {
      Arrow a;
      a.name = ja.at("name").get<std::string>();
      a.src = vindex(ja.at("src").get<std::string>());
      a.tgt = vindex(ja.at("tgt").get<std::string>());
      a.degree = ja.at("deg").get<int>();
      a.role = role_from_string(ja.value("role", std::string("original")));
      partner_names.push_back(ja.value("self_paired", false) ? a.name : ja.value("partner", std::string()));
      arrows.push_back(a);
    }
    for (std::size_t i = 0; i < arrows.size(); ++i) {
      if (partner_names[i].empty()) continue;
      for (std::size_t k = 0; k < arrows.size(); ++k) {
        if (arrows[k].name == partner_names[i]) {
          arrows[i].partner = static_cast<int>(k);
          arrows[k].partner = static_cast<int>(i);
        }
      }
    }
    std::optional<int> d;
    if (j.contains("d") && !j["d"].is_null()) d = j["d"].get<int>();
    return make_quiver(std::move(vertices), std::move(arrows), d);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidQuiver, std::string("bad quiver JSON: ") + e.what());
  }
}

}  // namespace gkit
