#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace gkit {

enum class ArrowRole { Original, Starred, ZLoop };

const char* to_string(ArrowRole role);

struct Arrow {
  std::string name;
  int src = 0;
  int tgt = 0;
  int degree = 0;
  ArrowRole role = ArrowRole::Original;
  /// Index of the partner arrow a* (or of a, for a starred arrow); the arrow's
  /// own index when self-paired; -1 when unpaired.
  int partner = -1;

  bool is_loop() const { return src == tgt; }
};

/// Vertices and degree-labelled arrows in declaration order. Immutable once
/// built; share through QuiverPtr.
class GradedQuiver {
 public:
  GradedQuiver() = default;
  GradedQuiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
               std::optional<int> cy_dimension = std::nullopt);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int index) const { return arrows_.at(static_cast<std::size_t>(index)); }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  std::optional<int> cy_dimension() const { return cy_dimension_; }

  int vertex_index(const std::string& name) const;  // -1 if absent
  int arrow_index(const std::string& name) const;   // -1 if absent
  /// Throws Error(UnknownArrow).
  int require_arrow(const std::string& name) const;

  bool has_starred() const;
  bool has_z() const;
  bool is_self_paired(int index) const { return arrow(index).partner == index; }
  /// z-loop index at the vertex, or -1.
  int z_at(int vertex) const;
  /// Arrows that are not z-loops, in order (the generators of V_c).
  std::vector<int> non_z_arrows() const;
  /// Arrows with role Original, in order.
  std::vector<int> original_arrows() const;

  /// Name used for the idempotent at a vertex: "e" for one-vertex quivers.
  std::string idempotent_name(int vertex) const;

  bool operator==(const GradedQuiver& other) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::optional<int> cy_dimension_;
};

using QuiverPtr = std::shared_ptr<const GradedQuiver>;

QuiverPtr make_quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                      std::optional<int> cy_dimension = std::nullopt);

/// Adds a* for every arrow of a plain quiver; odd loops of degree (2-d)/2
/// are self-paired instead. Starred arrows are named by suffixing "'".
QuiverPtr build_double_quiver(const GradedQuiver& q, int d);

/// Adds one loop of degree 1-d at every vertex ("z" for a single vertex,
/// "z_<vertex>" otherwise).
QuiverPtr extend_with_z(const GradedQuiver& qt, int d);

nlohmann::json quiver_to_json(const GradedQuiver& q);
QuiverPtr quiver_from_json(const nlohmann::json& j);

}  // namespace gkit
