#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "steiner/embedded_tree.hpp"

namespace steiner {

// Versioned JSON interchange format for embedded trees.  Numbers are written
// as shortest round-trip decimals, so parse(serialize(t)) == t bit-exactly
// for finite doubles.  Keys keep insertion order, making output byte-stable.
struct TreeDocument {
  static constexpr int kFormatVersion = 1;

  EmbeddedTree tree;
  std::string construction;      // "tk", "circle", "witness3", "witness4", "random", ...
  nlohmann::ordered_json params; // opaque construction parameters

  TreeDocument() = default;
  explicit TreeDocument(EmbeddedTree t, std::string construction_name = "")
      : tree(std::move(t)), construction(std::move(construction_name)) {}

  std::string serialize() const;
  static TreeDocument parse(const std::string& text);

  void save(const std::string& path) const;
  static TreeDocument load(const std::string& path);
};

// A serialized unfolding: vertices, turns and the derived certificates.
struct PathDocument {
  static constexpr int kFormatVersion = 1;

  PolyPath path;
  double tree_length = 0.0;
  double endpoint_distance = 0.0;
  double kappa = 0.0;
  std::optional<double> schmidt_bound;  // 1/cos(kappa/2) when kappa < pi

  std::string serialize() const;
  static PathDocument parse(const std::string& text);
  void save(const std::string& path) const;
  static PathDocument load(const std::string& path);
};

// Distinguishes tree documents from path documents by their top-level keys.
bool looks_like_path_document(const std::string& text);

}  // namespace steiner
