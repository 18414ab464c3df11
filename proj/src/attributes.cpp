#include "ane/attributes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ane/errors.hpp"

namespace ane {

void AttributeMatrix::set_row(std::size_t node, FeatureRow row) {
  long long prev = -1;
  for (const auto& [k, v] : row) {
    if (k >= num_features_) {
      throw std::invalid_argument("attribute index " + std::to_string(k) +
                                  " out of range (K=" + std::to_string(num_features_) + ")");
    }
    if (static_cast<long long>(k) <= prev) {
      throw std::invalid_argument("attribute indices must be strictly increasing");
    }
    if (!std::isfinite(v)) {
      throw std::invalid_argument("attribute value must be finite");
    }
    prev = k;
  }
  rows_[node] = std::move(row);
}

AttributeMatrix load_attributes(const std::string& path, std::size_t num_nodes) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open attribute file: " + path);

  std::string line;
  std::size_t line_no = 0;

  // Header: K=<int>
  std::size_t num_features = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("K=", 0) != 0) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected header \"K=<int>\"");
    }
    num_features = std::strtoull(line.c_str() + 2, nullptr, 10);
    have_header = true;
    break;
  }
  if (!have_header) throw ParseError(path + ": missing \"K=<int>\" header");

  AttributeMatrix attrs(num_nodes, num_features);
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    long long node;
    if (!(ss >> node)) continue;
    if (node < 0 || static_cast<std::size_t>(node) >= num_nodes) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": node id " +
                       std::to_string(node) + " out of range");
    }
    FeatureRow row;
    std::string tok;
    while (ss >> tok) {
      const auto colon = tok.find(':');
      if (colon == std::string::npos) {
        throw ParseError(path + ":" + std::to_string(line_no) + ": expected \"index:value\"");
      }
      errno = 0;
      char* end = nullptr;
      const unsigned long long k = std::strtoull(tok.c_str(), &end, 10);
      if (end != tok.c_str() + colon) {
        throw ParseError(path + ":" + std::to_string(line_no) + ": bad feature index in \"" +
                         tok + "\"");
      }
      const double v = std::strtod(tok.c_str() + colon + 1, &end);
      if (*end != '\0') {
        throw ParseError(path + ":" + std::to_string(line_no) + ": bad feature value in \"" +
                         tok + "\"");
      }
      row.emplace_back(static_cast<std::uint32_t>(k), v);
    }
    try {
      attrs.set_row(static_cast<std::size_t>(node), std::move(row));
    } catch (const std::invalid_argument& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return attrs;
}

void save_attributes(const AttributeMatrix& attrs, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write attribute file: " + path);
  out << "K=" << attrs.num_features() << "\n";
  for (std::size_t u = 0; u < attrs.num_nodes(); ++u) {
    const auto row = attrs.row(u);
    if (row.empty()) continue;
    out << u;
    for (const auto& [k, v] : row) out << " " << k << ":" << v;
    out << "\n";
  }
  if (!out) throw IoError("error writing attribute file: " + path);
}

std::vector<std::uint32_t> LabelMap::labeled_nodes() const {
  std::vector<std::uint32_t> out;
  for (std::size_t u = 0; u < labels.size(); ++u) {
    if (labels[u] >= 0) out.push_back(static_cast<std::uint32_t>(u));
  }
  return out;
}

LabelMap load_labels(const std::string& path, std::size_t num_nodes) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open label file: " + path);

  LabelMap map;
  map.labels.assign(num_nodes, -1);
  int max_label = -1;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    long long node, label;
    if (!(ss >> node)) continue;
    if (!(ss >> label)) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": expected \"node label\"");
    }
    if (node < 0 || static_cast<std::size_t>(node) >= num_nodes) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": node id out of range");
    }
    if (label < 0) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": negative label");
    }
    map.labels[static_cast<std::size_t>(node)] = static_cast<int>(label);
    max_label = std::max(max_label, static_cast<int>(label));
  }
  map.num_classes = static_cast<std::size_t>(max_label + 1);
  return map;
}

void save_labels(const LabelMap& labels, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot write label file: " + path);
  for (std::size_t u = 0; u < labels.labels.size(); ++u) {
    if (labels.labels[u] >= 0) out << u << "\t" << labels.labels[u] << "\n";
  }
  if (!out) throw IoError("error writing label file: " + path);
}

}  // namespace ane
