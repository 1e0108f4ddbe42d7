#pragma once

// Reads back the structure of an emitted SVG document for assertions.

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace tslice::testing {

struct SvgEdge {
  std::string stroke;
  double width = 0.0;
  std::string title;
  std::string coords;
};

struct SvgPanel {
  std::string id;
  double bar_width = 0.0;
  double glyph_width = 0.0;
  std::vector<SvgEdge> edges;
  std::map<std::string, std::string> node_coords;  // label -> "cx,cy"
};

inline std::vector<SvgPanel> probe_svg(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  pt::read_xml(in, tree);  // throws on malformed XML

  std::vector<SvgPanel> panels;
  for (const auto& [tag, group] : tree.get_child("svg")) {
    if (tag != "g" || group.get<std::string>("<xmlattr>.class", "") != "panel") continue;
    SvgPanel panel;
    panel.id = group.get<std::string>("<xmlattr>.id");
    std::vector<std::string> node_xy;
    for (const auto& [child_tag, child] : group) {
      const std::string cls = child.get<std::string>("<xmlattr>.class", "");
      if (cls == "glyph-bar") panel.bar_width = child.get<double>("<xmlattr>.width");
      if (cls == "glyph-box") panel.glyph_width = child.get<double>("<xmlattr>.width");
      if (cls == "edge" || cls == "edge loop") {
        SvgEdge edge;
        edge.stroke = child.get<std::string>("<xmlattr>.stroke");
        edge.width = child.get<double>("<xmlattr>.stroke-width");
        edge.title = child.get<std::string>("title", "");
        edge.coords = child.get<std::string>("<xmlattr>.x1", "") + "," +
                      child.get<std::string>("<xmlattr>.y1", "") + "," +
                      child.get<std::string>("<xmlattr>.x2", "") + "," +
                      child.get<std::string>("<xmlattr>.y2", "");
        panel.edges.push_back(edge);
      }
      if (cls == "node") {
        node_xy.push_back(child.get<std::string>("<xmlattr>.cx") + "," +
                          child.get<std::string>("<xmlattr>.cy"));
      }
      if (cls == "label") {
        panel.node_coords[child.get_value<std::string>()] = node_xy.at(panel.node_coords.size());
      }
    }
    panels.push_back(std::move(panel));
  }
  return panels;
}

// Event count from an edge title "a - b: N events".
inline std::size_t title_count(const std::string& title) {
  const auto colon = title.rfind(": ");
  return std::stoul(title.substr(colon + 2));
}

}  // namespace tslice::testing
