#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singular/builders.hpp"
#include "singular/surgery.hpp"
#include "singular/verify.hpp"

namespace singular {

// Script failure with a 1-based source location.
class ScriptError : public TopologyError {
 public:
  ScriptError(ErrorKind kind, int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

struct SurfaceDecl {
  std::string name;
  int genus = 0;
  std::optional<int> res;  // sphere refinement for genus 0, grid size otherwise
  int line = 0;

  bool operator==(const SurfaceDecl& o) const {
    return name == o.name && genus == o.genus && res == o.res;
  }
};

enum class LoopSelector { Handle, Tunnel, Separating, Cycle };

struct LoopDecl {
  std::string name;
  LoopSelector selector = LoopSelector::Cycle;
  std::string surface;
  int index = 0;              // canonical selectors
  std::vector<int> vertices;  // cycle selector, in surface-local ids
  int line = 0;

  bool operator==(const LoopDecl& o) const {
    return name == o.name && selector == o.selector && surface == o.surface && index == o.index &&
           vertices == o.vertices;
  }
};

struct OpStmt {
  OperationKind kind = OperationKind::Collapse;
  std::string loop;
  std::string partner;  // identify only
  std::optional<std::pair<int, int>> at;
  std::optional<int> offset;
  bool reverse = false;
  int line = 0;

  bool operator==(const OpStmt& o) const {
    return kind == o.kind && loop == o.loop && partner == o.partner && at == o.at &&
           offset == o.offset && reverse == o.reverse;
  }
};

struct SingularizationPlan {
  std::vector<SurfaceDecl> surfaces;
  std::vector<LoopDecl> loop_decls;
  std::vector<OpStmt> operations;

  // Resolved at parse time; loops are in surface-local ids.
  SurfaceBundle bundle;
  std::map<std::string, LoopMarking> loops;

  // Compares the statements, not line numbers or resolved data.
  bool operator==(const SingularizationPlan& o) const {
    return surfaces == o.surfaces && loop_decls == o.loop_decls && operations == o.operations;
  }
};

SingularizationPlan parse_script(const std::string& text);
std::string render_script(const SingularizationPlan& plan);

struct RunOptions {
  // Draws omitted zip endpoints and identify offset/orientation at random.
  std::optional<std::uint64_t> seed;
  bool keep_snapshots = false;
};

struct RunResult {
  SingularizationReport report;
  SingularComplex result;
  // Every carrier built along the way, when requested.
  std::vector<CellComplex> snapshots;
};

RunResult run(const SingularizationPlan& plan, const RunOptions& options = {});

std::string report_json(const SingularizationReport& report);
std::string cells_json(const CellComplex& c);
// Throws NoGeometry when any vertex lacks coordinates.
std::string off_mesh(const CellComplex& c);

}  // namespace singular
