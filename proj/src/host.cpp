#include "burnlab/host.hpp"

#include <algorithm>
#include <string>

#include "burnlab/errors.hpp"

namespace burnlab {

VertexId Host::vertex_count() const noexcept {
  if (const auto* g = std::get_if<GridSpec>(&repr_)) return g->vertex_count();
  return graph().vertex_count();
}

std::int64_t Host::distance(VertexId u, VertexId v) const {
  if (!contains(u) || !contains(v)) throw InputError("vertex id out of range");
  if (const auto* g = std::get_if<GridSpec>(&repr_))
    return grid_distance(*g, g->vertex(u), g->vertex(v));
  return bfs_distances(graph(), u)[static_cast<std::size_t>(v)];
}

TargetSet TargetSet::paths(std::vector<HorizontalPathSpec> paths) {
  if (paths.empty()) throw InputError("target path list is empty");
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  return TargetSet(Kind::Paths, std::move(paths), {});
}

TargetSet TargetSet::vertices(std::vector<VertexId> ids) {
  if (ids.empty()) throw InputError("target vertex list is empty");
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return TargetSet(Kind::Vertices, {}, std::move(ids));
}

void TargetSet::validate(const Host& host) const {
  switch (kind_) {
    case Kind::All:
      if (host.vertex_count() == 0) throw InputError("target of an empty host");
      return;
    case Kind::Paths:
      if (!host.is_grid()) throw InputError("horizontal path targets need a grid host");
      for (const auto& p : paths_)
        if (p.height < 1 || p.height > host.grid().rows())
          throw InputError("path height " + std::to_string(p.height) + " outside grid");
      return;
    case Kind::Vertices:
      for (VertexId v : ids_)
        if (!host.contains(v)) throw InputError("target vertex " + std::to_string(v) + " outside host");
      return;
  }
}

std::vector<char> TargetSet::mask(const Host& host) const {
  validate(host);
  std::vector<char> out(static_cast<std::size_t>(host.vertex_count()), kind_ == Kind::All ? 1 : 0);
  if (kind_ == Kind::Paths) {
    const auto& g = host.grid();
    for (const auto& p : paths_)
      for (std::int64_t c = 1; c <= g.cols(); ++c) out[static_cast<std::size_t>(g.id({p.height, c}))] = 1;
  } else if (kind_ == Kind::Vertices) {
    for (VertexId v : ids_) out[static_cast<std::size_t>(v)] = 1;
  }
  return out;
}

std::vector<VertexId> TargetSet::members(const Host& host) const {
  const auto m = mask(host);
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < m.size(); ++v)
    if (m[v]) out.push_back(static_cast<VertexId>(v));
  return out;
}

}  // namespace burnlab
