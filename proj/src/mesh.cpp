#include "gq/mesh.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gq/common.hpp"

namespace gq {

namespace {

constexpr double kDegenerateFaceArea = 1e-12;

// Parses the vertex-index field of an `f` record ("7", "7/1", "7//2", ...).
int parse_face_index(const std::string& field, int line_no) {
  const size_t slash = field.find('/');
  const std::string head = slash == std::string::npos ? field : field.substr(0, slash);
  int idx = 0;
  const auto* begin = head.data();
  const auto* end = head.data() + head.size();
  const auto res = std::from_chars(begin, end, idx);
  if (res.ec != std::errc() || res.ptr != end) {
    throw MalformedFileError("bad face index '" + field + "' at line " +
                             std::to_string(line_no));
  }
  return idx;
}

}  // namespace

TriangleMesh load_obj(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedFileError("cannot open mesh file: " + path);

  TriangleMesh mesh;
  std::string line;
  int line_no = 0;
  int dropped = 0;
  std::vector<int> poly;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> tag)) continue;
    if (tag == "v") {
      Vec3 v;
      if (!(ss >> v.x() >> v.y() >> v.z())) {
        throw MalformedFileError(path + ": malformed vertex at line " +
                                 std::to_string(line_no));
      }
      if (!v.allFinite()) {
        throw MalformedFileError(path + ": non-finite vertex at line " +
                                 std::to_string(line_no));
      }
      mesh.vertices.push_back(v);
    } else if (tag == "f") {
      poly.clear();
      std::string field;
      while (ss >> field) {
        int idx = parse_face_index(field, line_no);
        if (idx < 0) idx = static_cast<int>(mesh.vertices.size()) + idx + 1;
        if (idx < 1 || idx > static_cast<int>(mesh.vertices.size())) {
          throw MalformedFileError(path + ": face index " + std::to_string(idx) +
                                   " out of range at line " + std::to_string(line_no));
        }
        poly.push_back(idx - 1);
      }
      if (poly.size() < 3) {
        throw MalformedFileError(path + ": face with fewer than 3 vertices at line " +
                                 std::to_string(line_no));
      }
      for (size_t k = 2; k < poly.size(); ++k)
        mesh.faces.push_back({poly[0], poly[int(k) - 1], poly[int(k)]});
    }
    // Other records (vn, vt, o, g, usemtl, comments) are ignored.
  }

  if (mesh.vertices.empty() || mesh.faces.empty())
    throw EmptyGeometryError(path + ": no geometry found");

  // Drop degenerate faces so downstream contact normals stay well defined.
  std::vector<std::array<int, 3>> kept;
  kept.reserve(mesh.faces.size());
  for (int f = 0; f < static_cast<int>(mesh.faces.size()); ++f) {
    if (mesh.face_area(f) < kDegenerateFaceArea) {
      ++dropped;
      continue;
    }
    kept.push_back(mesh.faces[f]);
  }
  mesh.faces = std::move(kept);
  if (mesh.faces.empty()) throw EmptyGeometryError(path + ": all faces degenerate");

  log_info("loaded mesh", {{"path", path},
                           {"vertices", std::to_string(mesh.vertices.size())},
                           {"faces", std::to_string(mesh.faces.size())},
                           {"dropped_faces", std::to_string(dropped)}});
  return mesh;
}

void save_obj(const TriangleMesh& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw MalformedFileError("cannot write mesh file: " + path);
  out.precision(12);
  for (const auto& v : mesh.vertices)
    out << "v " << v.x() << " " << v.y() << " " << v.z() << "\n";
  for (const auto& f : mesh.faces)
    out << "f " << f[0] + 1 << " " << f[1] + 1 << " " << f[2] + 1 << "\n";
}

PreprocessResult preprocess_mesh(const TriangleMesh& mesh, double gripper_width) {
  if (mesh.empty()) throw EmptyGeometryError("preprocess_mesh: empty mesh");
  if (gripper_width <= 0.0)
    throw ConfigError("preprocess_mesh: gripper_width must be positive");

  Vec3 mean = Vec3::Zero();
  for (const auto& v : mesh.vertices) mean += v;
  mean /= static_cast<double>(mesh.vertices.size());

  Mat3 cov = Mat3::Zero();
  for (const auto& v : mesh.vertices) {
    const Vec3 d = v - mean;
    cov += d * d.transpose();
  }
  cov /= static_cast<double>(mesh.vertices.size());

  Eigen::SelfAdjointEigenSolver<Mat3> eig(cov);
  const Vec3 evals = eig.eigenvalues();  // ascending
  if (evals(1) <= 1e-18 * std::max(1.0, evals(2)))
    throw DegenerateGeometryError("preprocess_mesh: rank-deficient vertex covariance");

  // Principal axes sorted by descending variance, sign-canonicalized so the
  // largest-magnitude component of each axis is positive, right-handed.
  Mat3 axes;
  axes.col(0) = eig.eigenvectors().col(2);
  axes.col(1) = eig.eigenvectors().col(1);
  axes.col(2) = eig.eigenvectors().col(0);
  for (int c = 0; c < 3; ++c) {
    int arg = 0;
    axes.col(c).cwiseAbs().maxCoeff(&arg);
    if (axes(arg, c) < 0.0) axes.col(c) = -axes.col(c);
  }
  if (axes.determinant() < 0.0) axes.col(2) = -axes.col(2);

  PreprocessResult out;
  out.mesh = mesh;
  for (auto& v : out.mesh.vertices) v = axes.transpose() * (v - mean);

  Eigen::AlignedBox3d box = out.mesh.bounding_box();
  const double min_extent = box.sizes().minCoeff();
  out.scale = min_extent > gripper_width ? gripper_width / min_extent : 1.0;

  const Vec3 pre_center = box.center();
  for (auto& v : out.mesh.vertices) v = (v - pre_center) * out.scale;

  out.props.mass = 1.0;
  out.props.center_of_mass = out.mesh.bounding_box().center();
  return out;
}

}  // namespace gq
