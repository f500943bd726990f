#include "gq/collision.hpp"

#include <cmath>

namespace gq {

std::vector<OrientedBox> gripper_boxes(const Grasp3D& grasp,
                                       const GripperModel& gripper) {
  Vec3 x = grasp.axis - Vec3::UnitZ() * grasp.axis.z();
  if (x.norm() < 1e-9) x = Vec3::UnitX();  // degenerate vertical axis
  x.normalize();
  const Vec3 z = Vec3::UnitZ();
  const Vec3 y = z.cross(x);
  Mat3 axes;
  axes.col(0) = x;
  axes.col(1) = y;
  axes.col(2) = z;

  const double jaw_offset = 0.5 * gripper.max_width + 0.5 * gripper.jaw_thickness;
  const double jaw_center_z = 0.5 * gripper.jaw_length - gripper.tip_below;

  std::vector<OrientedBox> boxes;
  for (const double side : {-1.0, 1.0}) {
    OrientedBox jaw;
    jaw.center = grasp.center + side * jaw_offset * x + jaw_center_z * z;
    jaw.axes = axes;
    jaw.half_extents = {0.5 * gripper.jaw_thickness, 0.5 * gripper.jaw_width,
                        0.5 * gripper.jaw_length};
    boxes.push_back(jaw);
  }
  OrientedBox base;
  base.center = grasp.center +
                (gripper.jaw_length - gripper.tip_below + 0.5 * gripper.base_height) * z;
  base.axes = axes;
  base.half_extents = {0.5 * gripper.max_width + gripper.jaw_thickness,
                       0.5 * gripper.jaw_width, 0.5 * gripper.base_height};
  boxes.push_back(base);
  return boxes;
}

bool collision_free(const Grasp3D& grasp, const TriangleMesh& mesh,
                    const GripperModel& gripper, double table_height) {
  const auto boxes = gripper_boxes(grasp, gripper);
  for (const auto& box : boxes) {
    if (box.min_z() < table_height - 1e-9) return false;
    for (const auto& tri : mesh.faces) {
      if (box_triangle_intersect(box, mesh.vertices[tri[0]],
                                 mesh.vertices[tri[1]], mesh.vertices[tri[2]]))
        return false;
    }
  }
  return true;
}

}  // namespace gq
