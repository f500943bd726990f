#pragma once

#include <vector>

#include "gq/grasp.hpp"
#include "gq/mesh.hpp"

namespace gq {

// Gripper occupancy for a tabletop grasp: two finger boxes at the opening
// width plus the palm block, fingers vertical (approach straight down). The
// grasp axis is expected to be parallel to the table plane up to the dataset
// tolerance; its horizontal component orients the boxes.
std::vector<OrientedBox> gripper_boxes(const Grasp3D& grasp_in_table,
                                       const GripperModel& gripper);

// True iff no gripper box intersects any mesh triangle and no box dips below
// the table plane. Mesh and grasp are given in the table frame (z up).
bool collision_free(const Grasp3D& grasp_in_table,
                    const TriangleMesh& mesh_in_table,
                    const GripperModel& gripper, double table_height);

}  // namespace gq
