"""Simple drawings of complete graphs: representation, planarization, and
structural verification."""

from .checks import (
    EdgeTrace,
    TheoremReport,
    VertexDeletionAnalysis,
    Witness,
    analyze_vertex_deletion,
    check_natural_properties,
    check_segment_bound,
    check_theorem1,
    check_theorem2,
    check_theorem3,
    check_vertex_deletion_claims,
    edge_trace,
    items_on_face,
)
from .drawing import (
    GoodDrawing,
    ValidationReport,
    Violation,
    decode_drawing,
    encode_drawing,
    from_geometric,
    mirror,
    relabel,
    validate_good,
)
from .errors import (
    DegeneracyError,
    DrawingError,
    FaceNotSimpleError,
    InternalInconsistencyError,
    JordanViolationError,
    NoGeometryError,
    NonSphericalError,
    ParseError,
    StructureError,
    TriangleNotSimpleError,
)
from .geometry import (
    Point,
    PointConfiguration,
    Rational,
    SegmentIntersection,
    Turn,
    check_general_position,
    convex_quadruple_count,
    decode_configuration,
    encode_configuration,
    generate_convex,
    generate_general,
    orientation,
    segment_crossing,
)
from .planemap import (
    DualGraph,
    Face,
    PlaneMap,
    build_plane_map,
    dual_graph,
    restrict_delete_vertex,
    trace_faces,
)
from .triangles import (
    SidePartition,
    Triangle,
    all_side_partitions,
    all_triangles,
    side_partition,
    triangle_segments,
)

__version__ = "0.1.0"
