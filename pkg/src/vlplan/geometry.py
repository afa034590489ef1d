"""2D geometry kernels: polylines, oriented rectangles, polygons.

Everything operates on plain numpy float64 arrays. Points are (..., 2),
polylines are (P, 2) with P >= 2 and no repeated consecutive vertices.
Rectangle overlap uses the separating-axis test; batched variants
broadcast over a leading axis so collision sweeps stay vectorized.
"""

from __future__ import annotations

import numpy as np


def unit(v: np.ndarray) -> np.ndarray:
    """Normalize the last axis; zero vectors stay zero."""
    n = np.linalg.norm(v, axis=-1, keepdims=True)
    return np.where(n > 0.0, v / np.where(n == 0.0, 1.0, n), 0.0)


def heading_vec(heading: np.ndarray | float) -> np.ndarray:
    """Unit direction(s) for heading angle(s), shape (..., 2)."""
    h = np.asarray(heading, dtype=float)
    return np.stack([np.cos(h), np.sin(h)], axis=-1)


def wrap_angle(a: np.ndarray | float):
    """Wrap to (-pi, pi]."""
    out = -np.remainder(-np.asarray(a, dtype=float) + np.pi, 2.0 * np.pi) + np.pi
    return float(out) if np.ndim(a) == 0 else out


def rect_corners(
    center: np.ndarray, heading: np.ndarray | float, length: float, width: float
) -> np.ndarray:
    """Corners of oriented rectangle(s), shape (..., 4, 2), CCW order."""
    c = np.asarray(center, dtype=float)
    fwd = heading_vec(heading)
    left = np.stack([-fwd[..., 1], fwd[..., 0]], axis=-1)
    half_l = 0.5 * length
    half_w = 0.5 * width
    f = fwd * half_l
    s = left * half_w
    return np.stack(
        [c + f + s, c - f + s, c - f - s, c + f - s], axis=-2
    )


def obb_overlap_batch(
    center_a: np.ndarray,
    heading_a: np.ndarray,
    dims_a: np.ndarray,
    center_b: np.ndarray,
    heading_b: np.ndarray,
    dims_b: np.ndarray,
) -> np.ndarray:
    """Separating-axis overlap for pairs of oriented rectangles.

    All arguments broadcast over a common leading shape; dims are
    (..., 2) = (length, width). Touching counts as overlap. Returns a
    boolean array of the broadcast shape.
    """
    ca = np.asarray(center_a, dtype=float)
    cb = np.asarray(center_b, dtype=float)
    da = np.asarray(dims_a, dtype=float)
    db = np.asarray(dims_b, dtype=float)
    ua = heading_vec(heading_a)  # (..., 2) long axis of a
    ub = heading_vec(heading_b)
    va = np.stack([-ua[..., 1], ua[..., 0]], axis=-1)
    vb = np.stack([-ub[..., 1], ub[..., 0]], axis=-1)
    delta = cb - ca

    axes = np.stack([ua, va, ub, vb], axis=-2)  # (..., 4, 2)
    # Projection radius of each rect onto each axis.
    half_a = 0.5 * da[..., None, :]  # (..., 1, 2)
    half_b = 0.5 * db[..., None, :]

    def radius(u_axis, v_axis, half):
        lu = np.abs(np.einsum("...kd,...d->...k", axes, u_axis)) * half[..., 0]
        lv = np.abs(np.einsum("...kd,...d->...k", axes, v_axis)) * half[..., 1]
        return lu + lv

    ra = radius(ua, va, half_a)
    rb = radius(ub, vb, half_b)
    dist = np.abs(np.einsum("...kd,...d->...k", axes, delta))
    separated = dist > ra + rb
    return ~np.any(separated, axis=-1)


def obb_overlap(
    center_a, heading_a, dims_a, center_b, heading_b, dims_b
) -> bool:
    """Scalar separating-axis test for two oriented rectangles."""
    return bool(
        obb_overlap_batch(
            np.asarray(center_a), heading_a, np.asarray(dims_a),
            np.asarray(center_b), heading_b, np.asarray(dims_b),
        )
    )


def closest_point_on_rect(
    center: np.ndarray, heading: float, dims: tuple[float, float], point: np.ndarray
) -> np.ndarray:
    """Closest point of an oriented rectangle (as a filled box) to `point`."""
    fwd = heading_vec(heading)
    left = np.array([-fwd[1], fwd[0]])
    rel = np.asarray(point, dtype=float) - np.asarray(center, dtype=float)
    x = np.clip(rel @ fwd, -0.5 * dims[0], 0.5 * dims[0])
    y = np.clip(rel @ left, -0.5 * dims[1], 0.5 * dims[1])
    return np.asarray(center) + x * fwd + y * left


def polyline_cumlen(points: np.ndarray) -> np.ndarray:
    """Cumulative arc length per vertex, starting at 0."""
    p = np.asarray(points, dtype=float)
    seg = np.linalg.norm(np.diff(p, axis=0), axis=1)
    return np.concatenate([[0.0], np.cumsum(seg)])


def polyline_length(points: np.ndarray) -> float:
    return float(polyline_cumlen(points)[-1])


def point_at_arclength(
    points: np.ndarray, s: np.ndarray | float, cumlen: np.ndarray | None = None
) -> tuple[np.ndarray, np.ndarray]:
    """Position(s) and tangent heading(s) at arc length(s) `s`.

    `s` is clamped to [0, total]; queries past the ends extrapolate along
    the first/last segment direction only via clamping (no extension).
    """
    p = np.asarray(points, dtype=float)
    cum = polyline_cumlen(p) if cumlen is None else cumlen
    s_arr = np.atleast_1d(np.asarray(s, dtype=float))
    s_cl = np.clip(s_arr, 0.0, cum[-1])
    idx = np.clip(np.searchsorted(cum, s_cl, side="right") - 1, 0, len(p) - 2)
    seg_start = p[idx]
    seg_vec = p[idx + 1] - p[idx]
    seg_len = cum[idx + 1] - cum[idx]
    frac = np.where(seg_len > 0.0, (s_cl - cum[idx]) / np.where(seg_len == 0, 1, seg_len), 0.0)
    pos = seg_start + frac[:, None] * seg_vec
    heading = np.arctan2(seg_vec[:, 1], seg_vec[:, 0])
    if np.ndim(s) == 0:
        return pos[0], float(heading[0])
    return pos, heading


def project_to_polyline(
    point: np.ndarray, points: np.ndarray, cumlen: np.ndarray | None = None
) -> tuple[float, float]:
    """Arc length and distance of the closest point on a polyline.

    Ties between equidistant segments resolve to the smallest arc length.
    """
    p = np.asarray(points, dtype=float)
    cum = polyline_cumlen(p) if cumlen is None else cumlen
    q = np.asarray(point, dtype=float)
    a = p[:-1]
    d = p[1:] - a
    seg_len2 = np.einsum("ij,ij->i", d, d)
    t = np.clip(
        np.einsum("ij,ij->i", q[None, :] - a, d) / np.where(seg_len2 == 0, 1, seg_len2),
        0.0,
        1.0,
    )
    proj = a + t[:, None] * d
    dist2 = np.einsum("ij,ij->i", proj - q, proj - q)
    best = int(np.argmin(dist2))  # argmin returns first minimum: smallest s wins
    s = float(cum[best] + t[best] * np.sqrt(seg_len2[best]))
    return s, float(np.sqrt(dist2[best]))


def offset_polyline(points: np.ndarray, offset: float) -> np.ndarray:
    """Shift a polyline laterally by `offset` along its left normals.

    Interior vertices use the averaged (miter) normal of adjacent
    segments, with the miter length capped at 2x to keep sharp corners
    bounded. Adequate for the small offsets used by the candidate fan.
    """
    p = np.asarray(points, dtype=float)
    if offset == 0.0:
        return p.copy()
    seg_dir = unit(np.diff(p, axis=0))
    normals = np.stack([-seg_dir[:, 1], seg_dir[:, 0]], axis=1)
    vertex_n = np.empty_like(p)
    vertex_n[0] = normals[0]
    vertex_n[-1] = normals[-1]
    if len(p) > 2:
        avg = unit(normals[:-1] + normals[1:])
        cos_half = np.einsum("ij,ij->i", avg, normals[:-1])
        scale = 1.0 / np.clip(cos_half, 0.5, 1.0)
        vertex_n[1:-1] = avg * scale[:, None]
    return p + offset * vertex_n


def point_in_polygon(points: np.ndarray, polygon: np.ndarray) -> np.ndarray:
    """Ray-crossing point-in-polygon test, vectorized over points.

    `polygon` is (V, 2), closed implicitly (last vertex connects to
    first). Points on the boundary may land on either side; callers that
    care use `distance_to_polygon_edges` with a margin.
    """
    q = np.atleast_2d(np.asarray(points, dtype=float))
    poly = np.asarray(polygon, dtype=float)
    x0 = poly[:, 0]
    y0 = poly[:, 1]
    x1 = np.roll(x0, -1)
    y1 = np.roll(y0, -1)
    px = q[:, 0][:, None]
    py = q[:, 1][:, None]
    crosses = (y0[None, :] > py) != (y1[None, :] > py)
    with np.errstate(divide="ignore", invalid="ignore"):
        x_at = x0[None, :] + (py - y0[None, :]) / (y1 - y0)[None, :] * (x1 - x0)[None, :]
    hits = crosses & (px < x_at)
    inside = np.sum(hits, axis=1) % 2 == 1
    return inside if np.ndim(points) > 1 else inside


def distance_to_polygon_edges(points: np.ndarray, polygon: np.ndarray) -> np.ndarray:
    """Distance from each point to the polygon boundary (edges)."""
    q = np.atleast_2d(np.asarray(points, dtype=float))
    poly = np.asarray(polygon, dtype=float)
    a = poly
    b = np.roll(poly, -1, axis=0)
    d = b - a
    seg_len2 = np.einsum("ij,ij->i", d, d)
    rel = q[:, None, :] - a[None, :, :]
    t = np.clip(
        np.einsum("pij,ij->pi", rel, d) / np.where(seg_len2 == 0, 1, seg_len2)[None, :],
        0.0,
        1.0,
    )
    proj = a[None, :, :] + t[..., None] * d[None, :, :]
    dist = np.linalg.norm(q[:, None, :] - proj, axis=2)
    return dist.min(axis=1)


def segments_intersect(p1, p2, q1, q2) -> bool:
    """True if segment p1-p2 intersects segment q1-q2 (touching counts)."""
    p1 = np.asarray(p1, dtype=float)
    p2 = np.asarray(p2, dtype=float)
    q1 = np.asarray(q1, dtype=float)
    q2 = np.asarray(q2, dtype=float)

    def orient(a, b, c):
        return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])

    def on_segment(a, b, c):
        return (
            min(a[0], b[0]) - 1e-12 <= c[0] <= max(a[0], b[0]) + 1e-12
            and min(a[1], b[1]) - 1e-12 <= c[1] <= max(a[1], b[1]) + 1e-12
        )

    o1 = orient(p1, p2, q1)
    o2 = orient(p1, p2, q2)
    o3 = orient(q1, q2, p1)
    o4 = orient(q1, q2, p2)
    if (o1 > 0) != (o2 > 0) and (o3 > 0) != (o4 > 0) and o1 != 0 and o2 != 0 and o3 != 0 and o4 != 0:
        return True
    # Collinear / endpoint-touching cases.
    return (
        (o1 == 0 and on_segment(p1, p2, q1))
        or (o2 == 0 and on_segment(p1, p2, q2))
        or (o3 == 0 and on_segment(q1, q2, p1))
        or (o4 == 0 and on_segment(q1, q2, p2))
    )


def polygon_is_simple(polygon: np.ndarray) -> bool:
    """True if no two non-adjacent edges of the closed polygon intersect."""
    poly = np.asarray(polygon, dtype=float)
    n = len(poly)
    edges = [(poly[i], poly[(i + 1) % n]) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if j == i or (j + 1) % n == i or (i + 1) % n == j:
                continue
            if segments_intersect(*edges[i], *edges[j]):
                return False
    return True


def rigid_transform(points: np.ndarray, translation: np.ndarray, rotation: float) -> np.ndarray:
    """Apply rotation then translation to points of shape (..., 2)."""
    c, s = np.cos(rotation), np.sin(rotation)
    rot = np.array([[c, -s], [s, c]])
    return np.asarray(points, dtype=float) @ rot.T + np.asarray(translation, dtype=float)


def to_frame(points: np.ndarray, origin: np.ndarray, heading: float) -> np.ndarray:
    """World points into the frame at `origin` with +x along `heading`."""
    rel = np.asarray(points, dtype=float) - np.asarray(origin, dtype=float)
    c, s = np.cos(-heading), np.sin(-heading)
    rot = np.array([[c, -s], [s, c]])
    return rel @ rot.T
