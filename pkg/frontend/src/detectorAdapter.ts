/**
 * Adapts a 468-point face mesh result to the engine's flat landmark
 * layout. The detector's own confidence gating decides face presence;
 * callers pass null when it reports nothing, and this adapter only
 * reshapes coordinates (nose tip, outer eye corners, bounding box from
 * the landmark extrema).
 */

export interface MeshPoint {
  x: number;
  y: number;
}

export const MESH_POINT_COUNT = 468;
const NOSE_TIP = 1;
const LEFT_EYE_OUTER = 33;
const RIGHT_EYE_OUTER = 263;

function clamp01(v: number): number {
  return v < 0 ? 0 : v > 1 ? 1 : v;
}

export function toFlatLandmarks(points: readonly MeshPoint[] | null): Float64Array | null {
  if (!points || points.length < MESH_POINT_COUNT) return null;
  let minX = Infinity;
  let minY = Infinity;
  let maxX = -Infinity;
  let maxY = -Infinity;
  for (const p of points) {
    if (p.x < minX) minX = p.x;
    if (p.x > maxX) maxX = p.x;
    if (p.y < minY) minY = p.y;
    if (p.y > maxY) maxY = p.y;
  }
  minX = clamp01(minX);
  maxX = clamp01(maxX);
  minY = clamp01(minY);
  maxY = clamp01(maxY);
  const width = maxX - minX;
  const height = maxY - minY;
  if (width <= 0 || height <= 0) return null;
  const nose = points[NOSE_TIP];
  const eyeL = points[LEFT_EYE_OUTER];
  const eyeR = points[RIGHT_EYE_OUTER];
  return Float64Array.from([
    clamp01(nose.x),
    clamp01(nose.y),
    clamp01(eyeL.x),
    clamp01(eyeL.y),
    clamp01(eyeR.x),
    clamp01(eyeR.y),
    (minX + maxX) / 2,
    (minY + maxY) / 2,
    width,
    height,
  ]);
}
