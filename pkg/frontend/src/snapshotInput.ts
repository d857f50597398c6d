/**
 * Parse the engine's landmark snapshot format into per-frame inputs.
 * Used by the demo driver and tests to feed recorded sessions through
 * the module boundary.
 */

import type { FrameInput } from "./engineModule";

export function parseSnapshotInputs(text: string): FrameInput[] {
  const frames: FrameInput[] = [];
  let lineNo = 0;
  for (const raw of text.split("\n")) {
    lineNo += 1;
    const line = raw.trim();
    if (!line || line.startsWith("#")) continue;
    const parts = line.split(/\s+/);
    const timestampMs = Number(parts[0]);
    if (!Number.isFinite(timestampMs)) {
      throw new Error(`line ${lineNo}: bad timestamp ${parts[0]}`);
    }
    if (parts.length === 2 && parts[1] === "NOFACE") {
      frames.push({ timestampMs, landmarks: null, luma: null });
      continue;
    }
    if (
      parts.length !== 15 ||
      parts[1] !== "nose" ||
      parts[4] !== "eyeL" ||
      parts[7] !== "eyeR" ||
      parts[10] !== "bbox"
    ) {
      throw new Error(`line ${lineNo}: malformed frame record`);
    }
    const nums = [
      parts[2], parts[3], parts[5], parts[6], parts[8], parts[9],
      parts[11], parts[12], parts[13], parts[14],
    ].map(Number);
    if (nums.some((n) => !Number.isFinite(n))) {
      throw new Error(`line ${lineNo}: non-numeric landmark field`);
    }
    frames.push({ timestampMs, landmarks: Float64Array.from(nums), luma: null });
  }
  return frames;
}
