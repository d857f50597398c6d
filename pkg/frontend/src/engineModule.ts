/**
 * The portable core-module boundary.
 *
 * All guidance decisions (thresholds, debounces, priorities, severities)
 * live behind this interface; the UI holds no such constants. Data
 * crosses the boundary flat: numbers, typed arrays, and JSON strings, so
 * any binary build of the core (WASM or otherwise) can implement it.
 */

export type Severity = "Assertive" | "Polite";

export interface GuidanceEvent {
  key: string;
  text: string;
  severity: Severity;
  timestampMs: number;
}

/**
 * One frame of input.
 *
 * `landmarks` is null when no face was detected, otherwise a
 * Float64Array of length 10 in frame-normalized coordinates:
 * [noseX, noseY, eyeLeftX, eyeLeftY, eyeRightX, eyeRightY,
 *  boxCenterX, boxCenterY, boxWidth, boxHeight].
 *
 * `luma` is null or a Uint8Array of row-major RGB byte triples from the
 * downsampled capture frame.
 */
export interface FrameInput {
  timestampMs: number;
  landmarks: Float64Array | null;
  luma: Uint8Array | null;
}

export interface StepResult {
  /** At most one event per frame; null when the engine stays quiet. */
  event: GuidanceEvent | null;
  /** Opaque digest of the engine state after the step, for tracing. */
  stateDigest: string;
}

export interface EngineModule {
  /**
   * Initialize a session. `configJson` carries engine settings (locale at
   * minimum), `catalogJson` the message catalog keyed by message key and
   * locale.
   */
  init(configJson: string, catalogJson: string): void;
  /** Advance one frame. Timestamps must be monotonic per session. */
  step(input: FrameInput): StepResult;
  /** Resolve a message key to localized text with default-locale fallback. */
  resolve(key: string, locale?: string): string;
}

/**
 * Engine-exported static data: severity and corrected axis per message
 * key. Shipped as generated JSON next to the module, never re-encoded by
 * hand in UI code.
 */
export interface EngineManifest {
  version: number;
  default_locale: string;
  severity_by_key: Record<string, Severity>;
  axis_by_key: Record<string, string>;
}

export type MessageCatalogData = Record<string, Record<string, string>>;
