/**
 * An EngineModule backed by a recorded session trace.
 *
 * The core engine writes traces in its own line format; this player
 * replays the recorded decisions frame by frame, validating that the
 * caller feeds the same timestamp sequence that produced the recording.
 * It exists so the UI can be driven end to end by real engine output in
 * environments where the binary core is not loaded; a real module build
 * slots into the same interface.
 */

import type {
  EngineManifest,
  EngineModule,
  FrameInput,
  GuidanceEvent,
  MessageCatalogData,
  StepResult,
} from "./engineModule";

interface TraceRecord {
  timestampMs: number;
  eventKey: string | null;
  digest: string;
}

export function parseTrace(text: string): TraceRecord[] {
  const records: TraceRecord[] = [];
  for (const raw of text.split("\n")) {
    const line = raw.trim();
    if (!line || line.startsWith("#") || line.startsWith("converged=")) continue;
    const tokens = new Map<string, string>();
    for (const part of line.split(" ")) {
      const eq = part.indexOf("=");
      if (eq > 0) tokens.set(part.slice(0, eq), part.slice(eq + 1));
    }
    const t = tokens.get("t");
    const ev = tokens.get("ev");
    const state = tokens.get("state");
    if (t === undefined || ev === undefined || state === undefined) {
      throw new Error(`malformed trace line: ${line}`);
    }
    records.push({
      timestampMs: Number(t),
      eventKey: ev === "-" || ev === "suppressed" ? null : ev,
      digest: state,
    });
  }
  return records;
}

export class TracePlayerModule implements EngineModule {
  private records: TraceRecord[];
  private manifest: EngineManifest;
  private cursor = 0;
  private locale: string;
  private catalog: MessageCatalogData = {};

  constructor(traceText: string, manifest: EngineManifest) {
    this.records = parseTrace(traceText);
    this.manifest = manifest;
    this.locale = manifest.default_locale;
  }

  init(configJson: string, catalogJson: string): void {
    const config = JSON.parse(configJson) as { locale?: string };
    this.locale = config.locale ?? this.manifest.default_locale;
    this.catalog = JSON.parse(catalogJson) as MessageCatalogData;
    this.cursor = 0;
  }

  step(input: FrameInput): StepResult {
    const record = this.records[this.cursor];
    if (!record) {
      throw new Error(`trace exhausted after ${this.cursor} frames`);
    }
    if (record.timestampMs !== input.timestampMs) {
      throw new Error(
        `frame timestamp ${input.timestampMs} does not match recorded ${record.timestampMs}`,
      );
    }
    this.cursor += 1;
    let event: GuidanceEvent | null = null;
    if (record.eventKey) {
      const severity = this.manifest.severity_by_key[record.eventKey];
      if (!severity) {
        throw new Error(`no severity for recorded key ${record.eventKey}`);
      }
      event = {
        key: record.eventKey,
        text: this.resolve(record.eventKey),
        severity,
        timestampMs: record.timestampMs,
      };
    }
    return { event, stateDigest: record.digest };
  }

  resolve(key: string, locale?: string): string {
    const entry = this.catalog[key];
    if (!entry) throw new Error(`unknown message key ${key}`);
    const text = entry[locale ?? this.locale] ?? entry[this.manifest.default_locale];
    if (text === undefined) {
      throw new Error(`key ${key} missing default locale text`);
    }
    return text;
  }

  framesRemaining(): number {
    return this.records.length - this.cursor;
  }
}
