import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { expect, test } from "vitest";

import type { EngineManifest } from "../src/engineModule";
import { parseSnapshotInputs } from "../src/snapshotInput";
import { parseTrace, TracePlayerModule } from "../src/tracePlayer";

const here = dirname(fileURLToPath(import.meta.url));
const read = (name: string) => readFileSync(join(here, "fixtures", name), "utf8");

const manifest = JSON.parse(read("engine-interface.json")) as EngineManifest;
const catalogJson = read("messages.json");
const traceText = read("parity.trace");
const frames = parseSnapshotInputs(read("parity.snapshot"));

function player(locale = "en") {
  const module = new TracePlayerModule(traceText, manifest);
  module.init(JSON.stringify({ locale }), catalogJson);
  return module;
}

test("parses every frame record and skips the summary line", () => {
  const records = parseTrace(traceText);
  expect(records.length).toBe(frames.length);
  expect(records[0].timestampMs).toBe(0);
});

test("replays recorded events at recorded timestamps", () => {
  const module = player();
  const keys: Array<string | null> = [];
  for (const frame of frames) {
    const result = module.step(frame);
    keys.push(result.event ? result.event.key : null);
    expect(result.stateDigest).toContain("noface:");
  }
  expect(keys.filter(Boolean)).toEqual(["too_far_right", "aligned", "no_face"]);
  expect(module.framesRemaining()).toBe(0);
});

test("rejects timestamps that disagree with the recording", () => {
  const module = player();
  expect(() =>
    module.step({ timestampMs: 12345, landmarks: null, luma: null }),
  ).toThrow(/does not match recorded/);
});

test("throws once the recording is exhausted", () => {
  const module = player();
  for (const frame of frames) module.step(frame);
  expect(() => module.step(frames[0])).toThrow(/exhausted/);
});

test("resolve honors locale with default fallback", () => {
  const module = player();
  const ne = module.resolve("no_face", "ne");
  const en = module.resolve("no_face", "en");
  expect(ne).not.toBe(en);
  // key without a "ne" entry falls back to the default locale
  expect(module.resolve("too_far", "ne")).toBe(module.resolve("too_far", "en"));
  expect(() => module.resolve("bogus_key")).toThrow(/unknown message key/);
});

test("init locale drives event text", () => {
  const module = player("ne");
  let lastText = "";
  for (const frame of frames) {
    const result = module.step(frame);
    if (result.event) lastText = result.event.text;
  }
  expect(lastText).toBe(module.resolve("no_face", "ne"));
});

test("init rewinds the session", () => {
  const module = player();
  for (const frame of frames) module.step(frame);
  module.init(JSON.stringify({ locale: "en" }), catalogJson);
  expect(module.framesRemaining()).toBe(frames.length);
  expect(module.step(frames[0]).event?.key).toBe("too_far_right");
});
