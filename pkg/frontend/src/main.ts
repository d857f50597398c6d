/**
 * Browser entry point. Loads the engine interface data and a recorded
 * demo session, builds the accessible shell, and replays the session
 * through the module boundary. Swapping the trace player for a binary
 * core module changes nothing above the EngineModule interface.
 */

import { attachCamera, createApp } from "./app";
import type { EngineManifest } from "./engineModule";
import { parseSnapshotInputs } from "./snapshotInput";
import { systemSpeaker } from "./speech";
import { TracePlayerModule } from "./tracePlayer";

declare global {
  // single-file builds inline the assets instead of fetching them
  // eslint-disable-next-line no-var
  var __CAMGUIDE_ASSETS__: Record<string, string> | undefined;
}

async function loadAsset(name: string): Promise<string> {
  const inline = globalThis.__CAMGUIDE_ASSETS__;
  if (inline && name in inline) return inline[name];
  const response = await fetch(`assets/${name}`);
  if (!response.ok) throw new Error(`failed to load ${name}: ${response.status}`);
  return response.text();
}

async function boot(): Promise<void> {
  const [manifestText, catalogJson, traceText, snapshotText] = await Promise.all([
    loadAsset("engine-interface.json"),
    loadAsset("messages.json"),
    loadAsset("demo.trace"),
    loadAsset("demo.snapshot"),
  ]);
  const manifest = JSON.parse(manifestText) as EngineManifest;
  const engine = new TracePlayerModule(traceText, manifest);
  const speaker = systemSpeaker();
  const deps = { document, engine, speaker, catalogJson };
  const app = createApp(deps);
  document.body.appendChild(app.root);

  void attachCamera(app, deps);

  if (!globalThis.__CAMGUIDE_ASSETS__ && "serviceWorker" in navigator) {
    navigator.serviceWorker.register("sw.js").catch(() => undefined);
  }

  // Pace frames on the wall clock but feed the recording's own logical
  // timestamps; the module's clock is caller-supplied by design.
  const frames = parseSnapshotInputs(snapshotText);
  const firstTs = frames.length ? frames[0].timestampMs : 0;
  for (const frame of frames) {
    setTimeout(() => {
      app.processFrame(frame.landmarks, frame.luma, frame.timestampMs);
    }, frame.timestampMs - firstTs);
  }
}

boot().catch((err) => {
  console.error(err);
});
