/**
 * Assistant shell: builds the accessible DOM, drives the core module one
 * frame at a time, and delivers events through speech plus live regions.
 *
 * The UI owns presentation only. Mute suppresses audio output and flips
 * the toggle's pressed state; it never reaches the engine, so the
 * decision trace is identical muted or not.
 */

import { chromeText } from "./chrome";
import type { EngineModule, StepResult } from "./engineModule";
import { createLiveRegions, announceStatus, routeEvent, type LiveRegions } from "./liveRegions";
import type { Speaker } from "./speech";

/** The self-view is deliberately faint: audio is the primary channel. */
export const PREVIEW_OPACITY = "0.85";

export interface AppDeps {
  document: Document;
  engine: EngineModule;
  speaker: Speaker;
  locale?: string;
  catalogJson: string;
}

export interface App {
  root: HTMLElement;
  regions: LiveRegions;
  preview: HTMLVideoElement;
  muteButton: HTMLButtonElement;
  processFrame(
    landmarks: Float64Array | null,
    luma: Uint8Array | null,
    timestampMs: number,
  ): StepResult;
  setMuted(muted: boolean): void;
  isMuted(): boolean;
}

export function createApp(deps: AppDeps): App {
  const { document: doc, engine, speaker } = deps;
  const locale = deps.locale ?? "en";
  engine.init(JSON.stringify({ locale }), deps.catalogJson);

  const root = doc.createElement("main");
  root.id = "camguide-app";

  // Visually hidden primary heading so screen readers land on context first.
  const heading = doc.createElement("h1");
  heading.className = "sr-only";
  heading.textContent = chromeText("title", locale);
  root.appendChild(heading);

  const intro = doc.createElement("p");
  intro.className = "sr-only";
  intro.textContent = chromeText("intro", locale);
  root.appendChild(intro);

  const preview = doc.createElement("video");
  preview.id = "preview";
  preview.muted = true;
  preview.setAttribute("playsinline", "");
  preview.setAttribute("aria-hidden", "true");
  preview.style.opacity = PREVIEW_OPACITY;
  preview.style.transform = "scaleX(-1)"; // mirrored self-view
  root.appendChild(preview);

  const muteButton = doc.createElement("button");
  muteButton.id = "mute-toggle";
  muteButton.type = "button";
  muteButton.textContent = chromeText("mute_label", locale);
  muteButton.setAttribute("aria-pressed", "false");
  root.appendChild(muteButton);

  const regions = createLiveRegions(doc, root);
  announceStatus(regions, chromeText("waiting_camera", locale));
  if (!speaker.available) {
    announceStatus(regions, chromeText("speech_unavailable", locale));
  }

  let muted = false;
  let lastTimestamp = -Infinity;

  function setMuted(next: boolean): void {
    muted = next;
    muteButton.setAttribute("aria-pressed", String(next));
    announceStatus(
      regions,
      chromeText(next ? "muted_status" : "unmuted_status", locale),
    );
  }

  muteButton.addEventListener("click", () => setMuted(!muted));

  function processFrame(
    landmarks: Float64Array | null,
    luma: Uint8Array | null,
    timestampMs: number,
  ): StepResult {
    // the engine requires monotonic timestamps per session
    const ts = Math.max(timestampMs, lastTimestamp);
    lastTimestamp = ts;
    const result = engine.step({ timestampMs: ts, landmarks, luma });
    if (result.event) {
      routeEvent(regions, result.event);
      if (!muted) speaker.speak(result.event.text);
    }
    return result;
  }

  return {
    root,
    regions,
    preview,
    muteButton,
    processFrame,
    setMuted,
    isMuted: () => muted,
  };
}

/**
 * Production camera path; guarded so headless tests never touch it.
 * Reports denial through the polite region and, when possible, speech.
 */
export async function attachCamera(app: App, deps: AppDeps): Promise<MediaStream | null> {
  const locale = deps.locale ?? "en";
  const media = globalThis.navigator?.mediaDevices;
  if (!media?.getUserMedia) {
    announceStatus(app.regions, chromeText("camera_unavailable", locale));
    return null;
  }
  try {
    const stream = await media.getUserMedia({ video: true, audio: false });
    app.preview.srcObject = stream;
    await app.preview.play().catch(() => undefined);
    return stream;
  } catch {
    const text = chromeText("camera_denied", locale);
    announceStatus(app.regions, text);
    if (!app.isMuted()) deps.speaker.speak(text);
    return null;
  }
}
