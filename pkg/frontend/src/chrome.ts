/**
 * UI-chrome string catalog. Guidance text comes from the core module's
 * message catalog; everything else a user can read or hear originates
 * here, never from inline literals in component code.
 */

export const CHROME: Record<string, Record<string, string>> = {
  en: {
    title: "Camera alignment assistant",
    intro:
      "Audio guidance helps you center your face in the camera. " +
      "The picture is a mirrored self-view for sighted helpers.",
    waiting_camera: "Waiting for camera",
    camera_denied: "Camera access was denied. Guidance cannot run without the camera.",
    camera_unavailable: "No camera is available in this browser.",
    speech_unavailable: "Speech output is unavailable here; guidance appears as text updates.",
    mute_label: "Mute guidance audio",
    muted_status: "Audio muted",
    unmuted_status: "Audio on",
  },
};

const DEFAULT_LOCALE = "en";

export function chromeText(key: string, locale: string = DEFAULT_LOCALE): string {
  const table = CHROME[locale] ?? CHROME[DEFAULT_LOCALE];
  const text = table[key] ?? CHROME[DEFAULT_LOCALE][key];
  if (text === undefined) throw new Error(`unknown chrome key ${key}`);
  return text;
}
