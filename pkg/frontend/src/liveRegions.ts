/**
 * Screen-reader live regions. Assertive events interrupt, polite ones
 * queue; routing follows the severity the core module attached to each
 * event, the UI adds no judgment of its own.
 */

import type { GuidanceEvent } from "./engineModule";

export interface LiveRegions {
  assertive: HTMLElement;
  polite: HTMLElement;
}

export function createLiveRegions(doc: Document, host: HTMLElement): LiveRegions {
  const assertive = doc.createElement("div");
  assertive.id = "guidance-assertive";
  assertive.setAttribute("aria-live", "assertive");
  assertive.setAttribute("role", "alert");
  assertive.className = "sr-only";

  const polite = doc.createElement("div");
  polite.id = "guidance-polite";
  polite.setAttribute("aria-live", "polite");
  polite.setAttribute("role", "status");
  polite.className = "sr-only";

  host.appendChild(assertive);
  host.appendChild(polite);
  return { assertive, polite };
}

export function routeEvent(regions: LiveRegions, event: GuidanceEvent): void {
  const target = event.severity === "Assertive" ? regions.assertive : regions.polite;
  target.textContent = event.text;
}

/** Non-guidance status notes always go to the polite region. */
export function announceStatus(regions: LiveRegions, text: string): void {
  regions.polite.textContent = text;
}
