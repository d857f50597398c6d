/**
 * Capture-side luminance sampling helpers. The UI downsamples the video
 * to a small RGB frame; classification happens inside the core module.
 */

export const LUMA_WIDTH = 64;
export const LUMA_HEIGHT = 48;

/** Strip the alpha channel from canvas RGBA data into packed RGB bytes. */
export function rgbaToRgb(rgba: Uint8ClampedArray | Uint8Array, pixelCount: number): Uint8Array {
  if (rgba.length < pixelCount * 4) {
    throw new Error(`need ${pixelCount * 4} RGBA bytes, got ${rgba.length}`);
  }
  const rgb = new Uint8Array(pixelCount * 3);
  for (let i = 0; i < pixelCount; i += 1) {
    rgb[i * 3] = rgba[i * 4];
    rgb[i * 3 + 1] = rgba[i * 4 + 1];
    rgb[i * 3 + 2] = rgba[i * 4 + 2];
  }
  return rgb;
}

/**
 * Draw the current video frame onto a small canvas and return packed RGB
 * bytes, or null when the capture surface is not ready.
 */
export function sampleVideoLuma(
  video: HTMLVideoElement,
  canvas: HTMLCanvasElement,
): Uint8Array | null {
  if (video.readyState < 2 || video.videoWidth === 0) return null;
  canvas.width = LUMA_WIDTH;
  canvas.height = LUMA_HEIGHT;
  const ctx = canvas.getContext("2d", { willReadFrequently: true });
  if (!ctx) return null;
  ctx.drawImage(video, 0, 0, LUMA_WIDTH, LUMA_HEIGHT);
  const data = ctx.getImageData(0, 0, LUMA_WIDTH, LUMA_HEIGHT);
  return rgbaToRgb(data.data, LUMA_WIDTH * LUMA_HEIGHT);
}
