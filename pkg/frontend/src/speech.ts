/** Speech synthesis wrapper; falls back to a no-op where unsupported. */

export interface Speaker {
  available: boolean;
  speak(text: string): void;
}

export function systemSpeaker(win: Window | undefined = globalThis.window): Speaker {
  const synth = win && "speechSynthesis" in win ? win.speechSynthesis : null;
  if (!synth || typeof SpeechSynthesisUtterance === "undefined") {
    return { available: false, speak: () => undefined };
  }
  return {
    available: true,
    speak(text: string) {
      synth.speak(new SpeechSynthesisUtterance(text));
    },
  };
}

/** Test double that records what would have been spoken. */
export function recordingSpeaker(): Speaker & { spoken: string[] } {
  const spoken: string[] = [];
  return {
    available: true,
    spoken,
    speak(text: string) {
      spoken.push(text);
    },
  };
}
