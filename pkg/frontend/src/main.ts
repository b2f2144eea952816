import { ApiClient } from "./api";
import { edgeForKey } from "./keys";
import { initialState, pressDirection, toggleMode, type NavigatorState } from "./state";
import type { ColorsResponse, GridTag, WindowResponse } from "./types";
import { buildViewModel, drawView, tileAt, type ViewModel } from "./view";

const canvas = document.getElementById("disk") as HTMLCanvasElement;
const banner = document.getElementById("banner") as HTMLDivElement;
const hover = document.getElementById("hover") as HTMLDivElement;
const trailBox = document.getElementById("trail") as HTMLDivElement;

const api = new ApiClient(window.location.origin);

let state: NavigatorState = initialState(pickGrid(), 2);
let currentWindow: WindowResponse | null = null;
let currentView: ViewModel | null = null;

// at most one window request in flight; stale responses are discarded
let requestSequence = 0;

function pickGrid(): GridTag {
  const params = new URLSearchParams(window.location.search);
  return params.get("grid") === "p5" ? "p5" : "h7";
}

function showBanner(message: string): void {
  banner.textContent = message;
  banner.style.display = "block";
  setTimeout(() => {
    banner.style.display = "none";
  }, 4000);
}

async function loadWindow(): Promise<void> {
  const seq = ++requestSequence;
  try {
    const win = await api.window(state.grid, state.center, state.radius);
    let colors: ColorsResponse | null = null;
    if (state.mode === "chooser") {
      colors = await api.colors(state.center, state.radius);
    }
    if (seq !== requestSequence) {
      return; // a newer request superseded this one
    }
    currentWindow = win;
    currentView = buildViewModel(state, win, colors);
    drawView(canvas, currentView);
    trailBox.textContent = `${state.trail.length - 1} steps from origin (${state.center})`;
  } catch (error) {
    // keep the previous view; just surface the problem
    showBanner(String(error));
  }
}

window.addEventListener("keydown", (event) => {
  if (event.key === "c") {
    state = toggleMode(state);
    void loadWindow();
    return;
  }
  if (currentWindow === null) {
    return;
  }
  const edge = edgeForKey(event.key, currentWindow.edge_count, currentWindow);
  if (edge !== null) {
    try {
      state = pressDirection(state, currentWindow, edge);
      void loadWindow();
    } catch (error) {
      showBanner(String(error));
    }
  }
});

canvas.addEventListener("mousemove", (event) => {
  if (!currentView) {
    return;
  }
  const rect = canvas.getBoundingClientRect();
  const size = Math.min(canvas.width, canvas.height);
  const scale = size / 2.2;
  const x = (event.clientX - rect.left - canvas.width / 2) / scale;
  const y = -(event.clientY - rect.top - canvas.height / 2) / scale;
  const tile = tileAt(currentView, x, y);
  hover.textContent = tile ? tile.address : "";
});

void loadWindow();
