// Spawns the navigation service for the duration of the test run.
import { spawn, type ChildProcess } from "node:child_process";
import path from "node:path";
import { fileURLToPath } from "node:url";

export const PORT = 8793;
export const BASE_URL = `http://127.0.0.1:${PORT}`;

let child: ChildProcess | null = null;

export async function setup(): Promise<void> {
  const here = path.dirname(fileURLToPath(import.meta.url));
  const repoRoot = path.resolve(here, "..", "..");
  child = spawn("python3", ["-m", "hypernav", "serve", "--port", String(PORT)], {
    cwd: repoRoot,
    env: { ...process.env, PYTHONPATH: path.join(repoRoot, "src") },
    stdio: "ignore",
  });
  const deadline = Date.now() + 30_000;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${BASE_URL}/api/v1/neighbors?address=P5:C`);
      if (response.ok) {
        return;
      }
    } catch {
      // not up yet
    }
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
  throw new Error("navigation service did not come up within 30 s");
}

export async function teardown(): Promise<void> {
  if (child) {
    child.kill("SIGTERM");
    child = null;
  }
}
