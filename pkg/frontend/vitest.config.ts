import { defineConfig } from "vitest/config";

export default defineConfig({
  test: {
    globalSetup: ["./test/service_harness.ts"],
    testTimeout: 60_000,
    hookTimeout: 60_000,
  },
});
