import { defineConfig } from "vitest/config";

export default defineConfig({
  build: {
    target: "es2020",
  },
  server: {
    proxy: {
      "/api": "http://127.0.0.1:8000",
    },
  },
  test: {
    globals: true,
    environment: "jsdom",
    testTimeout: 60000,
    hookTimeout: 120000,
  },
});
