import { defineConfig } from "vite";

// dev-server proxy to a local `rrto serve` instance
export default defineConfig({
  server: {
    proxy: {
      "/v1": "http://127.0.0.1:8765",
    },
  },
});
