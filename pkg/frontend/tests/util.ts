import { fileURLToPath } from "node:url"

import { PointerMessage } from "../src/protocol"

export const repoRoot = fileURLToPath(new URL("../..", import.meta.url))

// pointer subset of an event script; asserts and snapshots stay engine-side
export function pointerMessagesFrom(script: string): PointerMessage[] {
  const out: PointerMessage[] = []
  for (const raw of script.split("\n")) {
    const line = raw.trim()
    if (line === "" || line.startsWith("#")) continue
    const parts = line.split(/\s+/)
    const kind = parts[0]
    if (kind === "down" || kind === "up") {
      out.push({
        op: "pointer",
        kind,
        x: Number(parts[1]),
        y: Number(parts[2]),
        button: parts[3] === "R" ? "R" : "L",
      })
    } else if (kind === "move" || kind === "dblclick") {
      out.push({ op: "pointer", kind, x: Number(parts[1]), y: Number(parts[2]) })
    }
  }
  return out
}
